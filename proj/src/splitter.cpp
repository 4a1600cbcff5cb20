#include "steiner/splitter.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace steiner {

const char* const kConnVertexNames[kConnVertices] = {"A", "B", "D", "U", "V", "E", "F"};

namespace {

const std::array<std::pair<int, int>, kMaxEdges> kEdgeEnds = {{
    {pA, pX}, {pX, pB}, {pX, pY}, {pY, pZ}, {pY, pD}, {pZ, pR}, {pZ, pQ}, {pD, pU}, {pD, pV},
}};

const char* const kEdgeNames[kMaxEdges] = {"AX", "XB", "XY", "YZ", "YD", "ZR", "ZQ", "DU", "DV"};

// Path-query tree over frame points plus the pseudo-nodes E (beyond R)
// and F (beyond Q).
constexpr int nE = 10, nF = 11, kPathNodes = 12;

// child-side node of each edge, rooted at A
constexpr int kEdgeChild[kMaxEdges] = {pX, pB, pY, pZ, pD, pR, pQ, pU, pV};

constexpr int kParent[kPathNodes] = {-1, pA, pX, pX, pY, pY, pZ, pZ, pD, pD, pR, pQ};

bool in_subtree(int node, int root) {
    while (node != -1) {
        if (node == root) return true;
        node = kParent[node];
    }
    return false;
}

int conn_available_mask(CaseId c, LemmaSet lemmas) {
    const CaseInfo& ci = case_info(c);
    int m;
    if (ci.d_steiner)
        m = (1 << cvA) | (1 << cvB) | (1 << cvU) | (1 << cvV);
    else
        m = (1 << cvA) | (1 << cvB) | (1 << cvD);
    const bool e_avail = lemmas.has(1) || lemmas.has(2) || lemmas.has(3) ||
                         lemmas.has(6) || lemmas.has(9);
    if (e_avail) m |= 1 << cvE;
    if (ci.f_is_dim && lemmas.has(1)) m |= 1 << cvF;
    return m;
}

// Connector edges that carry a certified bound. Explicit pairs always
// qualify; E reaches A always and D via the step-6 companion bound;
// F reaches D (or U when D is a Steiner point).
bool conn_edge_allowed(int a, int b, CaseId c, LemmaSet lemmas) {
    const CaseInfo& ci = case_info(c);
    if (b < cvE) return true;
    if (b == cvE && a == cvA) return true;
    if (b == cvE && a == cvD) return lemmas.has(6) && !ci.d_steiner;
    if (b == cvF && a == cvD) return !ci.d_steiner;
    if (b == cvF && a == cvU) return ci.d_steiner;
    return false;
}

struct SplitKey {
    std::uint16_t s_minus;
    SPlus s_plus;
    std::vector<ConnEdge> t_star;
    auto tie() const {
        return std::make_tuple(s_minus, s_plus.kind, s_plus.pts[0], s_plus.pts[1],
                               s_plus.pts[2], s_plus.lemma_step,
                               std::ref(t_star));
    }
    bool operator<(const SplitKey& o) const {
        if (s_minus != o.s_minus) return s_minus < o.s_minus;
        if (s_plus.kind != o.s_plus.kind) return s_plus.kind < o.s_plus.kind;
        if (s_plus.pts != o.s_plus.pts) return s_plus.pts < o.s_plus.pts;
        if (s_plus.lemma_step != o.s_plus.lemma_step)
            return s_plus.lemma_step < o.s_plus.lemma_step;
        return std::lexicographical_compare(
            t_star.begin(), t_star.end(), o.t_star.begin(), o.t_star.end(),
            [](const ConnEdge& x, const ConnEdge& y) {
                return std::tie(x.a, x.b) < std::tie(y.a, y.b);
            });
    }
};

// Valid connector sets for one V*: subsets of allowed pairs, |V*|
// edges, contracting to a spanning tree on V* + {Omega}.
std::vector<std::vector<ConnEdge>> valid_connectors(int v_star_mask, CaseId c,
                                                    LemmaSet lemmas) {
    const int avail = conn_available_mask(c, lemmas);
    std::vector<ConnEdge> pairs;
    for (int a = 0; a < kConnVertices; ++a) {
        if (!(avail >> a & 1)) continue;
        for (int b = a + 1; b < kConnVertices; ++b) {
            if (!(avail >> b & 1)) continue;
            if (!conn_edge_allowed(a, b, c, lemmas)) continue;
            pairs.push_back({static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)});
        }
    }
    const int need = std::popcount(static_cast<unsigned>(v_star_mask));
    std::vector<std::vector<ConnEdge>> out;
    std::vector<int> idx(static_cast<std::size_t>(need));

    auto contraction_is_tree = [&](const std::vector<ConnEdge>& tstar) {
        // nodes: conn vertices in V*, plus Omega (index kConnVertices)
        std::array<int, kConnVertices + 1> parent{};
        for (int i = 0; i <= kConnVertices; ++i) parent[static_cast<std::size_t>(i)] = i;
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x)
                x = parent[static_cast<std::size_t>(x)] =
                    parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            return x;
        };
        for (const ConnEdge& e : tstar) {
            const int a = (v_star_mask >> e.a & 1) ? e.a : kConnVertices;
            const int b = (v_star_mask >> e.b & 1) ? e.b : kConnVertices;
            if (a == b) return false;  // self-loop or parallel collapse
            const int ra = find(a), rb = find(b);
            if (ra == rb) return false;  // cycle (covers parallel edges)
            parent[static_cast<std::size_t>(ra)] = rb;
        }
        // |V*| acyclic edges on |V*|+1 nodes form a spanning tree.
        return true;
    };

    const int np = static_cast<int>(pairs.size());
    // lexicographic combinations of `need` pairs
    std::vector<int> comb(static_cast<std::size_t>(need));
    for (int i = 0; i < need; ++i) comb[static_cast<std::size_t>(i)] = i;
    if (need > np) return out;
    while (true) {
        std::vector<ConnEdge> cand;
        cand.reserve(static_cast<std::size_t>(need));
        for (int i : comb) cand.push_back(pairs[static_cast<std::size_t>(i)]);
        if (contraction_is_tree(cand)) out.push_back(std::move(cand));
        int i = need - 1;
        while (i >= 0 && comb[static_cast<std::size_t>(i)] == np - need + i) --i;
        if (i < 0) break;
        ++comb[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < need; ++j)
            comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

struct FourPointEntry {
    int step;
    std::array<int, 4> quad;  // frame ids in catalogue order
};

std::vector<FourPointEntry> fourpoint_entries(CaseId c, LemmaSet lemmas) {
    std::vector<FourPointEntry> out;
    const CaseInfo& ci = case_info(c);
    if (ci.f_is_dim) return out;  // excluded in cases 1/3
    for (int step : {4, 5, 7, 8}) {
        if (!lemmas.has(step)) continue;
        FourPointEntry fe;
        fe.step = step;
        int q[4];
        detail::fourpoint_quad(step, q);
        fe.quad = {q[0], q[1], q[2], q[3]};
        out.push_back(fe);
    }
    return out;
}

}  // namespace

LemmaSet LemmaSet::through(int k) {
    if (k < 0 || k > 9) throw std::domain_error("catalogue steps run 1..9");
    LemmaSet s;
    for (int i = 1; i <= k; ++i) s.bits = static_cast<std::uint16_t>(s.bits | (1u << i));
    return s;
}

std::string LemmaSet::to_string() const {
    std::string out;
    for (int i = 1; i <= 9; ++i) {
        if (!has(i)) continue;
        if (!out.empty()) out += ',';
        out += static_cast<char>('0' + i);
    }
    return out.empty() ? "none" : out;
}

TopologyGraph build_graph(CaseId c) {
    const CaseInfo& ci = case_info(c);
    TopologyGraph g;
    g.case_id = c;
    g.n_edges = ci.d_steiner ? 9 : 7;
    g.v_exp = ci.d_steiner ? std::vector<int>{pA, pB, pU, pV} : std::vector<int>{pA, pB, pD};
    g.boundary = {pR, pQ};
    g.w_set = g.v_exp;
    g.w_set.insert(g.w_set.end(), g.boundary.begin(), g.boundary.end());
    g.ends = kEdgeEnds;
    return g;
}

int edge_dim(CaseId c, TopoEdge e) {
    const CaseInfo& ci = case_info(c);
    switch (e) {
        case eAX: return -1;
        case eXB: return ci.ib;
        case eXY: return ci.is;
        case eYZ: return ci.ic;
        case eYD: return ci.idd;
        case eZR: return ci.ie;
        case eZQ: return ci.f_is_dim ? ci.iff : ci.idd;
        case eDU: return ci.iu;
        case eDV: return ci.iv;
        default: throw std::domain_error("bad edge");
    }
}

bool Split::uses_e() const {
    for (const ConnEdge& e : t_star)
        if (e.b == cvE) return true;
    return false;
}

bool Split::uses_f() const {
    for (const ConnEdge& e : t_star)
        if (e.b == cvF) return true;
    return false;
}

bool Split::uses_de_edge() const {
    for (const ConnEdge& e : t_star)
        if (e.a == cvD && e.b == cvE) return true;
    return false;
}

std::string Split::label(CaseId) const {
    std::ostringstream os;
    os << "V*{";
    for (int i = 0; i < kConnVertices; ++i)
        if (v_star >> i & 1) os << kConnVertexNames[i];
    os << "} S-{";
    bool first = true;
    for (int e = 0; e < kMaxEdges; ++e)
        if (s_minus >> e & 1) {
            if (!first) os << ',';
            os << kEdgeNames[e];
            first = false;
        }
    os << "} S+";
    switch (s_plus.kind) {
        case SPlus::None: os << "{}"; break;
        case SPlus::Edge:
            os << '{' << kFramePointNames[s_plus.pts[0]] << kFramePointNames[s_plus.pts[1]] << '}';
            break;
        case SPlus::Tri:
            os << '{' << kFramePointNames[s_plus.pts[0]] << kFramePointNames[s_plus.pts[1]]
               << kFramePointNames[s_plus.pts[2]] << '}';
            break;
        case SPlus::FourPoint: os << "{4pt#" << int(s_plus.lemma_step) << '}'; break;
    }
    os << " t*{";
    first = true;
    for (const ConnEdge& e : t_star) {
        if (!first) os << ',';
        os << kConnVertexNames[e.a] << kConnVertexNames[e.b];
        first = false;
    }
    os << '}';
    return os.str();
}

namespace detail {

int conn_frame_point(int cv) {
    switch (cv) {
        case cvA: return pA;
        case cvB: return pB;
        case cvD: return pD;
        case cvU: return pU;
        case cvV: return pV;
        default: throw std::domain_error("implicit vertex has no frame point");
    }
}

bool edge_on_path(int node_a, int node_b, TopoEdge e) {
    const int child = kEdgeChild[e];
    return in_subtree(node_a, child) != in_subtree(node_b, child);
}

TrapChoice trap_choice_all(CaseId, LemmaSet lemmas) {
    TrapChoice tc;
    auto add = [&](TrapStep st) { tc.e_steps[static_cast<std::size_t>(tc.n_e++)] = st; };
    if (lemmas.has(1)) add(TrapStep::BaselineA);
    if (lemmas.has(2)) add(TrapStep::Step2);
    if (lemmas.has(3)) add(TrapStep::Step3);
    if (lemmas.has(6)) add(TrapStep::Step6);
    if (lemmas.has(9)) add(TrapStep::Step9);
    tc.f_enabled = lemmas.has(1);
    return tc;
}

ImplicitKind conn_implicit_kind(const ConnEdge& e, CaseId) {
    if (e.b == cvE) return e.a == cvA ? ImplicitKind::AE : ImplicitKind::DE;
    return e.a == cvU ? ImplicitKind::UF : ImplicitKind::DF;
}

}  // namespace detail

std::shared_ptr<const std::vector<Split>> enumerate_splits(CaseId c, LemmaSet lemmas) {
    static std::mutex mu;
    static std::map<std::pair<int, std::uint16_t>, std::shared_ptr<const std::vector<Split>>>
        cache;
    const auto key = std::make_pair(static_cast<int>(c), lemmas.bits);
    {
        std::scoped_lock lk(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }

    const TopologyGraph g = build_graph(c);
    const auto fps = fourpoint_entries(c, lemmas);

    // conn-vertex id of each explicit terminal
    auto conn_of_frame = [](int fp) {
        switch (fp) {
            case pA: return cvA;
            case pB: return cvB;
            case pD: return cvD;
            case pU: return cvU;
            case pV: return cvV;
            default: throw std::domain_error("not a terminal");
        }
    };

    auto result = std::make_shared<std::vector<Split>>();
    std::set<SplitKey> seen;

    const int n_exp = static_cast<int>(g.v_exp.size());
    // connector sets per V*-mask, computed once
    std::map<int, std::vector<std::vector<ConnEdge>>> connectors;

    for (int vs = 1; vs < (1 << n_exp); ++vs) {
        int v_star_conn = 0;
        std::uint16_t incident = 0;
        for (int i = 0; i < n_exp; ++i) {
            if (!(vs >> i & 1)) continue;
            const int fp = g.v_exp[static_cast<std::size_t>(i)];
            v_star_conn |= 1 << conn_of_frame(fp);
            for (int e = 0; e < g.n_edges; ++e)
                if (g.ends[static_cast<std::size_t>(e)].first == fp ||
                    g.ends[static_cast<std::size_t>(e)].second == fp)
                    incident = static_cast<std::uint16_t>(incident | (1u << e));
        }
        auto cit = connectors.find(v_star_conn);
        if (cit == connectors.end())
            cit = connectors.emplace(v_star_conn, valid_connectors(v_star_conn, c, lemmas)).first;
        if (cit->second.empty()) continue;

        std::vector<int> free_edges;
        for (int e = 0; e < g.n_edges; ++e)
            if (!(incident >> e & 1)) free_edges.push_back(e);
        const int nf = static_cast<int>(free_edges.size());

        for (int extra = 0; extra < (1 << nf); ++extra) {
            std::uint16_t s_minus = incident;
            for (int i = 0; i < nf; ++i)
                if (extra >> i & 1)
                    s_minus = static_cast<std::uint16_t>(
                        s_minus | (1u << free_edges[static_cast<std::size_t>(i)]));

            // components of G - S^- containing a boundary-set vertex outside V*
            std::array<int, kFramePoints> comp{};
            comp.fill(-1);
            const int npts = case_info(c).d_steiner ? kFramePoints : pU;
            int ncomp = 0;
            for (int start = 0; start < npts; ++start) {
                if (comp[static_cast<std::size_t>(start)] != -1) continue;
                std::vector<int> stack{start};
                comp[static_cast<std::size_t>(start)] = ncomp;
                while (!stack.empty()) {
                    const int x = stack.back();
                    stack.pop_back();
                    for (int e = 0; e < g.n_edges; ++e) {
                        if (s_minus >> e & 1) continue;
                        const auto [ea, eb] = g.ends[static_cast<std::size_t>(e)];
                        const int y = ea == x ? eb : (eb == x ? ea : -1);
                        if (y < 0 || comp[static_cast<std::size_t>(y)] != -1) continue;
                        comp[static_cast<std::size_t>(y)] = ncomp;
                        stack.push_back(y);
                    }
                }
                ++ncomp;
            }
            std::vector<std::vector<int>> groups;  // vertex lists of W-touched components
            {
                std::vector<int> touched(static_cast<std::size_t>(ncomp), 0);
                // mark components containing a W \ V* vertex
                for (int wfp : g.w_set) {
                    bool in_vstar = false;
                    if (wfp != pR && wfp != pQ)
                        in_vstar = (v_star_conn >> conn_of_frame(wfp)) & 1;
                    if (!in_vstar) touched[static_cast<std::size_t>(comp[static_cast<std::size_t>(wfp)])] = 1;
                }
                std::vector<int> order;
                for (int ci2 = 0; ci2 < ncomp; ++ci2)
                    if (touched[static_cast<std::size_t>(ci2)]) order.push_back(ci2);
                for (int cid : order) {
                    std::vector<int> verts;
                    for (int p = 0; p < npts; ++p)
                        if (comp[static_cast<std::size_t>(p)] == cid) verts.push_back(p);
                    groups.push_back(std::move(verts));
                }
            }
            const int k = static_cast<int>(groups.size());
            if (k > 4) continue;

            std::vector<SPlus> spluses;
            if (k <= 1) {
                spluses.push_back(SPlus{});
            } else if (k <= 3) {
                std::array<std::size_t, 3> pick{};
                while (true) {
                    SPlus sp;
                    sp.kind = k == 2 ? SPlus::Edge : SPlus::Tri;
                    std::array<std::uint8_t, 3> pts{};
                    for (int i = 0; i < k; ++i)
                        pts[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(
                            groups[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]]);
                    std::sort(pts.begin(), pts.begin() + k);
                    sp.pts = pts;
                    spluses.push_back(sp);
                    int i = k - 1;
                    while (i >= 0 &&
                           ++pick[static_cast<std::size_t>(i)] >=
                               groups[static_cast<std::size_t>(i)].size()) {
                        pick[static_cast<std::size_t>(i)] = 0;
                        --i;
                    }
                    if (i < 0) break;
                }
            } else {
                // four components: only registered 4-point reconnections
                for (const FourPointEntry& fe : fps) {
                    std::array<int, 4> cids{};
                    bool ok = true;
                    for (int i = 0; i < 4 && ok; ++i) {
                        const int fp = fe.quad[static_cast<std::size_t>(i)];
                        cids[static_cast<std::size_t>(i)] = comp[static_cast<std::size_t>(fp)];
                        // each lemma terminal must be in its own reconnected component
                    }
                    std::array<int, 4> sorted = cids;
                    std::sort(sorted.begin(), sorted.end());
                    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                        ok = false;
                    if (ok) {
                        // the four terminal components must be exactly the touched ones
                        std::set<int> touched_ids;
                        for (const auto& grp : groups)
                            touched_ids.insert(comp[static_cast<std::size_t>(grp[0])]);
                        for (int cid : cids)
                            if (!touched_ids.count(cid)) ok = false;
                    }
                    if (!ok) continue;
                    SPlus sp;
                    sp.kind = SPlus::FourPoint;
                    sp.lemma_step = static_cast<std::uint8_t>(fe.step);
                    spluses.push_back(sp);
                }
            }
            if (spluses.empty()) continue;

            for (const SPlus& sp : spluses) {
                for (const auto& tstar : cit->second) {
                    SplitKey keyv{s_minus, sp, tstar};
                    if (!seen.insert(std::move(keyv)).second) continue;
                    Split out;
                    out.v_star = static_cast<std::uint16_t>(v_star_conn);
                    out.s_minus = s_minus;
                    out.s_plus = sp;
                    out.t_star = tstar;
                    result->push_back(std::move(out));
                }
            }
        }
    }

    std::scoped_lock lk(mu);
    auto [it, inserted] = cache.emplace(key, result);
    return it->second;
}

double implicit_edge_length(ImplicitKind kind, CaseId c, const ParamVector& w,
                            LemmaSet lemmas) {
    const CaseInfo& ci = case_info(c);
    if ((kind == ImplicitKind::UF) != ci.d_steiner)
        throw std::domain_error(kind == ImplicitKind::UF
                                    ? "UF connector needs a Steiner D"
                                    : "DF connector needs a regular D");
    const detail::TrapChoice tc = detail::trap_choice_all(c, lemmas);
    const Frame<double> fr = build_frame(ci, w.v.data());
    return detail::implicit_bound(kind, ci, fr, w.v.data(), tc, 0.0);
}

double splitting_value(const Split& split, CaseId c, const ParamVector& w, double rho,
                       LemmaSet lemmas) {
    const CaseInfo& ci = case_info(c);
    const detail::TrapChoice tc = detail::trap_choice_all(c, lemmas);
    const Frame<double> fr = build_frame(ci, w.v.data());
    return detail::eval_split_value(split, ci, fr, w.v.data(), rho, tc, 0.0);
}

bool monotone_ok(const Split& split, CaseId c, const std::string& dim) {
    const CaseInfo& ci = case_info(c);
    TopoEdge ed;
    if (dim == "b") ed = eXB;
    else if (dim == "s") ed = eXY;
    else if (dim == "c") ed = eYZ;
    else if (dim == "d") ed = eYD;
    else if (dim == "e") ed = eZR;
    else if (dim == "f") ed = eZQ;
    else if (dim == "u") ed = eDU;
    else if (dim == "v") ed = eDV;
    else throw std::domain_error("unknown dimension: " + dim);
    if ((ed == eDU || ed == eDV) && !ci.d_steiner)
        throw std::domain_error("dimension not present in this case: " + dim);

    if (split.s_plus.kind == SPlus::FourPoint && dim != "f") return false;
    if (split.uses_e() && (dim == "s" || dim == "c" || dim == "e")) return false;
    if (split.uses_f() && (dim == "d" || dim == "c" || dim == "f" || dim == "u")) return false;

    const int delta_minus = split.s_minus >> ed & 1;

    auto conn_node = [](int cv) {
        switch (cv) {
            case cvE: return nE;
            case cvF: return nF;
            default: return detail::conn_frame_point(cv);
        }
    };
    int n_conn = 0;
    for (const ConnEdge& te : split.t_star)
        n_conn += detail::edge_on_path(conn_node(te.a), conn_node(te.b), ed) ? 1 : 0;

    int delta_plus = 0;
    const SPlus& sp = split.s_plus;
    std::array<int, 4> pts{};
    int npts = 0;
    if (sp.kind == SPlus::Edge) {
        pts = {sp.pts[0], sp.pts[1], 0, 0};
        npts = 2;
    } else if (sp.kind == SPlus::Tri) {
        pts = {sp.pts[0], sp.pts[1], sp.pts[2], 0};
        npts = 3;
    } else if (sp.kind == SPlus::FourPoint) {
        int q[4];
        detail::fourpoint_quad(sp.lemma_step, q);
        pts = {q[0], q[1], q[2], q[3]};
        npts = 4;
    }
    for (int i = 0; i < npts && !delta_plus; ++i)
        for (int j = i + 1; j < npts && !delta_plus; ++j)
            if (detail::edge_on_path(pts[static_cast<std::size_t>(i)],
                                     pts[static_cast<std::size_t>(j)], ed))
                delta_plus = 1;

    if (delta_minus + n_conn + delta_plus == 0) return true;
    return n_conn + delta_plus <= 1 && delta_minus == 1;
}

std::uint64_t split_list_hash(const std::vector<Split>& splits) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    for (const Split& s : splits) {
        mix(s.v_star);
        mix(s.s_minus);
        mix(static_cast<std::uint64_t>(s.s_plus.kind));
        mix(s.s_plus.pts[0]);
        mix(s.s_plus.pts[1]);
        mix(s.s_plus.pts[2]);
        mix(s.s_plus.lemma_step);
        for (const ConnEdge& e : s.t_star) mix(static_cast<std::uint64_t>(e.a) << 8 | e.b);
    }
    return h;
}

}  // namespace steiner
