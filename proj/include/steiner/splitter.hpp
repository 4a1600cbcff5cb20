#ifndef STEINER_SPLITTER_HPP
#define STEINER_SPLITTER_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "steiner/lemmas.hpp"

namespace steiner {

// Edges of the local topology, each carrying one length parameter
// (AX is the unit edge).
enum TopoEdge : int { eAX = 0, eXB, eXY, eYZ, eYD, eZR, eZQ, eDU, eDV, kMaxEdges };

// Connector-graph vertices: explicit terminals plus the implicit
// points E (trapped on the chain from A) and F (trapped beyond Q).
enum ConnVertex : int { cvA = 0, cvB, cvD, cvU, cvV, cvE, cvF, kConnVertices };

extern const char* const kConnVertexNames[kConnVertices];

// Enabled catalogue steps, as a bitmask over steps 1..9. Step 1 is the
// baseline pair of trap bounds; 2/3/6/9 refine the A-side trap;
// 4/5/7/8 are the 4-point reconnection entries.
struct LemmaSet {
    std::uint16_t bits = 0;

    static LemmaSet none() { return {}; }
    static LemmaSet baseline() { return {1u << 1}; }
    static LemmaSet through(int k);
    static LemmaSet full() { return through(9); }

    bool has(int step) const { return (bits >> step) & 1u; }
    LemmaSet with(int step) const { return {static_cast<std::uint16_t>(bits | (1u << step))}; }
    bool operator==(const LemmaSet&) const = default;
    std::string to_string() const;
};

struct TopologyGraph {
    CaseId case_id;
    int n_edges;
    std::vector<int> v_exp;      // frame ids of explicit terminals
    std::vector<int> boundary;   // {R, Q}
    std::vector<int> w_set;      // v_exp + boundary
    std::array<std::pair<int, int>, kMaxEdges> ends;  // frame id endpoints per edge
};

TopologyGraph build_graph(CaseId c);

// Which dimension parameter an edge carries (-1 for the unit edge AX;
// eZQ maps to f, or to d where f is pinned).
int edge_dim(CaseId c, TopoEdge e);

struct SPlus {
    enum Kind : std::uint8_t { None = 0, Edge, Tri, FourPoint } kind = None;
    std::array<std::uint8_t, 3> pts{};  // frame ids (Edge uses 2, Tri 3)
    std::uint8_t lemma_step = 0;        // 4-point catalogue step

    bool operator==(const SPlus&) const = default;
};

struct ConnEdge {
    std::uint8_t a, b;  // ConnVertex ids, a < b
    bool operator==(const ConnEdge&) const = default;
};

struct Split {
    std::uint16_t v_star = 0;   // ConnVertex mask (explicit terminals only)
    std::uint16_t s_minus = 0;  // TopoEdge mask
    SPlus s_plus;
    std::vector<ConnEdge> t_star;

    bool uses_e() const;
    bool uses_f() const;
    bool uses_de_edge() const;  // t* contains the (D, E) connector
    std::string label(CaseId c) const;
};

// All admissible splits for the case under the given catalogue steps,
// deduplicated on (S-, S+, t*). Results are cached per (case, set)
// and shared; the pointer stays valid for the process lifetime.
std::shared_ptr<const std::vector<Split>> enumerate_splits(CaseId c, LemmaSet lemmas);

// Content hash of a split list (stable across runs).
std::uint64_t split_list_hash(const std::vector<Split>& splits);

// JSON export of a split list for audits.
std::string splits_to_json(CaseId c, const std::vector<Split>& splits);

enum class ImplicitKind { AE, DE, DF, UF };

// Certified upper bound for one implicit connector at w: the minimum
// over enabled catalogue bounds whose condition holds there, +inf if
// none does.
double implicit_edge_length(ImplicitKind kind, CaseId c, const ParamVector& w,
                            LemmaSet lemmas);

// rho * L_{t*} + L_{S+} - L_{S-}; +inf propagates from any failed
// implicit-edge or 4-point condition.
double splitting_value(const Split& split, CaseId c, const ParamVector& w, double rho,
                       LemmaSet lemmas);

// Alg-2 style monotonicity check: true when the splitting value is
// structurally non-increasing in the named dimension.
bool monotone_ok(const Split& split, CaseId c, const std::string& dim);

// ---- shared evaluation core ----

namespace detail {

// Per-implicit-point step selection. The certifier instantiates one
// verification function per selection; the reporting path passes every
// enabled step and takes the minimum.
struct TrapChoice {
    std::array<TrapStep, 5> e_steps{};
    int n_e = 0;
    bool f_enabled = false;
};

TrapChoice trap_choice_all(CaseId c, LemmaSet lemmas);

int conn_frame_point(int cv);
bool edge_on_path(int node_a, int node_b, TopoEdge e);  // nodes: frame ids, 10 = E, 11 = F

template <class T>
inline T scalar_inf() { return scalar_from<T>(kInf); }
template <>
inline Interval scalar_inf<Interval>() { return Interval(kInf, kInf); }

template <class T>
T implicit_bound(ImplicitKind kind, const CaseInfo& ci, const Frame<T>& fr, const T* w,
                 const TrapChoice& tc, double eps) {
    using std::min;
    switch (kind) {
        case ImplicitKind::AE: {
            T best = scalar_inf<T>();
            bool any = false;
            for (int i = 0; i < tc.n_e; ++i) {
                const TrapStep st = tc.e_steps[static_cast<std::size_t>(i)];
                if (!trap_in_region(st, ci, w, eps)) continue;
                const T b = trap_root_bound(st, ci, fr, w);
                best = any ? min(best, b) : b;
                any = true;
            }
            return any ? best : scalar_inf<T>();
        }
        case ImplicitKind::DE: {
            for (int i = 0; i < tc.n_e; ++i)
                if (tc.e_steps[static_cast<std::size_t>(i)] == TrapStep::Step6 &&
                    trap_in_region(TrapStep::Step6, ci, w, eps))
                    return trap_de_bound(ci, fr, w);
            return scalar_inf<T>();
        }
        case ImplicitKind::DF:
        case ImplicitKind::UF:
            if (tc.f_enabled && trap_in_region(TrapStep::BaselineF, ci, w, eps))
                return trap_root_bound(TrapStep::BaselineF, ci, fr, w);
            return scalar_inf<T>();
    }
    return scalar_inf<T>();
}

ImplicitKind conn_implicit_kind(const ConnEdge& e, CaseId c);

template <class T>
T eval_split_value(const Split& sp, const CaseInfo& ci, const Frame<T>& fr, const T* w,
                   double rho, const TrapChoice& tc, double eps) {
    const T zero = scalar_from<T>(0.0);

    T l_minus = zero;
    for (int e = 0; e < kMaxEdges; ++e) {
        if (!(sp.s_minus >> e & 1u)) continue;
        if (e == eAX) {
            l_minus = l_minus + scalar_from<T>(1.0);
        } else {
            const int d = edge_dim(ci.id, static_cast<TopoEdge>(e));
            l_minus = l_minus + w[d];
        }
    }

    T l_conn = zero;
    for (const ConnEdge& te : sp.t_star) {
        if (te.b >= cvE) {
            const T b = implicit_bound(conn_implicit_kind(te, ci.id), ci, fr, w, tc, eps);
            if (upper_estimate(b) == kInf) return scalar_inf<T>();
            l_conn = l_conn + b;
        } else {
            l_conn = l_conn + dist(fr[conn_frame_point(te.a)], fr[conn_frame_point(te.b)]);
        }
    }

    T l_plus = zero;
    switch (sp.s_plus.kind) {
        case SPlus::None:
            break;
        case SPlus::Edge:
            l_plus = dist(fr[sp.s_plus.pts[0]], fr[sp.s_plus.pts[1]]);
            break;
        case SPlus::Tri:
            l_plus = smt3_length(fr[sp.s_plus.pts[0]], fr[sp.s_plus.pts[1]],
                                 fr[sp.s_plus.pts[2]]);
            break;
        case SPlus::FourPoint:
            if (!fourpoint_in_region(sp.s_plus.lemma_step, ci, fr, w, eps))
                return scalar_inf<T>();
            l_plus = fourpoint_value(sp.s_plus.lemma_step, fr);
            break;
    }

    return scalar_from<T>(rho) * l_conn + l_plus - l_minus;
}

}  // namespace detail

}  // namespace steiner

#endif
