#include "steiner/config_space.hpp"

#include <cmath>
#include <stdexcept>

namespace steiner {

namespace {

// Dimension orders follow the case definitions: the five shared edge
// lengths, then f when it is free, then the two D-branches when D is a
// Steiner point.
const CaseInfo kCases[4] = {
    // id, ndims, names, ib, is, ic, idd, ie, iff, iu, iv, d_steiner, f_is_dim
    {CaseId::Case1, 6, {"b", "s", "c", "d", "e", "f", nullptr, nullptr},
     0, 1, 2, 3, 4, 5, -1, -1, false, true},
    {CaseId::Case2, 5, {"b", "s", "c", "d", "e", nullptr, nullptr, nullptr},
     0, 1, 2, 3, 4, -1, -1, -1, false, false},
    {CaseId::Case3, 8, {"b", "s", "c", "d", "e", "f", "u", "v"},
     0, 1, 2, 3, 4, 5, 6, 7, true, true},
    {CaseId::Case4, 7, {"b", "s", "c", "d", "e", "u", "v", nullptr},
     0, 1, 2, 3, 4, -1, 5, 6, true, false},
};

}  // namespace

const char* const kFramePointNames[kFramePoints] = {"A", "X", "B", "Y", "Z",
                                                    "D", "R", "Q", "U", "V"};

CaseId case_from_int(int v) {
    if (v < 1 || v > 4) throw std::domain_error("case id must be 1..4");
    return static_cast<CaseId>(v);
}

const CaseInfo& case_info(CaseId c) {
    return kCases[static_cast<int>(c) - 1];
}

std::vector<std::string> case_dims(CaseId c) {
    const CaseInfo& ci = case_info(c);
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(ci.ndims));
    for (int i = 0; i < ci.ndims; ++i) out.emplace_back(ci.names[static_cast<std::size_t>(i)]);
    return out;
}

double ParamVector::named(const std::string& name) const {
    const CaseInfo& ci = case_info(case_id);
    for (int i = 0; i < ci.ndims; ++i)
        if (name == ci.names[static_cast<std::size_t>(i)]) return v[static_cast<std::size_t>(i)];
    throw std::domain_error("unknown parameter name: " + name);
}

std::map<std::string, Point> coordinates(CaseId c, const ParamVector& w) {
    const CaseInfo& ci = case_info(c);
    for (int i = 0; i < ci.ndims; ++i) {
        const double x = w[i];
        if (!(x >= 0.0) || !std::isfinite(x))
            throw std::domain_error("parameter out of domain: " +
                                    std::string(ci.names[static_cast<std::size_t>(i)]));
    }
    if (ci.f_is_dim && w[ci.iff] > w[ci.idd])
        throw std::domain_error("domain violation: f > d");

    const Frame<double> fr = build_frame(ci, w.v.data());
    std::map<std::string, Point> out;
    const int npts = ci.d_steiner ? kFramePoints : pU;
    for (int i = 0; i < npts; ++i) out[kFramePointNames[i]] = fr[i];
    return out;
}

std::vector<HyperRect> initial_orthants(CaseId c) {
    const CaseInfo& ci = case_info(c);
    const int n = ci.ndims;
    std::vector<HyperRect> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        HyperRect h;
        h.n = n;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) {
                h.lo[static_cast<std::size_t>(i)] = 1.0;
                h.hi[static_cast<std::size_t>(i)] = kInf;
            } else {
                h.lo[static_cast<std::size_t>(i)] = 0.0;
                h.hi[static_cast<std::size_t>(i)] = 1.0;
            }
        }
        out.push_back(h);
    }
    return out;
}

bool domain_intersects(CaseId c, const HyperRect& h) {
    const CaseInfo& ci = case_info(c);
    if (!ci.f_is_dim) return true;
    return h.lo[static_cast<std::size_t>(ci.iff)] <= h.hi[static_cast<std::size_t>(ci.idd)];
}

int vertex_count(const HyperRect& h) {
    int k = 0;
    for (int i = 0; i < h.n; ++i) {
        const auto ii = static_cast<std::size_t>(i);
        if (!h.unbounded(i) && h.lo[ii] < h.hi[ii]) ++k;
    }
    return 1 << k;
}

void vertex_coords(const HyperRect& h, int k, double* out) {
    int bit = 0;
    for (int i = 0; i < h.n; ++i) {
        const auto ii = static_cast<std::size_t>(i);
        if (h.unbounded(i) || h.lo[ii] >= h.hi[ii]) {
            out[i] = h.lo[ii];
        } else {
            out[i] = (k >> bit & 1) ? h.hi[ii] : h.lo[ii];
            ++bit;
        }
    }
}

std::vector<ParamVector> vertices(CaseId c, const HyperRect& h) {
    std::vector<ParamVector> out;
    const int m = vertex_count(h);
    out.reserve(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        ParamVector w;
        w.case_id = c;
        vertex_coords(h, k, w.v.data());
        out.push_back(w);
    }
    return out;
}

std::pair<HyperRect, HyperRect> split_region(const HyperRect& h) {
    if (h.degenerate()) throw std::domain_error("split_region: degenerate box");
    int best = -1;
    double best_w = -1.0;
    for (int i = 0; i < h.n; ++i) {
        const auto ii = static_cast<std::size_t>(i);
        double wd;
        if (h.unbounded(i)) {
            wd = h.lo[ii] == 0.0 ? kInf : 1.0 / h.lo[ii];
        } else {
            wd = h.hi[ii] - h.lo[ii];
        }
        if (wd > best_w) {  // ties keep the smallest index
            best_w = wd;
            best = i;
        }
    }
    const auto bi = static_cast<std::size_t>(best);
    HyperRect a = h, b = h;
    if (h.unbounded(best)) {
        const double l = h.lo[bi];
        const double m = l == 0.0 ? 1.0 : 2.0 * l;
        a.hi[bi] = m;
        b.lo[bi] = m;
    } else {
        const double m = 0.5 * (h.lo[bi] + h.hi[bi]);
        a.hi[bi] = m;
        b.lo[bi] = m;
    }
    return {a, b};
}

}  // namespace steiner
