#ifndef STEINER_CONFIG_SPACE_HPP
#define STEINER_CONFIG_SPACE_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "steiner/geometry.hpp"

namespace steiner {

// The four sub-problems: the status of vertex D (regular vs Steiner)
// crossed with the regime of the branch length f (free in [0, d] vs
// pinned to its boundary value d).
enum class CaseId : int { Case1 = 1, Case2 = 2, Case3 = 3, Case4 = 4 };

CaseId case_from_int(int v);

inline constexpr int kMaxDims = 8;

struct CaseInfo {
    CaseId id;
    int ndims;
    std::array<const char*, kMaxDims> names;
    // dimension indices; -1 when the parameter is not a dimension
    int ib, is, ic, idd, ie, iff, iu, iv;
    bool d_steiner;   // D is a Steiner point with branches u, v
    bool f_is_dim;    // f varies in [0, d]; otherwise f = d everywhere
};

const CaseInfo& case_info(CaseId c);
std::vector<std::string> case_dims(CaseId c);

// Named nonnegative edge lengths for one case, in case_dims order.
struct ParamVector {
    CaseId case_id = CaseId::Case2;
    std::array<double, kMaxDims> v{};

    int size() const { return case_info(case_id).ndims; }
    double operator[](int i) const { return v[static_cast<std::size_t>(i)]; }
    double& operator[](int i) { return v[static_cast<std::size_t>(i)]; }
    double named(const std::string& name) const;
};

// Vertex labels of the local topology.
enum FramePoint : int { pA = 0, pX, pB, pY, pZ, pD, pR, pQ, pU, pV, kFramePoints };

extern const char* const kFramePointNames[kFramePoints];

template <class T>
struct Frame {
    std::array<Pt<T>, kFramePoints> pt;
    const Pt<T>& operator[](int i) const { return pt[static_cast<std::size_t>(i)]; }
};

// Chained construction: A at the origin, X one unit along +x, then each
// further point offset at a multiple of 60 degrees. All trigonometric
// factors are the exact constants {+-1, +-1/2, +-sqrt(3)/2}, so frames
// cost a handful of multiply-adds.
template <class T>
Frame<T> build_frame(const CaseInfo& ci, const T* w) {
    const T zero = scalar_from<T>(0.0);
    const T one = scalar_from<T>(1.0);
    const T half = scalar_from<T>(0.5);
    const T s3h = sqrt3_half<T>();

    const T b = ci.ib >= 0 ? w[ci.ib] : zero;
    const T s = w[ci.is];
    const T c = w[ci.ic];
    const T d = w[ci.idd];
    const T e = w[ci.ie];
    const T f = ci.f_is_dim ? w[ci.iff] : d;

    Frame<T> fr;
    fr.pt[pA] = {zero, zero};
    fr.pt[pX] = {one, zero};
    fr.pt[pB] = {fr.pt[pX].x + half * b, fr.pt[pX].y + s3h * b};          // +60
    fr.pt[pY] = {fr.pt[pX].x + half * s, fr.pt[pX].y - s3h * s};          // -60
    fr.pt[pZ] = {fr.pt[pY].x - half * c, fr.pt[pY].y - s3h * c};          // -120
    fr.pt[pD] = {fr.pt[pY].x + d, fr.pt[pY].y};                           // 0
    fr.pt[pR] = {fr.pt[pZ].x - e, fr.pt[pZ].y};                           // 180
    fr.pt[pQ] = {fr.pt[pZ].x + half * f, fr.pt[pZ].y - s3h * f};          // -60
    if (ci.d_steiner) {
        const T u = w[ci.iu];
        const T v = w[ci.iv];
        fr.pt[pU] = {fr.pt[pD].x + half * u, fr.pt[pD].y + s3h * u};      // +60
        fr.pt[pV] = {fr.pt[pD].x + half * v, fr.pt[pD].y - s3h * v};      // -60
    } else {
        fr.pt[pU] = fr.pt[pD];
        fr.pt[pV] = fr.pt[pD];
    }
    return fr;
}

// Labelled coordinates for one parameter vector. Throws on domain
// violations (negative entries, or f > d where f is constrained).
std::map<std::string, Point> coordinates(CaseId c, const ParamVector& w);

// Axis-aligned box; hi[i] == +inf marks an unbounded dimension.
struct HyperRect {
    int n = 0;
    std::array<double, kMaxDims> lo{};
    std::array<double, kMaxDims> hi{};

    bool degenerate() const {
        for (int i = 0; i < n; ++i)
            if (lo[static_cast<std::size_t>(i)] < hi[static_cast<std::size_t>(i)]) return false;
        return true;
    }
    bool unbounded(int i) const { return hi[static_cast<std::size_t>(i)] == kInf; }
    std::uint32_t unbounded_mask() const {
        std::uint32_t m = 0;
        for (int i = 0; i < n; ++i)
            if (unbounded(i)) m |= 1u << i;
        return m;
    }
};

// All products of {[0,1], [1, +inf)} over the case dimensions, in
// binary-counter order (bit i set -> dimension i takes [1, +inf)).
std::vector<HyperRect> initial_orthants(CaseId c);

// True iff the box meets the case domain. Cases 2/4 have no extra
// constraint; cases 1/3 require lo(f) <= hi(d).
bool domain_intersects(CaseId c, const HyperRect& h);

// Corners over the bounded, non-degenerate dimensions; unbounded
// dimensions are pinned to the finite lower boundary slice.
std::vector<ParamVector> vertices(CaseId c, const HyperRect& h);

// Vertex enumeration without materializing ParamVectors: fills `out`
// (length h.n) for corner index k in [0, vertex_count).
int vertex_count(const HyperRect& h);
void vertex_coords(const HyperRect& h, int k, double* out);

// Split along the widest dimension (logical width 1/lo for unbounded
// dimensions, ties to the smallest index). Bounded dimensions split at
// the midpoint; [l, +inf) doubles into [l, 2l] + [2l, +inf), with
// [0, +inf) -> [0,1] + [1, +inf).
std::pair<HyperRect, HyperRect> split_region(const HyperRect& h);

}  // namespace steiner

#endif
