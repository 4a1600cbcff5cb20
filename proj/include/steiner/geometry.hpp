#ifndef STEINER_GEOMETRY_HPP
#define STEINER_GEOMETRY_HPP

#include <span>
#include <vector>

#include "steiner/numeric.hpp"

namespace steiner {

template <class T>
struct Pt {
    T x{};
    T y{};
};

using Point = Pt<double>;

template <class T>
inline Pt<T> operator+(Pt<T> a, Pt<T> b) { return {a.x + b.x, a.y + b.y}; }
template <class T>
inline Pt<T> operator-(Pt<T> a, Pt<T> b) { return {a.x - b.x, a.y - b.y}; }

template <class T>
inline T dist2(Pt<T> a, Pt<T> b) {
    const T dx = a.x - b.x;
    const T dy = a.y - b.y;
    return dx * dx + dy * dy;
}

template <class T>
inline T dist(Pt<T> a, Pt<T> b) {
    using std::sqrt;
    return sqrt(dist2(a, b));
}

// p + length * (cos th, sin th) with th in degrees. Rejects negative
// lengths.
Point polar_offset(Point p, double length, double angle_deg);

// p rotated +60 degrees about center.
template <class T>
inline Pt<T> rotate60_ccw(Pt<T> center, Pt<T> p) {
    const T half = scalar_from<T>(0.5);
    const T s3h = sqrt3_half<T>();
    const T dx = p.x - center.x;
    const T dy = p.y - center.y;
    return {center.x + half * dx - s3h * dy, center.y + s3h * dx + half * dy};
}

// Length of the Steiner minimal tree on three points. If every
// triangle angle is below 120 degrees this is the distance from the
// third point to the outward equilateral apex over the opposite side;
// otherwise the tree degenerates to the two edges at the wide vertex.
// The wide-vertex test compares squared lengths (law of cosines)
// instead of extracting angles.
template <class T>
T smt3_length(Pt<T> a, Pt<T> b, Pt<T> c);

// Length of the two-Steiner-point tree pairing (a,b) against (c,d):
// |UV| with U = rotate60_ccw(a, b) and V = rotate60_ccw(c, d). The
// caller is responsible for topology validity; the value is defined
// regardless.
template <class T>
inline T four_point_length(Pt<T> a, Pt<T> b, Pt<T> c, Pt<T> d) {
    return dist(rotate60_ccw(a, b), rotate60_ccw(c, d));
}

// Euclidean minimum spanning tree length over the complete graph;
// greedy edge insertion, intended for the tiny point sets used here.
double mst_length(std::span<const Point> points);
inline double mst_length(const std::vector<Point>& points) {
    return mst_length(std::span<const Point>(points));
}

template <class T>
T smt3_length(Pt<T> a, Pt<T> b, Pt<T> c) {
    using std::max;
    const T lab = dist(a, b);
    const T lbc = dist(b, c);
    const T lca = dist(c, a);
    const T ab2 = lab * lab, bc2 = lbc * lbc, ca2 = lca * lca;
    // angle at a vertex >= 120 deg  <=>  opposite^2 >= adj1^2 + adj2^2 + adj1*adj2
    const double wide_a = upper_estimate(bc2 - (ab2 + ca2 + lab * lca));
    const double wide_b = upper_estimate(ca2 - (ab2 + bc2 + lab * lbc));
    const double wide_c = upper_estimate(ab2 - (bc2 + ca2 + lbc * lca));
    if (wide_a >= 0.0) return lab + lca;
    if (wide_b >= 0.0) return lab + lbc;
    if (wide_c >= 0.0) return lbc + lca;
    // Fermat case: the apex away from `a` is the farther of the two
    // rotation candidates of the segment bc.
    const Pt<T> e1 = rotate60_ccw(b, c);
    const Pt<T> e2 = {b.x + (c.x - b.x) * scalar_from<T>(0.5) + (c.y - b.y) * sqrt3_half<T>(),
                      b.y - (c.x - b.x) * sqrt3_half<T>() + (c.y - b.y) * scalar_from<T>(0.5)};
    const T d1 = dist(a, e1);
    const T d2 = dist(a, e2);
    return max(d1, d2);
}

}  // namespace steiner

#endif
