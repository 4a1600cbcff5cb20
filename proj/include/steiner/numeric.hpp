#ifndef STEINER_NUMERIC_HPP
#define STEINER_NUMERIC_HPP

#include <algorithm>
#include <cmath>
#include <limits>

namespace steiner {

// Safety margin subtracted on the certifying side of every <= 0 test
// (and required as headroom on region-membership tests) in the default
// float evaluation mode.
inline constexpr double kSafetyMargin = 1e-9;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Outward-rounded interval scalar for audit-mode evaluation. IEEE
// +,-,*,/ and sqrt are correctly rounded, so widening each endpoint by
// one ulp after every operation yields a rigorous enclosure.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    explicit Interval(double v) : lo(v), hi(v) {}
    Interval(double l, double h) : lo(l), hi(h) {}

    static Interval exact(double v) { return Interval(v, v); }
    static Interval widened(double v) {
        return Interval(std::nextafter(v, -kInf), std::nextafter(v, kInf));
    }
};

inline double down(double x) { return std::nextafter(x, -kInf); }
inline double up(double x) { return std::nextafter(x, kInf); }

inline Interval operator+(Interval a, Interval b) {
    return Interval(down(a.lo + b.lo), up(a.hi + b.hi));
}
inline Interval operator-(Interval a, Interval b) {
    return Interval(down(a.lo - b.hi), up(a.hi - b.lo));
}
inline Interval operator-(Interval a) { return Interval(-a.hi, -a.lo); }
inline Interval operator*(Interval a, Interval b) {
    const double p1 = a.lo * b.lo, p2 = a.lo * b.hi;
    const double p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return Interval(down(std::min(std::min(p1, p2), std::min(p3, p4))),
                    up(std::max(std::max(p1, p2), std::max(p3, p4))));
}
inline Interval operator/(Interval a, Interval b) {
    // Callers never divide by an interval containing zero.
    const double q1 = a.lo / b.lo, q2 = a.lo / b.hi;
    const double q3 = a.hi / b.lo, q4 = a.hi / b.hi;
    return Interval(down(std::min(std::min(q1, q2), std::min(q3, q4))),
                    up(std::max(std::max(q1, q2), std::max(q3, q4))));
}
inline Interval sqrt(Interval a) {
    const double l = a.lo <= 0.0 ? 0.0 : down(std::sqrt(a.lo));
    return Interval(l, up(std::sqrt(a.hi)));
}
inline Interval max(Interval a, Interval b) {
    return Interval(std::max(a.lo, b.lo), std::max(a.hi, b.hi));
}
inline Interval min(Interval a, Interval b) {
    return Interval(std::min(a.lo, b.lo), std::min(a.hi, b.hi));
}

// Generic scalar helpers shared by the double fast path and the
// interval audit path.
template <class T>
inline T scalar_from(double v);
template <>
inline double scalar_from<double>(double v) { return v; }
template <>
inline Interval scalar_from<Interval>(double v) { return Interval::exact(v); }

template <class T>
inline T scalar_const(double v);  // for irrational constants
template <>
inline double scalar_const<double>(double v) { return v; }
template <>
inline Interval scalar_const<Interval>(double v) { return Interval::widened(v); }

template <class T> inline T sqrt3_half() { return scalar_const<T>(0.8660254037844386467637); }
template <class T> inline T two_over_sqrt3() { return scalar_const<T>(1.1547005383792515290183); }
template <class T> inline T sqrt3() { return scalar_const<T>(1.7320508075688772935274); }

// Certainly-true comparisons used on the certifying side. In float
// mode a positive margin is demanded; in interval mode the enclosure
// itself is the guarantee.
inline bool cert_le_zero(double v, double eps) { return v <= -eps; }
inline bool cert_le_zero(Interval v, double) { return v.hi <= 0.0; }
inline bool cert_ge_zero(double v, double eps) { return v >= eps; }
inline bool cert_ge_zero(Interval v, double) { return v.lo >= 0.0; }

inline double upper_estimate(double v) { return v; }
inline double upper_estimate(Interval v) { return v.hi; }

// Conservative scalar carried by the default evaluation mode: nominal
// value plus a nonnegative slack absorbing accumulated float error.
struct ConservativeValue {
    double nominal = 0.0;
    double slack = kSafetyMargin;
};

inline bool conservative_leq_zero(const ConservativeValue& v) {
    return v.nominal + v.slack <= 0.0;
}
inline bool conservative_leq_zero(const Interval& v) { return v.hi <= 0.0; }

}  // namespace steiner

#endif
