#ifndef STEINER_LEMMAS_HPP
#define STEINER_LEMMAS_HPP

#include <optional>

#include "steiner/config_space.hpp"

namespace steiner {

// Trapped-point entries of the lemma catalogue. The baselines are the
// classical bounds for the chains rooted at A and at D (or U when D is
// a Steiner point); the numbered entries are the refinement steps.
enum class TrapStep : int { BaselineA = 0, BaselineF = 1, Step2 = 2, Step3 = 3, Step6 = 6, Step9 = 9 };

struct TrappedPointBound {
    // Distance bound from the trap root (A, D, or U) to the trapped point.
    double ae_upper = 0.0;
    // Secondary bound |DE| delivered by step 6 together with the A-side bound.
    std::optional<double> de_upper;
    // Worst-case cap assumed for the fifth chain edge when the trap
    // polygon reaches that deep (step 9).
    std::optional<double> a5_upper;
};

// Evaluates one trapped-point catalogue entry at w; nullopt when the
// entry's linear condition fails there.
std::optional<TrappedPointBound> trapped_lemma_eval(TrapStep step, CaseId c,
                                                    const ParamVector& w);

// Evaluates one 4-point catalogue entry (steps 4, 5, 7, 8) at w, with
// f pinned to d; nullopt when the entry's constraint system fails.
// Throws on cases 1/3, where these entries are excluded.
std::optional<double> fourpoint_lemma_eval(int step, CaseId c, const ParamVector& w);

// ---- templated evaluation shared by the certifier hot path ----

namespace detail {

template <class T>
inline T trap_cond_min(TrapStep step, const CaseInfo& ci, const T* w) {
    using std::min;
    const T one = scalar_from<T>(1.0);
    const T c = w[ci.ic];
    const T e = w[ci.ie];
    switch (step) {
        case TrapStep::BaselineA:
            return one - c;
        case TrapStep::BaselineF: {
            const T f = ci.f_is_dim ? w[ci.iff] : w[ci.idd];
            return w[ci.idd] - f;
        }
        case TrapStep::Step2: {
            const T s = w[ci.is];
            return min(one - c + two_over_sqrt3<T>() * s - e, c + e - one);
        }
        case TrapStep::Step3:
            return min(one + (two_over_sqrt3<T>() - one) * c - e, c + e - one);
        case TrapStep::Step6:
            return (two_over_sqrt3<T>() - one) * c - e;
        case TrapStep::Step9:
            return w[ci.is] + one - e;
    }
    return scalar_from<T>(-1.0);
}

template <class T>
inline bool trap_in_region(TrapStep step, const CaseInfo& ci, const T* w, double eps) {
    return cert_ge_zero(trap_cond_min(step, ci, w), eps);
}

template <class T>
inline T trap_root_bound(TrapStep step, const CaseInfo& ci, const Frame<T>& fr, const T* w) {
    using std::max;
    switch (step) {
        case TrapStep::BaselineA:
            return max(dist(fr[pA], fr[pY]), dist(fr[pA], fr[pZ]));
        case TrapStep::BaselineF:
            if (ci.d_steiner)
                return max(max(dist(fr[pU], fr[pY]), dist(fr[pU], fr[pZ])),
                           dist(fr[pU], fr[pQ]));
            return max(dist(fr[pD], fr[pZ]), dist(fr[pD], fr[pQ]));
        case TrapStep::Step2:
        case TrapStep::Step3: {
            const T c = w[ci.ic], e = w[ci.ie];
            T m = max(scalar_from<T>(1.0), dist(fr[pA], fr[pY]));
            m = max(m, dist(fr[pA], fr[pZ]));
            m = max(m, dist(fr[pA], fr[pR]));
            return max(m, sqrt3_half<T>() * (c + e - scalar_from<T>(1.0)));
        }
        case TrapStep::Step6: {
            T m = max(dist(fr[pA], fr[pY]), dist(fr[pA], fr[pZ]));
            return max(m, dist(fr[pA], fr[pR]));
        }
        case TrapStep::Step9: {
            const T c = w[ci.ic], e = w[ci.ie];
            T m = max(dist(fr[pA], fr[pY]), dist(fr[pA], fr[pZ]));
            m = max(m, dist(fr[pA], fr[pR]));
            return max(m, e + c - scalar_from<T>(1.0));
        }
    }
    return scalar_from<T>(kInf);
}

// Step 6 companion bound |DE|.
template <class T>
inline T trap_de_bound(const CaseInfo& ci, const Frame<T>& fr, const T* w) {
    using std::max;
    using std::sqrt;
    const T c = w[ci.ic], e = w[ci.ie], d = w[ci.idd];
    const T ce = c + e;
    T m = max(dist(fr[pD], fr[pY]), dist(fr[pD], fr[pZ]));
    m = max(m, dist(fr[pD], fr[pR]));
    const T q = scalar_from<T>(0.75) * ce * ce + scalar_from<T>(1.5) * ce * d + d * d;
    return max(m, sqrt(q));
}

// 4-point entries. Quadrilateral order and pairing per catalogue step:
// step 4 pairs (R,A)-(D,Q); steps 5 and 8 pair (A,D)-(Q,R); step 7
// pairs (B,D)-(Q,R).
void fourpoint_quad(int step, int out[4]);

template <class T>
inline T angle_slack(Pt<T> u, Pt<T> v) {
    using std::sqrt;
    const T dot = u.x * v.x + u.y * v.y;
    const T nn = sqrt((u.x * u.x + u.y * u.y) * (v.x * v.x + v.y * v.y));
    return scalar_from<T>(2.0) * dot + nn;  // >= 0 iff angle <= 120 deg
}

template <class T>
inline bool fourpoint_in_region(int step, const CaseInfo& ci, const Frame<T>& fr,
                                const T* w, double eps) {
    const T s = w[ci.is], c = w[ci.ic], d = w[ci.idd], e = w[ci.ie];
    const T one = scalar_from<T>(1.0);
    switch (step) {
        case 5:
            return cert_ge_zero(c - one, eps) && cert_ge_zero(e - one, eps);
        case 7:
            return cert_ge_zero(d - w[ci.ib], eps);
        case 4: {
            if (!cert_ge_zero(e + c - one, eps)) return false;
            if (!cert_ge_zero(s + c + d + scalar_from<T>(2.0) - e, eps)) return false;
            if (!cert_ge_zero(e - (scalar_from<T>(2.0) - c - d + s), eps)) return false;
            if (!cert_ge_zero(scalar_from<T>(3.0) * s - e, eps)) return false;
            const T g5 = scalar_from<T>(2.0) + c * c + scalar_from<T>(3.0) * d +
                         scalar_from<T>(2.0) * s + scalar_from<T>(3.0) * c * s +
                         scalar_from<T>(3.0) * d * s + scalar_from<T>(2.0) * s * s -
                         (scalar_from<T>(2.0) + c + scalar_from<T>(3.0) * d + s) * e;
            if (!cert_ge_zero(g5, eps)) return false;
            const Pt<T> V = rotate60_ccw(fr[pD], fr[pQ]);
            const Pt<T> rd = fr[pD] - fr[pR];
            const Pt<T> aq = fr[pQ] - fr[pA];
            if (!cert_ge_zero(angle_slack(rd, aq), eps)) return false;
            if (!cert_ge_zero(angle_slack(V - fr[pR], fr[pA] - fr[pR]), eps)) return false;
            return cert_ge_zero(angle_slack(V - fr[pA], fr[pR] - fr[pA]), eps);
        }
        case 8: {
            if (!cert_ge_zero(d * (c + e - one) + e * (s + c), eps)) return false;
            // e >= (sqrt(g^2 + 4d) - g)/2 with g = c + s + 2d, squared out
            if (!cert_ge_zero(e * e + e * (c + s + scalar_from<T>(2.0) * d) - d, eps))
                return false;
            const T half = scalar_from<T>(0.5);
            const T g3 = scalar_from<T>(0.75) * c * (s + c + d) -
                         (one + half * s - half * c + half * d) * (half * c + e + d);
            if (!cert_ge_zero(g3, eps)) return false;
            if (!cert_ge_zero(s + e - one, eps)) return false;
            return cert_ge_zero(one + d + half * s + half * e - c, eps);
        }
        default:
            return false;
    }
}

template <class T>
inline T fourpoint_value(int step, const Frame<T>& fr) {
    int q[4];
    fourpoint_quad(step, q);
    return four_point_length(fr[q[0]], fr[q[1]], fr[q[2]], fr[q[3]]);
}

}  // namespace detail

}  // namespace steiner

#endif
