#include "steiner/lemmas.hpp"

#include <stdexcept>

namespace steiner {

namespace detail {

void fourpoint_quad(int step, int out[4]) {
    switch (step) {
        case 4: out[0] = pR; out[1] = pA; out[2] = pD; out[3] = pQ; return;
        case 5:
        case 8: out[0] = pA; out[1] = pD; out[2] = pQ; out[3] = pR; return;
        case 7: out[0] = pB; out[1] = pD; out[2] = pQ; out[3] = pR; return;
        default: throw std::domain_error("unknown 4-point catalogue step");
    }
}

}  // namespace detail

std::optional<TrappedPointBound> trapped_lemma_eval(TrapStep step, CaseId c,
                                                    const ParamVector& w) {
    const CaseInfo& ci = case_info(c);
    if (!detail::trap_in_region(step, ci, w.v.data(), 0.0)) return std::nullopt;
    const Frame<double> fr = build_frame(ci, w.v.data());
    TrappedPointBound out;
    out.ae_upper = detail::trap_root_bound(step, ci, fr, w.v.data());
    if (step == TrapStep::Step6) out.de_upper = detail::trap_de_bound(ci, fr, w.v.data());
    if (step == TrapStep::Step9) out.a5_upper = w[ci.is] + w[ci.ic];
    return out;
}

std::optional<double> fourpoint_lemma_eval(int step, CaseId c, const ParamVector& w) {
    if (step != 4 && step != 5 && step != 7 && step != 8)
        throw std::domain_error("unknown 4-point catalogue step");
    const CaseInfo& ci = case_info(c);
    if (ci.f_is_dim)
        throw std::domain_error("4-point catalogue entries apply only where f = d (cases 2/4)");
    const Frame<double> fr = build_frame(ci, w.v.data());
    if (!detail::fourpoint_in_region(step, ci, fr, w.v.data(), 0.0)) return std::nullopt;
    return detail::fourpoint_value(step, fr);
}

}  // namespace steiner
