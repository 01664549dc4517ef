#include "gtp/problem.hpp"

namespace gtp {

ProblemParams::ProblemParams(UniSeries b, UniSeries q_odd, Rotation rotation, int max_order)
    : b_(std::move(b)),
      q_odd_(std::move(q_odd)),
      rotation_(rotation),
      max_order_(max_order),
      resonance_threshold_(b_.prec()) {
    if (b_.prec() != q_odd_.prec())
        throw config_error("b and q_odd carry different precisions");
    if (max_order_ < 1) throw config_error("max_order must be at least 1");
    if (rotation_.q < 2 || rotation_.p < 1 || 2 * rotation_.p > rotation_.q)
        throw config_error("rotation number must satisfy 0 < p/q <= 1/2");
    for (int i = 0; i <= b_.order(); ++i)
        if (!b_.coeff(i).im().is_zero()) throw config_error("normal form coefficients must be real");
    if (q_odd_.parity() != Parity::odd)
        throw config_error("q_odd must carry odd parity");
    if (!q_odd_.coeff(1).is_zero())
        throw config_error("q1 must vanish for the periodic orbit to exist");
    for (int i = 0; i <= q_odd_.order(); ++i)
        if (!q_odd_.coeff(i).im().is_zero()) throw config_error("q_odd coefficients must be real");
    // lambda = -1 makes every box denominator vanish.
    if (cos_half_b0().is_zero())
        throw config_error("b0 an odd multiple of pi is excluded (lambda = -1)");

    // Default threshold 2^(-prec/4): separates Diophantine smallness from
    // roundoff and scales with the working precision.
    resonance_threshold_ = Real(1.0, prec());
    mpfr_mul_2si(resonance_threshold_.raw(), resonance_threshold_.raw(),
                 -static_cast<long>(prec() / 4), MPFR_RNDN);
}

Real ProblemParams::alpha() const {
    Real p = pi(prec());
    return p / 2L - (p * rotation_.p) / rotation_.q;
}

Coeff ProblemParams::lambda() const { return unit_circle(b0()); }

void ProblemParams::set_gauge(int j, int k, Coeff v) {
    if (j + k <= 1 || (j - k != 1 && k - j != 1))
        throw config_error("gauge positions are |j-k| = 1 with j+k > 1");
    gauge_[{j, k}] = std::move(v);
}

} // namespace gtp
