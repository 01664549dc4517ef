#include "gtp/solver.hpp"

namespace gtp {

Coeff init_q2(const ProblemParams& params) {
    prec_t p = params.prec();
    Coeff lam = params.lambda();
    Coeff ilam = conj(lam); // 1/lambda on the unit circle
    Coeff two(2.0, p);
    Coeff den = (ilam + two + lam) * two;
    if (abs(den) < params.resonance_threshold())
        throw resonance_error(1, 0, "lambda = -1: q2 denominator vanishes");
    return -(lam - two + ilam) / den;
}

Coeff linear_denominator(int j, int k, const ProblemParams& params) {
    prec_t p = params.prec();
    if (j + k < 2 && !(j == 1 && k == 0))
        throw config_error("linear denominator defined for j+k >= 2 (and the q2 cell)");
    Real ca = params.cos_alpha();
    Real ch = params.cos_half_b0();
    if (j == k + 1) {
        // cos(b0/2)^{2j} * 2j * cos(alpha) * C(2j-1, j)
        Real v = pow_si(ch, 2 * j);
        v *= 2L * j;
        v *= ca;
        v *= binomial(static_cast<unsigned long>(2 * j - 1), static_cast<unsigned long>(j), p);
        return Coeff(v);
    }
    // (cos a / cos^2(b0/2)) (cos^2((j-k) b0/2) - cos^2(b0/2))
    Real cd = cos(params.b0() * static_cast<long>(j - k) / 2L);
    Real v = (cd * cd - ch * ch) * ca / (ch * ch);
    return Coeff(v);
}

Coeff checked_denominator(int j, int k, const ProblemParams& params,
                          std::vector<ResonanceLogEntry>* log) {
    Coeff d = linear_denominator(j, k, params);
    Real mag = abs(d);
    if (log) {
        // Near-resonant reporting threshold, far above the abort threshold.
        Real report(1.0, params.prec());
        mpfr_mul_2si(report.raw(), report.raw(), -8, MPFR_RNDN);
        if (mag < report) log->push_back({j, k, mag});
    }
    if (mag < params.resonance_threshold())
        throw resonance_error(j, k, "small denominator at z^" + std::to_string(j) + " w^" +
                                        std::to_string(k));
    return d;
}

std::array<Coeff, 3> quadratic_phi_closed_form(const ProblemParams& params) {
    prec_t p = params.prec();
    Coeff lam = params.lambda();
    Coeff il = conj(lam);
    Coeff lam2 = lam * lam;
    Coeff il2 = il * il;
    Coeff one(1.0, p), two(2.0, p);
    Real q3 = params.q_odd_coeff(3);
    Coeff q2 = init_q2(params);
    Real ta = params.sin_alpha() / params.cos_alpha();

    if (abs(q2) < params.resonance_threshold())
        throw degenerate_error("q2 = 0: quadratic closed forms degenerate");

    // Numerator pieces of phi_20: the alpha-dependent q0/q2 error
    // contributions at z^2 w^0 collapse to (1 + 2 q2) times the q0 piece,
    // plus the q3 piece; everything divided by the shared cos(alpha).
    Coeff n_alpha = (one + q2 + q2) * (lam - two + il) * (lam - il) * ta / Real(8.0, p);
    Coeff sq = (lam + one) * (lam + one) + (il + one) * (il + one);
    Coeff n_q3 = sq * (q3 * Real(3.0, p) / Real(4.0, p));
    // Same combination the |j-k| = 1 vanishing identity pins for the
    // phi_{j,k} coefficient, evaluated at lambda^2.
    Coeff den = q2 * (lam2 + two + il2) + (lam2 - two + il2) / two;

    Coeff phi20 = -(n_alpha + n_q3) / den;
    Coeff phi02 = conj(phi20);
    Coeff phi11 = -(lam + one) * (il + one) * (q3 * Real(3.0, p)) / (q2 * Real(4.0, p));
    return {phi20, phi11, phi02};
}

Coeff key_combination(const ProblemParams& params) {
    auto phi = quadratic_phi_closed_form(params);
    Coeff cb0 = Coeff(cos(params.b0()));
    return phi[0] * cb0 + phi[1] + phi[2] * cb0;
}

} // namespace gtp
