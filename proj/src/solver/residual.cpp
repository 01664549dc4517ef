#include "gtp/solver.hpp"

namespace gtp {

namespace {

// t_plus/t_minus: phi with each (j,k) cell multiplied by e^{+-i(j-k) b(zw)}.
BiSeries twist(const BiSeries& phi, const std::vector<UniSeries>& epow, int dir, prec_t p) {
    int n = phi.order();
    BiSeries out(n, p);
    for (int d = 1; d <= n; ++d)
        for (int k = 0; k <= d; ++k) {
            int j = d - k;
            int idx = dir * (j - k);
            for (int a = 0; 2 * a + d <= n; ++a) {
                Coeff e = idx >= 0 ? epow[static_cast<size_t>(idx)].coeff(a)
                                   : conj(epow[static_cast<size_t>(-idx)].coeff(a));
                if (e.is_zero()) continue;
                out.add_to(j + a, k + a, phi.ref(j, k) * e);
            }
        }
    return out;
}

} // namespace

Coeff residual(const GtpSolution& sol, const ProblemParams& params, int j, int k) {
    prec_t p = params.prec();
    int n = j + k;
    if (n > sol.phi.order()) throw config_error("residual order beyond the stored solution");

    // Full support series q (evens from the solution, odds from the data);
    // the derivative at order n sees index n+1.
    UniSeries q(n + 2, p);
    q.set(0, Coeff(1.0, p));
    for (int i = 2; i <= n + 2; i += 2) q.set(i, sol.q_even.coeff(i));
    for (int i = 3; i <= n + 2; i += 2) q.set(i, params.q_odd().coeff(i));
    UniSeries qp = q.derivative();

    // Powers of e^{i b(rho)} for the conjugacy twist.
    int rho_order = n / 2 + 1;
    UniSeries u(rho_order, p);
    for (int a = 1; a <= rho_order && a <= params.b().order(); ++a)
        u.set(a, Coeff(Real(p), params.b().coeff(a).re()));
    UniSeries e1 = exp_series(u) * Coeff(params.lambda());
    std::vector<UniSeries> epow;
    epow.reserve(static_cast<size_t>(n) + 1);
    UniSeries acc(rho_order, p);
    acc.set(0, Coeff(1.0, p));
    for (int l = 0; l <= n; ++l) {
        epow.push_back(acc);
        acc = acc * e1;
    }

    BiSeries t = sol.phi.truncated(n);
    BiSeries tp = twist(t, epow, +1, p);
    BiSeries tm = twist(t, epow, -1, p);

    Coeff half(0.5, p);
    BiSeries um = (tm + t) * half;
    BiSeries vm = (t - tm) * half;
    BiSeries up = (tp + t) * half;
    BiSeries vp = (tp - t) * half;

    Real alpha = params.alpha();
    UniSeries cosoff = cos_offset_coeffs(alpha, n, p);
    // sin(x - alpha) = cos(x - (alpha + pi/2))
    UniSeries sinoff = cos_offset_coeffs(alpha + pi(p) / 2L, n, p);

    BiSeries lhs = compose_bi_into_uni(qp, um) * compose_bi_into_uni(cosoff, vm) -
                   compose_bi_into_uni(q, um) * compose_bi_into_uni(sinoff, vm) +
                   compose_bi_into_uni(qp, up) * compose_bi_into_uni(cosoff, vp) +
                   compose_bi_into_uni(q, up) * compose_bi_into_uni(sinoff, vp);

    return lhs.at(j, k) * half;
}

} // namespace gtp
