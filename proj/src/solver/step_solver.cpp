#include "gtp/step_solver.hpp"

#include <thread>

#include "gtp/solver.hpp"

namespace gtp {

namespace {

// out[i+j] += a[i] * b[j], raw mpfr kernel with shared scratch.
struct ConvScratch {
    explicit ConvScratch(prec_t p) {
        mpfr_init2(t1, p);
        mpfr_init2(t2, p);
    }
    ~ConvScratch() {
        mpfr_clear(t1);
        mpfr_clear(t2);
    }
    mpfr_t t1, t2;
};

void conv_acc(const std::vector<Coeff>& a, const std::vector<Coeff>& b,
              std::vector<Coeff>& out, ConvScratch& s) {
    for (size_t ia = 0; ia < a.size(); ++ia) {
        const Coeff& x = a[ia];
        if (x.is_zero()) continue;
        mpfr_srcptr xr = x.re().raw(), xi = x.im().raw();
        for (size_t ib = 0; ib < b.size(); ++ib) {
            const Coeff& y = b[ib];
            if (y.is_zero()) continue;
            Coeff& o = out[ia + ib];
            mpfr_srcptr yr = y.re().raw(), yi = y.im().raw();
            mpfr_mul(s.t1, xr, yr, MPFR_RNDN);
            mpfr_mul(s.t2, xi, yi, MPFR_RNDN);
            mpfr_sub(s.t1, s.t1, s.t2, MPFR_RNDN);
            mpfr_add(o.re().raw(), o.re().raw(), s.t1, MPFR_RNDN);
            mpfr_mul(s.t1, xr, yi, MPFR_RNDN);
            mpfr_mul(s.t2, xi, yr, MPFR_RNDN);
            mpfr_add(s.t1, s.t1, s.t2, MPFR_RNDN);
            mpfr_add(o.im().raw(), o.im().raw(), s.t1, MPFR_RNDN);
        }
    }
}

void axpy(std::vector<Coeff>& out, const Coeff& s, const std::vector<Coeff>& x) {
    if (s.is_zero()) return;
    for (size_t i = 0; i < x.size(); ++i) out[i] += s * x[i];
}

} // namespace

StepSolver::StepSolver(const ProblemParams& params)
    : params_(params),
      p_(params.prec()),
      n_(params.max_order()),
      cos_alpha_(params.cos_alpha()),
      sin_alpha_(params.sin_alpha()),
      q2_scaled_(p_) {
    int rho_order = n_ / 2 + 1;

    // E = exp(i b(rho)/2); cos/sin of l b(rho)/2 come from its powers.
    UniSeries u(rho_order, p_);
    for (int a = 1; a <= rho_order && a <= params_.b().order(); ++a)
        u.set(a, Coeff(Real(p_), params_.b().coeff(a).re() / 2L));
    UniSeries e1 = exp_series(u) * Coeff(unit_circle(params_.b0() / 2L));

    cosl_.resize(static_cast<size_t>(n_) + 2);
    sinl_.resize(static_cast<size_t>(n_) + 2);
    UniSeries epow(rho_order, p_);
    epow.set(0, Coeff(1.0, p_));
    for (int l = 0; l <= n_ + 1; ++l) {
        auto& cl = cosl_[static_cast<size_t>(l)];
        auto& sl = sinl_[static_cast<size_t>(l)];
        cl.reserve(static_cast<size_t>(rho_order) + 1);
        sl.reserve(static_cast<size_t>(rho_order) + 1);
        for (int a = 0; a <= rho_order; ++a) {
            cl.push_back(epow[a].re());
            sl.push_back(epow[a].im());
        }
        epow = epow * e1;
    }

    phi_.assign(static_cast<size_t>(n_) + 1, HLayer());
    A_ = C_ = qA_ = qpA_ = g_ = h_ = P_ = Q_ = phi_;
    powA_.assign(static_cast<size_t>(n_) + 2, {});
    for (int b = 2; b <= n_ + 1; ++b)
        powA_[static_cast<size_t>(b)].assign(static_cast<size_t>(n_) + 1, HLayer());

    q_.assign(static_cast<size_t>(n_) + 2, Coeff(p_));
    q_[0] = Coeff(1.0, p_);
    for (int i = 3; i <= n_ + 1 && i <= params_.q_odd().order(); i += 2)
        q_[static_cast<size_t>(i)] = params_.q_odd().coeff(i);

    // Layer 0: phi_{0,0} = 0, q(A) = 1, cos/sin of -alpha.
    phi_[0] = zeros(0);
    A_[0] = zeros(0);
    C_[0] = zeros(0);
    qA_[0] = zeros(0);
    qA_[0][0] = Coeff(1.0, p_);
    qpA_[0] = zeros(0);
    g_[0] = zeros(0);
    g_[0][0] = Coeff(cos_alpha_);
    h_[0] = zeros(0);
    h_[0][0] = Coeff(-sin_alpha_);
    P_[0] = zeros(0);
    Q_[0] = zeros(0);
    Q_[0][0] = Coeff(-sin_alpha_);

    // Normalization phi_{1,0} = phi_{0,1} = 1 seeds layer 1.
    phi_[1] = zeros(1);
    phi_[1][0] = Coeff(1.0, p_);
    phi_[1][1] = Coeff(1.0, p_);
}

void StepSolver::build_inner_layer(int d) {
    A_[static_cast<size_t>(d)] = zeros(d);
    C_[static_cast<size_t>(d)] = zeros(d);
    HLayer& Ad = A_[static_cast<size_t>(d)];
    HLayer& Cd = C_[static_cast<size_t>(d)];
    for (int kk = 0; kk <= d; ++kk) {
        int jj = d - kk;
        Coeff av(p_), cv(p_);
        for (int a = 0; a <= (jj < kk ? jj : kk); ++a) {
            int j = jj - a, k = kk - a;
            if (j + k == 0) continue;
            const Coeff& f = phi_[static_cast<size_t>(j + k)][static_cast<size_t>(k)];
            if (f.is_zero()) continue;
            int l = j - k;
            int al = l < 0 ? -l : l;
            const Real& c = cosl_[static_cast<size_t>(al)][static_cast<size_t>(a)];
            av += f * c;
            Real s = sinl_[static_cast<size_t>(al)][static_cast<size_t>(a)];
            if (l < 0) s = -s;
            // i * s * f
            cv += Coeff(-(f.im() * s), f.re() * s);
        }
        Ad[static_cast<size_t>(kk)] = std::move(av);
        Cd[static_cast<size_t>(kk)] = std::move(cv);
    }
}

void StepSolver::advance_powers(int d) {
    auto work = [&](int beta_begin, int beta_end) {
        ConvScratch s(p_);
        for (int beta = beta_begin; beta < beta_end; ++beta) {
            HLayer& out = powA_[static_cast<size_t>(beta)][static_cast<size_t>(d)];
            out = zeros(d);
            for (int e = 1; e <= d - beta + 1; ++e) {
                const HLayer& lo = beta == 2 ? A_[static_cast<size_t>(d - e)]
                                             : powA_[static_cast<size_t>(beta - 1)][static_cast<size_t>(d - e)];
                conv_acc(A_[static_cast<size_t>(e)], lo, out, s);
            }
        }
    };
    int top = d;          // A^beta first appears at layer beta
    int threads = params_.threads();
    if (threads <= 1 || top < 16) {
        work(2, top + 1);
        return;
    }
    // Independent per beta at a fixed layer; deterministic regardless of
    // the thread count since each target is filled by exactly one thread.
    std::vector<std::thread> pool;
    int nb = top - 1;
    int chunk = (nb + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        int lo = 2 + t * chunk;
        int hi = lo + chunk < top + 1 ? lo + chunk : top + 1;
        if (lo >= hi) break;
        pool.emplace_back(work, lo, hi);
    }
    for (auto& th : pool) th.join();
}

void StepSolver::assemble_layer(int d) {
    ConvScratch s(p_);
    size_t ud = static_cast<size_t>(d);

    qA_[ud] = zeros(d);
    qpA_[ud] = zeros(d);
    for (int beta = 1; beta <= d; ++beta) {
        const HLayer& pw = beta == 1 ? A_[ud] : powA_[static_cast<size_t>(beta)][ud];
        axpy(qA_[ud], q_[static_cast<size_t>(beta)], pw);
        Coeff w = q_[static_cast<size_t>(beta) + 1];
        w *= static_cast<long>(beta + 1);
        axpy(qpA_[ud], w, pw);
    }

    // g = cos(C - alpha), h = sin(C - alpha) by the derivative recurrences
    // dz g = -h dz C and dz h = g dz C; the w^d corner entry comes from the
    // matching d/dw relation.
    HLayer dzg = HLayer(ud, Coeff(p_)), dzh = HLayer(ud, Coeff(p_));
    Coeff corner_g(p_), corner_h(p_);
    for (int e = 1; e <= d; ++e) {
        const HLayer& Ce = C_[static_cast<size_t>(e)];
        const HLayer& gg = g_[static_cast<size_t>(d - e)];
        const HLayer& hh = h_[static_cast<size_t>(d - e)];
        for (int k2 = 0; k2 < e; ++k2) {
            Coeff dC = Ce[static_cast<size_t>(k2)];
            if (dC.is_zero()) continue;
            dC *= static_cast<long>(e - k2);
            for (size_t k1 = 0; k1 < hh.size(); ++k1) {
                if (!hh[k1].is_zero()) dzg[k1 + static_cast<size_t>(k2)] -= hh[k1] * dC;
                if (!gg[k1].is_zero()) dzh[k1 + static_cast<size_t>(k2)] += gg[k1] * dC;
            }
        }
        Coeff dCw = Ce[static_cast<size_t>(e)];
        if (!dCw.is_zero()) {
            dCw *= static_cast<long>(e);
            corner_g -= hh[static_cast<size_t>(d - e)] * dCw;
            corner_h += gg[static_cast<size_t>(d - e)] * dCw;
        }
    }
    g_[ud] = zeros(d);
    h_[ud] = zeros(d);
    for (int k = 0; k < d; ++k) {
        g_[ud][static_cast<size_t>(k)] = dzg[static_cast<size_t>(k)] / static_cast<long>(d - k);
        h_[ud][static_cast<size_t>(k)] = dzh[static_cast<size_t>(k)] / static_cast<long>(d - k);
    }
    g_[ud][static_cast<size_t>(d)] = corner_g / static_cast<long>(d);
    h_[ud][static_cast<size_t>(d)] = corner_h / static_cast<long>(d);

    P_[ud] = zeros(d);
    Q_[ud] = zeros(d);
    for (int e = 0; e <= d; ++e) {
        if (e > 0) conv_acc(qpA_[static_cast<size_t>(e)], g_[static_cast<size_t>(d - e)], P_[ud], s);
        conv_acc(qA_[static_cast<size_t>(e)], h_[static_cast<size_t>(d - e)], Q_[ud], s);
    }
}

Coeff StepSolver::error_at(int j, int k) const {
    if (j < 0 || k < 0 || j + k > layer_)
        throw config_error("error_at outside the advanced range");
    int l = j - k;
    int al = l < 0 ? -l : l;
    const auto& cl = cosl_[static_cast<size_t>(al)];
    const auto& sl = sinl_[static_cast<size_t>(al)];
    Coeff acc(p_);
    for (int a = 0; a <= (j < k ? j : k); ++a) {
        size_t d = static_cast<size_t>(j + k - 2 * a);
        const Coeff& pv = P_[d][static_cast<size_t>(k - a)];
        const Coeff& qv = Q_[d][static_cast<size_t>(k - a)];
        acc += pv * cl[static_cast<size_t>(a)];
        Real ss = sl[static_cast<size_t>(a)];
        if (l < 0) ss = -ss;
        // + i ss qv
        acc += Coeff(-(qv.im() * ss), qv.re() * ss);
    }
    return acc;
}

void StepSolver::patch_phi(int j, int k, const Coeff& v) {
    int d = j + k;
    size_t ud = static_cast<size_t>(d);
    size_t uk = static_cast<size_t>(k);
    phi_[ud][uk] = v;
    int l = j - k;
    int al = l < 0 ? -l : l;
    Coeff dA = v * cosl_[static_cast<size_t>(al)][0];
    Real s0 = sinl_[static_cast<size_t>(al)][0];
    if (l < 0) s0 = -s0;
    Coeff dC(-(v.im() * s0), v.re() * s0);

    A_[ud][uk] += dA;
    C_[ud][uk] += dC;
    Coeff dqp = q2_scaled_ * dA;
    qpA_[ud][uk] += dqp;
    g_[ud][uk] += dC * sin_alpha_;
    h_[ud][uk] += dC * cos_alpha_;
    P_[ud][uk] += dqp * cos_alpha_;
    Q_[ud][uk] += dC * cos_alpha_;
}

void StepSolver::patch_q(int idx, const Coeff& v) {
    q_[static_cast<size_t>(idx)] = v;
    if (idx == 2) q2_scaled_ = v + v;
    int d = idx - 1;
    size_t ud = static_cast<size_t>(d);
    const HLayer& pw = d == 1 ? A_[1] : powA_[static_cast<size_t>(d)][ud];
    Coeff w = v;
    w *= static_cast<long>(idx);
    for (size_t i = 0; i < pw.size(); ++i) {
        if (pw[i].is_zero()) continue;
        Coeff delta = w * pw[i];
        qpA_[ud][i] += delta;
        P_[ud][i] += delta * cos_alpha_;
    }
}

void StepSolver::process_layer(int d) {
    if (d % 2 == 1) {
        int j0 = (d + 1) / 2;
        Coeff denom = checked_denominator(j0, j0 - 1, params_, &log_);
        Coeff e = error_at(j0, j0 - 1);
        patch_q(d + 1, -e / denom);

        // The mirror cell must now vanish by the conjugation symmetry.
        Coeff sym = error_at(j0 - 1, j0);
        Real scale = abs(e);
        if (scale < Real(1.0, p_)) scale = Real(1.0, p_);
        if (abs(sym) > tolerance(p_) * scale)
            throw internal_error("symmetric error cell z^" + std::to_string(j0 - 1) + " w^" +
                                 std::to_string(j0) + " failed to vanish");
    }
    // Remaining unknowns of this total order: the circle cells.
    std::vector<std::pair<std::pair<int, int>, Coeff>> solved;
    for (int k = 0; k <= d; ++k) {
        int j = d - k;
        int l = j - k;
        if (l == 1 || l == -1) continue;
        if (d < 2) continue;
        Coeff denom = checked_denominator(j, k, params_, &log_);
        Coeff e = error_at(j, k);
        solved.push_back({{j, k}, -e / denom});
    }
    for (const auto& [jk, v] : solved) patch_phi(jk.first, jk.second, v);
}

void StepSolver::advance_layer(int d) {
    size_t ud = static_cast<size_t>(d);
    if (d > 1) {
        phi_[ud] = zeros(d);
        // Gauge cells |j-k| = 1 take their (conventionally zero) values now.
        if (d % 2 == 1) {
            for (const auto& [jk, v] : params_.gauge()) {
                if (jk.first + jk.second != d) continue;
                phi_[ud][static_cast<size_t>(jk.second)] = v;
            }
        }
    }
    build_inner_layer(d);
    advance_powers(d);
    assemble_layer(d);
    layer_ = d;
    process_layer(d);
}

void StepSolver::advance_to(int target_layer) {
    if (target_layer > n_) throw config_error("advance_to beyond max_order");
    for (int d = layer_ + 1; d <= target_layer; ++d) advance_layer(d);
}

Coeff StepSolver::phi(int j, int k) const {
    if (j < 0 || k < 0 || j + k > layer_) return Coeff(p_);
    return phi_[static_cast<size_t>(j + k)][static_cast<size_t>(k)];
}

Coeff StepSolver::q(int idx) const {
    if (idx < 0 || idx > n_ + 1) return Coeff(p_);
    return q_[static_cast<size_t>(idx)];
}

GtpSolution StepSolver::snapshot() const {
    int qtop = layer_ % 2 == 1 ? layer_ + 1 : layer_;
    if (qtop < 2) qtop = 2;
    UniSeries qe(qtop, p_);
    qe.set(0, Coeff(1.0, p_));
    for (int i = 2; i <= qtop; i += 2) qe.set(i, q_[static_cast<size_t>(i)]);
    BiSeries phi(layer_ >= 1 ? layer_ : 1, p_);
    for (int d = 1; d <= layer_; ++d)
        for (int k = 0; k <= d; ++k)
            phi.set(d - k, k, phi_[static_cast<size_t>(d)][static_cast<size_t>(k)]);
    GtpSolution sol{std::move(qe), std::move(phi), log_, std::nullopt, layer_};
    return sol;
}

GtpSolution solve(const ProblemParams& params) {
    StepSolver solver(params);
    try {
        solver.advance_to(params.max_order());
    } catch (const resonance_error& err) {
        GtpSolution partial = solver.snapshot();
        partial.abort = ResonanceAbort{err.j, err.k, abs(linear_denominator(err.j, err.k, params))};
        return partial;
    }
    return solver.snapshot();
}

} // namespace gtp
