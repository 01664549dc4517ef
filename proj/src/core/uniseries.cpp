#include "gtp/uniseries.hpp"

#include <utility>

namespace gtp {

namespace {

Parity mul_parity(Parity a, Parity b) {
    if (a == Parity::none || b == Parity::none) return Parity::none;
    return a == b ? Parity::even : Parity::odd;
}

Parity add_parity(Parity a, Parity b) { return a == b ? a : Parity::none; }

void require_same(const UniSeries& a, const UniSeries& b) {
    if (a.prec() != b.prec())
        throw config_error("series operands carry different precisions");
}

} // namespace

UniSeries::UniSeries(int order, prec_t prec, Parity parity) : prec_(prec), parity_(parity) {
    if (order < 0) throw config_error("series order must be nonnegative");
    c_.assign(static_cast<size_t>(order) + 1, Coeff(prec));
}

UniSeries UniSeries::from_coeffs(std::vector<Coeff> coeffs, Parity parity) {
    if (coeffs.empty()) throw config_error("series needs at least the constant term");
    UniSeries s;
    s.prec_ = coeffs[0].prec();
    s.parity_ = parity;
    s.c_ = std::move(coeffs);
    for (const Coeff& c : s.c_)
        if (c.prec() != s.prec_) throw config_error("mixed precisions in one series");
    s.check_parity();
    return s;
}

UniSeries UniSeries::from_reals(const std::vector<double>& coeffs, prec_t prec, Parity parity) {
    std::vector<Coeff> c;
    c.reserve(coeffs.size());
    for (double x : coeffs) c.emplace_back(x, prec);
    return from_coeffs(std::move(c), parity);
}

void UniSeries::check_parity() const {
    if (parity_ == Parity::none) return;
    int bad = parity_ == Parity::even ? 1 : 0;
    for (size_t i = 0; i < c_.size(); ++i)
        if (static_cast<int>(i % 2) == bad && !c_[i].is_zero())
            throw config_error("coefficient violates declared parity");
}

Coeff UniSeries::coeff(int i) const {
    if (i < 0 || i > order()) return Coeff(prec_);
    return c_[static_cast<size_t>(i)];
}

void UniSeries::set(int i, Coeff v) {
    if (i < 0 || i > order()) throw config_error("coefficient index out of range");
    if (v.prec() != prec_) throw config_error("coefficient precision mismatch");
    if (parity_ != Parity::none) {
        int bad = parity_ == Parity::even ? 1 : 0;
        if (i % 2 == bad && !v.is_zero())
            throw config_error("coefficient violates declared parity");
    }
    c_[static_cast<size_t>(i)] = std::move(v);
}

UniSeries UniSeries::truncated(int n) const {
    UniSeries s(n, prec_, parity_);
    for (int i = 0; i <= n && i <= order(); ++i) s.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)];
    return s;
}

UniSeries UniSeries::derivative() const {
    Parity p = parity_ == Parity::even ? Parity::odd
             : parity_ == Parity::odd  ? Parity::even
                                       : Parity::none;
    if (order() == 0) return UniSeries(0, prec_, p);
    UniSeries s(order() - 1, prec_, Parity::none);
    for (int i = 1; i <= order(); ++i) {
        Coeff v = c_[static_cast<size_t>(i)];
        v *= static_cast<long>(i);
        s.c_[static_cast<size_t>(i - 1)] = std::move(v);
    }
    s.parity_ = p;
    return s;
}

Coeff UniSeries::eval(const Coeff& t) const {
    Coeff acc = c_.back();
    for (int i = order() - 1; i >= 0; --i) {
        acc *= t;
        acc += c_[static_cast<size_t>(i)];
    }
    return acc;
}

Real UniSeries::eval_real(const Real& t) const {
    Real acc = c_.back().re();
    for (int i = order() - 1; i >= 0; --i) {
        acc *= t;
        acc += c_[static_cast<size_t>(i)].re();
    }
    return acc;
}

UniSeries operator+(const UniSeries& a, const UniSeries& b) {
    require_same(a, b);
    int n = a.order() < b.order() ? a.order() : b.order();
    UniSeries s(n, a.prec(), add_parity(a.parity_, b.parity_));
    for (int i = 0; i <= n; ++i) s.c_[static_cast<size_t>(i)] = a[i] + b[i];
    return s;
}

UniSeries operator-(const UniSeries& a, const UniSeries& b) {
    require_same(a, b);
    int n = a.order() < b.order() ? a.order() : b.order();
    UniSeries s(n, a.prec(), add_parity(a.parity_, b.parity_));
    for (int i = 0; i <= n; ++i) s.c_[static_cast<size_t>(i)] = a[i] - b[i];
    return s;
}

UniSeries operator*(const UniSeries& a, const UniSeries& b) {
    require_same(a, b);
    int n = a.order() < b.order() ? a.order() : b.order();
    UniSeries s(n, a.prec(), mul_parity(a.parity_, b.parity_));
    for (int i = 0; i <= n && i <= a.order(); ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= n && j <= b.order(); ++j) s.c_[static_cast<size_t>(i + j)] += a[i] * b[j];
    }
    return s;
}

UniSeries operator*(const UniSeries& a, const Coeff& s) {
    UniSeries r = a;
    for (auto& c : r.c_) c *= s;
    return r;
}

UniSeries compose(const UniSeries& f, const UniSeries& g) {
    require_same(f, g);
    if (!g.coeff(0).is_zero())
        throw domain_error("formal composition needs a zero constant term");
    int n = g.order();
    // Horner in the truncated series algebra.
    UniSeries acc(n, f.prec());
    int top = f.order() < n ? f.order() : n;
    acc.set(0, f.coeff(top));
    for (int i = top - 1; i >= 0; --i) {
        acc = acc * g;
        acc.set(0, acc.coeff(0) + f.coeff(i));
    }
    return acc;
}

UniSeries revert(const UniSeries& f) {
    if (!f.coeff(0).is_zero()) throw domain_error("revert needs f(0) = 0");
    if (f.coeff(1).is_zero()) throw domain_error("revert needs f'(0) != 0");
    int n = f.order();
    prec_t p = f.prec();
    UniSeries g(n, p);
    Coeff f1 = f.coeff(1);
    g.set(1, Coeff(1.0, p) / f1);
    // Coefficient-by-coefficient: the t^m error of f(g) is linear in g_m with
    // slope f'(0).
    for (int m = 2; m <= n; ++m) {
        Coeff err = compose(f.truncated(m), g.truncated(m)).coeff(m);
        g.set(m, Coeff(0.0, p) - err / f1);
    }
    if (f.parity() == Parity::odd) {
        // Inverse of an odd series is odd; snap roundoff-level even entries.
        UniSeries go(n, p, Parity::odd);
        for (int i = 1; i <= n; i += 2) go.set(i, g.coeff(i));
        return go;
    }
    return g;
}

UniSeries cos_offset_coeffs(const Real& alpha, int n, prec_t prec) {
    if (n < 0) throw config_error("order must be nonnegative");
    Real a(prec);
    mpfr_set(a.raw(), alpha.raw(), MPFR_RNDN);
    Real s(prec), c(prec);
    mpfr_sin_cos(s.raw(), c.raw(), a.raw(), MPFR_RNDN);
    // cos(x - alpha) = cos(alpha) cos x + sin(alpha) sin x; fold in the
    // factorial denominators with the usual four-cycle of signs.
    UniSeries out(n, prec);
    Real fac(1.0, prec);
    for (int j = 0; j <= n; ++j) {
        if (j > 0) fac *= static_cast<long>(j);
        Real base = (j % 2 == 0) ? c : s;
        if (j % 4 == 2 || j % 4 == 3) base = -base;
        out.set(j, Coeff(base / fac));
    }
    return out;
}

UniSeries exp_series(const UniSeries& u) {
    if (!u.coeff(0).is_zero()) throw domain_error("exp_series needs u(0) = 0");
    int n = u.order();
    prec_t p = u.prec();
    UniSeries g(n, p);
    g.set(0, Coeff(1.0, p));
    // g' = u' g  =>  n g_n = sum a u_a g_{n-a}.
    for (int m = 1; m <= n; ++m) {
        Coeff acc(p);
        for (int a = 1; a <= m; ++a) {
            Coeff t = u.coeff(a);
            t *= static_cast<long>(a);
            acc += t * g.coeff(m - a);
        }
        acc /= static_cast<long>(m);
        g.set(m, std::move(acc));
    }
    return g;
}

UniSeries trig_half_series(const UniSeries& b, TrigHalfKind kind, int n) {
    prec_t p = b.prec();
    Real b0 = b.coeff(0).re();
    Real half_b0 = b0 / 2L;
    Real s0(p), c0(p);
    mpfr_sin_cos(s0.raw(), c0.raw(), half_b0.raw(), MPFR_RNDN);
    const Real& norm = kind == TrigHalfKind::cos_norm ? c0 : s0;
    if (norm.is_zero())
        throw resonance_error(0, 0, "vanishing normalizer in trig_half_series");

    // exp(i (b(r) - b0) / 2) has zero constant term; the normalized cosine
    // and sine series are linear combinations of it and its conjugate.
    UniSeries u(n, p);
    for (int j = 1; j <= n; ++j) {
        if (j > b.order()) break;
        u.set(j, Coeff(Real(p), b.coeff(j).re() / 2L));
    }
    UniSeries e = exp_series(u); // exp(i(b-b0)/2)
    UniSeries out(n, p);
    for (int j = 0; j <= n; ++j) {
        const Coeff& ej = e[j];
        if (kind == TrigHalfKind::cos_norm) {
            // cos(b/2) = cos(b0/2) Re(e) - sin(b0/2) Im(e)
            out.set(j, Coeff((c0 * ej.re() - s0 * ej.im()) / norm));
        } else {
            // sin(b/2) = sin(b0/2) Re(e) + cos(b0/2) Im(e)
            out.set(j, Coeff((s0 * ej.re() + c0 * ej.im()) / norm));
        }
    }
    return out;
}

} // namespace gtp
