#pragma once

#include <vector>

#include "gtp/coeff.hpp"

namespace gtp {

enum class Parity { none, even, odd };

// Truncated univariate formal power series, coefficients 0..order, all at one
// precision.  A declared parity is a structural invariant: the complementary
// coefficients must be exactly zero.
class UniSeries {
public:
    UniSeries(int order, prec_t prec, Parity parity = Parity::none);
    static UniSeries from_coeffs(std::vector<Coeff> coeffs, Parity parity = Parity::none);
    static UniSeries from_reals(const std::vector<double>& coeffs, prec_t prec,
                                Parity parity = Parity::none);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    prec_t prec() const { return prec_; }
    Parity parity() const { return parity_; }

    const Coeff& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    // Coefficient with out-of-range indices reading as zero.
    Coeff coeff(int i) const;
    void set(int i, Coeff v);

    UniSeries truncated(int order) const;
    UniSeries derivative() const;

    Coeff eval(const Coeff& t) const;
    Real eval_real(const Real& t) const;

    friend UniSeries operator+(const UniSeries& a, const UniSeries& b);
    friend UniSeries operator-(const UniSeries& a, const UniSeries& b);
    // Truncated Cauchy product; result order = min of the operand orders.
    friend UniSeries operator*(const UniSeries& a, const UniSeries& b);
    friend UniSeries operator*(const UniSeries& a, const Coeff& s);

private:
    UniSeries() = default;
    void check_parity() const;

    std::vector<Coeff> c_;
    prec_t prec_ = 0;
    Parity parity_ = Parity::none;
};

// f(g) for univariate f, g with g(0) = 0.
UniSeries compose(const UniSeries& f, const UniSeries& g);

// Compositional inverse of f with f(0) = 0, f'(0) != 0, to f's order.
UniSeries revert(const UniSeries& f);

// Maclaurin coefficients c_j of cos(x - alpha), j = 0..n.
UniSeries cos_offset_coeffs(const Real& alpha, int n, prec_t prec);

enum class TrigHalfKind { cos_norm, sin_norm };

// Coefficients of cos(b(r)/2)/cos(b0/2) (resp. sin(.)/sin(b0/2)) as a series
// in r, normalized so the constant term is exactly 1.  b holds b_{2j} as the
// coefficient of r^j.
UniSeries trig_half_series(const UniSeries& b, TrigHalfKind kind, int n);

// exp(u) for a series u with u(0) = 0, via the first-order recurrence.
UniSeries exp_series(const UniSeries& u);

} // namespace gtp
