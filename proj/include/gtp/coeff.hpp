#pragma once

#include "gtp/real.hpp"

namespace gtp {

// Element of the coefficient field: arbitrary-precision complex, both
// components at the same precision.
class Coeff {
public:
    Coeff() : re_(default_precision()), im_(default_precision()) {}
    explicit Coeff(prec_t prec) : re_(prec), im_(prec) {}
    Coeff(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {
        if (re_.prec() != im_.prec())
            throw config_error("Coeff components carry different precisions");
    }
    explicit Coeff(Real re) : re_(std::move(re)), im_(re_.prec()) {}
    Coeff(double re, prec_t prec) : re_(re, prec), im_(prec) {}
    Coeff(double re, double im, prec_t prec) : re_(re, prec), im_(im, prec) {}
    Coeff(long re, prec_t prec) : re_(re, prec), im_(prec) {}

    static Coeff i_unit(prec_t prec) { return Coeff(Real(0.0, prec), Real(1.0, prec)); }

    const Real& re() const { return re_; }
    const Real& im() const { return im_; }
    Real& re() { return re_; }
    Real& im() { return im_; }

    prec_t prec() const { return re_.prec(); }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    Coeff& operator+=(const Coeff& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Coeff& operator-=(const Coeff& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Coeff& operator*=(const Coeff& o) { *this = *this * o; return *this; }
    Coeff& operator*=(const Real& s) { re_ *= s; im_ *= s; return *this; }
    Coeff& operator*=(long s) { re_ *= s; im_ *= s; return *this; }
    Coeff& operator/=(long s) { re_ /= s; im_ /= s; return *this; }
    Coeff& operator/=(const Real& s) { re_ /= s; im_ /= s; return *this; }

    Coeff operator-() const { return Coeff(-re_, -im_); }

    friend Coeff operator+(const Coeff& a, const Coeff& b) { return Coeff(a.re_ + b.re_, a.im_ + b.im_); }
    friend Coeff operator-(const Coeff& a, const Coeff& b) { return Coeff(a.re_ - b.re_, a.im_ - b.im_); }
    friend Coeff operator*(const Coeff& a, const Coeff& b) {
        return Coeff(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend Coeff operator*(const Coeff& a, const Real& s) { return Coeff(a.re_ * s, a.im_ * s); }
    friend Coeff operator*(const Real& s, const Coeff& a) { return a * s; }
    friend Coeff operator*(const Coeff& a, long s) { return Coeff(a.re_ * s, a.im_ * s); }
    friend Coeff operator*(long s, const Coeff& a) { return a * s; }
    friend Coeff operator/(const Coeff& a, const Coeff& b) {
        Real n = b.re_ * b.re_ + b.im_ * b.im_;
        if (n.is_zero()) throw domain_error("complex division by zero");
        return Coeff((a.re_ * b.re_ + a.im_ * b.im_) / n, (a.im_ * b.re_ - a.re_ * b.im_) / n);
    }
    friend Coeff operator/(const Coeff& a, const Real& s) { return Coeff(a.re_ / s, a.im_ / s); }
    friend Coeff operator/(const Coeff& a, long s) { return Coeff(a.re_ / s, a.im_ / s); }

    friend bool operator==(const Coeff& a, const Coeff& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

private:
    Real re_, im_;
};

inline Real abs(const Coeff& z) { return hypot(z.re(), z.im()); }
inline Coeff conj(const Coeff& z) { return Coeff(z.re(), -z.im()); }

// z^n for integer n (n may be negative when z != 0).
Coeff pow_si(const Coeff& z, long n);

// e^{i theta} for real theta.
inline Coeff unit_circle(const Real& theta) {
    Real s(theta.prec()), c(theta.prec());
    mpfr_sin_cos(s.raw(), c.raw(), theta.raw(), MPFR_RNDN);
    return Coeff(c, s);
}

} // namespace gtp
