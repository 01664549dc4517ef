#pragma once

#include <mpfr.h>

#include <cstdlib>
#include <string>
#include <utility>

#include "gtp/errors.hpp"

namespace gtp {

using prec_t = mpfr_prec_t;

// Process-wide default precision in bits.  The GTPLAB_PRECISION environment
// variable overrides the built-in 384 at startup; explicit precisions passed
// to constructors always win.
prec_t default_precision();
void set_default_precision(prec_t bits);

// Arbitrary-precision real number.  Thin value-semantics wrapper over mpfr_t
// with round-to-nearest everywhere; results carry max(operand precisions).
class Real {
public:
    Real() : Real(default_precision()) {}
    explicit Real(prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(double x, prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
    Real(long x, prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, x, MPFR_RNDN); }
    Real(unsigned long x, prec_t prec) { mpfr_init2(v_, prec); mpfr_set_ui(v_, x, MPFR_RNDN); }

    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept {
        v_[0] = o.v_[0];
        mpfr_init2(o.v_, MPFR_PREC_MIN);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real from_string(const std::string& s, prec_t prec) {
        Real r(prec);
        if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw config_error("unparsable real literal: " + s);
        return r;
    }

    prec_t prec() const { return mpfr_get_prec(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    // Decimal string with enough digits to round-trip at this precision.
    std::string to_string() const;

    Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(long s) { mpfr_mul_si(v_, v_, s, MPFR_RNDN); return *this; }
    Real& operator/=(long s) { mpfr_div_si(v_, v_, s, MPFR_RNDN); return *this; }

    Real operator-() const { Real r(prec()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

    friend Real operator+(const Real& a, const Real& b) { return bin(a, b, mpfr_add); }
    friend Real operator-(const Real& a, const Real& b) { return bin(a, b, mpfr_sub); }
    friend Real operator*(const Real& a, const Real& b) { return bin(a, b, mpfr_mul); }
    friend Real operator/(const Real& a, const Real& b) { return bin(a, b, mpfr_div); }

    friend Real operator*(const Real& a, long s) { Real r(a); r *= s; return r; }
    friend Real operator*(long s, const Real& a) { return a * s; }
    friend Real operator/(const Real& a, long s) { Real r(a); r /= s; return r; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }

private:
    template <typename F>
    static Real bin(const Real& a, const Real& b, F f) {
        Real r(a.prec() > b.prec() ? a.prec() : b.prec());
        f(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    mpfr_t v_;
};

inline Real abs(const Real& x) { Real r(x.prec()); mpfr_abs(r.raw(), x.raw(), MPFR_RNDN); return r; }
inline Real sqrt(const Real& x) { Real r(x.prec()); mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN); return r; }
inline Real sin(const Real& x) { Real r(x.prec()); mpfr_sin(r.raw(), x.raw(), MPFR_RNDN); return r; }
inline Real cos(const Real& x) { Real r(x.prec()); mpfr_cos(r.raw(), x.raw(), MPFR_RNDN); return r; }
inline Real tan(const Real& x) { Real r(x.prec()); mpfr_tan(r.raw(), x.raw(), MPFR_RNDN); return r; }
inline Real exp(const Real& x) { Real r(x.prec()); mpfr_exp(r.raw(), x.raw(), MPFR_RNDN); return r; }
inline Real log(const Real& x) { Real r(x.prec()); mpfr_log(r.raw(), x.raw(), MPFR_RNDN); return r; }
inline Real hypot(const Real& a, const Real& b) {
    Real r(a.prec() > b.prec() ? a.prec() : b.prec());
    mpfr_hypot(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
inline Real pow_si(const Real& x, long n) {
    Real r(x.prec());
    mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
    return r;
}
inline Real lgamma(const Real& x) {
    Real r(x.prec());
    int sgn = 0;
    mpfr_lgamma(r.raw(), &sgn, x.raw(), MPFR_RNDN);
    return r;
}

inline Real pi(prec_t prec) { Real r(prec); mpfr_const_pi(r.raw(), MPFR_RNDN); return r; }
inline Real factorial(unsigned long n, prec_t prec) {
    Real r(prec);
    mpfr_fac_ui(r.raw(), n, MPFR_RNDN);
    return r;
}
// Binomial coefficient, exact in the integers then rounded once.
Real binomial(unsigned long n, unsigned long k, prec_t prec);

// 2^(-prec/2), the working tolerance at a given precision.
inline Real tolerance(prec_t prec) {
    Real r(1.0, prec);
    mpfr_mul_2si(r.raw(), r.raw(), -static_cast<long>(prec / 2), MPFR_RNDN);
    return r;
}

} // namespace gtp
