#pragma once

#include <vector>

#include "gtp/coeff.hpp"
#include "gtp/uniseries.hpp"

namespace gtp {

// Truncated bivariate series with total-degree (triangular) truncation:
// coefficients phi_{j,k} for j+k <= order, stored layer-major.  Missing
// entries read as zero.
class BiSeries {
public:
    BiSeries(int order, prec_t prec);

    int order() const { return order_; }
    prec_t prec() const { return prec_; }

    Coeff at(int j, int k) const;
    const Coeff& ref(int j, int k) const { return t_[idx(j, k)]; }
    void set(int j, int k, Coeff v);
    void add_to(int j, int k, const Coeff& v);

    bool constant_term_zero() const { return t_[0].is_zero(); }

    BiSeries truncated(int order) const;

    Coeff eval(const Coeff& z, const Coeff& w) const;

    friend BiSeries operator+(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator-(const BiSeries& a, const BiSeries& b);
    // Truncated product; result order = min of the operand orders.
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator*(const BiSeries& a, const Coeff& s);

private:
    static size_t offset(int d) { return static_cast<size_t>(d) * (d + 1) / 2; }
    size_t idx(int j, int k) const { return offset(j + k) + static_cast<size_t>(k); }

    int order_;
    prec_t prec_;
    std::vector<Coeff> t_;
};

// f(g(z,w)) truncated to g's order; g must have zero constant term.
BiSeries compose_bi_into_uni(const UniSeries& f, const BiSeries& g);

} // namespace gtp
