#include "gtp/biseries.hpp"

namespace gtp {

BiSeries::BiSeries(int order, prec_t prec) : order_(order), prec_(prec) {
    if (order < 0) throw config_error("series order must be nonnegative");
    t_.assign(offset(order + 1), Coeff(prec));
}

Coeff BiSeries::at(int j, int k) const {
    if (j < 0 || k < 0 || j + k > order_) return Coeff(prec_);
    return t_[idx(j, k)];
}

void BiSeries::set(int j, int k, Coeff v) {
    if (j < 0 || k < 0 || j + k > order_) throw config_error("bivariate index out of range");
    if (v.prec() != prec_) throw config_error("coefficient precision mismatch");
    t_[idx(j, k)] = std::move(v);
}

void BiSeries::add_to(int j, int k, const Coeff& v) {
    if (j < 0 || k < 0 || j + k > order_) throw config_error("bivariate index out of range");
    t_[idx(j, k)] += v;
}

BiSeries BiSeries::truncated(int order) const {
    BiSeries s(order, prec_);
    int top = order < order_ ? order : order_;
    for (int d = 0; d <= top; ++d)
        for (int k = 0; k <= d; ++k) s.t_[s.idx(d - k, k)] = t_[idx(d - k, k)];
    return s;
}

Coeff BiSeries::eval(const Coeff& z, const Coeff& w) const {
    // Powers of w per layer, layers summed with running powers of z.
    Coeff acc(prec_);
    std::vector<Coeff> wpow(static_cast<size_t>(order_) + 1, Coeff(1.0, prec_));
    for (int k = 1; k <= order_; ++k) wpow[static_cast<size_t>(k)] = wpow[static_cast<size_t>(k - 1)] * w;
    for (int d = 0; d <= order_; ++d) {
        Coeff zp(1.0, prec_);
        for (int k = d; k >= 0; --k) {
            // term (j, k) with j = d - k; iterate so z powers build up
            acc += t_[idx(d - k, k)] * zp * wpow[static_cast<size_t>(k)];
            zp = k > 0 ? zp * z : zp;
        }
    }
    return acc;
}

BiSeries operator+(const BiSeries& a, const BiSeries& b) {
    if (a.prec_ != b.prec_) throw config_error("series operands carry different precisions");
    int n = a.order_ < b.order_ ? a.order_ : b.order_;
    BiSeries s(n, a.prec_);
    for (size_t i = 0; i < s.t_.size(); ++i) s.t_[i] = a.t_[i] + b.t_[i];
    return s;
}

BiSeries operator-(const BiSeries& a, const BiSeries& b) {
    if (a.prec_ != b.prec_) throw config_error("series operands carry different precisions");
    int n = a.order_ < b.order_ ? a.order_ : b.order_;
    BiSeries s(n, a.prec_);
    for (size_t i = 0; i < s.t_.size(); ++i) s.t_[i] = a.t_[i] - b.t_[i];
    return s;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    if (a.prec_ != b.prec_) throw config_error("series operands carry different precisions");
    int n = a.order_ < b.order_ ? a.order_ : b.order_;
    BiSeries s(n, a.prec_);
    for (int da = 0; da <= n && da <= a.order_; ++da) {
        for (int ka = 0; ka <= da; ++ka) {
            const Coeff& ca = a.t_[a.idx(da - ka, ka)];
            if (ca.is_zero()) continue;
            for (int db = 0; da + db <= n && db <= b.order_; ++db)
                for (int kb = 0; kb <= db; ++kb) {
                    const Coeff& cb = b.t_[b.idx(db - kb, kb)];
                    if (cb.is_zero()) continue;
                    s.t_[s.idx(da + db - ka - kb, ka + kb)] += ca * cb;
                }
        }
    }
    return s;
}

BiSeries operator*(const BiSeries& a, const Coeff& s) {
    BiSeries r = a;
    for (auto& c : r.t_) c *= s;
    return r;
}

BiSeries compose_bi_into_uni(const UniSeries& f, const BiSeries& g) {
    if (f.prec() != g.prec()) throw config_error("series operands carry different precisions");
    if (!g.constant_term_zero())
        throw domain_error("formal composition needs a zero constant term");
    int n = g.order();
    BiSeries acc(n, f.prec());
    int top = f.order() < n ? f.order() : n;
    acc.set(0, 0, f.coeff(top));
    for (int i = top - 1; i >= 0; --i) {
        acc = acc * g;
        acc.add_to(0, 0, f.coeff(i));
    }
    return acc;
}

} // namespace gtp
