#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gtp/biseries.hpp"
#include "gtp/uniseries.hpp"

namespace gtp {

struct Rotation {
    long p = 1;
    long q = 2;
};

// Input data of a generalized Treschev problem: normal form b(r^2) (b_{2j}
// stored as the r^j coefficient), the odd support coefficients (q1 = 0, q3
// first nontrivial), the orbit rotation number p/q <= 1/2, and the working
// precision/truncation.
class ProblemParams {
public:
    ProblemParams(UniSeries b, UniSeries q_odd, Rotation rotation, int max_order);

    const UniSeries& b() const { return b_; }
    const UniSeries& q_odd() const { return q_odd_; }
    Rotation rotation() const { return rotation_; }
    int max_order() const { return max_order_; }
    prec_t prec() const { return b_.prec(); }

    Real b0() const { return b_.coeff(0).re(); }
    Real alpha() const; // pi/2 - pi p/q
    Coeff lambda() const;
    Real cos_alpha() const { return cos(alpha()); }
    Real sin_alpha() const { return sin(alpha()); }
    Real cos_half_b0() const { return cos(b0() / 2L); }
    Real sin_half_b0() const { return sin(b0() / 2L); }

    // q_{2j+1}; index is the support-series exponent.
    Real q_odd_coeff(int idx) const { return q_odd_.coeff(idx).re(); }

    const Real& resonance_threshold() const { return resonance_threshold_; }
    void set_resonance_threshold(Real t) { resonance_threshold_ = std::move(t); }

    // Test hook: values assigned to the gauge positions |j-k| = 1, j+k > 1
    // (kept at zero by convention; any choice must leave every q unchanged).
    const std::map<std::pair<int, int>, Coeff>& gauge() const { return gauge_; }
    void set_gauge(int j, int k, Coeff v);

    int threads() const { return threads_; }
    void set_threads(int n) { threads_ = n < 1 ? 1 : n; }

private:
    UniSeries b_;
    UniSeries q_odd_;
    Rotation rotation_;
    int max_order_;
    Real resonance_threshold_;
    std::map<std::pair<int, int>, Coeff> gauge_;
    int threads_ = 1;
};

struct ResonanceLogEntry {
    int j;
    int k;
    Real magnitude;
};

struct ResonanceAbort {
    int j;
    int k;
    Real magnitude;
};

// Reconstructed solution: the even support coefficients (q0 = 1 included)
// and the conjugacy table phi (with phi_{1,0} = phi_{0,1} = 1 included).
struct GtpSolution {
    UniSeries q_even;
    BiSeries phi;
    std::vector<ResonanceLogEntry> resonance_log;
    std::optional<ResonanceAbort> abort;
    int solved_layers = 0;

    bool complete() const { return !abort.has_value(); }
    Real q(int idx) const { return q_even.coeff(idx).re(); }
};

} // namespace gtp
