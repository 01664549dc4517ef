#pragma once

#include <vector>

#include "gtp/problem.hpp"

namespace gtp {

// Incremental solver for the main functional equation.  All series enter as
// homogeneous layers in total degree; each step fills one layer: the even
// layers determine phi of that order, the odd ones first q_{d+1} from the
// z^{(d+1)/2} w^{(d-1)/2} error and then the remaining phi of order d.
//
// Compositions never recompose: powers of the inner series advance one layer
// at a time, and solved unknowns are patched into the top layer only (higher
// powers of a series with zero constant term cannot see their own top layer).
class StepSolver {
public:
    explicit StepSolver(const ProblemParams& params);

    // Process layers (current, target]; throws resonance_error / internal_error.
    void advance_to(int target_layer);
    int layer() const { return layer_; }

    // z^j w^k error coefficient of the assembled equation in the current
    // state (valid once layer() >= j+k).
    Coeff error_at(int j, int k) const;

    Coeff phi(int j, int k) const;
    Coeff q(int idx) const;

    GtpSolution snapshot() const;
    const std::vector<ResonanceLogEntry>& log() const { return log_; }

private:
    using HLayer = std::vector<Coeff>;

    void advance_layer(int d);
    void build_inner_layer(int d);
    void advance_powers(int d);
    void assemble_layer(int d);
    void process_layer(int d);
    void patch_phi(int j, int k, const Coeff& v);
    void patch_q(int idx, const Coeff& v);

    HLayer zeros(int d) const { return HLayer(static_cast<size_t>(d) + 1, Coeff(p_)); }

    ProblemParams params_;
    prec_t p_;
    int n_;
    int layer_ = 0;

    // cos(l b(rho)/2), sin(l b(rho)/2) coefficient tables: [l][a], real.
    std::vector<std::vector<Real>> cosl_, sinl_;

    std::vector<HLayer> phi_;           // phi_[d][k] = phi_{d-k,k}
    std::vector<Coeff> q_;              // support coefficients, index 0..n_+1
    std::vector<HLayer> A_, C_;         // twisted inner series
    std::vector<std::vector<HLayer>> powA_; // powA_[beta][d], beta >= 2
    std::vector<HLayer> qA_, qpA_;      // q(A), q'(A)
    std::vector<HLayer> g_, h_;         // cos(C - alpha), sin(C - alpha)
    std::vector<HLayer> P_, Q_;         // q'(A) g, q(A) h

    Real cos_alpha_, sin_alpha_;
    Coeff q2_scaled_; // 2 q2, cached for phi patches

    std::vector<ResonanceLogEntry> log_;
};

} // namespace gtp
