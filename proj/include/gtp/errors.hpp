#pragma once

#include <stdexcept>
#include <string>

namespace gtp {

// Bad input data or mismatched precisions/orders between operands.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Operation undefined on the given data (zero linear term, nonzero constant
// term in a formal composition, ...).
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// A linear denominator fell below the resonance threshold.  Carries the
// grid position that triggered it.
class resonance_error : public std::runtime_error {
public:
    resonance_error(int j, int k, const std::string& what)
        : std::runtime_error(what), j(j), k(k) {}
    int j;
    int k;
};

// Degenerate parameter configuration (q3 = 0 where the scaling needs it).
class degenerate_error : public std::runtime_error {
public:
    explicit degenerate_error(const std::string& what) : std::runtime_error(what) {}
};

// A quantity that must vanish by symmetry failed to do so.
class internal_error : public std::runtime_error {
public:
    explicit internal_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gtp
