#include "gtp/coeff.hpp"

namespace gtp {

Coeff pow_si(const Coeff& z, long n) {
    prec_t p = z.prec();
    if (n == 0) return Coeff(1.0, p);
    bool invert = n < 0;
    unsigned long e = invert ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    Coeff base = z;
    Coeff acc(1.0, p);
    while (e != 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    if (invert) return Coeff(1.0, p) / acc;
    return acc;
}

} // namespace gtp
