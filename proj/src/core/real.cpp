#include "gtp/real.hpp"

#include <gmp.h>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstring>

namespace gtp {

namespace {

prec_t initial_precision() {
    if (const char* env = std::getenv("GTPLAB_PRECISION")) {
        long bits = std::strtol(env, nullptr, 10);
        if (bits >= 64) return static_cast<prec_t>(bits);
    }
    return 384;
}

std::atomic<prec_t> g_default_prec{initial_precision()};

} // namespace

prec_t default_precision() { return g_default_prec.load(); }

void set_default_precision(prec_t bits) {
    if (bits < 64) throw config_error("precision must be at least 64 bits");
    g_default_prec.store(bits);
}

std::string Real::to_string() const {
    // ceil(prec * log10(2)) + 2 digits guarantees a lossless decimal round
    // trip at the same precision.
    size_t digits = static_cast<size_t>(std::ceil(prec() * 0.3010299956639812)) + 2;
    char* s = nullptr;
    if (mpfr_asprintf(&s, "%.*Re", static_cast<int>(digits - 1), v_) < 0)
        throw internal_error("mpfr_asprintf failed");
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

Real binomial(unsigned long n, unsigned long k, prec_t prec) {
    Real r(prec);
    if (k > n) return r;
    mpz_t b;
    mpz_init(b);
    mpz_bin_uiui(b, n, k);
    mpfr_set_z(r.raw(), b, MPFR_RNDN);
    mpz_clear(b);
    return r;
}

} // namespace gtp
