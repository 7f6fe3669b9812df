#pragma once
#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace qkz {

using Int = mpz_class;
using Rat = mpq_class;

// binomial(n, k) with the lattice-path convention: 0 outside 0 <= k <= n.
inline Int binom(long n, long k) {
    if (n < 0) throw std::domain_error("binom: negative upper index");
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Int divexact_int(const Int& a, const Int& b, const char* ctx) {
    if (b == 0) throw std::domain_error(std::string(ctx) + ": division by zero");
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw std::domain_error(std::string(ctx) + ": inexact integer division");
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

} // namespace qkz
