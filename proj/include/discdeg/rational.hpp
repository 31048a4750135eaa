#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace discdeg {

// Exact scalars. mpq_class keeps the canonical form we need
// (reduced, positive denominator) after every operation.
using Int = mpz_class;
using Rat = mpq_class;

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Exact integer extraction; throws if q has a nontrivial denominator.
inline Int to_integer(const Rat& q) {
    if (!is_integer(q))
        throw std::domain_error("to_integer: value " + q.get_str() + " is not an integer");
    return q.get_num();
}

inline Int factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Rat pow(const Rat& base, long exp) {
    if (exp < 0) throw std::domain_error("pow: negative exponent");
    Rat r = 1;
    Rat b = base;
    long e = exp;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline Int pow(const Int& base, long exp) {
    if (exp < 0) throw std::domain_error("pow: negative exponent");
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
    return r;
}

// Thrown when a computation contradicts an identity the theory guarantees
// (non-integer character sum, mu-indivisible degree, ...). Never caught
// internally: it signals a bug, not bad input.
class invariant_violation : public std::logic_error {
  public:
    explicit invariant_violation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace discdeg
