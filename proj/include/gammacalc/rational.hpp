#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace gammacalc {

/// Exact rational scalar used for every coefficient in the library.
using Rat = mpq_class;
using Int = mpz_class;

/// Parses "p", "-p", "p/q" or "a.b" decimal strings; also used by the JSON layer.
Rat rat_from_string(const std::string& s);

/// Lowest-terms rendering: "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& q);

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/// mpq_class(num, den) does not canonicalize; every ratio construction in
/// the library goes through here so comparisons stay sound.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0)
        throw std::domain_error("rational: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

inline int sign_of(const Rat& q) { return sgn(q); }

/// binom(n, k) for n >= 0, zero when k < 0 or k > n.
Int binomial(long n, long k);

/// Generalized binomial for any integer upper argument:
/// binom(x, k) = x(x-1)...(x-k+1)/k! for k >= 0, and 0 for k < 0.
/// Needed at negative upper arguments, e.g. binom(-1, 0) = 1, binom(-2, 1) = -2.
Int binomial_general(long x, long k);

Int factorial(long n);

}  // namespace gammacalc
