#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gammacalc/bounds.hpp"
#include "gammacalc/polynomial.hpp"
#include "gammacalc/rational.hpp"

namespace gammacalc {

/// The numbers a_k standing for A^k B^{d-k}, k = 0..d. Purely a rational
/// sequence; no geometry is computed.
struct IntersectionSequence {
    std::vector<Rat> a;
    int d;

    IntersectionSequence(std::vector<Rat> a, int d);
    /// a_k = a0 * rho^k, the constant-ratio family (divisors on projective
    /// space with a0 = B^d and rho = A/B).
    static IntersectionSequence geometric(const Rat& a0, const Rat& rho, int d);
};

/// q_k = d binom(d-1, k) (a_{k+1} - a_k), the numerator coefficients of the
/// derivative kernel; equals the coefficients of (1+u)V'(u) - d V(u).
struct QNumerator {
    std::vector<Rat> q;  // q_0..q_{d-1}

    explicit QNumerator(const IntersectionSequence& s);
};

/// V(u) = (uA+B)^d coefficientwise: [u^k] V = binom(d, k) a_k.
Polynomial volume_polynomial(const IntersectionSequence& s);

QNumerator volume_q(const IntersectionSequence& s);

/// gamma_r of the volume polynomial: (1/r) [u^{r-1}] Q(u)/(1+u)^{d-2r+1}.
/// Requires 1 <= r <= d/2.
Rat volume_gamma(const IntersectionSequence& s, int r);

/// Sign trichotomy for the constant-ratio family a_k = a0 rho^k.
/// a0_sign must be +1 or -1. Branches: q_0 = 0; rho <= 0; 0 < rho < 1 with
/// the explicit term-dominance check; rho > d-2r+1. Anything else is
/// unknown with the exact witness.
SignClaim constant_ratio_classify(const Rat& rho, int a0_sign, int d, int r);

/// Printed form of the large-ratio criterion for a general q sequence,
/// (d-k-1)/(k+1) * q_{k+1}/q_k > (d-r-k-1)/(r-k-1) over 1 <= k <= r-2,
/// evaluated verbatim; the witness is ground truth.
SignClaim volbd_ratio_classify(const IntersectionSequence& s, int r);

struct LogConcavityReport {
    bool log_concave = true;
    std::optional<int> first_violation_k;
    bool all_positive = false;
    /// For positive log-concave input: consecutive ratios a_{k+1}/a_k are
    /// non-increasing (always true then; asserted).
    bool ratios_non_increasing = false;
    /// Upper bound C on all ratios holds iff it holds on the first pair.
    std::optional<bool> upper_bound_all;
    std::optional<bool> upper_bound_first_pair;
    /// Lower bound C on all ratios holds iff it holds on the last pair.
    std::optional<bool> lower_bound_all;
    std::optional<bool> lower_bound_last_pair;
};

LogConcavityReport log_concave_check(const std::vector<Rat>& seq,
                                     const std::optional<Rat>& ratio_upper_bound = std::nullopt,
                                     const std::optional<Rat>& ratio_lower_bound = std::nullopt);

}  // namespace gammacalc
