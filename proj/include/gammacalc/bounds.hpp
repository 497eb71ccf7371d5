#pragma once

#include <string>
#include <vector>

#include "gammacalc/rational.hpp"

namespace gammacalc {

enum class Sign { positive, negative, zero, nonpositive, nonnegative, unknown };

std::string sign_to_string(Sign s);
Sign sign_from_string(const std::string& s);
bool sign_satisfied(Sign s, const Rat& value);

/// A classified sign together with the exact value it claims to bound.
/// Construction enforces that the witness satisfies the claimed sign
/// whenever the claim is not unknown, so every emitted claim is
/// self-checking.
struct SignClaim {
    int r;
    std::string quantity;  // "gamma_r", "shifted_gamma_r", "alternating_sum"
    Sign claimed_sign;
    std::string hypothesis;
    Rat witness;

    SignClaim(int r, std::string quantity, Sign claimed_sign, std::string hypothesis, Rat witness);
};

/// gamma_r of B(t) = R(t+1), R the reciprocal of A, via the closed sum
/// r gamma_r = sum_k -k binom(2r-k-1, r-1) a_k over k = 0..d.
/// Requires 1 <= r <= d/2 and a of length d+1.
Rat shiftgam_gamma(const std::vector<Rat>& a, int d, int r);

/// Sign classification for gamma_r(B): nonpositive for odd r or 2r = d,
/// ratio-conditioned for even r. Requires nonnegative entries. Claims are
/// validated against the exact witness; a fired hypothesis whose printed
/// conclusion the witness contradicts is reported as unknown with a
/// discrepancy note rather than asserted.
SignClaim shiftgam_classify(const std::vector<Rat>& a, int d, int r);

/// gamma_r of B via the two-sum expansion (first sum k = 1..r, the
/// corrected upper limit). Requires 1 <= r <= d/2 and b of length d+1.
Rat ftypesum_gamma(const std::vector<Rat>& b, int d, int r);

/// The expansion with the printed upper limit k = 1..r-1; diagnostic only.
Rat ftypesum_gamma_printed(const std::vector<Rat>& b, int d, int r);

/// r*gamma_r - (-1)^r d binom(d-r-1, r-1) b_0, the quantity bounded by the
/// decreasing-sequence classification.
Rat boundgam_shifted_quantity(const std::vector<Rat>& b, int d, int r);

enum class Monotonicity { increasing, decreasing };

/// Guaranteed sign of sum (-1)^{k+start_parity} seq_k for a monotone
/// nonnegative sequence: (-1)^{N+start_parity} (weak) when increasing,
/// nonnegative/nonpositive by start parity when decreasing. Strictness is
/// upgraded only when the computed sum is nonzero. Monotonicity and
/// nonnegativity are verified; violations throw naming the index.
SignClaim alternating_sum_sign(const std::vector<Rat>& seq, Monotonicity mono, int start_parity = 0);

/// Hypothesis dispatch for sign classification of general coefficient
/// sequences: alternating signs, nonnegative decreasing (plain r <= d/3,
/// r = d/2, or the printed ratio form), nonnegative increasing with ratio.
/// Witness computed via ftypesum_gamma; unknown when nothing fires or a
/// fired conclusion is contradicted by the witness.
SignClaim boundgam_classify(const std::vector<Rat>& b, int d, int r);

}  // namespace gammacalc
