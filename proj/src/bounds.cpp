#include "gammacalc/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace gammacalc {

std::string sign_to_string(Sign s) {
    switch (s) {
        case Sign::positive: return "positive";
        case Sign::negative: return "negative";
        case Sign::zero: return "zero";
        case Sign::nonpositive: return "nonpositive";
        case Sign::nonnegative: return "nonnegative";
        case Sign::unknown: return "unknown";
    }
    return "unknown";
}

Sign sign_from_string(const std::string& s) {
    if (s == "positive") return Sign::positive;
    if (s == "negative") return Sign::negative;
    if (s == "zero") return Sign::zero;
    if (s == "nonpositive") return Sign::nonpositive;
    if (s == "nonnegative") return Sign::nonnegative;
    if (s == "unknown") return Sign::unknown;
    throw std::invalid_argument("bad sign string '" + s + "'");
}

bool sign_satisfied(Sign s, const Rat& value) {
    switch (s) {
        case Sign::positive: return value > 0;
        case Sign::negative: return value < 0;
        case Sign::zero: return value == 0;
        case Sign::nonpositive: return value <= 0;
        case Sign::nonnegative: return value >= 0;
        case Sign::unknown: return true;
    }
    return false;
}

SignClaim::SignClaim(int r_, std::string quantity_, Sign claimed_sign_, std::string hypothesis_, Rat witness_)
    : r(r_),
      quantity(std::move(quantity_)),
      claimed_sign(claimed_sign_),
      hypothesis(std::move(hypothesis_)),
      witness(std::move(witness_)) {
    if (claimed_sign != Sign::unknown && !sign_satisfied(claimed_sign, witness))
        throw std::logic_error("sign claim '" + sign_to_string(claimed_sign) + "' not satisfied by witness " +
                               rat_to_string(witness));
}

namespace {

Sign upgrade_if_nonzero(Sign weak, const Rat& witness) {
    if (witness == 0)
        return weak;
    if (weak == Sign::nonnegative)
        return Sign::positive;
    if (weak == Sign::nonpositive)
        return Sign::negative;
    return weak;
}

/// Emit the claim if the witness bears it out; otherwise surface the
/// discrepancy as unknown instead of constructing an invalid claim.
SignClaim guarded_claim(int r, std::string quantity, Sign weak, std::string hypothesis, Rat witness) {
    if (!sign_satisfied(weak, witness))
        return SignClaim(r, std::move(quantity), Sign::unknown,
                         hypothesis + " fired, but the witness contradicts the printed conclusion", std::move(witness));
    const Sign upgraded = upgrade_if_nonzero(weak, witness);
    return SignClaim(r, std::move(quantity), upgraded, std::move(hypothesis), std::move(witness));
}

void check_r_range(int d, int r, const char* who) {
    if (r < 1 || 2 * r > d)
        throw std::out_of_range(std::string(who) + ": requires 1 <= r <= d/2");
}

void check_length(const std::vector<Rat>& v, int d, const char* who) {
    if (static_cast<int>(v.size()) != d + 1)
        throw std::invalid_argument(std::string(who) + ": sequence must have d+1 entries");
}

}  // namespace

Rat shiftgam_gamma(const std::vector<Rat>& a, int d, int r) {
    check_r_range(d, r, "shiftgam_gamma");
    check_length(a, d, "shiftgam_gamma");
    Rat sum(0);
    for (int k = 0; k <= d; ++k) {
        if (a[k] == 0 || k == 0)
            continue;
        sum += Rat(-k) * Rat(binomial_general(2L * r - k - 1, r - 1)) * a[k];
    }
    return sum / Rat(r);
}

SignClaim shiftgam_classify(const std::vector<Rat>& a, int d, int r) {
    check_r_range(d, r, "shiftgam_classify");
    check_length(a, d, "shiftgam_classify");
    for (int k = 0; k <= d; ++k)
        if (a[k] < 0)
            throw std::domain_error("shiftgam_classify: hypothesis violated, negative entry a_" +
                                    std::to_string(k));
    Rat witness = shiftgam_gamma(a, d, r);
    if (r % 2 == 1)
        return guarded_claim(r, "gamma_r", Sign::nonpositive, "odd r", std::move(witness));
    if (2 * r == d)
        return guarded_claim(r, "gamma_r", Sign::nonpositive, "r = d/2", std::move(witness));
    // even r: a_{k+2r-1}/a_k >= k binom(2r-k-1, r-1) / ((k+2r-1) binom(k+r-1, r-1))
    const int kmax = std::min(2 * r - 1, d - 2 * r + 1);
    for (int k = 0; k <= kmax; ++k) {
        if (a[k] == 0)
            return SignClaim(r, "gamma_r", Sign::unknown,
                             "even-r ratio hypothesis not evaluable: a_" + std::to_string(k) + " = 0",
                             std::move(witness));
        const Rat lhs = a[k + 2 * r - 1] / a[k];
        const Rat rhs = make_rat(Int(k) * binomial_general(2L * r - k - 1, r - 1),
                            Int(k + 2 * r - 1) * binomial(k + r - 1, r - 1));
        if (lhs < rhs)
            return SignClaim(r, "gamma_r", Sign::unknown,
                             "even-r ratio hypothesis fails at k = " + std::to_string(k), std::move(witness));
    }
    return guarded_claim(r, "gamma_r", Sign::nonpositive, "even-r ratio condition", std::move(witness));
}

namespace {

Rat ftypesum_impl(const std::vector<Rat>& b, int d, int r, bool corrected_limit) {
    const int first_sum_top = corrected_limit ? r : r - 1;
    Rat acc(0);
    for (int k = 1; k <= first_sum_top; ++k) {
        if (b[k] == 0)
            continue;
        const int s = (k % 2 == 0) ? 1 : -1;
        acc += Rat(s * k) * Rat(binomial_general(static_cast<long>(d) - r - k - 1, r - k)) * b[k];
    }
    for (int k = 0; k <= r - 1; ++k) {
        if (b[k] == 0)
            continue;
        const int s = (k % 2 == 0) ? 1 : -1;
        acc += Rat(s * d) * Rat(binomial_general(static_cast<long>(d) - r - k - 1, r - k - 1)) * b[k];
    }
    if (r % 2 == 1)
        acc = -acc;
    return acc / Rat(r);
}

}  // namespace

Rat ftypesum_gamma(const std::vector<Rat>& b, int d, int r) {
    check_r_range(d, r, "ftypesum_gamma");
    check_length(b, d, "ftypesum_gamma");
    return ftypesum_impl(b, d, r, true);
}

Rat ftypesum_gamma_printed(const std::vector<Rat>& b, int d, int r) {
    check_r_range(d, r, "ftypesum_gamma_printed");
    check_length(b, d, "ftypesum_gamma_printed");
    return ftypesum_impl(b, d, r, false);
}

Rat boundgam_shifted_quantity(const std::vector<Rat>& b, int d, int r) {
    check_r_range(d, r, "boundgam_shifted_quantity");
    check_length(b, d, "boundgam_shifted_quantity");
    const int s = (r % 2 == 0) ? 1 : -1;
    return Rat(r) * ftypesum_gamma(b, d, r) - Rat(s * d) * Rat(binomial(d - r - 1, r - 1)) * b[0];
}

SignClaim alternating_sum_sign(const std::vector<Rat>& seq, Monotonicity mono, int start_parity) {
    if (seq.empty())
        throw std::invalid_argument("alternating_sum_sign: empty sequence");
    if (start_parity != 0 && start_parity != 1)
        throw std::invalid_argument("alternating_sum_sign: start parity must be 0 or 1");
    const int n = static_cast<int>(seq.size()) - 1;
    for (int k = 0; k <= n; ++k)
        if (seq[k] < 0)
            throw std::domain_error("alternating_sum_sign: negative entry at index " + std::to_string(k));
    for (int k = 0; k < n; ++k) {
        const bool ok = mono == Monotonicity::increasing ? seq[k] <= seq[k + 1] : seq[k] >= seq[k + 1];
        if (!ok)
            throw std::domain_error("alternating_sum_sign: monotonicity violated between indices " +
                                    std::to_string(k) + " and " + std::to_string(k + 1));
    }
    Rat sum(0);
    for (int k = 0; k <= n; ++k)
        sum += ((k + start_parity) % 2 == 0) ? seq[k] : -seq[k];
    Sign weak;
    std::string hyp;
    if (mono == Monotonicity::increasing) {
        weak = ((n + start_parity) % 2 == 0) ? Sign::nonnegative : Sign::nonpositive;
        hyp = "increasing sequence, sign (-1)^N";
    } else {
        weak = (start_parity == 0) ? Sign::nonnegative : Sign::nonpositive;
        hyp = "decreasing sequence";
    }
    return SignClaim(n, "alternating_sum", upgrade_if_nonzero(weak, sum), hyp, sum);
}

SignClaim boundgam_classify(const std::vector<Rat>& b, int d, int r) {
    check_r_range(d, r, "boundgam_classify");
    check_length(b, d, "boundgam_classify");
    const Rat witness = ftypesum_gamma(b, d, r);

    // part 1: strict sign alternation sgn(b_k) = (-1)^k
    bool alternating = true;
    for (int k = 0; k <= d && alternating; ++k)
        alternating = (k % 2 == 0) ? b[k] > 0 : b[k] < 0;
    if (alternating) {
        const Sign weak = (r % 2 == 0) ? Sign::nonnegative : Sign::nonpositive;
        return guarded_claim(r, "gamma_r", weak, "alternating signs sgn(b_k) = (-1)^k", witness);
    }

    bool nonneg = true;
    for (int k = 0; k <= d; ++k)
        nonneg = nonneg && b[k] >= 0;
    if (!nonneg)
        return SignClaim(r, "gamma_r", Sign::unknown, "no hypothesis applies", witness);

    // decreasing / increasing over the indices the sums consume
    bool decreasing = true, increasing = true;
    for (int k = 1; k < r; ++k) {
        decreasing = decreasing && b[k] >= b[k + 1];
        increasing = increasing && b[k] <= b[k + 1];
    }

    if (decreasing) {
        if (2 * r == d) {
            const Sign weak = (r % 2 == 0) ? Sign::nonnegative : Sign::nonpositive;
            return guarded_claim(r, "gamma_r", weak, "nonnegative decreasing, r = d/2", witness);
        }
        if (3 * r <= d) {
            const Sign weak = (r % 2 == 0) ? Sign::nonpositive : Sign::nonnegative;  // (-1)^{r+1}
            return guarded_claim(r, "shifted_gamma_r", weak, "nonnegative decreasing, r <= d/3",
                                 boundgam_shifted_quantity(b, d, r));
        }
        // d/3 < r < d/2: printed ratio b_k/b_{k+1} >= (k+1)(r-k)/(k(d-r-k-1)) over
        // 0 <= k <= r-1 has a zero denominator at k = 0 and is not evaluable.
    }

    if (increasing) {
        bool evaluable = true, holds = true;
        for (int k = 0; k <= r - 1 && evaluable && holds; ++k) {
            if (b[k] == 0) {
                evaluable = false;
                break;
            }
            holds = b[k + 1] / b[k] >= make_rat(d - r - k - 1, r - k);
        }
        if (evaluable && holds)
            return guarded_claim(r, "gamma_r", Sign::nonpositive,
                                 "nonnegative increasing with ratio b_{k+1}/b_k >= (d-r-k-1)/(r-k)", witness);
    }

    return SignClaim(r, "gamma_r", Sign::unknown, "no hypothesis applies", witness);
}

}  // namespace gammacalc
