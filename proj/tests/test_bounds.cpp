#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gammacalc/bounds.hpp"
#include "gammacalc/gamma.hpp"
#include "gammacalc/verify.hpp"

using namespace gammacalc;

namespace {

std::vector<Rat> rats(std::initializer_list<long> xs) {
    std::vector<Rat> v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("shifted-reciprocal gamma closed sum") {
    CHECK(shiftgam_gamma(rats({1, 1, 1}), 2, 1) == -3);
    CHECK(shiftgam_gamma(rats({1, 2, 1}), 2, 1) == -4);
    CHECK(shiftgam_gamma(rats({1, 0, 0, 0}), 3, 1) == 0);
    CHECK_THROWS_AS(shiftgam_gamma(rats({1, 1, 1}), 2, 2), std::out_of_range);
    CHECK_THROWS_AS(shiftgam_gamma(rats({1, 1}), 2, 1), std::invalid_argument);
}

TEST_CASE("closed sum equals the gamma of translate(reciprocal(A), 1)") {
    Rng rng(31);
    for (int t = 0; t < 60; ++t) {
        const int d = static_cast<int>(rng.range(2, 12));
        std::vector<Rat> a(static_cast<size_t>(d) + 1);
        for (auto& x : a)
            x = Rat(rng.range(0, 9));
        const Polynomial b = translate(reciprocal(Polynomial(a, d)), Rat(1));
        for (int r = 1; 2 * r <= d; ++r)
            CHECK(shiftgam_gamma(a, d, r) == gamma_derivative_formula(b, r));
    }
}

TEST_CASE("shiftgam classification") {
    const SignClaim odd = shiftgam_classify(rats({1, 1, 1}), 2, 1);
    CHECK(odd.claimed_sign == Sign::negative);  // nonpositive upgraded on a nonzero witness
    CHECK(odd.witness == -3);
    CHECK(odd.hypothesis == "odd r");

    const SignClaim odd3 = shiftgam_classify(rats({1, 5, 5, 1}), 3, 1);
    CHECK(sign_satisfied(Sign::nonpositive, odd3.witness));

    // a zero where the even-r ratio needs a positive denominator
    const SignClaim vac = shiftgam_classify(rats({1, 0, 1, 1, 1, 1, 1, 1, 1}), 8, 2);
    CHECK(vac.claimed_sign == Sign::unknown);
    CHECK(vac.hypothesis.find("not evaluable") != std::string::npos);

    CHECK_THROWS_AS(shiftgam_classify(rats({1, -1, 1}), 2, 1), std::domain_error);
}

TEST_CASE("shiftgam r = d/2 with even half is refuted by an exact witness") {
    // the closed sum's k = d term is +d*a_d for even r, so the unconditional claim fails
    const std::vector<Rat> a = rats({1, 1, 1, 1, 9});
    CHECK(shiftgam_gamma(a, 4, 2) == 16);
    const Polynomial b = translate(reciprocal(Polynomial(a, 4)), Rat(1));
    CHECK(b.coeffs() == rats({13, 10, 10, 5, 1}));
    CHECK(gamma_derivative_formula(b, 2) == 16);
    CHECK(gamma_extended(b, 2).entries[2] == 16);
    // the classifier must not assert the contradicted claim
    const SignClaim claim = shiftgam_classify(a, 4, 2);
    CHECK(claim.claimed_sign == Sign::unknown);
    CHECK(claim.hypothesis.find("contradicts") != std::string::npos);
    CHECK(claim.witness == 16);
}

TEST_CASE("ftypesum expansion, corrected and printed limits") {
    CHECK(ftypesum_gamma(rats({3, 3, 1}), 2, 1) == -3);
    CHECK(ftypesum_gamma_printed(rats({3, 3, 1}), 2, 1) == -6);
    // b = e_0: single-term instance
    for (int d = 2; d <= 10; ++d)
        for (int r = 1; 2 * r <= d; ++r) {
            std::vector<Rat> b(static_cast<size_t>(d) + 1, Rat(0));
            b[0] = 1;
            const int s = (r % 2 == 0) ? 1 : -1;
            CHECK(ftypesum_gamma(b, d, r) == make_rat(s * d, r) * Rat(binomial(d - r - 1, r - 1)));
        }
    CHECK(ftypesum_gamma(rats({0, 0, 0, 0, 0}), 4, 2) == 0);
}

TEST_CASE("ftypesum equals the derivative formula on random data") {
    Rng rng(13);
    for (int t = 0; t < 80; ++t) {
        const int d = static_cast<int>(rng.range(2, 14));
        std::vector<Rat> b(static_cast<size_t>(d) + 1);
        for (auto& x : b)
            x = Rat(rng.range(-9, 9));
        const Polynomial bp(b, d);
        for (int r = 1; 2 * r <= d; ++r)
            CHECK(ftypesum_gamma(b, d, r) == gamma_derivative_formula(bp, r));
    }
}

TEST_CASE("alternating sum sign lemma") {
    const SignClaim inc = alternating_sum_sign(rats({1, 2, 3}), Monotonicity::increasing);
    CHECK(inc.claimed_sign == Sign::positive);
    CHECK(inc.witness == 2);

    const SignClaim dec = alternating_sum_sign(rats({3, 2, 1}), Monotonicity::decreasing);
    CHECK(dec.claimed_sign == Sign::positive);
    CHECK(dec.witness == 2);

    // weak monotonicity can zero the sum; the claim stays weak
    const SignClaim weak = alternating_sum_sign(rats({1, 1}), Monotonicity::increasing);
    CHECK(weak.claimed_sign == Sign::nonpositive);
    CHECK(weak.witness == 0);

    // the start-parity shift flips the decreasing case
    const SignClaim shifted = alternating_sum_sign(rats({3, 2, 1}), Monotonicity::decreasing, 1);
    CHECK(shifted.claimed_sign == Sign::negative);
    CHECK(shifted.witness == -2);

    CHECK_THROWS_AS(alternating_sum_sign(rats({1, 3, 2}), Monotonicity::increasing), std::domain_error);
    CHECK_THROWS_AS(alternating_sum_sign(rats({1, -1}), Monotonicity::increasing), std::domain_error);
}

TEST_CASE("boundgam classification") {
    // alternating input, the d=4 anchor
    const SignClaim alt = boundgam_classify(rats({1, -1, 1, -1, 1}), 4, 1);
    CHECK(alt.claimed_sign == Sign::negative);
    CHECK(alt.witness == -5);

    // nonnegative decreasing with r <= d/3 bounds the shifted quantity
    const SignClaim dec = boundgam_classify(rats({5, 4, 3, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1}), 12, 3);
    CHECK(dec.quantity == "shifted_gamma_r");
    CHECK(sign_satisfied(dec.claimed_sign, dec.witness));
    CHECK(dec.claimed_sign == Sign::positive);  // (-1)^{r+1} with r = 3

    // r = d/2 on a decreasing tail:\ the claim is about gamma_r itself
    const SignClaim half = boundgam_classify(rats({1, 0, 0, 0, 0, 0, 0}), 6, 3);
    CHECK(half.quantity == "gamma_r");
    CHECK(half.witness == -2);
    CHECK(half.claimed_sign == Sign::negative);

    // 2b can be contradicted by the witness; the claim degrades to unknown
    const SignClaim contra = boundgam_classify(rats({1, 5, 1}), 2, 1);
    CHECK(contra.witness == 3);
    CHECK(contra.claimed_sign == Sign::unknown);
    CHECK(contra.hypothesis.find("contradicts") != std::string::npos);

    // mixed-sign input with no hypothesis
    const SignClaim none = boundgam_classify(rats({1, 1, -1, 1, 1}), 4, 2);
    CHECK(none.claimed_sign == Sign::unknown);
}

TEST_CASE("every emitted claim satisfies its own sign") {
    Rng rng(47);
    for (int t = 0; t < 120; ++t) {
        const int d = static_cast<int>(rng.range(2, 12));
        std::vector<Rat> b(static_cast<size_t>(d) + 1);
        for (auto& x : b)
            x = Rat(rng.range(-6, 6));
        const int r = static_cast<int>(rng.range(1, d / 2));
        const SignClaim c = boundgam_classify(b, d, r);
        CHECK(sign_satisfied(c.claimed_sign, c.witness));
    }
}

TEST_CASE("boundgam suite runs clean; diagnostic mode reports the printed limit") {
    CHECK(run_suite("boundgam", 3, 150).violations == 0);
    const SuiteReport diag = run_suite("boundgam", 3, 5, true);
    CHECK(diag.violations >= 1);
    CHECK(diag.first_counterexample.find("b=[3,3,1]") != std::string::npos);
}
