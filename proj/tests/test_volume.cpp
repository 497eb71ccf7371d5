#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gammacalc/gamma.hpp"
#include "gammacalc/verify.hpp"
#include "gammacalc/volume.hpp"

using namespace gammacalc;

namespace {

std::vector<Rat> rats(std::initializer_list<long> xs) {
    std::vector<Rat> v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("volume polynomial coefficients") {
    CHECK(volume_polynomial(IntersectionSequence(rats({1, 2, 4}), 2)) == Polynomial(rats({1, 4, 4}), 2));
    CHECK(volume_polynomial(IntersectionSequence(rats({1, 0, 0, 0}), 3)) == Polynomial(rats({1, 0, 0, 0}), 3));
    CHECK(volume_polynomial(IntersectionSequence(rats({1, 1, 1, 1, 1}), 4)) == Polynomial::one_plus_t_power(4));
    CHECK_THROWS_AS(IntersectionSequence(rats({1, 2}), 2), std::invalid_argument);
    CHECK_THROWS_AS(IntersectionSequence(rats({1}), 0), std::invalid_argument);
}

TEST_CASE("q numerator") {
    CHECK(volume_q(IntersectionSequence(rats({1, 2, 4}), 2)).q == rats({2, 4}));
    CHECK(volume_q(IntersectionSequence(rats({-1, 1, -1}), 2)).q == rats({4, -4}));
    CHECK(volume_q(IntersectionSequence(rats({3, 3, 3, 3}), 3)).q == rats({0, 0, 0}));
}

TEST_CASE("volume gamma anchors") {
    CHECK(volume_gamma(IntersectionSequence(rats({1, 2, 4}), 2), 1) == 2);
    CHECK(volume_gamma(IntersectionSequence(rats({-1, 1, -1}), 2), 1) == 4);
    CHECK(volume_gamma(IntersectionSequence(rats({1, 5, 25, 125, 625}), 4), 2) == 112);
    CHECK_THROWS_AS(volume_gamma(IntersectionSequence(rats({1, 2, 4}), 2), 2), std::out_of_range);
}

TEST_CASE("volume gamma equals the derivative formula") {
    Rng rng(3);
    for (int t = 0; t < 50; ++t) {
        const int d = static_cast<int>(rng.range(2, 12));
        std::vector<Rat> a(static_cast<size_t>(d) + 1);
        for (auto& x : a)
            x = make_rat(rng.range(-9, 9), rng.range(1, 4));
        const IntersectionSequence s(a, d);
        const Polynomial v = volume_polynomial(s);
        for (int r = 1; 2 * r <= d; ++r)
            CHECK(volume_gamma(s, r) == gamma_derivative_formula(v, r));
    }
}

TEST_CASE("constant ratio classification anchors") {
    const SignClaim large = constant_ratio_classify(Rat(5), 1, 4, 2);
    CHECK(large.claimed_sign == Sign::positive);
    CHECK(large.witness == 112);

    const SignClaim zero_rho = constant_ratio_classify(Rat(0), 1, 4, 2);
    CHECK(zero_rho.witness == 2);  // a = (1,0,0,0,0)
    CHECK(zero_rho.claimed_sign == Sign::positive);

    const SignClaim neg = constant_ratio_classify(Rat(-1), -1, 2, 1);
    CHECK(neg.claimed_sign == Sign::positive);
    CHECK(neg.witness == 4);

    const SignClaim one = constant_ratio_classify(Rat(1), 1, 6, 2);
    CHECK(one.claimed_sign == Sign::zero);
    CHECK(one.witness == 0);

    const SignClaim mid = constant_ratio_classify(Rat(2), 1, 8, 3);
    CHECK(mid.claimed_sign == Sign::unknown);  // 1 < rho <= d-2r+1 stays unclassified
}

TEST_CASE("claimed signs match witnesses across the acceptance grid") {
    for (int d = 2; d <= 12; ++d)
        for (int r = 1; 2 * r <= d; ++r)
            for (int a0 : {1, -1}) {
                const std::vector<Rat> rhos{Rat(-3), Rat(-1), make_rat(-1, 2), Rat(0), make_rat(1, 100),
                                            Rat(d + 1),  Rat(2 * d)};
                for (const Rat& rho : rhos) {
                    const SignClaim c = constant_ratio_classify(rho, a0, d, r);
                    CHECK(sign_satisfied(c.claimed_sign, c.witness));
                    CHECK(c.claimed_sign != Sign::unknown);
                }
            }
}

TEST_CASE("log concavity reports") {
    CHECK(log_concave_check(rats({1, 2, 4})).log_concave);
    CHECK(log_concave_check(rats({1, 3, 4, 3, 1})).log_concave);
    const LogConcavityReport bad = log_concave_check(rats({1, 1, 3}));
    CHECK_FALSE(bad.log_concave);
    CHECK(bad.first_violation_k == 1);

    const LogConcavityReport geo = log_concave_check(rats({1, 2, 4, 8}), Rat(2), Rat(2));
    CHECK(geo.ratios_non_increasing);
    CHECK(geo.upper_bound_all == geo.upper_bound_first_pair);
    CHECK(geo.lower_bound_all == geo.lower_bound_last_pair);
    CHECK(*geo.upper_bound_all);
    CHECK(*geo.lower_bound_all);
}

TEST_CASE("volume suite runs clean") {
    const SuiteReport rep = run_suite("volume", 5, 120);
    CHECK(rep.violations == 0);
}
