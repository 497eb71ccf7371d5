#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gammacalc/rational.hpp"

namespace gammacalc {

struct SuiteReport {
    std::string suite;
    uint64_t seed = 0;
    int trials = 0;
    int violations = 0;
    std::string first_counterexample;  // empty when clean
    std::string notes;                 // informational tallies
};

/// {agreement, catalan, lagrange, shiftgam, boundgam, volume, simplicial, auxpo}
const std::vector<std::string>& suite_names();

/// Runs the named randomized suite deterministically from the seed.
/// printed_formulas switches the catalan and boundgam suites to the printed
/// closed forms, whose first disagreements the reports then carry.
SuiteReport run_suite(const std::string& name, uint64_t seed, int trials, bool printed_formulas = false);

/// Deterministic bounded draws on top of mt19937_64. The standard
/// distributions are implementation-defined, so byte-identical reports
/// across platforms need hand-rolled reduction.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}
    long below(long n) { return n <= 1 ? 0 : static_cast<long>(eng_() % static_cast<uint64_t>(n)); }
    long range(long lo, long hi) { return lo + below(hi - lo + 1); }
    bool coin() { return below(2) == 1; }

private:
    std::mt19937_64 eng_;
};

}  // namespace gammacalc
