#pragma once

#include "gammacalc/polynomial.hpp"
#include "gammacalc/rational.hpp"

namespace gammacalc {

/// k-th Catalan number, from a process-wide table grown on demand.
/// The table is filled by the segmented recurrence C_{k+1} = sum C_i C_{k-i}
/// and cross-checked against binom(2k, k)/(k+1) at growth time; growth is
/// mutex-guarded, so concurrent callers are safe.
Int catalan(int k);

/// C(u) = 1 + u + 2u^2 + 5u^3 + ... truncated at the given order.
TruncatedSeries catalan_series(int order);

/// C~(u) = C(u) - 1 (zero constant term) truncated at the given order.
TruncatedSeries ctilde_series(int order);

/// [u^m] C~(u)^i via the closed form (i/m) * binom(2m, m-i).
/// Degenerate cases: returns 1 when i = m = 0 and 0 when exactly one is 0.
Int catalan_power_coeff(int i, int m);

/// Diagnostic variant (i/m) * binom(2i, m-i): disagrees with the series
/// for some inputs (first power disagreement at i=2, m=3: 8/3 vs 4) and
/// may be non-integral, hence the rational return type.
Rat catalan_power_coeff_printed(int i, int m);

/// Scans powers i >= 2 (m ascending, then i) comparing the printed closed
/// form against catalan_power_coeff; returns true and fills the out
/// parameters at the first disagreement.
bool first_printed_power_disagreement(int max_m, int* i_out, int* m_out, Rat* printed_out,
                                      Int* correct_out);

/// Sum of C_{i_1-1}...C_{i_k-1} over compositions of n into k positive
/// parts: (k/(2n-k)) * binom(2n-k, n) = [u^n] (u C(u))^k. Requires 1 <= k <= n.
Int catalan_convolution_shifted(int k, int n);

/// [u^n] C(u)^m computed by the parity-split closed form (m >= 1).
Int catalan_convolution_unshifted(int m, int n);

/// Same value through the single-expression floor form.
Rat catalan_convolution_unified_form(int m, int n);

/// [x^n] f(x)^k for f defined by f = x G(f), computed as (k/n) [x^{n-k}] G(x)^n.
/// Requires G(0) != 0 and n >= 1.
Rat lagrange_coefficient(const Polynomial& g, int k, int n);

}  // namespace gammacalc
