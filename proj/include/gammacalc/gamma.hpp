#pragma once

#include <vector>

#include "gammacalc/polynomial.hpp"
#include "gammacalc/rational.hpp"

namespace gammacalc {

/// Gamma vector of a polynomial, against the declared formal degree n.
/// For reciprocal input (extended = false) the entries determine the
/// polynomial exactly; otherwise they are a truncation of an infinite series.
struct GammaVector {
    std::vector<Rat> entries;
    int formal_degree = 0;
    bool extended = false;

    bool operator==(const GammaVector&) const = default;
};

/// The change-of-basis matrix: row m, column l holds the coefficient of
/// h_l in gamma_m. Column l contributes to row m only for l <= m, and row 0
/// picks out h_0.
struct GammaMatrix {
    int formal_degree = 0;
    std::vector<std::vector<Rat>> rows;  // rows[m][l], l = 0..formal_degree
};

/// Gamma vector of a reciprocal polynomial by the triangular basis solve in
/// {t^i (1+t)^{n-2i}}. Throws std::domain_error naming the first violated
/// index pair when h is not reciprocal for its formal degree.
GammaVector gamma_by_basis(const Polynomial& h);

/// First max_order+1 coefficients of gamma(u) = J(C~(u)), J = h/(1+u)^n,
/// by exact series composition. extended = false exactly when h is
/// reciprocal, in which case the tail beyond floor(n/2) vanishes.
GammaVector gamma_extended(const Polynomial& h, int max_order);

/// gamma_m as the double sum over h_l with binomial and Catalan-power weights.
Rat gamma_catalan_formula(const Polynomial& h, int m);

/// gamma_r = (1/r) [u^{r-1}] Q(u)/(1+u)^{n-2r+1} with Q = (1+u)h' - n h.
/// Requires r >= 1 (gamma_0 = h_0) and 2r <= n+1.
Rat gamma_derivative_formula(const Polynomial& h, int r);

/// Rows 0..max_row of the gamma transform matrix for formal degree n.
GammaMatrix gamma_matrix(int n, int max_row);

/// Matrix times the coefficient vector of h.
std::vector<Rat> apply_gamma_matrix(const GammaMatrix& m, const Polynomial& h);

/// Sum of gamma_m * t^m (1+t)^{n-2m}; inverse of gamma_by_basis.
/// Requires extended = false.
Polynomial h_from_gamma(const GammaVector& g);

}  // namespace gammacalc
