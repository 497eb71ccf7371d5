#include "gammacalc/gamma.hpp"

#include <algorithm>

#include "gammacalc/catalan.hpp"

namespace gammacalc {

GammaVector gamma_by_basis(const Polynomial& h) {
    const int n = h.formal_degree();
    int bad = -1;
    if (!h.is_reciprocal(&bad))
        throw std::domain_error("gamma_by_basis: not reciprocal, coefficient " + std::to_string(bad) +
                                " != coefficient " + std::to_string(n - bad));
    const int top = n / 2;
    GammaVector g;
    g.formal_degree = n;
    g.extended = false;
    g.entries.reserve(top + 1);
    Polynomial residual = h;
    for (int m = 0; m <= top; ++m) {
        Rat gm = residual.coeff(m);
        g.entries.push_back(gm);
        if (gm != 0)
            residual = residual - Polynomial::t_power_times_binomial(m, n - 2 * m) * gm;
    }
    if (!residual.is_zero())
        throw std::logic_error("gamma_by_basis: nonzero residual after elimination");
    return g;
}

GammaVector gamma_extended(const Polynomial& h, int max_order) {
    if (max_order < 0)
        throw std::invalid_argument("gamma_extended: negative order");
    const int n = h.formal_degree();
    TruncatedSeries j = n > 0 ? series_divide(h, n, max_order)
                              : TruncatedSeries::from_polynomial(h, max_order);
    TruncatedSeries gamma = series_compose(j, ctilde_series(max_order));
    GammaVector g;
    g.formal_degree = n;
    g.entries = gamma.coeffs();
    // a reciprocal input truncated below floor(n/2) is still just a truncation
    g.extended = !(h.is_reciprocal() && max_order >= n / 2);
    if (!g.extended) {
        for (int m = n / 2 + 1; m <= max_order; ++m)
            if (g.entries[m] != 0)
                throw std::logic_error("gamma_extended: nonvanishing tail for reciprocal input at m=" +
                                       std::to_string(m));
    }
    return g;
}

Rat gamma_catalan_formula(const Polynomial& h, int m) {
    if (m < 0)
        throw std::out_of_range("gamma_catalan_formula: negative index");
    const int n = h.formal_degree();
    Rat acc(0);
    for (int i = 0; i <= m; ++i) {
        const Int conv = catalan_power_coeff(i, m);
        if (conv == 0)
            continue;
        Rat inner(0);
        for (int l = 0; l <= std::min(n, i); ++l) {
            if (h.coeff(l) == 0)
                continue;
            inner += h.coeff(l) * Rat(binomial_general(-static_cast<long>(n), i - l));
        }
        acc += inner * Rat(conv);
    }
    return acc;
}

Rat gamma_derivative_formula(const Polynomial& h, int r) {
    if (r == 0)
        throw std::out_of_range("gamma_derivative_formula: r = 0; gamma_0 is the constant coefficient h_0");
    const int n = h.formal_degree();
    if (r < 0 || 2 * r > n + 1)
        throw std::out_of_range("gamma_derivative_formula: requires 1 <= r with 2r <= n+1");
    // Q(u) = (1+u) h'(u) - n h(u)
    const Polynomial hp = derivative(h);
    const Polynomial one_plus_u(std::vector<Rat>{Rat(1), Rat(1)}, 1);
    const Polynomial q = one_plus_u * hp - h * Rat(n);
    const int denom = n - 2 * r + 1;
    const Rat coeff = denom == 0 ? q.coeff(r - 1) : series_divide(q, denom, r - 1).coeff(r - 1);
    return coeff / Rat(r);
}

GammaMatrix gamma_matrix(int n, int max_row) {
    if (n < 0 || max_row < 0)
        throw std::invalid_argument("gamma_matrix: negative arguments");
    GammaMatrix mat;
    mat.formal_degree = n;
    mat.rows.resize(max_row + 1, std::vector<Rat>(static_cast<size_t>(n) + 1, Rat(0)));
    for (int m = 0; m <= max_row; ++m)
        for (int l = 0; l <= std::min(m, n); ++l) {
            Rat e(0);
            for (int i = l; i <= m; ++i) {
                const Int conv = catalan_power_coeff(i, m);
                if (conv != 0)
                    e += Rat(binomial_general(-static_cast<long>(n), i - l)) * Rat(conv);
            }
            mat.rows[m][l] = e;
        }
    return mat;
}

std::vector<Rat> apply_gamma_matrix(const GammaMatrix& m, const Polynomial& h) {
    if (h.formal_degree() != m.formal_degree)
        throw std::invalid_argument("apply_gamma_matrix: formal degree mismatch");
    std::vector<Rat> out(m.rows.size(), Rat(0));
    for (size_t r = 0; r < m.rows.size(); ++r)
        for (size_t l = 0; l < m.rows[r].size(); ++l)
            if (m.rows[r][l] != 0)
                out[r] += m.rows[r][l] * h.coeff(static_cast<int>(l));
    return out;
}

Polynomial h_from_gamma(const GammaVector& g) {
    if (g.extended)
        throw std::domain_error("h_from_gamma: extended gamma has no polynomial preimage");
    const int n = g.formal_degree;
    Polynomial h = Polynomial::zero(n);
    for (size_t m = 0; m < g.entries.size(); ++m) {
        if (g.entries[m] == 0)
            continue;
        if (2 * static_cast<int>(m) > n)
            throw std::domain_error("h_from_gamma: nonzero entry beyond floor(n/2) has no polynomial preimage");
        h = h + Polynomial::t_power_times_binomial(static_cast<int>(m), n - 2 * static_cast<int>(m)) *
                    g.entries[m];
    }
    return h;
}

}  // namespace gammacalc
