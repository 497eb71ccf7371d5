#pragma once

#include <vector>

#include "gammacalc/rational.hpp"

namespace gammacalc {

/// Dense exact-rational polynomial with a declared formal degree n.
///
/// The formal degree is carried separately from the actual degree: the same
/// coefficient vector can be read against different (1+t)^n normalizations,
/// so trailing zeros are stored explicitly and coeffs().size() == n + 1 always.
class Polynomial {
public:
    Polynomial() : coeffs_{Rat(0)}, formal_degree_(0) {}

    /// Pads with zeros up to formal_degree; rejects nonzero coefficients
    /// beyond it.
    Polynomial(std::vector<Rat> coeffs, int formal_degree);

    static Polynomial zero(int formal_degree);
    /// (1+t)^n expanded exactly.
    static Polynomial one_plus_t_power(int n);
    /// t^k * (1+t)^m with formal degree k + m.
    static Polynomial t_power_times_binomial(int k, int m);

    const std::vector<Rat>& coeffs() const { return coeffs_; }
    int formal_degree() const { return formal_degree_; }
    /// Coefficient of t^i, zero outside storage.
    const Rat& coeff(int i) const;

    bool is_zero() const;
    /// coeffs[i] == coeffs[n-i] for all i. On failure *first_violation
    /// receives the lower index of the first mismatching pair.
    bool is_reciprocal(int* first_violation = nullptr) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rat& c) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial& o) const = default;

    Rat evaluate(const Rat& x) const;

private:
    std::vector<Rat> coeffs_;
    int formal_degree_;
};

/// Exact power series truncated at a stated order (coeffs 0..order).
class TruncatedSeries {
public:
    TruncatedSeries() : coeffs_{Rat(0)}, order_(0) {}
    TruncatedSeries(std::vector<Rat> coeffs, int order);

    static TruncatedSeries from_polynomial(const Polynomial& p, int order);

    const std::vector<Rat>& coeffs() const { return coeffs_; }
    int order() const { return order_; }
    const Rat& coeff(int i) const;

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    /// Product truncated at the common order.
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const Rat& c) const;
    bool operator==(const TruncatedSeries& o) const = default;

private:
    std::vector<Rat> coeffs_;
    int order_;
};

/// t^n * p(1/t): coefficient i of the result is coefficient n-i of p.
Polynomial reciprocal(const Polynomial& p);

/// p(t + c) by exact binomial expansion; formal degree preserved.
Polynomial translate(const Polynomial& p, const Rat& c);

/// Formal derivative; formal degree decremented (floored at 0).
Polynomial derivative(const Polynomial& p);

/// Series of (1+u)^exponent to the given order; exponent may be negative.
TruncatedSeries expand_binomial_power(long exponent, int order);

/// num(u) * (1+u)^{-denom_exponent} truncated at order.
TruncatedSeries series_divide(const Polynomial& num, int denom_exponent, int order);

/// Exact composition outer(inner) truncated at the common order.
/// Requires inner to have zero constant term and equal orders.
TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

}  // namespace gammacalc
