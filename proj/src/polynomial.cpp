#include "gammacalc/polynomial.hpp"

#include <algorithm>

namespace gammacalc {

namespace {
const Rat kZero(0);
}

Polynomial::Polynomial(std::vector<Rat> coeffs, int formal_degree)
    : coeffs_(std::move(coeffs)), formal_degree_(formal_degree) {
    if (formal_degree_ < 0)
        throw std::invalid_argument("polynomial: negative formal degree");
    const auto want = static_cast<size_t>(formal_degree_) + 1;
    if (coeffs_.size() > want) {
        for (size_t i = want; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0)
                throw std::invalid_argument(
                    "polynomial: nonzero coefficient beyond formal degree " +
                    std::to_string(formal_degree_));
        coeffs_.resize(want);
    }
    coeffs_.resize(want, Rat(0));
}

Polynomial Polynomial::zero(int formal_degree) {
    return Polynomial(std::vector<Rat>{}, formal_degree);
}

Polynomial Polynomial::one_plus_t_power(int n) {
    std::vector<Rat> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        c[i] = Rat(binomial(n, i));
    return Polynomial(std::move(c), n);
}

Polynomial Polynomial::t_power_times_binomial(int k, int m) {
    std::vector<Rat> c(static_cast<size_t>(k + m) + 1, Rat(0));
    for (int i = 0; i <= m; ++i)
        c[k + i] = Rat(binomial(m, i));
    return Polynomial(std::move(c), k + m);
}

const Rat& Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size()))
        return kZero;
    return coeffs_[i];
}

bool Polynomial::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; });
}

bool Polynomial::is_reciprocal(int* first_violation) const {
    const int n = formal_degree_;
    for (int i = 0; 2 * i <= n; ++i) {
        if (coeffs_[i] != coeffs_[n - i]) {
            if (first_violation)
                *first_violation = i;
            return false;
        }
    }
    return true;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    const int n = std::max(formal_degree_, o.formal_degree_);
    std::vector<Rat> c(static_cast<size_t>(n) + 1, Rat(0));
    for (int i = 0; i <= n; ++i)
        c[i] = coeff(i) + o.coeff(i);
    return Polynomial(std::move(c), n);
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return *this + (-o);
}

Polynomial Polynomial::operator-() const {
    std::vector<Rat> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i)
        c[i] = -coeffs_[i];
    return Polynomial(std::move(c), formal_degree_);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    const int n = formal_degree_ + o.formal_degree_;
    std::vector<Rat> c(static_cast<size_t>(n) + 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return Polynomial(std::move(c), n);
}

Polynomial Polynomial::operator*(const Rat& k) const {
    std::vector<Rat> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i)
        c[i] = coeffs_[i] * k;
    return Polynomial(std::move(c), formal_degree_);
}

Rat Polynomial::evaluate(const Rat& x) const {
    Rat acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;)
        acc = acc * x + coeffs_[i];
    return acc;
}

TruncatedSeries::TruncatedSeries(std::vector<Rat> coeffs, int order) : coeffs_(std::move(coeffs)), order_(order) {
    if (order_ < 0)
        throw std::invalid_argument("series: negative order");
    coeffs_.resize(static_cast<size_t>(order_) + 1, Rat(0));
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, int order) {
    std::vector<Rat> c(static_cast<size_t>(order) + 1, Rat(0));
    for (int i = 0; i <= order; ++i)
        c[i] = p.coeff(i);
    return TruncatedSeries(std::move(c), order);
}

const Rat& TruncatedSeries::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size()))
        return kZero;
    return coeffs_[i];
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    const int n = std::min(order_, o.order_);
    std::vector<Rat> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        c[i] = coeff(i) + o.coeff(i);
    return TruncatedSeries(std::move(c), n);
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    return *this + (o * Rat(-1));
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    const int n = std::min(order_, o.order_);
    std::vector<Rat> c(static_cast<size_t>(n) + 1, Rat(0));
    for (int i = 0; i <= n; ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (int j = 0; i + j <= n; ++j)
            c[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return TruncatedSeries(std::move(c), n);
}

TruncatedSeries TruncatedSeries::operator*(const Rat& k) const {
    std::vector<Rat> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i)
        c[i] = coeffs_[i] * k;
    return TruncatedSeries(std::move(c), order_);
}

Polynomial reciprocal(const Polynomial& p) {
    std::vector<Rat> c(p.coeffs().rbegin(), p.coeffs().rend());
    return Polynomial(std::move(c), p.formal_degree());
}

Polynomial translate(const Polynomial& p, const Rat& c) {
    const int n = p.formal_degree();
    std::vector<Rat> out(static_cast<size_t>(n) + 1, Rat(0));
    // q_j = sum_{i>=j} p_i * binom(i, j) * c^{i-j}
    for (int i = 0; i <= n; ++i) {
        if (p.coeff(i) == 0)
            continue;
        Rat cpow(1);
        for (int j = i; j >= 0; --j) {
            out[j] += p.coeff(i) * Rat(binomial(i, j)) * cpow;
            cpow *= c;
        }
    }
    return Polynomial(std::move(out), n);
}

Polynomial derivative(const Polynomial& p) {
    const int n = p.formal_degree();
    const int m = std::max(n - 1, 0);
    std::vector<Rat> out(static_cast<size_t>(m) + 1, Rat(0));
    for (int i = 1; i <= n; ++i)
        out[i - 1] = p.coeff(i) * Rat(i);
    return Polynomial(std::move(out), m);
}

TruncatedSeries expand_binomial_power(long exponent, int order) {
    std::vector<Rat> c(static_cast<size_t>(order) + 1);
    for (int j = 0; j <= order; ++j)
        c[j] = Rat(binomial_general(exponent, j));
    return TruncatedSeries(std::move(c), order);
}

TruncatedSeries series_divide(const Polynomial& num, int denom_exponent, int order) {
    if (denom_exponent <= 0)
        throw std::invalid_argument("series_divide: denominator exponent must be positive");
    return TruncatedSeries::from_polynomial(num, order) * expand_binomial_power(-denom_exponent, order);
}

TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    if (outer.order() != inner.order())
        throw std::invalid_argument("series_compose: orders differ");
    if (inner.coeff(0) != 0)
        throw std::domain_error("series_compose: inner series has nonzero constant term");
    const int n = outer.order();
    // Horner over the outer coefficients; exact because inner starts at u^1.
    TruncatedSeries acc(std::vector<Rat>{outer.coeff(n)}, n);
    for (int i = n - 1; i >= 0; --i) {
        acc = acc * inner;
        std::vector<Rat> c = acc.coeffs();
        c[0] += outer.coeff(i);
        acc = TruncatedSeries(std::move(c), n);
    }
    return acc;
}

}  // namespace gammacalc
