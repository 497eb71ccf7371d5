#include "gammacalc/catalan.hpp"

#include <mutex>
#include <vector>

namespace gammacalc {

namespace {

class CatalanTable {
public:
    Int get(int k) {
        std::lock_guard<std::mutex> lock(mu_);
        grow(k);
        return values_[k];
    }

private:
    void grow(int k) {
        while (static_cast<int>(values_.size()) <= k) {
            const int next = static_cast<int>(values_.size());
            Int v;
            if (next == 0) {
                v = 1;
            } else {
                // segmented recurrence C_next = sum_{i=0}^{next-1} C_i C_{next-1-i}
                v = 0;
                for (int i = 0; i < next; ++i)
                    v += values_[i] * values_[next - 1 - i];
            }
            // dual-definition cross-check: binom(2k, k)/(k+1)
            Int direct;
            mpz_bin_uiui(direct.get_mpz_t(), 2ul * next, static_cast<unsigned long>(next));
            mpz_divexact_ui(direct.get_mpz_t(), direct.get_mpz_t(), static_cast<unsigned long>(next) + 1);
            if (v != direct)
                throw std::logic_error("catalan table: recurrence and binomial definitions disagree at k=" +
                                       std::to_string(next));
            values_.push_back(std::move(v));
        }
    }

    std::mutex mu_;
    std::vector<Int> values_;
};

CatalanTable& table() {
    static CatalanTable t;
    return t;
}

}  // namespace

Int catalan(int k) {
    if (k < 0)
        throw std::out_of_range("catalan: negative index");
    return table().get(k);
}

TruncatedSeries catalan_series(int order) {
    std::vector<Rat> c(static_cast<size_t>(order) + 1);
    for (int j = 0; j <= order; ++j)
        c[j] = Rat(catalan(j));
    return TruncatedSeries(std::move(c), order);
}

TruncatedSeries ctilde_series(int order) {
    TruncatedSeries s = catalan_series(order);
    std::vector<Rat> c = s.coeffs();
    c[0] = 0;
    return TruncatedSeries(std::move(c), order);
}

Int catalan_power_coeff(int i, int m) {
    if (i < 0 || m < 0)
        throw std::out_of_range("catalan_power_coeff: negative argument");
    if (i == 0 && m == 0)
        return 1;
    if (i == 0 || m == 0)
        return 0;
    if (i > m)
        return 0;  // C~^i starts at u^i
    Int num = Int(i) * binomial(2L * m, m - i);
    Int r;
    mpz_divexact_ui(r.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(m));
    return r;
}

Rat catalan_power_coeff_printed(int i, int m) {
    if (i == 0 && m == 0)
        return 1;
    if (i == 0 || m == 0)
        return 0;
    if (i > m)
        return 0;
    return make_rat(Int(i) * binomial(2L * i, m - i), Int(m));
}

bool first_printed_power_disagreement(int max_m, int* i_out, int* m_out, Rat* printed_out,
                                      Int* correct_out) {
    for (int m = 2; m <= max_m; ++m) {
        for (int i = 2; i <= m; ++i) {
            const Rat printed = catalan_power_coeff_printed(i, m);
            const Int correct = catalan_power_coeff(i, m);
            if (printed != Rat(correct)) {
                if (i_out) *i_out = i;
                if (m_out) *m_out = m;
                if (printed_out) *printed_out = printed;
                if (correct_out) *correct_out = correct;
                return true;
            }
        }
    }
    return false;
}

Int catalan_convolution_shifted(int k, int n) {
    if (k <= 0 || k > n)
        throw std::domain_error("catalan_convolution_shifted: requires 1 <= k <= n");
    Int num = Int(k) * binomial(2L * n - k, n);
    Int r;
    mpz_divexact_ui(r.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(2L * n - k));
    return r;
}

Int catalan_convolution_unshifted(int m, int n) {
    if (m < 1)
        throw std::domain_error("catalan_convolution_unshifted: requires m >= 1");
    if (n < 0)
        throw std::out_of_range("catalan_convolution_unshifted: negative n");
    Rat value;
    if (m % 2 == 0) {
        const long h = m / 2;
        value = Rat(h) * make_rat(binomial(n + h - 1, h - 1), binomial(n + m, h - 1)) * Rat(catalan(n + h));
    } else {
        const long h = (m - 1) / 2;
        value = Rat(m) * make_rat(binomial(n + h, h), binomial(n + m, h)) * Rat(catalan(n + h));
    }
    value.canonicalize();
    if (!is_integer(value))
        throw std::logic_error("catalan_convolution_unshifted: non-integral closed form");
    return value.get_num();
}

Rat catalan_convolution_unified_form(int m, int n) {
    if (m < 1)
        throw std::domain_error("catalan_convolution_unified_form: requires m >= 1");
    // divisor 1 + (1 - (-1)^{m+1})/2 and index offset ((-1)^{m+1} - 1)/2
    const long sgn = (m % 2 == 0) ? -1 : 1;  // (-1)^{m+1}
    const long divisor = 1 + (1 - sgn) / 2;
    const long offset = (sgn - 1) / 2;
    const long idx = m / 2 + offset;
    return make_rat(m, divisor) * make_rat(binomial(n + idx, idx), binomial(n + m, idx)) *
           Rat(catalan(n + static_cast<int>(m / 2)));
}

Rat lagrange_coefficient(const Polynomial& g, int k, int n) {
    if (n < 1)
        throw std::out_of_range("lagrange_coefficient: requires n >= 1");
    if (g.coeff(0) == 0)
        throw std::domain_error("lagrange_coefficient: G(0) = 0");
    if (n - k < 0)
        return 0;  // G^n has no negative powers
    TruncatedSeries gn = TruncatedSeries::from_polynomial(g, n - k);
    TruncatedSeries acc(std::vector<Rat>{Rat(1)}, n - k);
    for (int j = 0; j < n; ++j)
        acc = acc * gn;
    return make_rat(k, n) * acc.coeff(n - k);
}

}  // namespace gammacalc
