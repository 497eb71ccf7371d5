#include "gammacalc/volume.hpp"

#include <stdexcept>

namespace gammacalc {

IntersectionSequence::IntersectionSequence(std::vector<Rat> a_, int d_) : a(std::move(a_)), d(d_) {
    if (d < 1)
        throw std::invalid_argument("intersection sequence: d must be positive");
    if (static_cast<int>(a.size()) != d + 1)
        throw std::invalid_argument("intersection sequence: needs d+1 entries");
}

IntersectionSequence IntersectionSequence::geometric(const Rat& a0, const Rat& rho, int d) {
    std::vector<Rat> a(static_cast<size_t>(d) + 1);
    Rat cur = a0;
    for (int k = 0; k <= d; ++k) {
        a[k] = cur;
        cur *= rho;
    }
    return IntersectionSequence(std::move(a), d);
}

QNumerator::QNumerator(const IntersectionSequence& s) {
    q.resize(static_cast<size_t>(s.d));
    for (int k = 0; k < s.d; ++k)
        q[k] = Rat(s.d) * Rat(binomial(s.d - 1, k)) * (s.a[k + 1] - s.a[k]);
}

Polynomial volume_polynomial(const IntersectionSequence& s) {
    std::vector<Rat> c(static_cast<size_t>(s.d) + 1);
    for (int k = 0; k <= s.d; ++k)
        c[k] = Rat(binomial(s.d, k)) * s.a[k];
    return Polynomial(std::move(c), s.d);
}

QNumerator volume_q(const IntersectionSequence& s) {
    return QNumerator(s);
}

Rat volume_gamma(const IntersectionSequence& s, int r) {
    if (r < 1 || 2 * r > s.d)
        throw std::out_of_range("volume_gamma: requires 1 <= r <= d/2");
    const QNumerator qn(s);
    Polynomial q(qn.q, s.d - 1);
    const int denom = s.d - 2 * r + 1;
    const Rat coeff = denom == 0 ? q.coeff(r - 1) : series_divide(q, denom, r - 1).coeff(r - 1);
    return coeff / Rat(r);
}

namespace {

Sign flip_if(Sign s, bool flip) {
    if (!flip)
        return s;
    switch (s) {
        case Sign::positive: return Sign::negative;
        case Sign::negative: return Sign::positive;
        case Sign::nonnegative: return Sign::nonpositive;
        case Sign::nonpositive: return Sign::nonnegative;
        default: return s;
    }
}

SignClaim guarded(int r, Sign weak, std::string hyp, Rat witness) {
    if (!sign_satisfied(weak, witness))
        return SignClaim(r, "gamma_r", Sign::unknown,
                         hyp + " fired, but the witness contradicts the printed conclusion", std::move(witness));
    Sign s = weak;
    if (witness != 0) {
        if (s == Sign::nonnegative)
            s = Sign::positive;
        else if (s == Sign::nonpositive)
            s = Sign::negative;
    }
    return SignClaim(r, "gamma_r", s, std::move(hyp), std::move(witness));
}

}  // namespace

SignClaim constant_ratio_classify(const Rat& rho, int a0_sign, int d, int r) {
    if (a0_sign != 1 && a0_sign != -1)
        throw std::invalid_argument("constant_ratio_classify: a0_sign must be +1 or -1");
    if (r < 1 || 2 * r > d)
        throw std::out_of_range("constant_ratio_classify: requires 1 <= r <= d/2");
    const Rat a0(a0_sign);
    const IntersectionSequence s = IntersectionSequence::geometric(a0, rho, d);
    const Rat witness = volume_gamma(s, r);
    const QNumerator qn(s);
    const Rat q0 = qn.q[0];  // d * a0 * (rho - 1)
    const int sq0 = sign_of(q0);

    if (sq0 == 0)
        return SignClaim(r, "gamma_r", Sign::zero, "rho = 1, the q sequence vanishes", witness);

    // (-1)^{r-1} sgn(q_0) as a weak sign
    const Sign alternating_weak = flip_if(sq0 > 0 ? Sign::nonnegative : Sign::nonpositive, r % 2 == 0);

    if (rho < 0)
        return guarded(r, alternating_weak, "rho < 0, sign (-1)^{r-1} sgn(q_0)", witness);
    if (rho == 0)
        return guarded(r, alternating_weak, "rho = 0, sign (-1)^{r-1} sgn(q_0)", witness);

    if (rho < 1) {
        // explicit small-ratio sufficient condition: the magnitudes
        // binom(d-r-i-1, r-i-1) |q_i| are non-increasing over i = 0..r-1
        bool dominance = true;
        for (int i = 0; i + 1 <= r - 1 && dominance; ++i) {
            const Rat ti = Rat(binomial(d - r - i - 1, r - i - 1)) * abs(qn.q[i]);
            const Rat tn = Rat(binomial(d - r - i - 2, r - i - 2)) * abs(qn.q[i + 1]);
            dominance = ti >= tn;
        }
        if (dominance)
            return guarded(r, alternating_weak, "0 < rho < 1 with term dominance, sign (-1)^{r-1} sgn(q_0)",
                           witness);
        return SignClaim(r, "gamma_r", Sign::unknown, "0 < rho < 1 but term dominance fails", witness);
    }

    if (rho > Rat(d - 2 * r + 1)) {
        const Sign weak = sq0 > 0 ? Sign::nonnegative : Sign::nonpositive;
        return guarded(r, weak, "rho > d - 2r + 1, sign sgn(q_0)", witness);
    }

    return SignClaim(r, "gamma_r", Sign::unknown, "rho in the unclassified middle range", witness);
}

SignClaim volbd_ratio_classify(const IntersectionSequence& s, int r) {
    if (r < 1 || 2 * r > s.d)
        throw std::out_of_range("volbd_ratio_classify: requires 1 <= r <= d/2");
    const Rat witness = volume_gamma(s, r);
    const QNumerator qn(s);
    const int sq0 = sign_of(qn.q[0]);
    if (sq0 == 0)
        return SignClaim(r, "gamma_r", Sign::unknown, "ratio hypothesis not evaluable: q_0 = 0", witness);
    for (int k = 1; k <= r - 2; ++k) {
        if (qn.q[k] == 0)
            return SignClaim(r, "gamma_r", Sign::unknown,
                             "ratio hypothesis not evaluable: q_" + std::to_string(k) + " = 0", witness);
        const Rat lhs = make_rat(s.d - k - 1, k + 1) * (qn.q[k + 1] / qn.q[k]);
        const Rat rhs = make_rat(s.d - r - k - 1, r - k - 1);
        if (!(lhs > rhs))
            return SignClaim(r, "gamma_r", Sign::unknown,
                             "printed ratio inequality fails at k = " + std::to_string(k), witness);
    }
    const Sign weak = sq0 > 0 ? Sign::nonnegative : Sign::nonpositive;
    return guarded(r, weak, "printed large-ratio inequality, sign sgn(q_0)", witness);
}

LogConcavityReport log_concave_check(const std::vector<Rat>& seq, const std::optional<Rat>& ratio_upper_bound,
                                     const std::optional<Rat>& ratio_lower_bound) {
    LogConcavityReport rep;
    const int n = static_cast<int>(seq.size()) - 1;
    for (int k = 1; k < n; ++k) {
        if (seq[k] * seq[k] < seq[k - 1] * seq[k + 1]) {
            rep.log_concave = false;
            rep.first_violation_k = k;
            break;
        }
    }
    rep.all_positive = !seq.empty();
    for (const Rat& x : seq)
        rep.all_positive = rep.all_positive && x > 0;

    if (rep.log_concave && rep.all_positive && n >= 1) {
        rep.ratios_non_increasing = true;
        for (int k = 0; k + 1 < n; ++k)
            if (seq[k + 1] / seq[k] < seq[k + 2] / seq[k + 1]) {
                rep.ratios_non_increasing = false;
                break;
            }
        if (ratio_upper_bound) {
            bool all = true;
            for (int k = 0; k < n; ++k)
                all = all && seq[k + 1] / seq[k] <= *ratio_upper_bound;
            rep.upper_bound_all = all;
            rep.upper_bound_first_pair = seq[1] / seq[0] <= *ratio_upper_bound;
        }
        if (ratio_lower_bound) {
            bool all = true;
            for (int k = 0; k < n; ++k)
                all = all && seq[k + 1] / seq[k] >= *ratio_lower_bound;
            rep.lower_bound_all = all;
            rep.lower_bound_last_pair = seq[n] / seq[n - 1] >= *ratio_lower_bound;
        }
    }
    return rep;
}

}  // namespace gammacalc
