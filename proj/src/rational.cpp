#include "gammacalc/rational.hpp"

#include <cctype>

namespace gammacalc {

Rat rat_from_string(const std::string& s) {
    if (s.empty())
        throw std::invalid_argument("rational: empty string");
    const auto dot = s.find('.');
    if (dot != std::string::npos) {
        // "a.b" -> (a*10^n + b) / 10^n with the sign applied to the whole value
        std::string head = s.substr(0, dot);
        std::string tail = s.substr(dot + 1);
        if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("rational: bad decimal string '" + s + "'");
        bool neg = false;
        if (!head.empty() && (head[0] == '-' || head[0] == '+')) {
            neg = head[0] == '-';
            head = head.substr(1);
        }
        if (head.empty())
            head = "0";
        Int num(head);
        Int scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, tail.size());
        num = num * scale + Int(tail);
        if (neg)
            num = -num;
        Rat q(num, scale);
        q.canonicalize();
        return q;
    }
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("rational: bad string '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("rational: zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) {
    return q.get_str();
}

Int binomial(long n, long k) {
    if (k < 0 || k > n)
        return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Int binomial_general(long x, long k) {
    if (k < 0)
        return 0;
    Int num = 1;
    for (long j = 0; j < k; ++j)
        num *= Int(x - j);
    Int r;
    mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), factorial(k).get_mpz_t());
    return r;
}

Int factorial(long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
    return r;
}

}  // namespace gammacalc
