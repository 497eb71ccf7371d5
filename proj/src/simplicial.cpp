#include "gammacalc/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "gammacalc/bounds.hpp"

namespace gammacalc {

SimplicialComplex::SimplicialComplex(const std::vector<std::vector<std::string>>& facet_labels) {
    std::set<std::string> label_set;
    for (const auto& f : facet_labels)
        for (const auto& v : f)
            label_set.insert(v);
    labels_.assign(label_set.begin(), label_set.end());
    if (labels_.size() > 64)
        throw std::invalid_argument("complex: more than 64 vertices");
    std::map<std::string, int> index;
    for (size_t i = 0; i < labels_.size(); ++i)
        index[labels_[i]] = static_cast<int>(i);

    std::set<uint64_t> raw;
    for (const auto& f : facet_labels) {
        uint64_t m = 0;
        for (const auto& v : f)
            m |= uint64_t(1) << index[v];
        raw.insert(m);
    }
    for (uint64_t m : raw) {
        bool dominated = false;
        for (uint64_t o : raw)
            if (o != m && (m & o) == m) {
                dominated = true;
                break;
            }
        if (!dominated)
            facets_.push_back(m);
    }
    std::sort(facets_.begin(), facets_.end());
    dimension_ = -1;
    for (uint64_t m : facets_)
        dimension_ = std::max(dimension_, std::popcount(m) - 1);
}

SimplicialComplex SimplicialComplex::simplex_boundary(int d) {
    if (d < 1)
        throw std::invalid_argument("simplex_boundary: d >= 1 required");
    std::vector<std::vector<std::string>> facets;
    for (int skip = 0; skip <= d; ++skip) {
        std::vector<std::string> f;
        for (int v = 0; v <= d; ++v)
            if (v != skip)
                f.push_back(std::to_string(v + 1));
        facets.push_back(std::move(f));
    }
    return SimplicialComplex(facets);
}

SimplicialComplex SimplicialComplex::cross_polytope_boundary(int d) {
    if (d < 1)
        throw std::invalid_argument("cross_polytope_boundary: d >= 1 required");
    std::vector<std::vector<std::string>> facets;
    for (int pick = 0; pick < (1 << d); ++pick) {
        std::vector<std::string> f;
        for (int i = 0; i < d; ++i)
            f.push_back(std::to_string(i + 1) + ((pick >> i) & 1 ? "+" : "-"));
        facets.push_back(std::move(f));
    }
    return SimplicialComplex(facets);
}

bool SimplicialComplex::is_face(uint64_t mask) const {
    for (uint64_t f : facets_)
        if ((mask & f) == mask)
            return true;
    return mask == 0;  // the empty face is always present
}

std::vector<uint64_t> SimplicialComplex::faces() const {
    std::unordered_set<uint64_t> seen;
    seen.insert(0);
    for (uint64_t f : facets_) {
        // enumerate all submasks of f
        uint64_t s = f;
        while (true) {
            seen.insert(s);
            if (s == 0)
                break;
            s = (s - 1) & f;
        }
    }
    std::vector<uint64_t> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<uint64_t> SimplicialComplex::faces_of_size(int k) const {
    std::vector<uint64_t> out;
    for (uint64_t m : faces())
        if (std::popcount(m) == k)
            out.push_back(m);
    return out;
}

std::vector<uint64_t> SimplicialComplex::vertices() const {
    return faces_of_size(1);
}

SimplicialComplex SimplicialComplex::link(uint64_t face_mask) const {
    if (!is_face(face_mask))
        throw std::domain_error("link: argument is not a face");
    SimplicialComplex lk;
    lk.labels_ = labels_;
    for (uint64_t f : facets_)
        if ((face_mask & f) == face_mask)
            lk.facets_.push_back(f & ~face_mask);
    if (lk.facets_.empty())
        lk.facets_.push_back(0);
    std::sort(lk.facets_.begin(), lk.facets_.end());
    lk.dimension_ = -1;
    for (uint64_t m : lk.facets_)
        lk.dimension_ = std::max(lk.dimension_, std::popcount(m) - 1);
    return lk;
}

uint64_t SimplicialComplex::mask_of(const std::vector<std::string>& face_labels) const {
    uint64_t m = 0;
    for (const auto& v : face_labels) {
        auto it = std::find(labels_.begin(), labels_.end(), v);
        if (it == labels_.end())
            throw std::invalid_argument("unknown vertex label '" + v + "'");
        m |= uint64_t(1) << (it - labels_.begin());
    }
    return m;
}

std::vector<std::string> SimplicialComplex::labels_of(uint64_t mask) const {
    std::vector<std::string> out;
    for (size_t i = 0; i < labels_.size(); ++i)
        if (mask >> i & 1)
            out.push_back(labels_[i]);
    return out;
}

Rat h_transform_at(const std::vector<Rat>& f, int d, int j) {
    Rat acc(0);
    const int top = std::min<int>(j, static_cast<int>(f.size()) - 1);
    for (int i = 0; i <= top; ++i) {
        if (f[i] == 0)
            continue;
        const int s = ((j - i) % 2 == 0) ? 1 : -1;
        acc += Rat(s) * Rat(binomial_general(static_cast<long>(d) - i, j - i)) * f[i];
    }
    return acc;
}

std::vector<Rat> h_from_f_vector(const std::vector<Rat>& f, int d) {
    std::vector<Rat> h(static_cast<size_t>(d) + 1);
    for (int j = 0; j <= d; ++j)
        h[j] = h_transform_at(f, d, j);
    return h;
}

std::vector<Rat> f_from_h_vector(const std::vector<Rat>& h, int d) {
    std::vector<Rat> f(static_cast<size_t>(d) + 1, Rat(0));
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= std::min<int>(i, static_cast<int>(h.size()) - 1); ++j)
            f[i] += Rat(binomial_general(static_cast<long>(d) - j, i - j)) * h[j];
    return f;
}

FHVectors make_fh_from_f(std::vector<Rat> f, int d, bool formal) {
    if (d < 0)
        throw std::invalid_argument("fh: negative d");
    if (!formal) {
        if (static_cast<int>(f.size()) != d + 1)
            throw std::invalid_argument("fh: f must have d+1 entries");
        if (f[0] != 1)
            throw std::invalid_argument("fh: f_{-1} must be 1 unless formal");
    }
    FHVectors out;
    out.d = d;
    out.formal = formal;
    out.h = h_from_f_vector(f, d);
    out.f = std::move(f);
    return out;
}

FHVectors make_fh_from_h(std::vector<Rat> h, int d, bool formal) {
    if (d < 0)
        throw std::invalid_argument("fh: negative d");
    FHVectors out;
    out.d = d;
    out.formal = formal;
    out.f = f_from_h_vector(h, d);
    out.h = std::move(h);
    out.h.resize(static_cast<size_t>(d) + 1, Rat(0));
    if (!formal && out.f[0] != 1)
        throw std::invalid_argument("fh: f_{-1} must be 1 unless formal");
    return out;
}

FHVectors f_vector(const SimplicialComplex& k) {
    const int d = k.d();
    std::vector<Rat> f(static_cast<size_t>(d) + 1, Rat(0));
    for (uint64_t m : k.faces())
        f[std::popcount(m)] += 1;
    return make_fh_from_f(std::move(f), d, false);
}

Polynomial f_polynomial(const SimplicialComplex& k) {
    FHVectors fh = f_vector(k);
    return Polynomial(fh.f, fh.d);
}

Polynomial h_polynomial(const SimplicialComplex& k, int param_d) {
    const int d = k.d();
    std::vector<Rat> f(static_cast<size_t>(d) + 1, Rat(0));
    for (uint64_t m : k.faces())
        f[std::popcount(m)] += 1;
    std::vector<Rat> h(static_cast<size_t>(param_d) + 1);
    for (int j = 0; j <= param_d; ++j)
        h[j] = h_transform_at(f, param_d, j);
    return Polynomial(std::move(h), param_d);
}

namespace {

bool coeffwise_equal(const Polynomial& a, const Polynomial& b, int* bad_index) {
    const int top = std::max(a.formal_degree(), b.formal_degree());
    for (int i = 0; i <= top; ++i)
        if (a.coeff(i) != b.coeff(i)) {
            if (bad_index)
                *bad_index = i;
            return false;
        }
    return true;
}

}  // namespace

IdentityReport verify_link_f_identity(const SimplicialComplex& k) {
    IdentityReport report;
    const int d = k.d();
    const Polynomial fp = f_polynomial(k);
    Polynomial deriv = fp;
    Rat kfact(1);
    for (int sz = 0; sz <= d; ++sz) {
        if (sz > 0) {
            deriv = derivative(deriv);
            kfact *= sz;
        }
        Polynomial lhs = Polynomial::zero(std::max(d - sz, 0));
        for (uint64_t face : k.faces_of_size(sz))
            lhs = lhs + f_polynomial(k.link(face));
        const Polynomial rhs = deriv * (Rat(1) / kfact);
        int bad = 0;
        if (!coeffwise_equal(lhs, rhs, &bad)) {
            report.holds = false;
            report.first_mismatch = "k=" + std::to_string(sz) + " coefficient " + std::to_string(bad) +
                                    ": links give " + rat_to_string(lhs.coeff(bad)) + ", derivative gives " +
                                    rat_to_string(rhs.coeff(bad));
            return report;
        }
    }
    return report;
}

IdentityReport verify_h_link_identity(const SimplicialComplex& k) {
    IdentityReport report;
    const int d = k.d();
    const Polynomial h = h_polynomial(k, d);
    const Polynomial hp = derivative(h);
    const Polynomial one_minus_w(std::vector<Rat>{Rat(1), Rat(-1)}, 1);
    const Polynomial one_plus_w(std::vector<Rat>{Rat(1), Rat(1)}, 1);

    Polynomial link_sum = Polynomial::zero(std::max(d - 1, 0));
    for (uint64_t p : k.vertices())
        link_sum = link_sum + h_polynomial(k.link(p), std::max(d - 1, 0));

    const Polynomial lhs1 = one_minus_w * hp;
    const Polynomial rhs1 = link_sum - h * Rat(d);
    int bad = 0;
    if (!coeffwise_equal(lhs1, rhs1, &bad)) {
        report.holds = false;
        report.first_mismatch = "derivative identity, coefficient " + std::to_string(bad) + ": " +
                                rat_to_string(lhs1.coeff(bad)) + " vs " + rat_to_string(rhs1.coeff(bad));
        return report;
    }

    const Polynomial lhs2 = one_minus_w * (one_plus_w * hp - h * Rat(d));
    const Polynomial rhs2 = one_plus_w * link_sum - h * Rat(2 * d);
    if (!coeffwise_equal(lhs2, rhs2, &bad)) {
        report.holds = false;
        report.first_mismatch = "local-global form, coefficient " + std::to_string(bad) + ": " +
                                rat_to_string(lhs2.coeff(bad)) + " vs " + rat_to_string(rhs2.coeff(bad));
        return report;
    }
    return report;
}

bool fhex_realizable(const FHVectors& fh) {
    if (fh.formal)
        throw std::invalid_argument("fhex_realizable: requires a non-formal f-vector");
    for (const Rat& x : fh.f)
        if (!is_integer(x))
            throw std::domain_error("fhex_realizable: non-integer entry");
    for (int i = 0; i <= fh.d - 1; ++i)
        if (fh.f[i + 1] < Rat(binomial(fh.d, i + 1)))
            return false;
    return true;
}

namespace {

bool fhex_on_slots(const std::vector<Rat>& f, int aux_d) {
    // realizability bounds on the non-negative-index slots only
    for (size_t s = 1; s < f.size(); ++s) {
        if (!is_integer(f[s]))
            return false;
        if (f[s] < Rat(binomial(aux_d, static_cast<long>(s))))
            return false;
    }
    return true;
}

}  // namespace

AuxDecomposition gamauxpo_decompose(const std::vector<Rat>& b, int d, int r, AuxVariant variant) {
    if (r < 1 || 2 * r > d)
        throw std::out_of_range("gamauxpo_decompose: requires 1 <= r <= d/2");
    if (static_cast<int>(b.size()) != d + 1)
        throw std::invalid_argument("gamauxpo_decompose: b must have d+1 entries");

    AuxDecomposition out;
    out.variant = variant;
    out.d = d;
    out.r = r;
    out.aux_d = d - r - 1;
    const int sr = (r % 2 == 0) ? 1 : -1;

    // fQ carries b_0 in the empty-face slot and b_k at f_{k-1}, k = 1..r-1
    out.fQ.assign(static_cast<size_t>(r), Rat(0));
    for (int s = 0; s <= r - 1; ++s)
        out.fQ[s] = b[s];

    if (variant == AuxVariant::part1) {
        out.fP.assign(static_cast<size_t>(r) + 1, Rat(0));
        out.fP[0] = 1;
        for (int s = 1; s <= r - 1; ++s)
            out.fP[s] = Rat(s) * b[s];
        // top slot cancels in the identity; pinned to the realizability bound
        out.fP[r] = Rat(binomial_general(out.aux_d, r));
        out.correction = Rat(r) * b[r] - Rat(sr) * Rat(binomial_general(out.aux_d, r));
        out.recombined = out.h_P_at(r) - out.fP[r] - Rat(d) * out.h_Q_at(r - 1) + out.correction;
    } else {
        for (int s = 1; s <= r - 1; ++s) {
            Rat scaled = Rat(s) * b[s] / Rat(r - s);
            if (!is_integer(scaled))
                throw std::domain_error("gamauxpo_decompose: part2 requires (r-k) | k*b_k, violated at k=" +
                                        std::to_string(s));
        }
        out.fP.assign(static_cast<size_t>(r), Rat(0));
        out.fP[0] = 1;
        for (int s = 1; s <= r - 1; ++s)
            out.fP[s] = Rat(d - 2 * r) * Rat(s) * b[s] / Rat(r - s);
        out.correction = Rat(r) * b[r] - Rat(sr) * Rat(binomial_general(out.aux_d, r - 1));
        out.recombined = -out.h_P_at(r - 1) - Rat(d) * out.h_Q_at(r - 1) + out.correction;
    }

    out.fhex_P = fhex_on_slots(out.fP, out.aux_d);
    out.fhex_Q = fhex_on_slots(out.fQ, out.aux_d);

    const Rat expected = Rat(r) * ftypesum_gamma(b, d, r);
    if (out.recombined != expected)
        throw std::logic_error("gamauxpo_decompose: recombination defect, got " + rat_to_string(out.recombined) +
                               ", expected " + rat_to_string(expected));
    return out;
}

}  // namespace gammacalc
