#include "gammacalc/json_io.hpp"

namespace gammacalc {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond)
        throw std::invalid_argument("input: " + what);
}

const Json& field(const Json& j, const char* name) {
    require(j.is_object(), "expected an object");
    auto it = j.find(name);
    require(it != j.end(), std::string("missing field '") + name + "'");
    return *it;
}

}  // namespace

Rat rat_from_json(const Json& j) {
    if (j.is_string())
        return rat_from_string(j.get<std::string>());
    if (j.is_number_integer())
        return Rat(static_cast<long>(j.get<long long>()));
    throw std::invalid_argument("input: rationals must be strings or integers, got " + j.dump());
}

Json rat_to_json(const Rat& q) {
    return rat_to_string(q);
}

std::vector<Rat> rat_vector_from_json(const Json& j) {
    require(j.is_array(), "expected an array of rationals");
    std::vector<Rat> out;
    out.reserve(j.size());
    for (const auto& e : j)
        out.push_back(rat_from_json(e));
    return out;
}

Json rat_vector_to_json(const std::vector<Rat>& v) {
    Json out = Json::array();
    for (const auto& q : v)
        out.push_back(rat_to_json(q));
    return out;
}

Polynomial polynomial_from_json(const Json& j) {
    std::vector<Rat> coeffs = rat_vector_from_json(field(j, "coeffs"));
    const Json& fd = field(j, "formal_degree");
    require(fd.is_number_integer() && fd.get<long long>() >= 0, "formal_degree must be a nonnegative integer");
    return Polynomial(std::move(coeffs), fd.get<int>());
}

Json polynomial_to_json(const Polynomial& p) {
    Json out;
    out["coeffs"] = rat_vector_to_json(p.coeffs());
    out["formal_degree"] = p.formal_degree();
    return out;
}

GammaVector gamma_vector_from_json(const Json& j) {
    GammaVector g;
    g.entries = rat_vector_from_json(field(j, "entries"));
    const Json& fd = field(j, "formal_degree");
    require(fd.is_number_integer() && fd.get<long long>() >= 0, "formal_degree must be a nonnegative integer");
    g.formal_degree = fd.get<int>();
    const Json& ext = field(j, "extended");
    require(ext.is_boolean(), "extended must be a boolean");
    g.extended = ext.get<bool>();
    return g;
}

Json gamma_vector_to_json(const GammaVector& g) {
    Json out;
    out["entries"] = rat_vector_to_json(g.entries);
    out["formal_degree"] = g.formal_degree;
    out["extended"] = g.extended;
    return out;
}

Json gamma_matrix_to_json(const GammaMatrix& m) {
    Json rows = Json::array();
    for (const auto& row : m.rows)
        rows.push_back(rat_vector_to_json(row));
    Json out;
    out["formal_degree"] = m.formal_degree;
    out["rows"] = rows;
    return out;
}

SimplicialComplex complex_from_json(const Json& j) {
    const Json& facets = field(j, "facets");
    require(facets.is_array(), "facets must be an array");
    std::vector<std::vector<std::string>> fl;
    for (const auto& f : facets) {
        require(f.is_array(), "each facet must be an array of vertex labels");
        std::vector<std::string> labels;
        for (const auto& v : f) {
            require(v.is_string(), "vertex labels must be strings");
            labels.push_back(v.get<std::string>());
        }
        fl.push_back(std::move(labels));
    }
    return SimplicialComplex(fl);
}

Json fh_to_json(const FHVectors& fh) {
    Json out;
    out["f"] = rat_vector_to_json(fh.f);
    out["h"] = rat_vector_to_json(fh.h);
    out["d"] = fh.d;
    out["formal"] = fh.formal;
    return out;
}

Json identity_report_to_json(const IdentityReport& r) {
    Json out;
    out["holds"] = r.holds;
    if (!r.holds)
        out["first_mismatch"] = r.first_mismatch;
    return out;
}

Json sign_claim_to_json(const SignClaim& c) {
    Json out;
    out["r"] = c.r;
    out["quantity"] = c.quantity;
    out["claimed_sign"] = sign_to_string(c.claimed_sign);
    out["hypothesis"] = c.hypothesis;
    out["witness"] = rat_to_string(c.witness);
    return out;
}

IntersectionSequence intersection_sequence_from_json(const Json& j) {
    std::vector<Rat> a = rat_vector_from_json(field(j, "a"));
    const Json& d = field(j, "d");
    require(d.is_number_integer() && d.get<long long>() >= 1, "d must be a positive integer");
    return IntersectionSequence(std::move(a), d.get<int>());
}

Json aux_decomposition_to_json(const AuxDecomposition& a) {
    Json out;
    out["variant"] = a.variant == AuxVariant::part1 ? "part1" : "part2";
    out["d"] = a.d;
    out["r"] = a.r;
    out["aux_d"] = a.aux_d;
    out["fP"] = rat_vector_to_json(a.fP);
    out["fQ"] = rat_vector_to_json(a.fQ);
    out["correction"] = rat_to_string(a.correction);
    out["recombined"] = rat_to_string(a.recombined);
    out["fhex_P"] = a.fhex_P;
    out["fhex_Q"] = a.fhex_Q;
    return out;
}

Json log_concavity_report_to_json(const LogConcavityReport& r) {
    Json out;
    out["log_concave"] = r.log_concave;
    if (r.first_violation_k)
        out["first_violation_k"] = *r.first_violation_k;
    out["all_positive"] = r.all_positive;
    if (r.log_concave && r.all_positive)
        out["ratios_non_increasing"] = r.ratios_non_increasing;
    if (r.upper_bound_all) {
        out["upper_bound_all"] = *r.upper_bound_all;
        out["upper_bound_first_pair"] = *r.upper_bound_first_pair;
    }
    if (r.lower_bound_all) {
        out["lower_bound_all"] = *r.lower_bound_all;
        out["lower_bound_last_pair"] = *r.lower_bound_last_pair;
    }
    return out;
}

}  // namespace gammacalc
