#include "gammacalc/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "gammacalc/catalan.hpp"
#include "gammacalc/gamma.hpp"
#include "gammacalc/json_io.hpp"
#include "gammacalc/verify.hpp"

namespace gammacalc {

namespace {

constexpr uint64_t kDefaultSeed = 1;
constexpr int kDefaultTrials = 100;

const char* kUsage =
    "usage: gammacalc <verb> [--input <path|->] [options]\n"
    "\n"
    "verbs:\n"
    "  gamma              gamma vector of a polynomial (basis solve when reciprocal,\n"
    "                     series extension otherwise; --order caps the extension)\n"
    "  gamma-matrix       change-of-basis matrix rows {\"formal_degree\", \"max_row\"}\n"
    "  inverse            polynomial from a non-extended gamma vector\n"
    "  classify-shift     sign of gamma_r for B = R(t+1) from {\"a\", \"d\", \"r\"}\n"
    "  classify-bounds    sign dispatch for general coefficients {\"b\", \"d\", \"r\"}\n"
    "  volume-gamma       gamma_r of (uA+B)^d from {\"a\", \"d\", \"r\"}\n"
    "  classify-volume    constant-ratio trichotomy {\"rho\", \"a0_sign\", \"d\", \"r\"}\n"
    "  simplicial-verify  full per-complex report (f/h vectors, link identities)\n"
    "  verify-identities  link identity booleans for a complex {\"facets\": [...]}\n"
    "  fh-transform       f <-> h transform {\"f\"|\"h\", \"d\", \"formal\"?}\n"
    "  realizable         simplicial-poset realizability of an f-vector {\"f\", \"d\"}\n"
    "  decompose-aux      auxiliary h/f-vector decomposition of r*gamma_r\n"
    "  verify <suite>     seeded property suite; suites: agreement catalan lagrange\n"
    "                     shiftgam boundgam volume simplicial auxpo\n"
    "\n"
    "options: --input <path|->   JSON input (default: stdin)\n"
    "         --seed <u64>       suite seed (default 1)\n"
    "         --trials <n>       suite trial count (default 100)\n"
    "         --order <n>        extended-gamma truncation order\n"
    "         --variant <part1|part2>\n"
    "         --ratio-upper <C>, --ratio-lower <C>   bounds for log-concavity reports\n"
    "         --diagnostic-printed-formulas          use the printed closed forms\n";

struct Options {
    std::string verb;
    std::string suite;
    std::string input_path = "-";
    uint64_t seed = kDefaultSeed;
    int trials = kDefaultTrials;
    std::optional<int> order;
    std::string variant = "part1";
    bool diagnostic = false;
    std::optional<Rat> ratio_upper;
    std::optional<Rat> ratio_lower;
};

int fail(std::ostream& err, const std::string& message) {
    Json e;
    e["error"] = message;
    err << e.dump() << "\n";
    return 1;
}

Json read_input(const Options& opt, std::istream& in) {
    std::string text;
    if (opt.input_path == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    } else {
        std::ifstream f(opt.input_path);
        if (!f)
            throw std::invalid_argument("cannot open input file '" + opt.input_path + "'");
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw std::invalid_argument("input is not valid JSON");
    return j;
}

int require_int_field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name) || !j[name].is_number_integer())
        throw std::invalid_argument(std::string("input: missing integer field '") + name + "'");
    return j[name].get<int>();
}

int emit(std::ostream& out, const Json& j, int code = 0) {
    out << j.dump() << "\n";
    return code;
}

int emit_claim(std::ostream& out, const SignClaim& claim) {
    return emit(out, sign_claim_to_json(claim), claim.claimed_sign == Sign::unknown ? 2 : 0);
}

int run_verb(const Options& opt, std::istream& in, std::ostream& out) {
    if (opt.verb == "verify") {
        const SuiteReport rep = run_suite(opt.suite, opt.seed, opt.trials, opt.diagnostic);
        Json j;
        j["suite"] = rep.suite;
        j["seed"] = rep.seed;
        j["trials"] = rep.trials;
        j["violations"] = rep.violations;
        if (!rep.first_counterexample.empty())
            j["first_counterexample"] = rep.first_counterexample;
        if (!rep.notes.empty())
            j["notes"] = rep.notes;
        return emit(out, j, rep.violations == 0 ? 0 : 2);
    }

    if (opt.verb == "gamma") {
        const Polynomial h = polynomial_from_json(read_input(opt, in));
        GammaVector g;
        if (opt.order)
            g = gamma_extended(h, *opt.order);
        else if (h.is_reciprocal())
            g = gamma_by_basis(h);
        else
            g = gamma_extended(h, h.formal_degree());
        return emit(out, gamma_vector_to_json(g));
    }
    if (opt.verb == "gamma-matrix") {
        const Json j = read_input(opt, in);
        const int n = require_int_field(j, "formal_degree");
        int max_row = n / 2;
        if (j.contains("max_row"))
            max_row = require_int_field(j, "max_row");
        if (opt.order)
            max_row = *opt.order;
        return emit(out, gamma_matrix_to_json(gamma_matrix(n, max_row)));
    }
    if (opt.verb == "inverse") {
        const GammaVector g = gamma_vector_from_json(read_input(opt, in));
        return emit(out, polynomial_to_json(h_from_gamma(g)));
    }
    if (opt.verb == "classify-shift") {
        const Json j = read_input(opt, in);
        return emit_claim(out, shiftgam_classify(rat_vector_from_json(j.contains("a") ? j["a"] : Json()),
                                                 require_int_field(j, "d"), require_int_field(j, "r")));
    }
    if (opt.verb == "classify-bounds") {
        const Json j = read_input(opt, in);
        const std::vector<Rat> b = rat_vector_from_json(j.contains("b") ? j["b"] : Json());
        const int d = require_int_field(j, "d");
        const int r = require_int_field(j, "r");
        if (opt.diagnostic) {
            Json dj;
            dj["gamma_r_printed"] = rat_to_string(ftypesum_gamma_printed(b, d, r));
            dj["gamma_r"] = rat_to_string(ftypesum_gamma(b, d, r));
            dj["claim"] = sign_claim_to_json(boundgam_classify(b, d, r));
            return emit(out, dj);
        }
        return emit_claim(out, boundgam_classify(b, d, r));
    }
    if (opt.verb == "volume-gamma") {
        const Json j = read_input(opt, in);
        const IntersectionSequence s = intersection_sequence_from_json(j);
        const int r = require_int_field(j, "r");
        Json o;
        o["r"] = r;
        o["gamma_r"] = rat_to_string(volume_gamma(s, r));
        o["q"] = rat_vector_to_json(volume_q(s).q);
        o["volume_polynomial"] = polynomial_to_json(volume_polynomial(s));
        if (opt.ratio_upper || opt.ratio_lower)
            o["log_concavity"] = log_concavity_report_to_json(log_concave_check(s.a, opt.ratio_upper, opt.ratio_lower));
        return emit(out, o);
    }
    if (opt.verb == "classify-volume") {
        const Json j = read_input(opt, in);
        const Rat rho = rat_from_json(j.contains("rho") ? j["rho"] : Json());
        return emit_claim(out, constant_ratio_classify(rho, require_int_field(j, "a0_sign"),
                                                       require_int_field(j, "d"), require_int_field(j, "r")));
    }
    if (opt.verb == "simplicial-verify" || opt.verb == "verify-identities") {
        const SimplicialComplex k = complex_from_json(read_input(opt, in));
        const IdentityReport fr = verify_link_f_identity(k);
        const IdentityReport hr = verify_h_link_identity(k);
        Json o;
        if (opt.verb == "verify-identities") {
            o["f_identity"] = fr.holds;
            o["h_identity"] = hr.holds;
            if (!fr.holds)
                o["f_first_mismatch"] = fr.first_mismatch;
            if (!hr.holds)
                o["h_first_mismatch"] = hr.first_mismatch;
        } else {
            const FHVectors fh = f_vector(k);
            o["dimension"] = k.dimension();
            o["fh"] = fh_to_json(fh);
            o["f_identity"] = identity_report_to_json(fr);
            o["h_identity"] = identity_report_to_json(hr);
            o["realizable"] = fhex_realizable(fh);
        }
        return emit(out, o, fr.holds && hr.holds ? 0 : 2);
    }
    if (opt.verb == "fh-transform") {
        const Json j = read_input(opt, in);
        const int d = require_int_field(j, "d");
        const bool formal = j.contains("formal") && j["formal"].is_boolean() ? j["formal"].get<bool>() : false;
        const bool has_f = j.contains("f"), has_h = j.contains("h");
        if (has_f == has_h)
            throw std::invalid_argument("input: provide exactly one of 'f' or 'h'");
        const FHVectors fh = has_f ? make_fh_from_f(rat_vector_from_json(j["f"]), d, formal)
                                   : make_fh_from_h(rat_vector_from_json(j["h"]), d, formal);
        return emit(out, fh_to_json(fh));
    }
    if (opt.verb == "realizable") {
        const Json j = read_input(opt, in);
        const FHVectors fh = make_fh_from_f(rat_vector_from_json(j.contains("f") ? j["f"] : Json()),
                                            require_int_field(j, "d"), false);
        Json o;
        o["realizable"] = fhex_realizable(fh);
        return emit(out, o);
    }
    if (opt.verb == "decompose-aux") {
        const Json j = read_input(opt, in);
        const AuxVariant v = opt.variant == "part2" ? AuxVariant::part2 : AuxVariant::part1;
        const AuxDecomposition dec = gamauxpo_decompose(rat_vector_from_json(j.contains("b") ? j["b"] : Json()),
                                                        require_int_field(j, "d"), require_int_field(j, "r"), v);
        return emit(out, aux_decomposition_to_json(dec));
    }
    throw std::invalid_argument("unknown verb '" + opt.verb + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options opt;
    if (args.empty()) {
        err << kUsage;
        return 1;
    }
    opt.verb = args[0];
    size_t i = 1;
    if (opt.verb == "verify") {
        if (args.size() < 2 || args[1].rfind("--", 0) == 0)
            return fail(err, "verify requires a suite name");
        opt.suite = args[1];
        bool known = false;
        for (const auto& s : suite_names())
            known = known || s == opt.suite;
        if (!known)
            return fail(err, "unknown suite '" + opt.suite + "'");
        i = 2;
    }
    try {
        for (; i < args.size(); ++i) {
            const std::string& a = args[i];
            auto next = [&]() -> const std::string& {
                if (i + 1 >= args.size())
                    throw std::invalid_argument("flag " + a + " needs a value");
                return args[++i];
            };
            if (a == "--input")
                opt.input_path = next();
            else if (a == "--seed")
                opt.seed = std::stoull(next());
            else if (a == "--trials")
                opt.trials = std::stoi(next());
            else if (a == "--order")
                opt.order = std::stoi(next());
            else if (a == "--variant") {
                opt.variant = next();
                if (opt.variant != "part1" && opt.variant != "part2")
                    throw std::invalid_argument("--variant must be part1 or part2");
            } else if (a == "--ratio-upper")
                opt.ratio_upper = rat_from_string(next());
            else if (a == "--ratio-lower")
                opt.ratio_lower = rat_from_string(next());
            else if (a == "--diagnostic-printed-formulas")
                opt.diagnostic = true;
            else
                throw std::invalid_argument("unknown flag '" + a + "'");
        }
        if (opt.trials < 0)
            throw std::invalid_argument("--trials must be nonnegative");
        return run_verb(opt, in, out);
    } catch (const std::exception& e) {
        if (std::string(e.what()).rfind("unknown verb", 0) == 0) {
            err << kUsage;
            return 1;
        }
        return fail(err, e.what());
    }
}

int run_cli(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run_cli(args, in, out, err);
}

const std::vector<std::pair<std::string, std::vector<std::string>>>& verb_coverage() {
    static const std::vector<std::pair<std::string, std::vector<std::string>>> table{
        {"gamma", {"gamma_by_basis", "gamma_extended", "series_divide", "series_compose", "expand_binomial_power"}},
        {"gamma-matrix", {"gamma_matrix", "catalan_power_coeff"}},
        {"inverse", {"h_from_gamma"}},
        {"classify-shift", {"shiftgam_classify", "shiftgam_gamma"}},
        {"classify-bounds", {"boundgam_classify", "ftypesum_gamma"}},
        {"volume-gamma", {"volume_gamma", "volume_q", "volume_polynomial", "log_concave_check"}},
        {"classify-volume", {"constant_ratio_classify"}},
        {"simplicial-verify",
         {"f_vector", "link", "verify_link_f_identity", "verify_h_link_identity", "fhex_realizable"}},
        {"verify-identities", {"verify_link_f_identity", "verify_h_link_identity", "link"}},
        {"fh-transform", {"f_vector"}},
        {"realizable", {"fhex_realizable"}},
        {"decompose-aux", {"gamauxpo_decompose"}},
        {"verify agreement",
         {"gamma_extended", "gamma_catalan_formula", "gamma_derivative_formula", "gamma_matrix", "gamma_by_basis",
          "h_from_gamma", "derivative"}},
        {"verify catalan",
         {"catalan", "catalan_power_coeff", "catalan_convolution_shifted", "catalan_convolution_unshifted",
          "series_compose"}},
        {"verify lagrange", {"lagrange_coefficient"}},
        {"verify shiftgam", {"shiftgam_gamma", "shiftgam_classify", "reciprocal", "translate"}},
        {"verify boundgam", {"ftypesum_gamma", "alternating_sum_sign", "gamma_derivative_formula"}},
        {"verify volume",
         {"volume_polynomial", "volume_q", "volume_gamma", "log_concave_check", "constant_ratio_classify"}},
        {"verify simplicial", {"f_vector", "link", "verify_link_f_identity", "verify_h_link_identity"}},
        {"verify auxpo", {"gamauxpo_decompose", "fhex_realizable"}},
    };
    return table;
}

}  // namespace gammacalc
