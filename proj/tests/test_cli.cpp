#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "gammacalc/cli.hpp"
#include "gammacalc/json_io.hpp"

using namespace gammacalc;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("gamma verb on reciprocal input") {
    const RunResult r = run({"gamma"}, R"({"coeffs":["1","4","1"],"formal_degree":2})");
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["entries"] == Json::array({"1", "2"}));
    CHECK(j["extended"] == false);
}

TEST_CASE("gamma verb on non-reciprocal input extends") {
    const RunResult r = run({"gamma", "--order", "3"}, R"({"coeffs":["3","3","1"],"formal_degree":2})");
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["extended"] == true);
    CHECK(j["entries"][0] == "3");
    CHECK(j["entries"][1] == "-3");
}

TEST_CASE("schema violations exit 1 with an error report") {
    const RunResult r = run({"gamma"}, R"({"coeffs":["1","4"]})");
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    const Json e = Json::parse(r.err);
    CHECK(e.contains("error"));
}

TEST_CASE("unknown verb prints usage and exits 1") {
    const RunResult r = run({"frobnicate"}, "{}");
    CHECK(r.code == 1);
    CHECK(r.err.find("usage:") != std::string::npos);
}

TEST_CASE("verify-identities on the triangle boundary") {
    const RunResult r = run({"verify-identities"}, R"({"facets":[["1","2"],["1","3"],["2","3"]]})");
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["f_identity"] == true);
    CHECK(j["h_identity"] == true);
}

TEST_CASE("classify verbs set exit 2 on unknown") {
    // mixed-sign input matches no hypothesis
    const RunResult r = run({"classify-bounds"}, R"({"b":["1","1","-1","1","1"],"d":4,"r":2})");
    CHECK(r.code == 2);
    const Json j = Json::parse(r.out);
    CHECK(j["claimed_sign"] == "unknown");

    const RunResult ok = run({"classify-bounds"}, R"({"b":["1","-1","1","-1","1"],"d":4,"r":1})");
    CHECK(ok.code == 0);
    CHECK(Json::parse(ok.out)["witness"] == "-5");
}

TEST_CASE("inverse round-trips the gamma verb") {
    const RunResult g = run({"gamma"}, R"({"coeffs":["1","11","11","1"],"formal_degree":3})");
    CHECK(g.code == 0);
    const RunResult h = run({"inverse"}, g.out);
    CHECK(h.code == 0);
    const Json j = Json::parse(h.out);
    CHECK(j["coeffs"] == Json::array({"1", "11", "11", "1"}));
}

TEST_CASE("volume, shift, aux and transform verbs") {
    const RunResult v = run({"volume-gamma"}, R"({"a":["1","2","4"],"d":2,"r":1})");
    CHECK(v.code == 0);
    CHECK(Json::parse(v.out)["gamma_r"] == "2");

    const RunResult s = run({"classify-shift"}, R"({"a":["1","1","1"],"d":2,"r":1})");
    CHECK(s.code == 0);
    CHECK(Json::parse(s.out)["witness"] == "-3");

    const RunResult c = run({"classify-volume"}, R"({"rho":"5","a0_sign":1,"d":4,"r":2})");
    CHECK(c.code == 0);
    CHECK(Json::parse(c.out)["witness"] == "112");

    const RunResult a = run({"decompose-aux"}, R"({"b":["3","3","1"],"d":2,"r":1})");
    CHECK(a.code == 0);
    CHECK(Json::parse(a.out)["recombined"] == "-3");

    const RunResult a2 = run({"decompose-aux", "--variant", "part2"},
                             R"({"b":["1","2","5","9","0","0","0","0"],"d":7,"r":3})");
    CHECK(a2.code == 0);
    CHECK(Json::parse(a2.out)["variant"] == "part2");

    const RunResult f = run({"fh-transform"}, R"({"f":["1","3","3"],"d":2})");
    CHECK(f.code == 0);
    CHECK(Json::parse(f.out)["h"] == Json::array({"1", "1", "1"}));

    const RunResult rr = run({"realizable"}, R"({"f":["1","1","0"],"d":2})");
    CHECK(rr.code == 0);
    CHECK(Json::parse(rr.out)["realizable"] == false);

    // an extended gamma vector has no polynomial preimage
    const RunResult inv = run({"inverse"}, R"({"entries":["3","-3"],"formal_degree":2,"extended":true})");
    CHECK(inv.code == 1);
}

TEST_CASE("classify-shift reports non-evaluable hypotheses with exit 2") {
    const RunResult r = run({"classify-shift"}, R"({"a":["1","0","1","1","1","1","1","1","1"],"d":8,"r":2})");
    CHECK(r.code == 2);
    const Json j = Json::parse(r.out);
    CHECK(j["claimed_sign"] == "unknown");
    CHECK(j["quantity"] == "gamma_r");
}

TEST_CASE("gamma-matrix verb") {
    const RunResult r = run({"gamma-matrix"}, R"({"formal_degree":2,"max_row":1})");
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["rows"][0] == Json::array({"1", "0", "0"}));
    CHECK(j["rows"][1] == Json::array({"-2", "1", "0"}));
}

TEST_CASE("input can come from a file path") {
    const std::string path = "cli_input_tmp.json";
    {
        std::ofstream f(path);
        f << R"({"coeffs":["1","4","1"],"formal_degree":2})";
    }
    const RunResult r = run({"gamma", "--input", path});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["entries"] == Json::array({"1", "2"}));
    std::remove(path.c_str());

    const RunResult missing = run({"gamma", "--input", "does_not_exist.json"});
    CHECK(missing.code == 1);
}

TEST_CASE("verify subcommand reports and exit codes") {
    const RunResult vac = run({"verify", "catalan", "--trials", "0"});
    CHECK(vac.code == 0);
    const Json j = Json::parse(vac.out);
    CHECK(j["violations"] == 0);
    CHECK(j["trials"] == 0);

    const RunResult unknown_suite = run({"verify", "nonsense"});
    CHECK(unknown_suite.code == 1);

    const RunResult diag = run({"verify", "catalan", "--trials", "1", "--diagnostic-printed-formulas"});
    CHECK(diag.code == 2);
    CHECK(Json::parse(diag.out)["violations"].get<int>() >= 1);
}

TEST_CASE("identical invocations are byte-identical") {
    const std::vector<std::pair<std::vector<std::string>, std::string>> cases = {
        {{"gamma"}, R"({"coeffs":["1","4","1"],"formal_degree":2})"},
        {{"verify-identities"}, R"({"facets":[["1","2"],["1","3"],["2","3"]]})"},
        {{"verify", "agreement", "--seed", "7", "--trials", "40"}, ""},
        {{"verify", "volume", "--seed", "9", "--trials", "30"}, ""},
        {{"classify-bounds"}, R"({"b":["1","-1","1","-1","1"],"d":4,"r":1})"},
    };
    for (const auto& [args, input] : cases) {
        const RunResult first = run(args, input);
        const RunResult second = run(args, input);
        CHECK(first.code == second.code);
        CHECK(first.out == second.out);
    }
}

TEST_CASE("every library operation is reachable through the verb table") {
    const std::set<std::string> spec_ops{
        // exact series
        "reciprocal", "translate", "derivative", "expand_binomial_power", "series_divide", "series_compose",
        // catalan
        "catalan", "catalan_power_coeff", "catalan_convolution_shifted", "catalan_convolution_unshifted",
        "lagrange_coefficient",
        // gamma core
        "gamma_by_basis", "gamma_extended", "gamma_catalan_formula", "gamma_derivative_formula", "gamma_matrix",
        "h_from_gamma",
        // simplicial
        "f_vector", "link", "verify_link_f_identity", "verify_h_link_identity", "fhex_realizable",
        "gamauxpo_decompose",
        // bounds
        "shiftgam_gamma", "shiftgam_classify", "ftypesum_gamma", "alternating_sum_sign", "boundgam_classify",
        // volume
        "volume_polynomial", "volume_q", "volume_gamma", "constant_ratio_classify", "log_concave_check"};
    std::set<std::string> covered;
    for (const auto& [verb, ops] : verb_coverage())
        covered.insert(ops.begin(), ops.end());
    for (const auto& op : spec_ops) {
        INFO("operation " << op);
        CHECK(covered.count(op) == 1);
    }
}
