#pragma once

#include <iostream>
#include <string>
#include <utility>
#include <vector>

namespace gammacalc {

/// Batch front door: JSON in, JSON on stdout, error JSON on stderr.
/// Exit codes: 0 success, 1 malformed input or unknown verb, 2 when a
/// classify-* verb returns unknown or a verify surface finds a mismatch.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err);

/// The verb table: which library operations each verb reaches. The union
/// over all verbs covers every public operation; a test pins that down.
const std::vector<std::pair<std::string, std::vector<std::string>>>& verb_coverage();

}  // namespace gammacalc
