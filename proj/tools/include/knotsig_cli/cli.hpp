#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "knotsig/gassner.hpp"
#include "knotsig/linksig.hpp"
#include "knotsig/maslov.hpp"

namespace knotsig::cli {

enum ExitCode : int {
  kOk = 0,
  kPropertyFailure = 1,
  kInputError = 2,
  kOutsideGuarantee = 3,
  kPrecisionExhausted = 4,
};

enum class OutputFormat { json, csv, text };

struct RunConfig {
  int precision = kDefaultPrecision;  // >= 64
  double tol = kDefaultTolerance;     // in (0, 1e-3]
  std::uint64_t seed = 7;
  int trials = 100;
  OutputFormat format = OutputFormat::json;
  int jobs = 1;

  void validate() const;  // throws ParseError
};

// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

nlohmann::ordered_json to_json(const SignatureResult& r);
SignatureResult signature_result_from_json(const nlohmann::json& j);

// "(a, b; c, d)"; rows separated by semicolons.
std::string to_string(const PolyMatrix& m);

// All points (a_1/N, ..., a_mu/N) with every a_i in 1..N-1, last coordinate fastest.
std::vector<TorusPoint> torus_grid(int mu, int N);

// {"xi": M, "L1": M, "L2": M, "L3": M}; M is a list of rows, entries either
// numbers or [re, im]. Subspaces are given by spanning columns.
template <class S>
IsotropicTriple<S> parse_triple_json(const std::string& text, double tol);

}  // namespace knotsig::cli
