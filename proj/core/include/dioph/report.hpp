#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dioph/analysis.hpp"
#include "dioph/numbers.hpp"

namespace dioph {

struct RunInfo {
  std::string xi_spec;
  std::string eta_spec;
  std::string x_max;
  std::size_t max_depth = 0;
  std::optional<Rational> lambda;
  std::optional<Rational> theta;
  std::string theta_rule;
  std::string conic;
  std::optional<std::size_t> point_count;
  std::optional<std::size_t> i0;
};

struct BoundsSummary {
  std::optional<std::string> evertse_log2;
  std::optional<std::string> w;
  std::optional<std::string> log_bound;
  std::vector<std::pair<std::string, std::string>> parameters;
};

struct ReportInput {
  std::optional<RunInfo> run;
  std::optional<ExponentEstimate> exponent;
  std::vector<LemmaReport> lemmas;
  std::optional<BoundsSummary> bounds;
};

// Serialises the run as a JSON document with a fixed field order:
// run, exponent, lemmas{W, X, f, main, dirichlet}, bounds. Absent sections are
// omitted. Throws InsufficientData when the input is empty.
std::string build_report(const ReportInput& input);

// Decimal text used for approximate values in reports; always 9 places.
std::string format_approx(double v);

}  // namespace dioph
