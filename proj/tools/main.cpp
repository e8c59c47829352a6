// dioph: minimal points, lemma checks and bound calculators from the shell.
//
// Exit codes: 0 ok, 1 unexpected failure, 2 bad arguments or out-of-range
// parameters, 3 precision exhausted, 4 a lemma check was violated.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "dioph/analysis.hpp"
#include "dioph/bounds.hpp"
#include "dioph/errors.hpp"
#include "dioph/minimal_points.hpp"
#include "dioph/report.hpp"
#include "dioph/sequence_io.hpp"
#include "dioph/spec_text.hpp"
#include "dioph/words.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitPrecision = 3;
constexpr int kExitViolated = 4;

struct GlobalOptions {
  std::string output;
  std::string format = "csv";
  unsigned threads = 1;
  std::size_t max_depth = 512;
  std::size_t initial_depth = 64;
};

struct RunOptions {
  std::string xi = "word:fib(1,2)";
  std::string eta = "sq:xi";
  std::uint64_t x_max = 10000;
  std::string lambda = "3/5";
  std::string theta = "auto";
  std::string conic = "parabola";
  std::string replay;
  std::string c;
  std::string d;
  std::string H;
};

class UsageError : public dioph::Error {
 public:
  using dioph::Error::Error;
};

void emit(const GlobalOptions& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.output, std::ios::binary);
  if (!out) throw UsageError("cannot open output file '" + g.output + "'");
  out << text;
}

std::pair<dioph::RealSpec, dioph::RealSpec> parse_pair(const RunOptions& r) {
  dioph::RealSpec xi = dioph::parse_real_spec(r.xi);
  dioph::RealSpec eta = r.eta == "sq:xi" ? dioph::RealSpec::square(xi) : dioph::parse_real_spec(r.eta);
  return {xi, eta};
}

std::vector<dioph::MinimalPoint> compute_sequence(const GlobalOptions& g, const RunOptions& r) {
  if (!r.replay.empty()) {
    std::ifstream in(r.replay);
    if (!in) throw UsageError("cannot open replay file '" + r.replay + "'");
    return dioph::read_sequence_csv(in);
  }
  if (r.x_max < 1) throw UsageError("--x-max must be at least 1");
  auto [xi, eta] = parse_pair(r);
  dioph::SweepOptions opts;
  opts.initial_depth = std::min(g.initial_depth, g.max_depth);
  opts.max_depth = g.max_depth;
  opts.threads = g.threads;
  return dioph::minimal_point_sequence(xi, eta, r.x_max, opts);
}

dioph::Rational parse_lambda(const std::string& text) {
  dioph::Rational lambda = dioph::parse_rational(text);
  if (lambda <= dioph::Rational(1, 2) || lambda >= 1) {
    throw UsageError("--lambda must lie in (1/2, 1), got " + text);
  }
  return lambda;
}

std::size_t default_tail_from(const std::vector<dioph::MinimalPoint>& seq) {
  return dioph::first_index_with_next_at_least(seq, 1000).value_or(1);
}

int cmd_word(const std::string& id, std::size_t n) {
  dioph::Word w = dioph::generate(dioph::parse_word_spec(id), n);
  std::ostringstream out;
  for (std::size_t k = 0; k < w.size(); ++k) out << (k ? "," : "") << w[k];
  std::cout << out.str() << '\n';
  return kExitOk;
}

int cmd_minimal_points(const GlobalOptions& g, const RunOptions& r) {
  auto seq = compute_sequence(g, r);
  emit(g, g.format == "json" ? dioph::sequence_json(seq) : dioph::sequence_csv(seq));

  std::ostringstream summary;
  summary << "points=" << seq.size() << " last_X=" << seq.back().X.get_str();
  if (seq.back().delta.hi == 0) {
    summary << " delta=0 (rational input, sweep stopped)";
  } else if (seq.size() >= 2) {
    auto est = dioph::estimate_lambda(seq, default_tail_from(seq));
    summary << " tail_from=" << est.tail_from << " tail_lambda_min~" << dioph::format_approx(est.tail_min)
            << " (at i=" << est.tail_argmin << ")";
  }
  (g.output.empty() ? std::cerr : std::cout) << summary.str() << '\n';
  return kExitOk;
}

int cmd_verify(const GlobalOptions& g, const RunOptions& r) {
  const dioph::Rational lambda = parse_lambda(r.lambda);
  const dioph::Rational theta = r.theta == "auto" ? dioph::auto_theta(lambda) : dioph::parse_rational(r.theta);
  const dioph::ConicForm phi = dioph::parse_conic(r.conic);
  if (r.replay.empty()) parse_pair(r);  // validate specs before the sweep

  auto seq = compute_sequence(g, r);
  auto I = dioph::index_set_I(seq);

  dioph::ReportInput input;
  dioph::RunInfo run;
  run.xi_spec = r.xi;
  run.eta_spec = r.eta;
  run.x_max = std::to_string(r.x_max);
  run.max_depth = g.max_depth;
  run.lambda = lambda;
  run.theta = theta;
  run.theta_rule = r.theta == "auto" ? "auto: (1-lambda)/(2lambda-1) * 21/20" : "explicit";
  run.conic = r.conic;
  run.point_count = seq.size();
  run.i0 = dioph::find_i0(seq, lambda);
  input.run = run;

  if (seq.size() >= 2) {
    try {
      input.exponent = dioph::estimate_lambda(seq, default_tail_from(seq));
    } catch (const dioph::DegenerateDelta&) {
    }
  }

  input.lemmas.push_back(dioph::verify_lemma_W(seq));
  try {
    input.lemmas.push_back(dioph::verify_lemma_X(seq, I));
  } catch (const dioph::InsufficientData& e) {
    dioph::LemmaReport x;
    x.lemma_id = "X";
    x.verdict = dioph::Verdict::Inconclusive;
    x.reason = e.what();
    input.lemmas.push_back(std::move(x));
  }
  input.lemmas.push_back(dioph::verify_lemma_f(seq, phi, lambda));
  input.lemmas.push_back(dioph::verify_lemma_main(seq, I, lambda, theta));
  input.lemmas.push_back(dioph::verify_dirichlet(seq));

  if (!r.d.empty()) {
    dioph::BoundsSummary b;
    const dioph::Integer d = dioph::parse_integer(r.d);
    const dioph::Rational delta = dioph::choose_delta(lambda);
    b.parameters.emplace_back("delta", dioph::to_string(delta));
    b.parameters.emplace_back("d", d.get_str());
    b.evertse_log2 = dioph::evertse_count_log2(3, delta, dioph::Integer(2 * d)).to_string(12);
    if (!r.c.empty() && !r.H.empty()) {
      dioph::MeasureParams m{dioph::parse_rational(r.c), d, dioph::parse_integer(r.H)};
      auto v = dioph::measure_w(m);
      b.parameters.emplace_back("c", dioph::to_string(m.c));
      b.parameters.emplace_back("H", m.H.get_str());
      b.w = v.w.to_string(12);
      b.log_bound = v.log_bound.to_string(12);
    }
    input.bounds = std::move(b);
  }

  emit(g, dioph::build_report(input));
  for (const auto& l : input.lemmas) {
    if (l.verdict == dioph::Verdict::Violated) {
      std::cerr << "lemma " << l.lemma_id << " violated: " << l.reason << '\n';
      return kExitViolated;
    }
  }
  return kExitOk;
}

int cmd_bounds_evertse(unsigned n, const std::string& delta, const std::string& D, bool natural) {
  dioph::BigFloat v = dioph::evertse_count_log2(n, dioph::parse_rational(delta), dioph::parse_integer(D));
  if (natural) {
    dioph::BigFloat two(2L);
    std::cout << "ln_t_bound=" << (v * dioph::ln(two)).to_string(12) << '\n';
  } else {
    std::cout << "log2_t_bound=" << v.to_string(12) << '\n';
  }
  return kExitOk;
}

int cmd_bounds_measure(const std::string& c, const std::string& d, const std::string& H, bool base2) {
  dioph::MeasureParams m{dioph::parse_rational(c), dioph::parse_integer(d), dioph::parse_integer(H)};
  auto v = dioph::measure_w(m);
  std::cout << "w=" << v.w.to_string(12) << '\n';
  if (base2) {
    dioph::BigFloat two(2L);
    std::cout << "log2_bound=" << (v.log_bound / dioph::ln(two)).to_string(12) << '\n';
  } else {
    std::cout << "log_bound=" << v.log_bound.to_string(12) << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal points, lemma checks and transcendence-measure bounds"};
  app.set_config("--config", "", "TOML/INI file with the same keys as the flags; flags win");
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--output", g.output, "Output file (default: standard output)");
  app.add_option("--format", g.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--threads", g.threads, "Worker threads for the sweep")->check(CLI::PositiveNumber);
  app.add_option("--max-depth", g.max_depth, "Partial-quotient cap for refinement")->check(CLI::PositiveNumber);
  app.add_option("--initial-depth", g.initial_depth, "Partial quotients used before refining")
      ->check(CLI::Range(2, 1 << 20));

  RunOptions r;
  app.add_option("--xi", r.xi, "Real spec for xi");
  app.add_option("--eta", r.eta, "Real spec for eta, or sq:xi");
  app.add_option("--x-max", r.x_max, "Sweep horizon");
  app.add_option("--lambda", r.lambda, "Exponent lambda in (1/2, 1)");
  app.add_option("--theta", r.theta, "Growth exponent theta, or auto");
  app.add_option("--conic", r.conic, "parabola or conic:poly:c_xx,c_xy,c_yy,c_x,c_y,c_1");
  app.add_option("--replay", r.replay, "Verify a sequence CSV instead of sweeping");
  app.add_option("--c", r.c, "Measure constant c");
  app.add_option("--d", r.d, "Degree bound d");
  app.add_option("--H", r.H, "Height bound H");

  std::string word_id;
  std::size_t word_n = 0;
  auto* word = app.add_subcommand("word", "Print the first n letters of a word");
  word->add_option("word-id", word_id)->required();
  word->add_option("n", word_n)->required();

  auto* mp = app.add_subcommand("minimal-points", "Sweep x0 = 1..x-max and export the minimal points");
  auto* verify = app.add_subcommand("verify", "Run every lemma check and write a JSON report");

  auto* bounds = app.add_subcommand("bounds", "Bound calculators");
  bounds->require_subcommand(1);
  unsigned ev_n = 3;
  std::string ev_delta, ev_D;
  bool ev_log2 = false, ev_ln = false;
  auto* evertse = bounds->add_subcommand("evertse", "log of the subspace-count bound");
  evertse->add_option("--n", ev_n)->check(CLI::Range(2u, 64u));
  evertse->add_option("--delta", ev_delta)->required();
  evertse->add_option("--D", ev_D)->required();
  auto* ev_log2_flag = evertse->add_flag("--log2", ev_log2, "Print log2 of the bound (default)");
  evertse->add_flag("--ln", ev_ln, "Print the natural log of the bound")->excludes(ev_log2_flag);

  bool m_log2 = false, m_ln = false;
  auto* measure = bounds->add_subcommand("measure", "w(d) and the log of H^-w(d)");
  auto* m_log2_flag = measure->add_flag("--log2", m_log2, "Report log2 of the lower bound");
  measure->add_flag("--ln", m_ln, "Report the natural log of the lower bound (default)")->excludes(m_log2_flag);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (word->parsed()) return cmd_word(word_id, word_n);
    if (mp->parsed()) return cmd_minimal_points(g, r);
    if (verify->parsed()) return cmd_verify(g, r);
    if (evertse->parsed()) return cmd_bounds_evertse(ev_n, ev_delta, ev_D, ev_ln);
    if (measure->parsed()) {
      return cmd_bounds_measure(r.c.empty() ? "1" : r.c, r.d.empty() ? "3" : r.d, r.H.empty() ? "2" : r.H, m_log2);
    }
  } catch (const dioph::PrecisionExhausted& e) {
    std::cerr << "precision exhausted at x0 = " << e.x0() << ": " << e.what() << '\n';
    return kExitPrecision;
  } catch (const dioph::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const dioph::DomainError& e) {
    std::cerr << "out of range: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitUsage;
}
