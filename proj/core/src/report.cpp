#include "dioph/report.hpp"

#include <cstdio>

#include <json.hpp>

#include "dioph/errors.hpp"

namespace dioph {

using ordered_json = nlohmann::ordered_json;

std::string format_approx(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  return buf;
}

namespace {

ordered_json lemma_json(const LemmaReport& r) {
  ordered_json j;
  j["verdict"] = std::string(to_string(r.verdict));
  if (r.witness) j["witness"] = *r.witness;
  if (!r.reason.empty()) j["reason"] = r.reason;
  j["checked_range"] = {r.checked_from, r.checked_to};
  ordered_json details = ordered_json::object();
  for (const auto& [k, v] : r.details) details[k] = v;
  j["details"] = std::move(details);
  ordered_json margins = ordered_json::array();
  for (const auto& m : r.margins) {
    ordered_json row;
    row["i"] = m.index;
    if (m.partner) row["j"] = *m.partner;
    row["lhs"] = m.lhs;
    row["relation"] = m.relation;
    row["rhs"] = m.rhs;
    row["holds"] = m.holds;
    if (m.approx) row["approx"] = format_approx(*m.approx);
    margins.push_back(std::move(row));
  }
  j["margins"] = std::move(margins);
  return j;
}

}  // namespace

std::string build_report(const ReportInput& input) {
  if (!input.run && !input.exponent && input.lemmas.empty() && !input.bounds) {
    throw InsufficientData("report has no sections");
  }
  ordered_json doc = ordered_json::object();
  if (input.run) {
    const RunInfo& r = *input.run;
    ordered_json run;
    run["xi_spec"] = r.xi_spec;
    run["eta_spec"] = r.eta_spec;
    run["x_max"] = r.x_max;
    run["max_depth"] = r.max_depth;
    if (r.lambda) run["lambda"] = to_string(*r.lambda);
    if (r.theta) run["theta"] = to_string(*r.theta);
    if (!r.theta_rule.empty()) run["theta_rule"] = r.theta_rule;
    if (!r.conic.empty()) run["conic"] = r.conic;
    run["tie_rule"] = "half-integers round down";
    run["log_base"] = "natural";
    if (r.point_count) run["point_count"] = *r.point_count;
    if (r.i0) run["i0"] = *r.i0;
    doc["run"] = std::move(run);
  }
  if (input.exponent) {
    const ExponentEstimate& e = *input.exponent;
    ordered_json ex;
    ex["tail_from"] = e.tail_from;
    ex["tail_min"] = {{"value", format_approx(e.tail_min)}, {"index", e.tail_argmin}};
    ordered_json rows = ordered_json::array();
    for (const auto& p : e.per_index) {
      rows.push_back({{"i", p.index}, {"X_next", p.X_next.get_str()}, {"lo", format_approx(p.lo)},
                      {"hi", format_approx(p.hi)}});
    }
    ex["per_index"] = std::move(rows);
    doc["exponent"] = std::move(ex);
  }
  if (!input.lemmas.empty()) {
    ordered_json lemmas = ordered_json::object();
    for (const char* id : {"W", "X", "f", "main", "dirichlet"}) {
      for (const auto& r : input.lemmas) {
        if (r.lemma_id == id) lemmas[id] = lemma_json(r);
      }
    }
    for (const auto& r : input.lemmas) {
      if (!lemmas.contains(r.lemma_id)) lemmas[r.lemma_id] = lemma_json(r);
    }
    doc["lemmas"] = std::move(lemmas);
  }
  if (input.bounds) {
    const BoundsSummary& b = *input.bounds;
    ordered_json bounds = ordered_json::object();
    for (const auto& [k, v] : b.parameters) bounds[k] = v;
    if (b.evertse_log2) bounds["evertse_log2"] = *b.evertse_log2;
    if (b.w) bounds["w"] = *b.w;
    if (b.log_bound) bounds["log_bound"] = *b.log_bound;
    doc["bounds"] = std::move(bounds);
  }
  return doc.dump(2) + "\n";
}

}  // namespace dioph
