#include "dioph/analysis.hpp"

#include <algorithm>
#include <string>

#include "dioph/bigfloat.hpp"
#include "dioph/errors.hpp"

namespace dioph {

namespace {

constexpr Precision kLogPrecision{192};

void check_lambda(const Rational& lambda) {
  if (lambda <= Rational(1, 2)) throw BadLambda("lambda must exceed 1/2, got " + to_string(lambda));
}

std::string join(std::span<const std::size_t> xs) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(xs[k]);
  }
  return out;
}

// Positions are 0-based; I holds 1-based indices.
const MinimalPoint& at(std::span<const MinimalPoint> seq, std::size_t i) { return seq[i - 1]; }

void finish(LemmaReport& r) {
  r.verdict = Verdict::HoldsOnHorizon;
  for (const auto& m : r.margins) {
    if (!m.holds) {
      r.verdict = Verdict::Violated;
      r.witness = m.partner.value_or(m.index);
      if (r.reason.empty()) r.reason = m.lhs + " " + m.relation + " " + m.rhs + " fails";
      return;
    }
  }
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::HoldsOnHorizon:
      return "holds-on-horizon";
    case Verdict::Violated:
      return "violated";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

std::optional<std::size_t> first_index_with_next_at_least(std::span<const MinimalPoint> seq, const Integer& bound) {
  for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
    if (seq[k + 1].X >= bound) return k + 1;
  }
  return std::nullopt;
}

ExponentEstimate estimate_lambda(std::span<const MinimalPoint> seq, std::size_t tail_from) {
  if (tail_from < 1 || seq.size() <= tail_from) {
    throw InsufficientData("estimate_lambda needs len > tail_from >= 1");
  }
  ExponentEstimate est;
  est.tail_from = tail_from;
  for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
    const Enclosure& d = seq[k].delta;
    if (d.lo <= 0) throw DegenerateDelta("delta enclosure of point " + std::to_string(k + 1) + " reaches 0");
    const Integer& X = seq[k + 1].X;
    // Lower bound: -ln(hi) / ln(X) with the numerator rounded down and the
    // denominator rounded up; the upper bound mirrors it.
    BigFloat ln_hi = ln(BigFloat(d.hi, MPFR_RNDU, kLogPrecision), MPFR_RNDU);
    BigFloat ln_lo = ln(BigFloat(d.lo, MPFR_RNDD, kLogPrecision), MPFR_RNDD);
    BigFloat ln_x_up = ln(BigFloat(X, MPFR_RNDU, kLogPrecision), MPFR_RNDU);
    BigFloat ln_x_dn = ln(BigFloat(X, MPFR_RNDD, kLogPrecision), MPFR_RNDD);
    BigFloat lo = div(neg(ln_hi), ln_x_up, MPFR_RNDD);
    BigFloat hi = div(neg(ln_lo), ln_x_dn, MPFR_RNDU);
    est.per_index.push_back(LambdaHat{k + 1, X, lo.to_double(MPFR_RNDD), hi.to_double(MPFR_RNDU)});
  }
  bool first = true;
  for (const auto& e : est.per_index) {
    if (e.index < tail_from) continue;
    if (first || e.lo < est.tail_min) {
      est.tail_min = e.lo;
      est.tail_argmin = e.index;
      first = false;
    }
  }
  return est;
}

LemmaReport verify_lemma_W(std::span<const MinimalPoint> seq) {
  LemmaReport r;
  r.lemma_id = "W";
  if (seq.size() < 2) {
    r.verdict = Verdict::Inconclusive;
    r.reason = "fewer than two points";
    return r;
  }
  r.checked_from = 1;
  r.checked_to = seq.size() - 1;
  for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
    IntVec3 raw = wedge(seq[k].vec, seq[k + 1].vec);
    Margin m;
    m.index = k + 1;
    m.relation = "=";
    m.rhs = "1";
    if (raw.is_zero()) {
      m.lhs = "0";
      m.holds = false;
      if (r.reason.empty()) r.reason = "dimension: x_i and x_{i+1} are dependent";
    } else {
      Integer g = content(raw);
      m.lhs = g.get_str();
      m.holds = g == 1;
      if (!m.holds && r.reason.empty()) r.reason = "basis: x_i ^ x_{i+1} has content " + g.get_str();
    }
    r.margins.push_back(std::move(m));
  }
  finish(r);
  return r;
}

LemmaReport verify_lemma_X(std::span<const MinimalPoint> seq, std::span<const std::size_t> I) {
  if (I.size() < 2) throw InsufficientData("lemma X needs |I| >= 2, got " + std::to_string(I.size()));
  LemmaReport r;
  r.lemma_id = "X";
  r.checked_from = I.front();
  r.checked_to = I.back();
  for (std::size_t k = 0; k + 1 < I.size(); ++k) {
    const std::size_t i = I[k];
    const std::size_t j = I[k + 1];
    Subspace wi = subspace_of(at(seq, i).vec, at(seq, i + 1).vec);
    Subspace wj = subspace_of(at(seq, j).vec, at(seq, j + 1).vec);
    if (same_subspace(wi, wj)) {
      r.margins.push_back(Margin{i, j, "!=", "W_" + std::to_string(i), "W_" + std::to_string(j), false, {}});
      if (r.reason.empty()) r.reason = "W_i = W_j";
      continue;
    }
    const Integer& Xj = at(seq, j).X;
    Integer lhs = Xj * Xj;
    Integer rhs = wi.height_sq * wj.height_sq;
    r.margins.push_back(Margin{i, j, "<=", lhs.get_str(), rhs.get_str(), lhs <= rhs, {}});
  }
  finish(r);
  r.details.emplace_back("I_size", std::to_string(I.size()));
  r.details.emplace_back("I", join(I));
  return r;
}

LemmaReport verify_lemma_f(std::span<const MinimalPoint> seq, const ConicForm& phi, const Rational& lambda) {
  if (lambda <= 0) throw DomainError("lambda must be positive");
  LemmaReport r;
  r.lemma_id = "f";
  r.checked_from = seq.empty() ? 0 : 1;
  r.checked_to = seq.size();
  std::vector<std::size_t> vanishing;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    Rational value = conic_eval(phi, seq[k].vec);
    Margin m{k + 1, {}, "!=", to_string(value), "0", true, {}};
    if (value == 0) vanishing.push_back(k + 1);
    // Only vanishing after the first vanishing index counts against the lemma.
    m.holds = value != 0 || vanishing.size() <= 1;
    r.margins.push_back(std::move(m));
  }

  // (b) X_{i+1}^lambda / X_i as the exact X_{i+1}^p / X_i^q.
  const unsigned long p = lambda.get_num().get_ui();
  const unsigned long q = lambda.get_den().get_ui();
  std::optional<Rational> max_ratio;
  std::size_t max_index = 0;
  for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
    Rational ratio = make_rational(pow(seq[k + 1].X, p), pow(seq[k].X, q));
    BigFloat root = exp(div(ln(BigFloat(ratio, MPFR_RNDN)), BigFloat(static_cast<long>(q))));
    r.margins[k].approx = root.to_double();
    if (!max_ratio || ratio > *max_ratio) {
      max_ratio = ratio;
      max_index = k + 1;
    }
  }
  finish(r);
  if (r.verdict == Verdict::Violated) r.reason = "phi vanishes again at i = " + std::to_string(*r.witness);
  r.details.emplace_back("vanishing_indices", join(vanishing));
  r.details.emplace_back("first_vanishing", vanishing.empty() ? "none" : std::to_string(vanishing.front()));
  r.details.emplace_back("last_vanishing", vanishing.empty() ? "none" : std::to_string(vanishing.back()));
  r.details.emplace_back("nonvanishing_from", std::to_string(vanishing.empty() ? 1 : vanishing.back() + 1));
  r.details.emplace_back("lambda", to_string(lambda));
  if (max_ratio) {
    BigFloat root = exp(div(ln(BigFloat(*max_ratio, MPFR_RNDN)), BigFloat(static_cast<long>(q))));
    r.details.emplace_back("max_ratio", to_string(*max_ratio));
    r.details.emplace_back("max_ratio_index", std::to_string(max_index));
    r.details.emplace_back("max_ratio_root", root.to_string(9));
  }
  return r;
}

Rational critical_theta(const Rational& lambda) {
  check_lambda(lambda);
  return Rational((1 - lambda) / (2 * lambda - 1));
}

Rational auto_theta(const Rational& lambda) { return Rational(critical_theta(lambda) * Rational(21, 20)); }

LemmaReport verify_lemma_main(std::span<const MinimalPoint> seq, std::span<const std::size_t> I,
                              const Rational& lambda, const Rational& theta) {
  const Rational critical = critical_theta(lambda);
  if (theta <= critical) {
    throw ThetaTooSmall("theta " + to_string(theta) + " must exceed (1-lambda)/(2lambda-1) = " + to_string(critical));
  }
  LemmaReport r;
  r.lemma_id = "main";
  r.details.emplace_back("lambda", to_string(lambda));
  r.details.emplace_back("theta", to_string(theta));
  r.details.emplace_back("critical_theta", to_string(critical));
  if (I.size() < 2) {
    r.verdict = Verdict::Inconclusive;
    r.reason = "|I| < 2";
    return r;
  }
  r.checked_from = I.front();
  r.checked_to = I.back();
  const unsigned long p = theta.get_num().get_ui();
  const unsigned long q = theta.get_den().get_ui();
  std::vector<bool> pair_ok;
  for (std::size_t k = 0; k + 1 < I.size(); ++k) {
    const std::size_t i = I[k];
    const std::size_t j = I[k + 1];
    Subspace wi = subspace_of(at(seq, i).vec, at(seq, i + 1).vec);
    Subspace wj = subspace_of(at(seq, j).vec, at(seq, j + 1).vec);
    const bool heights = wi.height_sq < wj.height_sq;
    r.margins.push_back(Margin{i, j, "<", wi.height_sq.get_str(), wj.height_sq.get_str(), heights, {}});
    Integer lhs = pow(at(seq, j + 1).X, q);
    Integer rhs = pow(at(seq, i + 1).X, p);
    const bool growth = lhs < rhs;
    r.margins.push_back(Margin{i, j, "<", lhs.get_str(), rhs.get_str(), growth, {}});
    pair_ok.push_back(heights && growth);
  }
  if (!pair_ok.back()) {
    r.verdict = Verdict::Inconclusive;
    r.reason = "last pair of I on the horizon fails; no i1 found";
    return r;
  }
  std::size_t m = pair_ok.size() - 1;
  while (m > 0 && pair_ok[m - 1]) --m;
  r.verdict = Verdict::HoldsOnHorizon;
  r.details.emplace_back("i1", std::to_string(I[m]));
  return r;
}

LemmaReport verify_dirichlet(std::span<const MinimalPoint> seq) {
  LemmaReport r;
  r.lemma_id = "dirichlet";
  r.checked_from = seq.empty() ? 0 : 1;
  r.checked_to = seq.size();
  for (const auto& pt : seq) {
    Rational lhs = pt.delta.hi * pt.delta.hi * Rational(pt.X);
    r.margins.push_back(Margin{pt.index, {}, "<=", to_string(lhs), "1", lhs <= 1, lhs.get_d()});
  }
  finish(r);
  return r;
}

Rational choose_delta(const Rational& lambda) {
  check_lambda(lambda);
  return Rational((2 * lambda - 1) / 7);
}

}  // namespace dioph
