#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dioph/geometry.hpp"
#include "dioph/minimal_points.hpp"
#include "dioph/numbers.hpp"

namespace dioph {

// lambda_hat_i = -log(Delta_i) / log(X_{i+1}), bracketed with directed rounding.
struct LambdaHat {
  std::size_t index = 0;
  Integer X_next;
  double lo = 0;
  double hi = 0;
};

struct ExponentEstimate {
  std::vector<LambdaHat> per_index;
  std::size_t tail_from = 0;
  // Minimum of the lower bounds over i >= tail_from.
  double tail_min = 0;
  std::size_t tail_argmin = 0;
};

// Pairs Delta_i with X_{i+1}; i runs over 1 .. len-1. Throws DegenerateDelta
// if an enclosure reaches 0.
ExponentEstimate estimate_lambda(std::span<const MinimalPoint> seq, std::size_t tail_from);

// First index i with X_{i+1} >= bound.
std::optional<std::size_t> first_index_with_next_at_least(std::span<const MinimalPoint> seq, const Integer& bound);

enum class Verdict { HoldsOnHorizon, Violated, Inconclusive };
std::string_view to_string(Verdict v);

// One exact comparison `lhs relation rhs`, written out as strings.
struct Margin {
  std::size_t index = 0;
  std::optional<std::size_t> partner;
  std::string relation;
  std::string lhs;
  std::string rhs;
  bool holds = true;
  std::optional<double> approx;
};

struct LemmaReport {
  std::string lemma_id;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<std::size_t> witness;
  std::string reason;
  std::size_t checked_from = 0;
  std::size_t checked_to = 0;
  std::vector<Margin> margins;
  std::vector<std::pair<std::string, std::string>> details;
};

// Every consecutive pair spans a plane and is a basis of its lattice.
LemmaReport verify_lemma_W(std::span<const MinimalPoint> seq);

// For consecutive i < j in I: W_i != W_j and X_j^2 <= H(W_i)^2 H(W_j)^2.
// Throws InsufficientData when |I| < 2.
LemmaReport verify_lemma_X(std::span<const MinimalPoint> seq, std::span<const std::size_t> I);

// (a) phi(x_i) != 0 past the first index where it vanishes;
// (b) the largest X_{i+1}^p / X_i^q on the horizon for lambda = p/q.
LemmaReport verify_lemma_f(std::span<const MinimalPoint> seq, const ConicForm& phi, const Rational& lambda);

// Smallest i1 in I after which every consecutive pair i < j of I has
// H(W_i) < H(W_j) and X_{j+1} < X_{i+1}^theta. Throws ThetaTooSmall when
// theta <= (1 - lambda) / (2 lambda - 1).
LemmaReport verify_lemma_main(std::span<const MinimalPoint> seq, std::span<const std::size_t> I,
                              const Rational& lambda, const Rational& theta);

// delta_i.hi^2 * X_i <= 1 at every recorded point.
LemmaReport verify_dirichlet(std::span<const MinimalPoint> seq);

Rational critical_theta(const Rational& lambda);
// Default theta: critical value times 21/20.
Rational auto_theta(const Rational& lambda);

// delta = (2 lambda - 1) / 7, so that 6 delta < 2 lambda - 1 and delta < 1/2.
Rational choose_delta(const Rational& lambda);

}  // namespace dioph
