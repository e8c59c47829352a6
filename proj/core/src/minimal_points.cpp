#include "dioph/minimal_points.hpp"

#include <algorithm>
#include <exception>
#include <string>
#include <iterator>
#include <thread>
#include <utility>

#include "dioph/errors.hpp"
#include "dioph/geometry.hpp"

namespace dioph {

namespace {

bool can_refine(const Enclosure& enc, std::size_t max_depth) {
  return !enc.is_exact() && enc.depth + kRefineStep <= max_depth;
}

std::string at_x0(const Integer& x0) { return " at x0 = " + x0.get_str(); }

// Exact values of xi and eta when both are rational or quadratic over one field.
// Then every rounding and every delta comparison is decidable without refinement,
// including exact ties, which intervals can never separate.
struct ExactPair {
  QuadraticSurd xi;
  QuadraticSurd eta;
};

std::optional<ExactPair> exact_pair(const RealSpec& xi, const RealSpec& eta) {
  const auto& x = xi.exact_value();
  const auto& e = eta.exact_value();
  if (!x || !e || !add(*x, *e)) return std::nullopt;
  return ExactPair{*x, *e};
}

QuadraticSurd exact_delta(const IntVec3& v, const ExactPair& ex) {
  QuadraticSurd u1 = shift(scale(ex.xi, Rational(v.x0)), Rational(-v.x1));
  QuadraticSurd u2 = shift(scale(ex.eta, Rational(v.x0)), Rational(-v.x2));
  return *compare_abs(u1, u2) >= 0 ? u1 : u2;
}

// delta(a) < delta(b), decided exactly.
bool exact_smaller(const IntVec3& a, const IntVec3& b, const ExactPair& ex) {
  return *compare_abs(exact_delta(a, ex), exact_delta(b, ex)) < 0;
}

IntVec3 exact_best(const Integer& x0, const ExactPair& ex) {
  return IntVec3{x0, nearest_integer(scale(ex.xi, Rational(x0))), nearest_integer(scale(ex.eta, Rational(x0)))};
}

// True when delta(a) < delta(b) is certified, false when delta(a) >= delta(b)
// is certified; refines until one holds.
bool strictly_smaller(const IntVec3& a, const IntVec3& b, const RealSpec& xi, const RealSpec& eta,
                      std::size_t depth, std::size_t max_depth) {
  const auto ex = exact_pair(xi, eta);
  for (;;) {
    Enclosure ea = delta_of(a, xi, eta, depth);
    Enclosure eb = delta_of(b, xi, eta, depth);
    if (ea.hi < eb.lo) return true;
    if (ea.lo >= eb.hi) return false;
    if (ex) return exact_smaller(a, b, *ex);
    if (depth + kRefineStep > max_depth) {
      throw PrecisionExhausted("cannot order delta" + at_x0(a.x0) + " against x0 = " + b.x0.get_str() +
                                   " within max_depth " + std::to_string(max_depth),
                               to_u64(a.x0));
    }
    depth += kRefineStep;
  }
}

// Enclosures of xi and eta rounded outward to a common dyadic grid 2^-shift,
// so that x0 * xi can be bracketed with two integer products.
class FixedPointSweeper {
 public:
  FixedPointSweeper(const RealSpec& xi, const RealSpec& eta, const SweepOptions& opts)
      : xi_(xi), eta_(eta), opts_(opts), exact_(exact_pair(xi, eta)) {
    xi_enc_ = enclose(xi_, opts.initial_depth);
    eta_enc_ = enclose(eta_, opts.initial_depth);
    rescale();
  }

  struct Candidate {
    std::uint64_t x0;
    IntVec3 vec;
  };

  // Local records of [first, last]: points strictly better than everything
  // before them inside the range.
  std::vector<Candidate> sweep(std::uint64_t first, std::uint64_t last) {
    std::vector<Candidate> out;
    bool have_min = false;
    IntVec3 min_vec;
    Integer min_lo, min_hi;
    std::size_t min_shift = 0;

    for (std::uint64_t x0 = first; x0 <= last; ++x0) {
      for (;;) {
        if (have_min && min_shift != shift_) {
          dyadic_delta_of(min_vec, min_lo, min_hi);
          min_shift = shift_;
        }
        if (evaluate(x0)) {
          if (!have_min || d_hi_ < min_lo) {
            record(out, x0, have_min, min_vec, min_lo, min_hi, min_shift);
            break;
          }
          if (d_lo_ >= min_hi) break;
        }
        if (exact_) {
          IntVec3 v = exact_best(Integer(static_cast<unsigned long>(x0)), *exact_);
          if (!have_min || exact_smaller(v, min_vec, *exact_)) {
            x1_ = v.x1;
            x2_ = v.x2;
            record(out, x0, have_min, min_vec, min_lo, min_hi, min_shift);
          }
          break;
        }
        if (try_refine()) continue;

        // Grid exhausted: decide with exact rationals at the current depth.
        const std::size_t depth = std::min(xi_enc_.depth, eta_enc_.depth);
        BestApprox b = best_approx_at(Integer(static_cast<unsigned long>(x0)), xi_, eta_,
                                      ApproxOptions{std::max<std::size_t>(depth, 2), opts_.max_depth});
        if (!have_min || strictly_smaller(b.vec, min_vec, xi_, eta_, b.delta.depth, opts_.max_depth)) {
          x1_ = b.vec.x1;
          x2_ = b.vec.x2;
          record(out, x0, have_min, min_vec, min_lo, min_hi, min_shift);
        }
        break;
      }
      if (have_min && exact_zero_min_) break;
    }
    return out;
  }

 private:
  void rescale() {
    auto bits = [](const Enclosure& e) {
      return mpz_sizeinbase(e.lo.get_den_mpz_t(), 2) + mpz_sizeinbase(e.hi.get_den_mpz_t(), 2);
    };
    shift_ = std::max(bits(xi_enc_), bits(eta_enc_)) + 32;
    auto to_grid = [this](const Enclosure& e, Integer& lo, Integer& hi) {
      Rational scaled_lo = e.lo, scaled_hi = e.hi;
      mpq_mul_2exp(scaled_lo.get_mpq_t(), scaled_lo.get_mpq_t(), shift_);
      mpq_mul_2exp(scaled_hi.get_mpq_t(), scaled_hi.get_mpq_t(), shift_);
      lo = floor_of(scaled_lo);
      hi = ceil_of(scaled_hi);
    };
    to_grid(xi_enc_, xi_lo_, xi_hi_);
    to_grid(eta_enc_, eta_lo_, eta_hi_);
    mpz_set_ui(one_.get_mpz_t(), 1);
    mpz_mul_2exp(one_.get_mpz_t(), one_.get_mpz_t(), shift_);
  }

  bool try_refine() {
    bool changed = false;
    if (can_refine(xi_enc_, opts_.max_depth)) {
      xi_enc_ = refine(xi_, xi_enc_);
      changed = true;
    }
    if (can_refine(eta_enc_, opts_.max_depth)) {
      eta_enc_ = refine(eta_, eta_enc_);
      changed = true;
    }
    if (changed) rescale();
    return changed;
  }

  // Rounds x0 * [lo, hi] on the grid; leaves |x0 t - n| bracketed in [elo, ehi].
  bool round_coordinate(std::uint64_t x0, const Integer& lo, const Integer& hi, Integer& n, Integer& elo,
                        Integer& ehi) {
    mpz_mul_ui(a_.get_mpz_t(), lo.get_mpz_t(), x0);
    mpz_mul_ui(b_.get_mpz_t(), hi.get_mpz_t(), x0);
    // n = ceil(v - 1/2) = ceil((2a - 2^s) / 2^(s+1)).
    mpz_mul_2exp(t_.get_mpz_t(), a_.get_mpz_t(), 1);
    mpz_sub(t_.get_mpz_t(), t_.get_mpz_t(), one_.get_mpz_t());
    mpz_cdiv_q_2exp(n.get_mpz_t(), t_.get_mpz_t(), shift_ + 1);
    mpz_mul_2exp(t_.get_mpz_t(), b_.get_mpz_t(), 1);
    mpz_sub(t_.get_mpz_t(), t_.get_mpz_t(), one_.get_mpz_t());
    mpz_cdiv_q_2exp(u_.get_mpz_t(), t_.get_mpz_t(), shift_ + 1);
    if (mpz_cmp(n.get_mpz_t(), u_.get_mpz_t()) != 0) return false;
    error_interval(n, elo, ehi);
    return true;
  }

  // Given a_ and b_ (x0 times the grid bounds), brackets |x0 t - n|.
  void error_interval(const Integer& n, Integer& elo, Integer& ehi) {
    mpz_mul_2exp(t_.get_mpz_t(), n.get_mpz_t(), shift_);
    mpz_sub(elo.get_mpz_t(), a_.get_mpz_t(), t_.get_mpz_t());
    mpz_sub(ehi.get_mpz_t(), b_.get_mpz_t(), t_.get_mpz_t());
    if (mpz_sgn(elo.get_mpz_t()) >= 0) return;
    if (mpz_sgn(ehi.get_mpz_t()) <= 0) {
      mpz_neg(elo.get_mpz_t(), elo.get_mpz_t());
      mpz_neg(ehi.get_mpz_t(), ehi.get_mpz_t());
      mpz_swap(elo.get_mpz_t(), ehi.get_mpz_t());
      return;
    }
    mpz_neg(elo.get_mpz_t(), elo.get_mpz_t());
    if (mpz_cmp(elo.get_mpz_t(), ehi.get_mpz_t()) > 0) mpz_swap(elo.get_mpz_t(), ehi.get_mpz_t());
    mpz_set_ui(elo.get_mpz_t(), 0);
  }

  bool evaluate(std::uint64_t x0) {
    if (!round_coordinate(x0, xi_lo_, xi_hi_, x1_, e1_lo_, e1_hi_)) return false;
    if (!round_coordinate(x0, eta_lo_, eta_hi_, x2_, e2_lo_, e2_hi_)) return false;
    d_lo_ = mpz_cmp(e1_lo_.get_mpz_t(), e2_lo_.get_mpz_t()) >= 0 ? e1_lo_ : e2_lo_;
    d_hi_ = mpz_cmp(e1_hi_.get_mpz_t(), e2_hi_.get_mpz_t()) >= 0 ? e1_hi_ : e2_hi_;
    return true;
  }

  // delta of a fixed vector on the current grid.
  void dyadic_delta_of(const IntVec3& v, Integer& lo, Integer& hi) {
    const std::uint64_t x0 = to_u64(v.x0);
    Integer e1lo, e1hi, e2lo, e2hi;
    mpz_mul_ui(a_.get_mpz_t(), xi_lo_.get_mpz_t(), x0);
    mpz_mul_ui(b_.get_mpz_t(), xi_hi_.get_mpz_t(), x0);
    error_interval(v.x1, e1lo, e1hi);
    mpz_mul_ui(a_.get_mpz_t(), eta_lo_.get_mpz_t(), x0);
    mpz_mul_ui(b_.get_mpz_t(), eta_hi_.get_mpz_t(), x0);
    error_interval(v.x2, e2lo, e2hi);
    lo = e1lo >= e2lo ? e1lo : e2lo;
    hi = e1hi >= e2hi ? e1hi : e2hi;
  }

  void record(std::vector<Candidate>& out, std::uint64_t x0, bool& have_min, IntVec3& min_vec, Integer& min_lo,
              Integer& min_hi, std::size_t& min_shift) {
    IntVec3 v{Integer(static_cast<unsigned long>(x0)), x1_, x2_};
    out.push_back({x0, v});
    have_min = true;
    min_vec = v;
    dyadic_delta_of(min_vec, min_lo, min_hi);
    min_shift = shift_;
    if (xi_enc_.is_exact() && eta_enc_.is_exact()) {
      exact_zero_min_ = delta_of(v, xi_, eta_, opts_.initial_depth).hi == 0;
    }
  }

  const RealSpec& xi_;
  const RealSpec& eta_;
  SweepOptions opts_;
  std::optional<ExactPair> exact_;
  Enclosure xi_enc_, eta_enc_;
  std::size_t shift_ = 0;
  Integer xi_lo_, xi_hi_, eta_lo_, eta_hi_, one_;
  // Scratch registers reused across iterations.
  Integer a_, b_, t_, u_;
  Integer x1_, x2_, e1_lo_, e1_hi_, e2_lo_, e2_hi_, d_lo_, d_hi_;
  bool exact_zero_min_ = false;
};

}  // namespace

Enclosure delta_of(const IntVec3& v, const RealSpec& xi, const RealSpec& eta, std::size_t depth) {
  Enclosure ex = enclose(xi, depth);
  Enclosure ee = enclose(eta, depth);
  Rational x0(v.x0);
  Enclosure d1 = abs(shift(scale(ex, x0), Rational(-v.x1)));
  Enclosure d2 = abs(shift(scale(ee, x0), Rational(-v.x2)));
  return max(d1, d2);
}

BestApprox best_approx_at(const Integer& x0, const RealSpec& xi, const RealSpec& eta, const ApproxOptions& opts) {
  if (x0 < 1) throw DomainError("best_approx_at needs x0 >= 1");
  Enclosure ex = enclose(xi, opts.initial_depth);
  Enclosure ee = enclose(eta, opts.initial_depth);
  const Rational factor(x0);
  const auto exact = exact_pair(xi, eta);
  for (;;) {
    Enclosure sx = scale(ex, factor);
    Enclosure se = scale(ee, factor);
    std::optional<Integer> x1 = nearest_integer(sx);
    std::optional<Integer> x2 = nearest_integer(se);
    if (exact && !(x1 && x2)) {
      IntVec3 v = exact_best(x0, *exact);
      x1 = v.x1;
      x2 = v.x2;
    }
    if (x1 && x2) {
      Enclosure delta = max(abs(shift(sx, Rational(-*x1))), abs(shift(se, Rational(-*x2))));
      return BestApprox{IntVec3{x0, *x1, *x2}, std::move(delta)};
    }
    bool refined = false;
    if (!x1 && can_refine(ex, opts.max_depth)) {
      ex = refine(xi, ex);
      refined = true;
    }
    if (!x2 && can_refine(ee, opts.max_depth)) {
      ee = refine(eta, ee);
      refined = true;
    }
    if (!refined) {
      throw PrecisionExhausted("rounding undecided" + at_x0(x0) + " at max_depth " + std::to_string(opts.max_depth),
                               x0.fits_ulong_p() ? x0.get_ui() : 0);
    }
  }
}

std::vector<MinimalPoint> minimal_point_sequence(const RealSpec& xi, const RealSpec& eta, std::uint64_t x_max,
                                                 const SweepOptions& opts) {
  if (x_max < 1) throw DomainError("x_max must be at least 1");
  const std::uint64_t chunks = std::clamp<std::uint64_t>(opts.threads, 1, x_max);

  using Candidate = FixedPointSweeper::Candidate;
  std::vector<std::vector<Candidate>> local(chunks);
  std::vector<std::exception_ptr> failures(chunks);
  auto bounds = [&](std::uint64_t c) {
    const std::uint64_t first = 1 + c * x_max / chunks;
    const std::uint64_t last = (c + 1) * x_max / chunks;
    return std::pair{first, last};
  };
  auto run = [&](std::uint64_t c) {
    try {
      FixedPointSweeper sweeper(xi, eta, opts);
      auto [first, last] = bounds(c);
      local[c] = sweeper.sweep(first, last);
    } catch (...) {
      failures[c] = std::current_exception();
    }
  };
  if (chunks == 1) {
    run(0);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(chunks);
    for (std::uint64_t c = 0; c < chunks; ++c) workers.emplace_back(run, c);
  }
  for (auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  // Sequential merge: a chunk-local record survives iff it beats the global
  // running minimum carried over from earlier chunks.
  std::vector<IntVec3> merged;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    for (const Candidate& cand : local[c]) {
      if (c == 0 || merged.empty() ||
          strictly_smaller(cand.vec, merged.back(), xi, eta, opts.initial_depth, opts.max_depth)) {
        merged.push_back(cand.vec);
      }
    }
  }

  // Report enclosures at one common depth, deep enough to certify the strict decrease.
  std::size_t depth = std::max<std::size_t>(opts.initial_depth, 2);
  for (;;) {
    std::vector<MinimalPoint> points;
    points.reserve(merged.size());
    for (std::size_t k = 0; k < merged.size(); ++k) {
      IntVec3 v = primitivize(merged[k]);
      Enclosure d = delta_of(v, xi, eta, depth);
      Integer X = v.x0;
      points.push_back(MinimalPoint{k + 1, std::move(v), std::move(X), std::move(d)});
    }
    std::size_t bad = 0;
    for (std::size_t k = 1; k < points.size() && bad == 0; ++k) {
      if (!(points[k].delta.hi < points[k - 1].delta.lo)) bad = k;
    }
    if (bad == 0) return points;
    if (depth + kRefineStep > opts.max_depth) {
      throw PrecisionExhausted("cannot certify strict decrease" + at_x0(points[bad].X), to_u64(points[bad].X));
    }
    depth += kRefineStep;
  }
}

DeltaFunction::DeltaFunction(std::vector<MinimalPoint> points, Integer horizon)
    : points_(std::move(points)), horizon_(std::move(horizon)) {}

const Enclosure& DeltaFunction::at(const Rational& X) const {
  if (points_.empty() || X < 1 || X > Rational(horizon_)) {
    throw HorizonExceeded("X outside [1, " + horizon_.get_str() + "]");
  }
  auto it = std::upper_bound(points_.begin(), points_.end(), X,
                             [](const Rational& x, const MinimalPoint& p) { return x < Rational(p.X); });
  return std::prev(it)->delta;
}

const Enclosure& delta_at(const DeltaFunction& df, const Rational& X) { return df.at(X); }

std::optional<std::size_t> find_i0(std::span<const MinimalPoint> seq, const Rational& lambda) {
  if (seq.size() < 3) return std::nullopt;
  if (lambda <= 0) throw DomainError("lambda must be positive");
  const unsigned long p = lambda.get_num().get_ui();
  const unsigned long q = lambda.get_den().get_ui();
  auto holds = [&](std::size_t k) {  // 0-based position of Delta_i
    const Rational& hi = seq[k].delta.hi;
    return pow(hi, q) * Rational(pow(seq[k + 1].X, p)) <= 1;
  };
  // Positions 1 .. size-2 correspond to i = 2 .. len-1.
  std::size_t k = seq.size() - 2;
  if (!holds(k)) return std::nullopt;
  while (k > 1 && holds(k - 1)) --k;
  return k + 1;
}

}  // namespace dioph
