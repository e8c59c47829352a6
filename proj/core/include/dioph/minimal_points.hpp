#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dioph/exact_reals.hpp"
#include "dioph/intvec.hpp"

namespace dioph {

// x_i with X_i = x_{i,0} and a certified enclosure of Delta_i = delta(x_i).
struct MinimalPoint {
  std::size_t index = 0;  // 1-based
  IntVec3 vec;
  Integer X;
  Enclosure delta;
};

struct ApproxOptions {
  std::size_t initial_depth = 64;
  std::size_t max_depth = 512;
};

struct SweepOptions {
  std::size_t initial_depth = 64;
  std::size_t max_depth = 512;
  unsigned threads = 1;
};

struct BestApprox {
  IntVec3 vec;
  Enclosure delta;
};

// (x0, round(x0 xi), round(x0 eta)) and delta = max(|x0 xi - x1|, |x0 eta - x2|),
// refining both numbers until the roundings are certified.
BestApprox best_approx_at(const Integer& x0, const RealSpec& xi, const RealSpec& eta, const ApproxOptions& opts = {});

// delta(v) for a fixed integer vector, enclosed at the given depth.
Enclosure delta_of(const IntVec3& v, const RealSpec& xi, const RealSpec& eta, std::size_t depth);

// Records every x0 in [1, x_max] whose delta is certified strictly below all
// earlier ones. x0 ranges are swept in parallel chunks and merged in order;
// reported enclosures are recomputed at a depth chosen from the final point
// list alone, so the output does not depend on the thread count.
std::vector<MinimalPoint> minimal_point_sequence(const RealSpec& xi, const RealSpec& eta, std::uint64_t x_max,
                                                 const SweepOptions& opts = {});

// Step function X -> Delta(X) over [1, horizon].
class DeltaFunction {
 public:
  DeltaFunction(std::vector<MinimalPoint> points, Integer horizon);

  const std::vector<MinimalPoint>& points() const { return points_; }
  const Integer& horizon() const { return horizon_; }
  // Throws HorizonExceeded outside [1, horizon].
  const Enclosure& at(const Rational& X) const;

 private:
  std::vector<MinimalPoint> points_;
  Integer horizon_;
};

const Enclosure& delta_at(const DeltaFunction& df, const Rational& X);

// Smallest i0 >= 2 with delta_i.hi <= X_{i+1}^(-lambda) for every verifiable
// i >= i0, checked exactly as delta_i.hi^q * X_{i+1}^p <= 1 for lambda = p/q.
std::optional<std::size_t> find_i0(std::span<const MinimalPoint> seq, const Rational& lambda);

}  // namespace dioph
