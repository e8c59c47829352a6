#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "dioph/numbers.hpp"
#include "dioph/quadratic.hpp"

namespace dioph {

// A sequence of partial quotients [a0; a1, a2, ...]. The stream is a pure
// function of the requested length: prefix(n) always returns the same terms,
// so a stream can be shared between threads without a cursor.
class QuotientStream {
 public:
  // Returns exactly n terms.
  using Generator = std::function<std::vector<Integer>(std::size_t n)>;

  static QuotientStream finite(std::vector<Integer> terms);
  static QuotientStream infinite(Generator generator);
  // Finite head followed by an infinite tail, e.g. [1; 2, 2, ...] from [1] and the tail 2, 2, ...
  static QuotientStream with_tail(std::vector<Integer> head, Generator tail);
  // head followed by the period repeated forever; the value is a quadratic irrational.
  static QuotientStream eventually_periodic(std::vector<Integer> head, std::vector<Integer> period);

  // Up to n terms; fewer only when the stream is finite.
  std::vector<Integer> prefix(std::size_t n) const;
  bool is_finite() const { return length_.has_value(); }
  std::optional<std::size_t> length() const { return length_; }
  const std::vector<Integer>& head() const { return *head_; }
  // Non-null only for eventually periodic streams.
  const std::vector<Integer>* period() const { return period_.get(); }

 private:
  QuotientStream() = default;

  std::shared_ptr<const std::vector<Integer>> head_;
  std::shared_ptr<const std::vector<Integer>> period_;
  Generator tail_;
  std::optional<std::size_t> length_;
};

class RealSpec {
 public:
  enum class Kind { ContinuedFraction, Square, Polynomial };

  static RealSpec continued_fraction(QuotientStream cf);
  static RealSpec rational(const Rational& value);
  static RealSpec square(const RealSpec& operand);
  // c0 + c1*x + c2*x^2 + ... evaluated at the operand.
  static RealSpec polynomial(std::vector<Rational> coefficients, const RealSpec& operand);

  Kind kind() const;
  const QuotientStream& stream() const;
  const RealSpec& operand() const;
  const std::vector<Rational>& coefficients() const;
  // Exact value when the spec is rational or lies in a single real quadratic field.
  const std::optional<QuadraticSurd>& exact_value() const;

 private:
  struct Node;
  explicit RealSpec(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Closed rational interval certified to contain a real number. `depth` is the
// number of partial quotients consumed by the innermost continued fraction.
struct Enclosure {
  Rational lo;
  Rational hi;
  std::size_t depth = 0;

  bool is_exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  bool contains(const Rational& q) const { return lo <= q && q <= hi; }

  friend bool operator==(const Enclosure&, const Enclosure&) = default;
};

enum class Ordering { Less, Greater, Undecided, EqualExact };

// p_j/q_j for j = 0..k-1. Throws StreamExhausted when fewer than k terms exist
// and DomainError when a term past index 0 is not positive.
std::vector<Rational> convergents(const QuotientStream& cf, std::size_t k);

// Enclosure after consuming `depth` partial quotients. Finite streams that are
// used up yield a zero-width enclosure at their full length.
Enclosure enclose(const RealSpec& spec, std::size_t depth);

inline constexpr std::size_t kRefineStep = 2;

// Two more partial quotients; a zero-width enclosure is returned unchanged.
Enclosure refine(const RealSpec& spec, const Enclosure& enc);

// The n with value in (n - 1/2, n + 1/2] for every value of the enclosure, so
// exact half-integers round down. nullopt when the interval straddles a boundary.
std::optional<Integer> nearest_integer(const Enclosure& enc);

Ordering compare(const Enclosure& a, const Enclosure& b);

// Interval arithmetic helpers on enclosures; depth is the minimum of the operands.
Enclosure add(const Enclosure& a, const Enclosure& b);
Enclosure multiply(const Enclosure& a, const Enclosure& b);
Enclosure scale(const Enclosure& a, const Rational& factor);
Enclosure shift(const Enclosure& a, const Rational& offset);
Enclosure abs(const Enclosure& a);
Enclosure max(const Enclosure& a, const Enclosure& b);

}  // namespace dioph
