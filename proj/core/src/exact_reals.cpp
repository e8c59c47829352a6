#include "dioph/exact_reals.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <variant>

#include "dioph/errors.hpp"

namespace dioph {

// ---------------------------------------------------------------------------
// QuotientStream

QuotientStream QuotientStream::finite(std::vector<Integer> terms) {
  QuotientStream s;
  s.length_ = terms.size();
  s.head_ = std::make_shared<const std::vector<Integer>>(std::move(terms));
  return s;
}

QuotientStream QuotientStream::infinite(Generator generator) {
  QuotientStream s;
  s.head_ = std::make_shared<const std::vector<Integer>>();
  s.tail_ = std::move(generator);
  return s;
}

QuotientStream QuotientStream::with_tail(std::vector<Integer> head, Generator tail) {
  QuotientStream s;
  s.head_ = std::make_shared<const std::vector<Integer>>(std::move(head));
  s.tail_ = std::move(tail);
  return s;
}

QuotientStream QuotientStream::eventually_periodic(std::vector<Integer> head, std::vector<Integer> period) {
  if (period.empty()) throw DomainError("empty period");
  auto shared = std::make_shared<const std::vector<Integer>>(std::move(period));
  QuotientStream s = with_tail(std::move(head), [shared](std::size_t n) {
    std::vector<Integer> out;
    out.reserve(n);
    for (std::size_t j = 0; j < n; ++j) out.push_back((*shared)[j % shared->size()]);
    return out;
  });
  s.period_ = std::move(shared);
  return s;
}

std::vector<Integer> QuotientStream::prefix(std::size_t n) const {
  const auto& head = *head_;
  std::vector<Integer> out(head.begin(), head.begin() + static_cast<std::ptrdiff_t>(std::min(n, head.size())));
  if (out.size() < n && tail_) {
    std::vector<Integer> rest = tail_(n - out.size());
    if (rest.size() < n - head.size()) {
      throw StreamExhausted("infinite quotient stream produced too few terms");
    }
    out.insert(out.end(), rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(n - head.size()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// RealSpec

struct RealSpec::Node {
  struct Cf {
    QuotientStream stream;
  };
  struct Sq {
    RealSpec operand;
  };
  struct Poly {
    std::vector<Rational> coefficients;
    RealSpec operand;
  };
  std::variant<Cf, Sq, Poly> body;
  std::optional<QuadraticSurd> exact;
};

namespace {

std::optional<QuadraticSurd> exact_cf_value(const QuotientStream& cf) {
  try {
    if (cf.period() != nullptr) return periodic_cf_value(cf.head(), *cf.period());
    if (!cf.is_finite() || cf.head().empty()) return std::nullopt;
    // Evaluate from the back: a_{n-1}, then a_j + 1/x.
    const auto& t = cf.head();
    Rational x(t.back());
    for (std::size_t j = t.size() - 1; j-- > 0;) {
      if (x == 0) return std::nullopt;
      x = Rational(t[j]) + 1 / x;
    }
    return QuadraticSurd::rational(x);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

}  // namespace

RealSpec RealSpec::continued_fraction(QuotientStream cf) {
  auto exact = exact_cf_value(cf);
  return RealSpec(std::make_shared<const Node>(Node{Node::Cf{std::move(cf)}, std::move(exact)}));
}

RealSpec RealSpec::rational(const Rational& value) {
  // Euclid's algorithm on num/den gives the finite expansion.
  std::vector<Integer> terms;
  Integer num = value.get_num();
  Integer den = value.get_den();
  while (den != 0) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    terms.push_back(a);
    Integer r = num - a * den;
    num = den;
    den = r;
  }
  return continued_fraction(QuotientStream::finite(std::move(terms)));
}

RealSpec RealSpec::square(const RealSpec& operand) {
  std::optional<QuadraticSurd> exact;
  if (const auto& x = operand.exact_value()) exact = multiply(*x, *x);
  return RealSpec(std::make_shared<const Node>(Node{Node::Sq{operand}, std::move(exact)}));
}

RealSpec RealSpec::polynomial(std::vector<Rational> coefficients, const RealSpec& operand) {
  if (coefficients.empty()) coefficients.emplace_back(0);
  std::optional<QuadraticSurd> exact;
  if (const auto& x = operand.exact_value()) {
    exact = QuadraticSurd::rational(coefficients.back());
    for (std::size_t j = coefficients.size() - 1; exact && j-- > 0;) {
      exact = multiply(*exact, *x);
      if (exact) exact = shift(*exact, coefficients[j]);
    }
  }
  return RealSpec(
      std::make_shared<const Node>(Node{Node::Poly{std::move(coefficients), operand}, std::move(exact)}));
}

const std::optional<QuadraticSurd>& RealSpec::exact_value() const { return node_->exact; }

RealSpec::Kind RealSpec::kind() const {
  switch (node_->body.index()) {
    case 0:
      return Kind::ContinuedFraction;
    case 1:
      return Kind::Square;
    default:
      return Kind::Polynomial;
  }
}

const QuotientStream& RealSpec::stream() const {
  const auto* cf = std::get_if<Node::Cf>(&node_->body);
  if (cf == nullptr) throw DomainError("real spec is not a continued fraction");
  return cf->stream;
}

const RealSpec& RealSpec::operand() const {
  if (const auto* sq = std::get_if<Node::Sq>(&node_->body)) return sq->operand;
  if (const auto* poly = std::get_if<Node::Poly>(&node_->body)) return poly->operand;
  throw DomainError("continued-fraction spec has no operand");
}

const std::vector<Rational>& RealSpec::coefficients() const {
  const auto* poly = std::get_if<Node::Poly>(&node_->body);
  if (poly == nullptr) throw DomainError("real spec is not a polynomial");
  return poly->coefficients;
}

// ---------------------------------------------------------------------------
// Continued fractions

namespace {

void check_terms(const std::vector<Integer>& terms) {
  for (std::size_t j = 1; j < terms.size(); ++j) {
    if (terms[j] <= 0) {
      throw DomainError("partial quotient a_" + std::to_string(j) + " = " + terms[j].get_str() +
                        " is not positive");
    }
  }
}

// Numerators and denominators of every convergent of `terms`.
std::pair<std::vector<Integer>, std::vector<Integer>> recurrence(const std::vector<Integer>& terms) {
  std::vector<Integer> p(terms.size());
  std::vector<Integer> q(terms.size());
  Integer p2 = 0, p1 = 1, q2 = 1, q1 = 0;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    p[j] = terms[j] * p1 + p2;
    q[j] = terms[j] * q1 + q2;
    p2 = p1;
    p1 = p[j];
    q2 = q1;
    q1 = q[j];
  }
  return {std::move(p), std::move(q)};
}

}  // namespace

std::vector<Rational> convergents(const QuotientStream& cf, std::size_t k) {
  std::vector<Integer> terms = cf.prefix(k);
  if (terms.size() < k) {
    throw StreamExhausted("continued fraction has " + std::to_string(terms.size()) + " terms, " +
                          std::to_string(k) + " requested");
  }
  check_terms(terms);
  auto [p, q] = recurrence(terms);
  std::vector<Rational> out;
  out.reserve(k);
  for (std::size_t j = 0; j < k; ++j) out.push_back(make_rational(p[j], q[j]));
  return out;
}

namespace {

Enclosure enclose_cf(const QuotientStream& cf, std::size_t depth) {
  std::vector<Integer> terms = cf.prefix(depth);
  if (terms.empty()) throw StreamExhausted("empty continued fraction");
  check_terms(terms);
  auto [p, q] = recurrence(terms);
  const std::size_t n = terms.size();
  if (cf.is_finite() && n == *cf.length()) {
    Rational exact = make_rational(p[n - 1], q[n - 1]);
    return Enclosure{exact, exact, n};
  }
  if (n < depth) throw StreamExhausted("continued fraction stream exhausted at " + std::to_string(n));
  if (depth < 2) throw DomainError("continued-fraction enclosure needs depth >= 2");
  Rational a = make_rational(p[n - 2], q[n - 2]);
  Rational b = make_rational(p[n - 1], q[n - 1]);
  if (a > b) std::swap(a, b);
  return Enclosure{std::move(a), std::move(b), depth};
}

}  // namespace

Enclosure enclose(const RealSpec& spec, std::size_t depth) {
  switch (spec.kind()) {
    case RealSpec::Kind::ContinuedFraction:
      return enclose_cf(spec.stream(), depth);
    case RealSpec::Kind::Square: {
      Enclosure x = enclose(spec.operand(), depth);
      return multiply(x, x);
    }
    case RealSpec::Kind::Polynomial: {
      Enclosure x = enclose(spec.operand(), depth);
      const auto& c = spec.coefficients();
      Enclosure acc{c.back(), c.back(), x.depth};
      for (std::size_t j = c.size() - 1; j-- > 0;) acc = shift(multiply(acc, x), c[j]);
      acc.depth = x.depth;
      return acc;
    }
  }
  throw DomainError("unknown real spec kind");
}

Enclosure refine(const RealSpec& spec, const Enclosure& enc) {
  if (enc.is_exact()) return enc;
  return enclose(spec, enc.depth + kRefineStep);
}

std::optional<Integer> nearest_integer(const Enclosure& enc) {
  // n = ceil(v - 1/2) realises the half-open window (n - 1/2, n + 1/2].
  static const Rational half(1, 2);
  Integer from_lo = ceil_of(enc.lo - half);
  Integer from_hi = ceil_of(enc.hi - half);
  if (from_lo != from_hi) return std::nullopt;
  return from_lo;
}

Ordering compare(const Enclosure& a, const Enclosure& b) {
  if (a.is_exact() && b.is_exact() && a.lo == b.lo) return Ordering::EqualExact;
  if (a.hi < b.lo) return Ordering::Less;
  if (a.lo > b.hi) return Ordering::Greater;
  return Ordering::Undecided;
}

// ---------------------------------------------------------------------------
// Interval arithmetic

Enclosure add(const Enclosure& a, const Enclosure& b) {
  return Enclosure{a.lo + b.lo, a.hi + b.hi, std::min(a.depth, b.depth)};
}

Enclosure multiply(const Enclosure& a, const Enclosure& b) {
  Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  auto [mn, mx] = std::minmax_element(std::begin(c), std::end(c));
  return Enclosure{*mn, *mx, std::min(a.depth, b.depth)};
}

Enclosure scale(const Enclosure& a, const Rational& factor) {
  if (factor >= 0) return Enclosure{a.lo * factor, a.hi * factor, a.depth};
  return Enclosure{a.hi * factor, a.lo * factor, a.depth};
}

Enclosure shift(const Enclosure& a, const Rational& offset) {
  return Enclosure{a.lo + offset, a.hi + offset, a.depth};
}

Enclosure abs(const Enclosure& a) {
  if (a.lo >= 0) return a;
  if (a.hi <= 0) return Enclosure{-a.hi, -a.lo, a.depth};
  return Enclosure{Rational(0), std::max(Rational(-a.lo), a.hi), a.depth};
}

Enclosure max(const Enclosure& a, const Enclosure& b) {
  return Enclosure{std::max(a.lo, b.lo), std::max(a.hi, b.hi), std::min(a.depth, b.depth)};
}

}  // namespace dioph
