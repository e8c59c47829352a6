#include "dioph/quadratic.hpp"

#include "dioph/errors.hpp"

namespace dioph {

namespace {

bool same_field(const QuadraticSurd& x, const QuadraticSurd& y) {
  return x.is_rational() || y.is_rational() || x.d == y.d;
}

Integer field_of(const QuadraticSurd& x, const QuadraticSurd& y) { return x.is_rational() ? y.d : x.d; }

QuadraticSurd normalized(Rational a, Rational b, Integer d) {
  if (b == 0) d = 1;
  return QuadraticSurd{std::move(a), std::move(b), std::move(d)};
}

QuadraticSurd inverse(const QuadraticSurd& x) {
  Rational norm = x.a * x.a - x.b * x.b * Rational(x.d);
  if (norm == 0) throw DomainError("inverse of zero quadratic surd");
  return normalized(x.a / norm, -x.b / norm, x.d);
}

}  // namespace

std::string QuadraticSurd::to_string() const {
  if (is_rational()) return dioph::to_string(a);
  return dioph::to_string(a) + " + " + dioph::to_string(b) + "*sqrt(" + d.get_str() + ")";
}

std::optional<QuadraticSurd> add(const QuadraticSurd& x, const QuadraticSurd& y) {
  if (!same_field(x, y)) return std::nullopt;
  return normalized(x.a + y.a, x.b + y.b, field_of(x, y));
}

std::optional<QuadraticSurd> multiply(const QuadraticSurd& x, const QuadraticSurd& y) {
  if (!same_field(x, y)) return std::nullopt;
  const Integer d = field_of(x, y);
  return normalized(x.a * y.a + x.b * y.b * Rational(d), x.a * y.b + x.b * y.a, d);
}

QuadraticSurd scale(const QuadraticSurd& x, const Rational& factor) {
  return normalized(x.a * factor, x.b * factor, x.d);
}

QuadraticSurd shift(const QuadraticSurd& x, const Rational& offset) { return normalized(x.a + offset, x.b, x.d); }

int sign(const QuadraticSurd& x) {
  const int sa = sgn(x.a);
  const int sb = sgn(x.b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const int c = cmp(x.a * x.a, x.b * x.b * Rational(x.d));
  if (c == 0) return 0;
  return c > 0 ? sa : sb;
}

std::optional<int> compare_abs(const QuadraticSurd& x, const QuadraticSurd& y) {
  auto xx = multiply(x, x);
  auto yy = multiply(y, y);
  if (!xx || !yy) return std::nullopt;
  auto diff = add(*xx, scale(*yy, Rational(-1)));
  if (!diff) return std::nullopt;
  return sign(*diff);
}

Integer nearest_integer(const QuadraticSurd& x) {
  // Bracket b*sqrt(d) between consecutive multiples of 1/den(b), then settle exactly.
  static const Rational half(1, 2);
  Rational lo = x.a;
  if (!x.is_rational()) {
    Integer root;
    Integer radicand = x.b.get_num() * x.b.get_num() * x.d;
    mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
    Rational part = make_rational(root, x.b.get_den());
    lo += x.b > 0 ? part : Rational(-part - Rational(1, x.b.get_den()));
  }
  Integer n = ceil_of(lo - half);
  for (;;) {
    // Want x - 1/2 - n <= 0 < x - 1/2 - (n - 1).
    if (sign(shift(x, -half - Rational(n))) > 0) {
      n += 1;
    } else if (sign(shift(x, -half - Rational(n - 1))) <= 0) {
      n -= 1;
    } else {
      return n;
    }
  }
}

QuadraticSurd periodic_cf_value(const std::vector<Integer>& head, const std::vector<Integer>& period) {
  if (period.empty()) throw DomainError("empty period");
  Integer p2 = 0, p1 = 1, q2 = 1, q1 = 0;
  for (const Integer& a : period) {
    if (a <= 0) throw DomainError("period terms must be positive");
    Integer p = a * p1 + p2, q = a * q1 + q2;
    p2 = p1;
    p1 = p;
    q2 = q1;
    q1 = q;
  }
  // The purely periodic tail y = [period; y] solves q y^2 + (q' - p) y - p' = 0.
  Integer disc = (q2 - p1) * (q2 - p1) + 4 * q1 * p2;
  Integer outside = 1;
  for (unsigned long f = 2; f <= 10000 && Integer(f * f) <= disc; ++f) {
    const Integer sq = Integer(f) * f;
    while (mpz_divisible_p(disc.get_mpz_t(), sq.get_mpz_t()) != 0) {
      disc /= sq;
      outside *= f;
    }
  }
  QuadraticSurd y;
  if (mpz_perfect_square_p(disc.get_mpz_t()) != 0) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), disc.get_mpz_t());
    y = QuadraticSurd::rational(make_rational(p1 - q2 + outside * r, 2 * q1));
  } else {
    y = normalized(make_rational(p1 - q2, 2 * q1), make_rational(outside, 2 * q1), disc);
  }
  if (head.empty()) return y;

  // [h0; ..., h_{m-1}, y] = (H y + H') / (K y + K').
  Integer h2 = 0, h1 = 1, k2 = 1, k1 = 0;
  for (std::size_t j = 0; j < head.size(); ++j) {
    if (j > 0 && head[j] <= 0) throw DomainError("partial quotients after a0 must be positive");
    Integer h = head[j] * h1 + h2, k = head[j] * k1 + k2;
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
  }
  QuadraticSurd num = shift(scale(y, Rational(h1)), Rational(h2));
  QuadraticSurd den = shift(scale(y, Rational(k1)), Rational(k2));
  return *multiply(num, inverse(den));
}

}  // namespace dioph
