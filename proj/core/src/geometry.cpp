#include "dioph/geometry.hpp"

#include <algorithm>
#include <string>

#include "dioph/errors.hpp"

namespace dioph {

IntVec3 wedge(const IntVec3& x, const IntVec3& y) {
  return {x.x1 * y.x2 - x.x2 * y.x1, x.x2 * y.x0 - x.x0 * y.x2, x.x0 * y.x1 - x.x1 * y.x0};
}

IntVec3 primitivize(const IntVec3& v) {
  if (v.is_zero()) throw ZeroVector("cannot primitivize the zero vector");
  Integer g = content(v);
  IntVec3 out{v.x0 / g, v.x1 / g, v.x2 / g};
  const Integer& lead = out.x0 != 0 ? out.x0 : (out.x1 != 0 ? out.x1 : out.x2);
  if (lead < 0) out = Integer(-1) * out;
  return out;
}

bool is_primitive(const IntVec3& v) { return !v.is_zero() && content(v) == 1; }

Subspace subspace_of(const IntVec3& x, const IntVec3& y) {
  IntVec3 raw = wedge(x, y);
  if (raw.is_zero()) throw DependentVectors("vectors " + to_string(x) + " and " + to_string(y) + " are dependent");
  Subspace w;
  w.basis_flag = is_primitive(raw);
  w.wedge = primitivize(raw);
  w.height_sq = norm_sq(w.wedge);
  w.span_witness = {x, y};
  return w;
}

bool same_subspace(const Subspace& a, const Subspace& b) { return a.wedge == b.wedge; }

bool is_lattice_basis(const IntVec3& x, const IntVec3& y) {
  IntVec3 raw = wedge(x, y);
  if (raw.is_zero()) throw DependentVectors("vectors " + to_string(x) + " and " + to_string(y) + " are dependent");
  return content(raw) == 1;
}

Integer determinant(const IntVec3& a, const IntVec3& b, const IntVec3& c) { return dot(a, wedge(b, c)); }

bool triple_independent(const IntVec3& a, const IntVec3& b, const IntVec3& c) { return determinant(a, b, c) != 0; }

std::vector<std::size_t> index_set_I(std::span<const MinimalPoint> seq) {
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k + 1 < seq.size(); ++k) {
    if (triple_independent(seq[k - 1].vec, seq[k].vec, seq[k + 1].vec)) out.push_back(k + 1);
  }
  return out;
}

Rational weil_height_sq(std::span<const Rational> v) {
  Integer den = 1;
  for (const Rational& q : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  Integer g = 0;
  Integer sum = 0;
  for (const Rational& q : v) {
    Integer w = q.get_num() * (den / q.get_den());
    g = gcd(g, w);
    sum += w * w;
  }
  if (g == 0) throw ZeroVector("height of the zero vector");
  return make_rational(sum, g * g);
}

BivariatePolynomial quadratic_polynomial(const std::array<Rational, 6>& c) {
  return {
      {2, 0, c[0]}, {1, 1, c[1]}, {0, 2, c[2]}, {1, 0, c[3]}, {0, 1, c[4]}, {0, 0, c[5]},
  };
}

unsigned total_degree(const BivariatePolynomial& f) {
  unsigned deg = 0;
  bool any = false;
  for (const auto& m : f) {
    if (m.coefficient == 0) continue;
    any = true;
    deg = std::max(deg, m.x_exp + m.y_exp);
  }
  if (!any) throw BadDegree("zero polynomial has no degree");
  return deg;
}

ConicForm conic_from_poly(const BivariatePolynomial& f) {
  unsigned deg = total_degree(f);
  if (deg != 2) throw BadDegree("conic polynomial has degree " + std::to_string(deg) + ", expected 2");
  ConicForm phi;
  for (auto& row : phi.matrix) row.fill(Rational(0));
  // Homogenising with x0: x -> x1, y -> x2, constants -> x0.
  static const Rational half(1, 2);
  for (const auto& m : f) {
    // Each monomial of degree <= 2 is a product of two of x0, x1, x2.
    std::size_t slots[2] = {0, 0};
    std::size_t used = 0;
    for (unsigned k = 0; k < m.x_exp; ++k) slots[used++] = 1;
    for (unsigned k = 0; k < m.y_exp; ++k) slots[used++] = 2;
    const std::size_t i = slots[0];
    const std::size_t j = slots[1];
    if (i == j) {
      phi.matrix[i][i] += m.coefficient;
    } else {
      phi.matrix[i][j] += m.coefficient * half;
      phi.matrix[j][i] += m.coefficient * half;
    }
  }
  return phi;
}

ConicForm parabola_form() {
  // f = y - x^2.
  return conic_from_poly(quadratic_polynomial({Rational(-1), 0, 0, 0, 1, 0}));
}

Rational conic_eval(const ConicForm& phi, const IntVec3& v) {
  const Integer* x[3] = {&v.x0, &v.x1, &v.x2};
  Rational sum = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) sum += phi.matrix[i][j] * Rational(*x[i] * *x[j]);
  }
  return sum;
}

Rational conic_eval(const ConicForm& phi, const Rational& x, const Rational& y) {
  const Rational v[3] = {Rational(1), x, y};
  Rational sum = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) sum += phi.matrix[i][j] * v[i] * v[j];
  }
  return sum;
}

Integer common_denominator(const ConicForm& phi) {
  Integer den = 1;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i; j < 3; ++j) {
      Rational c = i == j ? phi.matrix[i][i] : Rational(2 * phi.matrix[i][j]);
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
  }
  return den;
}

}  // namespace dioph
