#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "dioph/intvec.hpp"
#include "dioph/minimal_points.hpp"
#include "dioph/numbers.hpp"

namespace dioph {

// Raw cross product (x1 y2 - x2 y1, x2 y0 - x0 y2, x0 y1 - x1 y0).
IntVec3 wedge(const IntVec3& x, const IntVec3& y);

// Divides by the content and makes the first non-zero entry positive.
IntVec3 primitivize(const IntVec3& v);
bool is_primitive(const IntVec3& v);

// The rank-2 subspace spanned by two integer vectors, identified by its
// primitive normal vector. H(W)^2 is kept exactly as height_sq.
struct Subspace {
  IntVec3 wedge;
  Integer height_sq;
  std::pair<IntVec3, IntVec3> span_witness;
  // Whether the witnesses were a basis of W ∩ Z^3, i.e. the raw wedge was primitive.
  bool basis_flag = false;
};

Subspace subspace_of(const IntVec3& x, const IntVec3& y);
bool same_subspace(const Subspace& a, const Subspace& b);

// {x, y} is a basis of span(x, y) ∩ Z^3 iff x ∧ y is primitive.
bool is_lattice_basis(const IntVec3& x, const IntVec3& y);

Integer determinant(const IntVec3& a, const IntVec3& b, const IntVec3& c);
bool triple_independent(const IntVec3& a, const IntVec3& b, const IntVec3& c);

// 1-based indices i, 2 <= i <= len-1, where x_{i-1}, x_i, x_{i+1} are independent.
std::vector<std::size_t> index_set_I(std::span<const MinimalPoint> seq);

// Squared absolute Weil height of a point of Q^n. Over Q the archimedean
// factor is the Euclidean norm and the finite places contribute 1/content
// once the point is scaled to integers, so H(v)^2 = |w|^2 / content(w)^2 for
// any integer multiple w of v.
Rational weil_height_sq(std::span<const Rational> v);

// Sparse bivariate polynomial with rational coefficients.
struct Monomial {
  unsigned x_exp = 0;
  unsigned y_exp = 0;
  Rational coefficient;
};
using BivariatePolynomial = std::vector<Monomial>;

// Symmetric 3x3 form phi with phi(1, x, y) = f(x, y).
struct ConicForm {
  std::array<std::array<Rational, 3>, 3> matrix;
};

// Coefficients in the order c_xx, c_xy, c_yy, c_x, c_y, c_1.
BivariatePolynomial quadratic_polynomial(const std::array<Rational, 6>& c);
unsigned total_degree(const BivariatePolynomial& f);

ConicForm conic_from_poly(const BivariatePolynomial& f);
ConicForm parabola_form();
Rational conic_eval(const ConicForm& phi, const IntVec3& v);
// phi(1, x, y) at a rational point.
Rational conic_eval(const ConicForm& phi, const Rational& x, const Rational& y);
// Least common denominator of the matrix entries' contributions; |phi(v)| >= 1/c when phi(v) != 0.
Integer common_denominator(const ConicForm& phi);

}  // namespace dioph
