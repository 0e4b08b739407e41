#pragma once

#include <span>
#include <vector>

#include "twistkit/polynomial.hpp"

namespace twistkit {

enum class Variance { form, vector };

/// Degree-k graded object with polynomial coefficients over strictly
/// increasing coordinate index tuples.  Insertion normalizes arbitrary
/// index order with the permutation sign and drops repeated indices, so
/// stored values are canonical and equality is structural.
///
/// Degree-overflow objects (degree > chart dim) are legal but always
/// identically zero; wedge chains in top-degree checks rely on this.
template <Variance V>
class Graded {
 public:
  using IndexTuple = std::vector<std::size_t>;
  using CoeffMap = std::map<IndexTuple, Polynomial>;

  Graded(Chart chart, int degree);

  static Graded zero(const Chart& chart, int degree) { return Graded(chart, degree); }
  /// dz^i for forms, ∂/∂z_i for multivectors.
  static Graded coordinate(const Chart& chart, std::size_t index);
  /// Degree-0 wrapper around a polynomial.
  static Graded scalar(Polynomial p);

  const Chart& chart() const { return chart_; }
  int degree() const { return degree_; }
  const CoeffMap& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Adds coeff * basis(indices); indices may arrive in any order and are
  /// normalized with the permutation sign.  Tuples with a repeated index
  /// contribute nothing.
  void add_term(IndexTuple indices, Polynomial coeff);
  /// Coefficient of a (strictly increasing) tuple; zero if absent.
  Polynomial coefficient(const IndexTuple& indices) const;
  /// Fully antisymmetric component for an arbitrary index sequence.
  Polynomial component(IndexTuple indices) const;

  Graded operator-() const;
  Graded operator+(const Graded& rhs) const;
  Graded operator-(const Graded& rhs) const;
  Graded operator*(const Rational& scalar) const;
  Graded operator*(const Polynomial& scalar) const;
  Graded& operator+=(const Graded& rhs);

  bool operator==(const Graded& rhs) const;
  bool operator!=(const Graded& rhs) const { return !(*this == rhs); }

  /// Canonical rendering; basis tokens are "dx1" for forms, "@x1" for
  /// multivectors.
  std::string to_string() const;

 private:
  Chart chart_;
  int degree_;
  CoeffMap coeffs_;
};

using DifferentialForm = Graded<Variance::form>;
using Multivector = Graded<Variance::vector>;
/// A multivector of degree 1.
using VectorField = Multivector;

/// dz^index as a 1-form.
DifferentialForm coordinate_form(const Chart& chart, std::size_t index);
/// ∂/∂z_index as a vector field.
VectorField coordinate_vector(const Chart& chart, std::size_t index);
/// df as a 1-form.
DifferentialForm differential(const Polynomial& f);

template <Variance V>
Graded<V> wedge(const Graded<V>& a, const Graded<V>& b);

/// Exterior derivative; degree k+1, d∘d = 0, graded Leibniz over wedge.
DifferentialForm d(const DifferentialForm& a);

/// Interior product i_X a with X inserted into the FIRST slot:
/// contract(a, X)(Y, ...) = a(X, Y, ...).
DifferentialForm contract(const DifferentialForm& a, const VectorField& X);
/// First-slot contraction of a multivector by a 1-form:
/// contract(T, alpha)(beta, ...) = T(alpha, beta, ...).
Multivector contract(const Multivector& T, const DifferentialForm& alpha);

/// First-slot insertion of a 1-form into a bivector:
/// sharp(pi, alpha)^j = sum_i alpha_i pi^{ij}.
VectorField sharp(const Multivector& pi, const DifferentialForm& alpha);

/// Full evaluation of a degree-k form on k vector fields; totally
/// antisymmetric in the arguments.
Polynomial apply_form(const DifferentialForm& a, std::span<const VectorField> fields);
/// Full evaluation of a degree-k multivector on k 1-forms.
Polynomial apply_multivector(const Multivector& T, std::span<const DifferentialForm> forms);

/// Directional derivative sum_i X^i ∂a/∂z_i.
Polynomial apply_vf(const VectorField& X, const Polynomial& a);

/// Cartan formula L_X = i_X∘d + d∘i_X.
DifferentialForm lie_derivative(const VectorField& X, const DifferentialForm& a);

/// Jacobi–Lie bracket [X,Y]^k = sum_i (X^i ∂_i Y^k − Y^i ∂_i X^k).
VectorField commutator(const VectorField& X, const VectorField& Y);

/// Schouten–Nijenhuis square of a bivector, stored over increasing
/// (i,j,k):
///   [pi,pi]^{ijk} = 2 sum_l (pi^{il} ∂_l pi^{jk} + pi^{jl} ∂_l pi^{ki}
///                            + pi^{kl} ∂_l pi^{ij}).
Multivector schouten_square(const Multivector& pi);

/// The bracket {f,g} = pi(df, dg) of an arbitrary bivector.
Polynomial bivector_bracket(const Multivector& pi, const Polynomial& f, const Polynomial& g);

/// For a 2-form B on a 3-coordinate chart, the unique p with
/// dB = p · dx1∧dx2∧dx3.
Polynomial divergence_of_2form(const DifferentialForm& B);

/// Reinterpret a graded object on another chart by coordinate name
/// (the cotangent-projection pullback when going base -> phase chart).
template <Variance V>
Graded<V> on_chart(const Graded<V>& a, const Chart& target);

}  // namespace twistkit
