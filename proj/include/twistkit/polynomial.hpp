#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twistkit/errors.hpp"

namespace twistkit {

/// Exact arbitrary-precision rational; the coefficient field for every
/// symbolic object in the toolkit.  Floating point never enters the
/// symbolic modules.
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& r);

/// An ordered list of pairwise distinct coordinate names.  Charts are
/// values carried by every symbolic object; operations across different
/// charts throw ChartMismatch rather than coercing.
class Chart {
 public:
  explicit Chart(std::vector<std::string> names);

  /// x1..xn followed by p1..pn.
  static Chart phase_space(int n);
  /// c1..cd, the chart of the dual of a d-dimensional algebra.
  static Chart dual(int d);
  /// x1..xn.
  static Chart base(int n);

  std::size_t dim() const { return data_->names.size(); }
  const std::string& name(std::size_t i) const { return data_->names[i]; }
  const std::vector<std::string>& names() const { return data_->names; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// As index_of but throws ChartMismatch naming the identifier.
  std::size_t require(std::string_view name) const;

  bool operator==(const Chart& other) const;
  bool operator!=(const Chart& other) const { return !(*this == other); }

 private:
  struct Data {
    std::vector<std::string> names;
    std::map<std::string, std::size_t, std::less<>> index;
  };
  std::shared_ptr<const Data> data_;
};

/// Throws ChartMismatch unless both charts are equal; `context` names the
/// operation for the message.
void require_same_chart(const Chart& a, const Chart& b, std::string_view context);

/// Exact multivariate polynomial over the rationals on a chart.  Stored in
/// canonical form: a map from exponent vectors to nonzero coefficients,
/// so equality is structural.
class Polynomial {
 public:
  using Exponents = std::vector<unsigned>;
  using TermMap = std::map<Exponents, Rational>;

  explicit Polynomial(Chart chart);  // zero

  static Polynomial zero(const Chart& chart) { return Polynomial(chart); }
  static Polynomial constant(const Chart& chart, const Rational& value);
  static Polynomial variable(const Chart& chart, std::size_t index);
  static Polynomial variable(const Chart& chart, std::string_view name);
  static Polynomial monomial(const Chart& chart, Exponents exps, const Rational& coeff);

  const Chart& chart() const { return chart_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// The coefficient if the polynomial is constant (possibly zero).
  std::optional<Rational> as_constant() const;
  /// Total degree; -1 for the zero polynomial.
  int total_degree() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator*(const Rational& scalar) const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);

  bool operator==(const Polynomial& rhs) const;
  bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

  /// Formal partial derivative with respect to coordinate `index`.
  Polynomial partial(std::size_t index) const;
  Polynomial partial(std::string_view name) const;

  /// Exact evaluation at a rational point (length = chart dim).
  Rational eval(std::span<const Rational> point) const;
  /// Floating-point evaluation for the numeric flow module.
  double eval(std::span<const double> point) const;

  /// Reinterpret on another chart, matching coordinates by name.  Every
  /// variable that actually occurs must exist on the target chart.
  Polynomial on_chart(const Chart& target) const;

  /// Canonical rendering in the shared expression grammar; terms sorted
  /// by exponent vector.
  std::string to_string() const;

 private:
  void add_term(const Exponents& exps, const Rational& coeff);

  Chart chart_;
  TermMap terms_;
};

inline Polynomial operator*(const Rational& scalar, const Polynomial& p) {
  return p * scalar;
}

}  // namespace twistkit
