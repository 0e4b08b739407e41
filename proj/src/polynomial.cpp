#include "twistkit/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace twistkit {

std::string to_string(const Rational& r) { return r.str(); }

Chart::Chart(std::vector<std::string> names) {
  if (names.empty()) throw Error("chart must have at least one coordinate");
  auto data = std::make_shared<Data>();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw Error("empty coordinate name in chart");
    auto [it, inserted] = data->index.emplace(names[i], i);
    if (!inserted) throw Error("duplicate coordinate name '" + names[i] + "' in chart");
  }
  data->names = std::move(names);
  data_ = std::move(data);
}

Chart Chart::phase_space(int n) {
  if (n < 1) throw Error("phase space dimension must be positive");
  std::vector<std::string> names;
  names.reserve(2 * static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  for (int i = 1; i <= n; ++i) names.push_back("p" + std::to_string(i));
  return Chart(std::move(names));
}

Chart Chart::dual(int d) {
  if (d < 1) throw Error("dual chart dimension must be positive");
  std::vector<std::string> names;
  for (int i = 1; i <= d; ++i) names.push_back("c" + std::to_string(i));
  return Chart(std::move(names));
}

Chart Chart::base(int n) {
  if (n < 1) throw Error("base chart dimension must be positive");
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return Chart(std::move(names));
}

std::optional<std::size_t> Chart::index_of(std::string_view name) const {
  auto it = data_->index.find(name);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t Chart::require(std::string_view name) const {
  auto idx = index_of(name);
  if (!idx) throw ChartMismatch("'" + std::string(name) + "' is not a coordinate of this chart");
  return *idx;
}

bool Chart::operator==(const Chart& other) const {
  return data_ == other.data_ || data_->names == other.data_->names;
}

void require_same_chart(const Chart& a, const Chart& b, std::string_view context) {
  if (a != b) {
    throw ChartMismatch(std::string(context) + ": operands live on different charts");
  }
}

Polynomial::Polynomial(Chart chart) : chart_(std::move(chart)) {}

Polynomial Polynomial::constant(const Chart& chart, const Rational& value) {
  Polynomial p(chart);
  if (value != 0) p.terms_.emplace(Exponents(chart.dim(), 0), value);
  return p;
}

Polynomial Polynomial::variable(const Chart& chart, std::size_t index) {
  if (index >= chart.dim()) throw Error("variable index out of range");
  Polynomial p(chart);
  Exponents e(chart.dim(), 0);
  e[index] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

Polynomial Polynomial::variable(const Chart& chart, std::string_view name) {
  return variable(chart, chart.require(name));
}

Polynomial Polynomial::monomial(const Chart& chart, Exponents exps, const Rational& coeff) {
  if (exps.size() != chart.dim()) throw Error("exponent vector length does not match chart");
  Polynomial p(chart);
  if (coeff != 0) p.terms_.emplace(std::move(exps), coeff);
  return p;
}

std::optional<Rational> Polynomial::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1) {
    const auto& [e, c] = *terms_.begin();
    if (std::all_of(e.begin(), e.end(), [](unsigned k) { return k == 0; })) return c;
  }
  return std::nullopt;
}

int Polynomial::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (unsigned k : e) d += static_cast<int>(k);
    deg = std::max(deg, d);
  }
  return deg;
}

void Polynomial::add_term(const Exponents& exps, const Rational& coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(chart_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  Polynomial r = *this;
  r += rhs;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  Polynomial r = *this;
  r -= rhs;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  require_same_chart(chart_, rhs.chart_, "polynomial addition");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  require_same_chart(chart_, rhs.chart_, "polynomial subtraction");
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  require_same_chart(chart_, rhs.chart_, "polynomial multiplication");
  Polynomial r(chart_);
  Exponents e(chart_.dim());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
  Polynomial r(chart_);
  if (scalar == 0) return r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * scalar);
  return r;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
  return chart_ == rhs.chart_ && terms_ == rhs.terms_;
}

Polynomial Polynomial::partial(std::size_t index) const {
  if (index >= chart_.dim()) throw ChartMismatch("partial: coordinate index out of range");
  Polynomial r(chart_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponents d = e;
    d[index] -= 1;
    r.add_term(d, c * Rational(e[index]));
  }
  return r;
}

Polynomial Polynomial::partial(std::string_view name) const {
  return partial(chart_.require(name));
}

Rational Polynomial::eval(std::span<const Rational> point) const {
  if (point.size() != chart_.dim()) throw Error("eval: point dimension does not match chart");
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
    }
    total += term;
  }
  return total;
}

double Polynomial::eval(std::span<const double> point) const {
  if (point.size() != chart_.dim()) throw Error("eval: point dimension does not match chart");
  double total = 0.0;
  for (const auto& [e, c] : terms_) {
    double term = static_cast<double>(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
    }
    total += term;
  }
  return total;
}

Polynomial Polynomial::on_chart(const Chart& target) const {
  if (chart_ == target) return *this;
  // Map used variables by name.
  std::vector<std::optional<std::size_t>> map(chart_.dim());
  for (std::size_t i = 0; i < chart_.dim(); ++i) map[i] = target.index_of(chart_.name(i));
  Polynomial r(target);
  for (const auto& [e, c] : terms_) {
    Exponents ne(target.dim(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!map[i]) {
        throw ChartMismatch("'" + chart_.name(i) + "' is not a coordinate of the target chart");
      }
      ne[*map[i]] += e[i];
    }
    r.add_term(ne, c);
  }
  return r;
}

namespace {

// Renders one monomial without its sign, e.g. "2/3*x1^2*p3".
std::string monomial_string(const Chart& chart, const Polynomial::Exponents& e,
                            const Rational& coeff) {
  Rational mag = coeff < 0 ? Rational(-coeff) : coeff;
  std::ostringstream out;
  bool has_vars = std::any_of(e.begin(), e.end(), [](unsigned k) { return k > 0; });
  bool printed = false;
  if (mag != 1 || !has_vars) {
    out << mag.str();
    printed = true;
  }
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (printed) out << "*";
    out << chart.name(i);
    if (e[i] > 1) out << "^" << e[i];
    printed = true;
  }
  return out.str();
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool neg = c < 0;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    out << monomial_string(chart_, e, c);
  }
  return out.str();
}

}  // namespace twistkit
