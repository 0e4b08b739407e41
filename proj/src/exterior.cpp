#include "twistkit/exterior.hpp"

#include <algorithm>
#include <sstream>

namespace twistkit {

namespace {

// Sorts indices in place, returns the permutation sign, or 0 if an index
// repeats.
int normalize_tuple(std::vector<std::size_t>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    std::size_t j = i;
    while (j > 0 && idx[j - 1] > idx[j]) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
      --j;
    }
  }
  for (std::size_t i = 1; i < idx.size(); ++i) {
    if (idx[i - 1] == idx[i]) return 0;
  }
  return sign;
}

}  // namespace

template <Variance V>
Graded<V>::Graded(Chart chart, int degree) : chart_(std::move(chart)), degree_(degree) {
  if (degree < 0) throw Error("graded object degree must be nonnegative");
}

template <Variance V>
Graded<V> Graded<V>::coordinate(const Chart& chart, std::size_t index) {
  if (index >= chart.dim()) throw ChartMismatch("coordinate index out of range");
  Graded g(chart, 1);
  g.add_term({index}, Polynomial::constant(chart, 1));
  return g;
}

template <Variance V>
Graded<V> Graded<V>::scalar(Polynomial p) {
  Graded g(p.chart(), 0);
  g.add_term({}, std::move(p));
  return g;
}

template <Variance V>
void Graded<V>::add_term(IndexTuple indices, Polynomial coeff) {
  if (static_cast<int>(indices.size()) != degree_) {
    throw Error("index tuple length does not match degree");
  }
  for (std::size_t i : indices) {
    if (i >= chart_.dim()) throw ChartMismatch("basis index out of range for chart");
  }
  require_same_chart(chart_, coeff.chart(), "graded term insertion");
  if (coeff.is_zero()) return;
  int sign = normalize_tuple(indices);
  if (sign == 0) return;
  Polynomial value = sign == 1 ? std::move(coeff) : -coeff;
  auto it = coeffs_.find(indices);
  if (it == coeffs_.end()) {
    coeffs_.emplace(std::move(indices), std::move(value));
  } else {
    it->second += value;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

template <Variance V>
Polynomial Graded<V>::coefficient(const IndexTuple& indices) const {
  auto it = coeffs_.find(indices);
  if (it == coeffs_.end()) return Polynomial::zero(chart_);
  return it->second;
}

template <Variance V>
Polynomial Graded<V>::component(IndexTuple indices) const {
  int sign = normalize_tuple(indices);
  if (sign == 0) return Polynomial::zero(chart_);
  Polynomial c = coefficient(indices);
  return sign == 1 ? c : -c;
}

template <Variance V>
Graded<V> Graded<V>::operator-() const {
  Graded r(chart_, degree_);
  for (const auto& [idx, c] : coeffs_) r.coeffs_.emplace(idx, -c);
  return r;
}

template <Variance V>
Graded<V> Graded<V>::operator+(const Graded& rhs) const {
  Graded r = *this;
  r += rhs;
  return r;
}

template <Variance V>
Graded<V>& Graded<V>::operator+=(const Graded& rhs) {
  require_same_chart(chart_, rhs.chart_, "graded addition");
  if (degree_ != rhs.degree_) throw Error("graded addition: degrees differ");
  for (const auto& [idx, c] : rhs.coeffs_) {
    auto it = coeffs_.find(idx);
    if (it == coeffs_.end()) {
      coeffs_.emplace(idx, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }
  return *this;
}

template <Variance V>
Graded<V> Graded<V>::operator-(const Graded& rhs) const {
  return *this + (-rhs);
}

template <Variance V>
Graded<V> Graded<V>::operator*(const Rational& scalar) const {
  Graded r(chart_, degree_);
  if (scalar == 0) return r;
  for (const auto& [idx, c] : coeffs_) r.coeffs_.emplace(idx, c * scalar);
  return r;
}

template <Variance V>
Graded<V> Graded<V>::operator*(const Polynomial& scalar) const {
  Graded r(chart_, degree_);
  for (const auto& [idx, c] : coeffs_) {
    Polynomial p = c * scalar;
    if (!p.is_zero()) r.coeffs_.emplace(idx, std::move(p));
  }
  return r;
}

template <Variance V>
bool Graded<V>::operator==(const Graded& rhs) const {
  return chart_ == rhs.chart_ && degree_ == rhs.degree_ && coeffs_ == rhs.coeffs_;
}

template <Variance V>
std::string Graded<V>::to_string() const {
  if (coeffs_.empty()) return "0";
  const char* prefix = V == Variance::form ? "d" : "@";
  std::ostringstream out;
  bool first = true;
  for (const auto& [idx, c] : coeffs_) {
    std::string basis;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (k > 0) basis += "^";
      basis += prefix;
      basis += chart_.name(idx[k]);
    }
    std::string cs = c.to_string();
    bool multi_term = c.terms().size() > 1;
    bool neg = false;
    if (!multi_term && !cs.empty() && cs[0] == '-') {
      neg = true;
      cs.erase(0, 1);
    }
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    if (basis.empty()) {
      out << (multi_term ? "(" + cs + ")" : cs);
    } else if (multi_term) {
      out << "(" << cs << ")*" << basis;
    } else if (cs == "1") {
      out << basis;
    } else {
      out << cs << "*" << basis;
    }
  }
  return out.str();
}

template class Graded<Variance::form>;
template class Graded<Variance::vector>;

DifferentialForm coordinate_form(const Chart& chart, std::size_t index) {
  return DifferentialForm::coordinate(chart, index);
}

VectorField coordinate_vector(const Chart& chart, std::size_t index) {
  return VectorField::coordinate(chart, index);
}

DifferentialForm differential(const Polynomial& f) {
  DifferentialForm df(f.chart(), 1);
  for (std::size_t i = 0; i < f.chart().dim(); ++i) {
    df.add_term({i}, f.partial(i));
  }
  return df;
}

template <Variance V>
Graded<V> wedge(const Graded<V>& a, const Graded<V>& b) {
  require_same_chart(a.chart(), b.chart(), "wedge");
  Graded<V> r(a.chart(), a.degree() + b.degree());
  for (const auto& [ia, ca] : a.coeffs()) {
    for (const auto& [ib, cb] : b.coeffs()) {
      std::vector<std::size_t> merged;
      merged.reserve(ia.size() + ib.size());
      merged.insert(merged.end(), ia.begin(), ia.end());
      merged.insert(merged.end(), ib.begin(), ib.end());
      r.add_term(std::move(merged), ca * cb);
    }
  }
  return r;
}

template DifferentialForm wedge(const DifferentialForm&, const DifferentialForm&);
template Multivector wedge(const Multivector&, const Multivector&);

DifferentialForm d(const DifferentialForm& a) {
  DifferentialForm r(a.chart(), a.degree() + 1);
  for (const auto& [idx, c] : a.coeffs()) {
    for (std::size_t v = 0; v < a.chart().dim(); ++v) {
      Polynomial dc = c.partial(v);
      if (dc.is_zero()) continue;
      std::vector<std::size_t> t;
      t.reserve(idx.size() + 1);
      t.push_back(v);
      t.insert(t.end(), idx.begin(), idx.end());
      r.add_term(std::move(t), std::move(dc));
    }
  }
  return r;
}

namespace {

// First-slot contraction over raw coefficient maps; works for both
// variances because the formula only sees index tuples.
template <Variance VA, Variance VB>
Graded<VA> contract_impl(const Graded<VA>& a, const Graded<VB>& x, const char* what) {
  require_same_chart(a.chart(), x.chart(), what);
  if (a.degree() < 1) throw Error(std::string(what) + ": cannot contract a degree-0 object");
  if (x.degree() != 1) throw Error(std::string(what) + ": contraction argument must have degree 1");
  Graded<VA> r(a.chart(), a.degree() - 1);
  for (const auto& [idx, c] : a.coeffs()) {
    for (std::size_t pos = 0; pos < idx.size(); ++pos) {
      Polynomial xc = x.coefficient({idx[pos]});
      if (xc.is_zero()) continue;
      std::vector<std::size_t> rest;
      rest.reserve(idx.size() - 1);
      for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k != pos) rest.push_back(idx[k]);
      }
      Polynomial term = c * xc;
      if (pos % 2 == 1) term = -term;
      r.add_term(std::move(rest), std::move(term));
    }
  }
  return r;
}

}  // namespace

DifferentialForm contract(const DifferentialForm& a, const VectorField& X) {
  return contract_impl(a, X, "contract(form, field)");
}

Multivector contract(const Multivector& T, const DifferentialForm& alpha) {
  return contract_impl(T, alpha, "contract(multivector, 1-form)");
}

VectorField sharp(const Multivector& pi, const DifferentialForm& alpha) {
  if (pi.degree() != 2) throw Error("sharp: bivector expected");
  if (alpha.degree() != 1) throw Error("sharp: 1-form expected");
  return contract(pi, alpha);
}

Polynomial apply_form(const DifferentialForm& a, std::span<const VectorField> fields) {
  if (static_cast<int>(fields.size()) != a.degree()) {
    throw Error("apply_form: number of vector fields must equal the form degree");
  }
  DifferentialForm cur = a;
  for (const VectorField& X : fields) cur = contract(cur, X);
  return cur.coefficient({});
}

Polynomial apply_multivector(const Multivector& T, std::span<const DifferentialForm> forms) {
  if (static_cast<int>(forms.size()) != T.degree()) {
    throw Error("apply_multivector: number of 1-forms must equal the degree");
  }
  Multivector cur = T;
  for (const DifferentialForm& a : forms) cur = contract(cur, a);
  return cur.coefficient({});
}

Polynomial apply_vf(const VectorField& X, const Polynomial& a) {
  require_same_chart(X.chart(), a.chart(), "apply_vf");
  if (X.degree() != 1) throw Error("apply_vf: vector field must have degree 1");
  Polynomial r(a.chart());
  for (const auto& [idx, c] : X.coeffs()) {
    r += c * a.partial(idx[0]);
  }
  return r;
}

DifferentialForm lie_derivative(const VectorField& X, const DifferentialForm& a) {
  require_same_chart(X.chart(), a.chart(), "lie_derivative");
  if (a.degree() == 0) {
    return DifferentialForm::scalar(apply_vf(X, a.coefficient({})));
  }
  return contract(d(a), X) + d(contract(a, X));
}

VectorField commutator(const VectorField& X, const VectorField& Y) {
  require_same_chart(X.chart(), Y.chart(), "commutator");
  if (X.degree() != 1 || Y.degree() != 1) throw Error("commutator: degree-1 fields expected");
  VectorField r(X.chart(), 1);
  for (std::size_t k = 0; k < X.chart().dim(); ++k) {
    Polynomial comp = apply_vf(X, Y.coefficient({k})) - apply_vf(Y, X.coefficient({k}));
    r.add_term({k}, std::move(comp));
  }
  return r;
}

Multivector schouten_square(const Multivector& pi) {
  if (pi.degree() != 2) throw Error("schouten_square: bivector expected");
  const Chart& chart = pi.chart();
  const std::size_t n = chart.dim();
  auto entry = [&pi](std::size_t i, std::size_t j) { return pi.component({i, j}); };
  Multivector r(chart, 3);
  for (std::size_t i = 0; i + 2 < n; ++i) {
    for (std::size_t j = i + 1; j + 1 < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Polynomial sum(chart);
        for (std::size_t l = 0; l < n; ++l) {
          sum += entry(i, l) * entry(j, k).partial(l);
          sum += entry(j, l) * entry(k, i).partial(l);
          sum += entry(k, l) * entry(i, j).partial(l);
        }
        r.add_term({i, j, k}, sum * Rational(2));
      }
    }
  }
  return r;
}

Polynomial bivector_bracket(const Multivector& pi, const Polynomial& f, const Polynomial& g) {
  if (pi.degree() != 2) throw Error("bivector_bracket: bivector expected");
  require_same_chart(pi.chart(), f.chart(), "bivector_bracket");
  require_same_chart(pi.chart(), g.chart(), "bivector_bracket");
  Polynomial r(pi.chart());
  for (const auto& [idx, c] : pi.coeffs()) {
    const std::size_t i = idx[0], j = idx[1];
    r += c * (f.partial(i) * g.partial(j) - f.partial(j) * g.partial(i));
  }
  return r;
}

Polynomial divergence_of_2form(const DifferentialForm& B) {
  if (B.chart().dim() != 3) {
    throw Error("divergence_of_2form: chart must have exactly 3 coordinates");
  }
  if (B.degree() != 2) throw Error("divergence_of_2form: 2-form expected");
  return d(B).coefficient({0, 1, 2});
}

template <Variance V>
Graded<V> on_chart(const Graded<V>& a, const Chart& target) {
  if (a.chart() == target) return a;
  Graded<V> r(target, a.degree());
  for (const auto& [idx, c] : a.coeffs()) {
    std::vector<std::size_t> t;
    t.reserve(idx.size());
    for (std::size_t i : idx) t.push_back(target.require(a.chart().name(i)));
    r.add_term(std::move(t), c.on_chart(target));
  }
  return r;
}

template DifferentialForm on_chart(const DifferentialForm&, const Chart&);
template Multivector on_chart(const Multivector&, const Chart&);

}  // namespace twistkit
