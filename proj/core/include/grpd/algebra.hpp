#ifndef GRPD_ALGEBRA_HPP
#define GRPD_ALGEBRA_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "grpd/groupoid.hpp"
#include "grpd/matrix.hpp"

namespace grpd {

/// A finitely supported scalar combination of the arrows of a groupoid:
/// an element of the groupoid algebra KG. Zero coefficients are never
/// stored, so support order is canonical (ascending arrow id).
template <class F>
class AlgebraElement {
 public:
  using Elem = typename F::Element;

  AlgebraElement(const FiniteGroupoid& g, F field) : g_(&g), field_(field) {}

  static AlgebraElement basis(const FiniteGroupoid& g, F field, ArrowId a) {
    AlgebraElement x(g, field);
    x.set_coeff(a, field.one());
    return x;
  }

  const FiniteGroupoid& groupoid() const { return *g_; }
  const F& field() const { return field_; }

  Elem coeff(ArrowId a) const {
    auto it = coeffs_.find(a);
    return it == coeffs_.end() ? field_.zero() : it->second;
  }

  void set_coeff(ArrowId a, const Elem& c) {
    if (a >= g_->arrow_count()) throw std::out_of_range("coefficient outside the groupoid");
    if (field_.is_zero(c))
      coeffs_.erase(a);
    else
      coeffs_.insert_or_assign(a, c);
  }

  void add_coeff(ArrowId a, const Elem& c) { set_coeff(a, coeff(a) + c); }

  const std::map<ArrowId, Elem>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  std::vector<ArrowId> support() const {
    std::vector<ArrowId> s;
    s.reserve(coeffs_.size());
    for (const auto& [a, c] : coeffs_) s.push_back(a);
    return s;
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    check_compatible(o);
    for (const auto& [a, c] : o.coeffs_) add_coeff(a, c);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    check_compatible(o);
    for (const auto& [a, c] : o.coeffs_) add_coeff(a, -c);
    return *this;
  }
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }

  AlgebraElement& scale(const Elem& c) {
    if (field_.is_zero(c)) {
      coeffs_.clear();
      return *this;
    }
    for (auto& [a, x] : coeffs_) x = x * c;
    return *this;
  }

  /// Bilinear extension of the basis rule g * h = gh when composable, 0 otherwise.
  friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
    x.check_compatible(y);
    AlgebraElement out(*x.g_, x.field_);
    for (const auto& [a, ca] : x.coeffs_)
      for (const auto& [b, cb] : y.coeffs_)
        if (auto ab = x.g_->compose(a, b)) out.add_coeff(*ab, ca * cb);
    return out;
  }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::vector<Elem> to_dense() const {
    std::vector<Elem> v(g_->arrow_count(), field_.zero());
    for (const auto& [a, c] : coeffs_) v[a] = c;
    return v;
  }

  static AlgebraElement from_dense(const FiniteGroupoid& g, F field,
                                   const std::vector<Elem>& v) {
    if (v.size() != g.arrow_count()) throw std::invalid_argument("dense vector size mismatch");
    AlgebraElement x(g, field);
    for (std::size_t a = 0; a < v.size(); ++a)
      if (!field.is_zero(v[a])) x.coeffs_.emplace(ArrowId(a), v[a]);
    return x;
  }

  /// Text form: "coeff*name" terms joined by " + ", support ascending.
  std::string str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [a, c] : coeffs_) {
      if (!out.empty()) out += " + ";
      out += field_.to_string(c) + "*" + g_->arrow_label(a);
    }
    return out;
  }

 private:
  void check_compatible(const AlgebraElement& o) const {
    if (!(field_ == o.field_)) throw std::invalid_argument("mixed scalar fields");
    if (g_ != o.g_ && !(*g_ == *o.g_)) throw std::invalid_argument("mixed groupoid algebras");
  }

  const FiniteGroupoid* g_;
  F field_;
  std::map<ArrowId, Elem> coeffs_;
};

/// The algebra unit: the sum of all identity arrows.
template <class F>
AlgebraElement<F> alg_unit(const FiniteGroupoid& g, F field) {
  AlgebraElement<F> u(g, field);
  for (ObjectId x = 0; x < g.object_count(); ++x) u.set_coeff(g.identity(x), field.one());
  return u;
}

/// Left regular representation: M(g)[k][j] = 1 iff g * arrow_j = arrow_k.
/// Its linear extension is a unital algebra homomorphism of KG into
/// |G| x |G| matrices, injective on basis arrows.
template <class F>
std::vector<Matrix<F>> left_regular_rep(const FiniteGroupoid& g, F field) {
  const std::size_t n = g.arrow_count();
  std::vector<Matrix<F>> out;
  out.reserve(n);
  for (ArrowId a = 0; a < n; ++a) {
    Matrix<F> m(field, n, n);
    for (ArrowId j = 0; j < n; ++j)
      if (auto aj = g.compose(a, j)) m.at(*aj, j) = field.one();
    out.push_back(std::move(m));
  }
  return out;
}

template <class F>
std::size_t rank_of_span(F field, const std::vector<AlgebraElement<F>>& vectors) {
  if (vectors.empty()) return 0;
  RowSpace<F> space(field, vectors.front().groupoid().arrow_count());
  for (const auto& v : vectors) {
    if (v.groupoid().arrow_count() != space.dim())
      throw std::invalid_argument("span vectors over different groupoids");
    space.insert(v.to_dense());
  }
  return space.rank();
}

template <class F>
std::size_t rank_of_span(F field, const std::vector<Matrix<F>>& mats) {
  if (mats.empty()) return 0;
  const std::size_t r = mats.front().rows(), c = mats.front().cols();
  RowSpace<F> space(field, r * c);
  for (const auto& m : mats) {
    if (m.rows() != r || m.cols() != c)
      throw std::invalid_argument("span matrices of different shapes");
    space.insert(m.entries());
  }
  return space.rank();
}

/// Basis (canonical RREF form) of the smallest subalgebra containing the
/// generators, and the unit when requested. Iterates generator-by-basis
/// products breadth-first; the rank is bounded by |G|, so at most that many
/// rounds run.
template <class F>
std::vector<AlgebraElement<F>> subalgebra_closure(const FiniteGroupoid& g, F field,
                                                  const std::vector<AlgebraElement<F>>& generators,
                                                  bool include_unit) {
  const std::size_t n = g.arrow_count();
  RowSpace<F> space(field, n);
  if (include_unit) space.insert(alg_unit(g, field).to_dense());
  for (const auto& x : generators) space.insert(x.to_dense());

  for (std::size_t round = 0; round <= n; ++round) {
    std::vector<std::vector<typename F::Element>> basis_rows = space.rows();
    bool grew = false;
    for (const auto& gen : generators) {
      for (const auto& row : basis_rows) {
        AlgebraElement<F> b = AlgebraElement<F>::from_dense(g, field, row);
        grew |= space.insert((gen * b).to_dense());
      }
    }
    if (!grew) break;
  }

  std::vector<AlgebraElement<F>> basis;
  basis.reserve(space.rank());
  for (const auto& row : space.rows())
    basis.push_back(AlgebraElement<F>::from_dense(g, field, row));
  return basis;
}

/// c[i][j][k] with basis_i * basis_j = sum_k c[i][j][k] basis_k. The basis
/// must be linearly independent and closed under the product.
template <class F>
std::vector<std::vector<std::vector<typename F::Element>>> structure_constants(
    const FiniteGroupoid& g, F field, const std::vector<AlgebraElement<F>>& basis) {
  RowSpace<F> space(field, g.arrow_count(), /*track=*/true);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!space.insert(basis[i].to_dense()))
      throw std::invalid_argument("basis vector " + std::to_string(i) +
                                  " is linearly dependent on the previous ones");

  const std::size_t k = basis.size();
  std::vector table(k, std::vector(k, std::vector<typename F::Element>()));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      auto coords = space.express((basis[i] * basis[j]).to_dense());
      if (!coords)
        throw std::invalid_argument("basis not closed under product at (" + std::to_string(i) +
                                    "," + std::to_string(j) + ")");
      table[i][j] = std::move(*coords);
    }
  return table;
}

}  // namespace grpd

#endif
