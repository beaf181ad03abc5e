#ifndef GRPD_PARTIAL_REP_HPP
#define GRPD_PARTIAL_REP_HPP

#include <optional>
#include <string>
#include <vector>

#include "grpd/algebra.hpp"
#include "grpd/br.hpp"
#include "grpd/groupoid.hpp"
#include "grpd/matrix.hpp"

namespace grpd {

/// A candidate partial representation: one square exact matrix per arrow.
/// Validity is a checked property (check_partial_rep), not a type guarantee;
/// invalid candidates are useful as negative controls.
template <class F>
struct PartialRep {
  const FiniteGroupoid* groupoid = nullptr;
  F field;
  std::size_t dim = 0;
  std::vector<Matrix<F>> images;  // indexed by arrow

  const Matrix<F>& of(ArrowId a) const { return images.at(a); }
};

template <class F>
PartialRep<F> make_partial_rep(const FiniteGroupoid& g, F field, std::size_t dim,
                               std::vector<Matrix<F>> images) {
  if (images.size() != g.arrow_count())
    throw std::invalid_argument("expected one image per arrow");
  for (const auto& m : images)
    if (m.rows() != dim || m.cols() != dim)
      throw std::invalid_argument("representation matrices must all be dim x dim");
  return PartialRep<F>{&g, field, dim, std::move(images)};
}

/// eps(g) = pi(g) pi(g^-1); an idempotent for every valid representation.
template <class F>
Matrix<F> epsilon(const PartialRep<F>& rep, ArrowId a) {
  return rep.of(a) * rep.of(rep.groupoid->inv(a));
}

template <class F>
std::vector<Matrix<F>> epsilon_family(const PartialRep<F>& rep) {
  std::vector<Matrix<F>> eps;
  eps.reserve(rep.groupoid->arrow_count());
  for (ArrowId a = 0; a < rep.groupoid->arrow_count(); ++a) eps.push_back(epsilon(rep, a));
  return eps;
}

/// Checks Def-style axioms. The report is empty exactly when
///   (i)  pi(g) pi(h) pi(h^-1) = pi(gh) pi(h^-1)  for composable (g,h),
///   (ii) pi(g^-1) pi(g) pi(h) = pi(g^-1) pi(gh)  for composable (g,h),
///   (iii) pi(g) pi(g^-1) pi(g) = pi(g),
///   (iv) sum_e pi(e) = 1 and pi(e) pi(f) = 0 for distinct identities.
/// Derived consequences (absorption by id(dom)/id(ran), vanishing on
/// non-composable pairs) are reported under "remark-*" rules; they can only
/// fail when one of the axioms already fails.
template <class F>
ValidationReport check_partial_rep(const PartialRep<F>& rep) {
  const FiniteGroupoid& g = *rep.groupoid;
  ValidationReport report;
  for (const auto& m : rep.images)
    if (m.rows() != rep.dim || m.cols() != rep.dim)
      throw std::invalid_argument("representation matrices must all be dim x dim");

  auto name = [&](ArrowId a) { return g.arrow_label(a); };

  for (ArrowId a = 0; a < g.arrow_count(); ++a) {
    for (ArrowId b = 0; b < g.arrow_count(); ++b) {
      auto ab = g.compose(a, b);
      if (ab) {
        const Matrix<F>& bi = rep.of(g.inv(b));
        if (rep.of(a) * rep.of(b) * bi != rep.of(*ab) * bi)
          report.add("axiom-i", {a, b},
                     "pi(" + name(a) + ")pi(" + name(b) + ")pi(" + name(b) +
                         "^-1) != pi(" + name(*ab) + ")pi(" + name(b) + "^-1)");
        const Matrix<F>& ai = rep.of(g.inv(a));
        if (ai * rep.of(a) * rep.of(b) != ai * rep.of(*ab))
          report.add("axiom-ii", {a, b},
                     "pi(" + name(a) + "^-1)pi(" + name(a) + ")pi(" + name(b) +
                         ") != pi(" + name(a) + "^-1)pi(" + name(*ab) + ")");
      } else if (!(rep.of(a) * rep.of(b)).is_zero()) {
        report.add("remark-zero", {a, b},
                   "pi(" + name(a) + ")pi(" + name(b) + ") != 0 on a non-composable pair");
      }
    }
  }

  for (ArrowId a = 0; a < g.arrow_count(); ++a) {
    if (rep.of(a) * rep.of(g.inv(a)) * rep.of(a) != rep.of(a))
      report.add("axiom-iii", {a}, "pi(g)pi(g^-1)pi(g) != pi(g) at g = " + name(a));
    if (rep.of(a) * rep.of(g.identity(g.dom(a))) != rep.of(a))
      report.add("remark-absorb", {a}, "pi(g)pi(d(g)) != pi(g) at g = " + name(a));
    if (rep.of(g.identity(g.ran(a))) * rep.of(a) != rep.of(a))
      report.add("remark-absorb", {a}, "pi(r(g))pi(g) != pi(g) at g = " + name(a));
  }

  Matrix<F> sum(rep.field, rep.dim, rep.dim);
  for (ObjectId x = 0; x < g.object_count(); ++x) sum += rep.of(g.identity(x));
  if (sum != Matrix<F>::identity(rep.field, rep.dim))
    report.add("axiom-iv-unit", {}, "sum of identity images is not the identity matrix");
  for (ObjectId x = 0; x < g.object_count(); ++x)
    for (ObjectId y = 0; y < g.object_count(); ++y) {
      if (x == y) continue;
      if (!(rep.of(g.identity(x)) * rep.of(g.identity(y))).is_zero())
        report.add("axiom-iv-orthogonal", {g.identity(x), g.identity(y)},
                   "pi(" + g.object_label(x) + ")pi(" + g.object_label(y) + ") != 0");
    }

  return report;
}

/// A valid representation with every non-identity image zero: identities map
/// to the orthogonal diagonal idempotents cutting the identity matrix along
/// the given partition (object -> set of 0-based diagonal positions). Blocks
/// may be empty but must be disjoint and cover 0..dim-1 jointly.
template <class F>
PartialRep<F> trivial_rep(const FiniteGroupoid& g, F field, std::size_t dim,
                          const std::vector<std::vector<std::size_t>>& blocks) {
  if (blocks.size() != g.object_count())
    throw std::invalid_argument("expected one block per object");
  std::vector<bool> seen(dim, false);
  for (const auto& block : blocks)
    for (std::size_t i : block) {
      if (i >= dim) throw std::invalid_argument("partition index out of range");
      if (seen[i]) throw std::invalid_argument("partition blocks overlap");
      seen[i] = true;
    }
  for (std::size_t i = 0; i < dim; ++i)
    if (!seen[i]) throw std::invalid_argument("partition does not cover every index");

  std::vector<Matrix<F>> images(g.arrow_count(), Matrix<F>(field, dim, dim));
  for (ObjectId x = 0; x < g.object_count(); ++x) {
    Matrix<F>& m = images[g.identity(x)];
    for (std::size_t i : blocks[x]) m.at(i, i) = field.one();
  }
  return PartialRep<F>{&g, field, dim, std::move(images)};
}

/// lambda(g) = sum of the expansion pairs (A, g) with g^-1 in A: the
/// canonical partial representation of G inside the expansion algebra.
template <class F>
std::vector<AlgebraElement<F>> lambda_rep(const FiniteGroupoid& g, const BRGroupoid& brg,
                                          F field) {
  std::vector<AlgebraElement<F>> out(g.arrow_count(), AlgebraElement<F>(brg.base(), field));
  for (std::size_t i = 0; i < brg.size(); ++i) {
    const BRPair& p = brg.pair(ArrowId(i));
    if (std::binary_search(p.carrier.begin(), p.carrier.end(), g.inv(p.arrow)))
      out[p.arrow].set_coeff(ArrowId(i), field.one());
  }
  return out;
}

/// pi(g) = (left regular representation of the expansion algebra) applied to
/// lambda(g); a valid partial representation of dimension |G^BR|.
template <class F>
PartialRep<F> rep_from_regular(const FiniteGroupoid& g, F field,
                               std::uint64_t cap = kDefaultBrCap) {
  BRGroupoid brg = build_br_groupoid(g, cap);
  std::vector<Matrix<F>> reg = left_regular_rep(brg.base(), field);
  std::vector<AlgebraElement<F>> lam = lambda_rep(g, brg, field);
  const std::size_t dim = brg.size();
  std::vector<Matrix<F>> images;
  images.reserve(g.arrow_count());
  for (ArrowId a = 0; a < g.arrow_count(); ++a) {
    Matrix<F> m(field, dim, dim);
    for (const auto& [p, c] : lam[a].coeffs()) m.axpy(c, reg[p]);
    images.push_back(std::move(m));
  }
  return PartialRep<F>{&g, field, dim, std::move(images)};
}

/// P_S for S inside X_e: the product of eps(h) over S and (pi(e) - eps(h))
/// over the complement, each group in ascending arrow order. The factors
/// commute (they share the range e), so the order is only for determinism.
template <class F>
Matrix<F> p_subset(const PartialRep<F>& rep, ArrowId e, const std::vector<ArrowId>& s) {
  const FiniteGroupoid& g = *rep.groupoid;
  if (!g.is_identity(e)) throw std::invalid_argument("P_S needs an identity arrow");
  std::vector<ArrowId> xe = x_set(g, e);
  for (ArrowId a : s)
    if (!std::binary_search(xe.begin(), xe.end(), a))
      throw std::invalid_argument("subset not contained in X_e");
  std::vector<ArrowId> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  Matrix<F> out = Matrix<F>::identity(rep.field, rep.dim);
  for (ArrowId a : sorted) out = out * epsilon(rep, a);
  for (ArrowId a : xe)
    if (!std::binary_search(sorted.begin(), sorted.end(), a))
      out = out * (rep.of(e) - epsilon(rep, a));
  return out;
}

/// The partition identity pi(e) = sum over S of P_S, checked exactly.
template <class F>
bool check_ps_partition(const PartialRep<F>& rep, ArrowId e) {
  const FiniteGroupoid& g = *rep.groupoid;
  if (!g.is_identity(e)) throw std::invalid_argument("partition check needs an identity arrow");
  std::vector<ArrowId> xe = x_set(g, e);
  if (xe.size() > 20) throw std::invalid_argument("X_e too large to enumerate subsets");
  Matrix<F> sum(rep.field, rep.dim, rep.dim);
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << xe.size()); ++mask) {
    std::vector<ArrowId> s;
    for (std::size_t i = 0; i < xe.size(); ++i)
      if (mask >> i & 1) s.push_back(xe[i]);
    sum += p_subset(rep, e, s);
  }
  return sum == rep.of(e);
}

/// The lift of a partial representation to the expansion algebra:
/// pi~(A,g) = pi(g) * prod_{h in A} eps(h) * prod_{h in Y_g \ A} (pi(d(g)) - eps(h)).
template <class F>
struct BRAlgebraHom {
  const BRGroupoid* source = nullptr;
  F field;
  std::size_t dim = 0;
  std::vector<Matrix<F>> images;  // indexed by expansion arrow

  const Matrix<F>& of(ArrowId p) const { return images.at(p); }

  /// Linear extension to the whole expansion algebra.
  Matrix<F> apply(const AlgebraElement<F>& x) const {
    Matrix<F> out(field, dim, dim);
    for (const auto& [a, c] : x.coeffs()) out.axpy(c, images.at(a));
    return out;
  }
};

template <class F>
BRAlgebraHom<F> pi_tilde(const PartialRep<F>& rep, const BRGroupoid& brg) {
  if (!check_partial_rep(rep).ok())
    throw std::invalid_argument("pi_tilde requires a valid partial representation");
  const FiniteGroupoid& g = *rep.groupoid;
  std::vector<Matrix<F>> eps = epsilon_family(rep);

  BRAlgebraHom<F> hom{&brg, rep.field, rep.dim, {}};
  hom.images.reserve(brg.size());
  for (std::size_t i = 0; i < brg.size(); ++i) {
    const BRPair& p = brg.pair(ArrowId(i));
    Matrix<F> m = rep.of(p.arrow);
    for (ArrowId h : p.carrier) m = m * eps[h];
    const Matrix<F>& d = rep.of(g.identity(g.dom(p.arrow)));
    for (ArrowId h : y_set(g, p.arrow))
      if (!std::binary_search(p.carrier.begin(), p.carrier.end(), h)) m = m * (d - eps[h]);
    hom.images.push_back(std::move(m));
  }
  return hom;
}

/// Multiplicativity and unitality sweep over all expansion pairs:
/// pi~(p) pi~(q) = pi~(pq), zero when pq is undefined, and the identity pairs
/// sum to the identity matrix.
template <class F>
ValidationReport check_hom(const BRAlgebraHom<F>& hom) {
  const BRGroupoid& brg = *hom.source;
  const FiniteGroupoid& base = brg.base();
  ValidationReport report;
  for (ArrowId p = 0; p < base.arrow_count(); ++p)
    for (ArrowId q = 0; q < base.arrow_count(); ++q) {
      Matrix<F> prod = hom.of(p) * hom.of(q);
      auto pq = base.compose(p, q);
      if (pq) {
        if (prod != hom.of(*pq))
          report.add("hom-mult", {p, q},
                     "pi~ not multiplicative at " + base.arrow_label(p) + " * " +
                         base.arrow_label(q));
      } else if (!prod.is_zero()) {
        report.add("hom-mult", {p, q},
                   "pi~ nonzero on undefined product " + base.arrow_label(p) + " * " +
                       base.arrow_label(q));
      }
    }
  Matrix<F> sum(hom.field, hom.dim, hom.dim);
  for (ObjectId x = 0; x < base.object_count(); ++x) sum += hom.of(base.identity(x));
  if (sum != Matrix<F>::identity(hom.field, hom.dim))
    report.add("hom-unit", {}, "identity pairs do not sum to the identity matrix");
  return report;
}

/// pi~(lambda(g)) = pi(g) for every arrow.
template <class F>
bool check_factorization(const PartialRep<F>& rep, const BRGroupoid& brg) {
  BRAlgebraHom<F> hom = pi_tilde(rep, brg);
  std::vector<AlgebraElement<F>> lam = lambda_rep(*rep.groupoid, brg, rep.field);
  for (ArrowId a = 0; a < rep.groupoid->arrow_count(); ++a)
    if (hom.apply(lam[a]) != rep.of(a)) return false;
  return true;
}

/// The eps calculus used in the lifting proof, checked exactly:
/// commutation of eps over a common range, vanishing otherwise, and the
/// conjugation rules moving pi(g) past eps(h).
template <class F>
ValidationReport check_epsilon_relations(const PartialRep<F>& rep) {
  const FiniteGroupoid& g = *rep.groupoid;
  ValidationReport report;
  std::vector<Matrix<F>> eps = epsilon_family(rep);
  auto name = [&](ArrowId a) { return g.arrow_label(a); };

  for (ArrowId a = 0; a < g.arrow_count(); ++a)
    for (ArrowId b = 0; b < g.arrow_count(); ++b) {
      if (g.ran(a) == g.ran(b)) {
        if (eps[a] * eps[b] != eps[b] * eps[a])
          report.add("eps-commute", {a, b},
                     "eps(" + name(a) + ") and eps(" + name(b) + ") do not commute");
        // pi(b^-1) eps(a) = eps(b^-1 a) pi(b^-1)
        ArrowId bi = g.inv(b);
        ArrowId ba = *g.compose(bi, a);
        if (rep.of(bi) * eps[a] != eps[ba] * rep.of(bi))
          report.add("eps-conjugate", {a, b},
                     "pi(" + name(bi) + ")eps(" + name(a) + ") != eps(" + name(ba) + ")pi(" +
                         name(bi) + ")");
        // eps(b) pi(a) = pi(a) eps(a^-1 b)
        ArrowId ab = *g.compose(g.inv(a), b);
        if (eps[b] * rep.of(a) != rep.of(a) * eps[ab])
          report.add("eps-conjugate", {a, b},
                     "eps(" + name(b) + ")pi(" + name(a) + ") != pi(" + name(a) + ")eps(" +
                         name(ab) + ")");
      } else {
        if (!(eps[a] * eps[b]).is_zero())
          report.add("eps-orthogonal", {a, b},
                     "eps(" + name(a) + ")eps(" + name(b) + ") != 0 across distinct ranges");
        if (!(eps[b] * rep.of(a)).is_zero())
          report.add("eps-orthogonal", {a, b},
                     "eps(" + name(b) + ")pi(" + name(a) + ") != 0 across distinct ranges");
      }
      if (g.dom(a) == g.ran(b)) {
        // pi(a) eps(b) = eps(ab) pi(a)
        ArrowId ab = *g.compose(a, b);
        if (rep.of(a) * eps[b] != eps[ab] * rep.of(a))
          report.add("eps-conjugate", {a, b},
                     "pi(" + name(a) + ")eps(" + name(b) + ") != eps(" + name(ab) + ")pi(" +
                         name(a) + ")");
      } else {
        if (!(rep.of(a) * eps[b]).is_zero())
          report.add("eps-orthogonal", {a, b},
                     "pi(" + name(a) + ")eps(" + name(b) + ") != 0 on a non-composable pair");
      }
    }
  return report;
}

/// Translation covariance pi(l) P_S = P_{lS} pi(l) for d(l) = e, S in X_e.
template <class F>
bool check_translation_covariance(const PartialRep<F>& rep, ArrowId l,
                                  const std::vector<ArrowId>& s) {
  const FiniteGroupoid& g = *rep.groupoid;
  ArrowId e = g.identity(g.dom(l));
  std::vector<ArrowId> ls;
  ls.reserve(s.size());
  for (ArrowId a : s) ls.push_back(*g.compose(l, a));
  std::sort(ls.begin(), ls.end());
  return rep.of(l) * p_subset(rep, e, s) == p_subset(rep, g.identity(g.ran(l)), ls) * rep.of(l);
}

}  // namespace grpd

#endif
