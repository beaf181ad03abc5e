#ifndef GRPD_TESTS_HELPERS_HPP
#define GRPD_TESTS_HELPERS_HPP

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "grpd/br.hpp"
#include "grpd/groupoid.hpp"
#include "grpd/matrix.hpp"
#include "grpd/partial_rep.hpp"
#include "grpd/scalar.hpp"

namespace grpd::testing {

inline std::vector<std::pair<std::string, FiniteGroupoid>> fixtures() {
  return {
      {"ex1", build_ex1()},
      {"z2", build_cyclic_group(2)},
      {"z3", build_cyclic_group(3)},
      {"pair2", build_pair_groupoid(2)},
      {"pair3", build_pair_groupoid(3)},
      {"z2-disjoint-z2", disjoint_union(build_cyclic_group(2), build_cyclic_group(2))},
  };
}

/// The canonical trivial representation: dim = |objects|, object x acting as
/// the diagonal unit at position x.
template <class F>
PartialRep<F> canonical_trivial_rep(const FiniteGroupoid& g, F field) {
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t x = 0; x < g.object_count(); ++x) blocks.push_back({x});
  return trivial_rep(g, field, g.object_count(), blocks);
}

/// Independent expansion oracle: tries every subset of *all* arrows for every
/// arrow, testing membership straight from the definition. Exponential in
/// |G|; fine for the fixtures.
inline std::vector<BRPair> brute_force_br(const FiniteGroupoid& g) {
  const std::size_t n = g.arrow_count();
  std::vector<BRPair> out;
  for (ArrowId a = 0; a < n; ++a) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
      BRPair p;
      p.arrow = a;
      bool has_dom = false, has_inv = false, inside_y = true;
      for (ArrowId x = 0; x < n; ++x) {
        if (!(mask >> x & 1)) continue;
        p.carrier.push_back(x);
        if (g.ran(x) != g.dom(a)) inside_y = false;
        if (x == g.identity(g.dom(a))) has_dom = true;
        if (x == g.inv(a)) has_inv = true;
      }
      if (has_dom && has_inv && inside_y) out.push_back(std::move(p));
    }
  }
  return out;
}

/// Exact determinant by cofactor expansion.
inline mpq_class naive_det(std::vector<std::vector<mpq_class>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  mpq_class det = 0;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::vector<mpq_class>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<mpq_class> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    det += sign * m[0][k] * naive_det(std::move(minor));
    sign = -sign;
  }
  return det;
}

/// Rank as the largest k admitting a nonzero k x k minor.
inline std::size_t naive_rank(const std::vector<std::vector<mpq_class>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  auto combos = [](std::size_t total, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      out.push_back(pick);
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == total - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
  };
  for (std::size_t k = std::min(r, c); k >= 1; --k) {
    for (const auto& ri : combos(r, k))
      for (const auto& ci : combos(c, k)) {
        std::vector<std::vector<mpq_class>> sub;
        for (std::size_t i : ri) {
          std::vector<mpq_class> row;
          for (std::size_t j : ci) row.push_back(rows[i][j]);
          sub.push_back(std::move(row));
        }
        if (sgn(naive_det(std::move(sub))) != 0) return k;
      }
  }
  return 0;
}

/// One random in-range single-entry mutation of the comp or inv table.
inline FiniteGroupoid mutate_table(const FiniteGroupoid& g, std::mt19937_64& rng) {
  const std::size_t n = g.arrow_count();
  auto other_arrow = [&](ArrowId old) {
    std::uniform_int_distribution<ArrowId> pick(0, ArrowId(n - 1));
    ArrowId v = pick(rng);
    while (v == old) v = pick(rng);
    return v;
  };
  std::vector<std::array<ArrowId, 3>> comp = g.comp_triples();
  std::vector<ArrowId> inv = g.inv_table();
  std::vector<ArrowId> identity = g.identity_table();
  if (rng() % 2 == 0 && !comp.empty()) {
    std::size_t i = rng() % comp.size();
    comp[i][2] = other_arrow(comp[i][2]);
  } else {
    std::size_t i = rng() % n;
    inv[i] = other_arrow(inv[i]);
  }
  return FiniteGroupoid(g.object_count(), g.dom_table(), g.ran_table(), std::move(inv),
                        std::move(identity), std::move(comp));
}

/// Candidate representation with one matrix entry bumped by one.
template <class F>
PartialRep<F> mutate_rep(const PartialRep<F>& rep, std::mt19937_64& rng) {
  PartialRep<F> out = rep;
  std::size_t a = rng() % out.images.size();
  std::size_t i = rng() % out.dim;
  std::size_t j = rng() % out.dim;
  out.images[a].at(i, j) += out.field.one();
  return out;
}

/// Independent yes/no oracle for the four partial-representation axioms,
/// with its own matrix arithmetic. Used to adjudicate mutants: a candidate
/// accepted by check_partial_rep must also satisfy this oracle.
template <class F>
bool oracle_is_partial_rep(const PartialRep<F>& rep) {
  const FiniteGroupoid& g = *rep.groupoid;
  const std::size_t d = rep.dim;
  using Elem = typename F::Element;
  using Flat = std::vector<Elem>;
  auto flat = [&](ArrowId a) { return rep.of(a).entries(); };
  auto mul = [&](const Flat& x, const Flat& y) {
    Flat out(d * d, rep.field.zero());
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        Elem acc = rep.field.zero();
        for (std::size_t k = 0; k < d; ++k) acc += x[i * d + k] * y[k * d + j];
        out[i * d + j] = acc;
      }
    return out;
  };
  auto is_zero = [&](const Flat& x) {
    for (const Elem& v : x)
      if (!rep.field.is_zero(v)) return false;
    return true;
  };

  for (ArrowId a = 0; a < g.arrow_count(); ++a) {
    for (ArrowId b = 0; b < g.arrow_count(); ++b) {
      auto ab = g.compose(a, b);
      if (!ab) continue;
      if (mul(mul(flat(a), flat(b)), flat(g.inv(b))) != mul(flat(*ab), flat(g.inv(b))))
        return false;
      if (mul(mul(flat(g.inv(a)), flat(a)), flat(b)) != mul(flat(g.inv(a)), flat(*ab)))
        return false;
    }
    if (mul(mul(flat(a), flat(g.inv(a))), flat(a)) != flat(a)) return false;
  }
  Flat sum(d * d, rep.field.zero());
  for (ObjectId x = 0; x < g.object_count(); ++x) {
    const Flat m = flat(g.identity(x));
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += m[i];
    for (ObjectId y = 0; y < g.object_count(); ++y)
      if (x != y && !is_zero(mul(flat(g.identity(x)), flat(g.identity(y))))) return false;
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (!(sum[i * d + j] == (i == j ? rep.field.one() : rep.field.zero()))) return false;
  return true;
}

/// Draws mutants until `quota` of them are invalid per the oracle, checking
/// agreement between check_partial_rep and the oracle on every draw.
/// Returns false on any disagreement (false accept or false reject).
template <class F>
bool mutation_sweep_agrees(const PartialRep<F>& rep, std::mt19937_64& rng, int quota,
                           int max_attempts = 400) {
  int rejected = 0;
  for (int attempt = 0; attempt < max_attempts && rejected < quota; ++attempt) {
    PartialRep<F> mutant = mutate_rep(rep, rng);
    bool accepted = check_partial_rep(mutant).ok();
    bool valid = oracle_is_partial_rep(mutant);
    if (accepted != valid) return false;
    if (!valid) ++rejected;
  }
  return rejected >= quota;
}

}  // namespace grpd::testing

#endif
