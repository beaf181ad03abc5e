#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "grpd/kpar.hpp"
#include "grpd/partial_rep.hpp"
#include "grpd/scalar.hpp"
#include "helpers.hpp"

using namespace grpd;
using grpd::testing::canonical_trivial_rep;
using grpd::testing::fixtures;

namespace {
constexpr ArrowId E = 0, F = 1, G = 2, GI = 3, U = 4, H = 5;
using Q = RationalField;
using QRep = PartialRep<Q>;
using QMat = Matrix<Q>;

std::vector<ArrowId> ids(std::initializer_list<ArrowId> v) { return v; }
}  // namespace

TEST_CASE("trivial representations") {
  FiniteGroupoid g = build_ex1();
  Q q;
  QRep rep = trivial_rep(g, q, 3, {{0}, {1}, {2}});
  CHECK(check_partial_rep(rep).ok());

  QRep skew = trivial_rep(g, q, 3, {{0, 1}, {}, {2}});
  CHECK(check_partial_rep(skew).ok());
  CHECK(skew.of(F).is_zero());

  CHECK_THROWS_AS(trivial_rep(g, q, 3, {{0, 1}, {1}, {2}}), std::invalid_argument);
  CHECK_THROWS_AS(trivial_rep(g, q, 3, {{0}, {1}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(trivial_rep(g, q, 3, {{0}, {1}, {5}}), std::invalid_argument);
  CHECK_THROWS_AS(trivial_rep(g, q, 3, {{0}, {1}}), std::invalid_argument);
}

TEST_CASE("the regular-induced representation is a partial representation") {
  Q q;
  for (const auto& [name, g] : fixtures()) {
    CAPTURE(name);
    QRep rep = rep_from_regular(g, q);
    CHECK(rep.dim == br_count(g));
    CHECK(check_partial_rep(rep).ok());
  }

  SUBCASE("z2 frozen values") {
    FiniteGroupoid z2 = build_cyclic_group(2);
    QRep rep = rep_from_regular(z2, q);
    REQUIRE(rep.dim == 3);
    // pi(t) swaps the two pairs carrying the full carrier and kills ({1},1).
    QMat pt(q, 3, 3);
    pt.at(1, 2) = q.one();
    pt.at(2, 1) = q.one();
    CHECK(rep.of(1) == pt);
    QMat ptt = rep.of(1) * rep.of(1);
    QMat block(q, 3, 3);
    block.at(1, 1) = q.one();
    block.at(2, 2) = q.one();
    CHECK(ptt == block);
    CHECK(!(ptt == QMat::identity(q, 3)));
    // pi(1) = identity: the single identity must sum to 1.
    CHECK(rep.of(0) == QMat::identity(q, 3));
  }

  SUBCASE("trivial groupoid gives the 1x1 identity") {
    QRep rep = rep_from_regular(build_pair_groupoid(1), q);
    CHECK(rep.dim == 1);
    CHECK(rep.of(0) == QMat::identity(q, 1));
  }
}

TEST_CASE("check_partial_rep catches planted failures") {
  FiniteGroupoid g = build_ex1();
  Q q;
  QRep rep = trivial_rep(g, q, 3, {{0}, {1}, {2}});
  rep.images[G] = rep.images[E];  // pi(g) := pi(e)
  ValidationReport report = check_partial_rep(rep);
  CHECK(!report.ok());
  bool axiom = false;
  for (const auto& v : report.violations)
    axiom |= (v.rule.rfind("axiom-", 0) == 0);
  CHECK(axiom);

  SUBCASE("dimension mismatch throws") {
    QRep bad = trivial_rep(g, q, 3, {{0}, {1}, {2}});
    bad.images[0] = QMat(q, 2, 2);
    CHECK_THROWS_AS(check_partial_rep(bad), std::invalid_argument);
  }
}

TEST_CASE("epsilon idempotents") {
  FiniteGroupoid g = build_ex1();
  Q q;
  QRep triv = trivial_rep(g, q, 3, {{0}, {1}, {2}});
  CHECK(epsilon(triv, G).is_zero());
  CHECK(epsilon(triv, E) == triv.of(E));

  for (const auto& [name, fix] : fixtures()) {
    CAPTURE(name);
    for (const QRep& rep : {canonical_trivial_rep(fix, q), rep_from_regular(fix, q)}) {
      for (ArrowId a = 0; a < fix.arrow_count(); ++a) {
        QMat eps = epsilon(rep, a);
        CHECK(eps * eps == eps);
      }
    }
  }
}

TEST_CASE("P_S products") {
  FiniteGroupoid g = build_ex1();
  Q q;
  QRep triv = trivial_rep(g, q, 3, {{0}, {1}, {2}});

  CHECK(p_subset(triv, E, ids({E})) == triv.of(E));
  CHECK(p_subset(triv, E, ids({E, G})).is_zero());
  CHECK(p_subset(triv, E, ids({G})).is_zero());
  CHECK_THROWS_AS(p_subset(triv, E, ids({H})), std::invalid_argument);
  CHECK_THROWS_AS(p_subset(triv, G, ids({})), std::invalid_argument);

  SUBCASE("P_S vanishes whenever e is outside S, for any representation") {
    for (const auto& [name, fix] : fixtures()) {
      CAPTURE(name);
      for (const QRep& rep : {canonical_trivial_rep(fix, q), rep_from_regular(fix, q)}) {
        for (ObjectId x = 0; x < fix.object_count(); ++x) {
          ArrowId e = fix.identity(x);
          std::vector<ArrowId> xe = x_set(fix, e);
          for (std::uint64_t mask = 0; mask < (1ull << xe.size()); ++mask) {
            std::vector<ArrowId> s;
            for (std::size_t i = 0; i < xe.size(); ++i)
              if (mask >> i & 1) s.push_back(xe[i]);
            bool has_e = std::find(s.begin(), s.end(), e) != s.end();
            QMat ps = p_subset(rep, e, s);
            if (!has_e) CHECK(ps.is_zero());
            // P_S pi(l) = 0 for l in X_e outside S.
            for (ArrowId l : xe)
              if (std::find(s.begin(), s.end(), l) == s.end())
                CHECK((ps * rep.of(l)).is_zero());
          }
        }
      }
    }
  }
}

TEST_CASE("P_S family is orthogonal and partitions pi(e)") {
  Q q;
  for (const auto& [name, fix] : fixtures()) {
    CAPTURE(name);
    for (const QRep& rep : {canonical_trivial_rep(fix, q), rep_from_regular(fix, q)}) {
      for (ObjectId x = 0; x < fix.object_count(); ++x) {
        ArrowId e = fix.identity(x);
        CHECK(check_ps_partition(rep, e));

        std::vector<ArrowId> xe = x_set(fix, e);
        std::vector<QMat> ps;
        for (std::uint64_t mask = 0; mask < (1ull << xe.size()); ++mask) {
          std::vector<ArrowId> s;
          for (std::size_t i = 0; i < xe.size(); ++i)
            if (mask >> i & 1) s.push_back(xe[i]);
          ps.push_back(p_subset(rep, e, s));
        }
        for (std::size_t i = 0; i < ps.size(); ++i)
          for (std::size_t j = 0; j < ps.size(); ++j)
            if (i != j) CHECK((ps[i] * ps[j]).is_zero());
      }
    }
  }
}

TEST_CASE("partition check on a broken candidate reports without asserting") {
  FiniteGroupoid g = build_ex1();
  Q q;
  QRep broken = trivial_rep(g, q, 3, {{0}, {1}, {2}});
  broken.images[E].at(0, 1) = q.one();  // no longer a partial representation
  CHECK(!check_partial_rep(broken).ok());
  CHECK_NOTHROW(check_ps_partition(broken, E));  // negative control, result unasserted
}

TEST_CASE("translation covariance pi(l) P_S = P_{lS} pi(l)") {
  Q q;
  for (const auto& [name, fix] : fixtures()) {
    CAPTURE(name);
    QRep rep = rep_from_regular(fix, q);
    for (ArrowId l = 0; l < fix.arrow_count(); ++l) {
      std::vector<ArrowId> xe = x_set(fix, fix.identity(fix.dom(l)));
      for (std::uint64_t mask = 0; mask < (1ull << xe.size()); ++mask) {
        std::vector<ArrowId> s;
        for (std::size_t i = 0; i < xe.size(); ++i)
          if (mask >> i & 1) s.push_back(xe[i]);
        CHECK(check_translation_covariance(rep, l, s));
      }
    }
  }
}

TEST_CASE("lambda on ex1") {
  FiniteGroupoid g = build_ex1();
  Q q;
  BRGroupoid brg = build_br_groupoid(g);
  std::vector<AlgebraElement<Q>> lam = lambda_rep(g, brg, q);

  CHECK(lam[G].support() == std::vector<ArrowId>{*brg.index_of(BRPair{{F, GI}, G})});
  CHECK(lam[E].support() ==
        std::vector<ArrowId>{*brg.index_of(BRPair{{E}, E}), *brg.index_of(BRPair{{E, G}, E})});
  AlgebraElement<Q> prod = lam[G] * lam[GI];
  CHECK(prod.support() == std::vector<ArrowId>{*brg.index_of(BRPair{{E, G}, E})});
  CHECK(prod.coeff(*brg.index_of(BRPair{{E, G}, E})) == q.one());
}

TEST_CASE("pi_tilde on the trivial representation of ex1") {
  FiniteGroupoid g = build_ex1();
  Q q;
  BRGroupoid brg = build_br_groupoid(g);
  QRep triv = trivial_rep(g, q, 3, {{0}, {1}, {2}});
  BRAlgebraHom<Q> hom = pi_tilde(triv, brg);

  CHECK(hom.of(*brg.index_of(BRPair{{E}, E})) == triv.of(E));
  CHECK(hom.of(*brg.index_of(BRPair{{E, G}, E})).is_zero());
  std::vector<AlgebraElement<Q>> lam = lambda_rep(g, brg, q);
  CHECK(hom.apply(lam[E]) == triv.of(E));
}

TEST_CASE("pi_tilde is multiplicative, unital and factors pi through lambda") {
  Q q;
  for (const auto& [name, fix] : fixtures()) {
    CAPTURE(name);
    BRGroupoid brg = build_br_groupoid(fix);
    for (const QRep& rep : {canonical_trivial_rep(fix, q), rep_from_regular(fix, q)}) {
      BRAlgebraHom<Q> hom = pi_tilde(rep, brg);
      CHECK(check_hom(hom).ok());
      CHECK(check_factorization(rep, brg));
    }
  }

  SUBCASE("z3 regular factorization, exercised separately") {
    FiniteGroupoid z3 = build_cyclic_group(3);
    CHECK(check_factorization(rep_from_regular(z3, q), build_br_groupoid(z3)));
  }

  SUBCASE("invalid candidates are refused") {
    FiniteGroupoid g = build_ex1();
    BRGroupoid brg = build_br_groupoid(g);
    QRep bad = trivial_rep(g, q, 3, {{0}, {1}, {2}});
    bad.images[G] = bad.images[E];
    CHECK_THROWS_AS(pi_tilde(bad, brg), std::invalid_argument);
  }
}

TEST_CASE("pi_tilde is the unique homomorphism factoring pi") {
  // Any homomorphism agreeing with pi on lambda agrees with pi_tilde on every
  // basis pair, because inclusion-exclusion expresses each pair through
  // lambda-words. Evaluating those words directly in the target algebra
  // rebuilds pi_tilde from pi alone.
  Q q;
  for (const std::string pick : {"ex1", "z2", "pair2"}) {
    for (const auto& [name, fix] : fixtures()) {
      if (name != pick) continue;
      CAPTURE(name);
      BRGroupoid brg = build_br_groupoid(fix);
      QRep rep = rep_from_regular(fix, q);
      BRAlgebraHom<Q> hom = pi_tilde(rep, brg);
      for (ArrowId p = 0; p < brg.base().arrow_count(); ++p) {
        Matrix<Q> rebuilt(q, rep.dim, rep.dim);
        for (const auto& [sign, word] : extract_basis_element(fix, brg.pair(p))) {
          Matrix<Q> term = Matrix<Q>::identity(q, rep.dim);
          for (ArrowId letter : word) term = term * rep.of(letter);
          rebuilt.axpy(q.from_int(sign), term);
        }
        CHECK(rebuilt == hom.of(p));
      }
    }
  }
}

TEST_CASE("epsilon relation suite is clean on valid representations") {
  Q q;
  FiniteGroupoid g = build_ex1();
  CHECK(check_epsilon_relations(rep_from_regular(g, q)).ok());
  CHECK(check_epsilon_relations(trivial_rep(g, q, 3, {{0}, {1}, {2}})).ok());
  CHECK(check_epsilon_relations(rep_from_regular(build_pair_groupoid(2), q)).ok());
}

TEST_CASE("mutated representation candidates: checker agrees with the axiom oracle") {
  // A single-entry bump usually breaks the axioms but can occasionally land
  // on another honest partial representation (for z2 the full swap matrix is
  // one). The checker must agree with the independent oracle either way.
  Q q;
  std::mt19937_64 rng(424242);
  for (const auto& [name, fix] : fixtures()) {
    CAPTURE(name);
    QRep rep = rep_from_regular(fix, q);
    CHECK(grpd::testing::mutation_sweep_agrees(rep, rng, 5));
  }
}
