#ifndef GRPD_KPAR_HPP
#define GRPD_KPAR_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grpd/algebra.hpp"
#include "grpd/br.hpp"
#include "grpd/groupoid.hpp"
#include "grpd/partial_rep.hpp"

namespace grpd {

/// A monomial [g1][g2]...[gk] of the relation algebra; the empty word is the
/// formal unit.
using Word = std::vector<ArrowId>;

std::string word_label(const FiniteGroupoid& g, const Word& w);

/// lambda(g1) * ... * lambda(gk) in the expansion algebra; the image of the
/// monomial under the canonical map out of the relation presentation.
template <class F>
AlgebraElement<F> eval_word(const BRGroupoid& brg, F field,
                            const std::vector<AlgebraElement<F>>& lambdas, const Word& w) {
  AlgebraElement<F> out = alg_unit(brg.base(), field);
  for (ArrowId a : w) out = out * lambdas.at(a);
  return out;
}

template <class F>
AlgebraElement<F> eval_word(const FiniteGroupoid& g, const BRGroupoid& brg, F field,
                            const Word& w) {
  return eval_word(brg, field, lambda_rep(g, brg, field), w);
}

/// Checks the four defining relations of the presentation, plus the unit
/// identity sum_e [e] = 1, inside the expansion algebra under lambda. An
/// empty report certifies that [g] -> lambda(g) extends to a well-defined
/// algebra homomorphism.
template <class F>
ValidationReport check_defining_relations(const FiniteGroupoid& g, const BRGroupoid& brg, F field,
                                          const std::vector<AlgebraElement<F>>& lambdas) {
  ValidationReport report;
  auto name = [&](ArrowId a) { return g.arrow_label(a); };
  for (ArrowId a = 0; a < g.arrow_count(); ++a)
    for (ArrowId b = 0; b < g.arrow_count(); ++b) {
      auto ab = g.compose(a, b);
      if (ab) {
        const auto& la = lambdas[a];
        const auto& lb = lambdas[b];
        if (lambdas[g.inv(a)] * la * lb != lambdas[g.inv(a)] * lambdas[*ab])
          report.add("relation-i", {a, b},
                     "[" + name(a) + "^-1][" + name(a) + "][" + name(b) + "] != [" + name(a) +
                         "^-1][" + name(*ab) + "] under lambda");
        if (la * lb * lambdas[g.inv(b)] != lambdas[*ab] * lambdas[g.inv(b)])
          report.add("relation-ii", {a, b},
                     "[" + name(a) + "][" + name(b) + "][" + name(b) + "^-1] != [" + name(*ab) +
                         "][" + name(b) + "^-1] under lambda");
      } else if (!(lambdas[a] * lambdas[b]).is_zero()) {
        report.add("relation-iv", {a, b},
                   "[" + name(a) + "][" + name(b) + "] != 0 under lambda");
      }
    }
  for (ArrowId a = 0; a < g.arrow_count(); ++a) {
    if (lambdas[g.identity(g.ran(a))] * lambdas[a] != lambdas[a])
      report.add("relation-iii", {a}, "[r(g)][g] != [g] under lambda at g = " + name(a));
    if (lambdas[a] * lambdas[g.identity(g.dom(a))] != lambdas[a])
      report.add("relation-iii", {a}, "[g][d(g)] != [g] under lambda at g = " + name(a));
  }
  AlgebraElement<F> sum(brg.base(), field);
  for (ObjectId x = 0; x < g.object_count(); ++x) sum += lambdas[g.identity(x)];
  if (sum != alg_unit(brg.base(), field))
    report.add("unit-sum", {}, "sum of identity generators is not the unit under lambda");
  return report;
}

template <class F>
ValidationReport check_defining_relations(const FiniteGroupoid& g, const BRGroupoid& brg,
                                          F field) {
  return check_defining_relations(g, brg, field, lambda_rep(g, brg, field));
}

/// The telescoping word of a pair (B, h): order the carrier as
/// t1 = h^-1, then the rest ascending, and emit the letters
/// w_j = t_j^-1 t_{j+1} (1 <= j < k), w_k = t_k^-1. Every letter exists
/// because all carrier elements share the range d(h), and the suffix
/// products of the word run through t_j^-1, hitting h at the full word.
/// Evaluated under lambda the word gives sum over all carriers A containing
/// B of (A, h).
Word telescope_word(const FiniteGroupoid& g, const BRPair& p);

/// Inclusion-exclusion over carrier supersets: the signed combination of
/// telescoping words, one per subset T of Y_h \ B with sign (-1)^|T|,
/// whose evaluation is exactly the single basis vector (B, h).
std::vector<std::pair<int, Word>> extract_basis_element(const FiniteGroupoid& g, const BRPair& p);

/// Dimension of the subalgebra of the expansion algebra generated by
/// lambda(G) (unit not adjoined); equals |G^BR| by the lifting theorem.
template <class F>
std::size_t generation_rank(const FiniteGroupoid& g, const BRGroupoid& brg, F field) {
  return subalgebra_closure(brg.base(), field, lambda_rep(g, brg, field), false).size();
}

template <class F>
struct NormalFormWords {
  std::vector<Word> words;                  // canonical order, deduplicated by image
  std::vector<AlgebraElement<F>> images;    // aligned with words
  std::size_t rank = 0;                     // rank of the images
};

/// Words irreducible under the length-reducing rewrite rules: kill
/// non-composable adjacencies, absorb identities, contract
/// [g^-1][g][h] -> [g^-1][gh] and [g][h][h^-1] -> [gh][h^-1].
bool word_is_irreducible(const FiniteGroupoid& g, const Word& w);

/// All irreducible nonempty words of length <= max_len, enumerated
/// length-major then lexicographically, deduplicated by their evaluation.
template <class F>
NormalFormWords<F> normal_form_words(const FiniteGroupoid& g, const BRGroupoid& brg, F field,
                                     std::size_t max_len) {
  std::vector<AlgebraElement<F>> lambdas = lambda_rep(g, brg, field);
  NormalFormWords<F> out;
  RowSpace<F> space(field, brg.base().arrow_count());
  std::map<std::string, bool> seen;

  // Irreducibility only constrains adjacent letters, so prefixes of
  // irreducible words are irreducible and level-by-level extension is exact.
  std::vector<std::pair<Word, AlgebraElement<F>>> level;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::pair<Word, AlgebraElement<F>>> next;
    if (len == 1) {
      for (ArrowId a = 0; a < g.arrow_count(); ++a)
        next.emplace_back(Word{a}, lambdas[a]);
    } else {
      for (const auto& [w, img] : level)
        for (ArrowId a = 0; a < g.arrow_count(); ++a) {
          Word extended = w;
          extended.push_back(a);
          ArrowId prev = w.back();
          if (!g.composable(prev, a)) continue;
          if (g.is_identity(prev) || g.is_identity(a)) continue;
          if (w.size() >= 2 && g.inv(prev) == w[w.size() - 2]) continue;
          if (w.size() >= 2 && g.inv(prev) == a) continue;
          next.emplace_back(std::move(extended), img * lambdas[a]);
        }
    }
    for (auto& [w, img] : next) {
      std::string key;
      for (const auto& [a, c] : img.coeffs())
        key += std::to_string(a) + ":" + field.to_string(c) + ";";
      if (seen.emplace(std::move(key), true).second) {
        space.insert(img.to_dense());
        out.words.push_back(w);
        out.images.push_back(img);
      }
    }
    level = std::move(next);
  }
  out.rank = space.rank();
  return out;
}

/// The verification certificate combining the five machine checks: relations
/// hold under lambda, lambda generates, every basis pair is reconstructed by
/// inclusion-exclusion, normal-form word images reach full rank, and the
/// expansion size is additive over connected components.
struct IsoCertificate {
  std::string field;
  std::uint64_t br_count = 0;
  bool relations_ok = false;
  std::uint64_t generation_rank = 0;
  bool extraction_ok = false;
  std::uint64_t normal_form_rank = 0;
  std::uint64_t max_len_used = 0;
  bool component_sum_ok = false;
  std::vector<IsoCertificate> components;

  bool passed() const {
    bool ok = relations_ok && extraction_ok && component_sum_ok &&
              generation_rank == br_count && normal_form_rank == br_count;
    for (const auto& c : components) ok = ok && c.passed();
    return ok;
  }
};

template <class F>
IsoCertificate verify_iso(const FiniteGroupoid& g, F field, std::uint64_t cap = kDefaultBrCap,
                          std::optional<std::size_t> max_len = std::nullopt) {
  IsoCertificate cert;
  cert.field = field.name();
  BRGroupoid brg = build_br_groupoid(g, cap);
  cert.br_count = brg.size();

  std::vector<AlgebraElement<F>> lambdas = lambda_rep(g, brg, field);
  cert.relations_ok = check_defining_relations(g, brg, field, lambdas).ok();
  cert.generation_rank = generation_rank(g, brg, field);

  cert.extraction_ok = true;
  for (std::size_t i = 0; i < brg.size(); ++i) {
    AlgebraElement<F> sum(brg.base(), field);
    for (const auto& [sign, w] : extract_basis_element(g, brg.pair(ArrowId(i)))) {
      AlgebraElement<F> term = eval_word(brg, field, lambdas, w);
      sum += term.scale(field.from_int(sign));
    }
    if (sum != AlgebraElement<F>::basis(brg.base(), field, ArrowId(i))) {
      cert.extraction_ok = false;
      break;
    }
  }

  std::size_t bound = 1;
  for (ArrowId a = 0; a < g.arrow_count(); ++a)
    bound = std::max(bound, y_set(g, a).size() + 1);
  if (max_len) bound = *max_len;
  for (std::size_t len = 1; len <= bound; ++len) {
    cert.normal_form_rank = normal_form_words(g, brg, field, len).rank;
    cert.max_len_used = len;
    if (cert.normal_form_rank == cert.br_count) break;
  }

  std::vector<ComponentBlock> blocks = connected_components(g);
  std::uint64_t sum = 0;
  if (blocks.size() > 1) {
    for (const auto& block : blocks) {
      cert.components.push_back(verify_iso(subgroupoid(g, block), field, cap, max_len));
      sum += cert.components.back().br_count;
    }
  } else {
    sum = cert.br_count;
  }
  cert.component_sum_ok = (sum == cert.br_count);
  return cert;
}

/// A basis of the expansion algebra labeled by irreducible monomials:
/// the first independent normal-form word images in canonical order.
/// complete is false when the words within the bound do not span.
template <class F>
struct MonomialBasis {
  std::vector<Word> words;
  std::vector<AlgebraElement<F>> elements;
  bool complete = false;
};

template <class F>
MonomialBasis<F> monomial_basis(const FiniteGroupoid& g, const BRGroupoid& brg, F field,
                                std::optional<std::size_t> max_len = std::nullopt) {
  std::size_t bound = 1;
  for (ArrowId a = 0; a < g.arrow_count(); ++a)
    bound = std::max(bound, y_set(g, a).size() + 1);
  if (max_len) bound = *max_len;

  MonomialBasis<F> out;
  for (std::size_t len = 1; len <= bound; ++len) {
    NormalFormWords<F> nf = normal_form_words(g, brg, field, len);
    if (nf.rank < brg.size() && len < bound) continue;
    RowSpace<F> space(field, brg.base().arrow_count());
    for (std::size_t i = 0; i < nf.words.size(); ++i) {
      if (space.insert(nf.images[i].to_dense())) {
        out.words.push_back(nf.words[i]);
        out.elements.push_back(nf.images[i]);
      }
    }
    out.complete = (space.rank() == brg.size());
    break;
  }
  return out;
}

}  // namespace grpd

#endif
