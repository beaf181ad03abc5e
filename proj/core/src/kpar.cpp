#include "grpd/kpar.hpp"

#include <bit>

namespace grpd {

std::string word_label(const FiniteGroupoid& g, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (ArrowId a : w) out += "[" + g.arrow_label(a) + "]";
  return out;
}

Word telescope_word(const FiniteGroupoid& g, const BRPair& p) {
  if (!is_valid_br_pair(g, p)) throw std::invalid_argument("telescope_word: invalid pair");
  ArrowId hi = g.inv(p.arrow);
  std::vector<ArrowId> ts = {hi};
  for (ArrowId x : p.carrier)
    if (x != hi) ts.push_back(x);
  Word w;
  w.reserve(ts.size());
  for (std::size_t j = 0; j + 1 < ts.size(); ++j) w.push_back(*g.compose(g.inv(ts[j]), ts[j + 1]));
  w.push_back(g.inv(ts.back()));
  return w;
}

std::vector<std::pair<int, Word>> extract_basis_element(const FiniteGroupoid& g, const BRPair& p) {
  if (!is_valid_br_pair(g, p)) throw std::invalid_argument("extract_basis_element: invalid pair");
  std::vector<ArrowId> rest;
  for (ArrowId x : y_set(g, p.arrow))
    if (!std::binary_search(p.carrier.begin(), p.carrier.end(), x)) rest.push_back(x);
  if (rest.size() > 20) throw std::invalid_argument("Y_g \\ B too large to enumerate subsets");

  std::vector<std::pair<int, Word>> out;
  out.reserve(std::size_t(1) << rest.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << rest.size()); ++mask) {
    BRPair super{p.carrier, p.arrow};
    for (std::size_t i = 0; i < rest.size(); ++i)
      if (mask >> i & 1) super.carrier.push_back(rest[i]);
    std::sort(super.carrier.begin(), super.carrier.end());
    int sign = (std::popcount(mask) % 2 == 0) ? 1 : -1;
    out.emplace_back(sign, telescope_word(g, super));
  }
  return out;
}

bool word_is_irreducible(const FiniteGroupoid& g, const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (!g.composable(w[i], w[i + 1])) return false;          // rule (iv): word is 0
    if (g.is_identity(w[i]) || g.is_identity(w[i + 1])) return false;  // rule (iii)
  }
  for (std::size_t i = 0; i + 2 < w.size(); ++i) {
    if (g.inv(w[i + 1]) == w[i] && g.composable(w[i + 1], w[i + 2])) return false;  // rule (i)
    if (g.inv(w[i + 1]) == w[i + 2] && g.composable(w[i], w[i + 1])) return false;  // rule (ii)
  }
  return true;
}

}  // namespace grpd
