#ifndef GRPD_BR_HPP
#define GRPD_BR_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "grpd/groupoid.hpp"

namespace grpd {

inline constexpr std::uint64_t kDefaultBrCap = 50'000;

/// An expansion element (A, g): a carrier set of arrows together with an
/// arrow, subject to id(dom(g)) in A, inv(g) in A, A subset of Y_g.
/// Carriers are kept sorted so pairs compare and hash deterministically.
struct BRPair {
  std::vector<ArrowId> carrier;  // sorted ascending
  ArrowId arrow = 0;

  friend auto operator<=>(const BRPair&, const BRPair&) = default;
};

/// Y_g: arrows whose range is dom(g). Ascending.
std::vector<ArrowId> y_set(const FiniteGroupoid& g, ArrowId a);

/// X_g: arrows whose range is ran(g). Ascending.
std::vector<ArrowId> x_set(const FiniteGroupoid& g, ArrowId a);

/// Closed-form expansion size: sum over identities e of 2^(|Y_e|-1) plus
/// sum over non-identities a of 2^(|Y_a|-2). Saturates at uint64 max.
std::uint64_t br_count(const FiniteGroupoid& g);

bool is_valid_br_pair(const FiniteGroupoid& g, const BRPair& p);

/// All valid pairs in canonical order: by arrow index, then carrier
/// lexicographically. Throws CapExceededError before enumerating if the
/// closed-form count exceeds the cap.
std::vector<BRPair> enumerate_br(const FiniteGroupoid& g, std::uint64_t cap = kDefaultBrCap);

/// (A,g) * (B,h) = (B, gh) when gh exists and A = hB; nullopt otherwise.
std::optional<BRPair> br_compose(const FiniteGroupoid& g, const BRPair& p, const BRPair& q);

/// (A,g)^-1 = (gA, g^-1).
BRPair br_inverse(const FiniteGroupoid& g, const BRPair& p);

/// The expansion realized as a FiniteGroupoid, with the pair labeling kept
/// both ways. Objects of the base are the identity pairs (A, e).
class BRGroupoid {
 public:
  BRGroupoid(FiniteGroupoid base, std::vector<BRPair> pairs);

  const FiniteGroupoid& base() const { return base_; }
  const std::vector<BRPair>& pairs() const { return pairs_; }
  const BRPair& pair(ArrowId a) const { return pairs_.at(a); }
  std::optional<ArrowId> index_of(const BRPair& p) const;
  std::size_t size() const { return pairs_.size(); }

 private:
  FiniteGroupoid base_;
  std::vector<BRPair> pairs_;
  std::map<BRPair, ArrowId> index_;
};

BRGroupoid build_br_groupoid(const FiniteGroupoid& g, std::uint64_t cap = kDefaultBrCap);

}  // namespace grpd

#endif
