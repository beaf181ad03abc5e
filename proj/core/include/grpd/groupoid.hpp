#ifndef GRPD_GROUPOID_HPP
#define GRPD_GROUPOID_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace grpd {

using ArrowId = std::uint32_t;
using ObjectId = std::uint32_t;

/// A single violated axiom instance, with the witnessing arrows.
struct Violation {
  std::string rule;             // stable identifier, e.g. "inverse-law"
  std::vector<ArrowId> arrows;  // witnesses, in the order the rule names them
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string rule, std::vector<ArrowId> arrows, std::string message) {
    violations.push_back({std::move(rule), std::move(arrows), std::move(message)});
  }
};

class CapExceededError : public std::runtime_error {
 public:
  CapExceededError(std::uint64_t predicted, std::uint64_t cap)
      : std::runtime_error("expansion size " + std::to_string(predicted) +
                           " exceeds cap " + std::to_string(cap)),
        predicted(predicted),
        cap(cap) {}
  std::uint64_t predicted;
  std::uint64_t cap;
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A finite groupoid as an explicit partial composition table.
///
/// Objects are identified with their identity arrows; arrow and object ids
/// are dense. comp(g,h) is defined exactly when dom(g) == ran(h), i.e. the
/// product "g after h". The constructor accepts arbitrary (even broken)
/// tables so that validate() can report axiom violations instead of the
/// constructor crashing; every operation other than validate() assumes a
/// valid groupoid.
class FiniteGroupoid {
 public:
  FiniteGroupoid(std::size_t object_count,
                 std::vector<ObjectId> dom, std::vector<ObjectId> ran,
                 std::vector<ArrowId> inv, std::vector<ArrowId> identity,
                 std::vector<std::array<ArrowId, 3>> comp,
                 std::vector<std::string> arrow_labels = {});

  std::size_t object_count() const { return objects_; }
  std::size_t arrow_count() const { return dom_.size(); }

  ObjectId dom(ArrowId g) const { return dom_.at(g); }
  ObjectId ran(ArrowId g) const { return ran_.at(g); }
  ArrowId inv(ArrowId g) const { return inv_.at(g); }
  ArrowId identity(ObjectId x) const { return identity_.at(x); }
  bool is_identity(ArrowId g) const;

  bool composable(ArrowId g, ArrowId h) const { return dom_.at(g) == ran_.at(h); }
  std::optional<ArrowId> compose(ArrowId g, ArrowId h) const;

  /// Arrows with range x (ascending). The "incoming star" of the object.
  const std::vector<ArrowId>& arrows_with_ran(ObjectId x) const { return by_ran_.at(x); }
  const std::vector<ArrowId>& arrows_with_dom(ObjectId x) const { return by_dom_.at(x); }

  /// Defined products as sorted [g, h, gh] triples.
  const std::vector<std::array<ArrowId, 3>>& comp_triples() const { return comp_; }

  const std::vector<ObjectId>& dom_table() const { return dom_; }
  const std::vector<ObjectId>& ran_table() const { return ran_; }
  const std::vector<ArrowId>& inv_table() const { return inv_; }
  const std::vector<ArrowId>& identity_table() const { return identity_; }

  bool has_labels() const { return !labels_.empty(); }
  std::string arrow_label(ArrowId g) const;
  std::string object_label(ObjectId x) const;

  /// Structural equality; labels are metadata and do not participate.
  bool operator==(const FiniteGroupoid& other) const;

 private:
  std::size_t objects_;
  std::vector<ObjectId> dom_, ran_;
  std::vector<ArrowId> inv_, identity_;
  std::vector<std::array<ArrowId, 3>> comp_;
  std::unordered_map<std::uint64_t, ArrowId> comp_map_;
  std::vector<std::vector<ArrowId>> by_ran_, by_dom_;
  std::vector<std::string> labels_;
};

/// Checks every groupoid axiom instance and reports all violations.
/// Out-of-range indices are reported under rule "index-range" and the
/// checks that would dereference them are skipped.
ValidationReport validate(const FiniteGroupoid& g);

struct ComponentBlock {
  std::vector<ObjectId> objects;  // ascending
  std::vector<ArrowId> arrows;    // ascending
};

/// Connected components: objects linked by any arrow share a block, arrows
/// belong to the block of their endpoints. Blocks ordered by least object.
std::vector<ComponentBlock> connected_components(const FiniteGroupoid& g);

/// The full sub-groupoid on one component, arrows and objects re-indexed
/// in ascending order of their original ids.
FiniteGroupoid subgroupoid(const FiniteGroupoid& g, const ComponentBlock& block);

/// One-object groupoid from a group multiplication table (table[i][j] = i*j).
/// Rejects tables that are not groups, naming a witness.
FiniteGroupoid build_from_group_table(const std::vector<std::vector<std::size_t>>& table,
                                      std::vector<std::string> labels = {});

/// Pair groupoid on n objects: one arrow y -> x for every ordered pair.
FiniteGroupoid build_pair_groupoid(std::size_t n);

/// Cyclic group Z/n as a one-object groupoid.
FiniteGroupoid build_cyclic_group(std::size_t n);

/// The two-component example groupoid: one component {e, f, g, g^-1} with
/// g: f -> e, one component {u, h} with h a self-inverse loop at u.
FiniteGroupoid build_ex1();

FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b);

}  // namespace grpd

#endif
