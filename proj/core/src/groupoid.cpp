#include "grpd/groupoid.hpp"

#include <algorithm>
#include <numeric>

namespace grpd {

namespace {

std::uint64_t pair_key(ArrowId g, ArrowId h) {
  return (std::uint64_t(g) << 32) | std::uint64_t(h);
}

}  // namespace

FiniteGroupoid::FiniteGroupoid(std::size_t object_count,
                               std::vector<ObjectId> dom, std::vector<ObjectId> ran,
                               std::vector<ArrowId> inv, std::vector<ArrowId> identity,
                               std::vector<std::array<ArrowId, 3>> comp,
                               std::vector<std::string> arrow_labels)
    : objects_(object_count),
      dom_(std::move(dom)),
      ran_(std::move(ran)),
      inv_(std::move(inv)),
      identity_(std::move(identity)),
      comp_(std::move(comp)),
      labels_(std::move(arrow_labels)) {
  if (dom_.size() != ran_.size() || dom_.size() != inv_.size())
    throw std::invalid_argument("dom/ran/inv tables must have equal length");
  if (identity_.size() != objects_)
    throw std::invalid_argument("identity table must have one entry per object");
  if (!labels_.empty() && labels_.size() != dom_.size())
    throw std::invalid_argument("label table must be empty or one entry per arrow");

  std::sort(comp_.begin(), comp_.end());
  const std::size_t n = dom_.size();
  for (const auto& t : comp_) {
    if (t[0] < n && t[1] < n)
      comp_map_.emplace(pair_key(t[0], t[1]), t[2]);
  }
  by_ran_.resize(objects_);
  by_dom_.resize(objects_);
  for (ArrowId a = 0; a < n; ++a) {
    if (ran_[a] < objects_) by_ran_[ran_[a]].push_back(a);
    if (dom_[a] < objects_) by_dom_[dom_[a]].push_back(a);
  }
}

bool FiniteGroupoid::is_identity(ArrowId g) const {
  ObjectId x = dom_.at(g);
  return x < objects_ && identity_[x] == g;
}

std::optional<ArrowId> FiniteGroupoid::compose(ArrowId g, ArrowId h) const {
  if (g >= arrow_count() || h >= arrow_count())
    throw std::out_of_range("compose: arrow index out of range");
  auto it = comp_map_.find(pair_key(g, h));
  if (it == comp_map_.end()) return std::nullopt;
  return it->second;
}

std::string FiniteGroupoid::arrow_label(ArrowId g) const {
  if (g < labels_.size() && !labels_[g].empty()) return labels_[g];
  return "#" + std::to_string(g);
}

std::string FiniteGroupoid::object_label(ObjectId x) const {
  if (x < identity_.size() && identity_[x] < arrow_count()) return arrow_label(identity_[x]);
  return "obj" + std::to_string(x);
}

bool FiniteGroupoid::operator==(const FiniteGroupoid& other) const {
  return objects_ == other.objects_ && dom_ == other.dom_ && ran_ == other.ran_ &&
         inv_ == other.inv_ && identity_ == other.identity_ && comp_ == other.comp_;
}

ValidationReport validate(const FiniteGroupoid& g) {
  ValidationReport report;
  const std::size_t n = g.arrow_count();
  const std::size_t m = g.object_count();

  auto name = [&](ArrowId a) { return g.arrow_label(a); };

  // Range pass. Arrows whose own dom/ran/inv entries are broken are
  // excluded from the law checks below.
  std::vector<bool> arrow_ok(n, true);
  for (ArrowId a = 0; a < n; ++a) {
    if (g.dom_table()[a] >= m) {
      report.add("index-range", {a}, "dom of arrow " + name(a) + " is not an object index");
      arrow_ok[a] = false;
    }
    if (g.ran_table()[a] >= m) {
      report.add("index-range", {a}, "ran of arrow " + name(a) + " is not an object index");
      arrow_ok[a] = false;
    }
    if (g.inv_table()[a] >= n) {
      report.add("index-range", {a}, "inv of arrow " + name(a) + " is not an arrow index");
      arrow_ok[a] = false;
    }
  }
  std::vector<bool> object_ok(m, true);
  for (ObjectId x = 0; x < m; ++x) {
    if (g.identity_table()[x] >= n) {
      report.add("index-range", {}, "identity of object " + std::to_string(x) +
                                        " is not an arrow index");
      object_ok[x] = false;
    }
  }
  for (std::size_t i = 0; i < g.comp_triples().size(); ++i) {
    const auto& t = g.comp_triples()[i];
    if (t[0] >= n || t[1] >= n || t[2] >= n)
      report.add("index-range", {}, "comp triple #" + std::to_string(i) +
                                        " contains an out-of-range arrow index");
    if (i > 0 && g.comp_triples()[i - 1][0] == t[0] && g.comp_triples()[i - 1][1] == t[1])
      report.add("index-range", {t[0], t[1]},
                 "comp lists the pair (" + name(t[0]) + ", " + name(t[1]) + ") twice");
  }
  auto pair_ok = [&](ArrowId a, ArrowId b) { return a < n && b < n && arrow_ok[a] && arrow_ok[b]; };

  // comp defined exactly on composable pairs, with matching endpoints.
  for (ArrowId a = 0; a < n; ++a) {
    if (!arrow_ok[a]) continue;
    for (ArrowId b = 0; b < n; ++b) {
      if (!arrow_ok[b]) continue;
      auto ab = g.compose(a, b);
      if (g.composable(a, b) && !ab)
        report.add("composability", {a, b},
                   "product " + name(a) + "*" + name(b) + " is composable but missing");
      if (!g.composable(a, b) && ab)
        report.add("composability", {a, b},
                   "product " + name(a) + "*" + name(b) + " defined on a non-composable pair");
      if (ab && *ab < n && arrow_ok[*ab]) {
        if (g.dom(*ab) != g.dom(b) || g.ran(*ab) != g.ran(a))
          report.add("product-endpoints", {a, b, *ab},
                     "product " + name(a) + "*" + name(b) + " = " + name(*ab) +
                         " has wrong endpoints");
      }
    }
  }

  // Identities.
  for (ObjectId x = 0; x < m; ++x) {
    if (!object_ok[x]) continue;
    ArrowId e = g.identity_table()[x];
    if (!arrow_ok[e]) continue;
    if (g.dom(e) != x || g.ran(e) != x)
      report.add("identity-endpoints", {e},
                 "identity " + name(e) + " of object " + std::to_string(x) +
                     " does not start and end there");
  }
  for (ArrowId a = 0; a < n; ++a) {
    if (!arrow_ok[a]) continue;
    ObjectId dx = g.dom(a), rx = g.ran(a);
    if (object_ok[dx] && g.identity_table()[dx] < n) {
      auto p = g.compose(a, g.identity_table()[dx]);
      if (!p || *p != a)
        report.add("identity-law", {a}, name(a) + " * id(dom) is not " + name(a));
    }
    if (object_ok[rx] && g.identity_table()[rx] < n) {
      auto p = g.compose(g.identity_table()[rx], a);
      if (!p || *p != a)
        report.add("identity-law", {a}, "id(ran) * " + name(a) + " is not " + name(a));
    }
  }

  // Inverses.
  for (ArrowId a = 0; a < n; ++a) {
    if (!arrow_ok[a]) continue;
    ArrowId ai = g.inv_table()[a];
    if (!arrow_ok[ai]) continue;
    if (g.inv_table()[ai] != a)
      report.add("inverse-involution", {a, ai}, "inv(inv(" + name(a) + ")) is not " + name(a));
    ObjectId rx = g.ran(a), dx = g.dom(a);
    auto right = g.compose(a, ai);
    if (object_ok[rx] && (!right || *right != g.identity_table()[rx]))
      report.add("inverse-law", {a}, name(a) + " * inv(" + name(a) + ") is not id(ran)");
    auto left = g.compose(ai, a);
    if (object_ok[dx] && (!left || *left != g.identity_table()[dx]))
      report.add("inverse-law", {a}, "inv(" + name(a) + ") * " + name(a) + " is not id(dom)");
  }

  // Associativity over every composable chain.
  for (const auto& t : g.comp_triples()) {
    ArrowId a = t[0], b = t[1], ab = t[2];
    if (!pair_ok(a, b) || ab >= n || !arrow_ok[ab]) continue;
    for (ArrowId c = 0; c < n; ++c) {
      if (!arrow_ok[c] || !g.composable(b, c)) continue;
      auto bc = g.compose(b, c);
      auto left = g.compose(ab, c);
      auto right = bc ? g.compose(a, *bc) : std::nullopt;
      if (!bc || !left || !right || *left != *right)
        report.add("associativity", {a, b, c},
                   "(" + name(a) + "*" + name(b) + ")*" + name(c) + " != " + name(a) + "*(" +
                       name(b) + "*" + name(c) + ")");
    }
  }

  return report;
}

std::vector<ComponentBlock> connected_components(const FiniteGroupoid& g) {
  const std::size_t m = g.object_count();
  std::vector<ObjectId> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](ObjectId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (ArrowId a = 0; a < g.arrow_count(); ++a) {
    ObjectId x = find(g.dom(a)), y = find(g.ran(a));
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
  std::vector<ComponentBlock> blocks;
  std::vector<std::size_t> block_of(m, SIZE_MAX);
  for (ObjectId x = 0; x < m; ++x) {
    ObjectId root = find(x);
    if (block_of[root] == SIZE_MAX) {
      block_of[root] = blocks.size();
      blocks.emplace_back();
    }
    blocks[block_of[root]].objects.push_back(x);
  }
  for (ArrowId a = 0; a < g.arrow_count(); ++a)
    blocks[block_of[find(g.dom(a))]].arrows.push_back(a);
  return blocks;
}

FiniteGroupoid subgroupoid(const FiniteGroupoid& g, const ComponentBlock& block) {
  std::vector<ObjectId> new_object(g.object_count(), 0);
  for (std::size_t i = 0; i < block.objects.size(); ++i) new_object[block.objects[i]] = ObjectId(i);
  std::vector<ArrowId> new_arrow(g.arrow_count(), 0);
  for (std::size_t i = 0; i < block.arrows.size(); ++i) new_arrow[block.arrows[i]] = ArrowId(i);

  std::vector<ObjectId> dom, ran;
  std::vector<ArrowId> inv;
  std::vector<std::string> labels;
  for (ArrowId a : block.arrows) {
    dom.push_back(new_object[g.dom(a)]);
    ran.push_back(new_object[g.ran(a)]);
    inv.push_back(new_arrow[g.inv(a)]);
    labels.push_back(g.arrow_label(a));
  }
  std::vector<ArrowId> identity;
  for (ObjectId x : block.objects) identity.push_back(new_arrow[g.identity(x)]);
  std::vector<std::array<ArrowId, 3>> comp;
  for (ArrowId a : block.arrows)
    for (ArrowId b : block.arrows)
      if (auto ab = g.compose(a, b)) comp.push_back({new_arrow[a], new_arrow[b], new_arrow[*ab]});
  return FiniteGroupoid(block.objects.size(), std::move(dom), std::move(ran), std::move(inv),
                        std::move(identity), std::move(comp), std::move(labels));
}

FiniteGroupoid build_from_group_table(const std::vector<std::vector<std::size_t>>& table,
                                      std::vector<std::string> labels) {
  const std::size_t n = table.size();
  if (n == 0) throw std::invalid_argument("group table is empty");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n)
      throw std::invalid_argument("group table is not square at row " + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j)
      if (table[i][j] >= n)
        throw std::invalid_argument("group table entry (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") is out of range");
  }
  std::size_t e = n;
  for (std::size_t c = 0; c < n && e == n; ++c) {
    bool ident = true;
    for (std::size_t j = 0; j < n; ++j)
      if (table[c][j] != j || table[j][c] != j) { ident = false; break; }
    if (ident) e = c;
  }
  if (e == n) throw std::invalid_argument("group table has no identity element");
  std::vector<ArrowId> inv(n, ArrowId(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if (table[i][j] == e && table[j][i] == e) { inv[i] = ArrowId(j); break; }
    if (inv[i] == ArrowId(n))
      throw std::invalid_argument("group table row " + std::to_string(i) + " has no inverse");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]])
          throw std::invalid_argument("group table is not associative at (" + std::to_string(i) +
                                      "," + std::to_string(j) + "," + std::to_string(k) + ")");

  std::vector<std::array<ArrowId, 3>> comp;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      comp.push_back({ArrowId(i), ArrowId(j), ArrowId(table[i][j])});
  return FiniteGroupoid(1, std::vector<ObjectId>(n, 0), std::vector<ObjectId>(n, 0),
                        std::move(inv), {ArrowId(e)}, std::move(comp), std::move(labels));
}

FiniteGroupoid build_pair_groupoid(std::size_t n) {
  if (n == 0) throw std::invalid_argument("pair groupoid needs at least one object");
  // Arrow (x, y) goes y -> x; p(x,y) * p(y,z) = p(x,z).
  auto id_of = [n](std::size_t x, std::size_t y) { return ArrowId(x * n + y); };
  std::vector<ObjectId> dom, ran;
  std::vector<ArrowId> inv, identity;
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      ran.push_back(ObjectId(x));
      dom.push_back(ObjectId(y));
      inv.push_back(id_of(y, x));
      labels.push_back("p" + std::to_string(x) + "_" + std::to_string(y));
    }
  for (std::size_t x = 0; x < n; ++x) identity.push_back(id_of(x, x));
  std::vector<std::array<ArrowId, 3>> comp;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        comp.push_back({id_of(x, y), id_of(y, z), id_of(x, z)});
  return FiniteGroupoid(n, std::move(dom), std::move(ran), std::move(inv), std::move(identity),
                        std::move(comp), std::move(labels));
}

FiniteGroupoid build_cyclic_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group order must be positive");
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0) labels.push_back("1");
    else if (n == 2) labels.push_back("t");
    else if (i == 1) labels.push_back("a");
    else labels.push_back("a^" + std::to_string(i));
  }
  return build_from_group_table(table, std::move(labels));
}

FiniteGroupoid build_ex1() {
  // Objects 0 = e, 1 = f, 2 = u. Arrows: e, f, g: f->e, g^-1: e->f, u, h: u->u.
  std::vector<ObjectId> dom = {0, 1, 1, 0, 2, 2};
  std::vector<ObjectId> ran = {0, 1, 0, 1, 2, 2};
  std::vector<ArrowId> inv = {0, 1, 3, 2, 4, 5};
  std::vector<ArrowId> identity = {0, 1, 4};
  std::vector<std::array<ArrowId, 3>> comp = {
      {0, 0, 0}, {0, 2, 2}, {1, 1, 1}, {1, 3, 3}, {2, 1, 2}, {2, 3, 0},
      {3, 0, 3}, {3, 2, 1}, {4, 4, 4}, {4, 5, 5}, {5, 4, 5}, {5, 5, 4}};
  return FiniteGroupoid(3, std::move(dom), std::move(ran), std::move(inv), std::move(identity),
                        std::move(comp), {"e", "f", "g", "g^-1", "u", "h"});
}

FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  const ObjectId om = ObjectId(a.object_count());
  const ArrowId am = ArrowId(a.arrow_count());
  std::vector<ObjectId> dom(a.dom_table()), ran(a.ran_table());
  std::vector<ArrowId> inv(a.inv_table()), identity(a.identity_table());
  std::vector<std::array<ArrowId, 3>> comp(a.comp_triples());
  std::vector<std::string> labels;
  for (ArrowId x = 0; x < am; ++x) labels.push_back(a.arrow_label(x) + ".0");
  for (ArrowId x = 0; x < b.arrow_count(); ++x) {
    dom.push_back(b.dom(x) + om);
    ran.push_back(b.ran(x) + om);
    inv.push_back(b.inv(x) + am);
    labels.push_back(b.arrow_label(x) + ".1");
  }
  for (ObjectId x = 0; x < b.object_count(); ++x) identity.push_back(b.identity(x) + am);
  for (const auto& t : b.comp_triples()) comp.push_back({t[0] + am, t[1] + am, t[2] + am});
  return FiniteGroupoid(a.object_count() + b.object_count(), std::move(dom), std::move(ran),
                        std::move(inv), std::move(identity), std::move(comp), std::move(labels));
}

}  // namespace grpd
