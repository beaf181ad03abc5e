#include "grpd/br.hpp"

#include <algorithm>

namespace grpd {

namespace {

bool contains(const std::vector<ArrowId>& sorted, ArrowId a) {
  return std::binary_search(sorted.begin(), sorted.end(), a);
}

// Image {compose(a, x) : x in carrier}; every x must be composable with a.
std::vector<ArrowId> image(const FiniteGroupoid& g, ArrowId a, const std::vector<ArrowId>& carrier) {
  std::vector<ArrowId> out;
  out.reserve(carrier.size());
  for (ArrowId x : carrier) {
    auto ax = g.compose(a, x);
    if (!ax) throw std::invalid_argument("carrier element not composable with arrow");
    out.push_back(*ax);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t sat_pow2(std::size_t k) {
  return k >= 64 ? UINT64_MAX : (std::uint64_t(1) << k);
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

}  // namespace

std::vector<ArrowId> y_set(const FiniteGroupoid& g, ArrowId a) {
  return g.arrows_with_ran(g.dom(a));
}

std::vector<ArrowId> x_set(const FiniteGroupoid& g, ArrowId a) {
  return g.arrows_with_ran(g.ran(a));
}

std::uint64_t br_count(const FiniteGroupoid& g) {
  std::uint64_t total = 0;
  for (ArrowId a = 0; a < g.arrow_count(); ++a) {
    std::size_t y = y_set(g, a).size();
    std::size_t forced = g.is_identity(a) ? 1 : 2;
    total = sat_add(total, sat_pow2(y - forced));
  }
  return total;
}

bool is_valid_br_pair(const FiniteGroupoid& g, const BRPair& p) {
  if (p.arrow >= g.arrow_count()) return false;
  if (!std::is_sorted(p.carrier.begin(), p.carrier.end())) return false;
  if (std::adjacent_find(p.carrier.begin(), p.carrier.end()) != p.carrier.end()) return false;
  ObjectId d = g.dom(p.arrow);
  for (ArrowId x : p.carrier)
    if (x >= g.arrow_count() || g.ran(x) != d) return false;
  return contains(p.carrier, g.identity(d)) && contains(p.carrier, g.inv(p.arrow));
}

std::vector<BRPair> enumerate_br(const FiniteGroupoid& g, std::uint64_t cap) {
  std::uint64_t predicted = br_count(g);
  if (predicted > cap) throw CapExceededError(predicted, cap);

  std::vector<BRPair> out;
  out.reserve(predicted);
  for (ArrowId a = 0; a < g.arrow_count(); ++a) {
    std::vector<ArrowId> forced = {g.identity(g.dom(a)), g.inv(a)};
    std::sort(forced.begin(), forced.end());
    forced.erase(std::unique(forced.begin(), forced.end()), forced.end());
    std::vector<ArrowId> optional;
    for (ArrowId x : y_set(g, a))
      if (!contains(forced, x)) optional.push_back(x);

    std::vector<BRPair> batch;
    batch.reserve(std::size_t(1) << optional.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << optional.size()); ++mask) {
      BRPair p;
      p.arrow = a;
      p.carrier = forced;
      for (std::size_t i = 0; i < optional.size(); ++i)
        if (mask >> i & 1) p.carrier.push_back(optional[i]);
      std::sort(p.carrier.begin(), p.carrier.end());
      batch.push_back(std::move(p));
    }
    std::sort(batch.begin(), batch.end(),
              [](const BRPair& x, const BRPair& y) { return x.carrier < y.carrier; });
    for (auto& p : batch) out.push_back(std::move(p));
  }
  return out;
}

std::optional<BRPair> br_compose(const FiniteGroupoid& g, const BRPair& p, const BRPair& q) {
  auto gh = g.compose(p.arrow, q.arrow);
  if (!gh) return std::nullopt;
  if (p.carrier != image(g, q.arrow, q.carrier)) return std::nullopt;
  return BRPair{q.carrier, *gh};
}

BRPair br_inverse(const FiniteGroupoid& g, const BRPair& p) {
  return BRPair{image(g, p.arrow, p.carrier), g.inv(p.arrow)};
}

BRGroupoid::BRGroupoid(FiniteGroupoid base, std::vector<BRPair> pairs)
    : base_(std::move(base)), pairs_(std::move(pairs)) {
  for (std::size_t i = 0; i < pairs_.size(); ++i) index_.emplace(pairs_[i], ArrowId(i));
}

std::optional<ArrowId> BRGroupoid::index_of(const BRPair& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

BRGroupoid build_br_groupoid(const FiniteGroupoid& g, std::uint64_t cap) {
  std::vector<BRPair> pairs = enumerate_br(g, cap);
  std::map<BRPair, ArrowId> index;
  for (std::size_t i = 0; i < pairs.size(); ++i) index.emplace(pairs[i], ArrowId(i));
  auto idx = [&](const BRPair& p) { return index.at(p); };

  // Objects of the expansion are the identity pairs (A, e), in pair order.
  std::vector<ArrowId> identity;
  std::vector<ObjectId> object_of_pair(pairs.size(), 0);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (g.is_identity(pairs[i].arrow)) {
      object_of_pair[i] = ObjectId(identity.size());
      identity.push_back(ArrowId(i));
    }
  }

  std::vector<ObjectId> dom, ran;
  std::vector<ArrowId> inv;
  std::vector<std::string> labels;
  for (const auto& p : pairs) {
    // d(A,g) = (A, d(g)); r(A,g) = (gA, r(g)).
    BRPair d{p.carrier, g.identity(g.dom(p.arrow))};
    BRPair r{image(g, p.arrow, p.carrier), g.identity(g.ran(p.arrow))};
    dom.push_back(object_of_pair[idx(d)]);
    ran.push_back(object_of_pair[idx(r)]);
    inv.push_back(idx(br_inverse(g, p)));
    std::string l = "({";
    for (std::size_t i = 0; i < p.carrier.size(); ++i)
      l += (i ? "," : "") + g.arrow_label(p.carrier[i]);
    l += "}," + g.arrow_label(p.arrow) + ")";
    labels.push_back(std::move(l));
  }

  // Every defined product (A,g)(B,h) arises from a pair (g, (B,h)) with
  // dom(g) = ran(h) and (gh)^-1 in B, as ((hB,g), (B,h)) -> (B, gh).
  std::vector<std::array<ArrowId, 3>> comp;
  for (std::size_t qi = 0; qi < pairs.size(); ++qi) {
    const BRPair& q = pairs[qi];
    std::vector<ArrowId> hB = image(g, q.arrow, q.carrier);
    for (ArrowId a : g.arrows_with_dom(g.ran(q.arrow))) {
      ArrowId ah = *g.compose(a, q.arrow);
      if (!contains(q.carrier, g.inv(ah))) continue;
      comp.push_back({idx(BRPair{hB, a}), ArrowId(qi), idx(BRPair{q.carrier, ah})});
    }
  }

  const std::size_t object_count = identity.size();
  FiniteGroupoid base(object_count, std::move(dom), std::move(ran), std::move(inv),
                      std::move(identity), std::move(comp), std::move(labels));
  return BRGroupoid(std::move(base), std::move(pairs));
}

}  // namespace grpd
