#include "rpk/order.hpp"

#include <algorithm>
#include <numeric>

namespace rpk {
namespace {

std::vector<Bits> down_from_up(const std::vector<Bits>& up) {
  const int n = static_cast<int>(up.size());
  std::vector<Bits> down(n, 0);
  for (int x = 0; x < n; ++x)
    bits::for_each(up[x], [&](int y) { down[y] |= bits::one(x); });
  return down;
}

/// Indices sorted so that x <= y implies x comes first.
std::vector<int> linear_extension(const Poset& p) {
  std::vector<int> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return bits::count(p.down_set(a)) < bits::count(p.down_set(b));
  });
  return order;
}

}  // namespace

Poset::Poset(std::vector<std::string> labels, std::vector<Bits> up)
    : labels_(std::move(labels)), up_(std::move(up)), down_(down_from_up(up_)) {}

Poset Poset::from_covers(
    const std::vector<std::string>& labels,
    const std::vector<std::pair<std::string, std::string>>& covers) {
  const int n = static_cast<int>(labels.size());
  if (n > kMaxCarrier)
    throw Error(Code::CapExceeded, "carrier exceeds " +
                                       std::to_string(kMaxCarrier) +
                                       " elements");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (labels[i] == labels[j])
        throw Error(Code::DuplicateLabel, "duplicate label '" + labels[i] + "'");

  auto index = [&](const std::string& s) -> int {
    for (int i = 0; i < n; ++i)
      if (labels[i] == s) return i;
    throw Error(Code::UnknownLabel, "unknown label '" + s + "'");
  };

  // Reflexive-transitive closure of the cover relation, one DFS-free
  // saturation pass per word row.
  std::vector<Bits> up(n, 0);
  for (int i = 0; i < n; ++i) up[i] = bits::one(i);
  for (const auto& [lo, hi] : covers) up[index(lo)] |= bits::one(index(hi));
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n; ++x) {
      Bits row = up[x];
      bits::for_each(up[x], [&](int y) { row |= up[y]; });
      if (row != up[x]) {
        up[x] = row;
        changed = true;
      }
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (bits::test(up[x], y) && bits::test(up[y], x))
        throw Error(Code::CycleDetected, "cycle through '" + labels[x] +
                                             "' and '" + labels[y] + "'");
  return Poset(labels, std::move(up));
}

Poset Poset::from_up_sets(std::vector<std::string> labels,
                          std::vector<Bits> up) {
  const int n = static_cast<int>(labels.size());
  if (n > kMaxCarrier) throw Error(Code::CapExceeded, "carrier too large");
  if (static_cast<int>(up.size()) != n)
    throw Error(Code::TableMismatch, "order table size mismatch");
  for (int x = 0; x < n; ++x) {
    if (!bits::test(up[x], x))
      throw Error(Code::TableMismatch, "order not reflexive at '" + labels[x] + "'");
    if ((up[x] & ~bits::full(n)) != 0)
      throw Error(Code::TableMismatch, "order row out of range");
    bits::for_each(up[x], [&](int y) {
      if (!bits::subset(up[y], up[x]))
        throw Error(Code::TableMismatch, "order not transitive");
    });
  }
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (bits::test(up[x], y) && bits::test(up[y], x))
        throw Error(Code::CycleDetected, "order not antisymmetric");
  return Poset(std::move(labels), std::move(up));
}

std::optional<int> Poset::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < size(); ++x)
    for (int y = 0; y < size(); ++y) {
      if (!lt(x, y)) continue;
      bool covered = true;
      bits::for_each(up_[x] & down_[y], [&](int z) {
        if (z != x && z != y) covered = false;
      });
      if (covered) out.emplace_back(x, y);
    }
  return out;
}

bool Poset::same_order_as(const Poset& other) const {
  return size() == other.size() && up_ == other.up_;
}

Poset poset_from_covers(
    const std::vector<std::string>& labels,
    const std::vector<std::pair<std::string, std::string>>& covers) {
  return Poset::from_covers(labels, covers);
}

Lattice::Lattice(Poset poset, std::vector<int> meet, std::vector<int> join,
                 int bottom, int top)
    : poset_(std::move(poset)),
      meet_(std::move(meet)),
      join_(std::move(join)),
      bottom_(bottom),
      top_(top) {}

Lattice Lattice::of(Poset poset) {
  const int n = poset.size();
  if (n == 0) throw Error(Code::NotALattice, "empty carrier has no bounds");
  std::vector<int> meet(n * n, -1), join(n * n, -1);

  auto unique_bound = [&](Bits candidates, bool greatest) -> int {
    int found = -1;
    bits::for_each(candidates, [&](int z) {
      Bits side = greatest ? poset.down_set(z) : poset.up_set(z);
      if (bits::subset(candidates, side)) found = z;
    });
    return found;
  };

  // Joins are scanned before meets so the reported pair is the first pair
  // in index order lacking a supremum, then the first lacking an infimum.
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) {
      int j = unique_bound(poset.up_set(x) & poset.up_set(y), false);
      if (j < 0)
        throw Error(Code::NotALattice, "no join for {" + poset.label(x) +
                                           ", " + poset.label(y) + "}");
      join[x * n + y] = join[y * n + x] = j;
    }
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) {
      int m = unique_bound(poset.down_set(x) & poset.down_set(y), true);
      if (m < 0)
        throw Error(Code::NotALattice, "no meet for {" + poset.label(x) +
                                           ", " + poset.label(y) + "}");
      meet[x * n + y] = meet[y * n + x] = m;
    }

  int bottom = 0, top = 0;
  for (int x = 0; x < n; ++x) {
    bottom = meet[bottom * n + x];
    top = join[top * n + x];
  }
  return Lattice(std::move(poset), std::move(meet), std::move(join), bottom,
                 top);
}

Lattice lattice_of(Poset poset) { return Lattice::of(std::move(poset)); }

std::optional<TripleWitness> distributivity_counterexample(const Lattice& l) {
  const int n = l.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)))
          return TripleWitness{x, y, z};
  return std::nullopt;
}

bool is_distributive(const Lattice& l) {
  return !distributivity_counterexample(l).has_value();
}

Bits join_irreducibles(const Lattice& l) {
  const int n = l.size();
  Bits out = 0;
  for (int j = 0; j < n; ++j) {
    if (j == l.bottom()) continue;
    bool irreducible = true;
    for (int x = 0; x < n && irreducible; ++x)
      for (int y = 0; y < n && irreducible; ++y)
        if (l.join(x, y) == j && x != j && y != j) irreducible = false;
    if (irreducible) out |= bits::one(j);
  }
  return out;
}

Bits upward_closure(const Poset& p, Bits a) {
  Bits out = 0;
  bits::for_each(a, [&](int x) { out |= p.up_set(x); });
  return out;
}

int UpsetFamily::index_of(Bits upset) const {
  auto it = std::lower_bound(members.begin(), members.end(), upset);
  if (it == members.end() || *it != upset)
    throw Error(Code::NotAnUpset, "set is not an upset of the base poset");
  return static_cast<int>(it - members.begin());
}

UpsetFamily all_upsets(const Poset& p, int cap) {
  if (p.size() > cap)
    throw Error(Code::CapExceeded, "upset enumeration capped at " +
                                       std::to_string(cap) + " elements");
  // Decide membership from the top of a linear extension down: an element
  // may enter only when everything strictly above it is already in.
  std::vector<int> order = linear_extension(p);
  std::reverse(order.begin(), order.end());
  std::vector<Bits> members;
  Bits current = 0;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == order.size()) {
      members.push_back(current);
      return;
    }
    int e = order[i];
    self(self, i + 1);
    if (bits::subset(p.up_set(e) & ~bits::one(e), current)) {
      current |= bits::one(e);
      self(self, i + 1);
      current &= ~bits::one(e);
    }
  };
  rec(rec, 0);
  std::sort(members.begin(), members.end());
  return UpsetFamily{p, std::move(members)};
}

int max_chain_length(const Poset& p) {
  const int n = p.size();
  if (n == 0) return 0;
  std::vector<int> height(n, 0);
  for (int x : linear_extension(p)) {
    height[x] = 1;
    bits::for_each(p.down_set(x) & ~bits::one(x), [&](int y) {
      height[x] = std::max(height[x], height[y] + 1);
    });
  }
  return *std::max_element(height.begin(), height.end());
}

bool is_disjoint_short_chains(const Poset& p) {
  for (int x = 0; x < p.size(); ++x) {
    Bits comparable = (p.up_set(x) | p.down_set(x)) & ~bits::one(x);
    if (bits::count(comparable) > 1) return false;
  }
  return true;
}

}  // namespace rpk
