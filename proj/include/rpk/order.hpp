#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rpk/bits.hpp"
#include "rpk/errors.hpp"

namespace rpk {

/// Finite partially ordered set. Elements are dense indices into the carrier;
/// labels are surface syntax only. The order is kept as one up-set bitmask per
/// element, so order queries and set arithmetic are single word operations.
class Poset {
 public:
  /// Builds a poset whose order is the reflexive-transitive closure of the
  /// given cover pairs. Throws DuplicateLabel/UnknownLabel/CapExceeded on bad
  /// input and CycleDetected if the closure violates antisymmetry.
  static Poset from_covers(
      const std::vector<std::string>& labels,
      const std::vector<std::pair<std::string, std::string>>& covers);

  /// Wraps an explicit order table (rows up[x] = {y : x <= y}); validates
  /// reflexivity, antisymmetry and transitivity.
  static Poset from_up_sets(std::vector<std::string> labels,
                            std::vector<Bits> up);

  int size() const { return static_cast<int>(up_.size()); }
  bool leq(int x, int y) const { return bits::test(up_[x], y); }
  bool lt(int x, int y) const { return x != y && leq(x, y); }

  /// {y : x <= y}
  Bits up_set(int x) const { return up_[x]; }
  /// {y : y <= x}
  Bits down_set(int x) const { return down_[x]; }
  Bits carrier() const { return bits::full(size()); }

  const std::string& label(int x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> index_of(const std::string& label) const;

  /// Cover pairs (x, y): x < y with nothing strictly between. Sorted.
  std::vector<std::pair<int, int>> cover_pairs() const;

  bool same_order_as(const Poset& other) const;

 private:
  Poset(std::vector<std::string> labels, std::vector<Bits> up);

  std::vector<std::string> labels_;
  std::vector<Bits> up_;
  std::vector<Bits> down_;
};

/// Bounded lattice: a poset in which every pair has a meet and a join.
/// Construction computes the tables and the bounds or reports the first
/// offending pair (joins scanned before meets, pairs in index order).
class Lattice {
 public:
  static Lattice of(Poset poset);

  const Poset& poset() const { return poset_; }
  int size() const { return poset_.size(); }
  bool leq(int x, int y) const { return poset_.leq(x, y); }

  int meet(int x, int y) const { return meet_[x * size() + y]; }
  int join(int x, int y) const { return join_[x * size() + y]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  const std::string& label(int x) const { return poset_.label(x); }

 private:
  Lattice(Poset poset, std::vector<int> meet, std::vector<int> join,
          int bottom, int top);

  Poset poset_;
  std::vector<int> meet_;
  std::vector<int> join_;
  int bottom_;
  int top_;
};

/// All upward-closed subsets of a poset, each exactly once, sorted by
/// ascending bitmask value. Closed under union and intersection; contains
/// the empty set and the whole carrier.
struct UpsetFamily {
  Poset base;
  std::vector<Bits> members;

  /// Index of an upset in members; throws NotAnUpset if absent.
  int index_of(Bits upset) const;
  int size() const { return static_cast<int>(members.size()); }
};

struct TripleWitness {
  int x, y, z;
};

Poset poset_from_covers(
    const std::vector<std::string>& labels,
    const std::vector<std::pair<std::string, std::string>>& covers);

Lattice lattice_of(Poset poset);

/// First (lexicographically least) triple violating distributivity, if any.
std::optional<TripleWitness> distributivity_counterexample(const Lattice& l);
bool is_distributive(const Lattice& l);

/// Join-irreducible elements: j != bottom with j = x v y implying j in {x,y}.
Bits join_irreducibles(const Lattice& l);

/// Smallest upward-closed superset of A.
Bits upward_closure(const Poset& p, Bits a);

/// Enumerates every upset by backtracking over a linear extension.
/// Throws CapExceeded when the carrier exceeds `cap`.
UpsetFamily all_upsets(const Poset& p, int cap = 20);

/// Size of the longest totally ordered subset.
int max_chain_length(const Poset& p);

/// True iff every connected component of the comparability graph is a
/// single point or a two-element chain.
bool is_disjoint_short_chains(const Poset& p);

}  // namespace rpk
