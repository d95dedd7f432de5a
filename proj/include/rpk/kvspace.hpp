#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rpk/algebra.hpp"
#include "rpk/order.hpp"

namespace rpk {

/// Candidate Kleene-Varlet space: a poset with a self-map g. Whether g is a
/// polarity with comparable images and short chains is what validate_kv says.
struct KVSpace {
  Poset poset;
  UnaryTable g;

  int size() const { return poset.size(); }
};

struct ConditionResult {
  bool pass = true;
  std::vector<int> counterexample;  // least violating points, empty on pass
};

/// Per-condition verdicts: (J1) g antitone, (J2) g involutive, (J3) every
/// point comparable with its image, (J4) chains of length at most two, and
/// the derived fixed-point isolation consequence.
struct KVReport {
  ConditionResult j1, j2, j3, j4, fixedpoint_isolation;

  bool valid() const { return j1.pass && j2.pass && j3.pass && j4.pass; }
};

KVReport validate_kv(const Poset& poset, const UnaryTable& g);
KVReport validate_kv(const KVSpace& k);

struct KVLevels {
  Bits lower;  // {x : x <= g(x)}
  Bits upper;  // {x : x > g(x)}
};

/// The two-level split of a valid space; throws InvalidSpace otherwise.
KVLevels levels(const KVSpace& k);

/// ~A = {x : g(x) not in A}; input and output are upsets of k.poset.
Bits neg_on_upsets(const KVSpace& k, Bits a);

struct UpsetAlgebra {
  UpsetFamily family;
  PKAlgebra algebra;  // element i is family.members[i]
};

/// (U(X), union, intersection, ~, *, empty, X); validated regular
/// pseudocomplemented Kleene algebra of a valid space.
UpsetAlgebra upset_algebra(const KVSpace& k);

/// A* = (A u g[A])^c; requires a valid space that is a disjoint union of
/// chains of at most two points.
Bits stonean_star(const KVSpace& k, Bits a);

struct FramePointReport {
  int maximals_above = 0;
  int minimals_below = 0;
};

struct FrameReport {
  bool is_frame = false;
  std::vector<FramePointReport> points;
};

/// (F1)/(F2): every point below exactly one maximal and above exactly one
/// minimal point.
FrameReport is_double_stone_frame(const Poset& p);

/// All valid Kleene-Varlet spaces with at most max_points carrier points,
/// one per isomorphism class, in deterministic (size, canonical key) order.
/// max_points is capped at 8.
std::vector<KVSpace> enumerate_kv_spaces(int max_points);

/// Minimal lexicographic (order table, g table) over carrier permutations.
std::pair<std::vector<Bits>, UnaryTable> kv_canonical_key(const KVSpace& k);

bool kv_isomorphic(const KVSpace& a, const KVSpace& b);

}  // namespace rpk
