#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rpk/algebra.hpp"
#include "rpk/order.hpp"

namespace rpk {

/// Binary relation over a finite universe; row x holds R(x).
class FiniteRelation {
 public:
  static FiniteRelation create(std::vector<std::string> universe,
                               std::vector<Bits> rows);

  int size() const { return static_cast<int>(rows_.size()); }
  Bits row(int x) const { return rows_[x]; }
  bool related(int x, int y) const { return bits::test(rows_[x], y); }
  Bits universe_mask() const { return bits::full(size()); }
  const std::vector<std::string>& universe() const { return universe_; }
  const std::string& label(int x) const { return universe_[x]; }

 private:
  FiniteRelation(std::vector<std::string> universe, std::vector<Bits> rows);

  std::vector<std::string> universe_;
  std::vector<Bits> rows_;
};

/// Family of nonempty blocks whose union is the universe. Blocks are
/// canonicalized on input: sorted by mask, duplicates removed.
class Covering {
 public:
  static Covering create(std::vector<std::string> universe,
                         std::vector<Bits> blocks);

  int points() const { return static_cast<int>(universe_.size()); }
  const std::vector<Bits>& blocks() const { return blocks_; }
  const std::vector<std::string>& universe() const { return universe_; }
  Bits universe_mask() const { return bits::full(points()); }

 private:
  Covering(std::vector<std::string> universe, std::vector<Bits> blocks);

  std::vector<std::string> universe_;
  std::vector<Bits> blocks_;
};

enum class RelationKind { Equivalence, Quasiorder, Tolerance, Other };

struct RelationClass {
  bool reflexive = false;
  bool symmetric = false;
  bool transitive = false;

  bool is_equivalence() const { return reflexive && symmetric && transitive; }
  bool is_quasiorder() const { return reflexive && transitive; }
  bool is_tolerance() const { return reflexive && symmetric; }
  RelationKind kind() const;
};

/// One rough set: an approximation pair plus the least witness subset
/// (least in ascending-bitmask order) that produces it.
struct RoughPair {
  Bits lower = 0;
  Bits upper = 0;
  Bits witness = 0;
};

/// The ordered family of all approximation pairs of a relation.
struct RSSystem {
  FiniteRelation relation;
  std::vector<RoughPair> pairs;  // sorted by (lower, upper), deduplicated
  bool is_lattice = false;
  std::optional<std::pair<int, int>> non_lattice_pair;

  int size() const { return static_cast<int>(pairs.size()); }
  bool leq(int i, int j) const {
    return bits::subset(pairs[i].lower, pairs[j].lower) &&
           bits::subset(pairs[i].upper, pairs[j].upper);
  }
  /// Index of a pair; throws ClosureViolation when absent.
  int index_of(Bits lower, Bits upper, const char* op = "lookup") const;
  /// Componentwise inclusion order with elements labeled by witnesses.
  Poset order_poset() const;
  std::string pair_label(int i) const;
};

RelationClass classify_relation(const FiniteRelation& r);

/// {x : R(x) subset of X}
Bits lower_approx(const FiniteRelation& r, Bits x);
/// {x : R(x) meets X}
Bits upper_approx(const FiniteRelation& r, Bits x);

bool rough_equal(const FiniteRelation& r, Bits x, Bits y);

/// Enumerates all subsets (cap-guarded), deduplicates approximation pairs and
/// reports whether the componentwise order is a lattice.
RSSystem rs_system(const FiniteRelation& r, int cap = 20);

/// Union of the block squares; always reflexive and symmetric.
FiniteRelation induced_tolerance(const Covering& c);

/// First block whose removal keeps the family a covering, if any.
std::optional<int> removable_block(const Covering& c);
bool is_irredundant(const Covering& c);

struct RSEquivalenceAlgebra {
  RSSystem system;
  Lattice lattice;
  UnaryTable star;
  UnaryTable plus;
  UnaryTable neg;
};

struct RSQuasiorderAlgebra {
  RSSystem system;
  Lattice lattice;
  UnaryTable neg;
  std::vector<int> implication;  // row-major square table

  int imp(int i, int j) const { return implication[i * lattice.size() + j]; }
};

struct RSToleranceAlgebra {
  RSSystem system;
  PKAlgebra algebra;
};

/// Double Stone operations over the rough sets of an equivalence.
RSEquivalenceAlgebra rs_algebra_equivalence(const FiniteRelation& e);

/// Nelson-style operations over the rough sets of a quasiorder.
RSQuasiorderAlgebra rs_algebra_quasiorder(const FiniteRelation& q);

/// Pseudocomplemented Kleene algebra over the rough sets of the tolerance
/// induced by an irredundant covering.
RSToleranceAlgebra rs_algebra_tolerance(const Covering& c);

enum class FormulaKind { Componentwise, Tolerance };

struct FormulaCheck {
  bool pass = true;
  std::vector<int> witness_family;  // indices into the RS system
};

/// Checks that the formula-computed meets/joins equal the order-theoretic
/// bounds, over all pairs and (when the system is small enough) all families.
FormulaCheck verify_lattice_formulas(const RSSystem& s, FormulaKind kind,
                                     int family_cap = 10);

/// First tolerance (universe size ascending, then relation mask ascending)
/// whose rough-set order is not a lattice.
std::optional<FiniteRelation> find_non_lattice_tolerance(int max_universe);

/// All irredundant coverings of an n-point universe, one per point-permutation
/// class, in sorted canonical order.
std::vector<Covering> enumerate_irredundant_coverings(int n);

/// All partitions of {0..n-1} as block families, in restricted-growth order.
std::vector<std::vector<Bits>> enumerate_set_partitions(int n);

/// Equivalence relation whose classes are the given partition blocks.
FiniteRelation partition_relation(std::vector<std::string> universe,
                                  const std::vector<Bits>& blocks);

}  // namespace rpk
