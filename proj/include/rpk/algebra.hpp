#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rpk/order.hpp"

namespace rpk {

/// Total unary operation on a carrier, stored as element -> element.
using UnaryTable = std::vector<int>;

enum class Axiom {
  Distributive,
  DM1,
  DM2,
  K,
  Eq5,
  Eq6,
  Eq7,
  M,
  D,
  Stone,
  DualStone,
  DerivedStarLaws,
  DerivedPlusLaws,
};

inline constexpr std::array<Axiom, 13> kAllAxioms = {
    Axiom::Distributive, Axiom::DM1,  Axiom::DM2,
    Axiom::K,            Axiom::Eq5,  Axiom::Eq6,
    Axiom::Eq7,          Axiom::M,    Axiom::D,
    Axiom::Stone,        Axiom::DualStone,
    Axiom::DerivedStarLaws, Axiom::DerivedPlusLaws};

std::string axiom_name(Axiom a);
std::optional<Axiom> axiom_from_name(const std::string& name);

enum class Verdict { Pass, Fail, NotApplicable };

struct AxiomResult {
  Verdict verdict = Verdict::NotApplicable;
  /// Lexicographically least violating assignment, present on Fail.
  std::vector<int> counterexample;
};

/// Exhaustive verdicts for every axiom evaluable with the supplied tables.
struct AxiomReport {
  std::array<AxiomResult, 13> results;

  const AxiomResult& operator[](Axiom a) const {
    return results[static_cast<int>(a)];
  }
  bool passes(Axiom a) const { return (*this)[a].verdict == Verdict::Pass; }
  bool fails(Axiom a) const { return (*this)[a].verdict == Verdict::Fail; }
};

/// Pseudocomplemented Kleene algebra. Construction (pk_algebra) derives the
/// star table from the lattice and the plus table from neg and star, and
/// rejects input violating distributivity or the De Morgan/Kleene axioms.
class PKAlgebra {
 public:
  const Lattice& lattice() const { return lattice_; }
  int size() const { return lattice_.size(); }
  int bottom() const { return lattice_.bottom(); }
  int top() const { return lattice_.top(); }
  int meet(int x, int y) const { return lattice_.meet(x, y); }
  int join(int x, int y) const { return lattice_.join(x, y); }
  int neg(int x) const { return neg_[x]; }
  int star(int x) const { return star_[x]; }
  int plus(int x) const { return plus_[x]; }
  const UnaryTable& neg_table() const { return neg_; }
  const UnaryTable& star_table() const { return star_; }
  const UnaryTable& plus_table() const { return plus_; }
  const std::string& label(int x) const { return lattice_.label(x); }

  friend PKAlgebra pk_algebra(Lattice lattice, UnaryTable neg);

 private:
  PKAlgebra(Lattice lattice, UnaryTable neg, UnaryTable star, UnaryTable plus);

  Lattice lattice_;
  UnaryTable neg_, star_, plus_;
};

class AxiomViolation : public Error {
 public:
  AxiomViolation(Axiom axiom, AxiomReport report);
  Axiom axiom() const { return axiom_; }
  const AxiomReport& report() const { return report_; }

 private:
  Axiom axiom_;
  AxiomReport report_;
};

/// x* = greatest z with x ^ z = 0; throws NotPseudocomplemented naming the
/// first element whose annihilator set has no greatest member.
UnaryTable pseudocomplement_table(const Lattice& l);

/// x+ = least z with x v z = 1; dual failure mode.
UnaryTable dual_pseudocomplement_table(const Lattice& l);

PKAlgebra pk_algebra(Lattice lattice, UnaryTable neg);

/// Verdicts over all variable assignments; tables may be null, in which case
/// the axioms needing them come back NotApplicable.
AxiomReport axiom_report(const Lattice& l, const UnaryTable* neg,
                         const UnaryTable* star, const UnaryTable* plus);
AxiomReport axiom_report(const PKAlgebra& a);

/// All unary tables satisfying DM1, DM2, the De Morgan join/meet equation and
/// K, in lexicographic table order. Requires a distributive pseudocomplemented
/// lattice.
std::vector<UnaryTable> enumerate_kleene_negations(const Lattice& l);

/// Kleene algebra of a regular double Stone algebra: ~x = (x ^ x+) v x*.
/// Requires DISTRIBUTIVE, STONE, DUAL_STONE and M to hold.
PKAlgebra rpk_from_rds(const Lattice& l, const UnaryTable& star,
                       const UnaryTable& plus);

struct DoubleStoneReduct {
  Lattice lattice;
  UnaryTable star;
  UnaryTable plus;
};

/// Double Stone reduct of a Stone-passing algebra; inverse of rpk_from_rds.
DoubleStoneReduct rds_from_rpk(const PKAlgebra& a);

struct HomomorphismCheck {
  bool preserves_operations = false;
  bool injective = false;
  /// Human-readable description of the first violated equation, if any.
  std::optional<std::string> witness;

  bool is_embedding() const { return preserves_operations && injective; }
};

/// Checks preservation of join, meet, neg, star, bottom and top on all inputs.
HomomorphismCheck check_homomorphism(const std::vector<int>& f,
                                     const PKAlgebra& src,
                                     const PKAlgebra& dst);

/// Least subset containing seed and the bounds, closed under the four
/// operations (plus comes for free from neg and star).
Bits subalgebra_generated(const PKAlgebra& a, Bits seed);

/// Operation-preserving bijection, searched by branching on the images of
/// join-irreducibles only. Deterministic first find.
std::optional<std::vector<int>> find_isomorphism(const PKAlgebra& a,
                                                 const PKAlgebra& b);

}  // namespace rpk
