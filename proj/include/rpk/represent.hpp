#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rpk/algebra.hpp"
#include "rpk/kvspace.hpp"
#include "rpk/roughset.hpp"

namespace rpk {

/// Prime filter of a finite distributive lattice, i.e. the principal filter
/// of a join-irreducible element (its generator).
struct PrimeFilter {
  Bits members = 0;
  int generator = -1;
};

/// Exactly the principal filters of the join-irreducibles, sorted by
/// (size, generator index) — a linear extension of inclusion.
/// Throws NotDistributive otherwise.
std::vector<PrimeFilter> prime_filters(const Lattice& l);

/// g(P) = {x : ~x not in P}; validates P and the primality of the result.
PrimeFilter g_of_prime_filter(const PKAlgebra& a, const PrimeFilter& p);

/// Prime-filter poset with g, no regularity gate: the raw material for
/// reports on algebras that may fail (J4).
KVSpace prime_filter_space(const PKAlgebra& a);

/// The prime-filter space (F_p, inclusion, g) of a regular algebra; the
/// result always passes validate_kv. Throws NotRegular when (M) fails.
KVSpace kv_space_of_algebra(const PKAlgebra& a);

struct CanonicalEmbedding {
  KVSpace space;
  UpsetAlgebra target;
  std::vector<int> map;  // source element -> target element
};

/// h(x) = {P : x in P}, an injective operation-preserving map into the
/// upset algebra of the prime-filter space.
CanonicalEmbedding canonical_embedding_h(const PKAlgebra& a);

/// True iff every chain of prime filters has at most two elements.
bool check_prime_chain_regularity(const Lattice& l);

struct StoneanEquivalence {
  bool algebra_stone = false;        // x* v x** = 1 in the algebra
  bool filters_disjoint_chains = false;
  bool upset_algebra_stone = false;

  bool all_equal() const {
    return algebra_stone == filters_disjoint_chains &&
           filters_disjoint_chains == upset_algebra_stone;
  }
};

/// The three Stonean conditions; raises TheoremViolation if they disagree.
StoneanEquivalence check_stonean_equivalence(const PKAlgebra& a);

/// Search outcome: a rough-set algebra built over `blocks` (covering blocks
/// or partition classes of a universe of numbered points) together with an
/// injective operation-preserving map into it.
struct RepresentationWitness {
  std::vector<std::string> universe;
  std::vector<Bits> blocks;
  std::vector<RoughPair> pairs;  // decoration of the target elements
  PKAlgebra algebra;
  std::vector<int> embedding;
};

/// Exhaustive witness search over irredundant coverings (canonical forms,
/// universes of size 1..max_universe). First witness in deterministic order.
RepresentationWitness verify_theorem_main(const PKAlgebra& a, int max_universe);

/// Same search over set partitions, targeting the Kleene algebra carried by
/// the equivalence rough-set double Stone algebra. Requires STONE.
RepresentationWitness verify_theorem_mainB(const PKAlgebra& a,
                                           int max_universe);

/// Injective homomorphism search by backtracking on join-irreducible images.
std::optional<std::vector<int>> find_embedding(const PKAlgebra& src,
                                               const PKAlgebra& dst);

}  // namespace rpk
