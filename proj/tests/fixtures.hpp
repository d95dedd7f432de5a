#pragma once

// Shared fixture catalog: the chains, the two reference lattices EX7 and
// G9, and the small relations and coverings the suite revolves around.

#include <string>
#include <utility>
#include <vector>

#include "rpk/algebra.hpp"
#include "rpk/kvspace.hpp"
#include "rpk/order.hpp"
#include "rpk/roughset.hpp"

namespace fixtures {

using rpk::Bits;

inline rpk::Poset chain_poset(const std::vector<std::string>& labels) {
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i + 1 < labels.size(); ++i)
    covers.emplace_back(labels[i], labels[i + 1]);
  return rpk::poset_from_covers(labels, covers);
}

inline rpk::Lattice c2() { return rpk::lattice_of(chain_poset({"0", "1"})); }
inline rpk::Lattice c3() {
  return rpk::lattice_of(chain_poset({"0", "d", "1"}));
}
inline rpk::Lattice c4() {
  return rpk::lattice_of(chain_poset({"0", "a", "b", "1"}));
}

/// 2x2 diamond 0 < a,b < 1.
inline rpk::Lattice b4() {
  return rpk::lattice_of(rpk::poset_from_covers(
      {"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}}));
}

/// Three incomparable atoms between the bounds; not distributive.
inline rpk::Lattice m3() {
  return rpk::lattice_of(rpk::poset_from_covers({"0", "p", "q", "r", "1"},
                                                {{"0", "p"},
                                                 {"0", "q"},
                                                 {"0", "r"},
                                                 {"p", "1"},
                                                 {"q", "1"},
                                                 {"r", "1"}}));
}

/// Pentagon 0 < a < c < 1, 0 < b < 1; not distributive, not modular.
inline rpk::Lattice n5() {
  return rpk::lattice_of(rpk::poset_from_covers(
      {"0", "a", "b", "c", "1"},
      {{"0", "a"}, {"a", "c"}, {"c", "1"}, {"0", "b"}, {"b", "1"}}));
}

/// EX7: 0 < a,b < d < f,g < 1. Pseudocomplemented and regular, admits two
/// Kleene negations, and fails the Stone identity at a.
inline rpk::Lattice ex7() {
  return rpk::lattice_of(rpk::poset_from_covers({"0", "a", "b", "d", "f", "g", "1"},
                                                {{"0", "a"},
                                                 {"0", "b"},
                                                 {"a", "d"},
                                                 {"b", "d"},
                                                 {"d", "f"},
                                                 {"d", "g"},
                                                 {"f", "1"},
                                                 {"g", "1"}}));
}

/// G9: the product of two 3-chains, a regular double Stone algebra.
inline rpk::Lattice g9() {
  return rpk::lattice_of(rpk::poset_from_covers({"0", "a", "b", "c", "d", "e", "f", "g", "1"},
                                                {{"0", "a"},
                                                 {"0", "b"},
                                                 {"a", "c"},
                                                 {"a", "d"},
                                                 {"b", "d"},
                                                 {"b", "e"},
                                                 {"c", "f"},
                                                 {"d", "f"},
                                                 {"d", "g"},
                                                 {"e", "g"},
                                                 {"f", "1"},
                                                 {"g", "1"}}));
}

inline rpk::UnaryTable table_from(const rpk::Lattice& l,
                                  const std::vector<std::pair<std::string, std::string>>& entries) {
  rpk::UnaryTable t(l.size(), -1);
  for (const auto& [from, to] : entries)
    t[*l.poset().index_of(from)] = *l.poset().index_of(to);
  return t;
}

inline rpk::PKAlgebra c2_pk() {
  return rpk::pk_algebra(c2(), table_from(c2(), {{"0", "1"}, {"1", "0"}}));
}

inline rpk::PKAlgebra c3_pk() {
  return rpk::pk_algebra(
      c3(), table_from(c3(), {{"0", "1"}, {"d", "d"}, {"1", "0"}}));
}

/// First of EX7's two negations: ~a = g, ~b = f, ~d = d.
inline rpk::PKAlgebra ex7_pk1() {
  return rpk::pk_algebra(ex7(), table_from(ex7(), {{"0", "1"},
                                                   {"a", "g"},
                                                   {"b", "f"},
                                                   {"d", "d"},
                                                   {"f", "b"},
                                                   {"g", "a"},
                                                   {"1", "0"}}));
}

/// Second of EX7's two negations: ~a = f, ~b = g.
inline rpk::PKAlgebra ex7_pk2() {
  return rpk::pk_algebra(ex7(), table_from(ex7(), {{"0", "1"},
                                                   {"a", "f"},
                                                   {"b", "g"},
                                                   {"d", "d"},
                                                   {"f", "a"},
                                                   {"g", "b"},
                                                   {"1", "0"}}));
}

/// The unique negation of the double Stone algebra G9.
inline rpk::PKAlgebra g9_pk() {
  return rpk::pk_algebra(g9(), table_from(g9(), {{"0", "1"},
                                                 {"a", "g"},
                                                 {"b", "f"},
                                                 {"c", "e"},
                                                 {"d", "d"},
                                                 {"e", "c"},
                                                 {"f", "b"},
                                                 {"g", "a"},
                                                 {"1", "0"}}));
}

/// The 4-chain is a Kleene algebra (ends and midpoints swapped) but is not
/// regular: a and b share both pseudocomplements.
inline rpk::PKAlgebra c4_pk() {
  return rpk::pk_algebra(
      c4(), table_from(c4(), {{"0", "1"}, {"a", "b"}, {"b", "a"}, {"1", "0"}}));
}

/// Boolean 2x2 with the complement negation.
inline rpk::PKAlgebra b4_pk() {
  return rpk::pk_algebra(
      b4(), table_from(b4(), {{"0", "1"}, {"a", "b"}, {"b", "a"}, {"1", "0"}}));
}

/// Universe {1,2,3,4} with classes {1,2} and {3,4}.
inline rpk::FiniteRelation eq22() {
  return rpk::partition_relation({"1", "2", "3", "4"},
                                 {rpk::Bits{0b0011}, rpk::Bits{0b1100}});
}

/// Universe {1,2} with the quasiorder {(1,1),(2,2),(1,2)}.
inline rpk::FiniteRelation qo2() {
  return rpk::FiniteRelation::create({"1", "2"}, {rpk::Bits{0b11}, rpk::Bits{0b10}});
}

/// Universe {1,2,3} with the irredundant covering {{1,2},{2,3}}.
inline rpk::Covering tol3() {
  return rpk::Covering::create({"1", "2", "3"},
                               {rpk::Bits{0b011}, rpk::Bits{0b110}});
}

/// Two-point chain with g swapping the ends.
inline rpk::KVSpace swap_chain2() {
  return rpk::KVSpace{chain_poset({"x", "y"}), {1, 0}};
}

/// Two incomparable g-fixed points.
inline rpk::KVSpace antichain2_identity() {
  return rpk::KVSpace{rpk::poset_from_covers({"x", "y"}, {}), {0, 1}};
}

}  // namespace fixtures
