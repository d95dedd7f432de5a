#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

// Hand-rolled property tests: fixed-seed generators drive the library
// against the independent oracles in oracles.hpp.

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rpk/represent.hpp"
#include "rpk/roughset.hpp"

using namespace rpk;

namespace {

std::vector<std::string> point_labels(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  return labels;
}

/// Random DAG edges over indices (i < j only), then closed into a poset.
Poset random_poset(std::mt19937& rng, int n, double edge_prob) {
  std::bernoulli_distribution edge(edge_prob);
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (edge(rng))
        covers.emplace_back("e" + std::to_string(i), "e" + std::to_string(j));
  return poset_from_covers(point_labels(n), covers);
}

FiniteRelation random_reflexive_relation(std::mt19937& rng, int n,
                                         bool symmetric) {
  std::bernoulli_distribution edge(0.4);
  std::vector<Bits> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = bits::one(i);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && edge(rng)) {
        rows[i] |= bits::one(j);
        if (symmetric) rows[j] |= bits::one(i);
      }
  return FiniteRelation::create(point_labels(n), rows);
}

int brute_max_chain(const Poset& p) {
  int best = 0;
  for (Bits s = 0; s < (Bits{1} << p.size()); ++s) {
    bool chain = true;
    for (int x = 0; x < p.size() && chain; ++x)
      for (int y = 0; y < p.size(); ++y)
        if (x != y && bits::test(s, x) && bits::test(s, y) && !p.leq(x, y) &&
            !p.leq(y, x)) {
          chain = false;
          break;
        }
    if (chain) best = std::max(best, bits::count(s));
  }
  return best;
}

/// All unary tables satisfying DM1, DM2, the De Morgan equation and K,
/// checked directly over the full n^n map space.
std::vector<UnaryTable> brute_kleene_negations(const Lattice& l) {
  const int n = l.size();
  std::vector<UnaryTable> out;
  UnaryTable t(n, 0);
  auto next = [&]() {
    for (int i = 0; i < n; ++i) {
      if (++t[i] < n) return true;
      t[i] = 0;
    }
    return false;
  };
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      if (t[t[x]] != x) ok = false;
      for (int y = 0; y < n && ok; ++y) {
        if (l.leq(x, y) && !l.leq(t[y], t[x])) ok = false;
        if (l.join(t[x], t[y]) != t[l.meet(x, y)]) ok = false;
        if (!l.leq(l.meet(x, t[x]), l.join(y, t[y]))) ok = false;
      }
    }
    if (ok) out.push_back(t);
  } while (next());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("random posets: closure, upsets and chain length vs oracles") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 160; ++trial) {
    int n = 1 + static_cast<int>(rng() % 7);
    Poset p = random_poset(rng, n, 0.35);

    UpsetFamily fam = all_upsets(p);
    CHECK(fam.members == oracles::upsets_by_filter(p));
    CHECK(static_cast<int>(fam.members.size()) == oracles::antichain_count(p));
    CHECK(max_chain_length(p) == brute_max_chain(p));

    for (int x = 0; x < n; ++x) {
      Bits closure = upward_closure(p, bits::one(x));
      CHECK(upward_closure(p, closure) == closure);
      CHECK(closure == p.up_set(x));
    }
  }
}

TEST_CASE("random posets: lattice detection agrees with the bound scan") {
  std::mt19937 rng(987654321);
  int lattices_seen = 0, rejections_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);
    Poset p = random_poset(rng, n, 0.4);
    bool all_bounds = true;
    for (int x = 0; x < n && all_bounds; ++x)
      for (int y = 0; y < n; ++y)
        if (!oracles::meet_by_scan(p, x, y) || !oracles::join_by_scan(p, x, y)) {
          all_bounds = false;
          break;
        }
    if (!all_bounds) {
      CHECK_THROWS_AS(lattice_of(p), Error);
      ++rejections_seen;
      continue;
    }
    Lattice l = lattice_of(p);
    ++lattices_seen;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        CHECK(l.meet(x, y) == *oracles::meet_by_scan(p, x, y));
        CHECK(l.join(x, y) == *oracles::join_by_scan(p, x, y));
      }
    CHECK(is_distributive(l) ==
          oracles::distributive_by_forbidden_sublattice(l));

    if (is_distributive(l)) {
      std::vector<Bits> brute = oracles::prime_filters_by_scan(l);
      std::vector<Bits> fast;
      for (const PrimeFilter& f : prime_filters(l)) fast.push_back(f.members);
      std::sort(brute.begin(), brute.end());
      std::sort(fast.begin(), fast.end());
      CHECK(fast == brute);

      // A finite distributive lattice has both pseudocomplements, and the
      // (M) and (D) verdicts must agree on it.
      UnaryTable star = pseudocomplement_table(l);
      UnaryTable plus = dual_pseudocomplement_table(l);
      AxiomReport r = axiom_report(l, nullptr, &star, &plus);
      CHECK(r.passes(Axiom::M) == r.passes(Axiom::D));
    }
  }
  // the generator must exercise both outcomes
  CHECK(lattices_seen > 10);
  CHECK(rejections_seen > 10);
}

TEST_CASE("random reflexive relations: approximation laws") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5);
    FiniteRelation r = random_reflexive_relation(rng, n, trial % 2 == 0);
    for (Bits x = 0; x <= r.universe_mask(); ++x) {
      Bits lo = lower_approx(r, x), up = upper_approx(r, x);
      CHECK(bits::subset(lo, x));
      CHECK(bits::subset(x, up));
      CHECK(lo == (r.universe_mask() &
                   ~upper_approx(r, r.universe_mask() & ~x)));
      CHECK(rough_equal(r, x, x));
      if (x == r.universe_mask()) break;
    }
    RSSystem sys = rs_system(r);
    for (const RoughPair& p : sys.pairs) {
      CHECK(lower_approx(r, p.witness) == p.lower);
      CHECK(upper_approx(r, p.witness) == p.upper);
    }
  }
}

TEST_CASE("random tolerances from coverings always give pK algebras") {
  std::mt19937 rng(1357911);
  int built = 0;
  for (int trial = 0; trial < 120; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    // random nonempty blocks until covered, then prune to irredundancy
    std::vector<Bits> blocks;
    Bits covered = 0;
    while (covered != bits::full(n)) {
      Bits b = static_cast<Bits>(rng() % (Bits{1} << n));
      if (b == 0) continue;
      blocks.push_back(b);
      covered |= b;
    }
    for (std::size_t i = 0; i < blocks.size();) {
      Bits rest = 0;
      for (std::size_t j = 0; j < blocks.size(); ++j)
        if (j != i) rest |= blocks[j];
      if (rest == bits::full(n)) {
        blocks.erase(blocks.begin() + static_cast<long>(i));
        i = 0;
      } else {
        ++i;
      }
    }
    Covering c = Covering::create(point_labels(n), blocks);
    REQUIRE(is_irredundant(c));
    RSToleranceAlgebra rsa = rs_algebra_tolerance(c);
    AxiomReport rep = axiom_report(rsa.algebra);
    for (Axiom a : {Axiom::DM1, Axiom::DM2, Axiom::K, Axiom::M, Axiom::D})
      CHECK(rep.passes(a));
    CHECK(verify_lattice_formulas(rsa.system, FormulaKind::Tolerance).pass);
    ++built;
  }
  CHECK(built == 120);
}

TEST_CASE("negation enumeration agrees with the full map-space scan") {
  std::mt19937 rng(777);
  // fixed catalog plus random distributive pseudocomplemented lattices
  std::vector<Lattice> lattices = {fixtures::c2(), fixtures::c3(),
                                   fixtures::c4(), fixtures::b4(),
                                   fixtures::ex7()};
  int random_accepted = 0;
  while (random_accepted < 12) {
    Poset p = random_poset(rng, 2 + static_cast<int>(rng() % 4), 0.45);
    bool bounded = true;
    for (int x = 0; x < p.size() && bounded; ++x)
      for (int y = 0; y < p.size(); ++y)
        if (!oracles::meet_by_scan(p, x, y) || !oracles::join_by_scan(p, x, y))
          bounded = false;
    if (!bounded) continue;
    Lattice l = lattice_of(p);
    if (!is_distributive(l)) continue;
    try {
      pseudocomplement_table(l);
    } catch (const Error&) {
      continue;
    }
    lattices.push_back(l);
    ++random_accepted;
  }
  for (const Lattice& l : lattices) {
    if (l.size() > 7) continue;  // 7^7 maps is the budget ceiling
    CHECK(enumerate_kleene_negations(l) == brute_kleene_negations(l));
  }
}
