#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "fixtures.hpp"
#include "rpk/algebra.hpp"

using namespace rpk;

namespace {

int idx(const Lattice& l, const std::string& s) {
  return *l.poset().index_of(s);
}

std::vector<PKAlgebra> pk_catalog() {
  std::vector<PKAlgebra> out;
  out.push_back(fixtures::c2_pk());
  out.push_back(fixtures::c3_pk());
  out.push_back(fixtures::b4_pk());
  out.push_back(fixtures::ex7_pk1());
  out.push_back(fixtures::ex7_pk2());
  out.push_back(fixtures::g9_pk());
  return out;
}

}  // namespace

TEST_CASE("pseudocomplement tables on the chain fixtures") {
  Lattice c3 = fixtures::c3();
  UnaryTable star = pseudocomplement_table(c3);
  CHECK(star[idx(c3, "0")] == idx(c3, "1"));
  CHECK(star[idx(c3, "d")] == idx(c3, "0"));
  CHECK(star[idx(c3, "1")] == idx(c3, "0"));

  UnaryTable plus = dual_pseudocomplement_table(c3);
  CHECK(plus[idx(c3, "0")] == idx(c3, "1"));
  CHECK(plus[idx(c3, "d")] == idx(c3, "1"));
  CHECK(plus[idx(c3, "1")] == idx(c3, "0"));
}

TEST_CASE("EX7 pseudocomplements: the atoms annihilate each other") {
  Lattice ex7 = fixtures::ex7();
  UnaryTable star = pseudocomplement_table(ex7);
  CHECK(star[idx(ex7, "a")] == idx(ex7, "b"));
  CHECK(star[idx(ex7, "b")] == idx(ex7, "a"));
  for (const char* x : {"d", "f", "g", "1"})
    CHECK(star[idx(ex7, x)] == idx(ex7, "0"));
  // a* v a** = b v a = d != 1
  int a = idx(ex7, "a");
  CHECK(star[star[a]] == a);
  CHECK(ex7.join(star[a], star[star[a]]) == idx(ex7, "d"));
}

TEST_CASE("G9 pseudocomplements on the product order") {
  Lattice g9 = fixtures::g9();
  UnaryTable star = pseudocomplement_table(g9);
  CHECK(star[idx(g9, "a")] == idx(g9, "e"));
  CHECK(star[idx(g9, "e")] == idx(g9, "c"));
  CHECK(star[idx(g9, "c")] == idx(g9, "e"));
  CHECK(star[star[idx(g9, "a")]] == idx(g9, "c"));

  UnaryTable plus = dual_pseudocomplement_table(g9);
  CHECK(plus[idx(g9, "a")] == idx(g9, "1"));
  CHECK(plus[idx(g9, "d")] == idx(g9, "1"));
  CHECK(plus[idx(g9, "f")] == idx(g9, "e"));
}

TEST_CASE("the diamond M3 has no pseudocomplements at its atoms") {
  Lattice m3 = fixtures::m3();
  try {
    pseudocomplement_table(m3);
    FAIL("M3 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Code::NotPseudocomplemented);
    CHECK(std::string(e.what()) == "no pseudocomplement for 'p'");
  }
  try {
    dual_pseudocomplement_table(m3);
    FAIL("M3 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Code::NotDuallyPseudocomplemented);
    CHECK(std::string(e.what()) == "no dual pseudocomplement for 'p'");
  }
}

TEST_CASE("pk_algebra accepts the fixture negations") {
  CHECK_NOTHROW(fixtures::c3_pk());
  CHECK_NOTHROW(fixtures::ex7_pk1());
  CHECK_NOTHROW(fixtures::ex7_pk2());
  CHECK_NOTHROW(fixtures::g9_pk());
}

TEST_CASE("pk_algebra rejects the atom-fixing negation on the diamond") {
  Lattice b4 = fixtures::b4();
  UnaryTable fix_atoms = fixtures::table_from(
      b4, {{"0", "1"}, {"a", "a"}, {"b", "b"}, {"1", "0"}});
  try {
    pk_algebra(b4, fix_atoms);
    FAIL("K violation accepted");
  } catch (const AxiomViolation& e) {
    CHECK(e.axiom() == Axiom::K);
    REQUIRE(e.report()[Axiom::K].counterexample.size() == 2);
    CHECK(e.report()[Axiom::K].counterexample[0] == idx(b4, "a"));
    CHECK(e.report()[Axiom::K].counterexample[1] == idx(b4, "b"));
  }
}

TEST_CASE("axiom_report on EX7: STONE fails at a, M and D pass") {
  PKAlgebra ex7 = fixtures::ex7_pk1();
  AxiomReport r = axiom_report(ex7);
  CHECK(r.fails(Axiom::Stone));
  REQUIRE(r[Axiom::Stone].counterexample.size() == 1);
  CHECK(r[Axiom::Stone].counterexample[0] == idx(ex7.lattice(), "a"));
  CHECK(r.passes(Axiom::M));
  CHECK(r.passes(Axiom::D));
  CHECK(r.passes(Axiom::DM1));
  CHECK(r.passes(Axiom::DM2));
  CHECK(r.passes(Axiom::K));
  CHECK(r.passes(Axiom::Eq5));
  CHECK(r.passes(Axiom::Eq6));
  CHECK(r.passes(Axiom::Eq7));
  CHECK(r.passes(Axiom::DerivedStarLaws));
  CHECK(r.passes(Axiom::DerivedPlusLaws));
}

TEST_CASE("axiom_report on G9: everything passes") {
  AxiomReport r = axiom_report(fixtures::g9_pk());
  for (Axiom a : kAllAxioms) CHECK(r.passes(a));
}

TEST_CASE("axiom_report on C4: M fails at (a, b), D agrees") {
  Lattice c4 = fixtures::c4();
  UnaryTable star = pseudocomplement_table(c4);
  UnaryTable plus = dual_pseudocomplement_table(c4);
  AxiomReport r = axiom_report(c4, nullptr, &star, &plus);
  CHECK(r.fails(Axiom::M));
  REQUIRE(r[Axiom::M].counterexample.size() == 2);
  CHECK(r[Axiom::M].counterexample[0] == idx(c4, "a"));
  CHECK(r[Axiom::M].counterexample[1] == idx(c4, "b"));
  CHECK(r.fails(Axiom::D));
  CHECK(r[Axiom::DM1].verdict == Verdict::NotApplicable);
}

TEST_CASE("enumerate_kleene_negations finds the known tables") {
  Lattice ex7 = fixtures::ex7();
  std::vector<UnaryTable> negs = enumerate_kleene_negations(ex7);
  REQUIRE(negs.size() == 2);
  CHECK(std::find(negs.begin(), negs.end(),
                  fixtures::ex7_pk1().neg_table()) != negs.end());
  CHECK(std::find(negs.begin(), negs.end(),
                  fixtures::ex7_pk2().neg_table()) != negs.end());

  std::vector<UnaryTable> g9_negs = enumerate_kleene_negations(fixtures::g9());
  REQUIRE(g9_negs.size() == 1);
  CHECK(g9_negs[0] == fixtures::g9_pk().neg_table());

  std::vector<UnaryTable> b4_negs = enumerate_kleene_negations(fixtures::b4());
  REQUIRE(b4_negs.size() == 1);
  CHECK(b4_negs[0] == fixtures::b4_pk().neg_table());
}

TEST_CASE("enumerate_kleene_negations requires distributivity") {
  CHECK_THROWS_AS(enumerate_kleene_negations(fixtures::m3()), Error);
}

TEST_CASE("rpk_from_rds builds the correspondence negation") {
  Lattice c3 = fixtures::c3();
  PKAlgebra a = rpk_from_rds(c3, pseudocomplement_table(c3),
                             dual_pseudocomplement_table(c3));
  CHECK(a.neg(idx(c3, "d")) == idx(c3, "d"));

  Lattice g9 = fixtures::g9();
  PKAlgebra b = rpk_from_rds(g9, pseudocomplement_table(g9),
                             dual_pseudocomplement_table(g9));
  CHECK(b.neg_table() == fixtures::g9_pk().neg_table());
  CHECK(b.neg(idx(g9, "a")) == idx(g9, "g"));
}

TEST_CASE("rpk_from_rds refuses EX7: STONE fails") {
  Lattice ex7 = fixtures::ex7();
  try {
    rpk_from_rds(ex7, pseudocomplement_table(ex7),
                 dual_pseudocomplement_table(ex7));
    FAIL("EX7 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Code::PreconditionViolated);
    CHECK(std::string(e.what()).find("STONE") != std::string::npos);
  }
}

TEST_CASE("rds_from_rpk round trips on Stone-passing algebras") {
  for (const PKAlgebra& a :
       {fixtures::c2_pk(), fixtures::c3_pk(), fixtures::b4_pk(),
        fixtures::g9_pk()}) {
    DoubleStoneReduct reduct = rds_from_rpk(a);
    PKAlgebra back = rpk_from_rds(reduct.lattice, reduct.star, reduct.plus);
    CHECK(back.neg_table() == a.neg_table());
    CHECK(back.star_table() == a.star_table());
    CHECK(back.plus_table() == a.plus_table());
  }
  CHECK_THROWS_AS(rds_from_rpk(fixtures::ex7_pk1()), Error);
}

TEST_CASE("uniqueness of the negation under STONE") {
  for (const PKAlgebra& a : pk_catalog()) {
    std::vector<UnaryTable> negs = enumerate_kleene_negations(a.lattice());
    if (axiom_report(a).passes(Axiom::Stone)) {
      REQUIRE(negs.size() == 1);
      CHECK(negs[0] == a.neg_table());
    } else {
      CHECK(negs.size() > 1);
    }
  }
}

TEST_CASE("check_homomorphism") {
  PKAlgebra c3 = fixtures::c3_pk();
  std::vector<int> id = {0, 1, 2};
  HomomorphismCheck ok = check_homomorphism(id, c3, c3);
  CHECK(ok.preserves_operations);
  CHECK(ok.injective);

  std::vector<int> to_top(3, c3.top());
  HomomorphismCheck bad = check_homomorphism(to_top, c3, c3);
  CHECK_FALSE(bad.preserves_operations);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->find("f(0)") != std::string::npos);
  CHECK_FALSE(bad.injective);
}

TEST_CASE("subalgebra_generated") {
  PKAlgebra g9 = fixtures::g9_pk();
  Bits gen = subalgebra_generated(g9, bits::one(idx(g9.lattice(), "a")));
  Bits expected = 0;
  for (const char* s : {"0", "a", "c", "e", "g", "1"})
    expected |= bits::one(idx(g9.lattice(), s));
  CHECK(gen == expected);

  PKAlgebra c2 = fixtures::c2_pk();
  CHECK(subalgebra_generated(c2, 0) == bits::full(2));

  PKAlgebra c3 = fixtures::c3_pk();
  CHECK(subalgebra_generated(c3, bits::one(idx(c3.lattice(), "d"))) ==
        bits::full(3));
}

TEST_CASE("find_isomorphism") {
  PKAlgebra c3 = fixtures::c3_pk();
  auto self = find_isomorphism(c3, c3);
  REQUIRE(self.has_value());
  CHECK(*self == std::vector<int>{0, 1, 2});

  CHECK_FALSE(find_isomorphism(c3, fixtures::c2_pk()).has_value());

  PKAlgebra e1 = fixtures::ex7_pk1();
  PKAlgebra e2 = fixtures::ex7_pk2();
  auto iso = find_isomorphism(e1, e2);
  REQUIRE(iso.has_value());
  const Lattice& l = e1.lattice();
  // Deterministic first find: the transposition of f and g. Swapping a
  // with b instead is the other witness; swapping both at once only maps
  // each variant to itself.
  CHECK((*iso)[idx(l, "a")] == idx(l, "a"));
  CHECK((*iso)[idx(l, "b")] == idx(l, "b"));
  CHECK((*iso)[idx(l, "f")] == idx(l, "g"));
  CHECK((*iso)[idx(l, "g")] == idx(l, "f"));
  CHECK((*iso)[idx(l, "d")] == idx(l, "d"));
  CHECK(check_homomorphism(*iso, e1, e2).is_embedding());

  std::vector<int> swap_ab(l.size()), swap_both(l.size());
  for (int x = 0; x < l.size(); ++x) swap_ab[x] = swap_both[x] = x;
  std::swap(swap_ab[idx(l, "a")], swap_ab[idx(l, "b")]);
  CHECK(check_homomorphism(swap_ab, e1, e2).is_embedding());
  std::swap(swap_both[idx(l, "a")], swap_both[idx(l, "b")]);
  std::swap(swap_both[idx(l, "f")], swap_both[idx(l, "g")]);
  CHECK_FALSE(check_homomorphism(swap_both, e1, e2).preserves_operations);
  CHECK(check_homomorphism(swap_both, e1, e1).is_embedding());
}

TEST_CASE("star and plus law block holds on the fixture algebras") {
  for (const PKAlgebra& a : pk_catalog()) {
    const Lattice& l = a.lattice();
    for (int x = 0; x < a.size(); ++x) {
      CHECK(a.star(x) == a.star(a.star(a.star(x))));
      CHECK(a.plus(x) == a.plus(a.plus(a.plus(x))));
      CHECK(l.leq(a.plus(a.plus(x)), x));
      CHECK(l.leq(x, a.star(a.star(x))));
      CHECK(l.leq(a.plus(a.plus(x)), a.star(a.star(x))));
      for (int y = 0; y < a.size(); ++y) {
        if (l.leq(x, y)) {
          CHECK(l.leq(a.star(y), a.star(x)));
          CHECK(l.leq(a.plus(y), a.plus(x)));
        }
        CHECK(a.star(l.join(x, y)) == l.meet(a.star(x), a.star(y)));
        CHECK(a.star(a.star(l.meet(x, y))) ==
              l.meet(a.star(a.star(x)), a.star(a.star(y))));
        CHECK(a.plus(l.meet(x, y)) == l.join(a.plus(x), a.plus(y)));
        CHECK(a.plus(a.plus(l.join(x, y))) ==
              l.join(a.plus(a.plus(x)), a.plus(a.plus(y))));
      }
    }
  }
}

TEST_CASE("normality and the Kleene meet law hold exhaustively") {
  for (const PKAlgebra& a : pk_catalog()) {
    const Lattice& l = a.lattice();
    for (int x = 0; x < a.size(); ++x) {
      CHECK(l.leq(a.star(x), a.neg(x)));
      CHECK(l.leq(a.neg(x), a.plus(x)));
      for (int y = 0; y < a.size(); ++y)
        if (l.meet(x, y) == a.bottom()) CHECK(l.leq(y, a.neg(x)));
    }
  }
}

TEST_CASE("double Stone identities x*+ = x** and x+* = x++") {
  for (const PKAlgebra& a :
       {fixtures::c2_pk(), fixtures::c3_pk(), fixtures::b4_pk(),
        fixtures::g9_pk()}) {
    REQUIRE(axiom_report(a).passes(Axiom::Stone));
    for (int x = 0; x < a.size(); ++x) {
      CHECK(a.plus(a.star(x)) == a.star(a.star(x)));
      CHECK(a.star(a.plus(x)) == a.plus(a.plus(x)));
      CHECK(a.lattice().leq(a.star(x), a.plus(x)));
    }
  }
}

TEST_CASE("(M) and (D) verdicts agree on distributive double p-algebras") {
  std::vector<Lattice> lattices;
  lattices.push_back(fixtures::c2());
  lattices.push_back(fixtures::c3());
  lattices.push_back(fixtures::c4());
  lattices.push_back(fixtures::b4());
  lattices.push_back(fixtures::ex7());
  lattices.push_back(fixtures::g9());
  for (const Lattice& l : lattices) {
    UnaryTable star = pseudocomplement_table(l);
    UnaryTable plus = dual_pseudocomplement_table(l);
    AxiomReport r = axiom_report(l, nullptr, &star, &plus);
    CHECK(r.passes(Axiom::M) == r.passes(Axiom::D));
  }
}
