#include "rpk/represent.hpp"

#include <algorithm>

namespace rpk {
namespace {

bool is_prime_filter_set(const Lattice& l, Bits f) {
  if (f == 0 || f == l.poset().carrier()) return false;
  if (upward_closure(l.poset(), f) != f) return false;
  bool ok = true;
  bits::for_each(f, [&](int x) {
    bits::for_each(f, [&](int y) {
      if (!bits::test(f, l.meet(x, y))) ok = false;
    });
  });
  if (!ok) return false;
  for (int x = 0; x < l.size() && ok; ++x)
    for (int y = 0; y < l.size(); ++y)
      if (bits::test(f, l.join(x, y)) && !bits::test(f, x) &&
          !bits::test(f, y)) {
        ok = false;
        break;
      }
  return ok;
}

int filter_minimum(const Lattice& l, Bits f) {
  int m = -1;
  bits::for_each(f, [&](int x) {
    if (bits::subset(f, l.poset().up_set(x))) m = x;
  });
  return m;
}

std::vector<std::string> numbered_universe(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

}  // namespace

std::vector<PrimeFilter> prime_filters(const Lattice& l) {
  if (auto ce = distributivity_counterexample(l))
    throw Error(Code::NotDistributive,
                "lattice is not distributive at (" + l.label(ce->x) + ", " +
                    l.label(ce->y) + ", " + l.label(ce->z) + ")");
  std::vector<PrimeFilter> out;
  bits::for_each(join_irreducibles(l), [&](int j) {
    out.push_back(PrimeFilter{l.poset().up_set(j), j});
  });
  std::sort(out.begin(), out.end(), [](const PrimeFilter& a, const PrimeFilter& b) {
    return std::make_pair(bits::count(a.members), a.generator) <
           std::make_pair(bits::count(b.members), b.generator);
  });
  return out;
}

PrimeFilter g_of_prime_filter(const PKAlgebra& a, const PrimeFilter& p) {
  if (!is_prime_filter_set(a.lattice(), p.members))
    throw Error(Code::NotAPrimeFilter, "argument is not a prime filter");
  Bits q = 0;
  for (int x = 0; x < a.size(); ++x)
    if (!bits::test(p.members, a.neg(x))) q |= bits::one(x);
  if (!is_prime_filter_set(a.lattice(), q))
    throw Error(Code::TheoremViolation, "g(P) is not a prime filter");
  return PrimeFilter{q, filter_minimum(a.lattice(), q)};
}

KVSpace prime_filter_space(const PKAlgebra& a) {
  std::vector<PrimeFilter> filters = prime_filters(a.lattice());
  const int n = static_cast<int>(filters.size());
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const PrimeFilter& f : filters)
    labels.push_back("↑" + a.label(f.generator));
  std::vector<Bits> up(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (bits::subset(filters[i].members, filters[j].members))
        up[i] |= bits::one(j);

  UnaryTable g(n, -1);
  for (int i = 0; i < n; ++i) {
    PrimeFilter img = g_of_prime_filter(a, filters[i]);
    for (int j = 0; j < n; ++j)
      if (filters[j].members == img.members) g[i] = j;
    if (g[i] < 0)
      throw Error(Code::TheoremViolation, "g left the prime-filter family");
  }
  return KVSpace{Poset::from_up_sets(std::move(labels), std::move(up)),
                 std::move(g)};
}

KVSpace kv_space_of_algebra(const PKAlgebra& a) {
  if (!axiom_report(a).passes(Axiom::M))
    throw Error(Code::NotRegular, "algebra is not regular: (M) fails");
  KVSpace space = prime_filter_space(a);
  if (!validate_kv(space).valid())
    throw Error(Code::TheoremViolation,
                "prime-filter space violates (J1)-(J4)");
  return space;
}

CanonicalEmbedding canonical_embedding_h(const PKAlgebra& a) {
  KVSpace space = kv_space_of_algebra(a);
  std::vector<PrimeFilter> filters = prime_filters(a.lattice());
  UpsetAlgebra target = upset_algebra(space);

  std::vector<int> h(a.size());
  for (int x = 0; x < a.size(); ++x) {
    Bits image = 0;
    for (std::size_t i = 0; i < filters.size(); ++i)
      if (bits::test(filters[i].members, x))
        image |= bits::one(static_cast<int>(i));
    h[x] = target.family.index_of(image);
  }
  HomomorphismCheck hc = check_homomorphism(h, a, target.algebra);
  if (!hc.is_embedding())
    throw Error(Code::TheoremViolation,
                "canonical map is not an embedding: " +
                    hc.witness.value_or("not injective"));
  return CanonicalEmbedding{std::move(space), std::move(target), std::move(h)};
}

bool check_prime_chain_regularity(const Lattice& l) {
  std::vector<PrimeFilter> filters = prime_filters(l);
  const int n = static_cast<int>(filters.size());
  std::vector<std::string> labels(n);
  std::vector<Bits> up(n, 0);
  for (int i = 0; i < n; ++i) {
    labels[i] = "f" + std::to_string(i);
    for (int j = 0; j < n; ++j)
      if (bits::subset(filters[i].members, filters[j].members))
        up[i] |= bits::one(j);
  }
  Poset p = Poset::from_up_sets(std::move(labels), std::move(up));
  return max_chain_length(p) <= 2;
}

StoneanEquivalence check_stonean_equivalence(const PKAlgebra& a) {
  StoneanEquivalence out;
  out.algebra_stone = axiom_report(a).passes(Axiom::Stone);
  KVSpace space = kv_space_of_algebra(a);  // throws NotRegular when (M) fails
  out.filters_disjoint_chains = is_disjoint_short_chains(space.poset);
  out.upset_algebra_stone =
      axiom_report(upset_algebra(space).algebra).passes(Axiom::Stone);
  if (!out.all_equal())
    throw Error(Code::TheoremViolation,
                "the three Stonean conditions disagree");
  return out;
}

std::optional<std::vector<int>> find_embedding(const PKAlgebra& src,
                                               const PKAlgebra& dst) {
  if (dst.size() < src.size()) return std::nullopt;
  const std::vector<int> ji = bits::to_vector(join_irreducibles(src.lattice()));
  std::vector<int> image(ji.size(), -1);

  auto extend_and_check = [&]() -> std::optional<std::vector<int>> {
    std::vector<int> f(src.size());
    for (int x = 0; x < src.size(); ++x) {
      int v = dst.bottom();
      for (std::size_t k = 0; k < ji.size(); ++k)
        if (src.lattice().leq(ji[k], x)) v = dst.join(v, image[k]);
      f[x] = v;
    }
    if (check_homomorphism(f, src, dst).is_embedding()) return f;
    return std::nullopt;
  };

  auto rec = [&](auto&& self,
                 std::size_t k) -> std::optional<std::vector<int>> {
    if (k == ji.size()) return extend_and_check();
    for (int cand = 0; cand < dst.size(); ++cand) {
      bool consistent = true;
      // An injective lattice map reflects and preserves order, and must
      // commute with neg and star wherever both sides are already placed.
      for (std::size_t p = 0; p < k && consistent; ++p) {
        if (src.lattice().leq(ji[p], ji[k]) !=
            dst.lattice().leq(image[p], cand))
          consistent = false;
        if (src.lattice().leq(ji[k], ji[p]) !=
            dst.lattice().leq(cand, image[p]))
          consistent = false;
        if (image[p] == cand) consistent = false;
        if (src.neg(ji[p]) == ji[k] && dst.neg(image[p]) != cand)
          consistent = false;
        if (src.star(ji[p]) == ji[k] && dst.star(image[p]) != cand)
          consistent = false;
      }
      if (!consistent) continue;
      image[k] = cand;
      if (auto f = self(self, k + 1)) return f;
      image[k] = -1;
    }
    return std::nullopt;
  };
  return rec(rec, 0);
}

RepresentationWitness verify_theorem_main(const PKAlgebra& a,
                                          int max_universe) {
  if (!axiom_report(a).passes(Axiom::M))
    throw Error(Code::NotRegular, "algebra is not regular: (M) fails");
  for (int n = 1; n <= max_universe; ++n) {
    for (const Covering& cov : enumerate_irredundant_coverings(n)) {
      RSToleranceAlgebra rsa = rs_algebra_tolerance(cov);
      if (rsa.algebra.size() < a.size()) continue;
      if (auto f = find_embedding(a, rsa.algebra))
        return RepresentationWitness{numbered_universe(n), cov.blocks(),
                                     rsa.system.pairs, std::move(rsa.algebra),
                                     std::move(*f)};
    }
  }
  throw Error(Code::NoWitnessWithinBudget,
              "no witness within universes of size " +
                  std::to_string(max_universe));
}

RepresentationWitness verify_theorem_mainB(const PKAlgebra& a,
                                           int max_universe) {
  if (!axiom_report(a).passes(Axiom::M))
    throw Error(Code::NotRegular, "algebra is not regular: (M) fails");
  if (!axiom_report(a).passes(Axiom::Stone))
    throw Error(Code::PreconditionViolated, "requires STONE; it fails");
  for (int n = 1; n <= max_universe; ++n) {
    for (const auto& blocks : enumerate_set_partitions(n)) {
      FiniteRelation e = partition_relation(numbered_universe(n), blocks);
      RSEquivalenceAlgebra rsa = rs_algebra_equivalence(e);
      if (rsa.lattice.size() < a.size()) continue;
      PKAlgebra target = rpk_from_rds(rsa.lattice, rsa.star, rsa.plus);
      if (target.neg_table() != rsa.neg)
        throw Error(Code::TheoremViolation,
                    "correspondence negation differs from the rough-set one");
      if (auto f = find_embedding(a, target))
        return RepresentationWitness{numbered_universe(n), blocks,
                                     rsa.system.pairs, std::move(target),
                                     std::move(*f)};
    }
  }
  throw Error(Code::NoWitnessWithinBudget,
              "no witness within universes of size " +
                  std::to_string(max_universe));
}

}  // namespace rpk
