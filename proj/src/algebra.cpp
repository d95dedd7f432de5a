#include "rpk/algebra.hpp"

#include <algorithm>
#include <cctype>

namespace rpk {
namespace {

void validate_table(const UnaryTable& t, int n, const char* what) {
  if (static_cast<int>(t.size()) != n)
    throw Error(Code::TableMismatch,
                std::string(what) + " table is not total on the carrier");
  for (int v : t)
    if (v < 0 || v >= n)
      throw Error(Code::TableMismatch,
                  std::string(what) + " table maps outside the carrier");
}

/// Greatest element of `candidates`, or -1 if none dominates the whole set.
int greatest_of(const Lattice& l, Bits candidates) {
  int found = -1;
  bits::for_each(candidates, [&](int z) {
    if (bits::subset(candidates, l.poset().down_set(z))) found = z;
  });
  return found;
}

int least_of(const Lattice& l, Bits candidates) {
  int found = -1;
  bits::for_each(candidates, [&](int z) {
    if (bits::subset(candidates, l.poset().up_set(z))) found = z;
  });
  return found;
}

}  // namespace

std::string axiom_name(Axiom a) {
  switch (a) {
    case Axiom::Distributive: return "DISTRIBUTIVE";
    case Axiom::DM1: return "DM1";
    case Axiom::DM2: return "DM2";
    case Axiom::K: return "K";
    case Axiom::Eq5: return "EQ5";
    case Axiom::Eq6: return "EQ6";
    case Axiom::Eq7: return "EQ7";
    case Axiom::M: return "M";
    case Axiom::D: return "D";
    case Axiom::Stone: return "STONE";
    case Axiom::DualStone: return "DUAL_STONE";
    case Axiom::DerivedStarLaws: return "DERIVED_STAR_LAWS";
    case Axiom::DerivedPlusLaws: return "DERIVED_PLUS_LAWS";
  }
  return "?";
}

std::optional<Axiom> axiom_from_name(const std::string& name) {
  std::string upper;
  for (char c : name) upper.push_back(static_cast<char>(std::toupper(c)));
  for (Axiom a : kAllAxioms)
    if (axiom_name(a) == upper) return a;
  return std::nullopt;
}

AxiomViolation::AxiomViolation(Axiom axiom, AxiomReport report)
    : Error(Code::AxiomViolation, "axiom " + axiom_name(axiom) + " fails"),
      axiom_(axiom),
      report_(std::move(report)) {}

UnaryTable pseudocomplement_table(const Lattice& l) {
  const int n = l.size();
  UnaryTable star(n);
  for (int x = 0; x < n; ++x) {
    Bits annihilator = 0;
    for (int z = 0; z < n; ++z)
      if (l.meet(x, z) == l.bottom()) annihilator |= bits::one(z);
    int g = greatest_of(l, annihilator);
    if (g < 0)
      throw Error(Code::NotPseudocomplemented,
                  "no pseudocomplement for '" + l.label(x) + "'");
    star[x] = g;
  }
  return star;
}

UnaryTable dual_pseudocomplement_table(const Lattice& l) {
  const int n = l.size();
  UnaryTable plus(n);
  for (int x = 0; x < n; ++x) {
    Bits cofill = 0;
    for (int z = 0; z < n; ++z)
      if (l.join(x, z) == l.top()) cofill |= bits::one(z);
    int m = least_of(l, cofill);
    if (m < 0)
      throw Error(Code::NotDuallyPseudocomplemented,
                  "no dual pseudocomplement for '" + l.label(x) + "'");
    plus[x] = m;
  }
  return plus;
}

AxiomReport axiom_report(const Lattice& l, const UnaryTable* neg,
                         const UnaryTable* star, const UnaryTable* plus) {
  const int n = l.size();
  if (neg) validate_table(*neg, n, "neg");
  if (star) validate_table(*star, n, "star");
  if (plus) validate_table(*plus, n, "plus");

  AxiomReport report;
  auto set = [&](Axiom a, Verdict v, std::vector<int> ce = {}) {
    report.results[static_cast<int>(a)] = AxiomResult{v, std::move(ce)};
  };
  // Scans run in index order and stop at the first violation, so a Fail
  // always carries the lexicographically least counterexample.
  auto scan1 = [&](Axiom a, auto&& law) {
    for (int x = 0; x < n; ++x)
      if (!law(x)) return set(a, Verdict::Fail, {x});
    set(a, Verdict::Pass);
  };
  auto scan2 = [&](Axiom a, auto&& law) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (!law(x, y)) return set(a, Verdict::Fail, {x, y});
    set(a, Verdict::Pass);
  };

  if (auto ce = distributivity_counterexample(l))
    set(Axiom::Distributive, Verdict::Fail, {ce->x, ce->y, ce->z});
  else
    set(Axiom::Distributive, Verdict::Pass);

  if (neg) {
    const UnaryTable& nt = *neg;
    scan1(Axiom::DM1, [&](int x) { return nt[nt[x]] == x; });
    scan2(Axiom::DM2, [&](int x, int y) {
      return !l.leq(x, y) || l.leq(nt[y], nt[x]);
    });
    scan2(Axiom::K, [&](int x, int y) {
      return l.leq(l.meet(x, nt[x]), l.join(y, nt[y]));
    });
    scan2(Axiom::Eq5, [&](int x, int y) {
      return l.meet(x, y) != l.bottom() || l.leq(y, nt[x]);
    });
  }
  if (neg && star && plus) {
    const UnaryTable &nt = *neg, &st = *star, &pt = *plus;
    scan1(Axiom::Eq6, [&](int x) {
      return nt[st[x]] == pt[nt[x]] && nt[pt[x]] == st[nt[x]];
    });
    scan1(Axiom::Eq7, [&](int x) {
      return l.leq(st[x], nt[x]) && l.leq(nt[x], pt[x]);
    });
  }
  if (star && plus) {
    const UnaryTable &st = *star, &pt = *plus;
    scan2(Axiom::M, [&](int x, int y) {
      return st[x] != st[y] || pt[x] != pt[y] || x == y;
    });
    scan2(Axiom::D, [&](int x, int y) {
      return l.leq(l.meet(x, pt[x]), l.join(y, st[y]));
    });
  }
  if (star) {
    const UnaryTable& st = *star;
    scan1(Axiom::Stone,
          [&](int x) { return l.join(st[x], st[st[x]]) == l.top(); });
    scan2(Axiom::DerivedStarLaws, [&](int x, int y) {
      if (st[st[st[x]]] != st[x]) return false;
      if (st[l.join(x, y)] != l.meet(st[x], st[y])) return false;
      return st[st[l.meet(x, y)]] == l.meet(st[st[x]], st[st[y]]);
    });
  }
  if (plus) {
    const UnaryTable& pt = *plus;
    scan1(Axiom::DualStone,
          [&](int x) { return l.meet(pt[x], pt[pt[x]]) == l.bottom(); });
    scan2(Axiom::DerivedPlusLaws, [&](int x, int y) {
      if (pt[pt[pt[x]]] != pt[x]) return false;
      if (pt[l.meet(x, y)] != l.join(pt[x], pt[y])) return false;
      return pt[pt[l.join(x, y)]] == l.join(pt[pt[x]], pt[pt[y]]);
    });
  }
  return report;
}

AxiomReport axiom_report(const PKAlgebra& a) {
  return axiom_report(a.lattice(), &a.neg_table(), &a.star_table(),
                      &a.plus_table());
}

PKAlgebra::PKAlgebra(Lattice lattice, UnaryTable neg, UnaryTable star,
                     UnaryTable plus)
    : lattice_(std::move(lattice)),
      neg_(std::move(neg)),
      star_(std::move(star)),
      plus_(std::move(plus)) {}

PKAlgebra pk_algebra(Lattice lattice, UnaryTable neg) {
  const int n = lattice.size();
  validate_table(neg, n, "neg");
  UnaryTable star = pseudocomplement_table(lattice);
  UnaryTable plus(n);
  for (int x = 0; x < n; ++x) plus[x] = neg[star[neg[x]]];

  AxiomReport report = axiom_report(lattice, &neg, &star, &plus);
  for (Axiom a : {Axiom::Distributive, Axiom::DM1, Axiom::DM2, Axiom::K})
    if (!report.passes(a)) throw AxiomViolation(a, report);

  // In a pseudocomplemented De Morgan algebra the derived plus must be the
  // order-theoretic dual pseudocomplement; anything else is a bug here.
  try {
    if (dual_pseudocomplement_table(lattice) != plus)
      throw Error(Code::TheoremViolation,
                  "derived plus differs from the dual pseudocomplement");
  } catch (const AxiomViolation&) {
    throw;
  } catch (const Error& e) {
    if (e.code() == Code::TheoremViolation) throw;
    throw Error(Code::TheoremViolation,
                std::string("dual pseudocomplement missing: ") + e.what());
  }
  return PKAlgebra(std::move(lattice), std::move(neg), std::move(star),
                   std::move(plus));
}

std::vector<UnaryTable> enumerate_kleene_negations(const Lattice& l) {
  if (!is_distributive(l))
    throw Error(Code::PreconditionViolated,
                "negation enumeration requires a distributive lattice");
  pseudocomplement_table(l);

  const int n = l.size();
  UnaryTable neg(n, -1);
  std::vector<UnaryTable> found;

  auto antitone_against_assigned = [&](int a) {
    for (int u = 0; u < n; ++u) {
      if (neg[u] < 0) continue;
      if (l.leq(u, a) && !l.leq(neg[a], neg[u])) return false;
      if (l.leq(a, u) && !l.leq(neg[u], neg[a])) return false;
    }
    return true;
  };
  auto accept = [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (l.join(neg[x], neg[y]) != neg[l.meet(x, y)]) return false;
        if (!l.leq(l.meet(x, neg[x]), l.join(y, neg[y]))) return false;
      }
    return true;
  };
  auto rec = [&](auto&& self, int from) -> void {
    int x = -1;
    for (int i = from; i < n; ++i)
      if (neg[i] < 0) {
        x = i;
        break;
      }
    if (x < 0) {
      if (accept()) found.push_back(neg);
      return;
    }
    for (int y = 0; y < n; ++y) {
      if (neg[y] >= 0) continue;
      neg[x] = y;
      neg[y] = x;
      if (antitone_against_assigned(x) && antitone_against_assigned(y))
        self(self, x + 1);
      neg[x] = -1;
      neg[y] = -1;
    }
  };
  rec(rec, 0);
  std::sort(found.begin(), found.end());
  return found;
}

PKAlgebra rpk_from_rds(const Lattice& l, const UnaryTable& star,
                       const UnaryTable& plus) {
  const int n = l.size();
  validate_table(star, n, "star");
  validate_table(plus, n, "plus");
  if (star != pseudocomplement_table(l))
    throw Error(Code::TableMismatch,
                "star table is not the pseudocomplement of the lattice");
  if (plus != dual_pseudocomplement_table(l))
    throw Error(Code::TableMismatch,
                "plus table is not the dual pseudocomplement of the lattice");

  AxiomReport report = axiom_report(l, nullptr, &star, &plus);
  for (Axiom a :
       {Axiom::Distributive, Axiom::Stone, Axiom::DualStone, Axiom::M})
    if (!report.passes(a))
      throw Error(Code::PreconditionViolated,
                  "requires " + axiom_name(a) + "; it fails");

  UnaryTable neg(n);
  for (int x = 0; x < n; ++x) {
    neg[x] = l.join(l.meet(x, plus[x]), star[x]);
    int alt = l.meet(l.join(x, star[x]), plus[x]);
    if (alt != neg[x])
      throw Error(Code::TheoremViolation,
                  "the two Kleene-negation forms disagree at '" + l.label(x) +
                      "'");
  }
  return pk_algebra(l, std::move(neg));
}

DoubleStoneReduct rds_from_rpk(const PKAlgebra& a) {
  if (!axiom_report(a).passes(Axiom::Stone))
    throw Error(Code::PreconditionViolated, "requires STONE; it fails");
  return DoubleStoneReduct{a.lattice(), a.star_table(), a.plus_table()};
}

HomomorphismCheck check_homomorphism(const std::vector<int>& f,
                                     const PKAlgebra& src,
                                     const PKAlgebra& dst) {
  if (static_cast<int>(f.size()) != src.size())
    throw Error(Code::TableMismatch, "map is not total on the source carrier");
  for (int v : f)
    if (v < 0 || v >= dst.size())
      throw Error(Code::TableMismatch, "map leaves the target carrier");

  HomomorphismCheck out;
  auto fail = [&](std::string what) {
    out.preserves_operations = false;
    out.witness = std::move(what);
  };
  out.preserves_operations = true;
  if (f[src.bottom()] != dst.bottom())
    fail("f(" + src.label(src.bottom()) + ") != bottom");
  else if (f[src.top()] != dst.top())
    fail("f(" + src.label(src.top()) + ") != top");
  else {
    for (int x = 0; x < src.size() && out.preserves_operations; ++x) {
      if (f[src.neg(x)] != dst.neg(f[x])) {
        fail("f(~" + src.label(x) + ") != ~f(" + src.label(x) + ")");
        break;
      }
      if (f[src.star(x)] != dst.star(f[x])) {
        fail("f(" + src.label(x) + "*) != f(" + src.label(x) + ")*");
        break;
      }
      for (int y = 0; y < src.size(); ++y) {
        if (f[src.join(x, y)] != dst.join(f[x], f[y])) {
          fail("join not preserved at (" + src.label(x) + ", " + src.label(y) +
               ")");
          break;
        }
        if (f[src.meet(x, y)] != dst.meet(f[x], f[y])) {
          fail("meet not preserved at (" + src.label(x) + ", " + src.label(y) +
               ")");
          break;
        }
      }
    }
  }
  out.injective = true;
  for (int x = 0; x < src.size() && out.injective; ++x)
    for (int y = x + 1; y < src.size(); ++y)
      if (f[x] == f[y]) {
        out.injective = false;
        break;
      }
  return out;
}

Bits subalgebra_generated(const PKAlgebra& a, Bits seed) {
  Bits closed = seed | bits::one(a.bottom()) | bits::one(a.top());
  bool grew = true;
  while (grew) {
    grew = false;
    Bits next = closed;
    bits::for_each(closed, [&](int x) {
      next |= bits::one(a.neg(x)) | bits::one(a.star(x));
      bits::for_each(closed, [&](int y) {
        next |= bits::one(a.join(x, y)) | bits::one(a.meet(x, y));
      });
    });
    if (next != closed) {
      closed = next;
      grew = true;
    }
  }
  return closed;
}

std::optional<std::vector<int>> find_isomorphism(const PKAlgebra& a,
                                                 const PKAlgebra& b) {
  if (a.size() != b.size()) return std::nullopt;
  const int n = a.size();
  std::vector<int> ji_a = bits::to_vector(join_irreducibles(a.lattice()));
  Bits ji_b = join_irreducibles(b.lattice());
  if (static_cast<int>(ji_a.size()) != bits::count(ji_b)) return std::nullopt;

  std::vector<int> image(ji_a.size(), -1);
  Bits used = 0;

  // A distributive-lattice map is fixed by its join-irreducible images:
  // f(x) = join of the images of the irreducibles below x.
  auto extend_and_check = [&]() -> std::optional<std::vector<int>> {
    std::vector<int> f(n);
    for (int x = 0; x < n; ++x) {
      int v = b.bottom();
      for (std::size_t k = 0; k < ji_a.size(); ++k)
        if (a.lattice().leq(ji_a[k], x)) v = b.join(v, image[k]);
      f[x] = v;
    }
    HomomorphismCheck hc = check_homomorphism(f, a, b);
    if (hc.is_embedding()) return f;  // equal sizes: injective means bijective
    return std::nullopt;
  };

  auto rec = [&](auto&& self, std::size_t k) -> std::optional<std::vector<int>> {
    if (k == ji_a.size()) return extend_and_check();
    for (int cand : bits::to_vector(ji_b & ~used)) {
      bool consistent = true;
      for (std::size_t p = 0; p < k; ++p) {
        bool ab = a.lattice().leq(ji_a[p], ji_a[k]);
        bool ba = a.lattice().leq(ji_a[k], ji_a[p]);
        if (ab != b.lattice().leq(image[p], cand) ||
            ba != b.lattice().leq(cand, image[p])) {
          consistent = false;
          break;
        }
      }
      if (!consistent) continue;
      image[k] = cand;
      used |= bits::one(cand);
      if (auto f = self(self, k + 1)) return f;
      used &= ~bits::one(cand);
      image[k] = -1;
    }
    return std::nullopt;
  };
  return rec(rec, 0);
}

}  // namespace rpk
