#include "rpk/roughset.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

namespace rpk {
namespace {

std::vector<std::string> numbered_universe(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

std::string set_label(const std::vector<std::string>& universe, Bits s) {
  std::string out = "{";
  bool first = true;
  bits::for_each(s, [&](int i) {
    if (!first) out += ',';
    out += universe[i];
    first = false;
  });
  out += '}';
  return out;
}

}  // namespace

FiniteRelation::FiniteRelation(std::vector<std::string> universe,
                               std::vector<Bits> rows)
    : universe_(std::move(universe)), rows_(std::move(rows)) {}

FiniteRelation FiniteRelation::create(std::vector<std::string> universe,
                                      std::vector<Bits> rows) {
  const int n = static_cast<int>(universe.size());
  if (n > kMaxCarrier) throw Error(Code::CapExceeded, "universe too large");
  if (static_cast<int>(rows.size()) != n)
    throw Error(Code::TableMismatch, "relation table size mismatch");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (universe[i] == universe[j])
        throw Error(Code::DuplicateLabel,
                    "duplicate point '" + universe[i] + "'");
  for (Bits row : rows)
    if ((row & ~bits::full(n)) != 0)
      throw Error(Code::TableMismatch, "relation row outside the universe");
  return FiniteRelation(std::move(universe), std::move(rows));
}

Covering::Covering(std::vector<std::string> universe, std::vector<Bits> blocks)
    : universe_(std::move(universe)), blocks_(std::move(blocks)) {}

Covering Covering::create(std::vector<std::string> universe,
                          std::vector<Bits> blocks) {
  const int n = static_cast<int>(universe.size());
  if (n > kMaxCarrier) throw Error(Code::CapExceeded, "universe too large");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (universe[i] == universe[j])
        throw Error(Code::DuplicateLabel,
                    "duplicate point '" + universe[i] + "'");
  std::sort(blocks.begin(), blocks.end());
  blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
  Bits covered = 0;
  for (Bits b : blocks) {
    if (b == 0) throw Error(Code::NotACovering, "empty block");
    if ((b & ~bits::full(n)) != 0)
      throw Error(Code::NotACovering, "block outside the universe");
    covered |= b;
  }
  if (covered != bits::full(n))
    throw Error(Code::NotACovering, "blocks do not cover the universe");
  return Covering(std::move(universe), std::move(blocks));
}

RelationKind RelationClass::kind() const {
  if (is_equivalence()) return RelationKind::Equivalence;
  if (is_quasiorder()) return RelationKind::Quasiorder;
  if (is_tolerance()) return RelationKind::Tolerance;
  return RelationKind::Other;
}

RelationClass classify_relation(const FiniteRelation& r) {
  const int n = r.size();
  RelationClass out;
  out.reflexive = true;
  out.symmetric = true;
  out.transitive = true;
  for (int x = 0; x < n; ++x) {
    if (!r.related(x, x)) out.reflexive = false;
    bits::for_each(r.row(x), [&](int y) {
      if (!r.related(y, x)) out.symmetric = false;
      if (!bits::subset(r.row(y), r.row(x))) out.transitive = false;
    });
  }
  return out;
}

Bits lower_approx(const FiniteRelation& r, Bits x) {
  if ((x & ~r.universe_mask()) != 0)
    throw Error(Code::UnknownLabel, "subset outside the universe");
  Bits out = 0;
  for (int p = 0; p < r.size(); ++p)
    if (bits::subset(r.row(p), x)) out |= bits::one(p);
  return out;
}

Bits upper_approx(const FiniteRelation& r, Bits x) {
  if ((x & ~r.universe_mask()) != 0)
    throw Error(Code::UnknownLabel, "subset outside the universe");
  Bits out = 0;
  for (int p = 0; p < r.size(); ++p)
    if ((r.row(p) & x) != 0) out |= bits::one(p);
  return out;
}

bool rough_equal(const FiniteRelation& r, Bits x, Bits y) {
  return lower_approx(r, x) == lower_approx(r, y) &&
         upper_approx(r, x) == upper_approx(r, y);
}

std::string RSSystem::pair_label(int i) const {
  return "w" + set_label(relation.universe(), pairs[i].witness);
}

int RSSystem::index_of(Bits lower, Bits upper, const char* op) const {
  auto key = std::make_pair(lower, upper);
  auto it = std::lower_bound(
      pairs.begin(), pairs.end(), key, [](const RoughPair& p, const auto& k) {
        return std::make_pair(p.lower, p.upper) < k;
      });
  if (it == pairs.end() || it->lower != lower || it->upper != upper)
    throw Error(Code::ClosureViolation,
                std::string(op) + " left the rough-set system");
  return static_cast<int>(it - pairs.begin());
}

Poset RSSystem::order_poset() const {
  const int n = size();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back(pair_label(i));
  std::vector<Bits> up(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (leq(i, j)) up[i] |= bits::one(j);
  return Poset::from_up_sets(std::move(labels), std::move(up));
}

RSSystem rs_system(const FiniteRelation& r, int cap) {
  const int n = r.size();
  if (n > cap)
    throw Error(Code::CapExceeded, "subset enumeration capped at " +
                                       std::to_string(cap) + " points");
  // Key packs both masks; safe because the cap keeps them under 32 bits.
  std::unordered_map<std::uint64_t, RoughPair> seen;
  for (Bits x = 0; x <= bits::full(n); ++x) {
    Bits lo = lower_approx(r, x);
    Bits up = upper_approx(r, x);
    std::uint64_t key = (lo << 32) | up;
    seen.emplace(key, RoughPair{lo, up, x});
    if (x == bits::full(n)) break;
  }
  RSSystem out{r, {}, false, std::nullopt};
  out.pairs.reserve(seen.size());
  for (const auto& [key, pair] : seen) out.pairs.push_back(pair);
  std::sort(out.pairs.begin(), out.pairs.end(),
            [](const RoughPair& a, const RoughPair& b) {
              return std::make_pair(a.lower, a.upper) <
                     std::make_pair(b.lower, b.upper);
            });

  const int m = static_cast<int>(out.pairs.size());
  out.is_lattice = true;
  for (int i = 0; i < m && out.is_lattice; ++i)
    for (int j = i + 1; j < m; ++j) {
      int sup = -1, inf = -1;
      for (int k = 0; k < m; ++k) {
        if (out.leq(i, k) && out.leq(j, k)) {
          bool least = true;
          for (int w = 0; w < m && least; ++w)
            if (out.leq(i, w) && out.leq(j, w) && !out.leq(k, w)) least = false;
          if (least) sup = k;
        }
        if (out.leq(k, i) && out.leq(k, j)) {
          bool greatest = true;
          for (int w = 0; w < m && greatest; ++w)
            if (out.leq(w, i) && out.leq(w, j) && !out.leq(w, k))
              greatest = false;
          if (greatest) inf = k;
        }
      }
      if (sup < 0 || inf < 0) {
        out.is_lattice = false;
        out.non_lattice_pair = {i, j};
        break;
      }
    }
  return out;
}

FiniteRelation induced_tolerance(const Covering& c) {
  const int n = c.points();
  std::vector<Bits> rows(n, 0);
  for (Bits b : c.blocks())
    bits::for_each(b, [&](int x) { rows[x] |= b; });
  return FiniteRelation::create(c.universe(), std::move(rows));
}

std::optional<int> removable_block(const Covering& c) {
  const auto& blocks = c.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    Bits rest = 0;
    for (std::size_t j = 0; j < blocks.size(); ++j)
      if (j != i) rest |= blocks[j];
    if (rest == c.universe_mask()) return static_cast<int>(i);
  }
  return std::nullopt;
}

bool is_irredundant(const Covering& c) {
  return !removable_block(c).has_value();
}

namespace {

struct RSLattice {
  RSSystem system;
  Lattice lattice;
};

/// Shared assembly step: the componentwise (or tolerance-adjusted) formula
/// tables must land inside RS and agree with the order-theoretic bounds.
RSLattice rs_lattice_checked(RSSystem sys, FormulaKind kind) {
  if (!sys.is_lattice)
    throw Error(Code::TheoremViolation, "rough-set order is not a lattice");
  Lattice lat = lattice_of(sys.order_poset());
  const int m = sys.size();
  const FiniteRelation& r = sys.relation;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Bits jl = sys.pairs[i].lower | sys.pairs[j].lower;
      Bits ju = sys.pairs[i].upper | sys.pairs[j].upper;
      Bits ml = sys.pairs[i].lower & sys.pairs[j].lower;
      Bits mu = sys.pairs[i].upper & sys.pairs[j].upper;
      if (kind == FormulaKind::Tolerance) {
        jl = lower_approx(r, upper_approx(r, jl));
        mu = upper_approx(r, lower_approx(r, mu));
      }
      if (sys.index_of(jl, ju, "join") != lat.join(i, j) ||
          sys.index_of(ml, mu, "meet") != lat.meet(i, j))
        throw Error(Code::TheoremViolation,
                    "formula meet/join differ from the order bounds");
    }
  return RSLattice{std::move(sys), std::move(lat)};
}

}  // namespace

RSEquivalenceAlgebra rs_algebra_equivalence(const FiniteRelation& e) {
  if (!classify_relation(e).is_equivalence())
    throw Error(Code::NotAnEquivalence, "relation is not an equivalence");
  auto [sys, lat] = rs_lattice_checked(rs_system(e), FormulaKind::Componentwise);
  const int m = sys.size();
  const Bits u = e.universe_mask();
  UnaryTable star(m), plus(m), neg(m);
  for (int i = 0; i < m; ++i) {
    Bits cl = u & ~sys.pairs[i].upper;  // complement's lower approximation
    Bits cu = u & ~sys.pairs[i].lower;  // complement's upper approximation
    star[i] = sys.index_of(cl, cl, "star");
    plus[i] = sys.index_of(cu, cu, "plus");
    neg[i] = sys.index_of(cl, cu, "neg");
  }
  AxiomReport report = axiom_report(lat, &neg, &star, &plus);
  for (Axiom a :
       {Axiom::Distributive, Axiom::Stone, Axiom::DualStone, Axiom::M})
    if (!report.passes(a))
      throw Error(Code::TheoremViolation,
                  "equivalence rough-set algebra fails " + axiom_name(a));
  if (star != pseudocomplement_table(lat) ||
      plus != dual_pseudocomplement_table(lat))
    throw Error(Code::TheoremViolation,
                "formula star/plus differ from the lattice pseudocomplements");
  return RSEquivalenceAlgebra{std::move(sys), std::move(lat), std::move(star),
                              std::move(plus), std::move(neg)};
}

RSQuasiorderAlgebra rs_algebra_quasiorder(const FiniteRelation& q) {
  if (!classify_relation(q).is_quasiorder())
    throw Error(Code::NotAQuasiorder, "relation is not a quasiorder");
  auto [sys, lat] = rs_lattice_checked(rs_system(q), FormulaKind::Componentwise);
  const int m = sys.size();
  const Bits u = q.universe_mask();
  UnaryTable neg(m);
  std::vector<int> imp(m * m);
  for (int i = 0; i < m; ++i)
    neg[i] = sys.index_of(u & ~sys.pairs[i].upper, u & ~sys.pairs[i].lower,
                          "neg");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Bits lc = u & ~sys.pairs[i].lower;
      imp[i * m + j] = sys.index_of(lower_approx(q, lc | sys.pairs[j].lower),
                                    lc | sys.pairs[j].upper, "implication");
    }
  return RSQuasiorderAlgebra{std::move(sys), std::move(lat), std::move(neg),
                             std::move(imp)};
}

RSToleranceAlgebra rs_algebra_tolerance(const Covering& c) {
  if (auto block = removable_block(c))
    throw Error(Code::NotIrredundant,
                "covering is redundant; removable block " +
                    set_label(c.universe(), c.blocks()[*block]));
  FiniteRelation r = induced_tolerance(c);
  auto [sys, lat] = rs_lattice_checked(rs_system(r), FormulaKind::Tolerance);
  const int m = sys.size();
  const Bits u = r.universe_mask();
  UnaryTable neg(m), star(m);
  for (int i = 0; i < m; ++i) {
    Bits cl = u & ~sys.pairs[i].upper;
    Bits cu = u & ~sys.pairs[i].lower;
    neg[i] = sys.index_of(cl, cu, "neg");
    star[i] = sys.index_of(lower_approx(r, cl), upper_approx(r, cl), "star");
  }
  PKAlgebra algebra = pk_algebra(std::move(lat), std::move(neg));
  if (algebra.star_table() != star)
    throw Error(Code::TheoremViolation,
                "formula star differs from the lattice pseudocomplement");
  AxiomReport report = axiom_report(algebra);
  for (Axiom a : {Axiom::M, Axiom::D})
    if (!report.passes(a))
      throw Error(Code::TheoremViolation,
                  "tolerance rough-set algebra fails " + axiom_name(a));
  return RSToleranceAlgebra{std::move(sys), std::move(algebra)};
}

FormulaCheck verify_lattice_formulas(const RSSystem& s, FormulaKind kind,
                                     int family_cap) {
  const int m = s.size();
  const FiniteRelation& r = s.relation;

  auto formula_bounds = [&](const std::vector<int>& family) {
    Bits jl = 0, ju = 0, ml = r.universe_mask(), mu = r.universe_mask();
    for (int i : family) {
      jl |= s.pairs[i].lower;
      ju |= s.pairs[i].upper;
      ml &= s.pairs[i].lower;
      mu &= s.pairs[i].upper;
    }
    if (kind == FormulaKind::Tolerance) {
      jl = lower_approx(r, upper_approx(r, jl));
      mu = upper_approx(r, lower_approx(r, mu));
    }
    return std::make_pair(std::make_pair(jl, ju), std::make_pair(ml, mu));
  };
  auto order_bounds = [&](const std::vector<int>& family) {
    int sup = -1, inf = -1;
    for (int k = 0; k < m; ++k) {
      bool above = true, below = true;
      for (int i : family) {
        above = above && s.leq(i, k);
        below = below && s.leq(k, i);
      }
      if (above && (sup < 0 || s.leq(k, sup))) sup = k;
      if (below && (inf < 0 || s.leq(inf, k))) inf = k;
    }
    // Re-verify minimality/maximality; -1 when the bound is not unique.
    for (int k = 0; k < m; ++k) {
      bool above = true, below = true;
      for (int i : family) {
        above = above && s.leq(i, k);
        below = below && s.leq(k, i);
      }
      if (above && sup >= 0 && !s.leq(sup, k)) sup = -2;
      if (below && inf >= 0 && !s.leq(k, inf)) inf = -2;
    }
    return std::make_pair(sup, inf);
  };
  auto check_family = [&](const std::vector<int>& family) {
    auto [join_pair, meet_pair] = formula_bounds(family);
    auto [sup, inf] = order_bounds(family);
    if (sup < 0 || inf < 0) return false;
    return std::make_pair(s.pairs[sup].lower, s.pairs[sup].upper) ==
               join_pair &&
           std::make_pair(s.pairs[inf].lower, s.pairs[inf].upper) == meet_pair;
  };

  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j)
      if (!check_family({i, j})) return FormulaCheck{false, {i, j}};
  if (m <= family_cap) {
    for (Bits fam = 0; fam < (Bits{1} << m); ++fam) {
      std::vector<int> family = bits::to_vector(fam);
      if (!check_family(family)) return FormulaCheck{false, family};
    }
  }
  return FormulaCheck{true, {}};
}

std::optional<FiniteRelation> find_non_lattice_tolerance(int max_universe) {
  for (int n = 1; n <= max_universe; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    for (Bits mask = 0; mask < (Bits{1} << slots.size()); ++mask) {
      std::vector<Bits> rows(n);
      for (int i = 0; i < n; ++i) rows[i] = bits::one(i);
      for (std::size_t k = 0; k < slots.size(); ++k)
        if (bits::test(mask, static_cast<int>(k))) {
          rows[slots[k].first] |= bits::one(slots[k].second);
          rows[slots[k].second] |= bits::one(slots[k].first);
        }
      FiniteRelation r = FiniteRelation::create(numbered_universe(n), rows);
      if (!rs_system(r).is_lattice) return r;
    }
  }
  return std::nullopt;
}

namespace {

std::vector<Bits> canonical_family(const std::vector<Bits>& blocks, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Bits> best;
  do {
    std::vector<Bits> mapped;
    mapped.reserve(blocks.size());
    for (Bits b : blocks) {
      Bits img = 0;
      bits::for_each(b, [&](int x) { img |= bits::one(perm[x]); });
      mapped.push_back(img);
    }
    std::sort(mapped.begin(), mapped.end());
    if (best.empty() || mapped < best) best = std::move(mapped);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<Covering> enumerate_irredundant_coverings(int n) {
  const Bits full = bits::full(n);
  std::set<std::vector<Bits>> canon;
  std::vector<Bits> chosen;

  auto has_private_points = [&](const std::vector<Bits>& fam) {
    for (std::size_t i = 0; i < fam.size(); ++i) {
      Bits rest = 0;
      for (std::size_t j = 0; j < fam.size(); ++j)
        if (j != i) rest |= fam[j];
      if (bits::subset(fam[i], rest)) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, Bits next_mask, Bits covered) -> void {
    if (covered == full) {
      if (has_private_points(chosen)) canon.insert(canonical_family(chosen, n));
      return;  // any extension of a covering is redundant
    }
    for (Bits b = next_mask; b <= full; ++b) {
      bool comparable = false;
      for (Bits prev : chosen)
        if (bits::subset(prev, b) || bits::subset(b, prev)) {
          comparable = true;
          break;
        }
      if (comparable || b == 0) continue;
      chosen.push_back(b);
      if (has_private_points(chosen)) self(self, b + 1, covered | b);
      chosen.pop_back();
    }
  };
  rec(rec, 1, 0);

  std::vector<Covering> out;
  out.reserve(canon.size());
  for (const auto& fam : canon) {
    std::vector<Bits> blocks = fam;
    out.push_back(Covering::create(numbered_universe(n), std::move(blocks)));
  }
  return out;
}

std::vector<std::vector<Bits>> enumerate_set_partitions(int n) {
  std::vector<std::vector<Bits>> out;
  std::vector<int> assign(n, 0);
  auto rec = [&](auto&& self, int i, int used) -> void {
    if (i == n) {
      std::vector<Bits> blocks(used, 0);
      for (int p = 0; p < n; ++p) blocks[assign[p]] |= bits::one(p);
      out.push_back(std::move(blocks));
      return;
    }
    for (int b = 0; b <= used; ++b) {
      assign[i] = b;
      self(self, i + 1, std::max(used, b + 1));
    }
  };
  if (n > 0) rec(rec, 0, 0);
  return out;
}

FiniteRelation partition_relation(std::vector<std::string> universe,
                                  const std::vector<Bits>& blocks) {
  const int n = static_cast<int>(universe.size());
  std::vector<Bits> rows(n, 0);
  for (Bits b : blocks)
    bits::for_each(b, [&](int x) { rows[x] |= b; });
  Bits covered = 0;
  for (Bits b : blocks) {
    if ((b & covered) != 0)
      throw Error(Code::NotAnEquivalence, "partition blocks overlap");
    covered |= b;
  }
  if (covered != bits::full(n))
    throw Error(Code::NotAnEquivalence, "partition misses points");
  return FiniteRelation::create(std::move(universe), std::move(rows));
}

}  // namespace rpk
