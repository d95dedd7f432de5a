#include "rpk/kvspace.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace rpk {
namespace {

void require_valid(const KVSpace& k) {
  if (!validate_kv(k).valid())
    throw Error(Code::InvalidSpace, "not a Kleene-Varlet space");
}

std::string upset_label(const Poset& p, Bits members) {
  std::string out = "{";
  bool first = true;
  bits::for_each(members, [&](int x) {
    if (!first) out += ',';
    out += p.label(x);
    first = false;
  });
  return out + "}";
}

}  // namespace

KVReport validate_kv(const Poset& poset, const UnaryTable& g) {
  const int n = poset.size();
  if (static_cast<int>(g.size()) != n)
    throw Error(Code::TableMismatch, "g is not total on the carrier");
  for (int v : g)
    if (v < 0 || v >= n)
      throw Error(Code::TableMismatch, "g maps outside the carrier");

  KVReport report;
  for (int x = 0; x < n && report.j1.pass; ++x)
    for (int y = 0; y < n; ++y)
      if (poset.leq(x, y) && !poset.leq(g[y], g[x])) {
        report.j1 = {false, {x, y}};
        break;
      }
  for (int x = 0; x < n; ++x)
    if (g[g[x]] != x) {
      report.j2 = {false, {x}};
      break;
    }
  for (int x = 0; x < n; ++x)
    if (!poset.leq(x, g[x]) && !poset.leq(g[x], x)) {
      report.j3 = {false, {x}};
      break;
    }
  for (int x = 0; x < n && report.j4.pass; ++x)
    for (int y = 0; y < n && report.j4.pass; ++y)
      for (int z = 0; z < n; ++z)
        if (poset.lt(x, y) && poset.lt(y, z)) {
          report.j4 = {false, {x, y, z}};
          break;
        }
  for (int x = 0; x < n && report.fixedpoint_isolation.pass; ++x) {
    if (g[x] != x) continue;
    for (int y = 0; y < n; ++y)
      if (y != x && (poset.leq(x, y) || poset.leq(y, x))) {
        report.fixedpoint_isolation = {false, {x, y}};
        break;
      }
  }
  return report;
}

KVReport validate_kv(const KVSpace& k) { return validate_kv(k.poset, k.g); }

KVLevels levels(const KVSpace& k) {
  require_valid(k);
  KVLevels out{0, 0};
  for (int x = 0; x < k.size(); ++x) {
    if (k.poset.leq(x, k.g[x]))
      out.lower |= bits::one(x);
    else
      out.upper |= bits::one(x);
  }
  return out;
}

Bits neg_on_upsets(const KVSpace& k, Bits a) {
  if (upward_closure(k.poset, a) != a)
    throw Error(Code::NotAnUpset, "argument is not an upset");
  Bits out = 0;
  for (int x = 0; x < k.size(); ++x)
    if (!bits::test(a, k.g[x])) out |= bits::one(x);
  return out;
}

UpsetAlgebra upset_algebra(const KVSpace& k) {
  require_valid(k);
  UpsetFamily family = all_upsets(k.poset);
  const int m = family.size();

  std::vector<std::string> labels;
  labels.reserve(m);
  for (Bits a : family.members) labels.push_back(upset_label(k.poset, a));
  std::vector<Bits> up(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (bits::subset(family.members[i], family.members[j]))
        up[i] |= bits::one(j);
  Lattice lat = lattice_of(Poset::from_up_sets(std::move(labels), std::move(up)));

  UnaryTable neg(m), star_formula(m);
  for (int i = 0; i < m; ++i) {
    neg[i] = family.index_of(neg_on_upsets(k, family.members[i]));
    Bits st = 0;
    for (int x = 0; x < k.size(); ++x)
      if ((k.poset.up_set(x) & family.members[i]) == 0) st |= bits::one(x);
    star_formula[i] = family.index_of(st);
  }
  PKAlgebra algebra = pk_algebra(std::move(lat), std::move(neg));
  if (algebra.star_table() != star_formula)
    throw Error(Code::TheoremViolation,
                "upset pseudocomplement formula disagrees with the lattice");
  AxiomReport report = axiom_report(algebra);
  for (Axiom a : {Axiom::M, Axiom::D})
    if (!report.passes(a))
      throw Error(Code::TheoremViolation,
                  "upset algebra fails " + axiom_name(a));
  return UpsetAlgebra{std::move(family), std::move(algebra)};
}

Bits stonean_star(const KVSpace& k, Bits a) {
  require_valid(k);
  if (!is_disjoint_short_chains(k.poset))
    throw Error(Code::PreconditionViolated,
                "carrier is not a disjoint union of short chains");
  if (upward_closure(k.poset, a) != a)
    throw Error(Code::NotAnUpset, "argument is not an upset");
  Bits g_image = 0;
  bits::for_each(a, [&](int x) { g_image |= bits::one(k.g[x]); });
  return k.poset.carrier() & ~(a | g_image);
}

FrameReport is_double_stone_frame(const Poset& p) {
  const int n = p.size();
  Bits maximal = 0, minimal = 0;
  for (int x = 0; x < n; ++x) {
    if ((p.up_set(x) & ~bits::one(x)) == 0) maximal |= bits::one(x);
    if ((p.down_set(x) & ~bits::one(x)) == 0) minimal |= bits::one(x);
  }
  FrameReport out;
  out.is_frame = true;
  out.points.resize(n);
  for (int x = 0; x < n; ++x) {
    out.points[x].maximals_above = bits::count(p.up_set(x) & maximal);
    out.points[x].minimals_below = bits::count(p.down_set(x) & minimal);
    if (out.points[x].maximals_above != 1 || out.points[x].minimals_below != 1)
      out.is_frame = false;
  }
  return out;
}

std::pair<std::vector<Bits>, UnaryTable> kv_canonical_key(const KVSpace& k) {
  const int n = k.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Bits> best_up;
  UnaryTable best_g;
  do {
    std::vector<Bits> up(n, 0);
    UnaryTable g(n);
    for (int x = 0; x < n; ++x) {
      bits::for_each(k.poset.up_set(x),
                     [&](int y) { up[perm[x]] |= bits::one(perm[y]); });
      g[perm[x]] = perm[k.g[x]];
    }
    if (best_up.empty() || std::make_pair(up, g) < std::make_pair(best_up, best_g)) {
      best_up = std::move(up);
      best_g = std::move(g);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {best_up, best_g};
}

bool kv_isomorphic(const KVSpace& a, const KVSpace& b) {
  return a.size() == b.size() && kv_canonical_key(a) == kv_canonical_key(b);
}

std::vector<KVSpace> enumerate_kv_spaces(int max_points) {
  if (max_points > 8)
    throw Error(Code::CapExceeded, "space enumeration capped at 8 points");

  std::vector<KVSpace> out;
  for (int n = 1; n <= max_points; ++n) {
    std::set<std::pair<std::vector<Bits>, UnaryTable>> keys;
    // Every valid space is m matched strict pairs (lower i under upper i,
    // with a symmetric extra-comparability matrix) plus isolated fixed
    // points; J1-J4 hold by construction.
    for (int m = 0; 2 * m <= n; ++m) {
      std::vector<std::pair<int, int>> slots;
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) slots.emplace_back(i, j);
      for (Bits mask = 0; mask < (Bits{1} << slots.size()); ++mask) {
        std::vector<Bits> up(n);
        UnaryTable g(n);
        for (int x = 0; x < n; ++x) {
          up[x] = bits::one(x);
          g[x] = x;
        }
        auto relate = [&](int lo, int hi) { up[lo] |= bits::one(m + hi); };
        for (int i = 0; i < m; ++i) {
          relate(i, i);
          g[i] = m + i;
          g[m + i] = i;
        }
        for (std::size_t s = 0; s < slots.size(); ++s)
          if (bits::test(mask, static_cast<int>(s))) {
            relate(slots[s].first, slots[s].second);
            relate(slots[s].second, slots[s].first);
          }
        std::vector<std::string> labels;
        for (int i = 1; i <= n; ++i) labels.push_back("p" + std::to_string(i));
        KVSpace space{Poset::from_up_sets(std::move(labels), std::move(up)),
                      std::move(g)};
        keys.insert(kv_canonical_key(space));
      }
    }
    for (const auto& [up, g] : keys) {
      std::vector<std::string> labels;
      for (int i = 1; i <= n; ++i) labels.push_back("p" + std::to_string(i));
      std::vector<Bits> rows = up;
      out.push_back(
          KVSpace{Poset::from_up_sets(std::move(labels), std::move(rows)), g});
    }
  }
  return out;
}

}  // namespace rpk
