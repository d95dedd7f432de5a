#include "rpk/cli.hpp"

#include <sstream>

#include "CLI11.hpp"
#include "rpk/represent.hpp"
#include "rpk/textio.hpp"

namespace rpk {
namespace {

int exit_code_for(Code c) {
  switch (c) {
    case Code::ParseError:
    case Code::DuplicateLabel:
    case Code::UnknownLabel:
    case Code::CycleDetected:
    case Code::NotALattice:
    case Code::CapExceeded:
    case Code::TableMismatch:
    case Code::NotACovering:
      return 2;
    default:
      return 1;
  }
}

std::string set_text(const std::vector<std::string>& labels, Bits s,
                     const char* sep = ",") {
  std::string out = "{";
  bool first = true;
  bits::for_each(s, [&](int i) {
    if (!first) out += sep;
    out += labels[i];
    first = false;
  });
  return out + "}";
}

const std::vector<const char*>& axiom_variables() {
  static const std::vector<const char*> names = {"x", "y", "z"};
  return names;
}

void print_report_line(std::ostream& out, const Lattice& l, Axiom a,
                       const AxiomResult& r, const char* missing) {
  out << "AXIOM " << axiom_name(a) << ": ";
  switch (r.verdict) {
    case Verdict::Pass:
      out << "PASS";
      break;
    case Verdict::Fail: {
      out << "FAIL [counterexample: ";
      for (std::size_t i = 0; i < r.counterexample.size(); ++i) {
        if (i) out << ", ";
        out << axiom_variables()[i] << "=" << l.label(r.counterexample[i]);
      }
      out << "]";
      break;
    }
    case Verdict::NotApplicable:
      out << "N/A (needs " << missing << ")";
      break;
  }
  out << "\n";
}

const char* axiom_needs(Axiom a) {
  switch (a) {
    case Axiom::Distributive: return "";
    case Axiom::DM1:
    case Axiom::DM2:
    case Axiom::K:
    case Axiom::Eq5: return "a negation table";
    case Axiom::Eq6:
    case Axiom::Eq7: return "negation and both pseudocomplements";
    case Axiom::M:
    case Axiom::D: return "both pseudocomplements";
    case Axiom::Stone:
    case Axiom::DerivedStarLaws: return "a pseudocomplement";
    case Axiom::DualStone:
    case Axiom::DerivedPlusLaws: return "a dual pseudocomplement";
  }
  return "";
}

int cmd_check(const std::string& path, const std::string& axioms_flag,
              std::ostream& out) {
  LoadedAlgebra loaded = assemble_algebra(parse_algebra_text(read_file(path)),
                                          /*derive_neg=*/false);
  std::vector<Axiom> selected;
  bool explicit_selection = false;
  if (axioms_flag.empty() || axioms_flag == "all") {
    selected.assign(kAllAxioms.begin(), kAllAxioms.end());
  } else {
    explicit_selection = true;
    std::istringstream ss(axioms_flag);
    std::string name;
    while (std::getline(ss, name, ',')) {
      auto a = axiom_from_name(name);
      if (!a)
        throw Error(Code::ParseError, "unknown axiom '" + name + "'");
      selected.push_back(*a);
    }
  }

  AxiomReport report = axiom_report(
      loaded.lattice, loaded.neg ? &*loaded.neg : nullptr,
      loaded.star ? &*loaded.star : nullptr,
      loaded.plus ? &*loaded.plus : nullptr);
  bool any_fail = false, any_na = false;
  for (Axiom a : selected) {
    const AxiomResult& r = report[a];
    print_report_line(out, loaded.lattice, a, r, axiom_needs(a));
    any_fail = any_fail || r.verdict == Verdict::Fail;
    any_na = any_na || r.verdict == Verdict::NotApplicable;
  }
  if (any_fail) return 1;
  if (any_na && explicit_selection) return 2;
  return 0;
}

PKAlgebra require_pk(const LoadedAlgebra& loaded) {
  if (!loaded.neg) {
    // Explain the most likely reason the negation could not be derived.
    if (loaded.star && loaded.plus) {
      AxiomReport r = axiom_report(loaded.lattice, nullptr, &*loaded.star,
                                   &*loaded.plus);
      if (!r.passes(Axiom::M))
        throw Error(Code::NotRegular, "algebra is not regular: (M) fails");
      if (!r.passes(Axiom::Stone))
        throw Error(Code::PreconditionViolated,
                    "no [neg] given and none derivable: STONE fails");
    }
    throw Error(Code::PreconditionViolated,
                "no [neg] given and none derivable");
  }
  return pk_algebra(loaded.lattice, *loaded.neg);
}

void print_filter_listing(std::ostream& out, const PKAlgebra& pk,
                          const KVSpace& space, const KVReport& report) {
  std::vector<PrimeFilter> filters = prime_filters(pk.lattice());
  out << "filters: " << filters.size() << "\n";
  for (std::size_t i = 0; i < filters.size(); ++i)
    out << space.poset.label(static_cast<int>(i)) << " = "
        << set_text(pk.lattice().poset().labels(), filters[i].members) << "\n";
  out << "order:\n";
  for (auto [lo, hi] : space.poset.cover_pairs())
    out << space.poset.label(lo) << " < " << space.poset.label(hi) << "\n";
  out << "g:\n";
  for (int i = 0; i < space.size(); ++i)
    out << "g(" << space.poset.label(i) << ") = "
        << space.poset.label(space.g[i]) << "\n";
  auto line = [&](const char* name, const ConditionResult& c) {
    out << name << ": " << (c.pass ? "PASS" : "FAIL");
    if (!c.pass) {
      out << " [";
      for (std::size_t i = 0; i < c.counterexample.size(); ++i)
        out << (i ? ", " : "") << space.poset.label(c.counterexample[i]);
      out << "]";
    }
    out << "\n";
  };
  line("J1", report.j1);
  line("J2", report.j2);
  line("J3", report.j3);
  line("J4", report.j4);
  line("fixedpoint-isolation", report.fixedpoint_isolation);
}

int cmd_primefilters(const std::string& path, std::ostream& out) {
  LoadedAlgebra loaded = assemble_algebra(parse_algebra_text(read_file(path)),
                                          /*derive_neg=*/true);
  if (!loaded.neg) {
    std::vector<PrimeFilter> filters = prime_filters(loaded.lattice);
    out << "filters: " << filters.size() << "\n";
    for (const PrimeFilter& f : filters)
      out << "\u2191" << loaded.lattice.label(f.generator) << " = "
          << set_text(loaded.lattice.poset().labels(), f.members) << "\n";
    out << "negation: none available; g and (J1)-(J4) omitted\n";
    return 0;
  }
  PKAlgebra pk = pk_algebra(loaded.lattice, *loaded.neg);
  KVSpace space = prime_filter_space(pk);
  KVReport report = validate_kv(space);
  print_filter_listing(out, pk, space, report);
  return report.valid() ? 0 : 1;
}

int cmd_kvspace(const std::string& path, std::ostream& out) {
  LoadedAlgebra loaded = assemble_algebra(parse_algebra_text(read_file(path)),
                                          /*derive_neg=*/true);
  PKAlgebra pk = require_pk(loaded);
  KVSpace space = kv_space_of_algebra(pk);
  print_filter_listing(out, pk, space, validate_kv(space));
  KVLevels lv = levels(space);
  std::vector<std::string> point_labels = space.poset.labels();
  out << "levels: lower = " << set_text(point_labels, lv.lower, ", ")
      << "; upper = " << set_text(point_labels, lv.upper, ", ") << "\n";
  return 0;
}

int cmd_roughset(const std::string& path, const std::string& kind,
                 bool emit_algebra, std::ostream& out) {
  auto doc = parse_relation_text(read_file(path));
  std::ostringstream summary;
  std::string emitted;

  if (std::holds_alternative<CoveringDoc>(doc)) {
    if (kind != "auto" && kind != "tolerance")
      throw Error(Code::KindMismatch,
                  "covering files describe tolerances, not " + kind);
    Covering cov = assemble_covering(std::get<CoveringDoc>(doc));
    RSToleranceAlgebra rsa = rs_algebra_tolerance(cov);
    summary << "universe: " << cov.points() << " points\n"
            << "kind: tolerance induced by an irredundant covering\n"
            << "rough sets: " << rsa.system.size() << "\n"
            << "lattice: yes\n";
    emitted = emit_algebra_text(
        rsa.algebra.lattice(), &rsa.algebra.neg_table(),
        &rsa.algebra.star_table(), nullptr,
        {"pseudocomplemented Kleene algebra of " + std::to_string(
             rsa.system.size()) + " rough sets"});
  } else {
    FiniteRelation rel = assemble_relation(std::get<RelationDoc>(doc));
    RelationClass cls = classify_relation(rel);
    std::string effective = kind;
    if (kind == "auto") {
      switch (cls.kind()) {
        case RelationKind::Equivalence: effective = "equivalence"; break;
        case RelationKind::Quasiorder: effective = "quasiorder"; break;
        case RelationKind::Tolerance: effective = "tolerance"; break;
        default:
          throw Error(Code::KindMismatch,
                      "relation is not reflexive, cannot classify");
      }
    }
    if (effective == "equivalence") {
      if (!cls.is_equivalence())
        throw Error(Code::KindMismatch, "relation is not an equivalence");
      RSEquivalenceAlgebra rsa = rs_algebra_equivalence(rel);
      summary << "universe: " << rel.size() << " points\n"
              << "kind: equivalence\n"
              << "rough sets: " << rsa.system.size() << "\n"
              << "lattice: yes\n";
      emitted = emit_algebra_text(
          rsa.lattice, &rsa.neg, &rsa.star, &rsa.plus,
          {"regular double Stone algebra of " +
           std::to_string(rsa.system.size()) + " rough sets"});
    } else if (effective == "quasiorder") {
      if (!cls.is_quasiorder())
        throw Error(Code::KindMismatch, "relation is not a quasiorder");
      RSQuasiorderAlgebra rsa = rs_algebra_quasiorder(rel);
      summary << "universe: " << rel.size() << " points\n"
              << "kind: quasiorder\n"
              << "rough sets: " << rsa.system.size() << "\n"
              << "lattice: yes\n";
      emitted = emit_algebra_text(
          rsa.lattice, &rsa.neg, nullptr, nullptr,
          {"Kleene lattice of " + std::to_string(rsa.system.size()) +
           " quasiorder rough sets (implication not serialized)"});
    } else if (effective == "tolerance") {
      if (!cls.is_tolerance())
        throw Error(Code::KindMismatch, "relation is not a tolerance");
      // A bare tolerance relation is not known to come from an irredundant
      // covering, so only the ordered family is built.
      RSSystem sys = rs_system(rel);
      summary << "universe: " << rel.size() << " points\n"
              << "kind: tolerance (general; algebra constructors refused)\n"
              << "rough sets: " << sys.size() << "\n"
              << "lattice: " << (sys.is_lattice ? "yes" : "no") << "\n";
      Poset order = sys.order_poset();
      std::ostringstream body;
      body << "# rough-set order of a general tolerance\n"
           << "# is-lattice: " << (sys.is_lattice ? "yes" : "no") << "\n";
      body << "[elements]";
      for (int i = 0; i < order.size(); ++i) body << ' ' << order.label(i);
      body << "\n[covers]\n";
      for (auto [lo, hi] : order.cover_pairs())
        body << order.label(lo) << '<' << order.label(hi) << '\n';
      emitted = body.str();
    } else {
      throw Error(Code::KindMismatch, "unknown kind '" + kind + "'");
    }
  }
  if (emit_algebra)
    out << emitted;
  else
    out << summary.str();
  return 0;
}

int cmd_represent(const std::string& path, const std::string& mode,
                  int max_universe, std::ostream& out) {
  LoadedAlgebra loaded = assemble_algebra(parse_algebra_text(read_file(path)),
                                          /*derive_neg=*/true);
  PKAlgebra pk = require_pk(loaded);
  RepresentationWitness w = mode == "mainB"
                                ? verify_theorem_mainB(pk, max_universe)
                                : verify_theorem_main(pk, max_universe);
  out << "witness universe:";
  for (const std::string& p : w.universe) out << ' ' << p;
  out << "\nwitness " << (mode == "mainB" ? "partition:" : "covering:");
  for (Bits b : w.blocks) out << ' ' << set_text(w.universe, b, " ");
  out << "\nembedding:\n";
  for (int x = 0; x < pk.size(); ++x) {
    const RoughPair& p = w.pairs[w.embedding[x]];
    out << pk.label(x) << " -> (" << set_text(w.universe, p.lower) << ", "
        << set_text(w.universe, p.upper) << ")\n";
  }
  return 0;
}

int cmd_negations(const std::string& path, std::ostream& out) {
  LoadedAlgebra loaded = assemble_algebra(parse_algebra_text(read_file(path)),
                                          /*derive_neg=*/false);
  std::vector<UnaryTable> tables = enumerate_kleene_negations(loaded.lattice);
  out << "kleene negations: " << tables.size() << "\n";
  for (std::size_t i = 0; i < tables.size(); ++i) {
    out << "negation " << (i + 1) << ":";
    for (int x = 0; x < loaded.lattice.size(); ++x)
      out << ' ' << loaded.lattice.label(x) << ':'
          << loaded.lattice.label(tables[i][x]);
    out << "\n";
  }
  return tables.empty() ? 1 : 0;
}

int cmd_enumerate(int max_points, std::ostream& out) {
  std::vector<KVSpace> spaces = enumerate_kv_spaces(max_points);
  int index = 0;
  for (const KVSpace& k : spaces) {
    int fixed = 0;
    for (int x = 0; x < k.size(); ++x)
      if (k.g[x] == x) ++fixed;
    UpsetAlgebra ua = upset_algebra(k);
    bool stone = axiom_report(ua.algebra).passes(Axiom::Stone);
    out << "class " << ++index << ": points=" << k.size()
        << " pairs=" << (k.size() - fixed) / 2 << " fixed=" << fixed
        << " disjoint=" << (is_disjoint_short_chains(k.poset) ? "yes" : "no")
        << " upsets=" << ua.family.size()
        << " STONE=" << (stone ? "PASS" : "FAIL") << "\n";
  }
  out << "total: " << spaces.size() << " classes (max " << max_points
      << " points)\n";
  return 0;
}

int cmd_export_dot(const std::string& path, const std::string& what,
                   std::ostream& out) {
  AlgebraDoc doc = parse_algebra_text(read_file(path));
  if (what == "filters") {
    Lattice lattice = lattice_of(poset_from_covers(doc.elements, doc.covers));
    std::vector<PrimeFilter> filters = prime_filters(lattice);
    const int n = static_cast<int>(filters.size());
    std::vector<std::string> labels;
    std::vector<Bits> up(n, 0);
    for (const PrimeFilter& f : filters)
      labels.push_back("\u2191" + lattice.label(f.generator));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (bits::subset(filters[i].members, filters[j].members))
          up[i] |= bits::one(j);
    out << hasse_dot(Poset::from_up_sets(std::move(labels), std::move(up)),
                     "filters");
  } else {
    out << hasse_dot(poset_from_covers(doc.elements, doc.covers));
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"finite rough-set and pseudocomplemented Kleene algebras"};
  app.name("rpk");
  app.require_subcommand(1);

  std::string path, axioms, kind = "auto", mode = "main", what = "hasse";
  std::string emit;
  int max_universe = 4, max_points = 4;

  CLI::App* check = app.add_subcommand("check", "report axiom verdicts");
  check->add_option("file", path)->required();
  check->add_option("--axioms", axioms,
                    "comma-separated axiom ids (default: all)");

  CLI::App* pf = app.add_subcommand("primefilters", "list prime filters");
  pf->add_option("file", path)->required();

  CLI::App* kv =
      app.add_subcommand("kvspace", "prime-filter Kleene-Varlet space");
  kv->add_option("file", path)->required();

  CLI::App* rs =
      app.add_subcommand("roughset", "rough-set algebra of a relation/covering");
  rs->add_option("file", path)->required();
  rs->add_option("--kind", kind)
      ->check(CLI::IsMember({"auto", "equivalence", "quasiorder", "tolerance"}));
  rs->add_option("--emit", emit)->check(CLI::IsMember({"algebra"}));

  CLI::App* rep =
      app.add_subcommand("represent", "rough-set representation witness");
  rep->add_option("file", path)->required();
  rep->add_option("--mode", mode)->check(CLI::IsMember({"main", "mainB"}));
  rep->add_option("--max-universe", max_universe)->check(CLI::Range(1, 6));

  CLI::App* negs =
      app.add_subcommand("negations", "enumerate Kleene negations");
  negs->add_option("file", path)->required();

  CLI::App* en =
      app.add_subcommand("enumerate", "catalog Kleene-Varlet spaces");
  en->add_option("--max-points", max_points)->check(CLI::Range(1, 8));
  en->add_option("--emit", emit)->check(CLI::IsMember({"catalog"}));

  CLI::App* dot = app.add_subcommand("export-dot", "DOT of the cover relation");
  dot->add_option("file", path)->required();
  dot->add_option("--what", what)->check(CLI::IsMember({"hasse", "filters"}));

  std::vector<const char*> argv;
  argv.push_back("rpk");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return cmd_check(path, axioms, out);
    if (pf->parsed()) return cmd_primefilters(path, out);
    if (kv->parsed()) return cmd_kvspace(path, out);
    if (rs->parsed()) return cmd_roughset(path, kind, emit == "algebra", out);
    if (rep->parsed()) return cmd_represent(path, mode, max_universe, out);
    if (negs->parsed()) return cmd_negations(path, out);
    if (en->parsed()) return cmd_enumerate(max_points, out);
    if (dot->parsed()) return cmd_export_dot(path, what, out);
  } catch (const Error& e) {
    err << "error [" << code_name(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return 0;
}

}  // namespace rpk
