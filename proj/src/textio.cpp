#include "rpk/textio.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace rpk {
namespace {

struct Token {
  std::string text;
  int line;
};

struct SectionLine {
  std::string section;
  int line = 0;
  std::vector<Token> tokens;
};

/// Tokenizes into section records. A '[name]' token opens a record; plain
/// tokens append to the most recent one, so sections may span lines and a
/// repeated header (notably [block]) starts a fresh record.
std::vector<SectionLine> split_sections(const std::string& text) {
  std::vector<SectionLine> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::string token;
    while (ls >> token) {
      if (token.front() == '[') {
        if (token.back() != ']' || token.size() < 3)
          throw ParseError(lineno, "malformed section header '" + token + "'");
        out.push_back(SectionLine{token.substr(1, token.size() - 2), lineno, {}});
        continue;
      }
      if (out.empty())
        throw ParseError(lineno, "token '" + token + "' before any section");
      out.back().tokens.push_back(Token{token, lineno});
    }
  }
  return out;
}

std::pair<std::string, std::string> split_on(const std::string& token,
                                             char sep, int line) {
  auto pos = token.find(sep);
  if (pos == std::string::npos || pos == 0 || pos + 1 == token.size() ||
      token.find(sep, pos + 1) != std::string::npos)
    throw ParseError(line, "expected '<left>" + std::string(1, sep) +
                               "<right>', got '" + token + "'");
  return {token.substr(0, pos), token.substr(pos + 1)};
}

UnaryTable resolve_table(
    const std::vector<std::pair<std::string, std::string>>& entries,
    const Poset& poset, const char* what) {
  UnaryTable table(poset.size(), -1);
  for (const auto& [from, to] : entries) {
    auto fi = poset.index_of(from);
    auto ti = poset.index_of(to);
    if (!fi || !ti)
      throw Error(Code::UnknownLabel, std::string("[") + what +
                                          "] references unknown label '" +
                                          (fi ? to : from) + "'");
    if (table[*fi] != -1)
      throw Error(Code::TableMismatch, std::string("[") + what +
                                           "] has two entries for '" + from +
                                           "'");
    table[*fi] = *ti;
  }
  for (int x = 0; x < poset.size(); ++x)
    if (table[x] == -1)
      throw Error(Code::TableMismatch, std::string("[") + what +
                                           "] is missing an entry for '" +
                                           poset.label(x) + "'");
  return table;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(Code::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

AlgebraDoc parse_algebra_text(const std::string& text) {
  AlgebraDoc doc;
  bool saw_elements = false, saw_covers = false;
  for (const SectionLine& sl : split_sections(text)) {
    if (sl.section == "elements") {
      saw_elements = true;
      for (const Token& t : sl.tokens) doc.elements.push_back(t.text);
    } else if (sl.section == "covers") {
      saw_covers = true;
      for (const Token& t : sl.tokens)
        doc.covers.push_back(split_on(t.text, '<', t.line));
    } else if (sl.section == "neg" || sl.section == "star" ||
               sl.section == "plus") {
      auto& slot = sl.section == "neg"    ? doc.neg
                   : sl.section == "star" ? doc.star
                                          : doc.plus;
      if (!slot) slot.emplace();
      for (const Token& t : sl.tokens)
        slot->push_back(split_on(t.text, ':', t.line));
    } else {
      throw ParseError(sl.line, "unknown section [" + sl.section +
                                    "] in an algebra file");
    }
  }
  if (!saw_elements)
    throw Error(Code::ParseError, "algebra file lacks an [elements] section");
  if (!saw_covers && doc.elements.size() > 1)
    throw Error(Code::ParseError, "algebra file lacks a [covers] section");
  return doc;
}

std::variant<RelationDoc, CoveringDoc> parse_relation_text(
    const std::string& text) {
  std::vector<std::string> universe;
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<std::vector<std::string>> blocks;
  bool reflexive = false, symmetric = false, transitive = false;
  bool saw_pairs = false, saw_blocks = false, saw_universe = false;

  for (const SectionLine& sl : split_sections(text)) {
    if (sl.section == "universe") {
      saw_universe = true;
      for (const Token& t : sl.tokens) universe.push_back(t.text);
    } else if (sl.section == "pairs") {
      saw_pairs = true;
      for (const Token& t : sl.tokens)
        pairs.push_back(split_on(t.text, ',', t.line));
    } else if (sl.section == "block") {
      saw_blocks = true;
      std::vector<std::string> block;
      for (const Token& t : sl.tokens) block.push_back(t.text);
      blocks.push_back(std::move(block));
    } else if (sl.section == "closure") {
      for (const Token& t : sl.tokens) {
        if (t.text == "reflexive")
          reflexive = true;
        else if (t.text == "symmetric")
          symmetric = true;
        else if (t.text == "transitive")
          transitive = true;
        else
          throw ParseError(t.line, "unknown closure keyword '" + t.text + "'");
      }
    } else {
      throw ParseError(sl.line, "unknown section [" + sl.section +
                                    "] in a relation/covering file");
    }
  }
  if (!saw_universe)
    throw Error(Code::ParseError, "file lacks a [universe] section");
  if (saw_pairs && saw_blocks)
    throw Error(Code::ParseError,
                "file mixes [pairs] and [block] sections");
  if (saw_blocks) return CoveringDoc{std::move(universe), std::move(blocks)};
  return RelationDoc{std::move(universe), std::move(pairs), reflexive,
                     symmetric, transitive};
}

LoadedAlgebra assemble_algebra(const AlgebraDoc& doc, bool derive_neg) {
  Poset poset = poset_from_covers(doc.elements, doc.covers);
  Lattice lattice = lattice_of(std::move(poset));

  std::optional<UnaryTable> star, plus, neg;
  try {
    star = pseudocomplement_table(lattice);
  } catch (const Error& e) {
    if (e.code() != Code::NotPseudocomplemented) throw;
  }
  try {
    plus = dual_pseudocomplement_table(lattice);
  } catch (const Error& e) {
    if (e.code() != Code::NotDuallyPseudocomplemented) throw;
  }
  if (doc.star) {
    UnaryTable given = resolve_table(*doc.star, lattice.poset(), "star");
    if (!star || given != *star)
      throw Error(Code::TableMismatch,
                  "[star] is not the pseudocomplement table of the lattice");
  }
  if (doc.plus) {
    UnaryTable given = resolve_table(*doc.plus, lattice.poset(), "plus");
    if (!plus || given != *plus)
      throw Error(
          Code::TableMismatch,
          "[plus] is not the dual pseudocomplement table of the lattice");
  }
  if (doc.neg) neg = resolve_table(*doc.neg, lattice.poset(), "neg");
  // Without a plus of its own, a file with a negation still determines one.
  if (!plus && neg && star) {
    plus.emplace(lattice.size());
    for (int x = 0; x < lattice.size(); ++x)
      (*plus)[x] = (*neg)[(*star)[(*neg)[x]]];
  }

  bool derived = false;
  if (!neg && derive_neg && star && plus) {
    AxiomReport report = axiom_report(lattice, nullptr, &*star, &*plus);
    if (report.passes(Axiom::Distributive) && report.passes(Axiom::Stone) &&
        report.passes(Axiom::DualStone) && report.passes(Axiom::M)) {
      neg = rpk_from_rds(lattice, *star, *plus).neg_table();
      derived = true;
    }
  }
  return LoadedAlgebra{std::move(lattice), std::move(neg), std::move(star),
                       std::move(plus), derived};
}

FiniteRelation assemble_relation(const RelationDoc& doc) {
  const int n = static_cast<int>(doc.universe.size());
  std::vector<Bits> rows(n, 0);
  auto index = [&](const std::string& s) -> int {
    for (int i = 0; i < n; ++i)
      if (doc.universe[i] == s) return i;
    throw Error(Code::UnknownLabel, "unknown point '" + s + "'");
  };
  for (const auto& [a, b] : doc.pairs) rows[index(a)] |= bits::one(index(b));
  if (doc.close_reflexive)
    for (int i = 0; i < n; ++i) rows[i] |= bits::one(i);
  if (doc.close_symmetric)
    for (int i = 0; i < n; ++i)
      bits::for_each(rows[i], [&](int j) { rows[j] |= bits::one(i); });
  if (doc.close_transitive) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i < n; ++i) {
        Bits row = rows[i];
        bits::for_each(rows[i], [&](int j) { row |= rows[j]; });
        if (row != rows[i]) {
          rows[i] = row;
          changed = true;
        }
      }
    }
  }
  return FiniteRelation::create(doc.universe, std::move(rows));
}

Covering assemble_covering(const CoveringDoc& doc) {
  const int n = static_cast<int>(doc.universe.size());
  auto index = [&](const std::string& s) -> int {
    for (int i = 0; i < n; ++i)
      if (doc.universe[i] == s) return i;
    throw Error(Code::UnknownLabel, "unknown point '" + s + "'");
  };
  std::vector<Bits> blocks;
  blocks.reserve(doc.blocks.size());
  for (const auto& labels : doc.blocks) {
    Bits b = 0;
    for (const std::string& s : labels) b |= bits::one(index(s));
    blocks.push_back(b);
  }
  return Covering::create(doc.universe, std::move(blocks));
}

std::string emit_algebra_text(const Lattice& l, const UnaryTable* neg,
                              const UnaryTable* star, const UnaryTable* plus,
                              const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const std::string& c : comments) out << "# " << c << '\n';
  out << "[elements]";
  for (int x = 0; x < l.size(); ++x) out << ' ' << l.label(x);
  out << '\n';
  out << "[covers]\n";
  for (auto [lo, hi] : l.poset().cover_pairs())
    out << l.label(lo) << '<' << l.label(hi) << '\n';
  auto table = [&](const char* name, const UnaryTable& t) {
    out << '[' << name << "]\n";
    for (int x = 0; x < l.size(); ++x)
      out << l.label(x) << ':' << l.label(t[x]) << '\n';
  };
  if (neg) table("neg", *neg);
  if (star) table("star", *star);
  if (plus) table("plus", *plus);
  return out.str();
}

std::string hasse_dot(const Poset& p, const std::string& graph_name) {
  std::ostringstream out;
  out << "digraph " << graph_name << " {\n  rankdir=BT;\n";
  for (int x = 0; x < p.size(); ++x)
    out << "  \"" << p.label(x) << "\";\n";
  for (auto [lo, hi] : p.cover_pairs())
    out << "  \"" << p.label(lo) << "\" -> \"" << p.label(hi) << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace rpk
