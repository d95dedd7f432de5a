#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rpk/algebra.hpp"
#include "rpk/roughset.hpp"

namespace rpk {

/// Parsed algebra file: bracketed sections, '#' comments, whitespace tokens.
struct AlgebraDoc {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;  // "x<y" entries
  std::optional<std::vector<std::pair<std::string, std::string>>> neg;
  std::optional<std::vector<std::pair<std::string, std::string>>> star;
  std::optional<std::vector<std::pair<std::string, std::string>>> plus;
};

struct RelationDoc {
  std::vector<std::string> universe;
  std::vector<std::pair<std::string, std::string>> pairs;  // "x,y" entries
  bool close_reflexive = false;
  bool close_symmetric = false;
  bool close_transitive = false;
};

struct CoveringDoc {
  std::vector<std::string> universe;
  std::vector<std::vector<std::string>> blocks;  // one [block] line each
};

AlgebraDoc parse_algebra_text(const std::string& text);
std::variant<RelationDoc, CoveringDoc> parse_relation_text(
    const std::string& text);

std::string read_file(const std::string& path);

/// Lattice plus whatever unary tables the file carried or the lattice
/// determines. star/plus are the computed pseudocomplement tables (validated
/// against the file when given); neg comes from the file or, on request, from
/// the double-Stone correspondence when the lattice admits it.
struct LoadedAlgebra {
  Lattice lattice;
  std::optional<UnaryTable> neg;
  std::optional<UnaryTable> star;
  std::optional<UnaryTable> plus;
  bool neg_derived = false;
};

LoadedAlgebra assemble_algebra(const AlgebraDoc& doc, bool derive_neg);
FiniteRelation assemble_relation(const RelationDoc& doc);
Covering assemble_covering(const CoveringDoc& doc);

/// Canonical emission: elements in carrier order, covers and tables one entry
/// per line in carrier order. parse(emit(..)) is byte-stable.
std::string emit_algebra_text(const Lattice& l, const UnaryTable* neg,
                              const UnaryTable* star, const UnaryTable* plus,
                              const std::vector<std::string>& comments = {});

/// DOT digraph of the cover relation, bottom-to-top rank direction,
/// deterministic node and edge order.
std::string hasse_dot(const Poset& p, const std::string& graph_name = "hasse");

}  // namespace rpk
