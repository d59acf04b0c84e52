#pragma once

// Textual algebra description format.  Canonical form (what serialize emits):
//
//   vertices <N>
//   arrow <id> <source> <target> <degree>
//   rel <coef> <arrow-id>... [+ <coef> <arrow-id>... | - <coef> <arrow-id>...]...
//
// One declaration per line; single spaces; '#' starts a comment line; arrow
// ids appear in traversal order within a relation term ("first applied
// first"); coefficients are rationals p or p/q in lowest terms.  A sign token
// between terms multiplies the following coefficient.  Arrow ids must not
// themselves parse as rationals or signs.  parse(serialize(x)) returns x, and
// serialize(parse(f)) == f for canonical files.

#include <sstream>
#include <string>
#include <vector>

#include "hlab/errors.hpp"
#include "hlab/quiver.hpp"

namespace hlab {

struct AlgebraDescription {
  Quiver quiver;
  RelationSet relations;
};

namespace detail {

inline bool is_rational_token(const std::string& t) {
  if (t.empty()) return false;
  std::size_t k = 0;
  if (t[0] == '-' || t[0] == '+') k = 1;
  if (k >= t.size() || !std::isdigit(static_cast<unsigned char>(t[k]))) return false;
  bool slash = false;
  for (; k < t.size(); ++k) {
    if (t[k] == '/') {
      if (slash) return false;
      slash = true;
    } else if (!std::isdigit(static_cast<unsigned char>(t[k]))) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

inline std::string serialize_algebra(const AlgebraDescription& desc) {
  std::ostringstream os;
  os << "vertices " << desc.quiver.vertex_count << "\n";
  for (const auto& a : desc.quiver.arrows) {
    if (detail::is_rational_token(a.id) || a.id == "+" || a.id == "-")
      throw Error("arrow id '" + a.id + "' would be ambiguous in the file format");
    os << "arrow " << a.id << " " << a.source << " " << a.target << " " << a.degree << "\n";
  }
  for (const auto& rel : desc.relations.relations) {
    os << "rel";
    for (std::size_t t = 0; t < rel.terms.size(); ++t) {
      Rational c = rel.terms[t].coef;
      if (t == 0) {
        os << " " << c.str();
      } else if (c.raw() < 0) {
        os << " - " << (-c).str();
      } else {
        os << " + " << c.str();
      }
      for (const auto& id : rel.terms[t].arrow_ids) os << " " << id;
    }
    os << "\n";
  }
  return os.str();
}

inline AlgebraDescription parse_algebra(const std::string& text) {
  AlgebraDescription desc;
  bool saw_vertices = false;
  std::istringstream lines(text);
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    std::string t;
    while (ls >> t) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;
    auto fail = [&](const std::string& msg) -> void {
      throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    };
    if (tok[0] == "vertices") {
      if (saw_vertices) fail("duplicate vertices line");
      if (tok.size() != 2 || !detail::is_rational_token(tok[1])) fail("expected 'vertices <N>'");
      desc.quiver.vertex_count = std::stoi(tok[1]);
      saw_vertices = true;
    } else if (tok[0] == "arrow") {
      if (!saw_vertices) fail("arrow before vertices");
      if (tok.size() != 5) fail("expected 'arrow <id> <src> <dst> <deg>'");
      if (detail::is_rational_token(tok[1]) || tok[1] == "+" || tok[1] == "-")
        fail("arrow id '" + tok[1] + "' is ambiguous");
      Arrow a;
      a.id = tok[1];
      try {
        a.source = std::stoi(tok[2]);
        a.target = std::stoi(tok[3]);
        a.degree = std::stoi(tok[4]);
      } catch (const std::exception&) {
        fail("bad arrow numbers");
      }
      desc.quiver.arrows.push_back(std::move(a));
    } else if (tok[0] == "rel") {
      if (!saw_vertices) fail("rel before vertices");
      Relation rel;
      std::size_t k = 1;
      bool negate = false;
      while (k < tok.size()) {
        if (!detail::is_rational_token(tok[k])) fail("expected coefficient, got '" + tok[k] + "'");
        RelationTerm term;
        term.coef = Rational::parse(tok[k]);
        if (negate) term.coef = -term.coef;
        ++k;
        while (k < tok.size() && tok[k] != "+" && tok[k] != "-") {
          term.arrow_ids.push_back(tok[k]);
          ++k;
        }
        if (term.arrow_ids.empty()) fail("relation term without arrows");
        rel.terms.push_back(std::move(term));
        if (k < tok.size()) {
          negate = (tok[k] == "-");
          ++k;
          if (k == tok.size()) fail("dangling sign");
        }
      }
      if (rel.terms.empty()) fail("empty relation");
      desc.relations.relations.push_back(std::move(rel));
    } else {
      fail("unknown directive '" + tok[0] + "'");
    }
  }
  if (!saw_vertices) throw ParseError("missing vertices line");
  desc.quiver.validate();
  desc.relations.validate(desc.quiver);  // ids resolvable, homogeneity
  return desc;
}

}  // namespace hlab
