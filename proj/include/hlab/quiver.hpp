#pragma once

// Quivers and homogeneous relations between paths.  Composition convention,
// fixed once for the whole library: a*b means "b then a", so a path written
// in traversal order [a1, a2, ..., ak] denotes the product ak * ... * a1,
// with source(path) = source(a1) and target(path) = target(ak).

#include <array>
#include <map>
#include <string>
#include <vector>

#include "hlab/errors.hpp"
#include "hlab/field.hpp"

namespace hlab {

struct Arrow {
  std::string id;
  int source = 0;
  int target = 0;
  int degree = 1;
};

struct Quiver {
  int vertex_count = 0;
  std::vector<Arrow> arrows;

  int arrow_index(const std::string& id) const {
    for (std::size_t k = 0; k < arrows.size(); ++k)
      if (arrows[k].id == id) return static_cast<int>(k);
    throw ParseError("unknown arrow id '" + id + "'");
  }

  void validate() const {
    if (vertex_count <= 0) throw Error("quiver needs at least one vertex");
    std::map<std::string, int> seen;
    for (const auto& a : arrows) {
      if (a.source < 0 || a.source >= vertex_count || a.target < 0 || a.target >= vertex_count)
        throw Error("arrow '" + a.id + "' has out-of-range endpoint");
      if (a.degree <= 0) throw Error("arrow '" + a.id + "' must have positive degree");
      if (!seen.emplace(a.id, 1).second) throw Error("duplicate arrow id '" + a.id + "'");
      if (a.id.empty()) throw Error("empty arrow id");
    }
  }

  int max_arrow_degree() const {
    int m = 1;
    for (const auto& a : arrows) m = std::max(m, a.degree);
    return m;
  }
};

// One term of a relation: coefficient times a path given by arrow ids in
// traversal order.
struct RelationTerm {
  Rational coef;
  std::vector<std::string> arrow_ids;
};

struct Relation {
  std::vector<RelationTerm> terms;
};

struct RelationSet {
  std::vector<Relation> relations;

  // Each relation must be homogeneous: all terms composable with one common
  // source, target and total degree.  Returns (source, target, degree) per
  // relation; throws otherwise.
  std::vector<std::array<int, 3>> validate(const Quiver& q) const {
    std::vector<std::array<int, 3>> sig;
    for (const auto& rel : relations) {
      if (rel.terms.empty()) throw Error("empty relation");
      std::array<int, 3> common{-1, -1, -1};
      for (const auto& term : rel.terms) {
        if (term.arrow_ids.empty()) throw Error("relation term with empty path");
        int src = -1, at = -1, deg = 0;
        for (const auto& id : term.arrow_ids) {
          const Arrow& a = q.arrows[static_cast<std::size_t>(q.arrow_index(id))];
          if (src < 0)
            src = a.source;
          else if (a.source != at)
            throw Error("non-composable path in relation (arrow '" + id + "')");
          at = a.target;
          deg += a.degree;
        }
        std::array<int, 3> s{src, at, deg};
        if (common[0] < 0)
          common = s;
        else if (common != s)
          throw Error("inhomogeneous relation: terms differ in source/target/degree");
      }
      sig.push_back(common);
    }
    return sig;
  }
};

}  // namespace hlab
