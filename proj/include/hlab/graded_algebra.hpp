#pragma once

// Graded path algebras with homogeneous relations, stored as per-degree bases
// with exact structure constants.
//
// Degree-d basis construction: the degree-d component of the two-sided ideal
// generated by the relations is the span of all padded products p*r*q of
// total degree d; its row-echelon form (columns ordered by path) determines
// pivot paths, and the remaining paths represent a basis of the quotient.
// Structure constants reduce concatenated paths against the same echelon, so
// ties are broken identically everywhere and rebuilds are reproducible.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hlab/dim_table.hpp"
#include "hlab/errors.hpp"
#include "hlab/quiver.hpp"
#include "hlab/resource.hpp"
#include "hlab/sparse_matrix.hpp"

namespace hlab {

template <class K>
using LinComb = std::vector<std::pair<int, typename K::Scalar>>;  // sorted by basis index

namespace detail {

template <class K>
void lincomb_add(LinComb<K>& dst, int idx, const typename K::Scalar& c) {
  auto it = std::lower_bound(dst.begin(), dst.end(), idx,
                             [](const auto& a, int b) { return a.first < b; });
  if (it != dst.end() && it->first == idx) {
    it->second += c;
    if (it->second.is_zero()) dst.erase(it);
  } else if (!c.is_zero()) {
    dst.insert(it, {idx, c});
  }
}

struct PathRec {
  int src = 0, tgt = 0, degree = 0;
  std::vector<int> arrows;  // traversal order
};

}  // namespace detail

struct BasisElement {
  int source = 0;  // a = e_target * a * e_source
  int target = 0;
  int degree = 0;
  std::string label;
};

template <class K>
class GradedAlgebra {
 public:
  using S = typename K::Scalar;

  K field;
  Quiver quiver;
  std::vector<BasisElement> basis;
  std::vector<std::vector<int>> by_degree;  // degree -> basis indices (ascending)
  int truncation = 0;    // basis certified for degrees <= truncation
  bool complete = false;  // true when the basis is exhausted below the truncation

  int dim() const { return static_cast<int>(basis.size()); }

  int idempotent(int vertex) const {
    // degree-0 basis is exactly e_0..e_{N-1}, in vertex order
    return by_degree[0][static_cast<std::size_t>(vertex)];
  }

  std::vector<int> radical() const {
    std::vector<int> out;
    for (int k = 0; k < dim(); ++k)
      if (basis[static_cast<std::size_t>(k)].degree >= 1) out.push_back(k);
    return out;
  }

  bool product_certified(int i, int j) const {
    if (complete) return true;
    return basis[static_cast<std::size_t>(i)].degree + basis[static_cast<std::size_t>(j)].degree <=
           truncation;
  }

  // a_i * a_j ("a_j then a_i").  Throws when the product degree lies beyond
  // the certified truncation of an infinite-dimensional algebra.
  const LinComb<K>& multiply(int i, int j) const {
    if (!product_certified(i, j))
      throw InsufficientPrecisionError("product of degrees " +
                                       std::to_string(basis[(std::size_t)i].degree) + "+" +
                                       std::to_string(basis[(std::size_t)j].degree) +
                                       " beyond truncation " + std::to_string(truncation));
    auto it = products_.find(key(i, j));
    return it == products_.end() ? empty_ : it->second;
  }

  void set_product(int i, int j, LinComb<K> value) {
    if (!value.empty()) products_[key(i, j)] = std::move(value);
  }

  HilbertSeries hilbert() const {
    HilbertSeries h;
    for (const auto& layer : by_degree) h.dims.push_back(static_cast<long>(layer.size()));
    h.complete = complete;
    return h;
  }

  // dim { z in A_d : z*b = b*z for all basis b with deg(b)+d certified }
  long center_dim(int d) const {
    if (d > truncation) throw InsufficientPrecisionError("center degree beyond truncation");
    const auto& layer = by_degree[static_cast<std::size_t>(d)];
    if (layer.empty()) return 0;
    int cols = static_cast<int>(layer.size());
    // rows indexed by (constraint basis element b, component index)
    std::vector<SparseVec<K>> rows;
    std::map<std::pair<int, int>, int> row_index;  // (b, component) -> row
    auto row_of = [&](int b, int comp) {
      auto it = row_index.emplace(std::make_pair(b, comp), (int)row_index.size());
      if (it.second) rows.emplace_back();
      return it.first->second;
    };
    for (int b = 0; b < dim(); ++b) {
      if (!complete && basis[(std::size_t)b].degree + d > truncation) continue;
      for (int c = 0; c < cols; ++c) {
        int z = layer[static_cast<std::size_t>(c)];
        for (const auto& [k2, coef] : multiply(z, b)) {
          auto& row = rows[static_cast<std::size_t>(row_of(b, k2))];
          detail::lincomb_add<K>(row, c, coef);
        }
        for (const auto& [k2, coef] : multiply(b, z)) {
          auto& row = rows[static_cast<std::size_t>(row_of(b, k2))];
          detail::lincomb_add<K>(row, c, -coef);
        }
      }
    }
    SparseMatrix<K> m(field, static_cast<int>(rows.size()), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto& [c, v] : rows[r]) m.add(static_cast<int>(r), c, v);
    return cols - m.rank();
  }

  // --- structural checks (used by tests and the validation suite) ---------

  bool idempotents_ok() const {
    if (by_degree.empty() || static_cast<int>(by_degree[0].size()) != quiver.vertex_count)
      return false;
    for (int v = 0; v < quiver.vertex_count; ++v) {
      int e = idempotent(v);
      const auto& be = basis[static_cast<std::size_t>(e)];
      if (be.degree != 0 || be.source != v || be.target != v) return false;
      for (int w = 0; w < quiver.vertex_count; ++w) {
        const auto& prod = multiply(e, idempotent(w));
        if (v == w) {
          if (prod.size() != 1 || prod[0].first != e || !(prod[0].second == field.one()))
            return false;
        } else if (!prod.empty()) {
          return false;
        }
      }
    }
    // sum of idempotents acts as identity on every basis element
    for (int b = 0; b < dim(); ++b) {
      const auto& be = basis[static_cast<std::size_t>(b)];
      const auto& left = multiply(idempotent(be.target), b);
      const auto& right = multiply(b, idempotent(be.source));
      if (left.size() != 1 || left[0].first != b || !(left[0].second == field.one())) return false;
      if (right.size() != 1 || right[0].first != b || !(right[0].second == field.one()))
        return false;
      for (int v = 0; v < quiver.vertex_count; ++v) {
        if (v != be.target && !multiply(idempotent(v), b).empty()) return false;
        if (v != be.source && !multiply(b, idempotent(v)).empty()) return false;
      }
    }
    return true;
  }

  // (a*b)*c == a*(b*c) for all certified triples with total degree within the
  // truncation.
  bool associativity_ok() const {
    for (int a = 0; a < dim(); ++a)
      for (int b = 0; b < dim(); ++b) {
        int dab = basis[(std::size_t)a].degree + basis[(std::size_t)b].degree;
        if (!complete && dab > truncation) continue;
        const auto& ab = multiply(a, b);
        for (int c = 0; c < dim(); ++c) {
          if (!complete && dab + basis[(std::size_t)c].degree > truncation) continue;
          LinComb<K> left, right;
          for (const auto& [k1, x] : ab)
            for (const auto& [k2, y] : multiply(k1, c)) detail::lincomb_add<K>(left, k2, x * y);
          for (const auto& [k1, x] : multiply(b, c))
            for (const auto& [k2, y] : multiply(a, k1)) detail::lincomb_add<K>(right, k2, x * y);
          if (left != right) return false;
        }
      }
    return true;
  }

  bool grading_ok() const {
    for (const auto& [k, comb] : products_) {
      int i = static_cast<int>(k >> 32), j = static_cast<int>(k & 0xffffffffu);
      const auto& bi = basis[static_cast<std::size_t>(i)];
      const auto& bj = basis[static_cast<std::size_t>(j)];
      if (bi.source != bj.target) return false;  // composability
      for (const auto& [t, coef] : comb) {
        (void)coef;
        const auto& bt = basis[static_cast<std::size_t>(t)];
        if (bt.degree != bi.degree + bj.degree) return false;
        if (bt.source != bj.source || bt.target != bi.target) return false;
      }
    }
    return true;
  }

 private:
  static std::uint64_t key(int i, int j) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(i)) << 32) |
           static_cast<std::uint32_t>(j);
  }

  std::unordered_map<std::uint64_t, LinComb<K>> products_;
  LinComb<K> empty_;
};

// ---------------------------------------------------------------------------
// build_algebra: per-degree bases of the path algebra modulo the two-sided
// ideal generated by homogeneous relations.

namespace detail {

inline std::string path_label(const Quiver& q, const PathRec& p) {
  if (p.arrows.empty()) return "e" + std::to_string(p.src);
  std::string s;
  for (std::size_t k = 0; k < p.arrows.size(); ++k)
    s += (k ? " " : "") + q.arrows[static_cast<std::size_t>(p.arrows[k])].id;
  return s;
}

}  // namespace detail

template <class K>
GradedAlgebra<K> build_algebra(K field, const Quiver& quiver, const RelationSet& relations,
                               int max_degree) {
  quiver.validate();
  auto rel_sig = relations.validate(quiver);
  if (max_degree < 0) throw Error("negative truncation degree");

  using PathRec = detail::PathRec;
  GradedAlgebra<K> A;
  A.field = field;
  A.quiver = quiver;
  A.truncation = max_degree;

  // Convert relation terms to arrow-index form once.
  struct Rel {
    int src, tgt, degree;
    std::vector<std::pair<typename K::Scalar, std::vector<int>>> terms;
  };
  std::vector<Rel> rels;
  for (std::size_t r = 0; r < relations.relations.size(); ++r) {
    Rel rel;
    rel.src = rel_sig[r][0];
    rel.tgt = rel_sig[r][1];
    rel.degree = rel_sig[r][2];
    for (const auto& term : relations.relations[r].terms) {
      std::vector<int> seq;
      for (const auto& id : term.arrow_ids) seq.push_back(quiver.arrow_index(id));
      rel.terms.emplace_back(field.from_rational(term.coef), std::move(seq));
    }
    rels.push_back(std::move(rel));
  }

  // Path enumeration by degree (traversal order; extension by a final arrow).
  std::vector<std::vector<PathRec>> paths(static_cast<std::size_t>(max_degree) + 1);
  std::vector<std::map<std::pair<int, std::vector<int>>, int>> path_index(paths.size());
  auto register_paths = [&](int d) {
    auto& layer = paths[static_cast<std::size_t>(d)];
    std::sort(layer.begin(), layer.end(), [](const PathRec& a, const PathRec& b) {
      if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
      if (a.arrows != b.arrows) return a.arrows < b.arrows;
      return a.src < b.src;
    });
    for (std::size_t k = 0; k < layer.size(); ++k)
      path_index[static_cast<std::size_t>(d)][{layer[k].src, layer[k].arrows}] =
          static_cast<int>(k);
  };
  for (int v = 0; v < quiver.vertex_count; ++v)
    paths[0].push_back(PathRec{v, v, 0, {}});
  register_paths(0);
  long long total_paths = quiver.vertex_count;
  for (int d = 1; d <= max_degree; ++d) {
    for (std::size_t ai = 0; ai < quiver.arrows.size(); ++ai) {
      const Arrow& a = quiver.arrows[ai];
      if (a.degree > d) continue;
      for (const PathRec& q : paths[static_cast<std::size_t>(d - a.degree)]) {
        if (q.tgt != a.source) continue;
        PathRec np = q;
        np.arrows.push_back(static_cast<int>(ai));
        np.tgt = a.target;
        np.degree = d;
        paths[static_cast<std::size_t>(d)].push_back(std::move(np));
      }
    }
    total_paths += static_cast<long long>(paths[static_cast<std::size_t>(d)].size());
    require_resources(total_paths * 64, "path enumeration to degree " + std::to_string(d));
    register_paths(d);
  }

  // Degreewise ideal spans and quotient bases.
  std::vector<detail::Echelon<K>> reducer(paths.size());
  std::vector<std::vector<int>> basis_paths(paths.size());      // path indices chosen as basis
  std::vector<std::vector<int>> basis_global(paths.size());     // same, as global basis indices
  std::vector<std::map<int, int>> path_to_basis(paths.size());  // path idx -> global basis idx

  for (int d = 0; d <= max_degree; ++d) {
    auto& ech = reducer[static_cast<std::size_t>(d)];
    for (const Rel& rel : rels) {
      if (rel.degree > d) continue;
      int pad = d - rel.degree;
      for (int dq = 0; dq <= pad; ++dq) {
        int dp = pad - dq;
        for (const PathRec& q : paths[static_cast<std::size_t>(dq)]) {
          if (q.tgt != rel.src) continue;
          for (const PathRec& p : paths[static_cast<std::size_t>(dp)]) {
            if (p.src != rel.tgt) continue;
            SparseVec<K> row;
            for (const auto& [coef, seq] : rel.terms) {
              std::vector<int> full = q.arrows;
              full.insert(full.end(), seq.begin(), seq.end());
              full.insert(full.end(), p.arrows.begin(), p.arrows.end());
              int idx = path_index[static_cast<std::size_t>(d)].at({q.src, full});
              detail::lincomb_add<K>(row, idx, coef);
            }
            ech.insert(std::move(row));
          }
        }
      }
    }
    for (std::size_t k = 0; k < paths[static_cast<std::size_t>(d)].size(); ++k) {
      if (ech.rows().count(static_cast<int>(k))) continue;  // pivot path, reduced away
      const PathRec& p = paths[static_cast<std::size_t>(d)][k];
      int global = A.dim();
      A.basis.push_back(
          BasisElement{p.src, p.tgt, d, detail::path_label(quiver, p)});
      basis_paths[static_cast<std::size_t>(d)].push_back(static_cast<int>(k));
      basis_global[static_cast<std::size_t>(d)].push_back(global);
      path_to_basis[static_cast<std::size_t>(d)][static_cast<int>(k)] = global;
    }
  }
  A.by_degree = basis_global;

  if (static_cast<int>(A.by_degree[0].size()) != quiver.vertex_count)
    throw Error("internal: degree-0 basis is not the vertex span");

  // Normal form of a path-space vector in degree d, in global basis indices.
  auto normal_form = [&](int d, SparseVec<K> vec) {
    reducer[static_cast<std::size_t>(d)].reduce(vec);
    LinComb<K> out;
    for (const auto& [pidx, coef] : vec)
      out.emplace_back(path_to_basis[static_cast<std::size_t>(d)].at(pidx), coef);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  };

  // Structure constants for all certified products.
  for (int d1 = 0; d1 <= max_degree; ++d1)
    for (int d2 = 0; d2 + d1 <= max_degree; ++d2)
      for (std::size_t ki = 0; ki < basis_paths[static_cast<std::size_t>(d1)].size(); ++ki)
        for (std::size_t kj = 0; kj < basis_paths[static_cast<std::size_t>(d2)].size(); ++kj) {
          const PathRec& pi =
              paths[static_cast<std::size_t>(d1)][static_cast<std::size_t>(
                  basis_paths[static_cast<std::size_t>(d1)][ki])];
          const PathRec& pj =
              paths[static_cast<std::size_t>(d2)][static_cast<std::size_t>(
                  basis_paths[static_cast<std::size_t>(d2)][kj])];
          if (pi.src != pj.tgt) continue;  // i*j = "j then i"
          std::vector<int> seq = pj.arrows;
          seq.insert(seq.end(), pi.arrows.begin(), pi.arrows.end());
          int idx = path_index[static_cast<std::size_t>(d1 + d2)].at({pj.src, seq});
          SparseVec<K> vec{{idx, field.one()}};
          A.set_product(basis_global[static_cast<std::size_t>(d1)][ki],
                        basis_global[static_cast<std::size_t>(d2)][kj],
                        normal_form(d1 + d2, std::move(vec)));
        }

  // Exhaustion checks.  With span = max arrow degree:
  // (a) if no raw path exists in degrees max_degree+1 .. max_degree+span,
  //     none exists beyond either (every path ends in an arrow of degree
  //     <= span), so the built basis is the whole algebra;
  // (b) if the quotient basis vanishes in span consecutive degrees, every
  //     higher component vanishes too, since A_d = sum_a A_{d-deg a} * a.
  {
    int span = quiver.max_arrow_degree();
    std::vector<std::vector<PathRec>> probe = paths;
    bool any = false;
    for (int d = max_degree + 1; d <= max_degree + span; ++d) {
      std::vector<PathRec> layer;
      for (std::size_t ai = 0; ai < quiver.arrows.size(); ++ai) {
        const Arrow& a = quiver.arrows[ai];
        if (a.degree > d) continue;
        int prev = d - a.degree;
        if (prev >= static_cast<int>(probe.size())) continue;
        for (const PathRec& q : probe[static_cast<std::size_t>(prev)])
          if (q.tgt == a.source) {
            layer.push_back(q);
            layer.back().arrows.push_back(static_cast<int>(ai));
            layer.back().tgt = a.target;
          }
      }
      any = any || !layer.empty();
      probe.push_back(std::move(layer));
    }
    if (!any) A.complete = true;
    int run = 0;
    for (int d = 0; d <= max_degree; ++d) {
      run = A.by_degree[static_cast<std::size_t>(d)].empty() ? run + 1 : 0;
      if (run >= span) {
        A.complete = true;
        break;
      }
    }
  }

  return A;
}

// ---------------------------------------------------------------------------
// Right modules given by explicit bases and action tables.

template <class K>
struct AlgebraModule {
  const GradedAlgebra<K>* algebra = nullptr;

  struct MBasis {
    int vertex = 0;  // m * e_vertex = m
    int degree = 0;
    std::string label;
  };
  std::vector<MBasis> basis;
  std::map<std::pair<int, int>, LinComb<K>> action;  // (module idx, algebra idx) -> combination

  int dim() const { return static_cast<int>(basis.size()); }

  LinComb<K> act(int m, int a) const {
    auto it = action.find({m, a});
    return it == action.end() ? LinComb<K>{} : it->second;
  }

  // m * (a*b) == (m*a) * b on certified products; unit acts as identity.
  bool action_ok() const {
    const auto& A = *algebra;
    for (int m = 0; m < dim(); ++m) {
      for (int v = 0; v < A.quiver.vertex_count; ++v) {
        auto r = act(m, A.idempotent(v));
        if (v == basis[static_cast<std::size_t>(m)].vertex) {
          if (r.size() != 1 || r[0].first != m || !(r[0].second == A.field.one())) return false;
        } else if (!r.empty()) {
          return false;
        }
      }
      // right-module axiom in this composition convention: (m.a).b = m.(a*b)
      for (int a = 0; a < A.dim(); ++a)
        for (int b = 0; b < A.dim(); ++b) {
          if (!A.product_certified(a, b)) continue;
          LinComb<K> left;  // (m.a).b
          for (const auto& [k1, x] : act(m, a))
            for (const auto& [k2, y] : act(k1, b)) detail::lincomb_add<K>(left, k2, x * y);
          LinComb<K> right;  // m.(a*b)
          for (const auto& [k1, x] : A.multiply(a, b))
            for (const auto& [k2, y] : act(m, k1)) detail::lincomb_add<K>(right, k2, x * y);
          if (left != right) return false;
        }
    }
    return true;
  }
};

// The simple right module at a vertex: one-dimensional, radical acts by zero.
template <class K>
AlgebraModule<K> simple_module(const GradedAlgebra<K>& A, int vertex) {
  if (vertex < 0 || vertex >= A.quiver.vertex_count) throw Error("vertex index out of range");
  AlgebraModule<K> M;
  M.algebra = &A;
  M.basis.push_back({vertex, 0, "s" + std::to_string(vertex)});
  M.action[{0, A.idempotent(vertex)}] = LinComb<K>{{0, A.field.one()}};
  return M;
}

}  // namespace hlab
