#pragma once

// Minimal projective resolutions of right modules over quiver-graded
// algebras, computed degree by degree.  Everything is graded: free modules
// are direct sums of shifted vertex projectives e_v A(-g), syzygies are
// computed per (internal degree, vertex) block, and projective covers lift a
// basis of the top (kernel mod kernel*radical) found degreewise.
//
// For a truncated algebra every statement is certified for internal degrees
// up to the truncation; "finished" then means the syzygy vanishes within that
// window.  For finite-dimensional algebras the window covers everything and
// the computation is complete.

#include <optional>
#include <string>
#include <vector>

#include "hlab/dim_table.hpp"
#include "hlab/errors.hpp"
#include "hlab/graded_algebra.hpp"
#include "hlab/sparse_matrix.hpp"

namespace hlab {

struct FreeGenerator {
  int vertex = 0;
  int degree = 0;
};

template <class K>
struct Resolution {
  std::vector<std::vector<FreeGenerator>> steps;  // step 0 = cover of the module
  bool finished = false;     // syzygy vanished within the certified window
  int certified_degree = 0;  // internal degrees for which all statements hold
  bool minimal = true;       // all differentials land in the radical

  int length() const { return static_cast<int>(steps.size()) - 1; }
  long step_rank(int m) const {
    return m < static_cast<int>(steps.size())
               ? static_cast<long>(steps[static_cast<std::size_t>(m)].size())
               : 0;
  }
};

namespace detail {

// Flat graded basis of F = (+)_g e_{v_g} A(-deg_g): pairs (g, algebra basis a)
// with tgt(a) = v_g, grouped by internal degree and by src(a) (the vertex at
// which the element sits as a right module element).
template <class K>
struct FreeLayout {
  const GradedAlgebra<K>* A = nullptr;
  std::vector<FreeGenerator> gens;

  struct Slot {
    int gen = 0;
    int alg = 0;  // algebra basis index
  };
  // degree -> vertex -> slots
  std::vector<std::vector<std::vector<Slot>>> slots;
  // (gen, alg) -> position within its (degree, vertex) block
  std::map<std::pair<int, int>, int> position;

  void build(int max_degree) {
    slots.assign(static_cast<std::size_t>(max_degree) + 1,
                 std::vector<std::vector<Slot>>(
                     static_cast<std::size_t>(A->quiver.vertex_count)));
    for (std::size_t g = 0; g < gens.size(); ++g)
      for (int a = 0; a < A->dim(); ++a) {
        const auto& ba = A->basis[static_cast<std::size_t>(a)];
        if (ba.target != gens[g].vertex) continue;
        int deg = gens[g].degree + ba.degree;
        if (deg > max_degree) continue;
        auto& block = slots[static_cast<std::size_t>(deg)][static_cast<std::size_t>(ba.source)];
        position[{static_cast<int>(g), a}] = static_cast<int>(block.size());
        block.push_back({static_cast<int>(g), a});
      }
  }
};

// An element of F, kept as (gen, alg basis) -> coefficient.
template <class K>
using FreeElem = std::map<std::pair<int, int>, typename K::Scalar>;

template <class K>
void free_elem_add(FreeElem<K>& dst, std::pair<int, int> key, const typename K::Scalar& c) {
  auto it = dst.find(key);
  if (it == dst.end()) {
    if (!c.is_zero()) dst.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) dst.erase(it);
  }
}

// right action: elem * (algebra basis b)
template <class K>
FreeElem<K> free_elem_act(const GradedAlgebra<K>& A, const FreeElem<K>& elem, int b) {
  FreeElem<K> out;
  for (const auto& [key, c] : elem)
    for (const auto& [k2, c2] : A.multiply(key.second, b))
      free_elem_add<K>(out, {key.first, k2}, c * c2);
  return out;
}

}  // namespace detail

// Minimal projective resolution of M, up to max_len steps beyond the cover.
template <class K>
Resolution<K> minimal_resolution(const AlgebraModule<K>& M, int max_len) {
  const GradedAlgebra<K>& A = *M.algebra;
  const int nv = A.quiver.vertex_count;
  int max_alg_degree = 0;
  for (const auto& b : A.basis) max_alg_degree = std::max(max_alg_degree, b.degree);
  int max_mod_degree = 0;
  for (const auto& b : M.basis) max_mod_degree = std::max(max_mod_degree, b.degree);

  // Certified internal-degree window.  For a complete algebra the window is
  // chosen large enough that every possible syzygy degree fits.
  const int window = A.complete
                         ? max_mod_degree + (max_len + 2) * std::max(1, max_alg_degree) +
                               max_alg_degree
                         : A.truncation;

  Resolution<K> res;
  res.certified_degree = window;

  // ---- step 0: cover of M ----
  // top(M)_e = M_e / sum_{f<e} M_f * J_{e-f}, computed per (degree, vertex)
  std::vector<std::vector<std::vector<int>>> mod_layer(
      static_cast<std::size_t>(window) + 1,
      std::vector<std::vector<int>>(static_cast<std::size_t>(nv)));
  for (int m = 0; m < M.dim(); ++m) {
    const auto& bm = M.basis[static_cast<std::size_t>(m)];
    if (bm.degree <= window)
      mod_layer[static_cast<std::size_t>(bm.degree)][static_cast<std::size_t>(bm.vertex)]
          .push_back(m);
  }

  std::vector<FreeGenerator> gens0;
  std::vector<detail::FreeElem<K>> images0;  // generator -> element of M (as module coords)
  {
    // span of M*J per degree/vertex, in module coordinates
    const auto radical = A.radical();
    for (int e = 0; e <= window; ++e)
      for (int v = 0; v < nv; ++v) {
        const auto& layer = mod_layer[static_cast<std::size_t>(e)][static_cast<std::size_t>(v)];
        if (layer.empty()) continue;
        std::map<int, int> col_of;
        for (std::size_t k = 0; k < layer.size(); ++k) col_of[layer[k]] = static_cast<int>(k);
        detail::Echelon<K> span;
        for (int f = 0; f < e; ++f)
          for (int w = 0; w < nv; ++w)
            for (int m : mod_layer[static_cast<std::size_t>(f)][static_cast<std::size_t>(w)])
              for (int j : radical) {
                const auto& bj = A.basis[static_cast<std::size_t>(j)];
                if (bj.degree != e - f) continue;
                SparseVec<K> row;
                for (const auto& [t, c] : M.act(m, j)) {
                  auto it = col_of.find(t);
                  if (it != col_of.end()) detail::lincomb_add<K>(row, it->second, c);
                }
                span.insert(std::move(row));
              }
        for (std::size_t k = 0; k < layer.size(); ++k) {
          SparseVec<K> probe{{static_cast<int>(k), A.field.one()}};
          span.reduce(probe);
          if (probe.empty()) continue;
          span.insert(probe);
          gens0.push_back({v, e});
          detail::FreeElem<K> img;
          img[{layer[k], 0}] = A.field.one();  // (module basis index, unused)
          images0.push_back(std::move(img));
        }
      }
  }
  res.steps.push_back(gens0);

  // ---- kernel of step 0, then iterate ----
  // Current map: free module F' (layout cur) -> previous stage, where the
  // previous stage is either M itself (stage 0) or a free module (layout
  // prev) with images given in its flat coordinates.
  detail::FreeLayout<K> cur;
  cur.A = &A;
  cur.gens = gens0;
  cur.build(window);
  std::vector<detail::FreeElem<K>> cur_images = images0;  // into M for stage 0
  bool target_is_module = true;
  detail::FreeLayout<K> prev;  // valid when !target_is_module

  const auto radical = A.radical();
  for (int step = 1;; ++step) {
    // kernel of  cur -> target, degree/vertex blockwise; kernel vectors in
    // cur's flat coordinates
    std::vector<detail::FreeElem<K>> kernel_vecs;
    std::vector<std::pair<int, int>> kernel_meta;  // (degree, vertex)
    for (int e = 0; e <= window; ++e)
      for (int v = 0; v < nv; ++v) {
        const auto& block = cur.slots[static_cast<std::size_t>(e)][static_cast<std::size_t>(v)];
        if (block.empty()) continue;
        // rows: target coordinates in degree e, vertex v
        std::map<std::pair<int, int>, int> row_of;
        auto row_index = [&](std::pair<int, int> key) {
          auto it = row_of.emplace(key, static_cast<int>(row_of.size()));
          return it.first->second;
        };
        std::vector<std::tuple<int, int, typename K::Scalar>> triplets;
        int nrows = 0;
        for (std::size_t cidx = 0; cidx < block.size(); ++cidx) {
          const auto& slot = block[cidx];
          // image of (gen, alg) = image(gen) * alg
          if (target_is_module) {
            // coordinates in M
            std::map<int, typename K::Scalar> img;
            for (const auto& [key, c] : cur_images[static_cast<std::size_t>(slot.gen)])
              for (const auto& [t, c2] : M.act(key.first, slot.alg)) {
                auto it = img.find(t);
                if (it == img.end())
                  img.emplace(t, c * c2);
                else
                  it->second += c * c2;
              }
            for (const auto& [t, c] : img) {
              if (c.is_zero()) continue;
              int r = row_index({t, 0});
              triplets.emplace_back(r, static_cast<int>(cidx), c);
              nrows = std::max(nrows, r + 1);
            }
          } else {
            auto img = detail::free_elem_act(A, cur_images[static_cast<std::size_t>(slot.gen)],
                                             slot.alg);
            for (const auto& [key, c] : img) {
              int r = row_index(key);
              triplets.emplace_back(r, static_cast<int>(cidx), c);
              nrows = std::max(nrows, r + 1);
            }
          }
        }
        SparseMatrix<K> dmat(A.field, nrows, static_cast<int>(block.size()));
        for (const auto& [r, c, val] : triplets) dmat.add(r, c, val);
        auto ker = dmat.kernel_basis();
        for (const auto& kv : ker.basis) {
          detail::FreeElem<K> elem;
          for (const auto& [cidx, c] : kv) {
            const auto& slot = block[static_cast<std::size_t>(cidx)];
            elem[{slot.gen, slot.alg}] = c;
          }
          kernel_vecs.push_back(std::move(elem));
          kernel_meta.emplace_back(e, v);
        }
      }

    if (kernel_vecs.empty()) {
      res.finished = true;
      break;
    }
    if (step > max_len) {
      res.finished = false;  // kernel persists past the allowed length
      break;
    }

    // top of the kernel: strip kernel * J degreewise, pick generators greedily
    // (kernels are produced degree by degree, so lower-degree generators come
    // first and act on later degrees)
    std::vector<FreeGenerator> gens;
    std::vector<detail::FreeElem<K>> images;
    {
      // group kernel vectors per (degree, vertex)
      std::map<std::pair<int, int>, std::vector<int>> by_block;
      for (std::size_t k = 0; k < kernel_vecs.size(); ++k)
        by_block[kernel_meta[k]].push_back(static_cast<int>(k));
      for (int e = 0; e <= window; ++e)
        for (int v = 0; v < nv; ++v) {
          auto bit = by_block.find({e, v});
          if (bit == by_block.end()) continue;
          const auto& block = cur.slots[static_cast<std::size_t>(e)][static_cast<std::size_t>(v)];
          std::map<std::pair<int, int>, int> col_of;
          for (std::size_t k = 0; k < block.size(); ++k)
            col_of[{block[k].gen, block[k].alg}] = static_cast<int>(k);
          detail::Echelon<K> span;
          // generators already chosen in lower degrees, pushed into degree e
          for (std::size_t g = 0; g < gens.size(); ++g) {
            if (gens[g].degree >= e) continue;
            for (int j : radical) {
              const auto& bj = A.basis[static_cast<std::size_t>(j)];
              if (bj.degree != e - gens[g].degree || bj.source != v) continue;
              auto moved = detail::free_elem_act(A, images[g], j);
              SparseVec<K> row;
              for (const auto& [key, c] : moved)
                detail::lincomb_add<K>(row, col_of.at(key), c);
              span.insert(std::move(row));
            }
          }
          for (int kidx : bit->second) {
            SparseVec<K> row;
            for (const auto& [key, c] : kernel_vecs[static_cast<std::size_t>(kidx)])
              detail::lincomb_add<K>(row, col_of.at(key), c);
            span.reduce(row);
            if (row.empty()) continue;
            span.insert(row);
            gens.push_back({v, e});
            images.push_back(kernel_vecs[static_cast<std::size_t>(kidx)]);
          }
        }
    }

    // minimality: differentials land in the radical
    for (const auto& img : images)
      for (const auto& [key, c] : img) {
        (void)c;
        if (A.basis[static_cast<std::size_t>(key.second)].degree == 0) res.minimal = false;
      }

    res.steps.push_back(gens);
    prev = cur;
    cur = detail::FreeLayout<K>{};
    cur.A = &A;
    cur.gens = gens;
    cur.build(window);
    cur_images = images;
    target_is_module = false;
  }

  return res;
}

// pd of the vertex simple modules and their maximum.
struct GlobalDimensionResult {
  std::optional<int> value;          // absent: some resolution did not finish
  std::vector<int> simple_pd;        // -1 when unfinished
  int certified_degree = 0;
};

template <class K>
GlobalDimensionResult global_dimension(const GradedAlgebra<K>& A, int max_len) {
  GlobalDimensionResult out;
  out.certified_degree = A.complete ? -1 : A.truncation;
  int best = 0;
  bool all = true;
  for (int v = 0; v < A.quiver.vertex_count; ++v) {
    auto res = minimal_resolution(simple_module(A, v), max_len);
    out.certified_degree = res.certified_degree;
    if (!res.finished) {
      out.simple_pd.push_back(-1);
      all = false;
      continue;
    }
    out.simple_pd.push_back(res.length());
    best = std::max(best, res.length());
  }
  if (all) out.value = best;
  return out;
}

enum class Smoothness { kSmooth, kNotSmoothUpToBound };

template <class K>
Smoothness smoothness_check(const GradedAlgebra<K>& A, int max_len) {
  return global_dimension(A, max_len).value ? Smoothness::kSmooth
                                            : Smoothness::kNotSmoothUpToBound;
}

// dim Ext^i(A/rad, A/rad) = total number of projective summands in step i
// across the minimal resolutions of all vertex simples.
template <class K>
DimTable ext_algebra_dims(const GradedAlgebra<K>& A, int max_i) {
  DimTable t;
  t.window.max_i = max_i;
  std::vector<long> counts(static_cast<std::size_t>(max_i) + 1, 0);
  for (int v = 0; v < A.quiver.vertex_count; ++v) {
    auto res = minimal_resolution(simple_module(A, v), max_i);
    for (int m = 0; m <= max_i; ++m) counts[static_cast<std::size_t>(m)] += res.step_rank(m);
  }
  for (int i = 0; i <= max_i; ++i) t.set(i, counts[static_cast<std::size_t>(i)]);
  return t;
}

}  // namespace hlab
