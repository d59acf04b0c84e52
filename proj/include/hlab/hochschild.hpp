#pragma once

// Hochschild (co)homology of quiver-graded algebras via the E-relative
// reduced bar complex, E the separable vertex subalgebra: tensors are taken
// over E and entries lie in the radical J, so for Beilinson-type algebras the
// terms stay small and vanish once chains run out of vertices.
//
// Cochains:  C^m = Hom_{E-bimod}(J^{(x)_E m}, A),
//   b(f)(j1,..,j_{m+1}) = j1*f(j2,..) + sum_t (-1)^t f(.., j_t j_{t+1}, ..)
//                         + (-1)^{m+1} f(j1,..,j_m)*j_{m+1}.
// Chains:    C_m = A (x)_{E-bimod} J^{(x)_E m},
//   b(a0,j1,..,jm) = (a0 j1, j2,..) + sum_t (-1)^t (a0,.., j_t j_{t+1}, ..)
//                    + (-1)^m (j_m a0, j1,..,j_{m-1}).
// A chain (c1..cm) is composable when src(c_t) = tgt(c_{t+1}); homology
// additionally glues a0 cyclically to both ends.
//
// The differential preserves internal degree: homology windows restrict every
// term to one total degree (terms vanish for m > degree, so truncated
// algebras are exactly computable), and the cochain complex of a
// finite-dimensional algebra splits by the degree shift of a cochain.
//
// The full (non-relative) bar complex over the ground field is implemented
// alongside as an independent validation oracle for the reduction.

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "hlab/dim_table.hpp"
#include "hlab/errors.hpp"
#include "hlab/graded_algebra.hpp"
#include "hlab/resource.hpp"
#include "hlab/sparse_matrix.hpp"

namespace hlab {

enum class Direction { kCohomology, kHomology };

template <class K>
struct ComplexData {
  K field;
  Direction dir = Direction::kCohomology;
  std::vector<long> dims;             // term sizes, m = 0..M
  std::vector<SparseMatrix<K>> maps;  // cohomology: maps[m]: C^m -> C^{m+1}, m = 0..M-1
                                      // homology:   maps[m]: C_m -> C_{m-1}, maps[0] a 0-row stub
  bool exhausted = false;             // all terms beyond M vanish

  int top() const { return static_cast<int>(dims.size()) - 1; }

  // b^2 = 0, checked exactly on full matrix products.
  void assert_complex() const {
    if (dir == Direction::kCohomology) {
      for (std::size_t m = 0; m + 1 < maps.size(); ++m)
        if (!maps[m + 1].multiply(maps[m]).is_zero())
          throw NotAComplexError("b^2 != 0 between cochain terms " + std::to_string(m) + ".." +
                                 std::to_string(m + 2));
    } else {
      for (std::size_t m = 0; m + 1 < maps.size(); ++m)
        if (!maps[m].multiply(maps[m + 1]).is_zero())
          throw NotAComplexError("b^2 != 0 between chain terms " + std::to_string(m + 1) + ".." +
                                 std::to_string(m - 1 + 2));
    }
  }

  long homology_at(int i) const {
    if (i < 0) return 0;
    if (i > top()) {
      if (exhausted) return 0;
      throw InsufficientPrecisionError("homology index beyond built terms");
    }
    if (dir == Direction::kCohomology) {
      SparseMatrix<K> d_in =
          (i == 0) ? SparseMatrix<K>::zero(field, static_cast<int>(dims[0]), 0)
                   : maps[static_cast<std::size_t>(i - 1)];
      if (i == top()) {
        if (!exhausted) throw InsufficientPrecisionError("need one more cochain term");
        auto d_out = SparseMatrix<K>::zero(field, 0, static_cast<int>(dims[(std::size_t)i]));
        return homology_dim(d_in, d_out);
      }
      return homology_dim(d_in, maps[static_cast<std::size_t>(i)]);
    }
    SparseMatrix<K> d_out = (i == 0)
                                ? SparseMatrix<K>::zero(field, 0, static_cast<int>(dims[0]))
                                : maps[static_cast<std::size_t>(i)];
    if (i == top()) {
      if (!exhausted) throw InsufficientPrecisionError("need one more chain term");
      auto d_in = SparseMatrix<K>::zero(field, static_cast<int>(dims[(std::size_t)i]), 0);
      return homology_dim(d_in, d_out);
    }
    return homology_dim(maps[static_cast<std::size_t>(i + 1)], d_out);
  }

  long euler_terms() const {
    long e = 0;
    for (std::size_t m = 0; m < dims.size(); ++m) e += (m % 2 ? -dims[m] : dims[m]);
    return e;
  }
};

// Euler-characteristic identity over an exhausted complex: the alternating
// sums of term dimensions and homology dimensions agree.
template <class K>
bool euler_identity_holds(const ComplexData<K>& cx) {
  if (!cx.exhausted) throw InsufficientPrecisionError("Euler check needs an exhausted complex");
  long h = 0;
  for (int i = 0; i <= cx.top(); ++i) h += (i % 2 ? -cx.homology_at(i) : cx.homology_at(i));
  return h == cx.euler_terms();
}

namespace detail {

// (u, w, coefficient of k in u*w) over certified products.
template <class K>
std::map<int, std::vector<std::tuple<int, int, typename K::Scalar>>> reverse_products(
    const GradedAlgebra<K>& A, bool radical_only, int degree_cap) {
  std::map<int, std::vector<std::tuple<int, int, typename K::Scalar>>> rev;
  std::vector<int> pool;
  if (radical_only)
    pool = A.radical();
  else
    for (int k = 0; k < A.dim(); ++k) pool.push_back(k);
  for (int u : pool)
    for (int w : pool) {
      const auto& bu = A.basis[static_cast<std::size_t>(u)];
      const auto& bw = A.basis[static_cast<std::size_t>(w)];
      if (bu.source != bw.target) continue;
      if (degree_cap >= 0 && bu.degree + bw.degree > degree_cap) continue;
      if (!A.product_certified(u, w)) continue;
      for (const auto& [k, c] : A.multiply(u, w)) rev[k].emplace_back(u, w, c);
    }
  return rev;
}

struct ChainIndex {
  std::vector<std::vector<int>> chains;
  std::map<std::vector<int>, int> index;
  void add(std::vector<int> c) {
    index.emplace(c, static_cast<int>(chains.size()));
    chains.push_back(std::move(c));
  }
  int find(const std::vector<int>& c) const {
    auto it = index.find(c);
    return it == index.end() ? -1 : it->second;
  }
};

// Composable radical chains of length (prev length + 1), extended at the
// back; degree_cap < 0 disables the total-degree bound.
template <class K>
ChainIndex extend_chains(const GradedAlgebra<K>& A, const ChainIndex& prev, int degree_cap) {
  ChainIndex next;
  const auto rad = A.radical();
  for (const auto& c : prev.chains) {
    int cdeg = 0;
    for (int k : c) cdeg += A.basis[static_cast<std::size_t>(k)].degree;
    int anchor = c.empty() ? -1 : A.basis[static_cast<std::size_t>(c.back())].source;
    for (int j : rad) {
      const auto& bj = A.basis[static_cast<std::size_t>(j)];
      if (anchor >= 0 && bj.target != anchor) continue;
      if (degree_cap >= 0 && cdeg + bj.degree > degree_cap) continue;
      auto nc = c;
      nc.push_back(j);
      next.add(std::move(nc));
    }
  }
  return next;
}

// Term of a reduced complex: pairs (chain, decoration).  For cochains the
// decoration is the value basis element; for chains it is a0.  Term 0 holds
// the empty chain with index 0.
struct ReducedTerm {
  ChainIndex chains;
  std::vector<std::pair<int, int>> cols;  // (chain idx, basis idx)
  std::map<std::pair<int, int>, int> col_index;
  void add_col(int chain_idx, int basis_idx) {
    col_index[{chain_idx, basis_idx}] = static_cast<int>(cols.size());
    cols.emplace_back(chain_idx, basis_idx);
  }
  int find_col(int chain_idx, int basis_idx) const {
    auto it = col_index.find({chain_idx, basis_idx});
    return it == col_index.end() ? -1 : it->second;
  }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Reduced cochain complex.  `shift` restricts to cochains raising internal
// degree by exactly that amount; requires a finite-dimensional algebra either
// way (the full cochain space of a truncated algebra is not finitely
// certifiable).

template <class K>
ComplexData<K> reduced_cochain_complex(const GradedAlgebra<K>& A, int max_m,
                                       std::optional<int> shift = std::nullopt) {
  if (!A.complete)
    throw InsufficientPrecisionError(
        "cochain complex needs a finite-dimensional algebra (homology windows handle truncated "
        "ones)");
  ComplexData<K> out;
  out.field = A.field;
  out.dir = Direction::kCohomology;

  auto rev = detail::reverse_products(A, /*radical_only=*/true, -1);
  std::vector<detail::ReducedTerm> terms;
  long long total_cols = 0;

  for (int m = 0; m <= max_m; ++m) {
    detail::ReducedTerm t;
    if (m == 0) {
      t.chains.add({});
      for (int a = 0; a < A.dim(); ++a) {
        const auto& ba = A.basis[static_cast<std::size_t>(a)];
        if (ba.source != ba.target) continue;
        if (shift && ba.degree != *shift) continue;
        t.add_col(0, a);
      }
    } else {
      t.chains = detail::extend_chains(A, terms.back().chains, -1);
      if (t.chains.chains.empty()) {
        out.exhausted = true;
        terms.push_back(std::move(t));
        break;
      }
      for (std::size_t ci = 0; ci < t.chains.chains.size(); ++ci) {
        const auto& c = t.chains.chains[ci];
        int src = A.basis[static_cast<std::size_t>(c.back())].source;
        int tgt = A.basis[static_cast<std::size_t>(c.front())].target;
        int cdeg = 0;
        for (int k : c) cdeg += A.basis[static_cast<std::size_t>(k)].degree;
        for (int a = 0; a < A.dim(); ++a) {
          const auto& ba = A.basis[static_cast<std::size_t>(a)];
          if (ba.source != src || ba.target != tgt) continue;
          if (shift && ba.degree - cdeg != *shift) continue;
          t.add_col(static_cast<int>(ci), a);
        }
      }
    }
    total_cols += static_cast<long long>(t.cols.size());
    require_resources(total_cols * 256, "cochain term " + std::to_string(m));
    terms.push_back(std::move(t));
  }
  if (!out.exhausted &&
      detail::extend_chains(A, terms.back().chains, -1).chains.empty())
    out.exhausted = true;

  for (const auto& t : terms) out.dims.push_back(static_cast<long>(t.cols.size()));

  const auto radical = A.radical();
  for (std::size_t m = 0; m + 1 < terms.size(); ++m) {
    const auto& dom = terms[m];
    const auto& cod = terms[m + 1];
    SparseMatrix<K> mat(A.field, static_cast<int>(cod.cols.size()),
                        static_cast<int>(dom.cols.size()));
    auto sgn_right = (m % 2 == 0) ? -A.field.one() : A.field.one();  // (-1)^{m+1}
    for (std::size_t col = 0; col < dom.cols.size(); ++col) {
      auto [ci, a] = dom.cols[col];
      const auto& chain = dom.chains.chains[static_cast<std::size_t>(ci)];
      const auto& ba = A.basis[static_cast<std::size_t>(a)];
      int front_tgt = chain.empty() ? ba.target
                                    : A.basis[static_cast<std::size_t>(chain.front())].target;
      int back_src =
          chain.empty() ? ba.source : A.basis[static_cast<std::size_t>(chain.back())].source;
      for (int j : radical) {
        const auto& bj = A.basis[static_cast<std::size_t>(j)];
        // left face: j prepended, value j*a
        if (bj.source == front_tgt) {
          auto nc = chain;
          nc.insert(nc.begin(), j);
          int row_chain = cod.chains.find(nc);
          if (row_chain >= 0)
            for (const auto& [b, coef] : A.multiply(j, a)) {
              int row = cod.find_col(row_chain, b);
              if (row >= 0) mat.add(row, static_cast<int>(col), coef);
            }
        }
        // right face: j appended, value a*j with sign (-1)^{m+1}
        if (bj.target == back_src) {
          auto nc = chain;
          nc.push_back(j);
          int row_chain = cod.chains.find(nc);
          if (row_chain >= 0)
            for (const auto& [b, coef] : A.multiply(a, j)) {
              int row = cod.find_col(row_chain, b);
              if (row >= 0) mat.add(row, static_cast<int>(col), coef * sgn_right);
            }
        }
      }
      // middle faces: expand chain slot t-1 as a product u*w, sign (-1)^t
      for (std::size_t t = 1; t <= chain.size(); ++t) {
        auto rit = rev.find(chain[t - 1]);
        if (rit == rev.end()) continue;
        auto sgn = (t % 2 == 1) ? -A.field.one() : A.field.one();
        for (const auto& [u, w, coef] : rit->second) {
          auto nc = chain;
          nc[t - 1] = u;
          nc.insert(nc.begin() + static_cast<long>(t), w);
          int row_chain = cod.chains.find(nc);
          if (row_chain < 0) continue;
          int row = cod.find_col(row_chain, a);
          if (row >= 0) mat.add(row, static_cast<int>(col), coef * sgn);
        }
      }
    }
    out.maps.push_back(std::move(mat));
  }
  out.assert_complex();
  return out;
}

// ---------------------------------------------------------------------------
// Reduced chain complex; `degree_window` restricts every term to one internal
// degree, which truncated algebras built to at least that degree support
// exactly.

template <class K>
ComplexData<K> reduced_chain_complex(const GradedAlgebra<K>& A, int max_m,
                                     std::optional<int> degree_window = std::nullopt) {
  if (!A.complete && !degree_window)
    throw InsufficientPrecisionError(
        "chain complex of a truncated infinite-dimensional algebra needs an internal-degree "
        "window");
  if (!A.complete && degree_window && *degree_window > A.truncation)
    throw InsufficientPrecisionError("window degree " + std::to_string(*degree_window) +
                                     " beyond truncation " + std::to_string(A.truncation));
  ComplexData<K> out;
  out.field = A.field;
  out.dir = Direction::kHomology;

  int cap = degree_window ? *degree_window : -1;
  auto rev = detail::reverse_products(A, /*radical_only=*/true, cap);
  std::vector<detail::ReducedTerm> terms;
  long long total_cols = 0;

  for (int m = 0; m <= max_m; ++m) {
    detail::ReducedTerm t;
    if (m == 0) {
      t.chains.add({});
      for (int a = 0; a < A.dim(); ++a) {
        const auto& ba = A.basis[static_cast<std::size_t>(a)];
        if (ba.source != ba.target) continue;
        if (degree_window && ba.degree != *degree_window) continue;
        t.add_col(0, a);
      }
    } else {
      t.chains = detail::extend_chains(A, terms.back().chains, cap);
      if (t.chains.chains.empty()) {
        out.exhausted = true;
        terms.push_back(std::move(t));
        break;
      }
      for (std::size_t ci = 0; ci < t.chains.chains.size(); ++ci) {
        const auto& c = t.chains.chains[ci];
        int cdeg = 0;
        for (int k : c) cdeg += A.basis[static_cast<std::size_t>(k)].degree;
        int need_src = A.basis[static_cast<std::size_t>(c.front())].target;
        int need_tgt = A.basis[static_cast<std::size_t>(c.back())].source;
        for (int a = 0; a < A.dim(); ++a) {
          const auto& ba = A.basis[static_cast<std::size_t>(a)];
          if (ba.source != need_src || ba.target != need_tgt) continue;
          if (degree_window && ba.degree + cdeg != *degree_window) continue;
          t.add_col(static_cast<int>(ci), a);
        }
      }
    }
    total_cols += static_cast<long long>(t.cols.size());
    require_resources(total_cols * 256, "chain term " + std::to_string(m));
    terms.push_back(std::move(t));
  }
  if (!out.exhausted &&
      detail::extend_chains(A, terms.back().chains, cap).chains.empty())
    out.exhausted = true;

  for (const auto& t : terms) out.dims.push_back(static_cast<long>(t.cols.size()));

  out.maps.push_back(SparseMatrix<K>::zero(A.field, 0, static_cast<int>(out.dims[0])));
  for (std::size_t m = 1; m < terms.size(); ++m) {
    const auto& dom = terms[m];
    const auto& cod = terms[m - 1];
    SparseMatrix<K> mat(A.field, static_cast<int>(cod.cols.size()),
                        static_cast<int>(dom.cols.size()));
    auto sgn_last = (m % 2 == 0) ? A.field.one() : -A.field.one();  // (-1)^m
    for (std::size_t col = 0; col < dom.cols.size(); ++col) {
      auto [ci, a0] = dom.cols[col];
      const auto& chain = dom.chains.chains[static_cast<std::size_t>(ci)];
      // face 0: a0 * (first chain entry)
      {
        std::vector<int> nc(chain.begin() + 1, chain.end());
        int row_chain = cod.chains.find(nc);
        if (row_chain >= 0)
          for (const auto& [b, coef] : A.multiply(a0, chain.front())) {
            int row = cod.find_col(row_chain, b);
            if (row >= 0) mat.add(row, static_cast<int>(col), coef);
          }
      }
      // middle faces t = 1..m-1: contract chain slots t-1, t; sign (-1)^t
      for (std::size_t t = 1; t < chain.size(); ++t) {
        auto sgn = (t % 2 == 1) ? -A.field.one() : A.field.one();
        for (const auto& [b, coef] : A.multiply(chain[t - 1], chain[t])) {
          auto nc = chain;
          nc[t - 1] = b;
          nc.erase(nc.begin() + static_cast<long>(t));
          int row_chain = cod.chains.find(nc);
          if (row_chain < 0) continue;
          int row = cod.find_col(row_chain, a0);
          if (row >= 0) mat.add(row, static_cast<int>(col), coef * sgn);
        }
      }
      // last face: (last chain entry) * a0, sign (-1)^m
      {
        std::vector<int> nc(chain.begin(), chain.end() - 1);
        int row_chain = cod.chains.find(nc);
        if (row_chain >= 0)
          for (const auto& [b, coef] : A.multiply(chain.back(), a0)) {
            int row = cod.find_col(row_chain, b);
            if (row >= 0) mat.add(row, static_cast<int>(col), coef * sgn_last);
          }
      }
    }
    out.maps.push_back(std::move(mat));
  }
  out.assert_complex();
  return out;
}

// ---------------------------------------------------------------------------
// Full (non-relative) bar complexes over the ground field: terms are tensor
// powers of the whole algebra.  Exponentially larger than the reduced ones;
// they exist to validate the separability reduction on small algebras.

namespace detail {

// tuple of length len over [0, dim), first entry least significant
inline long tuple_index(const std::vector<int>& t, int dim) {
  long idx = 0;
  for (std::size_t k = t.size(); k-- > 0;) idx = idx * dim + t[k];
  return idx;
}

inline long power(long base, int e) {
  long r = 1;
  while (e-- > 0) r *= base;
  return r;
}

}  // namespace detail

template <class K>
ComplexData<K> full_cochain_complex(const GradedAlgebra<K>& A, int max_m) {
  if (!A.complete) throw InsufficientPrecisionError("full bar complex needs a finite algebra");
  ComplexData<K> out;
  out.field = A.field;
  out.dir = Direction::kCohomology;
  const int n = A.dim();
  for (int m = 0; m <= max_m; ++m) {
    long d = detail::power(n, m) * n;
    require_resources(d * 64, "full cochain term " + std::to_string(m));
    out.dims.push_back(d);
  }
  auto rev = detail::reverse_products(A, /*radical_only=*/false, -1);

  // iterate tuples of length m by odometer
  for (int m = 0; m + 1 <= max_m; ++m) {
    SparseMatrix<K> mat(A.field, static_cast<int>(out.dims[(std::size_t)m + 1]),
                        static_cast<int>(out.dims[(std::size_t)m]));
    auto sgn_right = (m % 2 == 0) ? -A.field.one() : A.field.one();
    std::vector<int> t(static_cast<std::size_t>(m), 0);
    long tcount = detail::power(n, m);
    for (long ti = 0; ti < tcount; ++ti) {
      long base_row_prepend = ti * n;  // index of (j, t) = j + ti*n, times n for value
      for (int a = 0; a < n; ++a) {
        long col = detail::tuple_index(t, n) * n + a;
        // left face
        for (int j = 0; j < n; ++j) {
          long row_tuple = j + base_row_prepend;
          for (const auto& [b, coef] : A.multiply(j, a))
            mat.add(static_cast<int>(row_tuple * n + b), static_cast<int>(col), coef);
        }
        // right face
        for (int j = 0; j < n; ++j) {
          long row_tuple = ti + detail::power(n, m) * j;
          for (const auto& [b, coef] : A.multiply(a, j))
            mat.add(static_cast<int>(row_tuple * n + b), static_cast<int>(col), coef * sgn_right);
        }
        // middle faces
        for (int pos = 1; pos <= m; ++pos) {
          auto rit = rev.find(t[static_cast<std::size_t>(pos - 1)]);
          if (rit == rev.end()) continue;
          auto sgn = (pos % 2 == 1) ? -A.field.one() : A.field.one();
          for (const auto& [u, w, coef] : rit->second) {
            std::vector<int> nt(t.begin(), t.end());
            nt[static_cast<std::size_t>(pos - 1)] = u;
            nt.insert(nt.begin() + pos, w);
            long row_tuple = detail::tuple_index(nt, n);
            mat.add(static_cast<int>(row_tuple * n + a), static_cast<int>(col), coef * sgn);
          }
        }
      }
      // odometer increment
      for (std::size_t k = 0; k < t.size(); ++k) {
        if (++t[k] < n) break;
        t[k] = 0;
      }
    }
    out.maps.push_back(std::move(mat));
  }
  out.assert_complex();
  return out;
}

template <class K>
ComplexData<K> full_chain_complex(const GradedAlgebra<K>& A, int max_m) {
  if (!A.complete) throw InsufficientPrecisionError("full bar complex needs a finite algebra");
  ComplexData<K> out;
  out.field = A.field;
  out.dir = Direction::kHomology;
  const int n = A.dim();
  for (int m = 0; m <= max_m; ++m) {
    long d = detail::power(n, m + 1);
    require_resources(d * 64, "full chain term " + std::to_string(m));
    out.dims.push_back(d);
  }
  out.maps.push_back(SparseMatrix<K>::zero(A.field, 0, static_cast<int>(out.dims[0])));
  for (int m = 1; m <= max_m; ++m) {
    // columns: (a0, t1..tm) with index a0 + n * tuple_index(t)
    SparseMatrix<K> mat(A.field, static_cast<int>(out.dims[(std::size_t)m - 1]),
                        static_cast<int>(out.dims[(std::size_t)m]));
    auto sgn_last = (m % 2 == 0) ? A.field.one() : -A.field.one();
    std::vector<int> t(static_cast<std::size_t>(m), 0);
    long tcount = detail::power(n, m);
    for (long ti = 0; ti < tcount; ++ti) {
      for (int a0 = 0; a0 < n; ++a0) {
        long col = a0 + n * ti;
        // face 0: (a0*t1, t2..tm)
        {
          std::vector<int> rest(t.begin() + 1, t.end());
          long rest_idx = detail::tuple_index(rest, n);
          for (const auto& [b, coef] : A.multiply(a0, t[0]))
            mat.add(static_cast<int>(b + n * rest_idx), static_cast<int>(col), coef);
        }
        // middle faces
        for (int pos = 1; pos < m; ++pos) {
          auto sgn = (pos % 2 == 1) ? -A.field.one() : A.field.one();
          for (const auto& [b, coef] :
               A.multiply(t[static_cast<std::size_t>(pos - 1)], t[static_cast<std::size_t>(pos)])) {
            std::vector<int> nt(t.begin(), t.end());
            nt[static_cast<std::size_t>(pos - 1)] = b;
            nt.erase(nt.begin() + pos);
            mat.add(static_cast<int>(a0 + n * detail::tuple_index(nt, n)), static_cast<int>(col),
                    coef * sgn);
          }
        }
        // last face: (tm*a0, t1..t_{m-1})
        {
          std::vector<int> rest(t.begin(), t.end() - 1);
          long rest_idx = detail::tuple_index(rest, n);
          for (const auto& [b, coef] : A.multiply(t[static_cast<std::size_t>(m - 1)], a0))
            mat.add(static_cast<int>(b + n * rest_idx), static_cast<int>(col), coef * sgn_last);
        }
      }
      for (std::size_t k = 0; k < t.size(); ++k) {
        if (++t[k] < n) break;
        t[k] = 0;
      }
    }
    out.maps.push_back(std::move(mat));
  }
  out.assert_complex();
  return out;
}

// ---------------------------------------------------------------------------
// Public dimension queries.

template <class K>
DimTable hh_cohomology(const GradedAlgebra<K>& A, int max_i) {
  if (max_i < 0) throw Error("max_i must be >= 0");
  DimTable t;
  t.window.max_i = max_i;
  if (A.radical().empty()) {
    // semisimple: HH^0 is the center, higher groups vanish
    t.set(0, A.center_dim(0));
    for (int i = 1; i <= max_i; ++i) t.set(i, 0);
    return t;
  }
  auto cx = reduced_cochain_complex(A, max_i + 1);
  for (int i = 0; i <= max_i; ++i) t.set(i, cx.homology_at(i));
  return t;
}

template <class K>
DimTable hh_homology(const GradedAlgebra<K>& A, int max_i) {
  if (max_i < 0) throw Error("max_i must be >= 0");
  DimTable t;
  t.window.max_i = max_i;
  if (A.radical().empty()) {
    t.set(0, A.center_dim(0));
    for (int i = 1; i <= max_i; ++i) t.set(i, 0);
    return t;
  }
  auto cx = reduced_chain_complex(A, max_i + 1);
  for (int i = 0; i <= max_i; ++i) t.set(i, cx.homology_at(i));
  return t;
}

// One internal-degree window.  Homology windows work on truncated algebras
// built to at least that degree; cohomology additionally needs the algebra to
// be finite-dimensional, where the Hom complex splits by degree shift.
template <class K>
DimTable hh_graded(const GradedAlgebra<K>& A, Direction dir, int internal_degree, int max_i) {
  if (max_i < 0) throw Error("max_i must be >= 0");
  DimTable t;
  t.window.max_i = max_i;
  t.window.internal = {internal_degree, internal_degree};
  auto cx = (dir == Direction::kHomology)
                ? reduced_chain_complex(A, max_i + 1, internal_degree)
                : reduced_cochain_complex(A, max_i + 1, internal_degree);
  for (int i = 0; i <= max_i; ++i) t.set(i, internal_degree, cx.homology_at(i));
  return t;
}

template <class K>
DimTable full_bar_cohomology(const GradedAlgebra<K>& A, int max_i) {
  auto cx = full_cochain_complex(A, max_i + 1);
  DimTable t;
  t.window.max_i = max_i;
  for (int i = 0; i <= max_i; ++i) t.set(i, cx.homology_at(i));
  return t;
}

template <class K>
DimTable full_bar_homology(const GradedAlgebra<K>& A, int max_i) {
  auto cx = full_chain_complex(A, max_i + 1);
  DimTable t;
  t.window.max_i = max_i;
  for (int i = 0; i <= max_i; ++i) t.set(i, cx.homology_at(i));
  return t;
}

}  // namespace hlab
