#pragma once

// Independent "geometric side" computations, all integer combinatorics:
//   * Bott's formula for dim H^q(P^{n-1}, Omega^p(m)),
//   * HKR/Hodge assemblers for the Hochschild dimensions of projective space,
//   * invariant-differential-form counts on the fixed-point scheme of a
//     diagonal cyclic action, grading convention: x^a dx_S has internal
//     degree |a| + |S|,
//   * an Euler/Koszul section counter used as a redundant route to the h^0
//     cases of Bott's formula.

#include <vector>

#include "hlab/constructions.hpp"
#include "hlab/dim_table.hpp"
#include "hlab/errors.hpp"
#include "hlab/sparse_matrix.hpp"

namespace hlab {

inline long binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// dim H^q(P^{n-1}, Omega^p(m)).  Out-of-range p or q counts as zero.
inline long bott_dim(int n, int p, int q, int m) {
  if (n < 2) throw Error("bott_dim needs n >= 2");
  const int N = n - 1;  // dim of the projective space
  if (p < 0 || p > N || q < 0 || q > N) return 0;
  if (q == 0 && m > p) return binomial(m + N - p, m) * binomial(m - 1, p);
  if (p == q && m == 0) return 1;
  if (q == N && m < p - N) return binomial(-m + p, -m) * binomial(-m - 1, N - p);
  return 0;
}

// HH^i(P^{n-1}) via HKR: sum over p+q=i of h^q(Lambda^p T).  With
// omega = O(-n) one has Lambda^p T = Omega^{n-1-p}(n), so every summand is a
// Bott number.
inline DimTable hkr_cohomology_dims(int n, int max_i) {
  DimTable t;
  t.window.max_i = max_i;
  for (int i = 0; i <= max_i; ++i) {
    long total = 0;
    for (int p = 0; p <= std::min(i, n - 1); ++p) {
      int q = i - p;
      total += bott_dim(n, n - 1 - p, q, n);
    }
    t.set(i, total);
  }
  return t;
}

// HH_i(P^{n-1}) via the Hodge decomposition: sum over p-q=i of h^q(Omega^p).
// Entries for negative i are part of the table (they all vanish on P^{n-1}).
inline DimTable hodge_homology_dims(int n, int min_i, int max_i) {
  DimTable t;
  t.window.min_i = min_i;
  t.window.max_i = max_i;
  for (int i = min_i; i <= max_i; ++i) {
    long total = 0;
    for (int p = 0; p <= n - 1; ++p) {
      int q = p - i;
      total += bott_dim(n, p, q, 0);
    }
    t.set(i, total);
  }
  return t;
}

// ---------------------------------------------------------------------------
// Fixed-point oracle for diagonal cyclic actions.

namespace detail {

// #monomials on the coordinates `support` of degree `deg` whose weight is
// congruent to `residue` mod r.
inline long monomial_count(const std::vector<int>& support_weights, int order, int deg,
                           int residue) {
  // dp[d][c]: monomials of degree d with weight class c
  std::vector<std::vector<long>> dp(static_cast<std::size_t>(deg) + 1,
                                    std::vector<long>(static_cast<std::size_t>(order), 0));
  dp[0][0] = 1;
  for (int w : support_weights) {
    // multiply by 1/(1 - t x^w): prefix sums along the variable
    for (int d = 1; d <= deg; ++d)
      for (int c = 0; c < order; ++c) {
        int pc = ((c - w) % order + order) % order;
        dp[static_cast<std::size_t>(d)][static_cast<std::size_t>(c)] +=
            dp[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(pc)];
      }
  }
  return dp[static_cast<std::size_t>(deg)][static_cast<std::size_t>(
      ((residue % order) + order) % order)];
}

// #subsets of the listed weights of size k with weight sum congruent to c.
inline std::vector<std::vector<long>> subset_counts(const std::vector<int>& weights, int order) {
  std::vector<std::vector<long>> dp(
      weights.size() + 1, std::vector<long>(static_cast<std::size_t>(order), 0));
  dp[0][0] = 1;
  for (int w : weights)
    for (std::size_t k = dp.size() - 1; k >= 1; --k)
      for (int c = 0; c < order; ++c) {
        int pc = ((c - w) % order + order) % order;
        dp[k][static_cast<std::size_t>(c)] += dp[k - 1][static_cast<std::size_t>(pc)];
      }
  return dp;
}

}  // namespace detail

// Number of monomial forms x^a dx_S on the fixed subspace of g = c^s (the
// coordinates j with s*w_j = 0 mod r), with |S| = form_degree, |a| + |S| =
// internal_degree, and total weight congruent to `shift` mod r.
inline long fixed_point_form_count(const CyclicAction& act, int s, int form_degree,
                                   int internal_degree, int shift) {
  act.validate();
  if (form_degree < 0 || internal_degree < 0) return 0;
  std::vector<int> fixed_weights;
  for (int j = 0; j < act.num_vars; ++j)
    if ((static_cast<long>(s) * act.weights[static_cast<std::size_t>(j)]) % act.order == 0)
      fixed_weights.push_back(act.weights[static_cast<std::size_t>(j)]);
  if (form_degree > static_cast<int>(fixed_weights.size())) return 0;
  int mono_deg = internal_degree - form_degree;
  if (mono_deg < 0) return 0;
  auto subs = detail::subset_counts(fixed_weights, act.order);
  long total = 0;
  for (int c = 0; c < act.order; ++c) {
    long ways = subs[static_cast<std::size_t>(form_degree)][static_cast<std::size_t>(c)];
    if (ways == 0) continue;
    int need = ((shift - c) % act.order + act.order) % act.order;
    total += ways * detail::monomial_count(fixed_weights, act.order, mono_deg, need);
  }
  return total;
}

// HH_i(S*G) as invariant i-forms on the fixed-point scheme, summed over the
// group, graded by internal degree: entries (i, d) for 0 <= i <= max_i
// (default num_vars; higher entries vanish), 0 <= d <= max_degree.
// `identity_only` restricts to the g = 1 summand.
inline DimTable fixed_point_hh_homology(const CyclicAction& act, int max_degree, int max_i = -1,
                                        bool identity_only = false) {
  act.validate();
  if (max_i < 0) max_i = act.num_vars;
  DimTable t;
  t.window.max_i = max_i;
  t.window.internal = {0, max_degree};
  for (int i = 0; i <= max_i; ++i)
    for (int d = 0; d <= max_degree; ++d) {
      long total = 0;
      for (int s = 0; s < (identity_only ? 1 : act.order); ++s)
        total += fixed_point_form_count(act, s, i, d, 0);
      t.set(i, d, total);
    }
  return t;
}

// HH^i(S*G): the (num_vars - i)-form count with the invariance condition
// shifted by the determinant weight.  In the SL case (det weight 0) this is
// the homology table reflected at i -> num_vars - i.
inline DimTable fixed_point_hh_cohomology(const CyclicAction& act, int max_degree, int max_i = -1) {
  act.validate();
  if (max_i < 0) max_i = act.num_vars;
  DimTable t;
  t.window.max_i = max_i;
  t.window.internal = {0, max_degree};
  int shift = act.det_weight();
  for (int i = 0; i <= max_i; ++i)
    for (int d = 0; d <= max_degree; ++d) {
      long total = 0;
      for (int s = 0; s < act.order; ++s) {
        if (act.num_vars - i < 0) break;
        total += fixed_point_form_count(act, s, act.num_vars - i, d, shift);
      }
      t.set(i, d, total);
    }
  return t;
}

// ---------------------------------------------------------------------------
// Redundant h^0 route: global sections of Omega^p(m) on P^{n-1} as the kernel
// of the Koszul contraction  Lambda^p V* (x) Sym_{m-p} -> Lambda^{p-1} V* (x)
// Sym_{m-p+1},  (e*_S (x) f) -> sum_i sign * e*_{S minus i} (x) x_i f.

inline long euler_koszul_h0(int n, int p, int m) {
  if (n < 2) throw Error("euler_koszul_h0 needs n >= 2");
  if (p < 0 || p > n - 1) return 0;
  if (m - p < 0) return 0;
  RationalField F;

  // enumerate subsets of {0..n-1} of size p and monomials of degree m-p
  std::vector<std::vector<int>> subs_p, subs_p1;
  std::vector<int> cur;
  std::function<void(int, int, std::vector<std::vector<int>>&)> gen =
      [&](int start, int need, std::vector<std::vector<int>>& out) {
        if (need == 0) {
          out.push_back(cur);
          return;
        }
        for (int v = start; v < n; ++v) {
          cur.push_back(v);
          gen(v + 1, need - 1, out);
          cur.pop_back();
        }
      };
  gen(0, p, subs_p);
  if (p >= 1) gen(0, p - 1, subs_p1);

  std::vector<std::vector<int>> mono_lo, mono_hi;
  detail::monomials_of_degree(n, m - p, mono_lo);
  detail::monomials_of_degree(n, m - p + 1, mono_hi);
  auto mono_index = [](const std::vector<std::vector<int>>& monos,
                       const std::vector<int>& m) {
    for (std::size_t k = 0; k < monos.size(); ++k)
      if (monos[k] == m) return static_cast<int>(k);
    throw Error("internal: monomial not found");
  };
  auto sub_index = [](const std::vector<std::vector<int>>& subs, const std::vector<int>& s) {
    for (std::size_t k = 0; k < subs.size(); ++k)
      if (subs[k] == s) return static_cast<int>(k);
    throw Error("internal: subset not found");
  };

  int cols = static_cast<int>(subs_p.size() * mono_lo.size());
  int rows = p >= 1 ? static_cast<int>(subs_p1.size() * mono_hi.size()) : 0;
  SparseMatrix<RationalField> kappa(F, rows, cols);
  if (p >= 1) {
    for (std::size_t si = 0; si < subs_p.size(); ++si)
      for (std::size_t mi = 0; mi < mono_lo.size(); ++mi) {
        int col = static_cast<int>(si * mono_lo.size() + mi);
        for (std::size_t pos = 0; pos < subs_p[si].size(); ++pos) {
          int v = subs_p[si][pos];
          std::vector<int> rest = subs_p[si];
          rest.erase(rest.begin() + static_cast<long>(pos));
          std::vector<int> mono = mono_lo[mi];
          mono[static_cast<std::size_t>(v)] += 1;
          int row = sub_index(subs_p1, rest) * static_cast<int>(mono_hi.size()) +
                    mono_index(mono_hi, mono);
          Rational sign = (pos % 2 == 0) ? Rational(1) : Rational(-1);
          kappa.add(row, col, sign);
        }
      }
  }
  return cols - kappa.rank();
}

}  // namespace hlab
