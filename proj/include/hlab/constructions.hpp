#pragma once

// Builders for the algebras under study:
//   * Beilinson endomorphism algebras of the tilting bundles on P^{n-1}
//     (symmetric and exterior variants),
//   * their rolled-up counterpart on the cyclic quiver (the endomorphism
//     algebra of the pulled-back tilting bundle on the canonical bundle),
//   * twisted group algebras of diagonal cyclic actions over prime fields,
//     presented as quiver-graded algebras via the discrete Fourier transform,
//   * the Hilbert series of Veronese subrings.

#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "hlab/algebra_io.hpp"
#include "hlab/dim_table.hpp"
#include "hlab/errors.hpp"
#include "hlab/graded_algebra.hpp"
#include "hlab/quiver.hpp"
#include "hlab/resource.hpp"

namespace hlab {

enum class BeilinsonVariant { kSymmetric, kExterior };

struct BeilinsonSpec {
  int n = 2;  // dimension of the underlying vector space, >= 2
  BeilinsonVariant variant = BeilinsonVariant::kSymmetric;
};

inline std::string beilinson_arrow_id(int var, int level) {
  return "x" + std::to_string(var + 1) + "_" + std::to_string(level);
}

// Arrows x_1..x_n from each vertex i to i+1 (linear quiver on n vertices).
inline Quiver beilinson_quiver(int n) {
  Quiver q;
  q.vertex_count = n;
  for (int i = 0; i + 1 < n; ++i)
    for (int v = 0; v < n; ++v) q.arrows.push_back({beilinson_arrow_id(v, i), i, i + 1, 1});
  return q;
}

// Quadratic relations between consecutive vertex pairs: the kernel of
// V (x) V -> Sym_2 V (antisymmetrizers) for the symmetric variant, the kernel
// of V* (x) V* -> Lambda^2 V* (symmetrizers and squares) for the exterior one.
// `levels` counts the consecutive pairs: n-2 for the linear quiver, n for the
// cyclic one (vertex arithmetic mod n handled by the caller's arrow ids).
inline RelationSet beilinson_relations(const Quiver& q, int n, BeilinsonVariant variant) {
  (void)q;  // relations reference arrows by id, not position
  RelationSet rels;
  int levels = n - 2;
  for (int i = 0; i < levels; ++i) {
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b) {
        if (variant == BeilinsonVariant::kSymmetric && a == b) continue;
        Relation r;
        if (a != b) {
          // "a then b" -/+ "b then a"
          r.terms.push_back({Rational(1), {beilinson_arrow_id(a, i), beilinson_arrow_id(b, i + 1)}});
          Rational c = variant == BeilinsonVariant::kSymmetric ? Rational(-1) : Rational(1);
          r.terms.push_back({c, {beilinson_arrow_id(b, i), beilinson_arrow_id(a, i + 1)}});
        } else {
          r.terms.push_back({Rational(1), {beilinson_arrow_id(a, i), beilinson_arrow_id(a, i + 1)}});
        }
        rels.relations.push_back(std::move(r));
      }
  }
  return rels;
}

inline AlgebraDescription beilinson_description(const BeilinsonSpec& spec) {
  if (spec.n < 2) throw Error("Beilinson algebra needs n >= 2");
  AlgebraDescription desc;
  desc.quiver = beilinson_quiver(spec.n);
  desc.relations = beilinson_relations(desc.quiver, spec.n, spec.variant);
  return desc;
}

template <class K>
GradedAlgebra<K> beilinson_algebra(K field, const BeilinsonSpec& spec) {
  auto desc = beilinson_description(spec);
  auto A = build_algebra(field, desc.quiver, desc.relations, spec.n - 1);
  if (!A.complete) throw Error("internal: Beilinson algebra failed the exhaustion probe");
  return A;
}

inline AlgebraDescription dual_numbers_description();

// Dual numbers k[x]/(x^2): one vertex, one loop, square relation.  Used as a
// reference algebra of infinite global dimension.
template <class K>
GradedAlgebra<K> dual_numbers_algebra(K field, int max_degree = 5) {
  auto desc = dual_numbers_description();
  return build_algebra(field, desc.quiver, desc.relations, max_degree);
}

// ---------------------------------------------------------------------------
// Rolled-up algebra: cyclic quiver on n vertices, arrows x_1..x_n between
// every consecutive pair mod n, commutativity relations imposed cyclically
// (including the wrap-around pairs).

inline std::string cyclic_arrow_id(int var, int level) {
  return "x" + std::to_string(var + 1) + "_" + std::to_string(level);
}

inline AlgebraDescription rolled_up_description(int n) {
  if (n < 2) throw Error("rolled-up algebra needs n >= 2");
  AlgebraDescription desc;
  desc.quiver.vertex_count = n;
  for (int i = 0; i < n; ++i)
    for (int v = 0; v < n; ++v)
      desc.quiver.arrows.push_back({cyclic_arrow_id(v, i), i, (i + 1) % n, 1});
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        Relation r;
        r.terms.push_back({Rational(1), {cyclic_arrow_id(a, i), cyclic_arrow_id(b, j)}});
        r.terms.push_back({Rational(-1), {cyclic_arrow_id(b, i), cyclic_arrow_id(a, j)}});
        desc.relations.relations.push_back(std::move(r));
      }
  }
  return desc;
}

template <class K>
GradedAlgebra<K> rolled_up_algebra(K field, int n, int max_degree) {
  if (max_degree < 0) throw Error("negative truncation");
  auto desc = rolled_up_description(n);
  return build_algebra(field, desc.quiver, desc.relations, max_degree);
}

// Entrywise dimension of the matrix description: position (i,j) carries the
// polynomial components of degree d with d = i-j mod n; summed over all n^2
// positions this is the expected Hilbert function of the rolled-up algebra.
inline long rolled_up_expected_dim(int n, int d) {
  long sym = 1;  // dim Sym_d(k^n) = C(d+n-1, n-1)
  for (int k = 1; k <= n - 1; ++k) sym = sym * (d + k) / k;
  long count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (((i - j) % n + n) % n == d % n) ++count;
  return count * sym;
}

// ---------------------------------------------------------------------------
// Diagonal cyclic actions and their twisted group algebras.

struct CyclicAction {
  int num_vars = 1;
  int order = 1;                    // r
  std::vector<int> weights;         // one residue mod r per variable

  void validate() const {
    if (num_vars < 1 || order < 1) throw Error("cyclic action needs vars >= 1, order >= 1");
    if (static_cast<int>(weights.size()) != num_vars)
      throw Error("need one weight per variable");
    for (int w : weights)
      if (w < 0 || w >= order) throw Error("weights must lie in [0, order)");
  }

  int det_weight() const {
    long s = std::accumulate(weights.begin(), weights.end(), 0L);
    return static_cast<int>(s % order);
  }
};

namespace detail {

// Monomials in `vars` variables of total degree d, lexicographic order.
inline void monomials_of_degree(int vars, int d, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(static_cast<std::size_t>(vars), 0);
  std::function<void(int, int)> rec = [&](int pos, int rest) {
    if (pos == vars - 1) {
      cur[static_cast<std::size_t>(pos)] = rest;
      out.push_back(cur);
      return;
    }
    for (int e = rest; e >= 0; --e) {
      cur[static_cast<std::size_t>(pos)] = e;
      rec(pos + 1, rest - e);
    }
  };
  if (vars == 0) {
    if (d == 0) out.push_back({});
    return;
  }
  rec(0, d);
}

inline std::string monomial_label(const std::vector<int>& exps) {
  std::string s;
  for (std::size_t v = 0; v < exps.size(); ++v) {
    if (exps[v] == 0) continue;
    if (!s.empty()) s += " ";
    s += "x" + std::to_string(v + 1);
    if (exps[v] > 1) s += "^" + std::to_string(exps[v]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace detail

// Twisted group algebra of a diagonal cyclic action on a polynomial ring,
// over a prime field containing the needed roots of unity.  The monomial *
// group-element basis with its zeta-twisted multiplication is converted by
// the discrete Fourier transform into the idempotent (vertex) basis, which
// exhibits the algebra as graded over a cyclic quiver on `order` vertices:
// the degree-1 element (x_v at vertex u) is an arrow u -> u + w_v mod r.
inline GradedAlgebra<PrimeField> twisted_group_algebra(PrimeField field, const CyclicAction& act,
                                                       int max_degree) {
  act.validate();
  const int r = act.order;
  const std::uint64_t p = field.p;
  if ((p - 1) % static_cast<std::uint64_t>(r) != 0)
    throw Error("twisted group algebra needs p = 1 mod r (got p=" + std::to_string(p) +
                ", r=" + std::to_string(r) + ")");
  FpScalar zeta = field.primitive_root_of_unity(static_cast<std::uint64_t>(r));
  auto zpow = [&](long e) {
    long m = e % r;
    if (m < 0) m += r;
    return PrimeField::pow(zeta, static_cast<std::uint64_t>(m));
  };
  FpScalar inv_r = field.from_long(r).inverse();

  GradedAlgebra<PrimeField> A;
  A.field = field;
  A.truncation = max_degree;
  A.quiver.vertex_count = r;
  for (int u = 0; u < r; ++u)
    for (int v = 0; v < act.num_vars; ++v)
      A.quiver.arrows.push_back({"x" + std::to_string(v + 1) + "@" + std::to_string(u), u,
                                 (u + act.weights[static_cast<std::size_t>(v)]) % r, 1});

  // basis: (monomial a, vertex u) = x^a e_u, ordered by degree, monomial, u
  struct Mono {
    std::vector<int> exps;
    int wdeg;  // sum a_v w_v mod r
  };
  std::vector<std::vector<Mono>> monos(static_cast<std::size_t>(max_degree) + 1);
  long long count = 0;
  for (int d = 0; d <= max_degree; ++d) {
    std::vector<std::vector<int>> raw;
    detail::monomials_of_degree(act.num_vars, d, raw);
    for (auto& e : raw) {
      long w = 0;
      for (int v = 0; v < act.num_vars; ++v)
        w += static_cast<long>(e[static_cast<std::size_t>(v)]) *
             act.weights[static_cast<std::size_t>(v)];
      monos[static_cast<std::size_t>(d)].push_back({std::move(e), static_cast<int>(w % r)});
    }
    count += static_cast<long long>(monos[static_cast<std::size_t>(d)].size()) * r;
    require_resources(count * count * 16, "twisted group algebra to degree " + std::to_string(d));
  }

  std::map<std::pair<std::vector<int>, int>, int> index;  // (exps, u) -> basis idx
  A.by_degree.assign(static_cast<std::size_t>(max_degree) + 1, {});
  for (int d = 0; d <= max_degree; ++d)
    for (const auto& m : monos[static_cast<std::size_t>(d)])
      for (int u = 0; u < r; ++u) {
        int idx = A.dim();
        std::string label = detail::monomial_label(m.exps) + " @e" + std::to_string(u);
        A.basis.push_back(BasisElement{u, (u + m.wdeg) % r, d, label});
        A.by_degree[static_cast<std::size_t>(d)].push_back(idx);
        index[{m.exps, u}] = idx;
      }

  // products via the group-element basis:
  //   x^a e_u = (1/r) sum_s zeta^{-us} x^a g^s,
  //   (x^a g^s)(x^b g^t) = zeta^{s wdeg(b)} x^{a+b} g^{s+t},
  //   x^c g^k = sum_w zeta^{wk} x^c e_w.
  for (int d1 = 0; d1 <= max_degree; ++d1)
    for (int d2 = 0; d1 + d2 <= max_degree; ++d2)
      for (const auto& ma : monos[static_cast<std::size_t>(d1)])
        for (const auto& mb : monos[static_cast<std::size_t>(d2)]) {
          std::vector<int> sum(ma.exps);
          for (int v = 0; v < act.num_vars; ++v)
            sum[static_cast<std::size_t>(v)] += mb.exps[static_cast<std::size_t>(v)];
          for (int u = 0; u < r; ++u)
            for (int v = 0; v < r; ++v) {
              // coefficient of g^k in the product
              std::vector<FpScalar> gcoef(static_cast<std::size_t>(r), field.zero());
              for (int s = 0; s < r; ++s)
                for (int t = 0; t < r; ++t) {
                  FpScalar c = inv_r * zpow(-static_cast<long>(u) * s) * inv_r *
                               zpow(-static_cast<long>(v) * t) * zpow(static_cast<long>(s) * mb.wdeg);
                  gcoef[static_cast<std::size_t>((s + t) % r)] += c;
                }
              LinComb<PrimeField> comb;
              for (int w = 0; w < r; ++w) {
                FpScalar c = field.zero();
                for (int k = 0; k < r; ++k)
                  c += gcoef[static_cast<std::size_t>(k)] * zpow(static_cast<long>(w) * k);
                if (!c.is_zero())
                  detail::lincomb_add<PrimeField>(comb, index.at({sum, w}), c);
              }
              A.set_product(index.at({ma.exps, u}), index.at({mb.exps, v}), std::move(comb));
            }
        }

  // polynomial rings never die out
  A.complete = false;
  return A;
}

// The quiver presentation the discrete Fourier transform exhibits: arrows
// (variable v at vertex u): u -> u + w_v, with the commutativity relations
// transported through the idempotents.  Coefficients are all +-1, so the
// presentation serializes over the rationals.
inline AlgebraDescription twisted_description(const CyclicAction& act) {
  act.validate();
  const int r = act.order;
  auto id = [&](int var, int vertex) {
    return "x" + std::to_string(var + 1) + "@" + std::to_string(vertex);
  };
  AlgebraDescription desc;
  desc.quiver.vertex_count = r;
  for (int u = 0; u < r; ++u)
    for (int v = 0; v < act.num_vars; ++v)
      desc.quiver.arrows.push_back(
          {id(v, u), u, (u + act.weights[static_cast<std::size_t>(v)]) % r, 1});
  for (int u = 0; u < r; ++u)
    for (int a = 0; a < act.num_vars; ++a)
      for (int b = a + 1; b < act.num_vars; ++b) {
        Relation rel;
        rel.terms.push_back(
            {Rational(1),
             {id(a, u), id(b, (u + act.weights[static_cast<std::size_t>(a)]) % r)}});
        rel.terms.push_back(
            {Rational(-1),
             {id(b, u), id(a, (u + act.weights[static_cast<std::size_t>(b)]) % r)}});
        desc.relations.relations.push_back(std::move(rel));
      }
  return desc;
}

inline AlgebraDescription dual_numbers_description() {
  AlgebraDescription desc;
  desc.quiver.vertex_count = 1;
  desc.quiver.arrows = {{"x", 0, 0, 1}};
  Relation r;
  r.terms.push_back({Rational(1), {"x", "x"}});
  desc.relations.relations.push_back(std::move(r));
  return desc;
}

// ---------------------------------------------------------------------------
// Veronese Hilbert series: dim of k[x_1..x_n]^{(n)} in degree d is
// C(d+n-1, n-1) when n | d and 0 otherwise.

inline long veronese_hilbert_dim(int n, int d) {
  if (n < 1) throw Error("veronese needs n >= 1");
  if (d < 0 || d % n != 0) return 0;
  long v = 1;
  for (int k = 1; k <= n - 1; ++k) v = v * (d + k) / k;
  return v;
}

inline HilbertSeries veronese_hilbert(int n, int max_degree) {
  HilbertSeries h;
  for (int d = 0; d <= max_degree; ++d) h.dims.push_back(veronese_hilbert_dim(n, d));
  h.complete = false;
  return h;
}

}  // namespace hlab
