#include <catch2/catch_amalgamated.hpp>

#include "hlab/geometry_oracle.hpp"

using namespace hlab;

TEST_CASE("Bott numbers: pinned examples") {
  // sections of O(d) on P^1
  for (int d = 0; d <= 5; ++d) CHECK(bott_dim(2, 0, 0, d) == d + 1);
  CHECK(bott_dim(2, 1, 1, 0) == 1);
  CHECK(bott_dim(3, 0, 0, 3) == 10);
  CHECK(bott_dim(2, 0, 1, -2) == 1);  // h^1(P^1, O(-2))
  CHECK(bott_dim(3, 1, 0, 3) == 8);   // h^0(T_P2) via Omega^1(3)
  CHECK(bott_dim(4, 2, 0, 4) == 15);  // h^0(T_P3) via Omega^2(4)
  // out-of-range form or cohomology degree counts as zero
  CHECK(bott_dim(2, 2, 0, 5) == 0);
  CHECK(bott_dim(2, 0, 2, 5) == 0);
}

TEST_CASE("Bott sweep: Serre duality and the vanishing pattern") {
  for (int n = 2; n <= 5; ++n)
    for (int p = 0; p <= n - 1; ++p)
      for (int q = 0; q <= n - 1; ++q)
        for (int m = -8; m <= 8; ++m) {
          INFO("n=" << n << " p=" << p << " q=" << q << " m=" << m);
          CHECK(bott_dim(n, p, q, m) == bott_dim(n, n - 1 - p, n - 1 - q, -m));
          if (q >= 1 && m >= 0 && !(p == q && m == 0)) CHECK(bott_dim(n, p, q, m) == 0);
        }
}

TEST_CASE("h^0 cases agree with the Euler-Koszul kernel count") {
  for (int n = 2; n <= 3; ++n)
    for (int p = 0; p <= n - 1; ++p)
      for (int m = 0; m <= 6; ++m) {
        INFO("n=" << n << " p=" << p << " m=" << m);
        CHECK(euler_koszul_h0(n, p, m) == bott_dim(n, p, 0, m));
      }
}

TEST_CASE("HKR assembly for projective spaces") {
  auto t2 = hkr_cohomology_dims(2, 3);
  CHECK(t2.row() == std::vector<long>{1, 3, 0, 0});
  auto t3 = hkr_cohomology_dims(3, 5);
  CHECK(t3.row() == std::vector<long>{1, 8, 10, 0, 0, 0});
  auto t4 = hkr_cohomology_dims(4, 7);
  CHECK(t4.row() == std::vector<long>{1, 15, 45, 35, 0, 0, 0, 0});
  // beyond 2 dim X everything vanishes
  for (int n = 2; n <= 4; ++n) {
    auto t = hkr_cohomology_dims(n, 2 * n);
    for (int i = 2 * (n - 1) + 1; i <= 2 * n; ++i) CHECK(t.at(i) == 0);
  }
}

TEST_CASE("Hodge homology of projective space is concentrated in degree 0") {
  for (int n : {2, 4}) {
    auto t = hodge_homology_dims(n, -(n - 1), 2 * n - 1);
    CHECK(t.at(0) == n);
    for (int i = -(n - 1); i <= 2 * n - 1; ++i)
      if (i != 0) CHECK(t.at(i) == 0);
  }
  CHECK(hodge_homology_dims(3, -1, 1).at(-1) == 0);
}

TEST_CASE("fixed-point counts for the order-2 action on two variables") {
  CyclicAction act{2, 2, {1, 1}};
  auto t = fixed_point_hh_homology(act, 4);
  CHECK(t.at(0, 0) == 2);  // the constant and one class per non-identity element
  CHECK(t.at(1, 2) == 4);
  CHECK(t.at(2, 2) == 1);
  CHECK(t.at(0, 2) == 3);
  CHECK(t.at(1, 1) == 0);
  CHECK(t.at(0, 4) == 5);
  CHECK(t.at(1, 4) == 8);
  CHECK(t.at(2, 4) == 3);
}

TEST_CASE("identity summand drops the extra classes") {
  CyclicAction act{2, 2, {1, 1}};
  auto t = fixed_point_hh_homology(act, 4, -1, /*identity_only=*/true);
  CHECK(t.at(0, 0) == 1);
  // identity-summand 0-forms are exactly the Veronese dimensions
  for (int n = 2; n <= 4; ++n) {
    CyclicAction diag{n, n, std::vector<int>(static_cast<std::size_t>(n), 1)};
    auto id = fixed_point_hh_homology(diag, 8, -1, true);
    for (int d = 0; d <= 8; ++d) CHECK(id.at(0, d) == veronese_hilbert_dim(n, d));
  }
}

TEST_CASE("form-degree-0, degree-0 entry counts free fixed points plus one") {
  for (int n = 2; n <= 4; ++n) {
    CyclicAction diag{n, n, std::vector<int>(static_cast<std::size_t>(n), 1)};
    CHECK(fixed_point_hh_homology(diag, 0).at(0, 0) == n);  // (n-1 free elements) + 1
  }
  // weights (1,0) mod 2: the non-identity element fixes a line, x2-axis
  CyclicAction mixed{2, 2, {1, 0}};
  // g != 1 contributes invariant monomials in x2 only; total degree-0 count is
  // still 1 + 1
  CHECK(fixed_point_hh_homology(mixed, 0).at(0, 0) == 2);
  CHECK(fixed_point_hh_homology(mixed, 2).at(0, 2) == 2 + 1);  // x1^2, x2^2 | x2^2
}

TEST_CASE("SL duality: cohomology is the reflected homology") {
  for (auto act : {CyclicAction{2, 2, {1, 1}}, CyclicAction{3, 3, {1, 1, 1}}}) {
    auto hom = fixed_point_hh_homology(act, 5);
    auto coh = fixed_point_hh_cohomology(act, 5);
    for (int i = 0; i <= act.num_vars; ++i)
      for (int d = 0; d <= 5; ++d) {
        INFO("i=" << i << " d=" << d);
        CHECK(coh.at(i, d) == hom.at(act.num_vars - i, d));
      }
  }
}

TEST_CASE("GL case: the determinant weight shifts the invariance condition") {
  CyclicAction act{2, 4, {1, 3}};
  CHECK(act.det_weight() == 0);  // 1+3 = 0 mod 4: still SL
  CHECK(fixed_point_hh_cohomology(act, 2).at(0, 0) == 0);  // no degree-0 2-forms

  CyclicAction gl{2, 3, {1, 1}};
  CHECK(gl.det_weight() == 2);
  // cohomology at i=2 counts 0-forms of weight = 2 mod 3: monomials of degree
  // 2 on the identity component
  CHECK(fixed_point_hh_cohomology(gl, 2).at(2, 2) == 3);
  // homology at i=0 in degree 2 counts invariant monomials: none (2 != 0 mod 3)
  CHECK(fixed_point_hh_homology(gl, 2).at(0, 2) == 0);
}

TEST_CASE("identity summand totals: dropping invariance recovers free counts") {
  // summing the identity-element count over all residue classes counts all
  // monomial forms: C(vars, i) * dim S_{d-i}
  for (auto act : {CyclicAction{2, 2, {1, 1}}, CyclicAction{3, 3, {1, 1, 1}},
                   CyclicAction{2, 4, {1, 3}}}) {
    for (int i = 0; i <= act.num_vars; ++i)
      for (int d = i; d <= 5; ++d) {
        long total = 0;
        for (int shift = 0; shift < act.order; ++shift)
          total += fixed_point_form_count(act, 0, i, d, shift);
        long sym = 1;
        for (int k = 1; k < act.num_vars; ++k) sym = sym * (d - i + k) / k;
        INFO("vars=" << act.num_vars << " i=" << i << " d=" << d);
        CHECK(total == binomial(act.num_vars, i) * sym);
      }
  }
}

TEST_CASE("binomials") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(4, 7) == 0);
  CHECK(binomial(-1, 0) == 0);
}
