#include <catch2/catch_amalgamated.hpp>

#include "hlab/constructions.hpp"
#include "hlab/geometry_oracle.hpp"
#include "hlab/resolution.hpp"

using namespace hlab;
using QQ = RationalField;

TEST_CASE("projective simples have length-0 resolutions") {
  auto A = beilinson_algebra(QQ{}, BeilinsonSpec{2, BeilinsonVariant::kSymmetric});
  auto res = minimal_resolution(simple_module(A, 0), 5);
  CHECK(res.finished);
  CHECK(res.length() == 0);
  CHECK(res.minimal);
}

TEST_CASE("S_1 over the Kronecker algebra: 0 -> P_0^2 -> P_1 -> S_1") {
  auto A = beilinson_algebra(QQ{}, BeilinsonSpec{2, BeilinsonVariant::kSymmetric});
  auto res = minimal_resolution(simple_module(A, 1), 5);
  REQUIRE(res.finished);
  CHECK(res.length() == 1);
  CHECK(res.minimal);
  REQUIRE(res.steps[0].size() == 1);
  CHECK(res.steps[0][0].vertex == 1);
  REQUIRE(res.steps[1].size() == 2);
  CHECK(res.steps[1][0].vertex == 0);
  CHECK(res.steps[1][1].vertex == 0);
  CHECK(res.steps[1][0].degree == 1);
}

TEST_CASE("S_2 over the n=3 Beilinson algebra has length 2") {
  auto A = beilinson_algebra(QQ{}, BeilinsonSpec{3, BeilinsonVariant::kSymmetric});
  auto res = minimal_resolution(simple_module(A, 2), 5);
  REQUIRE(res.finished);
  CHECK(res.length() == 2);
  CHECK(res.minimal);
  // Koszul: step m is P_{2-m}^{C(3,m)}
  CHECK(res.step_rank(0) == 1);
  CHECK(res.step_rank(1) == 3);
  CHECK(res.step_rank(2) == 3);
}

TEST_CASE("dual numbers: resolution never finishes") {
  auto D = dual_numbers_algebra(QQ{}, 8);
  auto res = minimal_resolution(simple_module(D, 0), 6);
  CHECK_FALSE(res.finished);
  CHECK(res.length() == 6);  // one period-1 step per allowed length
  for (int m = 0; m <= 6; ++m) CHECK(res.step_rank(m) == 1);

  auto g = global_dimension(D, 4);
  CHECK_FALSE(g.value.has_value());
  CHECK(smoothness_check(D, 4) == Smoothness::kNotSmoothUpToBound);
}

TEST_CASE("global dimension of the tilting algebras is n-1") {
  for (int n = 2; n <= 4; ++n) {
    for (auto variant : {BeilinsonVariant::kSymmetric, BeilinsonVariant::kExterior}) {
      auto A = beilinson_algebra(QQ{}, BeilinsonSpec{n, variant});
      auto g = global_dimension(A, n + 2);
      INFO("n=" << n << " variant=" << (variant == BeilinsonVariant::kSymmetric ? "sym" : "ext"));
      REQUIRE(g.value.has_value());
      CHECK(*g.value == n - 1);
      CHECK(smoothness_check(A, n + 2) == Smoothness::kSmooth);
      // pd S_i = i for the symmetric variant
      if (variant == BeilinsonVariant::kSymmetric)
        for (int v = 0; v < n; ++v) CHECK(g.simple_pd[static_cast<std::size_t>(v)] == v);
    }
  }
}

TEST_CASE("Ext algebra of the symmetric algebra is the exterior one and back") {
  for (int n = 2; n <= 3; ++n) {
    auto A0 = beilinson_algebra(QQ{}, BeilinsonSpec{n, BeilinsonVariant::kSymmetric});
    auto A1 = beilinson_algebra(QQ{}, BeilinsonSpec{n, BeilinsonVariant::kExterior});
    auto ext0 = ext_algebra_dims(A0, n - 1);
    auto ext1 = ext_algebra_dims(A1, n - 1);
    auto h0 = A0.hilbert();
    auto h1 = A1.hilbert();
    for (int i = 0; i <= n - 1; ++i) {
      CHECK(ext0.at(i) == h1.dim(i));
      CHECK(ext1.at(i) == h0.dim(i));
    }
  }
}

TEST_CASE("vertex simples over the rolled-up algebra have pd n within the window") {
  for (int n = 2; n <= 3; ++n) {
    auto B = rolled_up_algebra(QQ{}, n, 2 * n);
    for (int v = 0; v < n; ++v) {
      auto res = minimal_resolution(simple_module(B, v), n + 2);
      INFO("n=" << n << " vertex " << v);
      REQUIRE(res.finished);
      CHECK(res.length() == n);
      CHECK(res.minimal);
      CHECK(res.certified_degree == 2 * n);
      // Koszul steps: C(n, m) generators in degree m
      for (int m = 0; m <= n; ++m) {
        CHECK(res.step_rank(m) == binomial(n, m));
        for (const auto& g : res.steps[static_cast<std::size_t>(m)]) CHECK(g.degree == m);
      }
    }
    auto g = global_dimension(B, n + 2);
    REQUIRE(g.value.has_value());
    CHECK(*g.value == n);
  }
}

TEST_CASE("resolutions over a prime field") {
  PrimeField F5(5);
  auto T = twisted_group_algebra(F5, CyclicAction{2, 2, {1, 1}}, 4);
  auto g = global_dimension(T, 4);
  REQUIRE(g.value.has_value());
  CHECK(*g.value == 2);
}
