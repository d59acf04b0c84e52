#include <catch2/catch_amalgamated.hpp>

#include "hlab/constructions.hpp"
#include "hlab/graded_algebra.hpp"

using namespace hlab;
using QQ = RationalField;

namespace {

Quiver kronecker_quiver() {
  Quiver q;
  q.vertex_count = 2;
  q.arrows = {{"a", 0, 1, 1}, {"b", 0, 1, 1}};
  return q;
}

GradedAlgebra<QQ> dual_numbers(int D = 5) { return dual_numbers_algebra(QQ{}, D); }

}  // namespace

TEST_CASE("Kronecker quiver: no relations, no length-2 paths") {
  auto A = build_algebra(QQ{}, kronecker_quiver(), RelationSet{}, 2);
  CHECK(A.hilbert().dims == std::vector<long>{2, 2, 0});
  CHECK(A.complete);
  CHECK(A.idempotents_ok());
  CHECK(A.associativity_ok());
  CHECK(A.grading_ok());
}

TEST_CASE("dual numbers k[x]/(x^2)") {
  auto A = dual_numbers();
  CHECK(A.hilbert().dims == std::vector<long>{1, 1, 0, 0, 0, 0});
  CHECK(A.complete);
  CHECK(A.idempotents_ok());
  CHECK(A.associativity_ok());
  // x * x = 0
  int x = A.by_degree[1][0];
  CHECK(A.multiply(x, x).empty());
}

TEST_CASE("Beilinson symmetric n=3 has total dimension 15") {
  auto A = beilinson_algebra(QQ{}, BeilinsonSpec{3, BeilinsonVariant::kSymmetric});
  CHECK(A.hilbert().total() == 15);
  CHECK(A.hilbert().dims == std::vector<long>{3, 6, 6});
  CHECK(A.complete);
  CHECK(A.idempotents_ok());
  CHECK(A.associativity_ok());
  CHECK(A.grading_ok());
}

TEST_CASE("inhomogeneous relations are rejected") {
  Quiver q = kronecker_quiver();
  Relation r;
  r.terms.push_back({Rational(1), {"a"}});
  r.terms.push_back({Rational(1), {"a", "b"}});  // different degree, not composable anyway
  RelationSet rels{{r}};
  CHECK_THROWS_AS(build_algebra(QQ{}, q, rels, 2), Error);
}

TEST_CASE("no relations reproduces path counting") {
  // wheel with two loops of different degrees at one vertex
  Quiver q;
  q.vertex_count = 1;
  q.arrows = {{"u", 0, 0, 1}, {"v", 0, 0, 2}};
  auto A = build_algebra(QQ{}, q, RelationSet{}, 6);
  // number of words in u (deg 1), v (deg 2) of total degree d: Fibonacci-like
  std::vector<long> expect{1, 1, 2, 3, 5, 8, 13};
  CHECK(A.hilbert().dims == expect);
  CHECK_FALSE(A.complete);
}

TEST_CASE("basis dimensions are independent of arrow order") {
  auto spec = BeilinsonSpec{3, BeilinsonVariant::kSymmetric};
  auto A = beilinson_algebra(QQ{}, spec);
  // same quiver with arrows declared in reverse order
  Quiver q = A.quiver;
  std::reverse(q.arrows.begin(), q.arrows.end());
  auto rels = beilinson_relations(q, 3, BeilinsonVariant::kSymmetric);
  auto B = build_algebra(QQ{}, q, rels, 2);
  CHECK(A.hilbert().dims == B.hilbert().dims);
}

TEST_CASE("center dimensions") {
  auto D = dual_numbers();
  CHECK(D.center_dim(0) == 1);
  CHECK(D.center_dim(1) == 1);

  auto K = build_algebra(QQ{}, kronecker_quiver(), RelationSet{}, 2);
  CHECK(K.center_dim(0) == 1);
  CHECK(K.center_dim(1) == 0);

  auto A3 = beilinson_algebra(QQ{}, BeilinsonSpec{3, BeilinsonVariant::kSymmetric});
  CHECK(A3.center_dim(0) == 1);
}

TEST_CASE("simple modules") {
  auto K = build_algebra(QQ{}, kronecker_quiver(), RelationSet{}, 2);
  auto S0 = simple_module(K, 0);
  CHECK(S0.dim() == 1);
  CHECK(S0.action_ok());
  // e_0 acts as identity, e_1 and arrows act as zero
  CHECK(S0.act(0, K.idempotent(0)).size() == 1);
  CHECK(S0.act(0, K.idempotent(1)).empty());
  for (int r : K.radical()) CHECK(S0.act(0, r).empty());

  auto D = dual_numbers();
  auto S = simple_module(D, 0);
  CHECK(S.action_ok());
  CHECK(S.act(0, D.by_degree[1][0]).empty());
  CHECK_THROWS_AS(simple_module(D, 1), Error);
}

TEST_CASE("products beyond the truncation of an infinite algebra are rejected") {
  Quiver q;
  q.vertex_count = 1;
  q.arrows = {{"x", 0, 0, 1}};
  auto A = build_algebra(QQ{}, q, RelationSet{}, 3);  // k[x] truncated
  CHECK_FALSE(A.complete);
  int x = A.by_degree[1][0];
  int x3 = A.by_degree[3][0];
  CHECK_THROWS_AS(A.multiply(x, x3), InsufficientPrecisionError);
  CHECK(A.multiply(x, A.by_degree[2][0]).size() == 1);
  CHECK_THROWS_AS(A.center_dim(4), InsufficientPrecisionError);
}
