#include <catch2/catch_amalgamated.hpp>

#include "hlab/algebra_io.hpp"
#include "hlab/constructions.hpp"

using namespace hlab;
using QQ = RationalField;

TEST_CASE("serialize -> parse -> serialize is the identity") {
  for (auto desc :
       {beilinson_description(BeilinsonSpec{3, BeilinsonVariant::kSymmetric}),
        beilinson_description(BeilinsonSpec{2, BeilinsonVariant::kExterior}),
        rolled_up_description(3), twisted_description(CyclicAction{2, 4, {1, 3}}),
        dual_numbers_description()}) {
    auto text = serialize_algebra(desc);
    auto parsed = parse_algebra(text);
    CHECK(serialize_algebra(parsed) == text);
  }
}

TEST_CASE("parsed descriptions rebuild the same algebra") {
  auto desc = beilinson_description(BeilinsonSpec{3, BeilinsonVariant::kSymmetric});
  auto rebuilt = parse_algebra(serialize_algebra(desc));
  auto A = build_algebra(QQ{}, desc.quiver, desc.relations, 2);
  auto B = build_algebra(QQ{}, rebuilt.quiver, rebuilt.relations, 2);
  CHECK(A.hilbert().dims == B.hilbert().dims);
  CHECK(A.basis.size() == B.basis.size());
}

TEST_CASE("parser accepts flexible whitespace and comments") {
  std::string text =
      "# a loop with a square relation\n"
      "vertices 1\n"
      "\n"
      "arrow   x 0 0 1\n"
      "rel 1 x x\n";
  auto desc = parse_algebra(text);
  CHECK(desc.quiver.vertex_count == 1);
  REQUIRE(desc.quiver.arrows.size() == 1);
  REQUIRE(desc.relations.relations.size() == 1);
  auto A = build_algebra(QQ{}, desc.quiver, desc.relations, 4);
  CHECK(A.hilbert().dims == std::vector<long>{1, 1, 0, 0, 0});
}

TEST_CASE("rational coefficients round-trip") {
  std::string text =
      "vertices 1\n"
      "arrow u 0 0 1\n"
      "arrow v 0 0 1\n"
      "rel 2/3 u v - 1/3 v u + 1 u u\n";
  auto desc = parse_algebra(text);
  REQUIRE(desc.relations.relations.size() == 1);
  const auto& terms = desc.relations.relations[0].terms;
  REQUIRE(terms.size() == 3);
  CHECK(terms[0].coef == Rational(2, 3));
  CHECK(terms[1].coef == Rational(-1, 3));
  CHECK(terms[2].coef == Rational(1));
  CHECK(serialize_algebra(desc) == text);
}

TEST_CASE("parse errors carry line information") {
  CHECK_THROWS_AS(parse_algebra("arrow x 0 0 1\n"), ParseError);             // before vertices
  CHECK_THROWS_AS(parse_algebra("vertices 1\nnonsense 1 2\n"), ParseError);  // unknown directive
  CHECK_THROWS_AS(parse_algebra("vertices 1\narrow x 0 0\n"), ParseError);   // missing degree
  CHECK_THROWS_AS(parse_algebra("vertices 1\narrow x 0 0 1\nrel 1 x -\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra("vertices 1\narrow x 0 0 1\nrel 1 y\n"), ParseError);  // bad id
  CHECK_THROWS_AS(parse_algebra(""), ParseError);
  // inhomogeneous relation rejected on parse
  CHECK_THROWS_AS(
      parse_algebra("vertices 1\narrow x 0 0 1\narrow y 0 0 2\nrel 1 x + 1 y\n"), Error);
  // ambiguous arrow id rejected
  AlgebraDescription bad;
  bad.quiver.vertex_count = 1;
  bad.quiver.arrows = {{"12", 0, 0, 1}};
  CHECK_THROWS_AS(serialize_algebra(bad), Error);
}
