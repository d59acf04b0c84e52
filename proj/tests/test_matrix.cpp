#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "hlab/sparse_matrix.hpp"

using namespace hlab;
using QQ = RationalField;

namespace {

SparseMatrix<QQ> from_rows(const std::vector<std::vector<long>>& rows, int cols) {
  QQ F;
  SparseMatrix<QQ> m(F, static_cast<int>(rows.size()), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < cols; ++c)
      if (rows[r][static_cast<std::size_t>(c)] != 0)
        m.add(static_cast<int>(r), c, F.from_long(rows[r][static_cast<std::size_t>(c)]));
  return m;
}

}  // namespace

TEST_CASE("rank basics") {
  CHECK(from_rows({{1, 0}, {0, 1}}, 2).rank() == 2);
  CHECK(from_rows({{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}, 4).rank() == 0);
  CHECK(from_rows({{1, 2}, {2, 4}}, 2).rank() == 1);  // second row dependent
}

TEST_CASE("kernel basics") {
  auto id = from_rows({{1, 0}, {0, 1}}, 2);
  CHECK(id.kernel_basis().dim() == 0);

  auto z = from_rows({{0, 0, 0}, {0, 0, 0}}, 3);
  CHECK(z.kernel_basis().dim() == 3);

  auto m = from_rows({{1, 1, 0}, {0, 1, 1}}, 3);
  auto ker = m.kernel_basis();
  REQUIRE(ker.dim() == 1);
  // spanned by (1, -1, 1)
  std::map<int, Rational> v(ker.basis[0].begin(), ker.basis[0].end());
  auto scale = v[0];
  CHECK(v[0] == scale);
  CHECK(v[1] == -scale);
  CHECK(v[2] == scale);
  CHECK(m.apply(ker.basis[0]).empty());
}

TEST_CASE("homology of two-term complexes") {
  QQ F;
  // zero differentials around k^2
  auto d_in0 = SparseMatrix<QQ>::zero(F, 2, 0);
  auto d_out0 = SparseMatrix<QQ>::zero(F, 0, 2);
  CHECK(homology_dim(d_in0, d_out0) == 2);

  // exact at the middle: identity in, zero out
  auto d_in1 = from_rows({{1, 0}, {0, 1}}, 2);
  CHECK(homology_dim(d_in1, d_out0) == 0);

  // multiplication by x on k[x]/(x^2), zero map out: ker(0)/im(x) = 2 - 1
  auto mul_x = from_rows({{0, 0}, {1, 0}}, 2);
  CHECK(homology_dim(mul_x, SparseMatrix<QQ>::zero(F, 0, 2)) == 1);
}

TEST_CASE("homology rejects non-complexes and shape errors") {
  QQ F;
  auto id = from_rows({{1, 0}, {0, 1}}, 2);
  CHECK_THROWS_AS(homology_dim(id, id), NotAComplexError);  // id*id != 0
  auto odd = SparseMatrix<QQ>::zero(F, 3, 2);
  CHECK_THROWS_AS(homology_dim(odd, id), ShapeError);
}

TEST_CASE("random matrices: rank-nullity, transpose, mod-p agreement") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> dim(1, 7);
  QQ F;
  PrimeField big(1000003);
  for (int trial = 0; trial < 40; ++trial) {
    int r = dim(rng), c = dim(rng);
    SparseMatrix<QQ> m(F, r, c);
    SparseMatrix<PrimeField> mp(big, r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        int e = entry(rng);
        if (e != 0) {
          m.add(i, j, F.from_long(e));
          mp.add(i, j, big.from_long(e));
        }
      }
    INFO("trial " << trial << " " << r << "x" << c);
    int rk = m.rank();
    CHECK(rk + m.kernel_basis().dim() == c);
    CHECK(m.transpose().rank() == rk);
    // integer entries <= 3, dims <= 7: minors are < 7! * 3^7 < 1000003, so
    // rank over Q provably equals rank mod p
    CHECK(mp.rank() == rk);
    auto ker = m.kernel_basis();
    for (const auto& v : ker.basis) CHECK(m.apply(v).empty());
    // kernel basis vectors are linearly independent: stacked rank = count
    SparseMatrix<QQ> stacked(F, ker.dim(), c);
    for (int kv = 0; kv < ker.dim(); ++kv)
      for (const auto& [col, val] : ker.basis[static_cast<std::size_t>(kv)])
        stacked.add(kv, col, val);
    CHECK(stacked.rank() == ker.dim());
  }
}

TEST_CASE("rational entries reduce exactly") {
  QQ F;
  SparseMatrix<QQ> m(F, 2, 2);
  m.add(0, 0, Rational(1, 2));
  m.add(0, 1, Rational(1, 3));
  m.add(1, 0, Rational(3, 2));
  m.add(1, 1, Rational(1, 1));
  CHECK(m.rank() == 1);  // rows proportional by 3
}

TEST_CASE("dense and sparse paths agree") {
  // 70 columns forces the sparse path; compare against the same matrix
  // restricted to a dense-size block
  QQ F;
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-2, 2);
  SparseMatrix<QQ> big(F, 20, 70), small(F, 20, 50);
  for (int i = 0; i < 20; ++i)
    for (int j = 0; j < 50; ++j) {
      int e = entry(rng);
      if (e) {
        big.add(i, j, F.from_long(e));
        small.add(i, j, F.from_long(e));
      }
    }
  CHECK(big.rank() == small.rank());
  CHECK(big.kernel_basis().dim() == small.kernel_basis().dim() + 20);
}
