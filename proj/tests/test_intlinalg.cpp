#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <iostream>
#include <random>

#include "braidk/int_matrix.hpp"
#include "braidk/json_io.hpp"
#include "lattice_oracle.hpp"

using namespace braidk;
using namespace testoracle;

namespace {

constexpr unsigned kSeed = 90210u;

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_int_distribution<int> entry(-9, 9);
  IntMatrix m(dim(rng), dim(rng));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
  return m;
}

}  // namespace

TEST_CASE("smith normal form on the worked examples") {
  CHECK(smith_normal_form(IntMatrix::identity(3)).d == IntMatrix::identity(3));

  IntMatrix col23 = IntMatrix::from_rows({{Int(2)}, {Int(3)}});
  SNFResult s = smith_normal_form(col23);
  CHECK(s.d.at(0, 0) == 1);
  CHECK(s.d.at(1, 0) == 0);

  IntMatrix m = IntMatrix::from_rows({{Int(2), Int(4)}, {Int(6), Int(8)}});
  // brute force: gcd of entries is 2, the only 2x2 minor is -8, so the
  // diagonal is (2, 8/2) = (2, 4)
  auto oracle = divisor_oracle(m);
  REQUIRE(oracle.size() == 2);
  CHECK(oracle[0] == 2);
  CHECK(oracle[1] == 4);
  CHECK(snf_diagonal(m) == oracle);
}

TEST_CASE("cokernels of the six-term maps") {
  CHECK(cokernel(IntMatrix::from_rows({{Int(1)}, {Int(1)}})) ==
        free_abelian(1));
  CHECK(cokernel(IntMatrix::from_rows({{Int(2)}, {Int(3)}})) ==
        free_abelian(1));
  AbelianGroup g = cokernel(IntMatrix::from_rows({{Int(2)}, {Int(4)}}));
  CHECK(g.free_rank == 1);
  REQUIRE(g.torsion.size() == 1);
  CHECK(g.torsion[0] == 2);
  CHECK(to_string(g) == "Z + Z/2");
}

TEST_CASE("empty and degenerate matrices") {
  IntMatrix empty(0, 0);
  CHECK(smith_normal_form(empty).d == empty);
  IntMatrix tall(3, 0);
  CHECK(cokernel(tall) == free_abelian(3));
  IntMatrix wide(0, 4);
  CHECK(kernel_rank(wide) == 4);
  IntMatrix zero(2, 2);
  CHECK(cokernel(zero) == free_abelian(2));
  CHECK(kernel_rank(zero) == 2);
}

TEST_CASE("SNF property suite on 500 random matrices") {
  std::mt19937_64 rng(kSeed);
  std::cout << "[seed] intlinalg/snf " << kSeed << "\n";
  for (int t = 0; t < 500; ++t) {
    IntMatrix a = random_matrix(rng, 6);
    SNFResult s = smith_normal_form(a);
    CHECK(s.d == multiply(multiply(s.u, a), s.v));
    Int du = cofactor_det(s.u);
    Int dv = cofactor_det(s.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    std::vector<Int> diag;
    for (std::size_t k = 0; k < std::min(a.rows(), a.cols()); ++k) {
      const Int& d = s.d.at(k, k);
      CHECK(d >= 0);
      if (d != 0) diag.push_back(d);
      for (std::size_t j = 0; j < s.d.cols(); ++j)
        if (j != k) CHECK(s.d.at(k, j) == 0);
    }
    for (std::size_t k = 1; k < diag.size(); ++k)
      CHECK(diag[k] % diag[k - 1] == 0);
    CHECK(kernel_rank(a) + rank(a) == a.cols());
  }
}

TEST_CASE("SNF diagonal matches the determinantal-divisor oracle") {
  std::mt19937_64 rng(kSeed + 1);
  std::cout << "[seed] intlinalg/divisors " << kSeed + 1 << "\n";
  for (int t = 0; t < 60; ++t) {
    IntMatrix a = random_matrix(rng, 4);
    CHECK(snf_diagonal(a) == divisor_oracle(a));
  }
}

TEST_CASE("finite cokernels match coset enumeration") {
  std::mt19937_64 rng(kSeed + 2);
  std::cout << "[seed] intlinalg/cosets " << kSeed + 2 << "\n";
  std::vector<IntMatrix> cases = {
      IntMatrix::from_rows({{Int(2), Int(0)}, {Int(0), Int(3)}}),
      IntMatrix::from_rows({{Int(2), Int(4)}, {Int(6), Int(8)}}),
      IntMatrix::from_rows({{Int(2), Int(0)}, {Int(0), Int(2)}}),
      IntMatrix::from_rows({{Int(4), Int(2), Int(1)},
                            {Int(0), Int(6), Int(3)},
                            {Int(0), Int(0), Int(2)}}),
      IntMatrix::from_rows({{Int(12)}}),
      // cyclic Z/4 whose triangular basis carries an off-diagonal entry,
      // distinguishing the true lattice from its diagonal truncation
      IntMatrix::from_rows({{Int(2), Int(0)}, {Int(1), Int(2)}}),
  };
  int found = static_cast<int>(cases.size());
  while (found < 40) {
    IntMatrix a = random_matrix(rng, 3);
    if (a.rows() > a.cols()) continue;
    IntMatrix tri(1, 1);
    if (!triangular_lattice_basis(a, tri)) continue;
    Int order = 1;
    for (std::size_t i = 0; i < tri.rows(); ++i) order *= tri.at(i, i);
    if (order > 200) continue;
    cases.push_back(a);
    ++found;
  }
  for (const IntMatrix& a : cases) {
    IntMatrix tri(1, 1);
    REQUIRE(triangular_lattice_basis(a, tri));
    AbelianGroup g = cokernel(a);
    CHECK(g.free_rank == 0);
    CHECK(coset_order_histogram(tri) == expected_order_histogram(g.torsion));
  }
}

TEST_CASE("direct sums renormalize invariant factors") {
  AbelianGroup z2{0, {Int(2)}};
  AbelianGroup z3{0, {Int(3)}};
  AbelianGroup s = direct_sum(z2, z3);
  REQUIRE(s.torsion.size() == 1);
  CHECK(s.torsion[0] == 6);
  AbelianGroup t = direct_sum(z2, AbelianGroup{1, {Int(4)}});
  CHECK(t.free_rank == 1);
  REQUIRE(t.torsion.size() == 2);
  CHECK(t.torsion[0] == 2);
  CHECK(t.torsion[1] == 4);
}

TEST_CASE("matrix JSON round trip with big entries") {
  IntMatrix m(2, 2);
  m.at(0, 0) = Int("123456789012345678901234567890");
  m.at(0, 1) = -7;
  m.at(1, 0) = 0;
  m.at(1, 1) = Int("-99999999999999999999");
  nlohmann::json j = matrix_to_json(m);
  CHECK(j["entries"][0][0].is_string());
  CHECK(j["entries"][0][1].is_number_integer());
  CHECK(matrix_from_json(j) == m);
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json{{"rows", 1}}),
                  std::invalid_argument);
}

TEST_CASE("determinant against cofactor expansion") {
  std::mt19937_64 rng(kSeed + 3);
  std::cout << "[seed] intlinalg/det " << kSeed + 3 << "\n";
  for (int t = 0; t < 100; ++t) {
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    std::uniform_int_distribution<int> entry(-9, 9);
    std::size_t n = dim(rng);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = entry(rng);
    CHECK(determinant(m) == cofactor_det(m));
  }
}
