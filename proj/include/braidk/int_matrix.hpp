#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace braidk {

using Int = boost::multiprecision::cpp_int;

/// Dense row-major matrix over Z with exact arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);  // zero matrix
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
Int determinant(const IntMatrix& a);  // Bareiss fraction-free elimination
std::string to_string(const IntMatrix& a);

// d = u a v with u, v unimodular, d diagonal, d_1 | d_2 | ..., entries >= 0.
struct SNFResult {
  IntMatrix d, u, v;
};
SNFResult smith_normal_form(const IntMatrix& a);
std::vector<Int> snf_diagonal(const IntMatrix& a);  // nonzero entries only

/// Finitely generated abelian group: free rank plus invariant factors
/// (each >= 2, each dividing the next).
struct AbelianGroup {
  Int free_rank = 0;
  std::vector<Int> torsion;

  bool is_torsion_free() const { return torsion.empty(); }
  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

AbelianGroup free_abelian(Int rank);
AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);
std::string to_string(const AbelianGroup& g);

// Z^rows / image(a), read off the Smith diagonal.
AbelianGroup cokernel(const IntMatrix& a);
std::size_t rank(const IntMatrix& a);
std::size_t kernel_rank(const IntMatrix& a);

}  // namespace braidk
