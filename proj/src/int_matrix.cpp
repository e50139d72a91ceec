#include "braidk/int_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace braidk {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows[0].size();
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c)
      throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("determinant of non-square matrix");
  std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

std::string to_string(const IntMatrix& a) {
  std::ostringstream out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    out << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out << ' ';
      out << a.at(i, j);
    }
    out << (i + 1 == a.rows() ? "]" : "\n");
  }
  if (a.rows() == 0) out << "[]";
  return out.str();
}

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

struct SnfWork {
  IntMatrix d, u, v;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < d.cols(); ++j) std::swap(d.at(a, j), d.at(b, j));
    for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < d.rows(); ++i) std::swap(d.at(i, a), d.at(i, b));
    for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
  }
  // row a -= q * row b
  void row_sub(std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < d.cols(); ++j) d.at(a, j) -= q * d.at(b, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u.at(a, j) -= q * u.at(b, j);
  }
  void col_sub(std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < d.rows(); ++i) d.at(i, a) -= q * d.at(i, b);
    for (std::size_t i = 0; i < v.rows(); ++i) v.at(i, a) -= q * v.at(i, b);
  }
  void row_add(std::size_t a, std::size_t b) { row_sub(a, b, Int(-1)); }
  void negate_row(std::size_t a) {
    for (std::size_t j = 0; j < d.cols(); ++j) d.at(a, j) = -d.at(a, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u.at(a, j) = -u.at(a, j);
  }
};

// Least-absolute-value pivot in the trailing submatrix, to limit entry growth.
bool find_pivot(const IntMatrix& d, std::size_t t, std::size_t& pi,
                std::size_t& pj) {
  bool found = false;
  Int best = 0;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d.at(i, j) == 0) continue;
      Int a = abs_int(d.at(i, j));
      if (!found || a < best) {
        best = a;
        pi = i;
        pj = j;
        found = true;
      }
    }
  return found;
}

}  // namespace

SNFResult smith_normal_form(const IntMatrix& a) {
  SnfWork w{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
  const std::size_t limit = std::min(a.rows(), a.cols());
  for (std::size_t t = 0; t < limit; ++t) {
    while (true) {
      std::size_t pi = t, pj = t;
      if (!find_pivot(w.d, t, pi, pj)) {
        SNFResult res{std::move(w.d), std::move(w.u), std::move(w.v)};
        return res;
      }
      w.swap_rows(t, pi);
      w.swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < w.d.rows(); ++i) {
        if (w.d.at(i, t) == 0) continue;
        Int q = w.d.at(i, t) / w.d.at(t, t);
        w.row_sub(i, t, q);
        if (w.d.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < w.d.cols(); ++j) {
        if (w.d.at(t, j) == 0) continue;
        Int q = w.d.at(t, j) / w.d.at(t, t);
        w.col_sub(j, t, q);
        if (w.d.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;  // smaller remainder became the new pivot choice
      // pivot must divide the whole trailing block for the divisor chain
      bool divides = true;
      for (std::size_t i = t + 1; i < w.d.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < w.d.cols() && divides; ++j)
          if (w.d.at(i, j) % w.d.at(t, t) != 0) {
            w.row_add(t, i);
            divides = false;
          }
      if (divides) break;
    }
    if (w.d.at(t, t) < 0) w.negate_row(t);
  }
  return SNFResult{std::move(w.d), std::move(w.u), std::move(w.v)};
}

std::vector<Int> snf_diagonal(const IntMatrix& a) {
  SNFResult s = smith_normal_form(a);
  std::vector<Int> out;
  for (std::size_t t = 0; t < std::min(a.rows(), a.cols()); ++t)
    if (s.d.at(t, t) != 0) out.push_back(s.d.at(t, t));
  return out;
}

AbelianGroup free_abelian(Int rank) {
  if (rank < 0) throw std::invalid_argument("negative free rank");
  return AbelianGroup{std::move(rank), {}};
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  AbelianGroup out;
  out.free_rank = a.free_rank + b.free_rank;
  // invariant factors of the direct sum, recombined through the Smith form of
  // the diagonal torsion matrix (no integer factorization needed)
  std::vector<Int> all = a.torsion;
  all.insert(all.end(), b.torsion.begin(), b.torsion.end());
  if (!all.empty()) {
    IntMatrix diag(all.size(), all.size());
    for (std::size_t i = 0; i < all.size(); ++i) diag.at(i, i) = all[i];
    for (const Int& d : snf_diagonal(diag))
      if (d > 1) out.torsion.push_back(d);
  }
  return out;
}

std::string to_string(const AbelianGroup& g) {
  if (g.is_trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  if (g.free_rank > 0) {
    out << "Z";
    if (g.free_rank > 1) out << "^" << g.free_rank;
    first = false;
  }
  for (const Int& t : g.torsion) {
    if (!first) out << " + ";
    out << "Z/" << t;
    first = false;
  }
  return out.str();
}

AbelianGroup cokernel(const IntMatrix& a) {
  AbelianGroup out;
  std::vector<Int> diag = snf_diagonal(a);
  out.free_rank = Int(a.rows()) - Int(diag.size());
  for (const Int& d : diag)
    if (d > 1) out.torsion.push_back(d);
  return out;
}

std::size_t rank(const IntMatrix& a) { return snf_diagonal(a).size(); }

std::size_t kernel_rank(const IntMatrix& a) { return a.cols() - rank(a); }

}  // namespace braidk
