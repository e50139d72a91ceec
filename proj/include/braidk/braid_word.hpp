#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace braidk {

struct BraidLetter {
  int index = 0;       // sigma index, 1..strands-1
  long long exp = 0;
  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

/// Word in the Artin generators sigma_1..sigma_{n-1} of B_n, run-length
/// merged like FreeWord. Only syntactic: equality of the underlying braids is
/// decided by the Artin oracle (see artin.hpp).
class BraidWord {
 public:
  explicit BraidWord(int strands);  // empty word
  static BraidWord reduced(int strands, std::span<const BraidLetter> raw);
  static BraidWord generator(int strands, int index, long long exp = 1);

  int strands() const { return strands_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  long long length() const { return length_; }  // sum of |exp|

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  long long length_ = 0;
  std::vector<BraidLetter> letters_;
};

BraidWord multiply(const BraidWord& a, const BraidWord& b);
BraidWord invert(const BraidWord& a);
BraidWord pow(const BraidWord& a, long long k);

/// Bijection of {1..n}. then(q) composes left-to-right: (p.then(q))(x) =
/// q(p(x)), so permutation_of is a homomorphism for word concatenation.
class Permutation {
 public:
  explicit Permutation(int n);  // identity
  static Permutation transposition(int n, int i);  // swaps i and i+1

  int size() const { return static_cast<int>(img_.size()); }
  int map(int x) const;  // 1-based
  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  bool is_identity() const;
  int inversions() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> img_;  // 0-based images
};

Permutation permutation_of(const BraidWord& w);
bool is_pure(const BraidWord& w);

// Textual syntax: whitespace-separated tokens `s1`, `s2^-1`, `s3^4`.
BraidWord parse_braid(int strands, std::string_view text);
std::string to_string(const BraidWord& w);
std::string to_string(const Permutation& p);

}  // namespace braidk
