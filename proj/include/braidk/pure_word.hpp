#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "braidk/braid_word.hpp"

namespace braidk {

// Artin pure-braid generator A_ij = s_{j-1}..s_{i+1} s_i^2 s_{i+1}^-1..s_{j-1}^-1.
struct PureGen {
  int i = 0;
  int j = 0;  // 1 <= i < j <= strands
  friend bool operator==(const PureGen&, const PureGen&) = default;
  friend auto operator<=>(const PureGen&, const PureGen&) = default;
};

struct PureLetter {
  PureGen gen;
  long long exp = 0;
  friend bool operator==(const PureLetter&, const PureLetter&) = default;
};

/// Word in the A_ij generators of P_n. Expansion to sigma generators always
/// has trivial permutation image.
class PureWord {
 public:
  explicit PureWord(int strands);
  static PureWord reduced(int strands, std::span<const PureLetter> raw);
  static PureWord generator(int strands, PureGen g, long long exp = 1);

  int strands() const { return strands_; }
  const std::vector<PureLetter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  long long length() const;

  friend bool operator==(const PureWord&, const PureWord&) = default;

 private:
  int strands_;
  std::vector<PureLetter> letters_;
};

PureWord multiply(const PureWord& a, const PureWord& b);
PureWord invert(const PureWord& a);

BraidWord expand(int strands, PureGen g);
BraidWord expand(const PureWord& w);

// Full-twist center of B_n, as a sigma word and as the A-generator product
// (A_12)(A_13 A_23)...(A_1n .. A_{n-1,n}).
BraidWord center_sigma(int n);
PureWord center_pure(int n);

// Syntax: tokens `A(1,3)`, `A(2,4)^-1`; for 4 strands the named aliases
// a1,a2,b1,b2,b3 (A_23, A_13, A_34, A_24, A_14) and c (the center word).
PureWord parse_pure(int strands, std::string_view text);
std::string to_string(const PureWord& w);
std::string to_string(PureGen g);

}  // namespace braidk
