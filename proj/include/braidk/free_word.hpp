#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace braidk {

// One run of a word: 1-based generator index with a (nonzero, once reduced)
// exponent. Runs keep Artin-representation images compact, since those grow
// multiplicatively.
struct Letter {
  int gen = 0;
  long long exp = 0;
  friend bool operator==(const Letter&, const Letter&) = default;
};

// Hard cap on the total letter count (sum of |exp|) of a single word.
// Runaway images fail loudly with std::length_error instead of exhausting
// memory.
inline constexpr long long kMaxWordLetters = 100'000;

// Parse failure with the offending position in the input text.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Reduced word in the free group F_rank(x_1..x_rank).
///
/// Invariants: adjacent runs use distinct generators, no run has exponent 0,
/// and the empty run list is the identity. Values are immutable; every
/// operation returns a fresh word, so concurrent use needs no locking.
class FreeWord {
 public:
  explicit FreeWord(int rank);  // identity
  static FreeWord reduced(int rank, std::span<const Letter> raw);
  static FreeWord generator(int rank, int gen, long long exp = 1);

  int rank() const { return rank_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  long long length() const { return length_; }  // sum of |exp|

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  int rank_;
  long long length_ = 0;
  std::vector<Letter> letters_;
};

FreeWord multiply(const FreeWord& a, const FreeWord& b);
FreeWord invert(const FreeWord& a);
// conjugate(a, g) = g a g^-1
FreeWord conjugate(const FreeWord& a, const FreeWord& by);
FreeWord pow(const FreeWord& a, long long k);

struct CyclicReduction {
  FreeWord core;        // cyclically reduced
  FreeWord conjugator;  // input = conjugator . core . conjugator^-1
};
CyclicReduction cyclic_reduce(const FreeWord& a);

// Witness g with g a g^-1 = b, if a and b are conjugate. The returned witness
// is re-checked by multiplication before being handed out.
std::optional<FreeWord> conjugacy_witness(const FreeWord& a, const FreeWord& b);

// Textual syntax: whitespace-separated tokens `x1`, `x2^-1`, `x1^3`.
FreeWord parse_word(int rank, std::string_view text);
// Same token grammar but with caller-supplied generator names.
FreeWord parse_word(std::span<const std::string> generator_names,
                    std::string_view text);
std::string to_string(const FreeWord& w);
std::string to_string(const FreeWord& w,
                      std::span<const std::string> generator_names);

}  // namespace braidk
