#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <iostream>
#include <random>

#include "braidk/free_endo.hpp"
#include "braidk/free_word.hpp"

using namespace braidk;

namespace {

constexpr unsigned kSeed = 20240411u;

// Independent reduction oracle: single letters on a stack, no run-length
// merging cleverness shared with the implementation.
std::vector<std::pair<int, int>> naive_reduce(
    const std::vector<std::pair<int, int>>& singles) {
  std::vector<std::pair<int, int>> stack;
  for (auto [g, s] : singles) {
    if (!stack.empty() && stack.back().first == g && stack.back().second == -s)
      stack.pop_back();
    else
      stack.emplace_back(g, s);
  }
  return stack;
}

std::vector<std::pair<int, int>> singles_of(const FreeWord& w) {
  std::vector<std::pair<int, int>> out;
  for (const Letter& l : w.letters())
    for (long long r = 0; r < std::llabs(l.exp); ++r)
      out.emplace_back(l.gen, l.exp < 0 ? -1 : 1);
  return out;
}

FreeWord random_word(std::mt19937_64& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(1, rank);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<Letter> raw;
  int n = len(rng);
  for (int i = 0; i < n; ++i) raw.push_back({gen(rng), sign(rng) ? 1 : -1});
  return FreeWord::reduced(rank, raw);
}

}  // namespace

TEST_CASE("reduce merges and cancels") {
  FreeWord w = parse_word(2, "x1 x2 x2^-1 x1");
  CHECK(w == parse_word(2, "x1^2"));
  CHECK(w.letters().size() == 1);
  CHECK(w.letters()[0] == Letter{1, 2});

  CHECK(parse_word(2, "").is_identity());
  CHECK(parse_word(2, "x1 x1^-1 x2 x2^-1").is_identity());
}

TEST_CASE("reduce idempotent on random raw input") {
  std::mt19937_64 rng(kSeed);
  std::cout << "[seed] words/reduce " << kSeed << "\n";
  for (int t = 0; t < 300; ++t) {
    FreeWord w = random_word(rng, 4, 30);
    CHECK(FreeWord::reduced(4, w.letters()) == w);
    // against the naive single-letter oracle
    auto expect = naive_reduce(singles_of(w));
    CHECK(singles_of(w) == expect);
  }
}

TEST_CASE("generator index out of range") {
  CHECK_THROWS_AS(parse_word(2, "x3"), ParseError);
  Letter bad{5, 1};
  CHECK_THROWS_AS(FreeWord::reduced(2, {&bad, 1}), std::invalid_argument);
}

TEST_CASE("group operations") {
  CHECK(multiply(parse_word(2, "x1"), parse_word(2, "x1^-1")).is_identity());
  CHECK(conjugate(parse_word(2, "x2"), parse_word(2, "x1")) ==
        parse_word(2, "x1 x2 x1^-1"));
  CHECK(invert(parse_word(2, "x1 x2")) == parse_word(2, "x2^-1 x1^-1"));
  CHECK_THROWS_AS(multiply(parse_word(2, "x1"), parse_word(3, "x1")),
                  std::invalid_argument);
}

TEST_CASE("multiply/invert properties") {
  std::mt19937_64 rng(kSeed + 1);
  std::cout << "[seed] words/group " << kSeed + 1 << "\n";
  for (int t = 0; t < 300; ++t) {
    FreeWord a = random_word(rng, 3, 20);
    FreeWord b = random_word(rng, 3, 20);
    CHECK(multiply(a, invert(a)).is_identity());
    long long diff = multiply(a, b).length() - a.length() - b.length();
    CHECK(diff % 2 == 0);
    CHECK(conjugate(a, FreeWord(3)) == a);
  }
}

TEST_CASE("cyclic reduction") {
  auto [core1, conj1] = cyclic_reduce(parse_word(2, "x1 x2 x1^-1"));
  CHECK(core1 == parse_word(2, "x2"));
  CHECK(conj1 == parse_word(2, "x1"));

  auto [core2, conj2] = cyclic_reduce(parse_word(2, "x1 x2"));
  CHECK(core2 == parse_word(2, "x1 x2"));
  CHECK(conj2.is_identity());

  FreeWord w = parse_word(3, "x1^-1 x2 x3 x2^-1 x1");
  auto [core3, conj3] = cyclic_reduce(w);
  CHECK(core3 == parse_word(3, "x3"));
  CHECK(conj3 == parse_word(3, "x1^-1 x2"));
  CHECK(conjugate(core3, conj3) == w);
}

TEST_CASE("conjugacy witness examples") {
  auto g1 = conjugacy_witness(parse_word(2, "x1 x2"), parse_word(2, "x2 x1"));
  REQUIRE(g1.has_value());
  CHECK(conjugate(parse_word(2, "x1 x2"), *g1) == parse_word(2, "x2 x1"));

  CHECK_FALSE(conjugacy_witness(parse_word(2, "x1"), parse_word(2, "x2")));

  auto g2 =
      conjugacy_witness(parse_word(2, "x2"), parse_word(2, "x1^-1 x2 x1"));
  REQUIRE(g2.has_value());
  CHECK(conjugate(parse_word(2, "x2"), *g2) == parse_word(2, "x1^-1 x2 x1"));
}

TEST_CASE("conjugacy witness on random conjugates") {
  std::mt19937_64 rng(kSeed + 2);
  std::cout << "[seed] words/conjugacy " << kSeed + 2 << "\n";
  for (int t = 0; t < 300; ++t) {
    FreeWord a = random_word(rng, 3, 15);
    FreeWord g = random_word(rng, 3, 15);
    FreeWord b = conjugate(a, g);
    auto w = conjugacy_witness(a, b);
    REQUIRE_MESSAGE(w.has_value(), "lost witness for a=", to_string(a),
                    " g=", to_string(g));
    CHECK(conjugate(a, *w) == b);
  }
}

TEST_CASE("endomorphism application and the hand oracle") {
  FreeEndo e(2, 2,
             {parse_word(2, "x1 x2 x1^-1"), parse_word(2, "x1")});
  // substitute then reduce, independently
  CHECK(apply(e, parse_word(2, "x1 x2")) == parse_word(2, "x1 x2"));
  CHECK(apply(FreeEndo::identity(3), parse_word(3, "x1 x3^-1 x2")) ==
        parse_word(3, "x1 x3^-1 x2"));

  // inverse candidate composes to the identity both ways
  FreeEndo inv(2, 2, {parse_word(2, "x2"), parse_word(2, "x2^-1 x1 x2")});
  CHECK(is_identity(compose(e, inv)));
  CHECK(is_identity(compose(inv, e)));
}

TEST_CASE("apply is a homomorphism; compose applies right first") {
  std::mt19937_64 rng(kSeed + 3);
  std::cout << "[seed] words/endo " << kSeed + 3 << "\n";
  FreeEndo e(2, 2, {parse_word(2, "x1 x2 x1^-1"), parse_word(2, "x1")});
  FreeEndo f(2, 2, {parse_word(2, "x2"), parse_word(2, "x1 x1")});
  for (int t = 0; t < 200; ++t) {
    FreeWord a = random_word(rng, 2, 12);
    FreeWord b = random_word(rng, 2, 12);
    CHECK(apply(e, multiply(a, b)) == multiply(apply(e, a), apply(e, b)));
    CHECK(apply(compose(e, f), a) == apply(e, apply(f, a)));
  }
}

TEST_CASE("length ceiling throws") {
  CHECK_THROWS_AS(pow(parse_word(2, "x1"), kMaxWordLetters + 1),
                  std::length_error);
}

TEST_CASE("named-generator parsing") {
  std::vector<std::string> names = {"a1", "b1"};
  FreeWord w = parse_word(names, "a1 b1^-2 a1");
  CHECK(w.rank() == 2);
  CHECK(w == FreeWord::reduced(
                 2, std::vector<Letter>{{1, 1}, {2, -2}, {1, 1}}));
  CHECK(to_string(w, names) == "a1 b1^-2 a1");
  CHECK_THROWS_AS(parse_word(names, "a2"), ParseError);
}
