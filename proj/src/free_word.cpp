#include "braidk/free_word.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace braidk {

namespace {

void check_rank(int rank) {
  if (rank < 1) throw std::invalid_argument("free group rank must be positive");
}

void check_length(long long total) {
  if (total > kMaxWordLetters)
    throw std::length_error("word length ceiling exceeded (" +
                            std::to_string(kMaxWordLetters) + " letters)");
}

// Appends one run to a reduced letter stack, merging and cancelling.
void push_run(std::vector<Letter>& out, long long& total, int gen,
              long long exp) {
  if (exp == 0) return;
  if (!out.empty() && out.back().gen == gen) {
    total -= std::llabs(out.back().exp);
    out.back().exp += exp;
    if (out.back().exp == 0) {
      out.pop_back();
      return;
    }
    total += std::llabs(out.back().exp);
  } else {
    out.push_back({gen, exp});
    total += std::llabs(exp);
  }
  check_length(total);
}

}  // namespace

FreeWord::FreeWord(int rank) : rank_(rank) { check_rank(rank); }

FreeWord FreeWord::reduced(int rank, std::span<const Letter> raw) {
  check_rank(rank);
  FreeWord w(rank);
  for (const Letter& l : raw) {
    if (l.gen < 1 || l.gen > rank)
      throw std::invalid_argument("generator index " + std::to_string(l.gen) +
                                  " out of range 1.." + std::to_string(rank));
    push_run(w.letters_, w.length_, l.gen, l.exp);
  }
  return w;
}

FreeWord FreeWord::generator(int rank, int gen, long long exp) {
  Letter l{gen, exp};
  return reduced(rank, {&l, 1});
}

FreeWord multiply(const FreeWord& a, const FreeWord& b) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("rank mismatch in free-word multiply");
  std::vector<Letter> raw = a.letters();
  raw.insert(raw.end(), b.letters().begin(), b.letters().end());
  return FreeWord::reduced(a.rank(), raw);
}

FreeWord invert(const FreeWord& a) {
  std::vector<Letter> raw(a.letters().rbegin(), a.letters().rend());
  for (Letter& l : raw) l.exp = -l.exp;
  return FreeWord::reduced(a.rank(), raw);
}

FreeWord conjugate(const FreeWord& a, const FreeWord& by) {
  return multiply(multiply(by, a), invert(by));
}

FreeWord pow(const FreeWord& a, long long k) {
  FreeWord base = k < 0 ? invert(a) : a;
  long long reps = k < 0 ? -k : k;
  FreeWord acc(a.rank());
  for (long long i = 0; i < reps; ++i) acc = multiply(acc, base);
  return acc;
}

namespace {

// Single-letter expansion: one entry per |exp| step.
std::vector<Letter> expand_singles(const FreeWord& w) {
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(w.length()));
  for (const Letter& l : w.letters()) {
    long long s = l.exp < 0 ? -1 : 1;
    for (long long i = 0; i < std::llabs(l.exp); ++i) out.push_back({l.gen, s});
  }
  return out;
}

bool cancels(const Letter& a, const Letter& b) {
  return a.gen == b.gen && a.exp == -b.exp;
}

}  // namespace

CyclicReduction cyclic_reduce(const FreeWord& a) {
  std::vector<Letter> s = expand_singles(a);
  std::size_t i = 0, j = s.size();
  while (j >= i + 2 && cancels(s[i], s[j - 1])) {
    ++i;
    --j;
  }
  FreeWord conj = FreeWord::reduced(a.rank(), std::span(s.data(), i));
  FreeWord core = FreeWord::reduced(a.rank(), std::span(s.data() + i, j - i));
  return {core, conj};
}

std::optional<FreeWord> conjugacy_witness(const FreeWord& a,
                                          const FreeWord& b) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("rank mismatch in conjugacy_witness");
  if (a == b) return FreeWord(a.rank());
  auto [ca, pa] = cyclic_reduce(a);
  auto [cb, pb] = cyclic_reduce(b);
  if (ca.length() != cb.length()) return std::nullopt;
  if (ca.is_identity()) {
    FreeWord id(a.rank());
    return id;
  }
  std::vector<Letter> sa = expand_singles(ca);
  std::vector<Letter> sb = expand_singles(cb);
  std::size_t m = sa.size();
  // b_core must be a cyclic rotation of a_core: a_core = u v, b_core = v u.
  for (std::size_t k = 0; k < m; ++k) {
    bool match = true;
    for (std::size_t t = 0; t < m && match; ++t)
      match = sa[(k + t) % m] == sb[t];
    if (!match) continue;
    FreeWord v = FreeWord::reduced(a.rank(), std::span(sa.data() + k, m - k));
    FreeWord g = multiply(multiply(pb, v), invert(pa));
    if (conjugate(a, g) == b) return g;
  }
  return std::nullopt;
}

namespace {

struct Token {
  std::string base;
  long long exp;
  std::size_t pos;
};

long long parse_exponent(std::string_view text, std::size_t start,
                         std::size_t end, std::size_t token_pos) {
  long long value = 0;
  const char* first = text.data() + start;
  const char* last = text.data() + end;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value == 0)
    throw ParseError("bad exponent in word token", token_pos);
  return value;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    std::string_view tok = text.substr(start, i - start);
    long long exp = 1;
    std::size_t caret = tok.find('^');
    if (caret != std::string_view::npos) {
      exp = parse_exponent(text, start + caret + 1, i, start);
      tok = tok.substr(0, caret);
    }
    if (tok.empty()) throw ParseError("empty word token", start);
    tokens.push_back({std::string(tok), exp, start});
  }
  return tokens;
}

}  // namespace

FreeWord parse_word(int rank, std::string_view text) {
  check_rank(rank);
  std::vector<Letter> raw;
  for (const Token& t : tokenize(text)) {
    if (t.base.size() < 2 || t.base[0] != 'x')
      throw ParseError("expected generator token like x1, got '" + t.base + "'",
                       t.pos);
    int gen = 0;
    auto [ptr, ec] =
        std::from_chars(t.base.data() + 1, t.base.data() + t.base.size(), gen);
    if (ec != std::errc() || ptr != t.base.data() + t.base.size())
      throw ParseError("bad generator index in '" + t.base + "'", t.pos);
    if (gen < 1 || gen > rank)
      throw ParseError("generator index out of range in '" + t.base + "'",
                       t.pos);
    raw.push_back({gen, t.exp});
  }
  return FreeWord::reduced(rank, raw);
}

FreeWord parse_word(std::span<const std::string> generator_names,
                    std::string_view text) {
  if (generator_names.empty())
    throw std::invalid_argument("empty generator list");
  std::vector<Letter> raw;
  for (const Token& t : tokenize(text)) {
    int gen = 0;
    for (std::size_t g = 0; g < generator_names.size(); ++g) {
      if (generator_names[g] == t.base) {
        gen = static_cast<int>(g) + 1;
        break;
      }
    }
    if (gen == 0)
      throw ParseError("unknown generator '" + t.base + "'", t.pos);
    raw.push_back({gen, t.exp});
  }
  return FreeWord::reduced(static_cast<int>(generator_names.size()), raw);
}

std::string to_string(const FreeWord& w) {
  std::ostringstream out;
  bool first = true;
  for (const Letter& l : w.letters()) {
    if (!first) out << ' ';
    first = false;
    out << 'x' << l.gen;
    if (l.exp != 1) out << '^' << l.exp;
  }
  return first ? "1" : out.str();
}

std::string to_string(const FreeWord& w,
                      std::span<const std::string> generator_names) {
  std::ostringstream out;
  bool first = true;
  for (const Letter& l : w.letters()) {
    if (!first) out << ' ';
    first = false;
    out << generator_names[static_cast<std::size_t>(l.gen - 1)];
    if (l.exp != 1) out << '^' << l.exp;
  }
  return first ? "1" : out.str();
}

}  // namespace braidk
