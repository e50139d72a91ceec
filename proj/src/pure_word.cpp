#include "braidk/pure_word.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "braidk/free_word.hpp"

namespace braidk {

namespace {

void check_gen(int strands, PureGen g) {
  if (g.i < 1 || g.i >= g.j || g.j > strands)
    throw std::invalid_argument("invalid pure generator A(" +
                                std::to_string(g.i) + "," +
                                std::to_string(g.j) + ") for " +
                                std::to_string(strands) + " strands");
}

}  // namespace

PureWord::PureWord(int strands) : strands_(strands) {
  if (strands < 2) throw std::invalid_argument("braid needs at least 2 strands");
}

PureWord PureWord::reduced(int strands, std::span<const PureLetter> raw) {
  PureWord w(strands);
  for (const PureLetter& l : raw) {
    check_gen(strands, l.gen);
    if (l.exp == 0) continue;
    if (!w.letters_.empty() && w.letters_.back().gen == l.gen) {
      w.letters_.back().exp += l.exp;
      if (w.letters_.back().exp == 0) w.letters_.pop_back();
    } else {
      w.letters_.push_back(l);
    }
  }
  return w;
}

PureWord PureWord::generator(int strands, PureGen g, long long exp) {
  PureLetter l{g, exp};
  return reduced(strands, {&l, 1});
}

long long PureWord::length() const {
  long long total = 0;
  for (const PureLetter& l : letters_) total += std::llabs(l.exp);
  return total;
}

PureWord multiply(const PureWord& a, const PureWord& b) {
  if (a.strands() != b.strands())
    throw std::invalid_argument("strand mismatch in pure-word multiply");
  std::vector<PureLetter> raw = a.letters();
  raw.insert(raw.end(), b.letters().begin(), b.letters().end());
  return PureWord::reduced(a.strands(), raw);
}

PureWord invert(const PureWord& a) {
  std::vector<PureLetter> raw(a.letters().rbegin(), a.letters().rend());
  for (PureLetter& l : raw) l.exp = -l.exp;
  return PureWord::reduced(a.strands(), raw);
}

BraidWord expand(int strands, PureGen g) {
  check_gen(strands, g);
  std::vector<BraidLetter> raw;
  for (int k = g.j - 1; k > g.i; --k) raw.push_back({k, 1});
  raw.push_back({g.i, 2});
  for (int k = g.i + 1; k <= g.j - 1; ++k) raw.push_back({k, -1});
  return BraidWord::reduced(strands, raw);
}

BraidWord expand(const PureWord& w) {
  BraidWord out(w.strands());
  for (const PureLetter& l : w.letters()) {
    BraidWord gen = expand(w.strands(), l.gen);
    out = multiply(out, pow(gen, l.exp));
  }
  return out;
}

BraidWord center_sigma(int n) {
  BraidWord half(n);
  for (int i = 1; i < n; ++i)
    half = multiply(half, BraidWord::generator(n, i));
  return pow(half, n);
}

PureWord center_pure(int n) {
  PureWord w(n);
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i)
      w = multiply(w, PureWord::generator(n, {i, j}));
  return w;
}

namespace {

struct AliasEntry {
  const char* name;
  PureGen gen;
};

// The 4-strand generator dictionary: a_i = A_{3-i,3}, b_i = A_{4-i,4}.
constexpr AliasEntry kP4Aliases[] = {
    {"a1", {2, 3}}, {"a2", {1, 3}}, {"b1", {3, 4}},
    {"b2", {2, 4}}, {"b3", {1, 4}},
};

}  // namespace

PureWord parse_pure(int strands, std::string_view text) {
  PureWord out(strands);
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
      std::string_view e = tok.substr(caret + 1);
      auto [ptr, ec] = std::from_chars(e.data(), e.data() + e.size(), exp);
      if (ec != std::errc() || ptr != e.data() + e.size() || exp == 0)
        throw ParseError("bad exponent in pure-word token", start);
      tok = tok.substr(0, caret);
    }
    if (tok.starts_with("A(") && tok.ends_with(")")) {
      std::string_view body = tok.substr(2, tok.size() - 3);
      std::size_t comma = body.find(',');
      if (comma == std::string_view::npos)
        throw ParseError("expected A(i,j) token", start);
      int gi = 0, gj = 0;
      auto [p1, e1] =
          std::from_chars(body.data(), body.data() + comma, gi);
      auto [p2, e2] = std::from_chars(body.data() + comma + 1,
                                      body.data() + body.size(), gj);
      if (e1 != std::errc() || e2 != std::errc() || p1 != body.data() + comma ||
          p2 != body.data() + body.size())
        throw ParseError("bad indices in '" + std::string(tok) + "'", start);
      if (gi < 1 || gi >= gj || gj > strands)
        throw ParseError("pure generator indices out of range in '" +
                             std::string(tok) + "'",
                         start);
      out = multiply(out, PureWord::generator(strands, {gi, gj}, exp));
      continue;
    }
    bool matched = false;
    if (strands == 4) {
      for (const AliasEntry& alias : kP4Aliases) {
        if (tok == alias.name) {
          out = multiply(out, PureWord::generator(strands, alias.gen, exp));
          matched = true;
          break;
        }
      }
      if (!matched && tok == "c") {
        out = multiply(out, exp < 0 ? invert(center_pure(4)) : center_pure(4));
        for (long long r = 1; r < std::llabs(exp); ++r)
          out = multiply(out,
                         exp < 0 ? invert(center_pure(4)) : center_pure(4));
        matched = true;
      }
    }
    if (!matched)
      throw ParseError("unknown pure-word token '" + std::string(tok) + "'",
                       start);
  }
  return out;
}

std::string to_string(PureGen g) {
  return "A(" + std::to_string(g.i) + "," + std::to_string(g.j) + ")";
}

std::string to_string(const PureWord& w) {
  std::ostringstream out;
  bool first = true;
  for (const PureLetter& l : w.letters()) {
    if (!first) out << ' ';
    first = false;
    out << to_string(l.gen);
    if (l.exp != 1) out << '^' << l.exp;
  }
  return first ? "1" : out.str();
}

}  // namespace braidk
