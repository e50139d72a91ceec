#include "braidk/braid_word.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "braidk/free_word.hpp"

namespace braidk {

namespace {

void check_strands(int n) {
  if (n < 2) throw std::invalid_argument("braid needs at least 2 strands");
}

}  // namespace

BraidWord::BraidWord(int strands) : strands_(strands) { check_strands(strands); }

BraidWord BraidWord::reduced(int strands, std::span<const BraidLetter> raw) {
  check_strands(strands);
  BraidWord w(strands);
  for (const BraidLetter& l : raw) {
    if (l.index < 1 || l.index >= strands)
      throw std::invalid_argument("sigma index " + std::to_string(l.index) +
                                  " out of range 1.." +
                                  std::to_string(strands - 1));
    if (l.exp == 0) continue;
    if (!w.letters_.empty() && w.letters_.back().index == l.index) {
      w.length_ -= std::llabs(w.letters_.back().exp);
      w.letters_.back().exp += l.exp;
      if (w.letters_.back().exp == 0) {
        w.letters_.pop_back();
        continue;
      }
      w.length_ += std::llabs(w.letters_.back().exp);
    } else {
      w.letters_.push_back(l);
      w.length_ += std::llabs(l.exp);
    }
    if (w.length_ > kMaxWordLetters)
      throw std::length_error("braid word length ceiling exceeded");
  }
  return w;
}

BraidWord BraidWord::generator(int strands, int index, long long exp) {
  BraidLetter l{index, exp};
  return reduced(strands, {&l, 1});
}

BraidWord multiply(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands())
    throw std::invalid_argument("strand mismatch in braid multiply");
  std::vector<BraidLetter> raw = a.letters();
  raw.insert(raw.end(), b.letters().begin(), b.letters().end());
  return BraidWord::reduced(a.strands(), raw);
}

BraidWord invert(const BraidWord& a) {
  std::vector<BraidLetter> raw(a.letters().rbegin(), a.letters().rend());
  for (BraidLetter& l : raw) l.exp = -l.exp;
  return BraidWord::reduced(a.strands(), raw);
}

BraidWord pow(const BraidWord& a, long long k) {
  BraidWord base = k < 0 ? invert(a) : a;
  long long reps = k < 0 ? -k : k;
  BraidWord acc(a.strands());
  for (long long i = 0; i < reps; ++i) acc = multiply(acc, base);
  return acc;
}

Permutation::Permutation(int n) : img_(static_cast<std::size_t>(n)) {
  if (n < 1) throw std::invalid_argument("permutation size must be positive");
  std::iota(img_.begin(), img_.end(), 0);
}

Permutation Permutation::transposition(int n, int i) {
  Permutation p(n);
  if (i < 1 || i >= n)
    throw std::invalid_argument("transposition index out of range");
  std::swap(p.img_[static_cast<std::size_t>(i - 1)],
            p.img_[static_cast<std::size_t>(i)]);
  return p;
}

int Permutation::map(int x) const {
  return img_[static_cast<std::size_t>(x - 1)] + 1;
}

Permutation Permutation::then(const Permutation& next) const {
  if (size() != next.size())
    throw std::invalid_argument("permutation size mismatch");
  Permutation r(size());
  for (std::size_t x = 0; x < img_.size(); ++x)
    r.img_[x] = next.img_[static_cast<std::size_t>(img_[x])];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r(size());
  for (std::size_t x = 0; x < img_.size(); ++x)
    r.img_[static_cast<std::size_t>(img_[x])] = static_cast<int>(x);
  return r;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < img_.size(); ++x)
    if (img_[x] != static_cast<int>(x)) return false;
  return true;
}

int Permutation::inversions() const {
  int count = 0;
  for (std::size_t i = 0; i < img_.size(); ++i)
    for (std::size_t j = i + 1; j < img_.size(); ++j)
      if (img_[i] > img_[j]) ++count;
  return count;
}

Permutation permutation_of(const BraidWord& w) {
  Permutation p(w.strands());
  for (const BraidLetter& l : w.letters()) {
    // sigma_i^e maps to the transposition (i, i+1) for either sign; only the
    // parity of |e| matters.
    if (std::llabs(l.exp) % 2 == 1)
      p = p.then(Permutation::transposition(w.strands(), l.index));
  }
  return p;
}

bool is_pure(const BraidWord& w) { return permutation_of(w).is_identity(); }

BraidWord parse_braid(int strands, std::string_view text) {
  check_strands(strands);
  std::vector<BraidLetter> raw;
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
        throw ParseError("bad exponent in braid token", start);
      tok = tok.substr(0, caret);
    }
    if (tok.size() < 2 || tok[0] != 's')
      throw ParseError("expected braid token like s1, got '" +
                           std::string(tok) + "'",
                       start);
    int index = 0;
    auto [ptr, ec] =
        std::from_chars(tok.data() + 1, tok.data() + tok.size(), index);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError("bad sigma index in '" + std::string(tok) + "'", start);
    if (index < 1 || index >= strands)
      throw ParseError("sigma index out of range in '" + std::string(tok) + "'",
                       start);
    raw.push_back({index, exp});
  }
  return BraidWord::reduced(strands, raw);
}

std::string to_string(const BraidWord& w) {
  std::ostringstream out;
  bool first = true;
  for (const BraidLetter& l : w.letters()) {
    if (!first) out << ' ';
    first = false;
    out << 's' << l.index;
    if (l.exp != 1) out << '^' << l.exp;
  }
  return first ? "1" : out.str();
}

std::string to_string(const Permutation& p) {
  std::ostringstream out;
  out << '[';
  for (int x = 1; x <= p.size(); ++x) {
    if (x > 1) out << ' ';
    out << p.map(x);
  }
  out << ']';
  return out.str();
}

}  // namespace braidk
