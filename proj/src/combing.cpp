#include "braidk/combing.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace braidk {

const FreeWord& CombedForm::level(int t) const {
  if (t < 1 || t >= strands)
    throw std::invalid_argument("combing level out of range");
  return levels[static_cast<std::size_t>(strands - 1 - t)];
}

CombedForm comb(const PureWord& w) {
  const int n = w.strands();
  CombedForm form;
  form.strands = n;
  std::vector<PureLetter> rest(w.letters().begin(), w.letters().end());
  for (int t = n - 1; t >= 1; --t) {
    FreeWord top(t);
    // E = action of the inverse of the residual prefix on F_t; moving a
    // top-level letter x leftward across the residual r uses r x = phi(r)(x) r.
    FreeEndo residual_action = FreeEndo::identity(t);
    std::vector<PureLetter> residual;
    for (const PureLetter& l : rest) {
      if (l.gen.j == t + 1) {
        FreeWord x = FreeWord::generator(t, l.gen.i, l.exp);
        top = multiply(top, apply(residual_action, x));
      } else {
        residual.push_back(l);
        BraidWord step = letterwise_invert(pow(expand(t, l.gen), l.exp));
        residual_action = compose(residual_action, artin_action(step));
      }
    }
    form.levels.push_back(top);
    rest = std::move(residual);
  }
  return form;
}

PureWord recombine(const CombedForm& f) {
  PureWord out(f.strands);
  for (std::size_t k = 0; k < f.levels.size(); ++k) {
    int t = f.strands - 1 - static_cast<int>(k);
    out = multiply(out, lift_level_word(f.strands, t, f.levels[k]));
  }
  return out;
}

BraidWord transversal_lift(const Permutation& p) {
  const int n = p.size();
  // Peel reduced-word letters off the right: p = q . tau_k with l(q) < l(p).
  std::vector<int> reversed;
  Permutation q = p;
  while (!q.is_identity()) {
    bool found = false;
    for (int k = 1; k < n && !found; ++k) {
      Permutation cand = q.then(Permutation::transposition(n, k));
      if (cand.inversions() < q.inversions()) {
        reversed.push_back(k);
        q = cand;
        found = true;
      }
    }
    if (!found) throw std::logic_error("no descent found in permutation");
  }
  std::vector<BraidLetter> raw;
  for (auto it = reversed.rbegin(); it != reversed.rend(); ++it)
    raw.push_back({*it, 1});
  return BraidWord::reduced(n, raw);
}

namespace {

int tau(int a, int x) {
  if (x == a) return a + 1;
  if (x == a + 1) return a;
  return x;
}

PureWord conj_form(int strands, PureGen c, int cexp, PureGen core) {
  PureWord w = PureWord::generator(strands, c, cexp);
  w = multiply(w, PureWord::generator(strands, core));
  return multiply(w, PureWord::generator(strands, c, -cexp));
}

// Oracle check: s_a^e expand(g) s_a^-e == expand(candidate) in B_strands.
bool rule_holds(int strands, int a, int e, PureGen g, const PureWord& cand) {
  BraidWord lhs = BraidWord::generator(strands, a, e);
  lhs = multiply(lhs, expand(strands, g));
  lhs = multiply(lhs, BraidWord::generator(strands, a, -e));
  return braid_equal(lhs, expand(cand));
}

std::map<std::tuple<int, int, int, int>, std::vector<PureLetter>> rule_cache;
std::mutex rule_mutex;

}  // namespace

PureWord sigma_conjugate_rule(int strands, int a, int e, PureGen g) {
  if (e != 1 && e != -1)
    throw std::invalid_argument("rule exponent must be +-1");
  const std::tuple<int, int, int, int> key{a, e, g.i, g.j};
  {
    std::lock_guard<std::mutex> lock(rule_mutex);
    auto it = rule_cache.find(key);
    if (it != rule_cache.end())
      return PureWord::reduced(strands, it->second);
  }

  const int i = g.i, j = g.j;
  std::vector<PureWord> candidates;
  if (a != i - 1 && a != i && a != j - 1 && a != j) {
    candidates.push_back(PureWord::generator(strands, g));
  } else if (e == 1 && a == j) {
    candidates.push_back(PureWord::generator(strands, {i, j + 1}));
  } else if (e == -1 && a == j - 1 && a != i) {
    candidates.push_back(PureWord::generator(strands, {i, j - 1}));
  } else if (a == i && a == j - 1) {
    candidates.push_back(PureWord::generator(strands, g));
  } else {
    int i2 = tau(a, i), j2 = tau(a, j);
    PureGen base{std::min(i2, j2), std::max(i2, j2)};
    candidates.push_back(PureWord::generator(strands, base));
    std::vector<int> pts = {a, a + 1, base.i, base.j, i, j};
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (std::size_t u = 0; u < pts.size(); ++u) {
      for (std::size_t v = u + 1; v < pts.size(); ++v) {
        PureGen c{pts[u], pts[v]};
        if (c.j > strands || c == base) continue;
        candidates.push_back(conj_form(strands, c, 1, base));
        candidates.push_back(conj_form(strands, c, -1, base));
      }
    }
  }

  for (const PureWord& cand : candidates) {
    if (rule_holds(strands, a, e, g, cand)) {
      std::lock_guard<std::mutex> lock(rule_mutex);
      rule_cache[key] = cand.letters();
      return cand;
    }
  }
  throw std::logic_error("no certified rewriting rule for s" +
                         std::to_string(a) + "^" + std::to_string(e) + " on " +
                         to_string(g));
}

namespace {

// M w M^-1 for a positive transversal word M, letter by letter.
PureWord conjugate_by_positive_word(int strands, const BraidWord& m,
                                    const PureWord& w) {
  PureWord out = w;
  std::vector<int> singles;
  for (const BraidLetter& l : m.letters())
    for (long long r = 0; r < l.exp; ++r) singles.push_back(l.index);
  for (auto it = singles.rbegin(); it != singles.rend(); ++it) {
    PureWord next(strands);
    for (const PureLetter& l : out.letters()) {
      PureWord rule = sigma_conjugate_rule(strands, *it, 1, l.gen);
      long long reps = std::llabs(l.exp);
      PureWord piece = l.exp < 0 ? invert(rule) : rule;
      for (long long r = 0; r < reps; ++r) next = multiply(next, piece);
    }
    out = next;
  }
  return out;
}

}  // namespace

PureWord pure_from_sigma(const BraidWord& w) {
  if (!is_pure(w))
    throw std::invalid_argument("input braid word is not pure");
  const int n = w.strands();
  PureWord out(n);
  Permutation prefix(n);
  for (const BraidLetter& run : w.letters()) {
    int e = run.exp < 0 ? -1 : 1;
    for (long long r = 0; r < std::llabs(run.exp); ++r) {
      Permutation next =
          prefix.then(Permutation::transposition(n, run.index));
      bool longer = next.inversions() > prefix.inversions();
      if (e > 0 && !longer) {
        // M_prefix s_i M_next^-1 = M_next s_i^2 M_next^-1
        BraidWord m = transversal_lift(next);
        out = multiply(out, conjugate_by_positive_word(
                                n, m, PureWord::generator(
                                          n, {run.index, run.index + 1})));
      } else if (e < 0 && longer) {
        // M_prefix s_i^-1 M_next^-1 = M_prefix s_i^-2 M_prefix^-1
        BraidWord m = transversal_lift(prefix);
        out = multiply(out, conjugate_by_positive_word(
                                n, m,
                                PureWord::generator(
                                    n, {run.index, run.index + 1}, -1)));
      }
      prefix = next;
    }
  }
  return out;
}

}  // namespace braidk
