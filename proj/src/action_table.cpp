#include "braidk/action_table.hpp"

#include <stdexcept>

namespace braidk {

namespace {

FreeWord gen(int level, int i, long long e = 1) {
  return FreeWord::generator(level, i, e);
}

}  // namespace

FreeWord phi_case_entry(int level, PureGen acting, int target,
                        Case4Variant variant) {
  const int r = acting.i, s = acting.j, i = target;
  if (s > level || i > level)
    throw std::invalid_argument("action table indices exceed level");
  if (i < r || s < i) return gen(level, i);
  if (r == i) {
    // A_sn^-1 A_in A_sn
    return multiply(multiply(gen(level, s, -1), gen(level, i)), gen(level, s));
  }
  if (s == i) {
    // (A_rn A_in)^-1 A_in (A_rn A_in)
    FreeWord c = multiply(gen(level, r), gen(level, i));
    return conjugate(gen(level, i), invert(c));
  }
  // r < i < s: (A_rn A_sn)^-1 (A_sn A_rn) A_in (A_sn A_rn)^-1 (..)
  FreeWord rs = multiply(gen(level, r), gen(level, s));
  FreeWord sr = multiply(gen(level, s), gen(level, r));
  FreeWord tail = variant == Case4Variant::kAsWritten
                      ? multiply(gen(level, r, -1), gen(level, s))
                      : rs;
  FreeWord w = multiply(invert(rs), sr);
  w = multiply(w, gen(level, i));
  w = multiply(w, invert(sr));
  return multiply(w, tail);
}

BraidWord letterwise_invert(const BraidWord& w) {
  std::vector<BraidLetter> raw = w.letters();
  for (BraidLetter& l : raw) l.exp = -l.exp;
  return BraidWord::reduced(w.strands(), raw);
}

FreeWord conjugation_image(int level, const BraidWord& actor, int target,
                           bool invert_actor) {
  if (actor.strands() != level)
    throw std::invalid_argument("actor must live in B_level");
  // Under x_i ~ A(i,level+1), conjugation u A_{i,level+1} u^-1 is the Artin
  // action of the letterwise-inverted actor (inverted letters, same order);
  // this makes u -> phi(u) a homomorphism under the fixed composition order.
  BraidWord u = invert_actor ? invert(actor) : actor;
  return artin_action(letterwise_invert(u)).image(target);
}

namespace {

// Decides the fourth-case variant once against the oracle, on the smallest
// instance r<i<s (n=4, acting A(1,3), target A(2,4)).
Case4Variant resolve_case4() {
  const int n = 4, level = 3;
  BraidWord actor = expand(level, PureGen{1, 3});
  FreeWord truth = conjugation_image(level, actor, 2);
  for (Case4Variant v : {Case4Variant::kConjugate, Case4Variant::kAsWritten}) {
    FreeWord candidate = phi_case_entry(level, {1, 3}, 2, v);
    if (candidate != truth) continue;
    // cross-check at the braid level before committing
    BraidWord lhs = multiply(
        multiply(expand(n, PureGen{1, 3}), expand(n, PureGen{2, 4})),
        invert(expand(n, PureGen{1, 3})));
    if (braid_equal(lhs, expand(lift_level_word(n, level, candidate))))
      return v;
  }
  throw std::logic_error("no case-4 variant matches the oracle");
}

}  // namespace

Case4Variant certified_case4_variant() {
  static const Case4Variant v = resolve_case4();
  return v;
}

ActionTable pure_braid_action(int n, int level) {
  if (level < 1 || level + 1 > n)
    throw std::invalid_argument("invalid combing level");
  ActionTable t;
  t.level = level;
  Case4Variant variant = level >= 3 ? certified_case4_variant()
                                    : Case4Variant::kConjugate;
  for (int s = 2; s <= level; ++s)
    for (int r = 1; r < s; ++r) t.acting.push_back({r, s});
  for (const PureGen& a : t.acting) {
    std::vector<FreeWord> row;
    row.reserve(static_cast<std::size_t>(level));
    for (int i = 1; i <= level; ++i)
      row.push_back(phi_case_entry(level, a, i, variant));
    t.entries.push_back(std::move(row));
    t.acting_labels.push_back(to_string(a));
  }
  for (int i = 1; i <= level; ++i)
    t.target_labels.push_back(to_string(PureGen{i, level + 1}));
  return t;
}

ActionTable pure_braid_action_factor(int n, int level, int s) {
  ActionTable full = pure_braid_action(n, level);
  ActionTable t;
  t.level = level;
  t.target_labels = full.target_labels;
  for (std::size_t g = 0; g < full.acting.size(); ++g) {
    if (full.acting[g].j != s) continue;
    t.acting.push_back(full.acting[g]);
    t.entries.push_back(full.entries[g]);
    t.acting_labels.push_back(full.acting_labels[g]);
  }
  return t;
}

FreeEndo ActionTable::endo_of(int acting_index) const {
  return FreeEndo(level, level,
                  entries[static_cast<std::size_t>(acting_index)]);
}

FreeEndo ActionTable::inverse_endo_of(int acting_index) const {
  const PureGen a = acting[static_cast<std::size_t>(acting_index)];
  BraidWord actor = expand(level, a);
  std::vector<FreeWord> images;
  images.reserve(static_cast<std::size_t>(level));
  for (int i = 1; i <= level; ++i)
    images.push_back(conjugation_image(level, actor, i, /*invert_actor=*/true));
  return FreeEndo(level, level, std::move(images));
}

PureWord lift_level_word(int n, int level, const FreeWord& w) {
  if (w.rank() != level)
    throw std::invalid_argument("level word has wrong rank");
  PureWord out(n);
  for (const Letter& l : w.letters())
    out = multiply(out,
                   PureWord::generator(n, {l.gen, level + 1}, l.exp));
  return out;
}

std::vector<EntryCheck> verify_action_table(const ActionTable& table, int n) {
  std::vector<EntryCheck> checks;
  for (std::size_t g = 0; g < table.acting.size(); ++g) {
    BraidWord a = expand(n, table.acting[g]);
    for (int i = 1; i <= table.level; ++i) {
      const FreeWord& entry = table.entries[g][static_cast<std::size_t>(i - 1)];
      EntryCheck c;
      c.acting_label = table.acting_labels[g];
      c.target_label = table.target_labels[static_cast<std::size_t>(i - 1)];
      BraidWord lhs = multiply(
          multiply(a, expand(n, PureGen{i, table.level + 1})), invert(a));
      c.oracle_equal =
          braid_equal(lhs, expand(lift_level_word(n, table.level, entry)));
      FreeWord target = FreeWord::generator(table.level, i);
      auto witness = conjugacy_witness(target, entry);
      c.conjugate_to_target =
          witness.has_value() && conjugate(target, *witness) == entry;
      checks.push_back(std::move(c));
    }
  }
  return checks;
}

}  // namespace braidk
