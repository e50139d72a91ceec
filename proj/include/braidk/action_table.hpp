#pragma once

#include <string>
#include <vector>

#include "braidk/artin.hpp"
#include "braidk/free_endo.hpp"
#include "braidk/pure_word.hpp"

namespace braidk {

/// Conjugation action of the A(r,s) generators (s <= level) on the free group
/// F_level(A(1,level+1) .. A(level,level+1)).
///
/// Entries are reduced words over the level generators, with x_i standing for
/// A(i, level+1). The action convention is phi(a)(x) = a x a^-1.
struct ActionTable {
  int level = 0;
  std::vector<PureGen> acting;
  std::vector<std::vector<FreeWord>> entries;  // [acting index][target-1]
  std::vector<std::string> acting_labels;
  std::vector<std::string> target_labels;

  FreeEndo endo_of(int acting_index) const;
  FreeEndo inverse_endo_of(int acting_index) const;
};

enum class Case4Variant {
  kAsWritten,  // trailing factor (x_r^-1 x_s)
  kConjugate,  // trailing factor (x_r x_s), making the entry C x_i C^-1
};

// The r<i<s entry of the conjugation case table.
FreeWord phi_case_entry(int level, PureGen acting, int target,
                        Case4Variant variant);

// Oracle-resolved variant of the fourth case, memoized after the first call.
Case4Variant certified_case4_variant();

// Full table for all acting A(r,s) with s <= level.
ActionTable pure_braid_action(int n, int level);
// Restriction to the acting generators A(r,s) with a fixed s (the rank s-1
// free factor of the combed decomposition).
ActionTable pure_braid_action_factor(int n, int level, int s);

// Inverts every letter in place without reversing the order; the image of a
// word under the reversal anti-automorphism composed with inversion.
BraidWord letterwise_invert(const BraidWord& w);

// phi(u)(A(target,level+1)) for an arbitrary u in B_level, computed through
// the Artin representation applied to the letterwise-inverted actor. Exact
// for pure u.
FreeWord conjugation_image(int level, const BraidWord& actor, int target,
                           bool invert_actor = false);

struct EntryCheck {
  std::string acting_label;
  std::string target_label;
  bool oracle_equal = false;      // expand(a) expand(x) expand(a)^-1 vs entry
  bool conjugate_to_target = false;  // free-group conjugacy witness found
};

// Oracle verification of every entry of the table inside B_n.
std::vector<EntryCheck> verify_action_table(const ActionTable& table, int n);

// Lift of a level word back to A-generators of P_n.
PureWord lift_level_word(int n, int level, const FreeWord& w);

}  // namespace braidk
