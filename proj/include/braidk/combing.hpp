#pragma once

#include <vector>

#include "braidk/action_table.hpp"
#include "braidk/pure_word.hpp"

namespace braidk {

/// Artin combed form of a pure braid: one free-group word per level of
/// P_n = F_{n-1} x| F_{n-2} x| ... x| F_1.  levels[k] lives in
/// F_t(A(1,t+1)..A(t,t+1)) for t = n-1-k, so levels.front() is the top level
/// and recombining top-down reproduces the input braid.
struct CombedForm {
  int strands = 0;
  std::vector<FreeWord> levels;

  const FreeWord& level(int t) const;  // t in 1..strands-1
};

CombedForm comb(const PureWord& w);
PureWord recombine(const CombedForm& f);

// Rewrites a pure sigma-word in the A(i,j) generators by Schreier coset
// tracking through the permutation map. Throws std::invalid_argument if the
// input is not pure.
PureWord pure_from_sigma(const BraidWord& w);

// Positive braid lift of a permutation along a fixed reduced word
// (length = number of inversions). Used for the Schreier transversal.
BraidWord transversal_lift(const Permutation& p);

// Certified rewriting rule s_a^e A(i,j) s_a^-e as an A-generator word.
// Every rule is checked against the Artin oracle once and memoized.
PureWord sigma_conjugate_rule(int strands, int a, int e, PureGen g);

}  // namespace braidk
