#pragma once

#include "braidk/braid_word.hpp"
#include "braidk/free_endo.hpp"

namespace braidk {

// The faithful Artin action of B_n on F_n(x_1..x_n). Generator rule:
//   sigma_i:  x_i -> x_i x_{i+1} x_i^-1,  x_{i+1} -> x_i,  x_j -> x_j else,
// extended over words with the rightmost letter acting first:
//   artin_action(u v) = compose(artin_action(u), artin_action(v)).
// The braid relation holds under this order; artin_self_test checks it.
FreeEndo artin_generator(int strands, int index, bool inverse);
FreeEndo artin_action(const BraidWord& w);

// Word-problem oracle. Faithfulness of the Artin representation makes these
// exact: a braid word is trivial iff its action fixes every generator.
bool is_trivial(const BraidWord& w);
bool braid_equal(const BraidWord& u, const BraidWord& v);

// Throws std::logic_error if the braid or far-commutation relations fail
// under the chosen composition order. Cheap; run at verification startup.
void artin_self_test(int strands);

}  // namespace braidk
