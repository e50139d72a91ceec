#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidk/free_endo.hpp"
#include "braidk/int_matrix.hpp"
#include "braidk/kpair.hpp"

namespace braidk {

/// Group presentation, doubling as its presentation 2-complex: one 0-cell,
/// a 1-cell per generator, a 2-cell per relator.
struct Presentation {
  std::vector<std::string> generator_names;
  std::vector<FreeWord> relators;  // reduced, nontrivial
};

Presentation presentation_x_p4();   // the 5-generator, 6-relator complex
Presentation presentation_torus();  // <a,b | aba^-1b^-1>
// Built-in lookup by name ("X_P4", "torus"); empty optional if unknown.
std::optional<Presentation> builtin_presentation(const std::string& name);

// Exponent-sum boundary matrix: one column per relator, one row per generator.
IntMatrix relator_matrix(const Presentation& p);

struct PresentationHomology {
  AbelianGroup h0, h1, h2;
  bool relators_all_zero_sum = false;
  std::optional<std::string> warning;
};

// H0 = Z (one 0-cell), H1 = coker of the boundary, H2 = Z^(kernel rank).
// Outside the conjugacy-type class (some relator with a nonzero exponent sum)
// a warning is attached.
PresentationHomology presentation_homology(const Presentation& p);

// K of a 2-dimensional complex from its homology: K0 = H0 + H2, K1 = H1.
// Torsion is carried through verbatim and surfaces in the provenance.
KPair khomology_of_2complex(const AbelianGroup& h0, const AbelianGroup& h1,
                            const AbelianGroup& h2);

/// Cell counts of BF_{n-1} x ... x BF_1: coefficients of the polynomial
/// (1+t)(1+2t)...(1+(n-1)t).
struct BettiTable {
  int n = 0;
  std::vector<Int> betti;  // b_0 .. b_{n-1}
};
BettiTable betti_bpn(int n);

// (Z^{n!/2}, Z^{n!/2}) as even/odd Betti sums; torsion-free.
KPair khomology_bpn(int n);

/// r-simplex label of the classifying-space model: pairs (i_k, j_k) with
/// i_1 < ... < i_r and j_k < i_k.
struct SimplexLabel {
  std::vector<std::pair<int, int>> pairs;
  friend bool operator==(const SimplexLabel&, const SimplexLabel&) = default;
  friend auto operator<=>(const SimplexLabel&, const SimplexLabel&) = default;
};
std::vector<SimplexLabel> enumerate_simplices(int n, int r);
std::string to_string(const SimplexLabel& s);

struct FullBraidKHomology {
  KPair k;               // (Z, Z)
  bool modulo_torsion;   // false only for n = 2, where B_2 = Z
  std::string note;
};
// K-homology ranks of the full braid group classifying space. Higher
// cohomology of B_n is finite, so both degrees have rank 1.
FullBraidKHomology full_braid_khomology_mod_torsion(int n);

// Matrix of the map induced on H_1 by a homomorphism given on generators.
IntMatrix induced_h1(const FreeEndo& hom);

}  // namespace braidk
