#pragma once

#include <string>
#include <utility>
#include <vector>

#include "braidk/artin.hpp"
#include "braidk/pure_word.hpp"

namespace braidk {

struct RelationCheck {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool holds = false;
  long long lhs_sigma_len = 0;  // certificate: sigma-expansion lengths
  long long rhs_sigma_len = 0;
};

RelationCheck verify_relation(std::string name, const BraidWord& lhs,
                              const BraidWord& rhs);
RelationCheck verify_relation(std::string name, const PureWord& lhs,
                              const PureWord& rhs);

// The 4-strand presentation action relations (11 of them; relation 10 uses
// the oracle-certified conjugator, see open_variant_report).
std::vector<RelationCheck> p4_presentation_relations();
// R1..R6 and the derived R5' for the 5-generator group F_3 x| F_2.
std::vector<RelationCheck> x_complex_relations();
// The two defining relations of the 3-strand pure braid presentation.
std::vector<RelationCheck> p3_presentation_relations();
// A(i,j) <-> sigma dictionaries (n = 3 or 4).
std::vector<RelationCheck> dictionary_checks(int n);
// Full-twist identity (s1..s_{n-1})^n = (A12)(A13 A23)... and its centrality.
std::vector<RelationCheck> center_checks(int n);
// Single-letter mutations of the relation set; every check must come back
// holds == false.
std::vector<RelationCheck> mutated_relation_checks();

struct VariantVerdict {
  std::string question;
  std::vector<std::pair<std::string, bool>> candidates;  // text, oracle verdict
  std::string certified;  // the candidate the suite runs on
};

// Oracle-backed resolution of the ambiguous spots in the source presentation:
// relation-10 conjugator, the fourth conjugation case, center factor orders.
std::vector<VariantVerdict> open_variant_report();

}  // namespace braidk
