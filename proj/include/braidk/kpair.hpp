#pragma once

#include <string>
#include <vector>

#include "braidk/int_matrix.hpp"

namespace braidk {

/// Ordered pair of K-groups (degree 0, degree 1) with the trail of rules that
/// produced it.
struct KPair {
  AbelianGroup k0, k1;
  std::vector<std::string> provenance;

  bool torsion_free() const {
    return k0.is_torsion_free() && k1.is_torsion_free();
  }
  friend bool operator==(const KPair& a, const KPair& b) {
    return a.k0 == b.k0 && a.k1 == b.k1;
  }
};

inline KPair make_kpair(Int rank0, Int rank1, std::string note) {
  return KPair{free_abelian(std::move(rank0)), free_abelian(std::move(rank1)),
               {std::move(note)}};
}

std::string to_string(const KPair& k);

}  // namespace braidk
