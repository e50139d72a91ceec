#pragma once

#include <vector>

#include "braidk/free_word.hpp"

namespace braidk {

/// Endomorphism of free groups, given by the images of the source generators.
///
/// Composition order is fixed project-wide as "right acts first":
/// compose(e1, e2) applies e2 first, i.e. compose(e1, e2)(w) = e1(e2(w)).
class FreeEndo {
 public:
  FreeEndo(int source_rank, int target_rank, std::vector<FreeWord> images);
  static FreeEndo identity(int rank);

  int source_rank() const { return source_rank_; }
  int target_rank() const { return target_rank_; }
  const FreeWord& image(int gen) const;  // 1-based
  const std::vector<FreeWord>& images() const { return images_; }

  friend bool operator==(const FreeEndo&, const FreeEndo&) = default;

 private:
  int source_rank_;
  int target_rank_;
  std::vector<FreeWord> images_;
};

FreeWord apply(const FreeEndo& e, const FreeWord& w);
FreeEndo compose(const FreeEndo& e1, const FreeEndo& e2);
bool is_identity(const FreeEndo& e);

}  // namespace braidk
