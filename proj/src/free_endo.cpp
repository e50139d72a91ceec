#include "braidk/free_endo.hpp"

#include <stdexcept>
#include <utility>

namespace braidk {

FreeEndo::FreeEndo(int source_rank, int target_rank,
                   std::vector<FreeWord> images)
    : source_rank_(source_rank),
      target_rank_(target_rank),
      images_(std::move(images)) {
  if (source_rank_ < 1 || target_rank_ < 1)
    throw std::invalid_argument("endomorphism ranks must be positive");
  if (images_.size() != static_cast<std::size_t>(source_rank_))
    throw std::invalid_argument("endomorphism needs one image per generator");
  for (const FreeWord& w : images_)
    if (w.rank() != target_rank_)
      throw std::invalid_argument("endomorphism image has wrong rank");
}

FreeEndo FreeEndo::identity(int rank) {
  std::vector<FreeWord> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int g = 1; g <= rank; ++g)
    images.push_back(FreeWord::generator(rank, g));
  return FreeEndo(rank, rank, std::move(images));
}

const FreeWord& FreeEndo::image(int gen) const {
  if (gen < 1 || gen > source_rank_)
    throw std::invalid_argument("generator index out of range");
  return images_[static_cast<std::size_t>(gen - 1)];
}

FreeWord apply(const FreeEndo& e, const FreeWord& w) {
  if (w.rank() != e.source_rank())
    throw std::invalid_argument("rank mismatch in endomorphism application");
  std::vector<Letter> raw;
  for (const Letter& l : w.letters()) {
    const FreeWord& img = e.image(l.gen);
    if (img.letters().size() == 1) {
      raw.push_back({img.letters()[0].gen, img.letters()[0].exp * l.exp});
      continue;
    }
    long long reps = std::llabs(l.exp);
    if (l.exp > 0) {
      for (long long r = 0; r < reps; ++r)
        raw.insert(raw.end(), img.letters().begin(), img.letters().end());
    } else {
      FreeWord inv = invert(img);
      for (long long r = 0; r < reps; ++r)
        raw.insert(raw.end(), inv.letters().begin(), inv.letters().end());
    }
    if (raw.size() > static_cast<std::size_t>(4 * kMaxWordLetters))
      throw std::length_error("word length ceiling exceeded during apply");
  }
  return FreeWord::reduced(e.target_rank(), raw);
}

FreeEndo compose(const FreeEndo& e1, const FreeEndo& e2) {
  if (e2.target_rank() != e1.source_rank())
    throw std::invalid_argument("rank mismatch in endomorphism composition");
  std::vector<FreeWord> images;
  images.reserve(e2.images().size());
  for (const FreeWord& w : e2.images()) images.push_back(apply(e1, w));
  return FreeEndo(e2.source_rank(), e1.target_rank(), std::move(images));
}

bool is_identity(const FreeEndo& e) {
  if (e.source_rank() != e.target_rank()) return false;
  for (int g = 1; g <= e.source_rank(); ++g)
    if (e.image(g) != FreeWord::generator(e.target_rank(), g)) return false;
  return true;
}

}  // namespace braidk
