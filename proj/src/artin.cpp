#include "braidk/artin.hpp"

#include <stdexcept>
#include <string>

namespace braidk {

FreeEndo artin_generator(int strands, int index, bool inverse) {
  if (index < 1 || index >= strands)
    throw std::invalid_argument("sigma index out of range");
  std::vector<FreeWord> images;
  images.reserve(static_cast<std::size_t>(strands));
  for (int g = 1; g <= strands; ++g) {
    if (!inverse) {
      if (g == index) {
        FreeWord w = FreeWord::generator(strands, index);
        w = multiply(w, FreeWord::generator(strands, index + 1));
        w = multiply(w, FreeWord::generator(strands, index, -1));
        images.push_back(w);
      } else if (g == index + 1) {
        images.push_back(FreeWord::generator(strands, index));
      } else {
        images.push_back(FreeWord::generator(strands, g));
      }
    } else {
      if (g == index) {
        images.push_back(FreeWord::generator(strands, index + 1));
      } else if (g == index + 1) {
        FreeWord w = FreeWord::generator(strands, index + 1, -1);
        w = multiply(w, FreeWord::generator(strands, index));
        w = multiply(w, FreeWord::generator(strands, index + 1));
        images.push_back(w);
      } else {
        images.push_back(FreeWord::generator(strands, g));
      }
    }
  }
  return FreeEndo(strands, strands, std::move(images));
}

FreeEndo artin_action(const BraidWord& w) {
  FreeEndo endo = FreeEndo::identity(w.strands());
  for (const BraidLetter& l : w.letters()) {
    FreeEndo gen = artin_generator(w.strands(), l.index, l.exp < 0);
    long long reps = std::llabs(l.exp);
    for (long long r = 0; r < reps; ++r) endo = compose(endo, gen);
  }
  return endo;
}

bool is_trivial(const BraidWord& w) { return is_identity(artin_action(w)); }

bool braid_equal(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands())
    throw std::invalid_argument("strand mismatch in braid_equal");
  if (!(permutation_of(u) == permutation_of(v))) return false;
  return artin_action(u) == artin_action(v);
}

void artin_self_test(int strands) {
  auto gen = [&](int i) { return BraidWord::generator(strands, i); };
  for (int i = 1; i + 1 < strands; ++i) {
    BraidWord lhs = multiply(multiply(gen(i), gen(i + 1)), gen(i));
    BraidWord rhs = multiply(multiply(gen(i + 1), gen(i)), gen(i + 1));
    if (artin_action(lhs) != artin_action(rhs))
      throw std::logic_error("braid relation failed at i=" + std::to_string(i));
  }
  for (int i = 1; i < strands - 2; ++i) {
    for (int j = i + 2; j < strands; ++j) {
      BraidWord lhs = multiply(gen(i), gen(j));
      BraidWord rhs = multiply(gen(j), gen(i));
      if (artin_action(lhs) != artin_action(rhs))
        throw std::logic_error("far commutation failed at (" +
                               std::to_string(i) + "," + std::to_string(j) +
                               ")");
    }
  }
  if (artin_action(gen(1)).image(1) !=
      parse_word(strands, "x1 x2 x1^-1"))
    throw std::logic_error("artin generator rule drifted from convention");
}

}  // namespace braidk
