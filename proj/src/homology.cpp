#include "braidk/homology.hpp"

#include <sstream>
#include <stdexcept>

namespace braidk {

namespace {

FreeWord relator(std::span<const std::string> names, const char* lhs,
                 const char* rhs) {
  return multiply(parse_word(names, lhs), invert(parse_word(names, rhs)));
}

}  // namespace

Presentation presentation_x_p4() {
  Presentation p;
  p.generator_names = {"a1", "a2", "b1", "b2", "b3"};
  const auto& g = p.generator_names;
  p.relators = {
      relator(g, "a1 b1 a1^-1", "b1^-1 b2^-1 b1 b2 b1"),
      relator(g, "a1 b2 a1^-1", "b1^-1 b2 b1"),
      relator(g, "a1 b3 a1^-1", "b3"),
      relator(g, "a2 b1 a2^-1", "b1^-1 b3^-1 b1 b3 b1"),
      relator(g, "a2 b3 b2 b3^-1 a2^-1", "b3 b2 b3^-1"),  // R5'
      relator(g, "a2 b3 a2^-1", "b1^-1 b3 b1"),
  };
  return p;
}

Presentation presentation_torus() {
  Presentation p;
  p.generator_names = {"a", "b"};
  p.relators = {relator(p.generator_names, "a b", "b a")};
  return p;
}

std::optional<Presentation> builtin_presentation(const std::string& name) {
  if (name == "X_P4") return presentation_x_p4();
  if (name == "torus") return presentation_torus();
  return std::nullopt;
}

IntMatrix relator_matrix(const Presentation& p) {
  if (p.generator_names.empty())
    throw std::invalid_argument("empty generator list");
  IntMatrix m(p.generator_names.size(), p.relators.size());
  for (std::size_t c = 0; c < p.relators.size(); ++c) {
    const FreeWord& r = p.relators[c];
    if (r.rank() != static_cast<int>(p.generator_names.size()))
      throw std::invalid_argument("relator rank does not match generators");
    if (r.is_identity())
      throw std::invalid_argument("relators must be nontrivial");
    for (const Letter& l : r.letters())
      m.at(static_cast<std::size_t>(l.gen - 1), c) += l.exp;
  }
  return m;
}

PresentationHomology presentation_homology(const Presentation& p) {
  IntMatrix boundary = relator_matrix(p);
  PresentationHomology h;
  h.h0 = free_abelian(1);
  h.h1 = cokernel(boundary);
  h.h2 = free_abelian(Int(kernel_rank(boundary)));
  h.relators_all_zero_sum = true;
  for (std::size_t i = 0; i < boundary.rows(); ++i)
    for (std::size_t j = 0; j < boundary.cols(); ++j)
      if (boundary.at(i, j) != 0) h.relators_all_zero_sum = false;
  if (!h.relators_all_zero_sum)
    h.warning =
        "some relator has a nonzero exponent sum; H2 from the abelianized "
        "boundary is exact for this 2-complex, but the conjugacy-type cycle "
        "argument does not apply";
  return h;
}

KPair khomology_of_2complex(const AbelianGroup& h0, const AbelianGroup& h1,
                            const AbelianGroup& h2) {
  KPair k;
  k.k0 = direct_sum(h0, h2);
  k.k1 = h1;
  k.provenance.push_back("K of 2-complex: K0 = H0 + H2, K1 = H1");
  if (!k.torsion_free())
    k.provenance.push_back(
        "homology torsion carried through verbatim; the 2-complex rule is "
        "only certified here for torsion-free input");
  return k;
}

BettiTable betti_bpn(int n) {
  if (n < 2) throw std::invalid_argument("betti table needs n >= 2");
  BettiTable t;
  t.n = n;
  t.betti = {1};
  for (int l = 1; l < n; ++l) {
    std::vector<Int> next(t.betti.size() + 1);
    for (std::size_t k = 0; k < t.betti.size(); ++k) {
      next[k] += t.betti[k];
      next[k + 1] += Int(l) * t.betti[k];
    }
    t.betti = std::move(next);
  }
  return t;
}

namespace {

Int half_factorial(int n) {  // n!/2
  Int f = 1;
  for (int k = 3; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

KPair khomology_bpn(int n) {
  BettiTable t = betti_bpn(n);
  Int even = 0, odd = 0;
  for (std::size_t k = 0; k < t.betti.size(); ++k)
    (k % 2 == 0 ? even : odd) += t.betti[k];
  KPair k = make_kpair(even, odd,
                       "K-homology of the classifying space from even/odd "
                       "cell-count sums; torsion-free");
  if (even != odd || even != half_factorial(n))
    throw std::logic_error("Betti sums drifted from n!/2");
  return k;
}

namespace {

void enumerate_rec(int n, int r, int min_i, SimplexLabel& current,
                   std::vector<SimplexLabel>& out) {
  if (r == 0) {
    out.push_back(current);
    return;
  }
  for (int i = min_i; i <= n; ++i) {
    if (n - i + 1 < r) break;
    for (int j = 1; j < i; ++j) {
      current.pairs.emplace_back(i, j);
      enumerate_rec(n, r - 1, i + 1, current, out);
      current.pairs.pop_back();
    }
  }
}

}  // namespace

std::vector<SimplexLabel> enumerate_simplices(int n, int r) {
  if (n < 2) throw std::invalid_argument("simplex enumeration needs n >= 2");
  if (r < 0 || r > n - 1)
    throw std::invalid_argument("simplex dimension out of range");
  std::vector<SimplexLabel> out;
  SimplexLabel current;
  enumerate_rec(n, r, 2, current, out);
  return out;
}

std::string to_string(const SimplexLabel& s) {
  if (s.pairs.empty()) return "[*]";
  std::ostringstream out;
  out << '[';
  for (std::size_t k = 0; k < s.pairs.size(); ++k) {
    if (k) out << ", ";
    out << "A(" << s.pairs[k].second << "," << s.pairs[k].first << ")";
  }
  out << ']';
  return out.str();
}

FullBraidKHomology full_braid_khomology_mod_torsion(int n) {
  if (n < 2) throw std::invalid_argument("full braid group needs n >= 2");
  FullBraidKHomology out;
  out.k = make_kpair(1, 1,
                     "rank of K of the full braid group classifying space: "
                     "H^0 = H^1 = Z and higher cohomology finite");
  out.modulo_torsion = n >= 3;
  if (n == 2)
    out.note = "B_2 = Z, so the computation is exact";
  else if (n == 4)
    out.note =
        "torsion is present for n = 4: degree 0 carries an extra Z/2 "
        "(computed elsewhere); ranks stay (1, 1)";
  else
    out.note = "ranks only; torsion classes are not computed here";
  return out;
}

IntMatrix induced_h1(const FreeEndo& hom) {
  IntMatrix m(static_cast<std::size_t>(hom.target_rank()),
              static_cast<std::size_t>(hom.source_rank()));
  for (int s = 1; s <= hom.source_rank(); ++s)
    for (const Letter& l : hom.image(s).letters())
      m.at(static_cast<std::size_t>(l.gen - 1),
           static_cast<std::size_t>(s - 1)) += l.exp;
  return m;
}

std::string to_string(const KPair& k) {
  return "(K0 = " + to_string(k.k0) + ", K1 = " + to_string(k.k1) + ")";
}

}  // namespace braidk
