#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <iostream>

#include "braidk/homology.hpp"
#include "braidk/ktheory.hpp"

using namespace braidk;

namespace {

Int half_factorial(int n) {
  Int f = 1;
  for (int k = 3; k <= n; ++k) f *= k;
  return f;
}

KPair kp(long long a0, long long a1) {
  return make_kpair(Int(a0), Int(a1), "test input");
}

ThetaCertificate cert_for(int n, int k) {
  ThetaResult r = stage_certificate(n, k);
  REQUIRE(r.certificate.has_value());
  return *r.certificate;
}

}  // namespace

TEST_CASE("K of free group C*-algebras") {
  CHECK(k_of_free_group(0) == kp(1, 0));
  CHECK(k_of_free_group(1) == kp(1, 1));
  CHECK(k_of_free_group(3) == kp(1, 3));
  CHECK_THROWS_AS(k_of_free_group(-1), std::invalid_argument);
}

TEST_CASE("theta certificates for the alpha action on the beta fiber") {
  // F_2(alpha) acting on F_3(beta): the stage-2 action of the 4-strand tower
  ActionTable t = pure_braid_action_factor(4, 3, 3);
  CHECK(t.acting.size() == 2);
  ThetaResult r = certify_theta_trivial(t);
  REQUIRE(r.certificate.has_value());
  CHECK(r.certificate->witnesses.size() == 6);
  CHECK(r.certificate->verify());
  for (const ThetaWitness& w : r.certificate->witnesses)
    CHECK(conjugate(w.target, w.witness) == w.image);
}

TEST_CASE("trivial action certifies with identity witnesses") {
  ActionTable t;
  t.level = 2;
  t.acting = {{1, 2}};
  t.acting_labels = {"g"};
  t.target_labels = {"x1", "x2"};
  t.entries = {{FreeWord::generator(2, 1), FreeWord::generator(2, 2)}};
  ThetaResult r = certify_theta_trivial(t);
  REQUIRE(r.certificate.has_value());
  for (const ThetaWitness& w : r.certificate->witnesses)
    CHECK(w.witness.is_identity());
}

TEST_CASE("swap action fails certification with a report") {
  ActionTable t;
  t.level = 2;
  t.acting = {{1, 2}};
  t.acting_labels = {"swap"};
  t.target_labels = {"x1", "x2"};
  t.entries = {{FreeWord::generator(2, 2), FreeWord::generator(2, 1)}};
  ThetaResult r = certify_theta_trivial(t);
  CHECK_FALSE(r.certificate.has_value());
  CHECK(r.failures.size() == 2);
}

TEST_CASE("PV crossed-product rank rule") {
  ThetaCertificate c1 = cert_for(4, 2);  // acting rank 2
  CHECK(pv_crossed_by_free(kp(1, 3), 2, c1) == kp(7, 5));

  ThetaCertificate c2 = cert_for(5, 2);
  CHECK(pv_crossed_by_free(kp(13, 7), 2, c2) == kp(27, 33));

  ThetaCertificate c3 = cert_for(5, 3);
  CHECK(pv_crossed_by_free(kp(1, 4), 3, c3) == kp(13, 7));

  // k = 1: F_1(a1) alone acting on the beta fiber
  ActionTable full = pure_braid_action_factor(4, 3, 3);
  ActionTable a1_only;
  a1_only.level = 3;
  a1_only.target_labels = full.target_labels;
  for (std::size_t g = 0; g < full.acting.size(); ++g) {
    if (full.acting[g] == PureGen{2, 3}) {
      a1_only.acting.push_back(full.acting[g]);
      a1_only.entries.push_back(full.entries[g]);
      a1_only.acting_labels.push_back(full.acting_labels[g]);
    }
  }
  ThetaResult r1 = certify_theta_trivial(a1_only);
  REQUIRE(r1.certificate.has_value());
  CHECK(pv_crossed_by_free(kp(1, 3), 1, *r1.certificate) == kp(4, 4));
}

TEST_CASE("PV rule rejects bad inputs") {
  ThetaCertificate c = cert_for(4, 2);
  KPair torsion;
  torsion.k0 = AbelianGroup{1, {Int(2)}};
  torsion.k1 = free_abelian(0);
  CHECK_THROWS_AS(pv_crossed_by_free(torsion, 2, c), std::invalid_argument);
  CHECK_THROWS_AS(pv_crossed_by_free(kp(1, 3), 3, c), std::invalid_argument);
  ThetaCertificate broken = c;
  broken.witnesses[0].image =
      multiply(broken.witnesses[0].image,
               FreeWord::generator(broken.witnesses[0].image.rank(), 1));
  CHECK_THROWS_AS(pv_crossed_by_free(kp(1, 3), 2, broken),
                  std::invalid_argument);
  ThetaCertificate empty;
  empty.acting_rank = 2;
  CHECK_THROWS_AS(pv_crossed_by_free(kp(1, 3), 2, empty),
                  std::invalid_argument);
}

TEST_CASE("Kunneth rule") {
  CHECK(kunneth(kp(7, 5), kp(1, 1)) == kp(12, 12));
  CHECK(kunneth(kp(27, 33), kp(1, 1)) == kp(60, 60));
  CHECK(kunneth(kp(4, 9), kp(1, 0)) == kp(4, 9));  // unit
  KPair torsion;
  torsion.k0 = AbelianGroup{1, {Int(2)}};
  torsion.k1 = free_abelian(1);
  CHECK_THROWS_WITH_AS(kunneth(kp(1, 1), torsion),
                       "Kunneth torsion terms out of scope",
                       std::invalid_argument);
}

TEST_CASE("Kunneth is commutative and associative with unit (1,0)") {
  std::vector<KPair> pool = {kp(1, 0), kp(1, 1), kp(2, 3), kp(7, 5),
                             kp(0, 4)};
  for (const KPair& a : pool)
    for (const KPair& b : pool) {
      CHECK(kunneth(a, b) == kunneth(b, a));
      for (const KPair& c : pool)
        CHECK(kunneth(kunneth(a, b), c) == kunneth(a, kunneth(b, c)));
    }
}

TEST_CASE("circle crossing") {
  CHECK(cross_circle(kp(7, 5)) == kp(12, 12));
  CHECK(cross_circle(kp(1, 0)) == kp(1, 1));
  CHECK(cross_circle(kp(2, 2)) == kp(4, 4));
  // torsion is carried through as a direct sum
  KPair t;
  t.k0 = AbelianGroup{1, {Int(2)}};
  t.k1 = free_abelian(1);
  KPair r = cross_circle(t);
  CHECK(r.k0 == (AbelianGroup{2, {Int(2)}}));
  CHECK(r.k0 == r.k1);
}

TEST_CASE("K-theory of the pure braid tower") {
  PnKTheory p2 = ktheory_pn(2);
  CHECK(p2.k == kp(1, 1));
  CHECK(p2.stages.empty());

  PnKTheory p3 = ktheory_pn(3);
  CHECK(p3.k == kp(3, 3));
  CHECK(p3.stages.empty());
  CHECK(p3.fiber_start == kp(1, 2));

  PnKTheory p4 = ktheory_pn(4);
  CHECK(p4.k == kp(12, 12));
  REQUIRE(p4.stages.size() == 1);
  CHECK(p4.stages[0].input == kp(1, 3));
  CHECK(p4.stages[0].output == kp(7, 5));
  REQUIRE(p4.ledger.has_value());
  CHECK(p4.ledger->k0_generators.size() == 12);
  CHECK(p4.ledger->k1_generators.size() == 12);

  PnKTheory p5 = ktheory_pn(5);
  CHECK(p5.k == kp(60, 60));
  REQUIRE(p5.stages.size() == 2);
  CHECK(p5.stages[0].input == kp(1, 4));
  CHECK(p5.stages[0].output == kp(13, 7));
  CHECK(p5.stages[1].output == kp(27, 33));

  CHECK(ktheory_pn(7).k == kp(2520, 2520));
  CHECK_THROWS_AS(ktheory_pn(1), std::invalid_argument);
}

TEST_CASE("provenance carries the K-amenability label") {
  PnKTheory p4 = ktheory_pn(4);
  bool found = false;
  for (const std::string& line : p4.k.provenance)
    found |= line.find("K-amenability") != std::string::npos;
  CHECK(found);
}

TEST_CASE("xy recurrence values") {
  using Pair = std::pair<Int, Int>;
  CHECK(xy_recurrence(3) == std::vector<Pair>{{1, 2}});
  CHECK(xy_recurrence(4) == std::vector<Pair>{{1, 3}, {7, 5}});
  CHECK(xy_recurrence(5) == std::vector<Pair>{{1, 4}, {13, 7}, {27, 33}});
  CHECK_THROWS_AS(xy_recurrence(2), std::invalid_argument);
}

TEST_CASE("stage traces match the recurrence and multiply sums") {
  for (int n = 3; n <= 9; ++n) {
    PnKTheory p = ktheory_pn(n);
    auto rec = xy_recurrence(n);
    REQUIRE(p.stages.size() + 1 == rec.size());
    CHECK(p.fiber_start.k0.free_rank == rec[0].first);
    CHECK(p.fiber_start.k1.free_rank == rec[0].second);
    if (n == 3) continue;
    CHECK(p.stages[0].input == p.fiber_start);
    for (std::size_t s = 0; s < p.stages.size(); ++s) {
      CHECK(p.stages[s].output.k0.free_rank == rec[s + 1].first);
      CHECK(p.stages[s].output.k1.free_rank == rec[s + 1].second);
      Int in_sum = p.stages[s].input.k0.free_rank +
                   p.stages[s].input.k1.free_rank;
      Int out_sum = p.stages[s].output.k0.free_rank +
                    p.stages[s].output.k1.free_rank;
      CHECK(out_sum == in_sum * (p.stages[s].rank_adjoined + 1));
    }
    CHECK(rec.back().first + rec.back().second == half_factorial(n));
  }
}

TEST_CASE("rank-level assembly comparison for n up to 9") {
  for (int n = 2; n <= 9; ++n) {
    PnKTheory rhs = ktheory_pn(n);
    KPair lhs = khomology_bpn(n);
    CHECK(lhs.k0.free_rank == rhs.k.k0.free_rank);
    CHECK(lhs.k1.free_rank == rhs.k.k1.free_rank);
  }
}

TEST_CASE("free crossed by free") {
  CHECK(k_of_free_crossed_free(4) == kp(13, 7));
  CHECK(k_of_free_crossed_free(2) == kp(3, 3));
  CHECK(k_of_free_crossed_free(3) == kp(7, 5));
  for (int n = 2; n <= 6; ++n) {
    KPair k = k_of_free_crossed_free(n);
    CHECK(k.k0.free_rank == 1 + Int(n) * (n - 1));
    CHECK(k.k1.free_rank == 2 * n - 1);
  }
}

TEST_CASE("amalgam over the center") {
  AmalgamKTheory b3 = amalgam_over_z(2, 3);
  CHECK(b3.k.k0 == free_abelian(1));
  CHECK(b3.k.k1 == free_abelian(1));
  CHECK(b3.ledger.group == "C*_r(B_3)");
  CHECK(b3.ledger.k0_generators ==
        std::vector<std::string>{"[1] (unit)"});
  CHECK(b3.ledger.k1_generators ==
        std::vector<std::string>{"[s1] (= [s2])"});

  AmalgamKTheory full = amalgam_over_z(1, 1);
  CHECK(full.k.k0 == free_abelian(1));
  CHECK(full.k.k1 == free_abelian(1));

  AmalgamKTheory even = amalgam_over_z(2, 4);
  CHECK(even.k.k1 == (AbelianGroup{1, {Int(2)}}));
  CHECK_THROWS_AS(amalgam_over_z(0, 3), std::invalid_argument);
}
