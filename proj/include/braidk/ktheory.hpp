#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braidk/action_table.hpp"
#include "braidk/kpair.hpp"

namespace braidk {

// K of the reduced free-group C*-algebra: (Z, Z^m). m = 0 is the scalars.
KPair k_of_free_group(int m);

/// One inner-conjugacy witness: c with c . target . c^-1 = image, where image
/// is the table entry phi(g)(target).
///
/// Convention: witnesses are recorded against the forward action. Conjugacy
/// is preserved by automorphisms, so target ~ phi(g)(target) holds iff
/// target ~ phi(g^-1)(target); the connecting map of the PV sequence
/// (which uses the inverse action) vanishes exactly when these witnesses
/// exist.
struct ThetaWitness {
  std::string acting_label;
  std::string target_label;
  int level = 0;
  FreeWord target;
  FreeWord image;
  FreeWord witness;
};

struct ThetaCertificate {
  std::string action_ref;
  int acting_rank = 0;  // rank of the acting free group
  std::vector<ThetaWitness> witnesses;

  // Re-verifies every witness by free-group multiplication.
  bool verify() const;
};

struct ThetaResult {
  std::optional<ThetaCertificate> certificate;
  std::vector<std::string> failures;  // offending (acting, target) pairs
};

ThetaResult certify_theta_trivial(const ActionTable& table);

// Certificate for the pipeline stage that crosses by F_k inside P_n: the
// generators A(*,k+1) acting on every higher fiber F_t, t = k+1..n-1.
ThetaResult stage_certificate(int n, int k);

// The torsion-free crossed-product rank rule
//   K_0(A x| F_k) = Z^{a0 + k a1},  K_1(A x| F_k) = Z^{a1 + k a0},
// valid when the connecting map vanishes; the certificate is mandatory and is
// re-verified on entry.
KPair pv_crossed_by_free(const KPair& a, int k, const ThetaCertificate& cert);

// Rank Kunneth rule for torsion-free factors. Torsion input is a hard error.
KPair kunneth(const KPair& a, const KPair& b);

// K_i(X x S^1) = K_0(X) + K_1(X) in both degrees.
KPair cross_circle(const KPair& a);

struct PVStageTrace {
  int stage = 0;  // Q_stage = F_{n-1} x| ... x| F_{n-stage}
  KPair input;
  int rank_adjoined = 0;
  std::string certificate_ref;
  KPair output;
};

struct GeneratorLedger {
  std::string group;
  std::vector<std::string> k0_generators;
  std::vector<std::string> k1_generators;
};

struct PnKTheory {
  KPair k;
  KPair fiber_start;  // K of the top fiber F_{n-1}, the Q_1 of the trace
  std::vector<PVStageTrace> stages;
  std::vector<ThetaCertificate> certificates;
  std::optional<GeneratorLedger> ledger;  // attached for n = 4
};

// Folds K(C*_r F_{n-1}) through the PV rule along the iterated semidirect
// decomposition, then crosses with the central circle factor. The result is
// (Z^{n!/2}, Z^{n!/2}); any failed stage certificate aborts.
PnKTheory ktheory_pn(int n);

// Rank recurrence x_i = x_{i-1} + y_{i-1}(n-i), y_i = y_{i-1} + x_{i-1}(n-i)
// with x_1 = 1, y_1 = n-1, up to i = n-2.
std::vector<std::pair<Int, Int>> xy_recurrence(int n);

// K(C*_r(F_n) x| F_{n-1}) = (Z^{1+n(n-1)}, Z^{2n-1}).
KPair k_of_free_crossed_free(int n);

struct AmalgamKTheory {
  KPair k;
  GeneratorLedger ledger;
};

// Six-term computation for Z *_Z Z with inclusion indices p and q:
// K0 = coker(1,1)^T = Z, K1 = coker(p,q)^T = Z + Z/gcd(p,q).
// For (2,3) this is the 3-strand braid group.
AmalgamKTheory amalgam_over_z(int p, int q);

}  // namespace braidk
