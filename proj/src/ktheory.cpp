#include "braidk/ktheory.hpp"

#include <numeric>
#include <stdexcept>

namespace braidk {

namespace {

constexpr const char* kAmenabilityNote =
    "reduced = maximal per K-amenability assumption";

Int half_factorial(int n) {
  Int f = 1;
  for (int k = 3; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

KPair k_of_free_group(int m) {
  if (m < 0) throw std::invalid_argument("free group rank must be >= 0");
  return make_kpair(1, m,
                    "K of C*_r(F_" + std::to_string(m) + "): (Z, Z^m)");
}

bool ThetaCertificate::verify() const {
  for (const ThetaWitness& w : witnesses)
    if (conjugate(w.target, w.witness) != w.image) return false;
  return true;
}

ThetaResult certify_theta_trivial(const ActionTable& table) {
  ThetaResult res;
  ThetaCertificate cert;
  cert.action_ref = "level " + std::to_string(table.level) + " action table";
  cert.acting_rank = static_cast<int>(table.acting.size());
  for (std::size_t g = 0; g < table.acting.size(); ++g) {
    for (int i = 1; i <= table.level; ++i) {
      FreeWord target = FreeWord::generator(table.level, i);
      const FreeWord& image =
          table.entries[g][static_cast<std::size_t>(i - 1)];
      auto witness = conjugacy_witness(target, image);
      if (!witness || conjugate(target, *witness) != image) {
        res.failures.push_back(
            table.acting_labels[g] + " on " +
            table.target_labels[static_cast<std::size_t>(i - 1)] +
            ": image not conjugate to the target");
        continue;
      }
      cert.witnesses.push_back({table.acting_labels[g],
                                table.target_labels[static_cast<std::size_t>(
                                    i - 1)],
                                table.level, target, image, *witness});
    }
  }
  if (res.failures.empty()) res.certificate = std::move(cert);
  return res;
}

ThetaResult stage_certificate(int n, int k) {
  if (k < 1 || k + 1 >= n)
    throw std::invalid_argument("stage rank out of range");
  ThetaResult res;
  ThetaCertificate cert;
  cert.action_ref = "A(*," + std::to_string(k + 1) + ") acting on levels " +
                    std::to_string(k + 1) + ".." + std::to_string(n - 1) +
                    " in P_" + std::to_string(n);
  cert.acting_rank = k;
  for (int t = k + 1; t <= n - 1; ++t) {
    ActionTable table = pure_braid_action_factor(n, t, k + 1);
    ThetaResult level_res = certify_theta_trivial(table);
    if (!level_res.certificate) {
      res.failures.insert(res.failures.end(), level_res.failures.begin(),
                          level_res.failures.end());
      continue;
    }
    cert.witnesses.insert(cert.witnesses.end(),
                          level_res.certificate->witnesses.begin(),
                          level_res.certificate->witnesses.end());
  }
  if (res.failures.empty()) res.certificate = std::move(cert);
  return res;
}

KPair pv_crossed_by_free(const KPair& a, int k, const ThetaCertificate& cert) {
  if (!a.torsion_free())
    throw std::invalid_argument(
        "PV rank rule needs torsion-free K-theory input");
  if (k < 1) throw std::invalid_argument("crossing rank must be >= 1");
  if (cert.acting_rank != k)
    throw std::invalid_argument(
        "certificate acting rank does not match the crossing rank");
  if (cert.witnesses.empty() || !cert.verify())
    throw std::invalid_argument(
        "missing or invalid theta-triviality certificate");
  const Int a0 = a.k0.free_rank, a1 = a.k1.free_rank;
  KPair out;
  out.k0 = free_abelian(a0 + Int(k) * a1);
  out.k1 = free_abelian(a1 + Int(k) * a0);
  out.provenance = a.provenance;
  out.provenance.push_back("PV crossed product by F_" + std::to_string(k) +
                           " (theta = 0 certified: " + cert.action_ref + ")");
  return out;
}

KPair kunneth(const KPair& a, const KPair& b) {
  if (!a.torsion_free() || !b.torsion_free())
    throw std::invalid_argument("Kunneth torsion terms out of scope");
  const Int a0 = a.k0.free_rank, a1 = a.k1.free_rank;
  const Int b0 = b.k0.free_rank, b1 = b.k1.free_rank;
  KPair out;
  out.k0 = free_abelian(a0 * b0 + a1 * b1);
  out.k1 = free_abelian(a0 * b1 + a1 * b0);
  out.provenance = a.provenance;
  out.provenance.push_back("Kunneth product");
  return out;
}

KPair cross_circle(const KPair& a) {
  KPair out;
  out.k0 = direct_sum(a.k0, a.k1);
  out.k1 = out.k0;
  out.provenance = a.provenance;
  out.provenance.push_back("cross with circle: both degrees become K0 + K1");
  return out;
}

namespace {

GeneratorLedger p4_ledger() {
  GeneratorLedger ledger;
  ledger.group = "C*_r(P_4)";
  ledger.k0_generators = {"[pt] => [1]"};
  for (int i = 1; i <= 6; ++i)
    ledger.k0_generators.push_back("f*[D_R" + std::to_string(i) +
                                   "] => mu(f*[D_R" + std::to_string(i) + "])");
  for (const char* g : {"a1", "a2", "b1", "b2", "b3"})
    ledger.k0_generators.push_back("(" + std::string(g) +
                                   ")*[D] x [D_c] => [u_" + g + "] x [u_c]");
  for (const char* g : {"a1", "a2", "b1", "b2", "b3"})
    ledger.k1_generators.push_back("(" + std::string(g) + ")*[D] => [u_" + g +
                                   "]");
  ledger.k1_generators.push_back("[pt] x [D_c] => [1] x [u_c]");
  for (int i = 1; i <= 6; ++i)
    ledger.k1_generators.push_back("f*[D_R" + std::to_string(i) +
                                   "] x [D_c] => mu(f*[D_R" +
                                   std::to_string(i) + "]) x [u_c]");
  return ledger;
}

}  // namespace

PnKTheory ktheory_pn(int n) {
  if (n < 2) throw std::invalid_argument("pure braid group needs n >= 2");
  PnKTheory res;
  KPair q = k_of_free_group(n == 2 ? 0 : n - 1);
  res.fiber_start = q;
  for (int k = n - 2; k >= 2; --k) {
    ThetaResult stage = stage_certificate(n, k);
    if (!stage.certificate) {
      std::string msg = "stage F_" + std::to_string(k) +
                        " certificate failed:";
      for (const std::string& f : stage.failures) msg += "\n  " + f;
      throw std::runtime_error(msg);
    }
    KPair next = pv_crossed_by_free(q, k, *stage.certificate);
    res.stages.push_back({n - k, q, k, stage.certificate->action_ref, next});
    res.certificates.push_back(std::move(*stage.certificate));
    q = std::move(next);
  }
  res.k = cross_circle(q);
  res.k.provenance.push_back(kAmenabilityNote);
  Int expected = half_factorial(n);
  if (res.k.k0.free_rank != expected || res.k.k1.free_rank != expected)
    throw std::logic_error("PV pipeline drifted from n!/2");
  if (n == 4) res.ledger = p4_ledger();
  return res;
}

std::vector<std::pair<Int, Int>> xy_recurrence(int n) {
  if (n < 3) throw std::invalid_argument("recurrence needs n >= 3");
  std::vector<std::pair<Int, Int>> out;
  Int x = 1, y = n - 1;
  out.emplace_back(x, y);
  for (int i = 2; i <= n - 2; ++i) {
    Int nx = x + y * (n - i);
    Int ny = y + x * (n - i);
    x = std::move(nx);
    y = std::move(ny);
    out.emplace_back(x, y);
  }
  return out;
}

KPair k_of_free_crossed_free(int n) {
  if (n < 2) throw std::invalid_argument("needs n >= 2");
  // F_{n-1} acting on F_n is the top stage of the P_{n+1} tower.
  ThetaResult stage = stage_certificate(n + 1, n - 1);
  if (!stage.certificate)
    throw std::logic_error("free-on-free stage certificate failed");
  KPair out = pv_crossed_by_free(k_of_free_group(n), n - 1,
                                 *stage.certificate);
  if (out.k0.free_rank != 1 + Int(n) * (n - 1) ||
      out.k1.free_rank != 2 * n - 1)
    throw std::logic_error("crossed-product ranks drifted from the formula");
  return out;
}

AmalgamKTheory amalgam_over_z(int p, int q) {
  if (p < 1 || q < 1)
    throw std::invalid_argument("inclusion indices must be >= 1");
  IntMatrix a = IntMatrix::from_rows({{Int(1)}, {Int(1)}});
  IntMatrix b = IntMatrix::from_rows({{Int(p)}, {Int(q)}});
  if (kernel_rank(a) != 0 || kernel_rank(b) != 0)
    throw std::logic_error("amalgam boundary maps must be injective");
  AmalgamKTheory out;
  out.k.k0 = cokernel(a);
  out.k.k1 = cokernel(b);
  out.k.provenance = {
      "six-term sequence for Z *_Z Z with indices (" + std::to_string(p) +
      "," + std::to_string(q) + "): K0 = coker(1,1)^T, K1 = coker(p,q)^T"};
  out.ledger.group =
      p == 2 && q == 3 ? "C*_r(B_3)" : "Z *_Z Z (" + std::to_string(p) + "," +
                                           std::to_string(q) + ")";
  out.ledger.k0_generators = {"[1] (unit)"};
  if (p == 2 && q == 3)
    out.ledger.k1_generators = {"[s1] (= [s2])"};
  else
    out.ledger.k1_generators = {"free class of coker(" + std::to_string(p) +
                                "," + std::to_string(q) + ")^T"};
  return out;
}

}  // namespace braidk
