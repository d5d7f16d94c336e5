#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "anosov/ball.hpp"
#include "anosov/character.hpp"
#include "anosov/matrix.hpp"
#include "anosov/representation.hpp"

namespace anosov {

// Weakly unipotent twist block xi (all eigenvalue magnitudes 1).
struct XiSpec {
  enum class Type { identity, signs, rotation, explicit_images };
  Type type = Type::identity;
  std::vector<double> params;  // signs (p=1) or rotation angles (p=2), per generator
  std::vector<Mat> images;     // explicit images, per generator

  static XiSpec identity() { return XiSpec{}; }
  static XiSpec signs(std::vector<double> s) {
    return XiSpec{Type::signs, std::move(s), {}};
  }
  static XiSpec rotation(std::vector<double> angles) {
    return XiSpec{Type::rotation, std::move(angles), {}};
  }
  static XiSpec explicit_images(std::vector<Mat> imgs) {
    return XiSpec{Type::explicit_images, {}, std::move(imgs)};
  }
};

struct KappaSpec {
  enum class Type { zero, coboundary, explicit_table };
  Type type = Type::zero;
  CMat seed;                 // coboundary seed M (p x q)
  std::vector<CMat> blocks;  // explicit per-generator kappa blocks (p x q)

  static KappaSpec zero() { return KappaSpec{}; }
  static KappaSpec coboundary(CMat m) { return KappaSpec{Type::coboundary, std::move(m), {}}; }
  static KappaSpec explicit_table(std::vector<CMat> b) {
    return KappaSpec{Type::explicit_table, CMat(), std::move(b)};
  }
};

struct SuspensionSpec {
  int p = 1;
  int q = 2;
  RealCharacter phi;
  Representation zeta;  // dim q, on the presentation of interest
  XiSpec xi;
  KappaSpec kappa;
};

// A built suspension: the block matrices
//   rho(g) = [ e^{phi(g)/p} xi(g)   kappa(g) ]
//            [        0             e^{-phi(g)/q} zeta(g) ]
// assembled per generator, together with evaluators for the diagonal factors.
class Suspension {
 public:
  Suspension(SuspensionSpec spec, Representation xi_rep, Representation rho);

  const SuspensionSpec& spec() const { return spec_; }
  const Representation& rho() const { return rho_; }
  const Representation& xi_rep() const { return xi_rep_; }
  int p() const { return spec_.p; }
  int q() const { return spec_.q; }
  int dim() const { return spec_.p + spec_.q; }

  CMat upper_factor(const Word& w) const;  // e^{phi(w)/p} xi(w)
  CMat lower_factor(const Word& w) const;  // e^{-phi(w)/q} zeta(w)
  CMat kappa_of(const Word& w) const;      // upper-right block of rho(w)

 private:
  SuspensionSpec spec_;
  Representation xi_rep_;
  Representation rho_;
};

// Validates the pieces (p >= 1, q >= 2, phi vanishes on relators, zeta and xi
// unimodular/weakly unipotent, kappa blocks shaped p x q) and assembles the
// block representation. When relators are present the built map is checked to
// respect them within tol.
Suspension build_suspension(const SuspensionSpec& spec, double tol = 1e-8);

// kappa(g) = M V(g) - U(g) M with U, V the diagonal factors; such tables
// always satisfy the cocycle rule, and the suspension they produce is the
// unipotent conjugate of the xi=identity, kappa=0 reference.
CMat coboundary_kappa(const Suspension& s, const CMat& seed, const Word& g);

// Max over the sampled pairs of || kappa(gh) - U(g) kappa(h) - kappa(g) V(h) ||_F,
// normalized per pair by the largest term norm (clamped below at 1).
double cocycle_residual(const Suspension& s,
                        const std::function<CMat(const Word&)>& kappa,
                        const std::vector<std::pair<Word, Word>>& pairs);

// Deterministic sample of word pairs for cocycle testing.
std::vector<std::pair<Word, Word>> cocycle_sample_pairs(const GroupPresentation& P,
                                                        int count, unsigned seed);

struct GeneralityReport {
  double max_rel_deviation = 0.0;
  std::string witness;
};

// Compares eigenvalue magnitudes of the built suspension against the
// xi=identity, kappa=0 reference over the word ball; the multisets agree for
// every suspension of the same (p, q, phi, zeta).
GeneralityReport generality_check(const Suspension& s, const BallIndex& ball,
                                  int threads = 1);

struct SandwichRow {
  std::string word;
  int norm = 0;
  double phi = 0.0;
  double lam_k = 0.0;
  double lam_qk1 = 0.0;
  double exp_term = 0.0;
  bool pass = false;
  bool strict = false;
};

struct SandwichReport {
  int p = 0, q = 0, k = 0;
  bool symmetric_variant = false;
  bool all_pass = false;
  bool all_strict = false;
  std::string first_violation;  // empty when everything passed
  std::vector<SandwichRow> rows;
};

struct SandwichOptions {
  double tol = 1e-9;         // slack for the non-strict comparisons (log scale)
  double strict_tol = 1e-9;  // margin demanded for strictness (log scale)
};

// Two-sided eigenvalue bounds lambda_{q-k+1}(zeta(w)) <= e^{c phi(w)} <=
// lambda_k(zeta(w)) with c = (p+q)/(pq), for every nontrivial ball word.
SandwichReport sandwich_check(const Representation& zeta, int p, int k,
                              const RealCharacter& phi, const BallIndex& ball,
                              const SandwichOptions& opts = SandwichOptions{},
                              int threads = 1);

// Symmetric variant with |phi|: lambda_{q-k+1} <= e^{-c|phi|} and
// e^{c|phi|} <= lambda_k. Requires zeta symmetric at level k (residual over a
// small ball below 1e-6).
SandwichReport symmetric_sandwich_check(const Representation& zeta, int p, int k,
                                        const RealCharacter& phi, const BallIndex& ball,
                                        const SandwichOptions& opts = SandwichOptions{},
                                        int threads = 1);

struct QieReport {
  bool ok = false;
  double min_margin = 0.0;  // min of len_rho(w) - len_zeta(w)/(2 sqrt(q))
  std::string witness;
};

// Displacement comparison len_rho(w) >= len_zeta(w) / (2 sqrt(q)) - 1e-9 over
// the ball, in the symmetric-space translation length.
QieReport qie_slope_check(const Suspension& s, const BallIndex& ball, int threads = 1);

}  // namespace anosov
