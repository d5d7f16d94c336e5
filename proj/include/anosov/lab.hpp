#pragma once

#include <optional>
#include <string>
#include <vector>

#include "anosov/ball.hpp"
#include "anosov/character.hpp"
#include "anosov/factory.hpp"
#include "anosov/representation.hpp"

namespace anosov {

enum class Verdict { inside, outside, indeterminate };
const char* to_string(Verdict v);

// Half-width of the indeterminacy band around a membership threshold:
// criterion values closer to the threshold than this are not called.
inline constexpr double kDefaultBand = 1e-6;

// Where domain data comes from.
//
//   generic  — a symmetric representation zeta of dimension q; membership of
//              phi compares inf log lambda_k(zeta(w)) / |phi(w)| against
//              (p+q)/(pq).
//   fuchsian — zeta = sym_power(eta, q) for a 2-dimensional eta; membership
//              compares inf log lambda_1(eta(w)) / |phi(w)| against
//              (p+q)/(pq(q-2k+1)).
//
// The two routes describe the same domains but run on different spectra, so
// their agreement on composed representations is a genuine cross-check.
class DomainSource {
 public:
  static DomainSource generic(Representation zeta);
  static DomainSource fuchsian(ComposedFuchsian cf);

  const GroupPresentation& presentation() const { return zeta_.presentation(); }
  const Representation& zeta() const { return zeta_; }
  const Representation* base() const { return base_ ? &*base_ : nullptr; }
  bool is_fuchsian() const { return base_.has_value(); }
  int q() const { return zeta_.dim(); }

  void validate_k(int k) const;  // 1 <= k <= q/2
  double threshold(int p, int k) const;

  // Route-specific criterion numerator for one word.
  double route_value(const Word& w, int k) const;
  // log lambda_k(zeta(w)) on either route (the fuchsian route applies the
  // symmetric-power exponent law to the base spectral radius).
  double zeta_log_lambda(const Word& w, int k) const;

 private:
  explicit DomainSource(Representation zeta) : zeta_(std::move(zeta)) {}
  Representation zeta_;
  std::optional<Representation> base_;
};

// One route value per ball entry, computed in parallel. Outputs are
// bit-identical for every thread count.
std::vector<double> route_values(const DomainSource& src, int k,
                                 const BallIndex& ball, int threads = 1);
std::vector<double> zeta_log_lambda_values(const DomainSource& src, int k,
                                           const BallIndex& ball, int threads = 1);

struct GapPoint {
  int norm = 0;
  double gap = 0.0;
  std::string word;
};

struct GapSeries {
  int k = 1;
  int radius = 0;
  std::vector<GapPoint> points;
};

// log(lambda_k / lambda_{k+1}) of rho(w) for every nontrivial ball entry,
// indexed by the translation length of the class.
GapSeries gap_series(const Representation& rho, int k, const BallIndex& ball,
                     int threads = 1);

struct SlopeFit {
  double a = 0.0;  // slope: min gap/norm over points past the cutoff
  double b = 0.0;  // smallest offset >= 0 with gap >= a*norm - b everywhere
  int used = 0;
  std::string witness;  // point attaining the slope
};

// Linear minorant fit gap >= a*norm - b. Positive `a` on growing balls is the
// numerical signature of the eigenvalue-gap growth the domain theory demands.
SlopeFit growth_slope(const GapSeries& series, double cutoff_fraction = 0.5);

struct SkEstimate {
  double value = 0.0;
  int used = 0;
  int min_norm = 0;  // cutoff actually applied
  std::string witness;
};

// inf log lambda_k(zeta(w)) / ||w|| over classes with ||w|| >= max(2, R/2).
// Short classes are excluded so the ratio reflects the stable growth rate.
SkEstimate s_k_estimate(const DomainSource& src, int k, const BallIndex& ball,
                        int threads = 1);

struct CriterionValue {
  double value = 0.0;
  int used = 0;
  std::string witness;
};

// inf over sampled classes (with |phi| above 1e-12) of route value / |phi|.
CriterionValue criterion_inf(const DomainSource& src, int k, const RealCharacter& phi,
                             const BallIndex& ball, int threads = 1);

struct DomainEstimate {
  int p = 0, q = 0, k = 0, radius = 0;
  bool fuchsian_route = false;
  double criterion = 0.0;
  double threshold = 0.0;
  double margin = 0.0;  // criterion - threshold
  Verdict verdict = Verdict::indeterminate;
  std::string witness;
};

// Membership of phi in the convexity domain at (p, k). `outside` verdicts are
// certified by the witness class; `inside` means not refuted by radius R and
// clear of the band.
DomainEstimate membership(const DomainSource& src, int p, int k,
                          const RealCharacter& phi, const BallIndex& ball,
                          double band = kDefaultBand, int threads = 1);

struct SliceAngle {
  double theta = 0.0;
  double radius = 0.0;
  bool degenerate = false;  // direction invisible on every sampled class
};

struct SliceResult {
  int p = 0, q = 0, k = 0, radius = 0;
  bool fuchsian_route = false;
  std::vector<SliceAngle> rows;
};

// Polar boundary estimate of the domain slice spanned by psi1, psi2: for each
// angle the largest radius whose character stays inside. Dependent spans are
// allowed; angles with no visible class are marked degenerate and get an
// infinite radius.
SliceResult slice_domain(const DomainSource& src, int p, int k,
                         const RealCharacter& psi1, const RealCharacter& psi2,
                         int n_angles, const BallIndex& ball, int threads = 1);

struct BoundsRow {
  std::vector<double> direction;  // sup-norm-1 coefficients per generator
  Verdict inner = Verdict::indeterminate;
  Verdict outer = Verdict::indeterminate;
  bool ok = false;
};

struct BoundsReport {
  double s_k = 0.0;
  double r_in = 0.0;   // pq/(p+q) * s_k estimate
  double r_out = 0.0;  // pq/(p+q) * max over generators of log lambda_k
  double inner_factor = 0.0;
  double outer_factor = 0.0;
  bool all_ok = false;
  std::vector<BoundsRow> rows;
};

// Samples random sup-norm directions; characters scaled to inner_factor*r_in
// must test inside and those scaled to outer_factor*r_out must test outside.
BoundsReport ball_bounds_check(const DomainSource& src, int p, int k,
                               const BallIndex& ball, int directions, unsigned seed,
                               double band = kDefaultBand, double inner_factor = 0.95,
                               double outer_factor = 1.05, int threads = 1);

struct NestingReport {
  bool thresholds_ok = false;  // exact integer comparisons of the thresholds
  int comparisons = 0;
  bool radii_ok = false;  // sampled boundary radii ordered the same way
  int ray_checks = 0;
  std::vector<std::string> violations;
};

// Domains grow strictly with p and q and shrink strictly with k. Thresholds
// (p+q)/(pq(q-2k+1)) are compared by int64 cross-multiplication (exact);
// boundary radii along rays in the span of the first two coordinate
// characters must order the same way.
NestingReport nesting_check(const Representation& base, int pmax, int qmax,
                            const BallIndex& ball, int rays = 8, int threads = 1);

struct SweepRow {
  double t = 0.0;
  int k = 1;
  double threshold = 0.0;
  double margin = 0.0;
  Verdict verdict = Verdict::indeterminate;
};

struct SweepResult {
  int d = 0, p = 1, q = 0;
  double c = 0.0;  // inf log lambda_1(eta(w)) / |phi(w)| over the ball
  std::vector<double> transitions;  // per k = 1..q/2, the predicted exit |t|
  std::vector<SweepRow> rows;
  bool pattern_consistent = false;  // per k: inside, then maybe indeterminate, then outside
};

// One-parameter family t -> suspension of t*phi at p = 1, q = d-1: membership
// at every level k across the grid, with predicted transition parameters.
SweepResult deformation_sweep(const ComposedFuchsian& cf, const RealCharacter& phi,
                              const std::vector<double>& t_grid, const BallIndex& ball,
                              double band = kDefaultBand, int threads = 1);

// Exit parameter along a ray with criterion constant c (fuchsian route):
// |t| = c * pq(q-2k+1) / (p+q).
double boundary_formula(int p, int q, int k, double c);

// The character counting signed occurrences of the first generator. On a
// surface presentation this is the algebraic intersection number with the
// curve dual to alpha_1.
RealCharacter intersection_character(const GroupPresentation& P);

}  // namespace anosov
