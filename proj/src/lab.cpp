#include "anosov/lab.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <sstream>

#include "anosov/errors.hpp"
#include "anosov/parallel.hpp"
#include "anosov/spectral.hpp"

namespace anosov {

namespace {

constexpr double kCharacterVisibleTol = 1e-12;
constexpr double kSymmetricPrecheckTol = 1e-6;
constexpr int kSymmetricPrecheckRadius = 4;

Verdict classify(double margin, double band) {
  if (margin > band) return Verdict::inside;
  if (margin < -band) return Verdict::outside;
  return Verdict::indeterminate;
}

// The generic route leans on lambda_k(zeta(w^{-1})) = lambda_k(zeta(w));
// refuse sources that visibly break it. The fuchsian route satisfies it
// exactly (a 2x2 unimodular matrix and its inverse share |lambda_1|).
void require_symmetric(const DomainSource& src, int k, int radius) {
  if (src.is_fuchsian()) return;
  int r = std::min(kSymmetricPrecheckRadius, radius);
  double res = symmetric_residual(src.zeta(), k, r);
  if (res > kSymmetricPrecheckTol) {
    std::ostringstream os;
    os << "domain source: zeta is not symmetric at level " << k << " (residual "
       << res << "); use a fuchsian source or a symmetric representation";
    throw ValidationError(os.str());
  }
}

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

Fraction threshold_fraction(int p, int q, int k) {
  return Fraction{static_cast<std::int64_t>(p) + q,
                  static_cast<std::int64_t>(p) * q * (q - 2 * k + 1)};
}

// a < b by cross multiplication; inputs stay far below the int64 range.
bool fraction_less(const Fraction& a, const Fraction& b) {
  return a.num * b.den < b.num * a.den;
}

CriterionValue criterion_from_values(const BallIndex& ball,
                                     const std::vector<double>& vals,
                                     const RealCharacter& phi) {
  if (phi.is_zero())
    throw ValidationError("criterion: character is identically zero");
  CriterionValue out;
  out.value = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < ball.entries.size(); ++i) {
    const BallEntry& e = ball.entries[i];
    if (e.trans_len < 1 || e.word_len < 1) continue;
    double u = std::abs(phi.eval(e.word));
    if (u <= kCharacterVisibleTol) continue;
    double r = vals[i] / u;
    ++out.used;
    if (r < out.value) {
      out.value = r;
      out.witness = e.word.render();
    }
  }
  if (out.used == 0)
    throw ValidationError("criterion: character vanishes on every sampled class");
  return out;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::inside: return "inside";
    case Verdict::outside: return "outside";
    case Verdict::indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

DomainSource DomainSource::generic(Representation zeta) {
  if (zeta.dim() < 2)
    throw ValidationError("domain source: zeta must have dimension at least 2");
  return DomainSource(std::move(zeta));
}

DomainSource DomainSource::fuchsian(ComposedFuchsian cf) {
  if (cf.base.dim() != 2)
    throw ValidationError("domain source: fuchsian base must be 2-dimensional");
  if (cf.composed.dim() != cf.q || cf.q < 2)
    throw ValidationError("domain source: composed dimension must equal q >= 2");
  DomainSource src(std::move(cf.composed));
  src.base_ = std::move(cf.base);
  return src;
}

void DomainSource::validate_k(int k) const {
  if (k < 1 || 2 * k > q()) {
    std::ostringstream os;
    os << "level k = " << k << " out of range 1.." << q() / 2;
    throw ValidationError(os.str());
  }
}

double DomainSource::threshold(int p, int k) const {
  if (p < 1) throw ValidationError("threshold: p must be at least 1");
  validate_k(k);
  const double pq = static_cast<double>(p) * q();
  if (is_fuchsian()) return (p + q()) / (pq * (q() - 2 * k + 1));
  return (p + q()) / pq;
}

double DomainSource::route_value(const Word& w, int k) const {
  validate_k(k);
  if (is_fuchsian()) return base_->word_spectrum(w).log_lambda(1);
  return zeta_.word_spectrum(w).log_lambda(k);
}

double DomainSource::zeta_log_lambda(const Word& w, int k) const {
  validate_k(k);
  if (is_fuchsian())
    return (q() - 2 * k + 1) * base_->word_spectrum(w).log_lambda(1);
  return zeta_.word_spectrum(w).log_lambda(k);
}

std::vector<double> route_values(const DomainSource& src, int k,
                                 const BallIndex& ball, int threads) {
  src.validate_k(k);
  std::vector<double> vals(ball.entries.size(), 0.0);
  parallel_for(ball.entries.size(), threads, [&](std::size_t i) {
    vals[i] = src.route_value(ball.entries[i].word, k);
  });
  return vals;
}

std::vector<double> zeta_log_lambda_values(const DomainSource& src, int k,
                                           const BallIndex& ball, int threads) {
  src.validate_k(k);
  std::vector<double> vals(ball.entries.size(), 0.0);
  parallel_for(ball.entries.size(), threads, [&](std::size_t i) {
    vals[i] = src.zeta_log_lambda(ball.entries[i].word, k);
  });
  return vals;
}

GapSeries gap_series(const Representation& rho, int k, const BallIndex& ball,
                     int threads) {
  if (k < 1 || k >= rho.dim())
    throw ValidationError("gap series: k must lie in 1..dim-1");
  std::vector<std::size_t> usable;
  for (std::size_t i = 0; i < ball.entries.size(); ++i)
    if (ball.entries[i].trans_len >= 1 && ball.entries[i].word_len >= 1)
      usable.push_back(i);

  GapSeries out;
  out.k = k;
  out.radius = ball.radius;
  out.points.resize(usable.size());
  parallel_for(usable.size(), threads, [&](std::size_t j) {
    const BallEntry& e = ball.entries[usable[j]];
    SpectrumMag s = rho.word_spectrum(e.word);
    out.points[j] = GapPoint{e.trans_len, s.gap(k), e.word.render()};
  });
  return out;
}

SlopeFit growth_slope(const GapSeries& series, double cutoff_fraction) {
  if (series.points.empty())
    throw ValidationError("growth slope: empty gap series");
  if (!(cutoff_fraction >= 0.0 && cutoff_fraction <= 1.0))
    throw ValidationError("growth slope: cutoff fraction must lie in [0,1]");
  const double cutoff = cutoff_fraction * series.radius;
  SlopeFit fit;
  fit.a = std::numeric_limits<double>::infinity();
  for (const GapPoint& pt : series.points) {
    if (pt.norm < cutoff) continue;
    double slope = pt.gap / pt.norm;
    ++fit.used;
    if (slope < fit.a) {
      fit.a = slope;
      fit.witness = pt.word;
    }
  }
  if (fit.used == 0)
    throw ValidationError("growth slope: no points past the cutoff");
  double worst = 0.0;
  for (const GapPoint& pt : series.points)
    worst = std::max(worst, fit.a * pt.norm - pt.gap);
  fit.b = std::max(0.0, worst);
  return fit;
}

SkEstimate s_k_estimate(const DomainSource& src, int k, const BallIndex& ball,
                        int threads) {
  src.validate_k(k);
  const double cutoff = std::max(2.0, ball.radius / 2.0);
  std::vector<double> vals = zeta_log_lambda_values(src, k, ball, threads);
  SkEstimate out;
  out.value = std::numeric_limits<double>::infinity();
  out.min_norm = static_cast<int>(std::ceil(cutoff));
  for (std::size_t i = 0; i < ball.entries.size(); ++i) {
    const BallEntry& e = ball.entries[i];
    if (e.trans_len < cutoff || e.trans_len < 1) continue;
    double r = vals[i] / e.trans_len;
    ++out.used;
    if (r < out.value) {
      out.value = r;
      out.witness = e.word.render();
    }
  }
  if (out.used == 0)
    throw ValidationError("slope estimate: ball radius too small for the cutoff");
  return out;
}

CriterionValue criterion_inf(const DomainSource& src, int k, const RealCharacter& phi,
                             const BallIndex& ball, int threads) {
  src.validate_k(k);
  if (phi.rank() != src.presentation().rank())
    throw ValidationError("criterion: character rank does not match the group");
  character_validate(src.presentation(), phi);
  std::vector<double> vals = route_values(src, k, ball, threads);
  return criterion_from_values(ball, vals, phi);
}

DomainEstimate membership(const DomainSource& src, int p, int k,
                          const RealCharacter& phi, const BallIndex& ball,
                          double band, int threads) {
  require_symmetric(src, k, ball.radius);
  CriterionValue c = criterion_inf(src, k, phi, ball, threads);
  DomainEstimate out;
  out.p = p;
  out.q = src.q();
  out.k = k;
  out.radius = ball.radius;
  out.fuchsian_route = src.is_fuchsian();
  out.criterion = c.value;
  out.threshold = src.threshold(p, k);
  out.margin = c.value - out.threshold;
  out.verdict = classify(out.margin, band);
  out.witness = c.witness;
  return out;
}

SliceResult slice_domain(const DomainSource& src, int p, int k,
                         const RealCharacter& psi1, const RealCharacter& psi2,
                         int n_angles, const BallIndex& ball, int threads) {
  src.validate_k(k);
  if (p < 1) throw ValidationError("slice: p must be at least 1");
  if (n_angles < 1) throw ValidationError("slice: need at least one angle");
  const int rank = src.presentation().rank();
  if (psi1.rank() != rank || psi2.rank() != rank)
    throw ValidationError("slice: character rank does not match the group");
  character_validate(src.presentation(), psi1);
  character_validate(src.presentation(), psi2);
  require_symmetric(src, k, ball.radius);

  std::vector<double> vals = route_values(src, k, ball, threads);
  std::vector<std::size_t> usable;
  std::vector<double> u1, u2;
  for (std::size_t i = 0; i < ball.entries.size(); ++i) {
    const BallEntry& e = ball.entries[i];
    if (e.trans_len < 1 || e.word_len < 1) continue;
    usable.push_back(i);
    u1.push_back(psi1.eval(e.word));
    u2.push_back(psi2.eval(e.word));
  }

  const double thr = src.threshold(p, k);
  SliceResult out;
  out.p = p;
  out.q = src.q();
  out.k = k;
  out.radius = ball.radius;
  out.fuchsian_route = src.is_fuchsian();
  out.rows.resize(n_angles);
  const double two_pi = 6.283185307179586476925286766559;
  for (int j = 0; j < n_angles; ++j) {
    double theta = two_pi * j / n_angles;
    double cs = std::cos(theta), sn = std::sin(theta);
    double cmin = std::numeric_limits<double>::infinity();
    bool seen = false;
    for (std::size_t t = 0; t < usable.size(); ++t) {
      double u = std::abs(cs * u1[t] + sn * u2[t]);
      if (u <= kCharacterVisibleTol) continue;
      seen = true;
      cmin = std::min(cmin, vals[usable[t]] / u);
    }
    SliceAngle row;
    row.theta = theta;
    row.degenerate = !seen;
    row.radius = seen ? cmin / thr : std::numeric_limits<double>::infinity();
    out.rows[j] = row;
  }
  return out;
}

BoundsReport ball_bounds_check(const DomainSource& src, int p, int k,
                               const BallIndex& ball, int directions, unsigned seed,
                               double band, double inner_factor, double outer_factor,
                               int threads) {
  src.validate_k(k);
  if (p < 1) throw ValidationError("bounds: p must be at least 1");
  if (directions < 1) throw ValidationError("bounds: need at least one direction");
  if (!(inner_factor > 0.0 && inner_factor < 1.0))
    throw ValidationError("bounds: inner factor must lie in (0,1)");
  if (!(outer_factor > 1.0))
    throw ValidationError("bounds: outer factor must exceed 1");
  require_symmetric(src, k, ball.radius);

  const int rank = src.presentation().rank();
  const double scale = static_cast<double>(p) * src.q() / (p + src.q());

  SkEstimate sk = s_k_estimate(src, k, ball, threads);
  if (!(sk.value > 0.0))
    throw ValidationError("bounds: slope estimate is not positive, domain looks empty");

  double gen_max = 0.0;
  for (int g = 0; g < rank; ++g) {
    Word w(std::vector<Letter>{Letter(g, +1)});
    gen_max = std::max(gen_max, src.zeta_log_lambda(w, k));
    gen_max = std::max(gen_max, src.zeta_log_lambda(w.inverse(), k));
  }

  BoundsReport rep;
  rep.s_k = sk.value;
  rep.r_in = scale * sk.value;
  rep.r_out = scale * gen_max;
  rep.inner_factor = inner_factor;
  rep.outer_factor = outer_factor;

  std::vector<double> vals = route_values(src, k, ball, threads);
  const double thr = src.threshold(p, k);

  std::mt19937 rng(seed);
  auto unit_direction = [&]() {
    for (;;) {
      std::vector<double> dir(rank);
      double mx = 0.0;
      for (int g = 0; g < rank; ++g) {
        double u = rng() * (1.0 / 4294967296.0);
        dir[g] = 2.0 * u - 1.0;
        mx = std::max(mx, std::abs(dir[g]));
      }
      if (mx < 1e-9) continue;
      for (double& v : dir) v /= mx;
      return dir;
    }
  };

  rep.all_ok = true;
  rep.rows.reserve(directions);
  for (int i = 0; i < directions; ++i) {
    std::vector<double> dir = unit_direction();
    BoundsRow row;
    row.direction = dir;

    std::vector<double> inner(rank), outer(rank);
    for (int g = 0; g < rank; ++g) {
      inner[g] = dir[g] * inner_factor * rep.r_in;
      outer[g] = dir[g] * outer_factor * rep.r_out;
    }
    CriterionValue ci = criterion_from_values(ball, vals, RealCharacter(inner));
    CriterionValue co = criterion_from_values(ball, vals, RealCharacter(outer));
    row.inner = classify(ci.value - thr, band);
    row.outer = classify(co.value - thr, band);
    row.ok = row.inner == Verdict::inside && row.outer == Verdict::outside;
    rep.all_ok = rep.all_ok && row.ok;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

NestingReport nesting_check(const Representation& base, int pmax, int qmax,
                            const BallIndex& ball, int rays, int threads) {
  if (base.dim() != 2)
    throw ValidationError("nesting: base representation must be 2-dimensional");
  if (pmax < 1 || qmax < 2)
    throw ValidationError("nesting: need pmax >= 1 and qmax >= 2");
  if (rays > 0 && base.presentation().rank() < 2)
    throw ValidationError("nesting: ray sampling needs rank at least 2");

  NestingReport rep;
  auto admissible = [](int q, int k) { return k >= 1 && 2 * k <= q; };

  // Exact monotonicity of the membership thresholds in each index.
  std::vector<std::array<int, 3>> pqk;
  for (int p = 1; p <= pmax; ++p)
    for (int q = 2; q <= qmax; ++q)
      for (int k = 1; admissible(q, k); ++k) pqk.push_back({p, q, k});

  auto record = [&](const char* what, int p1, int q1, int k1, int p2, int q2, int k2) {
    std::ostringstream os;
    os << what << ": (" << p1 << "," << q1 << "," << k1 << ") vs (" << p2 << ","
       << q2 << "," << k2 << ")";
    rep.violations.push_back(os.str());
  };

  for (const auto& [p, q, k] : pqk) {
    Fraction f = threshold_fraction(p, q, k);
    if (p + 1 <= pmax) {
      ++rep.comparisons;
      if (!fraction_less(threshold_fraction(p + 1, q, k), f))
        record("threshold not decreasing in p", p, q, k, p + 1, q, k);
    }
    if (q + 1 <= qmax && admissible(q + 1, k)) {
      ++rep.comparisons;
      if (!fraction_less(threshold_fraction(p, q + 1, k), f))
        record("threshold not decreasing in q", p, q, k, p, q + 1, k);
    }
    if (admissible(q, k + 1)) {
      ++rep.comparisons;
      if (!fraction_less(f, threshold_fraction(p, q, k + 1)))
        record("threshold not increasing in k", p, q, k, p, q, k + 1);
    }
  }
  rep.thresholds_ok = rep.violations.empty();

  // Boundary radii along rays must order inversely to the thresholds. The
  // radius along u is c(u)/threshold with c(u) = inf log lambda_1 / |u|, the
  // same constant for every (p, q, k), so this exercises the floating-point
  // path against the exact one.
  std::size_t exact_violations = rep.violations.size();
  if (rays > 0) {
    std::vector<double> vals(ball.entries.size(), 0.0);
    parallel_for(ball.entries.size(), threads, [&](std::size_t i) {
      vals[i] = base.word_spectrum(ball.entries[i].word).log_lambda(1);
    });
    const int rank = base.presentation().rank();
    const double two_pi = 6.283185307179586476925286766559;
    for (int r = 0; r < rays; ++r) {
      double theta = two_pi * r / rays;
      std::vector<double> u(rank, 0.0);
      u[0] = std::cos(theta);
      u[1] = std::sin(theta);
      CriterionValue c = criterion_from_values(ball, vals, RealCharacter(u));
      auto radius = [&](int p, int q, int k) {
        Fraction f = threshold_fraction(p, q, k);
        return c.value * static_cast<double>(f.den) / static_cast<double>(f.num);
      };
      for (const auto& [p, q, k] : pqk) {
        double r0 = radius(p, q, k);
        if (p + 1 <= pmax) {
          ++rep.ray_checks;
          if (!(radius(p + 1, q, k) > r0))
            record("radius not increasing in p", p, q, k, p + 1, q, k);
        }
        if (q + 1 <= qmax && admissible(q + 1, k)) {
          ++rep.ray_checks;
          if (!(radius(p, q + 1, k) > r0))
            record("radius not increasing in q", p, q, k, p, q + 1, k);
        }
        if (admissible(q, k + 1)) {
          ++rep.ray_checks;
          if (!(radius(p, q, k + 1) < r0))
            record("radius not decreasing in k", p, q, k, p, q, k + 1);
        }
      }
    }
  }
  rep.radii_ok = rep.violations.size() == exact_violations;
  return rep;
}

SweepResult deformation_sweep(const ComposedFuchsian& cf, const RealCharacter& phi,
                              const std::vector<double>& t_grid, const BallIndex& ball,
                              double band, int threads) {
  if (t_grid.empty()) throw ValidationError("sweep: empty parameter grid");
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(t_grid[i] >= 0.0))
      throw ValidationError("sweep: parameters must be nonnegative");
    if (i > 0 && !(t_grid[i] > t_grid[i - 1]))
      throw ValidationError("sweep: parameters must be strictly increasing");
  }

  DomainSource src = DomainSource::fuchsian(cf);
  const int q = src.q();
  if (phi.rank() != src.presentation().rank())
    throw ValidationError("sweep: character rank does not match the group");
  character_validate(src.presentation(), phi);

  std::vector<double> vals = route_values(src, 1, ball, threads);
  CriterionValue c = criterion_from_values(ball, vals, phi);

  SweepResult out;
  out.q = q;
  out.d = q + 1;
  out.c = c.value;
  for (int k = 1; 2 * k <= q; ++k)
    out.transitions.push_back(boundary_formula(1, q, k, c.value));

  for (double t : t_grid) {
    for (int k = 1; 2 * k <= q; ++k) {
      SweepRow row;
      row.t = t;
      row.k = k;
      row.threshold = src.threshold(1, k);
      if (t == 0.0) {
        row.margin = std::numeric_limits<double>::infinity();
        row.verdict = Verdict::inside;
      } else {
        row.margin = c.value / t - row.threshold;
        row.verdict = classify(row.margin, band);
      }
      out.rows.push_back(row);
    }
  }

  // Along increasing t the verdict at each level may only move
  // inside -> indeterminate -> outside.
  out.pattern_consistent = true;
  for (int k = 1; 2 * k <= q; ++k) {
    int stage = 0;
    for (const SweepRow& row : out.rows) {
      if (row.k != k) continue;
      int s = row.verdict == Verdict::inside ? 0
              : row.verdict == Verdict::indeterminate ? 1 : 2;
      if (s < stage) out.pattern_consistent = false;
      stage = std::max(stage, s);
    }
  }
  return out;
}

double boundary_formula(int p, int q, int k, double c) {
  if (p < 1) throw ValidationError("boundary: p must be at least 1");
  if (q < 2) throw ValidationError("boundary: q must be at least 2");
  if (k < 1 || 2 * k > q) throw ValidationError("boundary: k out of range 1..q/2");
  if (!(c > 0.0)) throw ValidationError("boundary: criterion constant must be positive");
  return c * static_cast<double>(p) * q * (q - 2 * k + 1) / (p + q);
}

RealCharacter intersection_character(const GroupPresentation& P) {
  if (P.kind() != PresentationKind::surface)
    throw ValidationError("intersection character: surface presentation required");
  std::vector<double> v(P.rank(), 0.0);
  v[0] = 1.0;
  return RealCharacter(v);
}

}  // namespace anosov
