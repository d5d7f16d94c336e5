#include "anosov/suspension.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "anosov/errors.hpp"
#include "anosov/parallel.hpp"
#include "anosov/spectral.hpp"

namespace anosov {

namespace {

constexpr int kWeakUnipotentRadius = 4;
constexpr double kWeakUnipotentTol = 1e-8;
constexpr double kSymmetricPrecheckTol = 1e-6;

Representation materialize_xi(const GroupPresentation& P, int p, const XiSpec& xi) {
  const int rank = P.rank();
  std::vector<Mat> images;
  images.reserve(rank);
  switch (xi.type) {
    case XiSpec::Type::identity: {
      for (int g = 0; g < rank; ++g) images.push_back(Mat::identity(p, Field::real));
      break;
    }
    case XiSpec::Type::signs: {
      if (p != 1)
        throw ValidationError("xi signs: requires a 1-dimensional twist block");
      if (static_cast<int>(xi.params.size()) != rank)
        throw ValidationError("xi signs: need one sign per generator");
      for (double s : xi.params) {
        if (std::abs(std::abs(s) - 1.0) > 1e-12)
          throw ValidationError("xi signs: entries must be +1 or -1");
        Eigen::MatrixXd m(1, 1);
        m(0, 0) = (s < 0) ? -1.0 : 1.0;
        images.push_back(Mat::real(m));
      }
      break;
    }
    case XiSpec::Type::rotation: {
      if (p != 2)
        throw ValidationError("xi rotation: requires a 2-dimensional twist block");
      if (static_cast<int>(xi.params.size()) != rank)
        throw ValidationError("xi rotation: need one angle per generator");
      for (double a : xi.params) {
        Eigen::MatrixXd m(2, 2);
        m << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
        images.push_back(Mat::real(m));
      }
      break;
    }
    case XiSpec::Type::explicit_images: {
      if (static_cast<int>(xi.images.size()) != rank)
        throw ValidationError("xi images: need one matrix per generator");
      for (const Mat& m : xi.images) {
        if (m.dim() != p)
          throw ValidationError("xi images: dimension must match the twist block");
      }
      images = xi.images;
      break;
    }
  }
  return Representation(P, images);
}

// Explicitly supplied twists are only trusted after sampling eigenvalue
// magnitudes over a small ball; the structured constructors are unimodular by
// construction and skip this.
void check_weak_unipotence(const Representation& xi_rep) {
  BallOptions opts;
  opts.dedup = true;
  GroupPresentation free_p = GroupPresentation::free_group(xi_rep.presentation().rank());
  BallIndex ball = enumerate_ball(free_p, kWeakUnipotentRadius, opts);
  for (const BallEntry& e : ball.entries) {
    double worst =
        weak_unipotent_deviation(Mat(xi_rep.eval(e.word), xi_rep.field()));
    if (worst > kWeakUnipotentTol) {
      std::ostringstream os;
      os << "xi images: not weakly unipotent, |mag - 1| = " << worst << " at word "
         << e.word.render();
      throw ValidationError(os.str());
    }
  }
}

}  // namespace

Suspension::Suspension(SuspensionSpec spec, Representation xi_rep, Representation rho)
    : spec_(std::move(spec)), xi_rep_(std::move(xi_rep)), rho_(std::move(rho)) {}

CMat Suspension::upper_factor(const Word& w) const {
  return std::exp(spec_.phi.eval(w) / spec_.p) * xi_rep_.eval(w);
}

CMat Suspension::lower_factor(const Word& w) const {
  return std::exp(-spec_.phi.eval(w) / spec_.q) * spec_.zeta.eval(w);
}

CMat Suspension::kappa_of(const Word& w) const {
  return rho_.eval(w).topRightCorner(spec_.p, spec_.q);
}

Suspension build_suspension(const SuspensionSpec& spec, double tol) {
  if (spec.p < 1) throw ValidationError("suspension: p must be at least 1");
  if (spec.q < 2) throw ValidationError("suspension: q must be at least 2");
  const GroupPresentation& P = spec.zeta.presentation();
  if (spec.zeta.dim() != spec.q)
    throw ValidationError("suspension: zeta dimension must equal q");
  if (spec.phi.rank() != P.rank())
    throw ValidationError("suspension: character rank does not match the group");
  character_validate(P, spec.phi);

  ValidationReport zr = rep_validate(spec.zeta, tol);
  if (!zr.ok)
    throw ValidationError("suspension: zeta fails validation: " + zr.problems.front());

  Representation xi_rep = materialize_xi(P, spec.p, spec.xi);
  if (spec.xi.type == XiSpec::Type::explicit_images) check_weak_unipotence(xi_rep);

  const int rank = P.rank();
  const int p = spec.p, q = spec.q, d = p + q;

  if (spec.kappa.type == KappaSpec::Type::coboundary) {
    if (spec.kappa.seed.rows() != p || spec.kappa.seed.cols() != q)
      throw ValidationError("suspension: coboundary seed must be p x q");
    if (!spec.kappa.seed.allFinite())
      throw ValidationError("suspension: coboundary seed has non-finite entries");
  }
  if (spec.kappa.type == KappaSpec::Type::explicit_table) {
    if (static_cast<int>(spec.kappa.blocks.size()) != rank)
      throw ValidationError("suspension: need one kappa block per generator");
    for (const CMat& b : spec.kappa.blocks) {
      if (b.rows() != p || b.cols() != q)
        throw ValidationError("suspension: kappa blocks must be p x q");
      if (!b.allFinite())
        throw ValidationError("suspension: kappa block has non-finite entries");
    }
  }

  std::vector<Mat> images;
  images.reserve(rank);
  for (int g = 0; g < rank; ++g) {
    double ph = spec.phi.value(g);
    CMat U = std::exp(ph / p) * xi_rep.image(g).m;
    CMat V = std::exp(-ph / q) * spec.zeta.image(g).m;
    CMat K;
    switch (spec.kappa.type) {
      case KappaSpec::Type::zero:
        K = CMat::Zero(p, q);
        break;
      case KappaSpec::Type::coboundary:
        K = spec.kappa.seed * V - U * spec.kappa.seed;
        break;
      case KappaSpec::Type::explicit_table:
        K = spec.kappa.blocks[g];
        break;
    }
    CMat block = CMat::Zero(d, d);
    block.topLeftCorner(p, p) = U;
    block.topRightCorner(p, q) = K;
    block.bottomRightCorner(q, q) = V;
    bool real_block = block.imag().cwiseAbs().maxCoeff() == 0.0;
    Mat m;
    m.m = block;
    m.field = real_block ? Field::real : Field::complex_field;
    images.push_back(std::move(m));
  }

  Representation rho(P, images);
  ValidationReport rr = rep_validate(rho, tol);
  if (!rr.ok)
    throw ValidationError("suspension: assembled map fails validation: " +
                          rr.problems.front());
  return Suspension(spec, std::move(xi_rep), std::move(rho));
}

CMat coboundary_kappa(const Suspension& s, const CMat& seed, const Word& g) {
  if (seed.rows() != s.p() || seed.cols() != s.q())
    throw ValidationError("coboundary seed must be p x q");
  return seed * s.lower_factor(g) - s.upper_factor(g) * seed;
}

double cocycle_residual(const Suspension& s,
                        const std::function<CMat(const Word&)>& kappa,
                        const std::vector<std::pair<Word, Word>>& pairs) {
  double worst = 0.0;
  for (const auto& [g, h] : pairs) {
    Word gh = free_reduce(g.concat(h));
    CMat lhs = kappa(gh);
    CMat a = s.upper_factor(g) * kappa(h);
    CMat b = kappa(g) * s.lower_factor(h);
    // relative to the term sizes; absolute residuals scale with the word norms
    double scale = std::max({1.0, lhs.norm(), a.norm(), b.norm()});
    worst = std::max(worst, (lhs - a - b).norm() / scale);
  }
  return worst;
}

std::vector<std::pair<Word, Word>> cocycle_sample_pairs(const GroupPresentation& P,
                                                        int count, unsigned seed) {
  if (count < 1) throw ValidationError("pair sample count must be positive");
  std::mt19937 rng(seed);
  const int rank = P.rank();
  auto draw_word = [&]() {
    for (;;) {
      int len = 1 + static_cast<int>(rng() % 5);
      Word w;
      for (int i = 0; i < len; ++i) {
        unsigned code = rng() % (2u * rank);
        w.push_back(Letter(static_cast<int>(code / 2), (code % 2) ? -1 : +1));
      }
      w = free_reduce(w);
      if (!w.empty()) return w;
    }
  };
  std::vector<std::pair<Word, Word>> pairs;
  pairs.reserve(count);
  for (int i = 0; i < count; ++i) {
    Word a = draw_word();
    Word b = draw_word();
    pairs.emplace_back(std::move(a), std::move(b));
  }
  return pairs;
}

GeneralityReport generality_check(const Suspension& s, const BallIndex& ball,
                                  int threads) {
  SuspensionSpec ref_spec = s.spec();
  ref_spec.xi = XiSpec::identity();
  ref_spec.kappa = KappaSpec::zero();
  Suspension ref = build_suspension(ref_spec);

  const std::size_t n = ball.entries.size();
  std::vector<double> dev(n, 0.0);
  parallel_for(n, threads, [&](std::size_t i) {
    const Word& w = ball.entries[i].word;
    SpectrumMag a = s.rho().word_spectrum(w);
    SpectrumMag b = ref.rho().word_spectrum(w);
    double worst = 0.0;
    for (std::size_t j = 0; j < a.mags.size(); ++j)
      worst = std::max(worst, std::abs(a.mags[j] - b.mags[j]) / b.mags[j]);
    dev[i] = worst;
  });

  GeneralityReport out;
  for (std::size_t i = 0; i < n; ++i) {
    if (dev[i] > out.max_rel_deviation) {
      out.max_rel_deviation = dev[i];
      out.witness = ball.entries[i].word.render();
    }
  }
  if (out.witness.empty() && n > 0) out.witness = ball.entries.front().word.render();
  return out;
}

namespace {

SandwichReport run_sandwich(const Representation& zeta, int p, int k,
                            const RealCharacter& phi, const BallIndex& ball,
                            const SandwichOptions& opts, bool symmetric, int threads) {
  const int q = zeta.dim();
  if (p < 1) throw ValidationError("sandwich: p must be at least 1");
  if (q < 2) throw ValidationError("sandwich: q must be at least 2");
  if (k < 1 || 2 * k > q + 1)
    throw ValidationError("sandwich: k out of range for the eigenvalue pair");
  if (phi.rank() != zeta.presentation().rank())
    throw ValidationError("sandwich: character rank does not match the group");
  character_validate(zeta.presentation(), phi);

  if (symmetric) {
    int r = std::min(4, ball.radius);
    double res = symmetric_residual(zeta, k, r);
    if (res > kSymmetricPrecheckTol) {
      std::ostringstream os;
      os << "symmetric sandwich: zeta is not symmetric at level " << k
         << " (residual " << res << ")";
      throw ValidationError(os.str());
    }
  }

  std::vector<std::size_t> usable;
  usable.reserve(ball.entries.size());
  for (std::size_t i = 0; i < ball.entries.size(); ++i)
    if (ball.entries[i].trans_len >= 1 && ball.entries[i].word_len >= 1)
      usable.push_back(i);

  const double c = static_cast<double>(p + q) / (static_cast<double>(p) * q);
  SandwichReport rep;
  rep.p = p;
  rep.q = q;
  rep.k = k;
  rep.symmetric_variant = symmetric;
  rep.rows.resize(usable.size());

  parallel_for(usable.size(), threads, [&](std::size_t j) {
    const BallEntry& e = ball.entries[usable[j]];
    SpectrumMag spec = zeta.word_spectrum(e.word);
    double ph = phi.eval(e.word);
    double lam_k = spec.lambda(k);
    double lam_qk1 = spec.lambda(q - k + 1);
    SandwichRow row;
    row.word = e.word.render();
    row.norm = e.trans_len;
    row.phi = ph;
    row.lam_k = lam_k;
    row.lam_qk1 = lam_qk1;
    double lo = std::log(lam_qk1);
    double hi = std::log(lam_k);
    if (symmetric) {
      double t = c * std::abs(ph);
      row.exp_term = std::exp(t);
      row.pass = (lo <= -t + opts.tol) && (t <= hi + opts.tol);
      row.strict = (lo < -t - opts.strict_tol) && (t < hi - opts.strict_tol);
    } else {
      double t = c * ph;
      row.exp_term = std::exp(t);
      row.pass = (lo <= t + opts.tol) && (t <= hi + opts.tol);
      row.strict = (lo < t - opts.strict_tol) && (t < hi - opts.strict_tol);
    }
    rep.rows[j] = std::move(row);
  });

  rep.all_pass = true;
  rep.all_strict = true;
  for (const SandwichRow& row : rep.rows) {
    if (!row.pass) {
      rep.all_pass = false;
      if (rep.first_violation.empty()) rep.first_violation = row.word;
    }
    if (!row.strict) rep.all_strict = false;
  }
  if (rep.all_pass && !rep.all_strict) {
    for (const SandwichRow& row : rep.rows)
      if (!row.strict) {
        rep.first_violation = row.word;
        break;
      }
  }
  return rep;
}

}  // namespace

SandwichReport sandwich_check(const Representation& zeta, int p, int k,
                              const RealCharacter& phi, const BallIndex& ball,
                              const SandwichOptions& opts, int threads) {
  return run_sandwich(zeta, p, k, phi, ball, opts, false, threads);
}

SandwichReport symmetric_sandwich_check(const Representation& zeta, int p, int k,
                                        const RealCharacter& phi, const BallIndex& ball,
                                        const SandwichOptions& opts, int threads) {
  return run_sandwich(zeta, p, k, phi, ball, opts, true, threads);
}

QieReport qie_slope_check(const Suspension& s, const BallIndex& ball, int threads) {
  std::vector<std::size_t> usable;
  for (std::size_t i = 0; i < ball.entries.size(); ++i)
    if (ball.entries[i].trans_len >= 1 && ball.entries[i].word_len >= 1)
      usable.push_back(i);

  const double denom = 2.0 * std::sqrt(static_cast<double>(s.q()));
  std::vector<double> margin(usable.size(), 0.0);
  parallel_for(usable.size(), threads, [&](std::size_t j) {
    const Word& w = ball.entries[usable[j]].word;
    double len_rho = symspace_length(s.rho().word_spectrum(w));
    double len_zeta = symspace_length(s.spec().zeta.word_spectrum(w));
    margin[j] = len_rho - len_zeta / denom;
  });

  QieReport out;
  out.min_margin = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < usable.size(); ++j) {
    if (margin[j] < out.min_margin) {
      out.min_margin = margin[j];
      out.witness = ball.entries[usable[j]].word.render();
    }
  }
  out.ok = usable.empty() || out.min_margin >= -1e-9;
  return out;
}

}  // namespace anosov
