#include "anosov/representation.hpp"

#include <algorithm>
#include <cmath>

#include "anosov/errors.hpp"

namespace anosov {

Representation::Representation(GroupPresentation P, std::vector<Mat> images)
    : pres_(std::move(P)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != pres_.rank())
    throw ValidationError("representation: need one image per generator");
  if (images_.empty()) throw ValidationError("representation: no generators");
  dim_ = images_[0].dim();
  field_ = Field::real;
  for (const Mat& g : images_) {
    if (g.m.rows() != g.m.cols() || g.dim() != dim_)
      throw ValidationError("representation: generator images must be square, same size");
    if (!g.m.allFinite()) throw ValidationError("representation: non-finite image entries");
    if (g.field == Field::complex_field) field_ = Field::complex_field;
    if (!(abs_det(g.m) > 1e-250))
      throw ValidationError("representation: singular generator image");
  }
  inverses_.reserve(images_.size());
  for (const Mat& g : images_)
    inverses_.push_back(g.m.partialPivLu().solve(CMat::Identity(dim_, dim_)));
}

CMat Representation::eval(const Word& w) const {
  CMat acc = CMat::Identity(dim_, dim_);
  for (const Letter& l : w.letters()) {
    if (l.gen >= pres_.rank())
      throw ValidationError("representation: word generator out of range");
    acc = acc * (l.sign > 0 ? images_[l.gen].m : inverses_[l.gen]);
  }
  return acc;
}

SpectrumMag Representation::word_spectrum(const Word& w) const {
  // Each side only contributes its magnitudes at or above 1, so an underflowed
  // tail on one side is harmless as long as the other side covers it. The
  // merged result is re-checked below.
  SpectrumMag fwd = eigen_magnitudes_lenient(eval(w));
  SpectrumMag bwd = eigen_magnitudes_lenient(eval(w.inverse()));
  if (bwd.dim() != fwd.dim())
    throw NumericError("word_spectrum: forward and inverse dimensions disagree");
  const int d = fwd.dim();
  SpectrumMag out;
  out.mags.resize(d);
  for (int i = 0; i < d; ++i) {
    double f = fwd.mags[i];
    out.mags[i] = (f >= 1.0) ? f : 1.0 / bwd.mags[d - 1 - i];
  }
  std::sort(out.mags.begin(), out.mags.end(), std::greater<double>());
  for (double m : out.mags)
    if (!(m > 0.0) || !std::isfinite(m))
      throw NumericError("word_spectrum: spectrum out of double range");
  return out;
}

ValidationReport rep_validate(const Representation& rho, double tol) {
  ValidationReport rep;
  rep.ok = true;
  for (int g = 0; g < rho.presentation().rank(); ++g) {
    double dev = std::abs(abs_det(rho.image(g).m) - 1.0);
    rep.max_det_deviation = std::max(rep.max_det_deviation, dev);
    if (dev > tol) {
      rep.ok = false;
      rep.problems.push_back("generator " + rho.presentation().generator_name(g) +
                             " is not unimodular");
    }
  }
  for (const Word& r : rho.presentation().relators()) {
    CMat img = rho.eval(r);
    double res = frobenius(img - CMat::Identity(rho.dim(), rho.dim()));
    rep.max_relator_residual = std::max(rep.max_relator_residual, res);
    if (res > tol) {
      rep.ok = false;
      rep.problems.push_back("relator " + r.render() + " does not map to the identity");
    }
  }
  return rep;
}

double symmetric_residual(const Representation& rho, int k, const BallIndex& ball) {
  if (k < 1 || k > rho.dim()) throw ValidationError("symmetric_residual: k out of range");
  double worst = 0.0;
  for (const BallEntry& e : ball.entries) {
    SpectrumMag sf = rho.word_spectrum(e.word);
    SpectrumMag sb = rho.word_spectrum(e.word.inverse());
    worst = std::max(worst, std::abs(sf.log_lambda(k) - sb.log_lambda(k)));
  }
  return worst;
}

double symmetric_residual(const Representation& rho, int k, int radius) {
  BallOptions opts;
  opts.dedup = false;
  return symmetric_residual(rho, k, enumerate_ball(rho.presentation(), radius, opts));
}

}  // namespace anosov
