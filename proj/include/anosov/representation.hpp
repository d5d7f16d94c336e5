#pragma once

#include <string>
#include <vector>

#include "anosov/ball.hpp"
#include "anosov/matrix.hpp"
#include "anosov/presentation.hpp"
#include "anosov/spectral.hpp"
#include "anosov/words.hpp"

namespace anosov {

// Linear representation given by one matrix per generator. Generator inverses
// are computed once at construction (the generator images are expected to be
// well conditioned; products of them need not be).
class Representation {
 public:
  Representation() = default;
  Representation(GroupPresentation P, std::vector<Mat> images);

  const GroupPresentation& presentation() const { return pres_; }
  int dim() const { return dim_; }
  Field field() const { return field_; }
  const std::vector<Mat>& images() const { return images_; }
  const Mat& image(int gen) const { return images_.at(gen); }

  CMat eval(const Word& w) const;

  // Eigenvalue magnitudes of the image of w, computed along a merged
  // forward/inverse route: magnitudes >= 1 come from the image of w,
  // magnitudes < 1 as reciprocals from the image of w^{-1}, which is a
  // product of the exactly-inverted generators rather than a matrix inverse.
  // This keeps relative accuracy across the full dynamic range; solving only
  // the forward matrix loses the small magnitudes once the norm is large.
  SpectrumMag word_spectrum(const Word& w) const;

 private:
  GroupPresentation pres_ = GroupPresentation::free_group(1);
  Field field_ = Field::real;
  int dim_ = 0;
  std::vector<Mat> images_;
  std::vector<CMat> inverses_;
};

struct ValidationReport {
  bool ok = false;
  double max_det_deviation = 0.0;    // max | |det| - 1 | over generators
  double max_relator_residual = 0.0; // max Frobenius residual over relators
  std::vector<std::string> problems;
};

// Checks unimodularity of every generator image and, when relators are
// present, that relator images equal the identity within tol.
ValidationReport rep_validate(const Representation& rho, double tol = 1e-8);

// Max over the ball of | log lambda_k(rho(w)) - log lambda_k(rho(w^{-1})) |.
double symmetric_residual(const Representation& rho, int k, const BallIndex& ball);
double symmetric_residual(const Representation& rho, int k, int radius);

}  // namespace anosov
