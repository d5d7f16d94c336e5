#include "anosov/factory.hpp"

#include <cmath>
#include <vector>

#include "anosov/errors.hpp"

namespace anosov {

namespace {

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// std::pow(complex, 0) routes through log and yields NaN for a zero base;
// plain repeated multiplication also keeps zero entries exactly zero.
Cplx ipow(Cplx base, int e) {
  Cplx r(1.0, 0.0);
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

Eigen::Matrix2d rotation(double t) {
  Eigen::Matrix2d r;
  r << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
  return r;
}

}  // namespace

Mat sym_power(const Mat& a, int q) {
  if (a.dim() != 2) throw ValidationError("sym_power: base matrix must be 2x2");
  if (q < 2 || q > 32) throw ValidationError("sym_power: q must lie in [2, 32]");
  const int n = q - 1;
  const Cplx av = a.m(0, 0), bv = a.m(0, 1), cv = a.m(1, 0), dv = a.m(1, 1);

  // Column j is (a x + c y)^(n-j) (b x + d y)^j expanded in x^(n-i) y^i.
  CMat m = CMat::Zero(q, q);
  for (int j = 0; j < q; ++j) {
    std::vector<Cplx> p1(n - j + 1), p2(j + 1);
    for (int t = 0; t <= n - j; ++t)
      p1[t] = binom(n - j, t) * ipow(av, n - j - t) * ipow(cv, t);
    for (int t = 0; t <= j; ++t)
      p2[t] = binom(j, t) * ipow(bv, j - t) * ipow(dv, t);
    for (int u = 0; u <= n - j; ++u)
      for (int v = 0; v <= j; ++v) m(u + v, j) += p1[u] * p2[v];
  }
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) {
      if (i != j) m(i, j) *= std::sqrt(binom(n, j) / binom(n, i));
    }
  }
  return Mat(std::move(m), a.field);
}

Representation sym_power_rep(const Representation& base, int q) {
  std::vector<Mat> images;
  images.reserve(base.presentation().rank());
  for (const Mat& g : base.images()) images.push_back(sym_power(g, q));
  return Representation(base.presentation(), std::move(images));
}

Representation schottky_rep(int rank, double mu, double tilt) {
  if (rank < 1) throw ValidationError("schottky_rep: rank must be >= 1");
  if (!(mu > 1.0)) throw ValidationError("schottky_rep: multiplier must exceed 1");
  Eigen::Matrix2d d;
  d << mu, 0.0, 0.0, 1.0 / mu;
  std::vector<Mat> images;
  for (int i = 0; i < rank; ++i) {
    Eigen::Matrix2d r = rotation(i * tilt);
    images.push_back(Mat::real(r * d * r.transpose()));
  }
  return Representation(GroupPresentation::free_group(rank), std::move(images));
}

Representation genus2_rep() {
  const double tr = 2.0 + 2.0 * std::sqrt(2.0);        // octagon side-pairing trace
  const double mu = (tr + std::sqrt(tr * tr - 4.0)) / 2.0;
  Eigen::Matrix2d d;
  d << mu, 0.0, 0.0, 1.0 / mu;
  Eigen::Matrix2d a1 = d;
  Eigen::Matrix2d r = rotation(M_PI / 4.0);
  Eigen::Matrix2d b1 = r * d * r.transpose();

  Eigen::Matrix2d k = a1 * b1 * a1.inverse() * b1.inverse();
  // K is hyperbolic (tr < -2 here); diagonalize over R and pick the unit-det
  // eigenvector matrix. S swaps the two eigenlines, conjugating K to K^{-1}.
  Eigen::EigenSolver<Eigen::Matrix2d> es(k);
  Eigen::Matrix2d p;
  p.col(0) = es.eigenvectors().col(0).real();
  p.col(1) = es.eigenvectors().col(1).real();
  p /= std::sqrt(std::abs(p.determinant()));
  if (p.determinant() < 0) p.col(1) *= -1.0;
  Eigen::Matrix2d j;
  j << 0.0, 1.0, -1.0, 0.0;
  Eigen::Matrix2d s = p * j * p.inverse();

  Eigen::Matrix2d a2 = s * a1 * s.inverse();
  Eigen::Matrix2d b2 = s * b1 * s.inverse();

  // Presentation order: alphas first (a, b), betas second (c, d), so the
  // relator [a,c][b,d] pairs a1 with b1 and a2 with b2.
  std::vector<Mat> images{Mat::real(a1), Mat::real(a2), Mat::real(b1), Mat::real(b2)};
  return Representation(GroupPresentation::surface(2), std::move(images));
}

ComposedFuchsian compose_fuchsian(const Representation& base, int q) {
  if (base.dim() != 2) throw ValidationError("compose_fuchsian: base must be 2-dimensional");
  return ComposedFuchsian{base, q, sym_power_rep(base, q)};
}

}  // namespace anosov
