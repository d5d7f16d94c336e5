#pragma once

#include <Eigen/Dense>
#include <complex>

namespace anosov {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using Cplx = std::complex<double>;

enum class Field { real, complex_field };

// Dense square matrix with a field tag. Real-tagged matrices keep exactly
// zero imaginary parts; the tag mostly matters for validation and I/O, the
// numerics run uniformly on the complex storage.
struct Mat {
  CMat m;
  Field field = Field::real;

  Mat() = default;
  Mat(CMat mm, Field f) : m(std::move(mm)), field(f) {}

  static Mat real(const Eigen::MatrixXd& r) {
    return Mat(r.cast<Cplx>(), Field::real);
  }
  static Mat complex(CMat c) { return Mat(std::move(c), Field::complex_field); }
  static Mat identity(int d, Field f = Field::real) {
    return Mat(CMat::Identity(d, d), f);
  }

  int dim() const { return static_cast<int>(m.rows()); }
};

double frobenius(const CMat& a);

}  // namespace anosov
