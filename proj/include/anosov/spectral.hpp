#pragma once

#include <vector>

#include "anosov/matrix.hpp"

namespace anosov {

// Eigenvalue magnitudes in non-increasing order, 1-based accessors.
struct SpectrumMag {
  std::vector<double> mags;

  int dim() const { return static_cast<int>(mags.size()); }
  double lambda(int k) const;              // k-th largest magnitude, 1-based
  double log_lambda(int k) const;
  double gap(int k) const;                 // log(lambda_k / lambda_{k+1})
};

// Relative tie threshold: magnitudes within this of each other are treated as
// equal when gaps and strictness are judged.
inline constexpr double kEigenTieRel = 1e-10;

// When enabled (the test binaries turn it on), every spectrum computation
// verifies that the product of the magnitudes matches |det| to relative 1e-9.
void set_spectrum_consistency_checks(bool on);

// Magnitudes of the eigenvalues of an invertible matrix, via a dense general
// eigensolver. Exactly-zero entries are honored first: the matrix is permuted
// to block triangular form (strongly connected components of the sparsity
// digraph) and each diagonal block is balanced and solved on its own, which
// keeps absolute errors proportional to the block norms instead of the full
// matrix norm. Throws NumericError for singular input or non-convergence.
SpectrumMag eigen_magnitudes(const Mat& a);
SpectrumMag eigen_magnitudes(const CMat& a);

// Variant for callers that run two one-sided solves and keep from each side
// only the magnitudes at or above 1 (Representation::word_spectrum). Skips
// the determinant gate, the positivity check and the product check, because
// on stiff words the half of the spectrum a side is going to discard may
// underflow all the way to zero without invalidating the half it keeps.
SpectrumMag eigen_magnitudes_lenient(const CMat& a);

// |det A|.
double abs_det(const CMat& a);

// | |det A| - 1 | <= tol.
bool sl_star_check(const Mat& a, double tol = 1e-8);

// Max of | |lambda| - 1 | over the eigenvalues (0 for a weakly unipotent
// matrix; representation-level sampling lives with the suspension builder).
double weak_unipotent_deviation(const Mat& a);
bool weak_unipotent_check(const Mat& a, double tol = 1e-8);

// Inverse transpose.
Mat contragredient(const Mat& a);

// Frobenius norm of Omega A Omega^{-1} - A^{-T}.
double g_omega_residual(const Mat& a, const Mat& omega);

// Translation length in the symmetric space of SL*_d: the Euclidean norm of
// the vector of eigenvalue-magnitude logarithms.
double symspace_length(const Mat& a);
double symspace_length(const SpectrumMag& s);

}  // namespace anosov
