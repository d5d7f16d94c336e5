#pragma once

#include "anosov/matrix.hpp"
#include "anosov/representation.hpp"

namespace anosov {

// Irreducible SL(2) -> SL(q) symmetric power: the action on homogeneous
// polynomials of degree q-1 in two variables, written in the binomially
// normalized monomial basis x^{n-i} y^i * sqrt(C(n,i)) (n = q-1), which sends
// orthogonal matrices to orthogonal matrices. Eigenvalue magnitudes obey
// lambda_k(sym_power(A, q)) = lambda_1(A)^(q - 2k + 1).
Mat sym_power(const Mat& a, int q);

// Applies sym_power to every generator image.
Representation sym_power_rep(const Representation& base, int q);

// Rank-n free group in SL(2,R): generator i is diag(mu, 1/mu) conjugated by a
// rotation through i * tilt. The defaults give a strongly hyperbolic pair.
Representation schottky_rep(int rank, double mu = 3.0, double tilt = 0.78539816339744831);

// Genus-2 surface group in SL(2,R): two one-holed tori glued along the
// commutator curve. With K = [rho(a), rho(c)], the second handle is the
// conjugate of the first by an involution-like S with S K S^{-1} = K^{-1},
// so [rho(a),rho(c)][rho(b),rho(d)] = K * K^{-1} = I exactly. All four
// generator images share the trace 2 + 2*sqrt(2) of the regular-octagon
// side pairing.
Representation genus2_rep();

// A 2-dimensional representation together with its symmetric-power composite.
// Domain computations on these can run on the base spectral radius alone.
struct ComposedFuchsian {
  Representation base;      // dim 2
  int q = 2;
  Representation composed;  // dim q
};

ComposedFuchsian compose_fuchsian(const Representation& base, int q);

}  // namespace anosov
