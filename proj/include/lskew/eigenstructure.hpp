#pragma once

#include "lskew/minkowski.hpp"
#include "lskew/skew_field.hpp"

#include <array>
#include <utility>

namespace lskew {

/// Closed-form eigenvalue data of a skew field.
///
/// Conventions: lambda_F >= 0 always; lambda_Fstar carries the sign forced by
/// lambda_F * lambda_Fstar = -E.B, and is taken >= 0 when lambda_F vanishes;
/// lambda_cF is the principal square root of (E^2-B^2) + 2i(E.B), defined up
/// to sign (the sign ambiguity is exactly the parity phenomenon measured by
/// the topology module).
struct EigenData {
  double lambda_F = 0;
  double lambda_Fstar = 0;
  Complex lambda_cF{0, 0};
  double lambda_T = 0;
};

EigenData eigenvalues(const SkewField& f);

/// True when lambda_T <= tol * (E^2 + B^2 + eps): the radiative case.
bool is_null(const SkewField& f, double tol = kNullFieldTol);

/// Coefficients c[0..4] (ascending powers) of the characteristic polynomial
/// lambda^4 - (E^2-B^2) lambda^2 - (E.B)^2.
std::array<double, 5> char_poly(const SkewField& f);

/// The distinguished null eigenvectors
///   s       = 2[(lambda_T + (E^2+B^2)/2) u + ExB + lambda_F E - lambda_Fstar B]
///   s_minus = the same with the signs of lambda_F and lambda_Fstar flipped.
/// Both are null; for non-null F they are independent eigenvectors of F for
/// +-lambda_F. Throws ZeroField for the zero operator.
struct PrincipalNullPair {
  FourVector s;
  FourVector s_minus;
};

PrincipalNullPair principal_null_pair(const SkewField& f);

/// Null (radiative) case only: the single eigendirection F^2 e0 = T e0, which
/// spans the image of T. Throws NotNull for non-null fields, ZeroField for
/// the zero operator.
FourVector null_eigendirection(const SkewField& f, double tol = kNullFieldTol);

/// A spanning pair of the (sign * lambda_cF)-eigenspace of cF, obtained as the
/// image of sign * lambda_cF I + cF under pivoted orthogonalization. Every
/// vector of the plane is complex-null. Throws ZeroField for the zero operator.
std::pair<ComplexFourVector, ComplexFourVector> complex_eigenplane(const SkewField& f, int sign);

/// det(alpha I + cF) = (alpha^2 - lambda_cF^2)^2. Nonzero exactly when alpha
/// avoids the eigenvalues of cF; since eigenvectors of cF are null, a
/// vanishing determinant can only send null probes v to zero, which is the
/// kernel statement the probe argument is checked against.
Complex psi_v_determinant(const SkewField& f, Complex alpha, const FourVector& v);

}  // namespace lskew
