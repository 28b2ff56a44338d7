#include "lskew/eigenstructure.hpp"

#include "lskew/energy_momentum.hpp"
#include "lskew/errors.hpp"

#include <cassert>
#include <cmath>
#include <limits>

namespace lskew {

EigenData eigenvalues(const SkewField& f) {
  const double e2 = f.e2(), b2 = f.b2(), eb = f.e_dot_b();
  const double half_diff = 0.5 * (e2 - b2);

  // lambda_T^2 = half_diff^2 + eb^2, so whichever of lambda_F^2 =
  // lambda_T + half_diff and lambda_Fstar^2 = lambda_T - half_diff would
  // cancel is recovered from eb^2 over the other; the product with the
  // dominant root then carries no cancellation either. Signs: lambda_F >= 0,
  // the product pinned to -eb, and lambda_Fstar >= 0 when lambda_F is zero.
  EigenData d;
  d.lambda_T = std::hypot(half_diff, eb);
  if (half_diff >= 0) {
    d.lambda_F = std::sqrt(d.lambda_T + half_diff);
    d.lambda_Fstar = d.lambda_F > 0 ? -eb / d.lambda_F : 0.0;
  } else {
    const double fstar_mag = std::sqrt(d.lambda_T - half_diff);
    d.lambda_F = fstar_mag > 0 ? std::abs(eb) / fstar_mag : 0.0;
    d.lambda_Fstar = eb == 0.0 ? fstar_mag : std::copysign(fstar_mag, -eb);
  }
  d.lambda_cF = std::sqrt(Complex(e2 - b2, 2.0 * eb));
  return d;
}

bool is_null(const SkewField& f, double tol) {
  return lambda_T(f) <= tol * (f.scale() + std::numeric_limits<double>::epsilon());
}

std::array<double, 5> char_poly(const SkewField& f) {
  const double eb = f.e_dot_b();
  return {-eb * eb, 0.0, -(f.e2() - f.b2()), 0.0, 1.0};
}

PrincipalNullPair principal_null_pair(const SkewField& f) {
  if (f.scale() <= 0) throw Error(ErrorKind::ZeroField, "zero operator has no principal pair");
  const EigenData d = eigenvalues(f);
  const double time_part = d.lambda_T + 0.5 * f.scale();
  const Vec3 flux = f.e_std().cross(f.b_std());

  const Vec3 s_spatial = flux + d.lambda_F * f.e_std() - d.lambda_Fstar * f.b_std();
  const Vec3 m_spatial = flux - d.lambda_F * f.e_std() + d.lambda_Fstar * f.b_std();
  PrincipalNullPair pair;
  pair.s = FourVector(2 * time_part, 2 * s_spatial[0], 2 * s_spatial[1], 2 * s_spatial[2]);
  pair.s_minus = FourVector(2 * time_part, 2 * m_spatial[0], 2 * m_spatial[1], 2 * m_spatial[2]);
  return pair;
}

FourVector null_eigendirection(const SkewField& f, double tol) {
  if (f.scale() <= 0) throw Error(ErrorKind::ZeroField, "zero operator");
  if (!is_null(f, tol))
    throw Error(ErrorKind::NotNull, "field is not null: the eigendirection is not unique");
  return poynting(f);  // F^2 e0 = T e0
}

std::pair<ComplexFourVector, ComplexFourVector> complex_eigenplane(const SkewField& f, int sign) {
  if (f.scale() <= 0) throw Error(ErrorKind::ZeroField, "zero operator");
  if (sign != 1 && sign != -1) throw Error(ErrorKind::BadArgument, "sign must be +1 or -1");

  const ComplexSkewOp cf = complexify(f);
  const CMat4 phi =
      cf.matrix() + static_cast<double>(sign) * cf.lambda() * CMat4::Identity();

  // The plane is totally null for the bilinear product, so the basis is
  // orthogonalized under the Hermitian one: pivot on the largest column,
  // remove its direction, pivot again.
  const double col_scale = phi.cwiseAbs().maxCoeff();
  Eigen::Index j0 = 0;
  double best = 0;
  for (Eigen::Index j = 0; j < 4; ++j) {
    if (phi.col(j).norm() > best) {
      best = phi.col(j).norm();
      j0 = j;
    }
  }
  const CVec4 q0 = phi.col(j0).normalized();
  CVec4 q1 = CVec4::Zero();
  double q1_norm = 0;
  for (Eigen::Index j = 0; j < 4; ++j) {
    const CVec4 r = phi.col(j) - q0.dot(phi.col(j)) * q0;
    if (r.norm() > q1_norm) {
      q1_norm = r.norm();
      q1 = r;
    }
  }
  if (best <= 1e-8 * col_scale || q1_norm <= 1e-8 * col_scale)
    throw Error(ErrorKind::ZeroField, "eigenplane collapsed below the rank tolerance");
  return {ComplexFourVector(q0), ComplexFourVector(CVec4(q1.normalized()))};
}

Complex psi_v_determinant(const SkewField& f, Complex alpha, const FourVector& v) {
  const CMat4 m = complexify(f).matrix() + alpha * CMat4::Identity();
  const Complex det = m.determinant();
  // A vanishing determinant means alpha hits an eigenvalue of cF, whose
  // eigenvectors are all null: a non-null probe is then never annihilated.
  const CausalClass cls = classify(v);
  if (std::abs(det) <= 1e-12 && (cls == CausalClass::Timelike || cls == CausalClass::Spacelike))
    assert((m * v.c.cast<Complex>()).norm() > 0);
  return det;
}

}  // namespace lskew
