#pragma once

#include "lskew/minkowski.hpp"
#include "lskew/skew_field.hpp"

#include <array>
#include <optional>

namespace lskew {

/// The symmetric traceless operator T = F^2 - (1/4) tr(F^2) I. It squares to
/// lambda^2 I; lambda >= 0 is stored alongside the matrix.
class EnergyMomentum {
 public:
  EnergyMomentum() : m_(Mat4::Zero()), lambda_(0) {}

  /// Validates metric symmetry, tracelessness and Q^2 = lambda^2 I against
  /// the relative tolerance; throws InvalidTensor otherwise.
  static EnergyMomentum from_matrix(const Mat4& m, double tol = kDefaultTol);

  const Mat4& matrix() const { return m_; }
  double lambda() const { return lambda_; }
  FourVector operator()(const FourVector& v) const { return FourVector(Vec4(m_ * v.c)); }

 private:
  friend EnergyMomentum energy_momentum(const SkewField&);
  EnergyMomentum(const Mat4& m, double lambda) : m_(m), lambda_(lambda) {}

  Mat4 m_;
  double lambda_;
};

/// T_F = F^2 - (1/4) tr(F^2) I with lambda from the closed form
/// sqrt(((E^2-B^2)/2)^2 + (E.B)^2).
EnergyMomentum energy_momentum(const SkewField& f);

/// The Poynting four-vector T e0 = (E^2+B^2)/2 e0 + E x B.
FourVector poynting(const SkewField& f);

/// Closed-form eigenvalue of T: sqrt(((E^2-B^2)/2)^2 + (E.B)^2).
double lambda_T(const SkewField& f);

/// Spanning pairs of the two invariant eigenplanes of T.  pi_plus holds a
/// metric-orthonormal (timelike, spacelike) pair for the +lambda plane,
/// pi_minus a spacelike orthonormal pair for the -lambda plane.
struct InvariantPlanes {
  std::array<FourVector, 2> pi_plus;
  std::array<FourVector, 2> pi_minus;
};

/// Extracts the invariant planes by probing lambda I + T and -lambda I + T
/// with the basis vectors and orthonormalizing with pivoted Gram-Schmidt.
/// Throws NullField when lambda_T <= tol * (E^2 + B^2): the eigenstructure
/// degenerates in the null case.
InvariantPlanes invariant_planes(const SkewField& f, double tol = 1e-8);

/// Builds a skew field F with T_F = Q. Non-null branch: F scales the two null
/// directions of the timelike eigenplane by +-sqrt(2 lambda) and kills the
/// spacelike plane. Null branch: E and B are reconstructed from the null
/// vector Q e0. The result is unique only up to duality rotation.
/// Throws InvalidTensor when Q violates the tensor invariants or <u,Qu> >= 0.
SkewField reconstruct_skew(const EnergyMomentum& q, double tol = kDefaultTol);

/// If T_F == T_G within tol, returns the duality angle theta in [0, 2pi) with
/// e^{i theta} F == G within tol; otherwise std::nullopt.
std::optional<double> duality_orbit_check(const SkewField& f, const SkewField& g, double tol);

}  // namespace lskew
