#pragma once

#include "lskew/minkowski.hpp"
#include "lskew/skew_field.hpp"

#include <utility>

namespace lskew {

/// A relative 3-velocity in units of c, validated to |w| < 1 on construction.
class BoostVelocity {
 public:
  BoostVelocity() : w_(Vec3::Zero()) {}
  explicit BoostVelocity(const Vec3& w);  // throws SuperluminalVelocity

  const Vec3& w() const { return w_; }
  double speed() const { return w_.norm(); }
  double gamma() const;

 private:
  Vec3 w_;
};

/// The boosted observer u' = gamma (u + w); unit timelike, future pointing.
FourVector boost_observer(const BoostVelocity& w);

/// Fields seen by the boosted observer, as four-vectors in that observer's
/// rest space (no frame rotation is applied): E' = F u', B' = -F* u'.
struct FieldTransformResult {
  FourVector E_prime;
  FourVector B_prime;
};

FieldTransformResult transform_fields(const SkewField& f, const BoostVelocity& w);

/// Splits v into the component in the (u, w) plane and the remainder, which is
/// orthogonal to both u and w. The sum always reconstructs v; the split is the
/// parallel/perpendicular decomposition for vectors orthogonal to u'.
/// Throws ZeroVelocity for w = 0.
std::pair<FourVector, FourVector> par_perp_decompose(const FourVector& v, const BoostVelocity& w);

/// The factor relating the principal eigenvector seen by the boosted observer
/// to the one seen by the standard observer:
///   gamma [1 + (-(ExB).w + lambda_F E.w - lambda_Fstar B.w) / (lambda_T + (E^2+B^2)/2)].
/// Throws ZeroField for the zero operator.
double eigenvector_scale_factor(const SkewField& f, const BoostVelocity& w);

/// Null-field specialization of the scale factor,
///   gamma (1 - w.(ExB)/E^2),
/// which for w parallel to ExB with signed speed w_r is the Doppler ratio
/// sqrt((1-w_r)/(1+w_r)). Throws NotNull for non-null fields.
double doppler_null(const SkewField& f, const BoostVelocity& w, double tol = kNullFieldTol);

/// The boost w = ExB / (lambda_T + (E^2+B^2)/2), which makes the transformed
/// Poynting 3-flux vanish: E' x B' = 0 and (E'^2+B'^2)/2 = lambda_T. Throws
/// NullField for null fields (the Poynting direction is lightlike).
BoostVelocity poynting_eliminating_velocity(const SkewField& f, double tol = kNullFieldTol);

/// Acceleration q F u' of a charge q moving with velocity w; orthogonal to u'.
FourVector lorentz_force(const SkewField& f, double q, const BoostVelocity& w);

/// The isometry e^F through the closed form
///   e^F = (cosh(l/2) I + sinh(l/2)/l cF) (cosh(l/2) I + sinh(l/2)/l cF)^conj,
/// l = lambda_cF. Null fields take the exact polynomial I + F + F^2/2 (F^3 = 0);
/// |l| < 1e-4 switches cosh/sinh(l/2)/l to series to avoid cancellation.
Mat4 exp_map(const SkewField& f);

}  // namespace lskew
