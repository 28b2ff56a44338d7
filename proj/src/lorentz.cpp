#include "lskew/lorentz.hpp"

#include "lskew/eigenstructure.hpp"
#include "lskew/energy_momentum.hpp"
#include "lskew/errors.hpp"

#include <cmath>
#include <limits>

namespace lskew {

BoostVelocity::BoostVelocity(const Vec3& w) : w_(w) {
  if (!(w.norm() < 1.0))  // rejects NaN components too
    throw Error(ErrorKind::SuperluminalVelocity, "relative speed must be below 1");
}

double BoostVelocity::gamma() const { return 1.0 / std::sqrt(1.0 - w_.squaredNorm()); }

FourVector boost_observer(const BoostVelocity& w) {
  const double g = w.gamma();
  return FourVector(g, g * w.w()[0], g * w.w()[1], g * w.w()[2]);
}

FieldTransformResult transform_fields(const SkewField& f, const BoostVelocity& w) {
  const FourVector u_prime = boost_observer(w);
  return {f(u_prime), -hodge_dual(f)(u_prime)};
}

std::pair<FourVector, FourVector> par_perp_decompose(const FourVector& v, const BoostVelocity& w) {
  if (w.speed() <= 0) throw Error(ErrorKind::ZeroVelocity, "decomposition needs a direction");
  const FourVector u = standard_observer();
  const FourVector what = embed(Vec3(w.w().normalized()));
  const FourVector parallel = -inner(v, u) * u + inner(v, what) * what;
  return {parallel, v - parallel};
}

double eigenvector_scale_factor(const SkewField& f, const BoostVelocity& w) {
  if (f.scale() <= 0) throw Error(ErrorKind::ZeroField, "zero operator");
  const EigenData d = eigenvalues(f);
  const Vec3 flux = f.e_std().cross(f.b_std());
  const double numerator = -flux.dot(w.w()) + d.lambda_F * f.e_std().dot(w.w()) -
                           d.lambda_Fstar * f.b_std().dot(w.w());
  const double denominator = d.lambda_T + 0.5 * f.scale();
  return w.gamma() * (1.0 + numerator / denominator);
}

double doppler_null(const SkewField& f, const BoostVelocity& w, double tol) {
  if (f.scale() <= 0) throw Error(ErrorKind::ZeroField, "zero operator");
  if (!is_null(f, tol)) throw Error(ErrorKind::NotNull, "Doppler factor needs a null field");
  const Vec3 flux = f.e_std().cross(f.b_std());
  return w.gamma() * (1.0 - w.w().dot(flux) / f.e2());
}

BoostVelocity poynting_eliminating_velocity(const SkewField& f, double tol) {
  if (is_null(f, tol))
    throw Error(ErrorKind::NullField, "the Poynting direction of a null field is lightlike");
  const Vec3 flux = f.e_std().cross(f.b_std());
  return BoostVelocity(Vec3(flux / (lambda_T(f) + 0.5 * f.scale())));
}

FourVector lorentz_force(const SkewField& f, double q, const BoostVelocity& w) {
  return q * f(boost_observer(w));
}

Mat4 exp_map(const SkewField& f) {
  if (is_null(f)) {
    // F^3 = 0: the series terminates.
    const Mat4& m = f.matrix();
    return Mat4::Identity() + m + 0.5 * (m * m);
  }

  const ComplexSkewOp cf = complexify(f);
  const Complex lambda = cf.lambda();
  Complex ch, shl;  // cosh(lambda/2) and sinh(lambda/2)/lambda
  if (std::abs(lambda) < 1e-4) {
    const Complex x = lambda * lambda;
    ch = 1.0 + x / 8.0 + x * x / 384.0 + x * x * x / 46080.0;
    shl = 0.5 + x / 48.0 + x * x / 3840.0 + x * x * x / 645120.0;
  } else {
    ch = std::cosh(0.5 * lambda);
    shl = std::sinh(0.5 * lambda) / lambda;
  }

  const CMat4 half = ch * CMat4::Identity() + shl * cf.matrix();
  const CMat4 full = half * half.conjugate();
  const double residue = full.imag().cwiseAbs().maxCoeff();
  if (residue > 1e-9 * (1.0 + full.real().cwiseAbs().maxCoeff()))
    throw Error(ErrorKind::BadArgument, "exponential lost realness beyond tolerance");
  return full.real();
}

}  // namespace lskew
