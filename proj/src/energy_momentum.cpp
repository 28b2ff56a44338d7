#include "lskew/energy_momentum.hpp"

#include "lskew/errors.hpp"

#include <cmath>
#include <limits>

namespace lskew {

namespace {

// Deterministic unit vector orthogonal to a unit vector.
Vec3 perp_unit(const Vec3& n) {
  int k = 0;
  n.cwiseAbs().minCoeff(&k);
  return n.cross(Vec3::Unit(k)).normalized();
}

double mink(const Vec4& a, const Vec4& b) {
  return -a[0] * b[0] + a.tail<3>().dot(b.tail<3>());
}

struct TensorShape {
  double symmetry;   // |M^T G - G M| relative
  double trace;      // |tr M| relative
  double square;     // |M^2 - lambda^2 I| relative
  double lambda;
};

TensorShape tensor_shape(const Mat4& m) {
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  TensorShape s{};
  s.symmetry = (m.transpose() * metric() - metric() * m).cwiseAbs().maxCoeff() / scale;
  s.trace = std::abs(m.trace()) / scale;
  const Mat4 m2 = m * m;
  const double lambda2 = m2.trace() / 4.0;
  s.square = (m2 - lambda2 * Mat4::Identity()).cwiseAbs().maxCoeff() / (scale * scale);
  s.lambda = std::sqrt(std::max(lambda2, 0.0));
  return s;
}

// Extracts the (E, B) pair of a matrix already known to be metric-skew.
SkewField skew_from_matrix(const Mat4& m) {
  const Vec3 e = m.col(0).tail<3>();
  const Vec3 b(m(2, 3), m(3, 1), m(1, 2));
  return SkewField(e, b);
}

}  // namespace

EnergyMomentum EnergyMomentum::from_matrix(const Mat4& m, double tol) {
  if (!m.allFinite()) throw Error(ErrorKind::InvalidTensor, "matrix has non-finite entries");
  const TensorShape s = tensor_shape(m);
  if (s.symmetry > tol) throw Error(ErrorKind::InvalidTensor, "matrix is not metric-symmetric");
  if (s.trace > tol) throw Error(ErrorKind::InvalidTensor, "matrix has nonzero trace");
  if (s.square > tol)
    throw Error(ErrorKind::InvalidTensor, "matrix square is not a multiple of the identity");
  return EnergyMomentum(m, s.lambda);
}

EnergyMomentum energy_momentum(const SkewField& f) {
  const Mat4& m = f.matrix();
  const Mat4 m2 = m * m;
  const Mat4 t = m2 - 0.25 * m2.trace() * Mat4::Identity();
  return EnergyMomentum(t, lambda_T(f));
}

FourVector poynting(const SkewField& f) {
  const Vec3 flux = f.e_std().cross(f.b_std());
  return FourVector(0.5 * f.scale(), flux[0], flux[1], flux[2]);
}

double lambda_T(const SkewField& f) {
  return std::hypot(0.5 * (f.e2() - f.b2()), f.e_dot_b());
}

namespace {

// Spanning pairs for the two rank-2 eigenplanes of a tensor with
// T^2 = lambda^2 I, lambda > 0. The +lambda pair is metric-orthonormal with a
// timelike first leg; the -lambda pair is a spacelike orthonormal pair.
InvariantPlanes planes_from_tensor(const Mat4& t, double lambda) {
  const Mat4 phi_plus = lambda * Mat4::Identity() + t;
  const Mat4 phi_minus = -lambda * Mat4::Identity() + t;

  InvariantPlanes planes;

  // Timelike plane. phi_plus e0 = lambda u + T u is timelike whenever
  // <u,Tu> < 0, which holds for every nonzero field.
  Vec4 v0 = phi_plus.col(0);
  v0 /= std::sqrt(-mink(v0, v0));

  // Second leg: the pivot column with the largest Euclidean residual after
  // removing the v0 direction, then metric-orthogonalized against v0.
  const double col_scale = phi_plus.cwiseAbs().maxCoeff();
  const Vec4 v0_unit_euclid = v0.normalized();
  Vec4 best = Vec4::Zero();
  double best_norm = 0;
  for (int j = 0; j < 4; ++j) {
    const Vec4 r = phi_plus.col(j) - v0_unit_euclid.dot(phi_plus.col(j)) * v0_unit_euclid;
    if (r.norm() > best_norm) {
      best_norm = r.norm();
      best = r;
    }
  }
  if (best_norm <= 1e-8 * col_scale)
    throw Error(ErrorKind::InvalidTensor, "timelike eigenplane is degenerate");
  Vec4 v1 = best + mink(v0, best) * v0;
  v1 /= std::sqrt(mink(v1, v1));  // spacelike in a timelike plane
  planes.pi_plus = {FourVector(v0), FourVector(v1)};

  // Spacelike plane: plain pivoted Gram-Schmidt; the metric is positive
  // definite there.
  const double mcol_scale = phi_minus.cwiseAbs().maxCoeff();
  Vec4 p0 = Vec4::Zero();
  double p0_norm = 0;
  for (int j = 0; j < 4; ++j) {
    if (phi_minus.col(j).norm() > p0_norm) {
      p0_norm = phi_minus.col(j).norm();
      p0 = phi_minus.col(j);
    }
  }
  if (p0_norm <= 1e-8 * mcol_scale)
    throw Error(ErrorKind::InvalidTensor, "spacelike eigenplane is degenerate");
  p0 /= std::sqrt(mink(p0, p0));
  Vec4 p1 = Vec4::Zero();
  double p1_norm = 0;
  for (int j = 0; j < 4; ++j) {
    const Vec4 r = phi_minus.col(j) - mink(p0, phi_minus.col(j)) * p0;
    if (r.norm() > p1_norm) {
      p1_norm = r.norm();
      p1 = r;
    }
  }
  if (p1_norm <= 1e-8 * mcol_scale)
    throw Error(ErrorKind::InvalidTensor, "spacelike eigenplane is degenerate");
  p1 /= std::sqrt(mink(p1, p1));
  planes.pi_minus = {FourVector(p0), FourVector(p1)};

  return planes;
}

}  // namespace

InvariantPlanes invariant_planes(const SkewField& f, double tol) {
  const double lambda = lambda_T(f);
  if (lambda <= tol * f.scale())
    throw Error(ErrorKind::NullField, "eigenplanes degenerate for a null field");
  return planes_from_tensor(energy_momentum(f).matrix(), lambda);
}

SkewField reconstruct_skew(const EnergyMomentum& q, double tol) {
  const Mat4& m = q.matrix();
  const TensorShape shape = tensor_shape(m);
  if (shape.symmetry > tol || shape.trace > tol || shape.square > tol)
    throw Error(ErrorKind::InvalidTensor, "input violates the tensor invariants");
  if (!(m(0, 0) > 0))
    throw Error(ErrorKind::InvalidTensor, "<u,Qu> must be negative for the standard observer");

  const double scale = m.cwiseAbs().maxCoeff();
  const double lambda = shape.lambda;

  // lambda is recovered as sqrt(tr(Q^2)/4); for a null tensor the trace is
  // pure cancellation noise of order eps * scale^2, so the estimate floats
  // near sqrt(eps) * scale. The branch cut must sit above that floor.
  if (lambda > 1e-6 * scale) {
    // Scale the two null directions of the timelike plane by +-sqrt(2 lambda)
    // and annihilate the spacelike plane.
    const InvariantPlanes planes = planes_from_tensor(m, lambda);
    const Vec4& v0 = planes.pi_plus[0].c;
    const Vec4& v1 = planes.pi_plus[1].c;
    const double lambda_f = std::sqrt(2.0 * lambda);
    const Vec4 s_plus = v0 + v1;
    const Vec4 s_minus = v0 - v1;
    const Mat4 fm = 0.5 * lambda_f *
                    (s_plus * (metric() * (v1 - v0)).transpose() +
                     s_minus * (metric() * (v0 + v1)).transpose());
    return skew_from_matrix(fm);
  }

  // Null branch: Q = -s <s,.> / s_t is determined by s = Q e0 alone. Pick an
  // orthonormal pair ahead of the spatial direction of s and size both fields
  // so that E^2 = s_t and E x B reproduces the flux.
  const Vec4 s = m.col(0);
  const Vec3 flux = s.tail<3>();
  if (flux.norm() <= 0)
    throw Error(ErrorKind::InvalidTensor, "null tensor with vanishing flux direction");
  const Vec3 shat = flux.normalized();
  const Vec3 e1 = perp_unit(shat);
  const Vec3 e2 = shat.cross(e1);
  const double amplitude = std::sqrt(s[0]);
  return SkewField(Vec3(amplitude * e1), Vec3(amplitude * e2));
}

std::optional<double> duality_orbit_check(const SkewField& f, const SkewField& g, double tol) {
  const Mat4& tf = energy_momentum(f).matrix();
  const Mat4& tg = energy_momentum(g).matrix();
  const double t_scale = std::max({1.0, tf.cwiseAbs().maxCoeff(), tg.cwiseAbs().maxCoeff()});
  if ((tf - tg).cwiseAbs().maxCoeff() > tol * t_scale) return std::nullopt;

  // A duality rotation acts on A = E + iB as multiplication by e^{i theta};
  // read theta off the largest component and verify on the whole field.
  const CVec3 af = f.e_std().cast<Complex>() + Complex(0, 1) * f.b_std().cast<Complex>();
  const CVec3 ag = g.e_std().cast<Complex>() + Complex(0, 1) * g.b_std().cast<Complex>();
  int k = 0;
  const double mag = af.cwiseAbs().maxCoeff(&k);

  double theta = 0;
  if (mag > 0) theta = std::arg(ag[k] / af[k]);
  if (theta < 0) theta += 2 * M_PI;

  const SkewField rotated = duality_rotate(f, theta);
  const double f_scale =
      std::max({1.0, std::sqrt(f.scale()), std::sqrt(g.scale())});
  const double mismatch = std::max((rotated.E() - g.E()).cwiseAbs().maxCoeff(),
                                   (rotated.B() - g.B()).cwiseAbs().maxCoeff());
  if (mismatch > tol * f_scale) return std::nullopt;
  return theta;
}

}  // namespace lskew
