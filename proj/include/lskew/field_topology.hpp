#pragma once

#include "lskew/minkowski.hpp"
#include "lskew/skew_field.hpp"

#include <span>
#include <variant>
#include <vector>

namespace lskew {

struct FieldConfig;

/// Coulomb field E = q (r - r0)/|r - r0|^3, B = 0; singular at r0.
struct PointCharge {
  double charge = 0;
  Vec3 position = Vec3::Zero();
};

/// Constant E and B everywhere.
struct UniformField {
  Vec3 E = Vec3::Zero();
  Vec3 B = Vec3::Zero();
};

/// A null field everywhere: E = a cos(k.r + phase) ehat1, B the same along
/// ehat2, with ehat1 and ehat2 orthonormal, orthogonal to k and
/// ehat1 x ehat2 = khat. The wavenumber is |axis|.
struct PlaneWaveNull {
  double amplitude = 0;
  Vec3 axis = Vec3::UnitZ();
  double phase = 0;
};

/// Componentwise sum of the member configurations.
struct Superposition {
  std::vector<FieldConfig> terms;
};

/// A static, point-indexed family of skew fields on the t = 0 slice.
struct FieldConfig {
  std::variant<PointCharge, UniformField, PlaneWaveNull, Superposition> node;
};

/// The field at a point. Throws SingularPoint at a charge location.
SkewField eval_config(const FieldConfig& config, const Vec3& point);

/// The complex invariant (E^2 - B^2) + 2i (E.B) = lambda_cF^2.
Complex psi(const SkewField& f);

enum class RegionClass { Singular, NullLocus, M1 };
const char* to_string(RegionClass c);

/// Singular at charge locations; NullLocus when |psi| <= tol (E^2 + B^2)
/// (which also captures vanishing fields); M1 otherwise.
RegionClass region_classify(const FieldConfig& config, const Vec3& point,
                            double tol = kDefaultTol);

/// Circle of given radius around center in the plane orthogonal to normal,
/// traversed right-handedly about the normal.
struct Circle {
  Vec3 center = Vec3::Zero();
  Vec3 normal = Vec3::UnitZ();
  double radius = 1;
};

/// Closed polygonal loop through the listed points (implicitly closed),
/// parametrized by arc length.
struct Polyline {
  std::vector<Vec3> points;
};

/// A closed sampled curve in the t = 0 slice.
struct LoopSpec {
  std::variant<Circle, Polyline> shape;
  int samples = 720;
};

/// Validates radius/point-count/sample-count invariants; throws BadArgument.
void validate(const LoopSpec& loop);

/// The loop point at parameter t in [0, 1).
Vec3 loop_point(const LoopSpec& loop, double t);

enum class Parity { Even, Odd };
const char* to_string(Parity p);

/// Winding of psi along a loop: the sum of principal-branch phase increments
/// divided by 2 pi. Segments with an increment above pi/2 are bisected (up to
/// 12 levels), which certifies the integer is sampling-independent.
struct WindingReport {
  int winding = 0;
  Parity parity = Parity::Even;
  double min_abs_psi = 0;
  int samples_used = 0;
  bool refined = false;
};

/// Throws NullLocusCrossing when a sample (or refinement) lands on the null
/// locus, RefinementExhausted past the bisection depth, SingularPoint if the
/// loop hits a charge.
WindingReport winding(const FieldConfig& config, const LoopSpec& loop,
                      double tol = kDefaultTol);

/// Continues lambda(t) = sqrt(psi(t)) along the loop, choosing at each step
/// the square root closer to the previous value. Even when the continued
/// value closes up, Odd when it returns negated. Always equals the winding
/// parity; the two are computed from one refined trace and cross-checked.
Parity eigenvalue_continuation(const FieldConfig& config, const LoopSpec& loop,
                               double tol = kDefaultTol);

/// gcd of the absolute windings over the supplied loops (gcd over zeros is 0):
/// a lower-bound witness of the configuration degree. Nonnegative.
int degree(const FieldConfig& config, std::span<const LoopSpec> loops,
           double tol = kDefaultTol);

}  // namespace lskew
