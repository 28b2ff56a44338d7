#pragma once

#include <Eigen/Dense>

#include <complex>

namespace lskew {

using Complex = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;
using Vec4 = Eigen::Vector4d;
using CVec4 = Eigen::Vector4cd;
using Mat3 = Eigen::Matrix3d;
using CMat3 = Eigen::Matrix3cd;
using Mat4 = Eigen::Matrix4d;
using CMat4 = Eigen::Matrix4cd;

/// Global default relative tolerance. The CLI may override it through the
/// LORENTZ_SKEW_TOL environment variable.
inline constexpr double kDefaultTol = 1e-9;

/// Relative threshold below which a field counts as null (radiative).
inline constexpr double kNullFieldTol = 1e-10;

/// The metric diag(-1, 1, 1, 1) on coordinates ordered (t, x, y, z).
const Mat4& metric();

/// A real tangent vector in the fixed orthonormal frame, components (t,x,y,z).
struct FourVector {
  Vec4 c = Vec4::Zero();

  FourVector() = default;
  FourVector(double t, double x, double y, double z) { c << t, x, y, z; }
  explicit FourVector(const Vec4& v) : c(v) {}

  double t() const { return c[0]; }
  double x() const { return c[1]; }
  double y() const { return c[2]; }
  double z() const { return c[3]; }
  Vec3 spatial() const { return c.tail<3>(); }

  /// Euclidean norm of the components, used only for tolerance scaling.
  double frame_norm() const { return c.norm(); }

  FourVector operator+(const FourVector& o) const { return FourVector(Vec4(c + o.c)); }
  FourVector operator-(const FourVector& o) const { return FourVector(Vec4(c - o.c)); }
  FourVector operator-() const { return FourVector(Vec4(-c)); }
  FourVector operator*(double s) const { return FourVector(Vec4(s * c)); }
};

inline FourVector operator*(double s, const FourVector& v) { return v * s; }

/// A vector of the complexified tangent space.
struct ComplexFourVector {
  CVec4 c = CVec4::Zero();

  ComplexFourVector() = default;
  explicit ComplexFourVector(const CVec4& v) : c(v) {}
  ComplexFourVector(const FourVector& re, const FourVector& im)
      : c(re.c.cast<Complex>() + Complex(0, 1) * im.c.cast<Complex>()) {}

  FourVector real() const { return FourVector(Vec4(c.real())); }
  FourVector imag() const { return FourVector(Vec4(c.imag())); }
  double frame_norm() const { return c.norm(); }

  ComplexFourVector operator+(const ComplexFourVector& o) const { return ComplexFourVector(CVec4(c + o.c)); }
  ComplexFourVector operator-(const ComplexFourVector& o) const { return ComplexFourVector(CVec4(c - o.c)); }
  ComplexFourVector operator*(Complex s) const { return ComplexFourVector(CVec4(s * c)); }
};

inline ComplexFourVector operator*(Complex s, const ComplexFourVector& v) { return v * s; }

/// The standard observer u = e0.
inline FourVector standard_observer() { return FourVector(1, 0, 0, 0); }

/// Embeds a rest-space vector of the standard observer as a four-vector with
/// zero time component.
inline FourVector embed(const Vec3& v) { return FourVector(0, v[0], v[1], v[2]); }

/// Lorentz inner product, signature -+++.
double inner(const FourVector& v, const FourVector& w);

/// Complex-bilinear (not Hermitian) extension of the inner product.
Complex complex_inner(const ComplexFourVector& v, const ComplexFourVector& w);

enum class CausalClass { Timelike, Spacelike, Null, Zero };
const char* to_string(CausalClass c);

/// Causal character of v, decided by the sign of <v,v> against the band
/// tol * |v|^2. The zero vector (all components below tol) is its own class.
CausalClass classify(const FourVector& v, double tol = kDefaultTol);

enum class ComplexNullClass { NotNull, DependentNull, SpacelikeOrthonormalPair };
const char* to_string(ComplexNullClass c);

/// Classifies a + ib: it is complex-null iff <a,a> = <b,b> and <a,b> = 0.
/// The null case splits into linearly dependent real null vectors and the
/// generic pair of orthogonal equal-length spacelike vectors.
ComplexNullClass classify_complex_null(const FourVector& a, const FourVector& b,
                                       double tol = kDefaultTol);

/// Euclidean dot product on the standard observer's rest space.
inline double rest_dot(const Vec3& a, const Vec3& b) { return a.dot(b); }

/// Right-handed cross product on the rest space; e1 x e2 = e3.
inline Vec3 rest_cross(const Vec3& a, const Vec3& b) { return a.cross(b); }

/// Cross product in the rest space of an arbitrary unit timelike observer u:
/// the unique vector orthogonal to u, v and w with Omega(u, v, w, result) >= 0
/// and squared length v^2 w^2 - <v,w>^2. Reduces to rest_cross for u = e0.
FourVector observer_cross(const FourVector& u, const FourVector& v, const FourVector& w);

}  // namespace lskew
