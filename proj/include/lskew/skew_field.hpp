#pragma once

#include "lskew/minkowski.hpp"

#include <array>
#include <span>
#include <utility>

namespace lskew {

/// The (x B) operator: (cross_op(B)) v = v x B. Its sign convention assumes
/// the oriented basis with e1 x e2 = e3.
Mat3 cross_op(const Vec3& b);
CMat3 cross_op(const CVec3& b);

/// Orientation of the volume form. Flipping it negates the Hodge dual, which
/// negates the observed magnetic field and swaps the complexification with
/// its conjugate. All derived quantities (duals, eigenvalues, tensors) are
/// computed for the operator itself, i.e. in the standard orientation.
enum class Orientation { Standard, Flipped };

/// A metric-skew-symmetric operator on the tangent space, stored through the
/// electric/magnetic pair seen by the standard observer together with its
/// cached 4x4 matrix
///
///     F = | 0   E^T |
///         | E   x B |
///
/// acting on column vectors ordered (t, x, y, z).
class SkewField {
 public:
  SkewField() : SkewField(Vec3::Zero(), Vec3::Zero()) {}
  SkewField(const Vec3& e, const Vec3& b, Orientation o = Orientation::Standard);

  /// Fields as observed in the declared orientation (round-trips construction).
  Vec3 E() const { return e_; }
  Vec3 B() const { return flipped_ ? Vec3(-b_) : b_; }
  Orientation orientation() const { return flipped_ ? Orientation::Flipped : Orientation::Standard; }

  const Mat4& matrix() const { return m_; }
  FourVector operator()(const FourVector& v) const { return FourVector(Vec4(m_ * v.c)); }
  ComplexFourVector operator()(const ComplexFourVector& v) const {
    return ComplexFourVector(CVec4(m_.cast<Complex>() * v.c));
  }

  /// Scalar invariants of the operator (standard orientation).
  double e2() const { return e_.squaredNorm(); }
  double b2() const { return b_.squaredNorm(); }
  double e_dot_b() const { return e_.dot(b_); }
  /// Scale E^2 + B^2 used by relative tolerances.
  double scale() const { return e2() + b2(); }

  /// Standard-orientation fields, used internally by derived modules.
  const Vec3& e_std() const { return e_; }
  const Vec3& b_std() const { return b_; }

  SkewField operator+(const SkewField& o) const;
  SkewField operator-(const SkewField& o) const;
  SkewField operator-() const;
  SkewField operator*(double s) const;

 private:
  Vec3 e_;
  Vec3 b_;
  bool flipped_ = false;
  Mat4 m_;
};

inline SkewField operator*(double s, const SkewField& f) { return f * s; }

inline SkewField from_fields(const Vec3& e, const Vec3& b,
                             Orientation o = Orientation::Standard) {
  return SkewField(e, b, o);
}

inline std::pair<Vec3, Vec3> extract_fields(const SkewField& f) { return {f.E(), f.B()}; }

/// Hodge dual: E* = -B, B* = E (in the field's own orientation); F** = -F.
SkewField hodge_dual(const SkewField& f);

/// Duality rotation cos(theta) F + sin(theta) F*.
SkewField duality_rotate(const SkewField& f, double theta);

/// FG - GF, returned through its own field pair
///   E = -E_f x B_g - B_f x E_g,   B = E_f x E_g - B_f x B_g.
SkewField commutator(const SkewField& f, const SkewField& g);

/// An operator alpha I + P where the pure part P is the complexification of a
/// skew field:  P = [[0, A^T], [A, x(-iA)]]  (conjugate family: the entrywise
/// conjugate form [[0, A^T], [A, x(+iA)]]).  In either family P^2 = (A.A) I.
class ComplexSkewOp {
 public:
  ComplexSkewOp() : ComplexSkewOp(Complex(0, 0), CVec3::Zero(), false) {}
  ComplexSkewOp(Complex alpha, const CVec3& a, bool conjugate_family);

  static ComplexSkewOp scalar(Complex alpha) { return ComplexSkewOp(alpha, CVec3::Zero(), false); }

  Complex alpha() const { return alpha_; }
  /// The complex field vector of the pure part (E + iB for a complexified
  /// field, E - iB for the conjugate-constructed variant).
  const CVec3& field_vector() const { return a_; }
  bool conjugate_family() const { return conj_; }

  const CMat4& matrix() const { return m_; }
  ComplexFourVector operator()(const ComplexFourVector& v) const {
    return ComplexFourVector(CVec4(m_ * v.c));
  }

  /// A.A (bilinear, not Hermitian), the scalar with P^2 = (A.A) I.
  Complex a_dot_a() const { return a_.cwiseProduct(a_).sum(); }
  /// Principal square root of A.A (argument in (-pi/2, pi/2]).
  Complex lambda() const;

  ComplexSkewOp operator*(Complex s) const;
  ComplexSkewOp operator+(const ComplexSkewOp& o) const;  // requires same family

 private:
  Complex alpha_;
  CVec3 a_;
  bool conj_;
  CMat4 m_;
};

inline ComplexSkewOp operator*(Complex s, const ComplexSkewOp& op) { return op * s; }

/// cF = F - i F* (flag off) or its conjugate cbarF = F + i F* (flag on).
/// A field constructed in the flipped orientation swaps the two.
ComplexSkewOp complexify(const SkewField& f, bool conjugate = false);

/// The general complex block operator [[0, A^T], [A, x C]]. It squares to a
/// multiple of the identity exactly when C = +-iA.
CMat4 complex_block_op(const CVec3& a, const CVec3& c);

/// The three complexified unit electric fields along x, y, z. They satisfy
/// the Pauli relations: sigma_i^2 = I, {sigma_i, sigma_j} = 2 delta_ij I,
/// [sigma_x, sigma_y] = 2i sigma_z. With conjugate = true, the commuting
/// conjugate triple (whose xy product is -i sigma_z-bar) is returned.
std::array<ComplexSkewOp, 3> pauli_basis(bool conjugate = false);

/// Dimension of the complex linear span of all products of the generators of
/// word length <= max_word_length (the identity included), computed as the
/// numeric rank of the Gram matrix of the flattened matrices. Rank tolerance:
/// 1e-8 relative to the largest eigenvalue of the Gram matrix.
int algebra_span_dim(std::span<const ComplexSkewOp> generators, int max_word_length);

}  // namespace lskew
