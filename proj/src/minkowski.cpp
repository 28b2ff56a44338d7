#include "lskew/minkowski.hpp"

namespace lskew {

const Mat4& metric() {
  static const Mat4 g = Vec4(-1, 1, 1, 1).asDiagonal();
  return g;
}

double inner(const FourVector& v, const FourVector& w) {
  return -v.c[0] * w.c[0] + v.c[1] * w.c[1] + v.c[2] * w.c[2] + v.c[3] * w.c[3];
}

Complex complex_inner(const ComplexFourVector& v, const ComplexFourVector& w) {
  return -v.c[0] * w.c[0] + v.c[1] * w.c[1] + v.c[2] * w.c[2] + v.c[3] * w.c[3];
}

const char* to_string(CausalClass c) {
  switch (c) {
    case CausalClass::Timelike: return "Timelike";
    case CausalClass::Spacelike: return "Spacelike";
    case CausalClass::Null: return "Null";
    case CausalClass::Zero: return "Zero";
  }
  return "Unknown";
}

CausalClass classify(const FourVector& v, double tol) {
  const double n2 = v.c.squaredNorm();
  if (v.c.cwiseAbs().maxCoeff() < tol) return CausalClass::Zero;
  const double q = inner(v, v);
  if (q < -tol * n2) return CausalClass::Timelike;
  if (q > tol * n2) return CausalClass::Spacelike;
  return CausalClass::Null;
}

const char* to_string(ComplexNullClass c) {
  switch (c) {
    case ComplexNullClass::NotNull: return "NotNull";
    case ComplexNullClass::DependentNull: return "DependentNull";
    case ComplexNullClass::SpacelikeOrthonormalPair: return "SpacelikeOrthonormalPair";
  }
  return "Unknown";
}

ComplexNullClass classify_complex_null(const FourVector& a, const FourVector& b, double tol) {
  const double scale = a.c.squaredNorm() + b.c.squaredNorm();
  const double band = tol * (scale > 0 ? scale : 1.0);
  if (std::abs(inner(a, a) - inner(b, b)) > band || std::abs(inner(a, b)) > band)
    return ComplexNullClass::NotNull;
  // Null. Dependent null vectors vs an orthogonal equal-length spacelike pair:
  // the two cases are separated by whether a (hence b) is itself null.
  const bool a_null = std::abs(inner(a, a)) <= band;
  if (a_null) return ComplexNullClass::DependentNull;
  return ComplexNullClass::SpacelikeOrthonormalPair;
}

FourVector observer_cross(const FourVector& u, const FourVector& v, const FourVector& w) {
  // x_d = eps_{abcd} u^a v^b w^c with eps_{0123} = +1, index raised with the
  // metric afterwards. Expanded through 3x3 minors of the rows (u, v, w).
  Eigen::Matrix<double, 3, 4> rows;
  rows.row(0) = u.c.transpose();
  rows.row(1) = v.c.transpose();
  rows.row(2) = w.c.transpose();
  auto minor = [&rows](int c0, int c1, int c2) {
    Mat3 m;
    m.col(0) = rows.col(c0);
    m.col(1) = rows.col(c1);
    m.col(2) = rows.col(c2);
    return m.determinant();
  };
  const double x0 = -minor(1, 2, 3);
  const double x1 = minor(0, 2, 3);
  const double x2 = -minor(0, 1, 3);
  const double x3 = minor(0, 1, 2);
  return FourVector(-x0, x1, x2, x3);  // raise the time index
}

}  // namespace lskew
