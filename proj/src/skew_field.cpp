#include "lskew/skew_field.hpp"

#include "lskew/errors.hpp"

#include <cassert>
#include <cmath>
#include <vector>

namespace lskew {

namespace {

// [[0, E^T], [E, x B]] for possibly complex entries.
template <typename Scalar>
Eigen::Matrix<Scalar, 4, 4> block_form(const Eigen::Matrix<Scalar, 3, 1>& e,
                                       const Eigen::Matrix<Scalar, 3, 3>& spatial) {
  Eigen::Matrix<Scalar, 4, 4> m = Eigen::Matrix<Scalar, 4, 4>::Zero();
  m.template block<1, 3>(0, 1) = e.transpose();
  m.template block<3, 1>(1, 0) = e;
  m.template block<3, 3>(1, 1) = spatial;
  return m;
}

}  // namespace

Mat3 cross_op(const Vec3& b) {
  Mat3 m;
  // (x B) v = v x B
  m << 0, b[2], -b[1],
      -b[2], 0, b[0],
      b[1], -b[0], 0;
  return m;
}

CMat3 cross_op(const CVec3& b) {
  CMat3 m;
  m << Complex(0), b[2], -b[1],
      -b[2], Complex(0), b[0],
      b[1], -b[0], Complex(0);
  return m;
}

SkewField::SkewField(const Vec3& e, const Vec3& b, Orientation o)
    : e_(e), b_(o == Orientation::Flipped ? Vec3(-b) : b), flipped_(o == Orientation::Flipped) {
  m_ = block_form<double>(e_, cross_op(b_));
}

SkewField SkewField::operator+(const SkewField& o) const {
  assert(flipped_ == o.flipped_);
  return SkewField(Vec3(E() + o.E()), Vec3(B() + o.B()), orientation());
}

SkewField SkewField::operator-(const SkewField& o) const {
  assert(flipped_ == o.flipped_);
  return SkewField(Vec3(E() - o.E()), Vec3(B() - o.B()), orientation());
}

SkewField SkewField::operator-() const { return SkewField(Vec3(-E()), Vec3(-B()), orientation()); }

SkewField SkewField::operator*(double s) const {
  return SkewField(Vec3(s * E()), Vec3(s * B()), orientation());
}

SkewField hodge_dual(const SkewField& f) {
  return SkewField(Vec3(-f.B()), f.E(), f.orientation());
}

SkewField duality_rotate(const SkewField& f, double theta) {
  const SkewField dual = hodge_dual(f);
  return f * std::cos(theta) + dual * std::sin(theta);
}

SkewField commutator(const SkewField& f, const SkewField& g) {
  const Vec3 ef = f.e_std(), bf = f.b_std(), eg = g.e_std(), bg = g.b_std();
  const Vec3 e = -ef.cross(bg) - bf.cross(eg);
  const Vec3 b = ef.cross(eg) - bf.cross(bg);
  return SkewField(e, b);
}

ComplexSkewOp::ComplexSkewOp(Complex alpha, const CVec3& a, bool conjugate_family)
    : alpha_(alpha), a_(a), conj_(conjugate_family) {
  const Complex unit = conj_ ? Complex(0, 1) : Complex(0, -1);
  m_ = block_form<Complex>(a_, cross_op(CVec3(unit * a_)));
  m_ += alpha_ * CMat4::Identity();
}

Complex ComplexSkewOp::lambda() const { return std::sqrt(a_dot_a()); }

ComplexSkewOp ComplexSkewOp::operator*(Complex s) const {
  return ComplexSkewOp(s * alpha_, CVec3(s * a_), conj_);
}

ComplexSkewOp ComplexSkewOp::operator+(const ComplexSkewOp& o) const {
  assert(conj_ == o.conj_);
  return ComplexSkewOp(alpha_ + o.alpha_, CVec3(a_ + o.a_), conj_);
}

ComplexSkewOp complexify(const SkewField& f, bool conjugate) {
  const bool conj = conjugate != (f.orientation() == Orientation::Flipped);
  const CVec3 a = conj ? CVec3(f.e_std().cast<Complex>() - Complex(0, 1) * f.b_std().cast<Complex>())
                       : CVec3(f.e_std().cast<Complex>() + Complex(0, 1) * f.b_std().cast<Complex>());
  ComplexSkewOp op(Complex(0), a, conj);
  // The block form must agree entrywise with F -+ iF* taken with the field's
  // own orientation dual; a mismatch is a construction bug.
  const Complex unit = conjugate ? Complex(0, 1) : Complex(0, -1);
  const double mismatch =
      (op.matrix() - (f.matrix().cast<Complex>() + unit * hodge_dual(f).matrix().cast<Complex>()))
          .cwiseAbs()
          .maxCoeff();
  if (mismatch > 1e-9 * (1.0 + f.matrix().cwiseAbs().maxCoeff()))
    throw std::logic_error("complexify: block form disagrees with F -+ iF*");
  return op;
}

CMat4 complex_block_op(const CVec3& a, const CVec3& c) {
  return block_form<Complex>(a, cross_op(c));
}

std::array<ComplexSkewOp, 3> pauli_basis(bool conjugate) {
  std::array<ComplexSkewOp, 3> sigma;
  for (int i = 0; i < 3; ++i)
    sigma[i] = complexify(SkewField(Vec3::Unit(i), Vec3::Zero()), conjugate);
  return sigma;
}

int algebra_span_dim(std::span<const ComplexSkewOp> generators, int max_word_length) {
  if (generators.empty()) throw Error(ErrorKind::BadArgument, "generator list is empty");
  if (max_word_length < 1) throw Error(ErrorKind::BadArgument, "max_word_length must be >= 1");

  const std::size_t m = generators.size();
  std::size_t total = 1, level_count = 1;
  for (int len = 1; len <= max_word_length; ++len) {
    level_count *= m;
    total += level_count;
    if (total > 100000) throw Error(ErrorKind::BadArgument, "word count too large");
  }

  std::vector<CMat4> words;
  words.reserve(total);
  words.push_back(CMat4::Identity());
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_word_length; ++len) {
    const std::size_t level_end = words.size();
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (const ComplexSkewOp& g : generators) words.push_back(words[i] * g.matrix());
    level_begin = level_end;
  }

  Eigen::MatrixXcd flat(16, static_cast<Eigen::Index>(words.size()));
  for (Eigen::Index i = 0; i < flat.cols(); ++i)
    flat.col(i) = Eigen::Map<const Eigen::Matrix<Complex, 16, 1>>(words[static_cast<std::size_t>(i)].data());

  const Eigen::MatrixXcd gram = flat.adjoint() * flat;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  const double cutoff = 1e-8 * ev.maxCoeff();
  int rank = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev[i] > cutoff) ++rank;
  return rank;
}

}  // namespace lskew
