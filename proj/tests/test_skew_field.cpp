#include "lskew/skew_field.hpp"

#include "lskew/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace lskew;

namespace {

SkewField random_field(std::mt19937_64& rng, double span = 10.0) {
  std::uniform_real_distribution<double> d(-span, span);
  const double e1 = d(rng), e2 = d(rng), e3 = d(rng);
  const double b1 = d(rng), b2 = d(rng), b3 = d(rng);
  return SkewField(Vec3(e1, e2, e3), Vec3(b1, b2, b3));
}

}  // namespace

TEST_CASE("block matrix form") {
  const SkewField f(Vec3(1, 0, 0), Vec3::Zero());
  Mat4 expected;
  expected << 0, 1, 0, 0,
              1, 0, 0, 0,
              0, 0, 0, 0,
              0, 0, 0, 0;
  CHECK(f.matrix() == expected);

  CHECK(SkewField().matrix() == Mat4::Zero());

  // pure magnetic field along z rotates the xy plane
  const SkewField b(Vec3::Zero(), Vec3(0, 0, 1));
  CHECK((b(embed(Vec3::UnitX())).spatial() - Vec3(0, -1, 0)).norm() == 0.0);
  CHECK((b(embed(Vec3::UnitY())).spatial() - Vec3(1, 0, 0)).norm() == 0.0);
  CHECK(b(standard_observer()).frame_norm() == 0.0);
}

TEST_CASE("field extraction round-trips and matches E = Fu, B = -F*u") {
  auto rng = std::mt19937_64(201);
  for (int i = 0; i < 100; ++i) {
    const SkewField f = random_field(rng);
    const auto [e, b] = extract_fields(f);
    CHECK((f(standard_observer()).spatial() - e).norm() == 0.0);
    CHECK((hodge_dual(f)(standard_observer()).spatial() + b).norm() == 0.0);
    const SkewField round(e, b);
    CHECK(round.matrix() == f.matrix());
  }
  const auto [e, b] = extract_fields(SkewField(Vec3(1, 2, 3), Vec3(4, 5, 6)));
  CHECK(e == Vec3(1, 2, 3));
  CHECK(b == Vec3(4, 5, 6));
}

TEST_CASE("metric skewness on the basis vectors") {
  auto rng = std::mt19937_64(202);
  for (int i = 0; i < 50; ++i) {
    const SkewField f = random_field(rng);
    for (int a = 0; a < 4; ++a) {
      for (int c = 0; c < 4; ++c) {
        const FourVector va(Vec4(Vec4::Unit(a)));
        const FourVector vc(Vec4(Vec4::Unit(c)));
        CHECK(inner(f(va), vc) == doctest::Approx(-inner(va, f(vc))).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("hodge dual") {
  const SkewField f(Vec3(1, 0, 0), Vec3::Zero());
  const SkewField dual = hodge_dual(f);
  CHECK(dual.E() == Vec3::Zero());
  CHECK(dual.B() == Vec3(1, 0, 0));

  const SkewField g(Vec3::Zero(), Vec3(0, 1, 0));
  CHECK(hodge_dual(g).E() == Vec3(0, -1, 0));
  CHECK(hodge_dual(g).B() == Vec3::Zero());

  auto rng = std::mt19937_64(203);
  for (int i = 0; i < 100; ++i) {
    const SkewField h = random_field(rng);
    CHECK((hodge_dual(hodge_dual(h)).matrix() + h.matrix()).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("duality rotation") {
  auto rng = std::mt19937_64(204);
  std::uniform_real_distribution<double> angle(-6.0, 6.0);
  const SkewField f(Vec3(1, 0, 0), Vec3::Zero());

  CHECK(duality_rotate(f, 0).matrix() == f.matrix());
  CHECK((duality_rotate(f, M_PI / 2).E()).norm() <= 1e-16);
  CHECK((duality_rotate(f, M_PI / 2).B() - Vec3(1, 0, 0)).norm() <= 1e-16);
  CHECK((duality_rotate(f, M_PI).matrix() + f.matrix()).cwiseAbs().maxCoeff() <= 1e-15);

  for (int i = 0; i < 100; ++i) {
    const SkewField g = random_field(rng);
    const double t1 = angle(rng), t2 = angle(rng);
    const Mat4 once = duality_rotate(g, t1 + t2).matrix();
    const Mat4 twice = duality_rotate(duality_rotate(g, t1), t2).matrix();
    CHECK(oracles::rel_mat(once, twice) <= 1e-14);
  }
}

TEST_CASE("complexification") {
  const SkewField f(Vec3(1, 0, 0), Vec3::Zero());
  const ComplexSkewOp cf = complexify(f);
  CHECK(cf.field_vector() == CVec3(Complex(1, 0), Complex(0, 0), Complex(0, 0)));
  CHECK(!cf.conjugate_family());

  CHECK(complexify(SkewField()).matrix() == CMat4::Zero());

  // a null field has (cF)^2 = 0
  const SkewField null_field(Vec3(1, 0, 0), Vec3(0, 1, 0));
  const CMat4 squared = complexify(null_field).matrix() * complexify(null_field).matrix();
  CHECK(squared.cwiseAbs().maxCoeff() <= 1e-15);

  auto rng = std::mt19937_64(205);
  std::uniform_real_distribution<double> angle(-6.0, 6.0);
  for (int i = 0; i < 100; ++i) {
    const SkewField g = random_field(rng);
    // cF = F - i F* entrywise, cbarF the conjugate
    const CMat4 expected = g.matrix().cast<Complex>() -
                           Complex(0, 1) * hodge_dual(g).matrix().cast<Complex>();
    CHECK(oracles::rel_cmat(complexify(g).matrix(), expected) == 0.0);
    CHECK(oracles::rel_cmat(complexify(g, true).matrix(), expected.conjugate()) == 0.0);

    // complex linearity: c(e^{i theta} g) = e^{i theta} c(g)
    const double theta = angle(rng);
    const CMat4 rotated = complexify(duality_rotate(g, theta)).matrix();
    const CMat4 scaled = std::exp(Complex(0, theta)) * complexify(g).matrix();
    CHECK(oracles::rel_cmat(rotated, scaled) <= 1e-14);
  }
}

TEST_CASE("orientation flip negates B and swaps the complexification") {
  auto rng = std::mt19937_64(206);
  for (int i = 0; i < 50; ++i) {
    const SkewField base = random_field(rng);
    const Vec3 e = base.E(), b = base.B();

    const SkewField flipped(e, b, Orientation::Flipped);
    CHECK(flipped.E() == e);
    CHECK(flipped.B() == b);  // extraction round-trips in the declared orientation

    // same observed fields, opposite orientation: the operator differs by the
    // sign of the magnetic block
    CHECK(flipped.matrix() == SkewField(e, Vec3(-b)).matrix());

    // c and cbar swap
    CHECK(oracles::rel_cmat(complexify(flipped).matrix(),
                            complexify(SkewField(e, Vec3(-b)), true).matrix()) == 0.0);
    CHECK(oracles::rel_cmat(complexify(flipped, true).matrix(),
                            complexify(SkewField(e, Vec3(-b)), false).matrix()) == 0.0);

    // the dual still satisfies E* = -B, B* = E on observed fields, and ** = -1
    const SkewField dual = hodge_dual(flipped);
    CHECK(dual.E() == Vec3(-b));
    CHECK(dual.B() == e);
    CHECK((hodge_dual(dual).E() + e).norm() == 0.0);
    CHECK((hodge_dual(dual).B() + b).norm() == 0.0);
  }
}

TEST_CASE("commutator") {
  auto rng = std::mt19937_64(207);
  const SkewField f = random_field(rng);
  CHECK(commutator(f, f).matrix().cwiseAbs().maxCoeff() == 0.0);

  const SkewField ex(Vec3::UnitX(), Vec3::Zero());
  const SkewField ey(Vec3::UnitY(), Vec3::Zero());
  const SkewField c = commutator(ex, ey);
  CHECK(c.E() == Vec3::Zero());
  CHECK(c.B() == Vec3::UnitZ());

  for (int i = 0; i < 100; ++i) {
    const SkewField g = random_field(rng);
    const SkewField h = random_field(rng);
    CHECK(oracles::rel_mat(commutator(g, h).matrix(),
                           g.matrix() * h.matrix() - h.matrix() * g.matrix()) <= 1e-14);
    // F and F* always commute
    CHECK(commutator(g, hodge_dual(g)).matrix().cwiseAbs().maxCoeff() <=
          1e-12 * (1 + g.scale()));
  }
}

TEST_CASE("pauli basis relations") {
  const auto sigma = pauli_basis();
  const auto sigma_bar = pauli_basis(true);
  const CMat4 id = CMat4::Identity();

  for (int i = 0; i < 3; ++i) {
    CHECK(oracles::rel_cmat(sigma[i].matrix() * sigma[i].matrix(), id) <= 1e-15);
    for (int j = 0; j < 3; ++j) {
      const CMat4 anti = sigma[i].matrix() * sigma[j].matrix() +
                         sigma[j].matrix() * sigma[i].matrix();
      CHECK(oracles::rel_cmat(anti, i == j ? CMat4(2.0 * id) : CMat4(CMat4::Zero())) <= 1e-15);
      // the two families commute elementwise
      CHECK(oracles::rel_cmat(sigma[i].matrix() * sigma_bar[j].matrix(),
                              sigma_bar[j].matrix() * sigma[i].matrix()) <= 1e-15);
    }
  }

  const CMat4 comm = sigma[0].matrix() * sigma[1].matrix() -
                     sigma[1].matrix() * sigma[0].matrix();
  CHECK(oracles::rel_cmat(comm, CMat4(Complex(0, 2) * sigma[2].matrix())) <= 1e-15);

  // conjugate family product carries the opposite sign
  CHECK(oracles::rel_cmat(sigma_bar[0].matrix() * sigma_bar[1].matrix(),
                          CMat4(Complex(0, -1) * sigma_bar[2].matrix())) <= 1e-15);
}

TEST_CASE("algebra span dimension") {
  const auto sigma = pauli_basis();
  const auto sigma_bar = pauli_basis(true);

  const ComplexSkewOp id = ComplexSkewOp::scalar(1.0);
  CHECK(algebra_span_dim(std::span<const ComplexSkewOp>(&id, 1), 3) == 1);

  CHECK(algebra_span_dim(std::span<const ComplexSkewOp>(sigma.data(), 1), 2) == 2);

  const std::array<ComplexSkewOp, 4> mixed = {sigma[0], sigma[1], sigma_bar[0], sigma_bar[1]};
  CHECK(algebra_span_dim(mixed, 4) == 16);

  // one family alone closes on a four-dimensional algebra
  CHECK(algebra_span_dim(std::span<const ComplexSkewOp>(sigma.data(), 3), 4) == 4);

  CHECK_THROWS_AS(algebra_span_dim(std::span<const ComplexSkewOp>(), 2), Error);
  CHECK_THROWS_AS(algebra_span_dim(mixed, 0), Error);
}
