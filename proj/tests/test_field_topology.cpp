#include "lskew/field_topology.hpp"

#include "lskew/eigenstructure.hpp"
#include "lskew/energy_momentum.hpp"
#include "lskew/errors.hpp"
#include "lskew/json_io.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace lskew;

namespace {

FieldConfig free_electron() {
  return FieldConfig{PointCharge{-1.0, Vec3::Zero()}};
}

FieldConfig electron_in_uniform_b() {
  Superposition s;
  s.terms.push_back(FieldConfig{PointCharge{-1.0, Vec3::Zero()}});
  s.terms.push_back(FieldConfig{UniformField{Vec3::Zero(), Vec3::UnitX()}});
  return FieldConfig{std::move(s)};
}

LoopSpec circle(const Vec3& center, const Vec3& normal, double radius, int samples = 720) {
  return LoopSpec{Circle{center, normal, radius}, samples};
}

// dense psi samples along a loop, for the independent phase-sum oracle
std::vector<Complex> psi_samples(const FieldConfig& config, const LoopSpec& loop, int n) {
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    out.push_back(psi(eval_config(config, loop_point(loop, static_cast<double>(i) / n))));
  return out;
}

}  // namespace

TEST_CASE("configuration evaluation") {
  const SkewField at_x = eval_config(free_electron(), Vec3(1, 0, 0));
  CHECK((at_x.E() - Vec3(-1, 0, 0)).norm() <= 1e-15);
  CHECK(at_x.B().norm() == 0.0);

  const SkewField at_y2 = eval_config(electron_in_uniform_b(), Vec3(0, 2, 0));
  CHECK((at_y2.E() - Vec3(0, -0.25, 0)).norm() <= 1e-15);
  CHECK((at_y2.B() - Vec3(1, 0, 0)).norm() == 0.0);

  CHECK_THROWS_AS(eval_config(free_electron(), Vec3::Zero()), Error);

  // plane waves are null everywhere with orthogonal equal-length fields
  const FieldConfig wave{PlaneWaveNull{1.5, Vec3(0, 0, 2), 0.3}};
  auto rng = std::mt19937_64(601);
  std::uniform_real_distribution<double> d(-3.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    const double x = d(rng), y = d(rng), z = d(rng);
    const SkewField f = eval_config(wave, Vec3(x, y, z));
    CHECK(std::abs(f.e2() - f.b2()) <= 1e-12);
    CHECK(std::abs(f.e_dot_b()) <= 1e-12);
    CHECK(lambda_T(f) <= 1e-12);
  }
}

TEST_CASE("psi invariant") {
  CHECK(psi(SkewField(Vec3(1, 0, 0), Vec3::Zero())) == Complex(1, 0));
  CHECK(std::abs(psi(SkewField(Vec3(1, 0, 0), Vec3(0, 1, 0)))) == 0.0);
  CHECK(psi(SkewField(Vec3(1, 0, 0), Vec3(1, 0, 0))) == Complex(0, 2));

  auto rng = std::mt19937_64(602);
  std::uniform_real_distribution<double> d(-5.0, 5.0);
  for (int i = 0; i < 100; ++i) {
    const double e1 = d(rng), e2 = d(rng), e3 = d(rng);
    const double b1 = d(rng), b2 = d(rng), b3 = d(rng);
    const SkewField f(Vec3(e1, e2, e3), Vec3(b1, b2, b3));
    const Complex square = eigenvalues(f).lambda_cF * eigenvalues(f).lambda_cF;
    CHECK(std::abs(psi(f) - square) <= 1e-12 * (1 + std::abs(square)));
  }
}

TEST_CASE("region classification") {
  const FieldConfig config = electron_in_uniform_b();
  CHECK(region_classify(config, Vec3(0, 0, 1)) == RegionClass::NullLocus);
  CHECK(region_classify(config, Vec3(0, 2, 0)) == RegionClass::M1);
  CHECK(region_classify(config, Vec3::Zero()) == RegionClass::Singular);
  // the null locus of this configuration is the unit circle in the y-z plane
  CHECK(region_classify(config, Vec3(0, std::sqrt(0.5), -std::sqrt(0.5))) ==
        RegionClass::NullLocus);
  // a vanishing field counts as null locus, not singular
  const FieldConfig wave{PlaneWaveNull{1.0, Vec3(0, 0, M_PI), 0.0}};
  CHECK(region_classify(wave, Vec3(0, 0, 0.5)) == RegionClass::NullLocus);
}

TEST_CASE("loop validation and parametrization") {
  CHECK_THROWS_AS(validate(circle(Vec3::Zero(), Vec3::UnitZ(), 0.0)), Error);
  CHECK_THROWS_AS(validate(circle(Vec3::Zero(), Vec3::Zero(), 1.0)), Error);
  CHECK_THROWS_AS(validate(LoopSpec{Circle{Vec3::Zero(), Vec3::UnitZ(), 1.0}, 4}), Error);
  CHECK_THROWS_AS(validate(LoopSpec{Polyline{{Vec3::Zero(), Vec3::UnitX()}}, 720}), Error);
  Polyline degenerate{{Vec3::Zero(), Vec3::UnitX(), Vec3::UnitX()}};
  CHECK_THROWS_AS(validate(LoopSpec{degenerate, 720}), Error);

  const LoopSpec c = circle(Vec3(0, 1, 0), Vec3::UnitZ(), 0.25);
  CHECK((loop_point(c, 0.0) - loop_point(c, 1.0)).norm() <= 1e-15);
  for (double t : {0.0, 0.21, 0.5, 0.77}) {
    const Vec3 p = loop_point(c, t);
    CHECK(std::abs((p - Vec3(0, 1, 0)).norm() - 0.25) <= 1e-14);
    CHECK(p[2] == 0.0);
  }

  const LoopSpec poly{Polyline{{Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(1, 1, 0), Vec3(0, 1, 0)}},
                      720};
  CHECK((loop_point(poly, 0.0) - Vec3(0, 0, 0)).norm() == 0.0);
  CHECK((loop_point(poly, 0.125) - Vec3(0.5, 0, 0)).norm() <= 1e-14);
  CHECK((loop_point(poly, 0.5) - Vec3(1, 1, 0)).norm() <= 1e-14);
  CHECK((loop_point(poly, 0.875) - Vec3(0, 0.5, 0)).norm() <= 1e-14);
}

TEST_CASE("winding numbers of the two electron configurations") {
  const FieldConfig free = free_electron();
  const FieldConfig with_b = electron_in_uniform_b();

  // free electron: psi = E^2 > 0 everywhere, every loop winds zero
  for (const LoopSpec& loop :
       {circle(Vec3(1.5, 0, 0), Vec3::UnitZ(), 0.5), circle(Vec3(0, 0, 2), Vec3(1, 1, 0), 1.0),
        circle(Vec3(0, 1, 0), Vec3::UnitZ(), 0.25)}) {
    const WindingReport r = winding(free, loop);
    CHECK(r.winding == 0);
    CHECK(r.parity == Parity::Even);
    CHECK(r.min_abs_psi > 0);
  }

  // loop linking the null circle
  const WindingReport link = winding(with_b, circle(Vec3(0, 1, 0), Vec3::UnitZ(), 0.25));
  CHECK(std::abs(link.winding) == 1);
  CHECK(link.parity == Parity::Odd);
  CHECK(link.samples_used >= 720);

  // small loop far away from the null circle
  const WindingReport far = winding(with_b, circle(Vec3(0, 5, 0), Vec3::UnitZ(), 0.1));
  CHECK(far.winding == 0);
  CHECK(far.parity == Parity::Even);

  // independent oracle: plain phase summation over a dense sampling
  const std::vector<Complex> dense =
      psi_samples(with_b, circle(Vec3(0, 1, 0), Vec3::UnitZ(), 0.25), 4096);
  CHECK(oracles::phase_winding(dense) == link.winding);
}

TEST_CASE("winding error paths") {
  const FieldConfig with_b = electron_in_uniform_b();

  // a loop tracing the null circle itself fails immediately
  CHECK_THROWS_AS(winding(with_b, circle(Vec3::Zero(), Vec3::UnitX(), 1.0)), Error);
  try {
    winding(with_b, circle(Vec3::Zero(), Vec3::UnitX(), 1.0));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NullLocusCrossing);
    CHECK(std::string(e.what()).find("t = ") != std::string::npos);
  }

  // a loop whose first vertex sits on the charge gets sampled right there
  CHECK_THROWS_AS(winding(with_b, LoopSpec{Polyline{{Vec3(0, 0, 0), Vec3(1, 0, 0),
                                                     Vec3(1, 1, 0)}},
                                           720}),
                  Error);
  try {
    winding(with_b, LoopSpec{Polyline{{Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(1, 1, 0)}}, 720});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularPoint);
  }

  // a loop transversally crossing the null locus cannot certify a winding:
  // it must raise one of the two designed failures, never return an integer
  const LoopSpec crossing = circle(Vec3(0, 1, 0), Vec3::UnitX(), 0.25);
  CHECK_THROWS_AS(winding(with_b, crossing), Error);
}

TEST_CASE("winding stability and orientation") {
  const FieldConfig with_b = electron_in_uniform_b();
  const WindingReport base = winding(with_b, circle(Vec3(0, 1, 0), Vec3::UnitZ(), 0.25, 720));
  const WindingReport doubled =
      winding(with_b, circle(Vec3(0, 1, 0), Vec3::UnitZ(), 0.25, 1440));
  CHECK(base.winding == doubled.winding);

  const WindingReport reversed =
      winding(with_b, circle(Vec3(0, 1, 0), Vec3(0, 0, -1), 0.25, 720));
  CHECK(reversed.winding == -base.winding);
}

TEST_CASE("eigenvalue continuation parity") {
  const FieldConfig free = free_electron();
  const FieldConfig with_b = electron_in_uniform_b();

  CHECK(eigenvalue_continuation(free, circle(Vec3(1.5, 0, 0), Vec3::UnitZ(), 0.5)) ==
        Parity::Even);
  CHECK(eigenvalue_continuation(with_b, circle(Vec3(0, 1, 0), Vec3::UnitZ(), 0.25)) ==
        Parity::Odd);
  CHECK(eigenvalue_continuation(with_b, circle(Vec3(0, 5, 0), Vec3::UnitZ(), 0.1)) ==
        Parity::Even);

  // winding parity equals continuation parity on random valid circles
  auto rng = std::mt19937_64(603);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  std::uniform_real_distribution<double> rad(0.05, 1.0);
  int checked = 0;
  while (checked < 10) {
    const double cx = coord(rng), cy = coord(rng), cz = coord(rng);
    const double nx = coord(rng), ny = coord(rng), nz = coord(rng);
    const double r = rad(rng);
    if (Vec3(nx, ny, nz).norm() < 1e-3) continue;
    const LoopSpec loop = circle(Vec3(cx, cy, cz), Vec3(nx, ny, nz), r, 256);
    try {
      const WindingReport report = winding(with_b, loop);
      CHECK(eigenvalue_continuation(with_b, loop) == report.parity);
      ++checked;
    } catch (const Error&) {
      continue;  // invalid loop: crosses the locus or refines out
    }
  }
}

TEST_CASE("windings vanish when E.B is identically zero") {
  // charge plus uniform electric field: B = 0 everywhere, psi stays real
  Superposition s;
  s.terms.push_back(FieldConfig{PointCharge{2.0, Vec3(0.5, 0, 0)}});
  s.terms.push_back(FieldConfig{UniformField{Vec3(0.3, -0.2, 0.8), Vec3::Zero()}});
  const FieldConfig config{std::move(s)};

  auto rng = std::mt19937_64(604);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  std::uniform_real_distribution<double> rad(0.1, 1.0);
  int checked = 0;
  while (checked < 10) {
    const double cx = coord(rng), cy = coord(rng), cz = coord(rng);
    const double nx = coord(rng), ny = coord(rng), nz = coord(rng);
    if (Vec3(nx, ny, nz).norm() < 1e-3) continue;
    try {
      const WindingReport r =
          winding(config, circle(Vec3(cx, cy, cz), Vec3(nx, ny, nz), rad(rng), 256));
      CHECK(r.winding == 0);
      ++checked;
    } catch (const Error&) {
      continue;
    }
  }
}

TEST_CASE("duality rotation shifts the winding by twice the phase winding") {
  const FieldConfig with_b = electron_in_uniform_b();
  const LoopSpec link = circle(Vec3(0, 1, 0), Vec3::UnitZ(), 0.25);
  const int n = 4096;
  const std::vector<Complex> base = psi_samples(with_b, link, n);
  const int w = oracles::phase_winding(base);

  // constant rotation: psi -> e^{2 i theta} psi, winding unchanged
  for (double theta : {0.3, 1.2, 2.9}) {
    std::vector<Complex> rotated = base;
    for (Complex& p : rotated) p *= std::exp(Complex(0, 2 * theta));
    CHECK(oracles::phase_winding(rotated) == w);
  }

  // position-dependent rotation by the azimuth about the z axis through the
  // loop center: the loop encircles that axis once, so the winding shifts by 2
  std::vector<Complex> shifted = base;
  for (int i = 0; i < n; ++i) {
    const Vec3 p = loop_point(link, static_cast<double>(i) / n);
    const double phase = std::atan2(p[1] - 1.0, p[0]);  // azimuth about (0,1,*)
    shifted[static_cast<std::size_t>(i)] *= std::exp(Complex(0, 2 * phase));
  }
  CHECK(oracles::phase_winding(shifted) == w + 2);
}

TEST_CASE("winding agrees with a dense brute-force phase sum on random loops") {
  const FieldConfig config = electron_in_uniform_b();
  auto rng = std::mt19937_64(606);
  std::uniform_real_distribution<double> coord(-2.0, 2.0), rad(0.05, 1.3), d(-1.0, 1.0);
  int checked = 0, odd_seen = 0;
  while (checked < 30) {
    const double cx = coord(rng), cy = coord(rng), cz = coord(rng);
    const double nx = d(rng), ny = d(rng), nz = d(rng);
    if (Vec3(nx, ny, nz).norm() < 1e-3) continue;
    const LoopSpec loop = circle(Vec3(cx, cy, cz), Vec3(nx, ny, nz), rad(rng), 256);
    try {
      const WindingReport w = winding(config, loop);
      CHECK(oracles::phase_winding(psi_samples(config, loop, 4096)) == w.winding);
      if (w.parity == Parity::Odd) ++odd_seen;
      ++checked;
    } catch (const Error&) {
      continue;
    }
  }
  CHECK(odd_seen > 0);  // the draw must actually exercise linking loops
}

TEST_CASE("configs and loops survive the JSON wire format") {
  const Json config_json = Json::parse(R"({
    "type": "superposition",
    "terms": [
      {"type": "point_charge", "charge": -1.0, "position": [0, 0, 0]},
      {"type": "uniform", "E": [0.1, 0, 0], "B": [1, 0, 0]},
      {"type": "plane_wave_null", "amplitude": 0.5, "axis": [0, 0, 2], "phase": 0.3}
    ]})");
  const FieldConfig parsed = config_from_json(config_json);

  Superposition direct;
  direct.terms.push_back(FieldConfig{PointCharge{-1.0, Vec3::Zero()}});
  direct.terms.push_back(FieldConfig{UniformField{Vec3(0.1, 0, 0), Vec3::UnitX()}});
  direct.terms.push_back(FieldConfig{PlaneWaveNull{0.5, Vec3(0, 0, 2), 0.3}});
  const FieldConfig expected{std::move(direct)};

  auto rng = std::mt19937_64(605);
  std::uniform_real_distribution<double> d(-3.0, 3.0);
  for (int i = 0; i < 50; ++i) {
    const double x = d(rng), y = d(rng), z = d(rng);
    if (Vec3(x, y, z).norm() < 0.1) continue;
    const SkewField a = eval_config(parsed, Vec3(x, y, z));
    const SkewField b = eval_config(expected, Vec3(x, y, z));
    CHECK((a.E() - b.E()).norm() == 0.0);
    CHECK((a.B() - b.B()).norm() == 0.0);
  }

  const LoopSpec loop = loop_from_json(Json::parse(
      R"({"kind":"circle","center":[0,1,0],"normal":[0,0,1],"radius":0.25,"samples":64})"));
  CHECK(loop.samples == 64);
  CHECK(std::abs((loop_point(loop, 0.25) - Vec3(0, 1, 0)).norm() - 0.25) <= 1e-14);

  const LoopSpec poly = loop_from_json(Json::parse(
      R"({"kind":"polyline","points":[[0,0,0],[1,0,0],[1,1,0]]})"));
  CHECK(poly.samples == 720);
  CHECK_THROWS_AS(loop_from_json(Json::parse(R"({"kind":"circle","center":[0,0,0]})")), Error);
  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"type":"wormhole"})")), Error);
}

TEST_CASE("degree over loop families") {
  const FieldConfig free = free_electron();
  const std::vector<LoopSpec> free_loops = {circle(Vec3(1.5, 0, 0), Vec3::UnitZ(), 0.5),
                                            circle(Vec3(0, 0, 2), Vec3(1, 1, 0), 1.0),
                                            circle(Vec3(0, -1.2, 0.4), Vec3::UnitX(), 0.3)};
  CHECK(degree(free, free_loops) == 0);

  const FieldConfig with_b = electron_in_uniform_b();
  const std::vector<LoopSpec> fixture_loops = {circle(Vec3(0, 1, 0), Vec3::UnitZ(), 0.25),
                                               circle(Vec3(0, 5, 0), Vec3::UnitZ(), 0.1)};
  CHECK(degree(with_b, fixture_loops) == 1);

  // polylines tracing the linking circle two and four times wind +-2 and +-4
  auto multi_trace = [&](int turns) {
    Polyline poly;
    const int per_turn = 48;
    for (int i = 0; i < per_turn * turns; ++i) {
      const double angle = 2.0 * M_PI * i / per_turn;
      poly.points.push_back(Vec3(0.25 * std::cos(angle), 1 + 0.25 * std::sin(angle), 0));
    }
    return LoopSpec{std::move(poly), 720 * turns};
  };
  const WindingReport two = winding(with_b, multi_trace(2));
  const WindingReport four = winding(with_b, multi_trace(4));
  CHECK(std::abs(two.winding) == 2);
  CHECK(std::abs(four.winding) == 4);
  CHECK(degree(with_b, std::vector<LoopSpec>{multi_trace(2), multi_trace(4)}) == 2);

  CHECK_THROWS_AS(degree(free, std::vector<LoopSpec>{}), Error);
}
