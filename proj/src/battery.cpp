#include "lskew/battery.hpp"

#include "lskew/detail/parallel.hpp"
#include "lskew/eigenstructure.hpp"
#include "lskew/energy_momentum.hpp"
#include "lskew/errors.hpp"
#include "lskew/lorentz.hpp"
#include "lskew/minkowski.hpp"
#include "lskew/skew_field.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>

namespace lskew {

namespace {

struct CheckSpec {
  const char* name;
  double tolerance;
};

constexpr CheckSpec kChecks[] = {
    {"dual_product_scalar", 1e-9},        // F F* = F* F = -(E.B) I
    {"square_difference_scalar", 1e-9},   // F^2 - F*^2 = (E^2-B^2) I
    {"trace_of_square", 1e-9},            // tr(F^2) = 2 (E^2-B^2)
    {"eigenvalue_product", 1e-9},         // lambda_F lambda_F* = -E.B
    {"eigenvalue_square_diff", 1e-9},     // lambda_F^2 - lambda_F*^2 = E^2-B^2
    {"char_poly_vs_det", 1e-8},           // closed coefficients vs det(F - t I)
    {"commutator_field_form", 1e-9},      // field formula vs F G - G F
    {"commutator_dual_shift", 1e-9},      // [F,G]* = [F,G*] = [F*,G]
    {"commutator_complexified", 1e-9},    // [cF,cG] = 2 c[F,G]
    {"square_scalar_iff_pair", 1e-8},     // [[0,A^T],[A,xC]]^2 scalar iff C = +-iA
    {"complex_square_scalar", 1e-9},      // (cF)^2 = (A.A) I, both families
    {"anticommutator_bilinear", 1e-9},    // cF cG + cG cF = 2 (A_F.A_G) I
    {"conjugate_families_commute", 1e-9}, // cF cbarG = cbarG cF
    {"tensor_factorization", 1e-9},       // cF cbarF = 2 T_F
    {"duality_rotation_fixes_tensor", 1e-9},
    {"tensor_square_scalar", 1e-9},       // T^2 = lambda_T^2 I
    {"eigenvalues_vs_dense_solver", 1e-7},
    {"principal_pair_null_eigen", 1e-8},
    {"boost_scalar_invariants", 1e-9},
    {"scale_factor_vs_ratio", 1e-9},      // closed form vs <u',s_->/<u,s_->
    {"exp_vs_series_oracle", 1e-10},
    {"exp_metric_orthogonal", 1e-8},
    {"exp_inverse", 1e-9},
};

constexpr int kNumChecks = static_cast<int>(std::size(kChecks));

double rel(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

double rel_mat(const Mat4& a, const Mat4& b) {
  return (a - b).cwiseAbs().maxCoeff() /
         std::max({1.0, a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff()});
}

double rel_cmat(const CMat4& a, const CMat4& b) {
  return (a - b).cwiseAbs().maxCoeff() /
         std::max({1.0, a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff()});
}

double deviation_from_scalar(const CMat4& m) {
  const CMat4 s = (m.trace() / 4.0) * CMat4::Identity();
  return (m - s).cwiseAbs().maxCoeff() / std::max(1.0, m.cwiseAbs().maxCoeff());
}

// Truncated power series with scaling and squaring so the 20-term tail stays
// far below the comparison tolerances.
Mat4 exp_series(const Mat4& m) {
  int squarings = 0;
  double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
  while (norm > 0.5 && squarings < 60) {
    norm /= 2;
    ++squarings;
  }
  const Mat4 a = m / std::pow(2.0, squarings);
  Mat4 term = Mat4::Identity();
  Mat4 sum = Mat4::Identity();
  for (int k = 1; k <= 20; ++k) {
    term = Mat4(term * a) / static_cast<double>(k);
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = Mat4(sum * sum);
  return sum;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

using Residuals = std::array<double, kNumChecks>;

void run_case(std::uint64_t seed, std::uint64_t index, Residuals& out) {
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(index)));
  std::uniform_real_distribution<double> component(-10.0, 10.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  // Draws are sequenced through locals so the stream order is well defined.
  auto draw3 = [&] {
    const double a = component(rng);
    const double b = component(rng);
    const double c = component(rng);
    return Vec3(a, b, c);
  };

  const SkewField f(draw3(), draw3());
  const SkewField g(draw3(), draw3());
  Vec3 dir = draw3();
  if (dir.norm() == 0) dir = Vec3::UnitX();
  const BoostVelocity w(Vec3(dir.normalized() * 0.95 * std::cbrt(unit(rng))));

  const SkewField fs = hodge_dual(f);
  const Mat4& fm = f.matrix();
  const Mat4& fsm = fs.matrix();
  const double e2 = f.e2(), b2 = f.b2(), eb = f.e_dot_b();
  const EigenData d = eigenvalues(f);
  int slot = 0;

  // dual_product_scalar
  {
    const Mat4 scalar = -eb * Mat4::Identity();
    out[slot++] = std::max(rel_mat(fm * fsm, scalar), rel_mat(fsm * fm, scalar));
  }
  // square_difference_scalar
  out[slot++] = rel_mat(fm * fm - fsm * fsm, (e2 - b2) * Mat4::Identity());
  // trace_of_square
  out[slot++] = rel((fm * fm).trace(), 2.0 * (e2 - b2));
  // eigenvalue_product
  out[slot++] = rel(d.lambda_F * d.lambda_Fstar, -eb);
  // eigenvalue_square_diff
  out[slot++] = rel(d.lambda_F * d.lambda_F - d.lambda_Fstar * d.lambda_Fstar, e2 - b2);
  // char_poly_vs_det
  {
    const auto c = char_poly(f);
    const double s = 1.0 + std::sqrt(f.scale());
    double worst = 0;
    for (double t0 : {-2.3, -0.7, 0.41, 1.7, 3.1}) {
      const double t = t0 * s;
      const double poly = c[0] + t * (c[1] + t * (c[2] + t * (c[3] + t * c[4])));
      const double det = (fm - t * Mat4::Identity()).determinant();
      worst = std::max(worst, rel(poly, det));
    }
    out[slot++] = worst;
  }
  // commutator_field_form
  out[slot++] = rel_mat(commutator(f, g).matrix(), fm * g.matrix() - g.matrix() * fm);
  // commutator_dual_shift
  {
    const Mat4 lhs = hodge_dual(commutator(f, g)).matrix();
    out[slot++] = std::max(rel_mat(lhs, commutator(f, hodge_dual(g)).matrix()),
                           rel_mat(lhs, commutator(fs, g).matrix()));
  }
  // commutator_complexified
  {
    const CMat4 cf = complexify(f).matrix();
    const CMat4 cg = complexify(g).matrix();
    out[slot++] = rel_cmat(cf * cg - cg * cf, 2.0 * complexify(commutator(f, g)).matrix());
  }
  // square_scalar_iff_pair
  {
    const CVec3 a = f.e_std().cast<Complex>() + Complex(0, 1) * f.b_std().cast<Complex>();
    const Complex a_dot_a = a.cwiseProduct(a).sum();
    const CMat4 plus = complex_block_op(a, CVec3(Complex(0, 1) * a));
    const CMat4 minus = complex_block_op(a, CVec3(Complex(0, -1) * a));
    double worst = std::max(rel_cmat(plus * plus, a_dot_a * CMat4::Identity()),
                            rel_cmat(minus * minus, a_dot_a * CMat4::Identity()));
    // Converse direction: a perturbed spatial block must not square to a
    // scalar any more.
    CVec3 noise;
    for (int i = 0; i < 3; ++i) {
      const double re = component(rng);
      const double im = component(rng);
      noise[i] = Complex(re, im);
    }
    noise *= 0.1 * a.norm() / std::max(noise.norm(), 1e-300);
    const CMat4 probe = complex_block_op(a, CVec3(Complex(0, 1) * a + noise));
    if (deviation_from_scalar(probe * probe) <= 1e-6) worst = std::max(worst, 1.0);
    out[slot++] = worst;
  }
  // complex_square_scalar
  {
    const ComplexSkewOp cf = complexify(f);
    const ComplexSkewOp cfbar = complexify(f, true);
    out[slot++] = std::max(
        rel_cmat(cf.matrix() * cf.matrix(), cf.a_dot_a() * CMat4::Identity()),
        rel_cmat(cfbar.matrix() * cfbar.matrix(), cfbar.a_dot_a() * CMat4::Identity()));
  }
  // anticommutator_bilinear
  {
    const CMat4 cf = complexify(f).matrix();
    const CMat4 cg = complexify(g).matrix();
    const CVec3 af = f.e_std().cast<Complex>() + Complex(0, 1) * f.b_std().cast<Complex>();
    const CVec3 ag = g.e_std().cast<Complex>() + Complex(0, 1) * g.b_std().cast<Complex>();
    const Complex pairing = af.cwiseProduct(ag).sum();
    out[slot++] = rel_cmat(cf * cg + cg * cf, 2.0 * pairing * CMat4::Identity());
  }
  // conjugate_families_commute
  {
    const CMat4 cf = complexify(f).matrix();
    const CMat4 cgbar = complexify(g, true).matrix();
    out[slot++] = rel_cmat(cf * cgbar, cgbar * cf);
  }
  const EnergyMomentum t = energy_momentum(f);
  // tensor_factorization
  {
    const CMat4 prod = complexify(f).matrix() * complexify(f, true).matrix();
    out[slot++] = rel_cmat(prod, 2.0 * t.matrix().cast<Complex>());
  }
  // duality_rotation_fixes_tensor
  {
    double worst = 0;
    for (int j = 0; j < 16; ++j) {
      const double theta = 2.0 * M_PI * j / 16.0;
      worst = std::max(worst, rel_mat(energy_momentum(duality_rotate(f, theta)).matrix(),
                                      t.matrix()));
    }
    out[slot++] = worst;
  }
  // tensor_square_scalar
  out[slot++] = rel_mat(t.matrix() * t.matrix(),
                        d.lambda_T * d.lambda_T * Mat4::Identity());
  // eigenvalues_vs_dense_solver
  {
    Eigen::EigenSolver<Mat4> solver(fm);
    std::array<Complex, 4> computed;
    for (int i = 0; i < 4; ++i) computed[static_cast<std::size_t>(i)] = solver.eigenvalues()[i];
    const std::array<Complex, 4> expected = {
        Complex(d.lambda_F, 0), Complex(-d.lambda_F, 0),
        Complex(0, d.lambda_Fstar), Complex(0, -d.lambda_Fstar)};
    std::array<bool, 4> used{};
    double worst_abs = 0, largest = 1.0;
    for (const Complex& e : expected) {
      int best = -1;
      double best_dist = std::numeric_limits<double>::infinity();
      for (int i = 0; i < 4; ++i) {
        if (used[static_cast<std::size_t>(i)]) continue;
        const double dist = std::abs(computed[static_cast<std::size_t>(i)] - e);
        if (dist < best_dist) {
          best_dist = dist;
          best = i;
        }
      }
      used[static_cast<std::size_t>(best)] = true;
      worst_abs = std::max(worst_abs, best_dist);
      largest = std::max(largest, std::abs(e));
    }
    out[slot++] = worst_abs / largest;
  }
  // principal_pair_null_eigen
  {
    const PrincipalNullPair pair = principal_null_pair(f);
    const double s_scale = std::max(1.0, pair.s.frame_norm());
    const double m_scale = std::max(1.0, pair.s_minus.frame_norm());
    const double lam_scale = std::max(1.0, d.lambda_F);
    double worst = std::abs(inner(pair.s, pair.s)) / (s_scale * s_scale);
    worst = std::max(worst, std::abs(inner(pair.s_minus, pair.s_minus)) / (m_scale * m_scale));
    worst = std::max(worst, (f(pair.s) - d.lambda_F * pair.s).frame_norm() /
                                (lam_scale * s_scale));
    worst = std::max(worst, (f(pair.s_minus) + d.lambda_F * pair.s_minus).frame_norm() /
                                (lam_scale * m_scale));
    out[slot++] = worst;
  }
  // boost_scalar_invariants
  {
    const FieldTransformResult tr = transform_fields(f, w);
    const double e_dot_b_prime = inner(tr.E_prime, tr.B_prime);
    const double diff_prime = inner(tr.E_prime, tr.E_prime) - inner(tr.B_prime, tr.B_prime);
    out[slot++] = std::max(rel(e_dot_b_prime, eb), rel(diff_prime, e2 - b2));
  }
  // scale_factor_vs_ratio
  {
    const PrincipalNullPair pair = principal_null_pair(f);
    const FourVector u_prime = boost_observer(w);
    const double ratio = inner(u_prime, pair.s_minus) / inner(standard_observer(), pair.s_minus);
    out[slot++] = rel(eigenvector_scale_factor(f, w), ratio);
  }
  // exp checks run on a bounded copy so the series comparison stays sharp
  {
    const double cap = std::max({1.0, f.e_std().norm() / 3.0, f.b_std().norm() / 3.0});
    const SkewField bounded = f * (1.0 / cap);
    const Mat4 closed = exp_map(bounded);
    out[slot++] = rel_mat(closed, exp_series(bounded.matrix()));
    out[slot++] = rel_mat(closed.transpose() * metric() * closed, metric());
    out[slot++] = rel_mat(closed * exp_map(-bounded), Mat4::Identity());
  }
}

BatteryReport assemble(std::uint64_t seed, int cases, const std::vector<Residuals>& per_case) {
  BatteryReport report;
  report.seed = seed;
  report.cases = cases;
  for (int k = 0; k < kNumChecks; ++k) {
    IdentityResult r;
    r.name = kChecks[k].name;
    r.tolerance = kChecks[k].tolerance;
    r.max_residual = 0;
    for (const Residuals& res : per_case)
      r.max_residual = std::max(r.max_residual, res[static_cast<std::size_t>(k)]);
    r.pass = r.max_residual < r.tolerance;
    report.all_pass = report.all_pass && r.pass;
    report.identities.push_back(std::move(r));
  }
  return report;
}

}  // namespace

BatteryReport run_battery(std::uint64_t seed, int cases) {
  if (cases < 1) throw Error(ErrorKind::BadArgument, "cases must be >= 1");
  std::vector<Residuals> per_case(static_cast<std::size_t>(cases));
  detail::parallel_for(per_case.size(), [&](std::size_t i) {
    run_case(seed, static_cast<std::uint64_t>(i), per_case[i]);
  });
  return assemble(seed, cases, per_case);
}

BatteryReport run_battery_serial(std::uint64_t seed, int cases) {
  if (cases < 1) throw Error(ErrorKind::BadArgument, "cases must be >= 1");
  std::vector<Residuals> per_case(static_cast<std::size_t>(cases));
  for (std::size_t i = 0; i < per_case.size(); ++i)
    run_case(seed, static_cast<std::uint64_t>(i), per_case[i]);
  return assemble(seed, cases, per_case);
}

}  // namespace lskew
