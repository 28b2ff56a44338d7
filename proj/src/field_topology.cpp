#include "lskew/field_topology.hpp"

#include "lskew/detail/parallel.hpp"
#include "lskew/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace lskew {

namespace {

constexpr int kMaxBisectionDepth = 12;

Vec3 perp_unit(const Vec3& n) {
  int k = 0;
  n.cwiseAbs().minCoeff(&k);
  return n.cross(Vec3::Unit(k)).normalized();
}

void accumulate(const FieldConfig& config, const Vec3& p, Vec3& e, Vec3& b) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, PointCharge>) {
          const Vec3 d = p - node.position;
          const double r = d.norm();
          if (r <= 1e-12 * (1.0 + node.position.norm())) {
            std::ostringstream msg;
            msg << "field of the charge at (" << node.position.transpose()
                << ") is singular there";
            throw Error(ErrorKind::SingularPoint, msg.str());
          }
          e += node.charge * d / (r * r * r);
        } else if constexpr (std::is_same_v<T, UniformField>) {
          e += node.E;
          b += node.B;
        } else if constexpr (std::is_same_v<T, PlaneWaveNull>) {
          const double k = node.axis.norm();
          if (k <= 0) throw Error(ErrorKind::BadArgument, "plane wave needs a nonzero axis");
          const Vec3 khat = node.axis / k;
          const Vec3 e1 = perp_unit(khat);
          const Vec3 e2 = khat.cross(e1);  // e1 x e2 = khat
          const double amp = node.amplitude * std::cos(node.axis.dot(p) + node.phase);
          e += amp * e1;
          b += amp * e2;
        } else {
          for (const FieldConfig& term : node.terms) accumulate(term, p, e, b);
        }
      },
      config.node);
}

}  // namespace

SkewField eval_config(const FieldConfig& config, const Vec3& point) {
  Vec3 e = Vec3::Zero(), b = Vec3::Zero();
  accumulate(config, point, e, b);
  return SkewField(e, b);
}

Complex psi(const SkewField& f) { return Complex(f.e2() - f.b2(), 2.0 * f.e_dot_b()); }

const char* to_string(RegionClass c) {
  switch (c) {
    case RegionClass::Singular: return "Singular";
    case RegionClass::NullLocus: return "NullLocus";
    case RegionClass::M1: return "M1";
  }
  return "Unknown";
}

RegionClass region_classify(const FieldConfig& config, const Vec3& point, double tol) {
  SkewField f;
  try {
    f = eval_config(config, point);
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::SingularPoint) return RegionClass::Singular;
    throw;
  }
  // A vanishing field (scale 0) lands here too: |psi| <= 0 holds.
  return std::abs(psi(f)) <= tol * f.scale() ? RegionClass::NullLocus : RegionClass::M1;
}

void validate(const LoopSpec& loop) {
  if (loop.samples < 8) throw Error(ErrorKind::BadArgument, "a loop needs at least 8 samples");
  std::visit(
      [](const auto& shape) {
        using T = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<T, Circle>) {
          if (!(shape.radius > 0)) throw Error(ErrorKind::BadArgument, "circle radius must be positive");
          if (shape.normal.norm() <= 0)
            throw Error(ErrorKind::BadArgument, "circle normal must be nonzero");
        } else {
          if (shape.points.size() < 3)
            throw Error(ErrorKind::BadArgument, "polyline needs at least 3 points");
          for (std::size_t i = 0; i < shape.points.size(); ++i) {
            const Vec3& a = shape.points[i];
            const Vec3& b = shape.points[(i + 1) % shape.points.size()];
            if ((a - b).norm() <= 0)
              throw Error(ErrorKind::BadArgument, "polyline has coincident consecutive points");
          }
        }
      },
      loop.shape);
}

Vec3 loop_point(const LoopSpec& loop, double t) {
  t -= std::floor(t);
  return std::visit(
      [&](const auto& shape) -> Vec3 {
        using T = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<T, Circle>) {
          const Vec3 nhat = shape.normal.normalized();
          const Vec3 a = perp_unit(nhat);
          const Vec3 b = nhat.cross(a);  // right-handed about the normal
          const double angle = 2.0 * M_PI * t;
          return shape.center + shape.radius * (std::cos(angle) * a + std::sin(angle) * b);
        } else {
          const std::size_t n = shape.points.size();
          double total = 0;
          for (std::size_t i = 0; i < n; ++i)
            total += (shape.points[(i + 1) % n] - shape.points[i]).norm();
          double target = t * total;
          for (std::size_t i = 0; i < n; ++i) {
            const Vec3& p0 = shape.points[i];
            const Vec3& p1 = shape.points[(i + 1) % n];
            const double len = (p1 - p0).norm();
            if (target <= len || i + 1 == n) {
              const double s = std::clamp(target / len, 0.0, 1.0);
              return p0 + s * (p1 - p0);
            }
            target -= len;
          }
          return shape.points[0];
        }
      },
      loop.shape);
}

const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

namespace {

// A refined sampling of psi along the loop: adjacent samples differ in phase
// by at most pi/2, so the accumulated increments certify an integer winding,
// and square-root continuation along the trace is unambiguous.
struct PsiTrace {
  std::vector<Complex> values;  // closed: last element equals the first
  double min_abs_psi = std::numeric_limits<double>::infinity();
  int samples_used = 0;
  bool refined = false;
};

class TraceBuilder {
 public:
  TraceBuilder(const FieldConfig& config, const LoopSpec& loop, double tol)
      : config_(config), loop_(loop), tol_(tol) {}

  PsiTrace build() {
    validate(loop_);
    const int n = loop_.samples;

    std::vector<Complex> base(static_cast<std::size_t>(n));
    detail::parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
      base[i] = checked_psi(static_cast<double>(i) / n);
    });
    trace_.samples_used = n;
    for (const Complex& p : base)
      trace_.min_abs_psi = std::min(trace_.min_abs_psi, std::abs(p));

    trace_.values.push_back(base[0]);
    for (int i = 0; i < n; ++i) {
      const double t0 = static_cast<double>(i) / n;
      const double t1 = static_cast<double>(i + 1) / n;
      const Complex p1 = (i + 1 == n) ? base[0] : base[static_cast<std::size_t>(i + 1)];
      refine(t0, trace_.values.back(), t1, p1, 0);
    }
    return std::move(trace_);
  }

 private:
  Complex checked_psi(double t) {
    const SkewField f = eval_config(config_, loop_point(loop_, t));
    const Complex p = psi(f);
    if (std::abs(p) <= tol_ * f.scale()) {
      std::ostringstream msg;
      msg << "loop crosses the null locus at parameter t = " << t;
      throw Error(ErrorKind::NullLocusCrossing, msg.str());
    }
    return p;
  }

  void refine(double t0, Complex p0, double t1, Complex p1, int depth) {
    if (std::abs(std::arg(p1 / p0)) <= M_PI / 2) {
      trace_.values.push_back(p1);
      return;
    }
    if (depth >= kMaxBisectionDepth) {
      std::ostringstream msg;
      msg << "phase step still above pi/2 after " << kMaxBisectionDepth
          << " bisections near t = " << 0.5 * (t0 + t1);
      throw Error(ErrorKind::RefinementExhausted, msg.str());
    }
    const double tm = 0.5 * (t0 + t1);
    const Complex pm = checked_psi(tm);
    ++trace_.samples_used;
    trace_.min_abs_psi = std::min(trace_.min_abs_psi, std::abs(pm));
    trace_.refined = true;
    refine(t0, p0, tm, pm, depth + 1);
    refine(tm, pm, t1, p1, depth + 1);
  }

  const FieldConfig& config_;
  const LoopSpec& loop_;
  double tol_;
  PsiTrace trace_;
};

int winding_of(const PsiTrace& trace) {
  double total = 0;
  for (std::size_t i = 0; i + 1 < trace.values.size(); ++i)
    total += std::arg(trace.values[i + 1] / trace.values[i]);
  const double turns = total / (2.0 * M_PI);
  const double nearest = std::round(turns);
  if (std::abs(turns - nearest) >= 1e-6)
    throw Error(ErrorKind::RefinementExhausted,
                "phase increments failed to close to an integer number of turns");
  return static_cast<int>(nearest);
}

Parity continuation_of(const PsiTrace& trace) {
  const Complex start = std::sqrt(trace.values.front());
  Complex lambda = start;
  for (std::size_t i = 1; i < trace.values.size(); ++i) {
    const Complex r = std::sqrt(trace.values[i]);
    const double d_plus = std::abs(r - lambda);
    const double d_minus = std::abs(r + lambda);
    if (std::abs(d_plus - d_minus) <= 1e-12 * (std::abs(r) + std::abs(lambda)))
      throw Error(ErrorKind::AmbiguousContinuation,
                  "square roots are near-antipodal after refinement");
    lambda = d_plus <= d_minus ? r : -r;
  }
  return std::abs(lambda - start) <= std::abs(lambda + start) ? Parity::Even : Parity::Odd;
}

}  // namespace

WindingReport winding(const FieldConfig& config, const LoopSpec& loop, double tol) {
  const PsiTrace trace = TraceBuilder(config, loop, tol).build();
  WindingReport report;
  report.winding = winding_of(trace);
  report.parity = (report.winding % 2 == 0) ? Parity::Even : Parity::Odd;
  report.min_abs_psi = trace.min_abs_psi;
  report.samples_used = trace.samples_used;
  report.refined = trace.refined;
  return report;
}

Parity eigenvalue_continuation(const FieldConfig& config, const LoopSpec& loop, double tol) {
  const PsiTrace trace = TraceBuilder(config, loop, tol).build();
  const Parity parity = continuation_of(trace);
  // The continued square root flips exactly when psi winds an odd number of
  // times; a mismatch would mean the trace certificate failed.
  const int w = winding_of(trace);
  const Parity from_winding = (w % 2 == 0) ? Parity::Even : Parity::Odd;
  if (parity != from_winding)
    throw Error(ErrorKind::AmbiguousContinuation,
                "continuation parity disagrees with the winding parity");
  return parity;
}

int degree(const FieldConfig& config, std::span<const LoopSpec> loops, double tol) {
  if (loops.empty()) throw Error(ErrorKind::BadArgument, "degree needs at least one loop");
  // independent loops wind in parallel; gcd is order-independent
  std::vector<int> windings(loops.size());
  detail::parallel_for(loops.size(), [&](std::size_t i) {
    windings[i] = std::abs(winding(config, loops[i], tol).winding);
  });
  int g = 0;
  for (int w : windings) g = std::gcd(g, w);
  return g;
}

}  // namespace lskew
