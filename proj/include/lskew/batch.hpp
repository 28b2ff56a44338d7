#pragma once

#include "lskew/field_topology.hpp"

#include <span>
#include <vector>

namespace lskew {

/// OpenMP-parallel evaluation of psi over many points. Exceptions raised at
/// any point (singular hits) are captured and rethrown after the loop.
std::vector<Complex> psi_batch(const FieldConfig& config, std::span<const Vec3> points);

/// Serial reference implementation, kept for testing and benchmarking.
std::vector<Complex> psi_batch_serial(const FieldConfig& config, std::span<const Vec3> points);

}  // namespace lskew
