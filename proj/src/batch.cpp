#include "lskew/batch.hpp"

#include "lskew/detail/parallel.hpp"

namespace lskew {

std::vector<Complex> psi_batch(const FieldConfig& config, std::span<const Vec3> points) {
  std::vector<Complex> out(points.size());
  detail::parallel_for(points.size(),
                       [&](std::size_t i) { out[i] = psi(eval_config(config, points[i])); });
  return out;
}

std::vector<Complex> psi_batch_serial(const FieldConfig& config, std::span<const Vec3> points) {
  std::vector<Complex> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    out[i] = psi(eval_config(config, points[i]));
  return out;
}

}  // namespace lskew
