// SPDX-License-Identifier: Apache-2.0
#include "sdb/survey.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sdb {

void SurveyGeometry::validate() const {
  if (n_shots < 1 || n_receivers < 1 || n_time < 1)
    throw ConfigError("geometry: all counts must be >= 1");
  if (!(dt > 0.0)) throw ConfigError("geometry: dt must be > 0");
  if (!(shot_spacing > 0.0) || !(receiver_spacing > 0.0))
    throw ConfigError("geometry: spacings must be > 0");
}

TraceVolume::TraceVolume(const SurveyGeometry& geom, float fill) : geom_(geom) {
  geom_.validate();
  samples_.assign(geom_.sample_count(), fill);
}

double TraceVolume::sample_std() const {
  if (samples_.empty()) return 0.0;
  double mean = 0.0;
  for (float v : samples_) mean += v;
  mean /= static_cast<double>(samples_.size());
  double ss = 0.0;
  for (float v : samples_) {
    const double d = v - mean;
    ss += d * d;
  }
  return std::sqrt(ss / static_cast<double>(samples_.size()));
}

void TraceVolume::require_finite(const char* what) const {
  for (float v : samples_)
    if (!std::isfinite(v)) throw DegenerateInputError(std::string(what) + ": non-finite sample");
}

OffsetGather sort_common_offset(const TraceVolume& volume, std::uint32_t offset_index) {
  const SurveyGeometry& g = volume.geometry();
  if (offset_index >= g.n_receivers)
    throw IndexError("sort_common_offset: offset_index " + std::to_string(offset_index) +
                     " out of range [0, " + std::to_string(g.n_receivers) + ")");
  OffsetGather gather;
  gather.offset_index = offset_index;
  gather.samples = Array2D<float>(g.n_shots, g.n_time);
  for (std::uint32_t s = 0; s < g.n_shots; ++s) {
    auto src = volume.trace(s, offset_index);
    std::copy(src.begin(), src.end(), gather.samples.row(s).begin());
  }
  return gather;
}

ChannelStack assemble_channel_stack(const TraceVolume& volume, std::uint32_t center,
                                    std::uint32_t k, std::uint32_t stride) {
  const SurveyGeometry& g = volume.geometry();
  if (center >= g.n_receivers) throw IndexError("assemble_channel_stack: center out of range");
  if (stride < 1) throw ConfigError("assemble_channel_stack: stride must be >= 1");

  ChannelStack stack;
  stack.center_offset = center;
  stack.k = k;
  stack.neighbor_stride = stride;
  const std::uint32_t n_channels = 2 * k + 1;
  stack.channels = Array3D<float>(n_channels, g.n_shots, g.n_time);

  for (std::uint32_t j = 0; j < n_channels; ++j) {
    const std::int64_t intended = static_cast<std::int64_t>(center) +
                                  (static_cast<std::int64_t>(j) - static_cast<std::int64_t>(k)) *
                                      static_cast<std::int64_t>(stride);
    const std::int64_t clamped =
        std::clamp<std::int64_t>(intended, 0, static_cast<std::int64_t>(g.n_receivers) - 1);
    const auto offset = static_cast<std::uint32_t>(clamped);
    for (std::uint32_t s = 0; s < g.n_shots; ++s) {
      auto src = volume.trace(s, offset);
      std::copy(src.begin(), src.end(), stack.channels.row(j, s).begin());
    }
  }
  return stack;
}

CmpCoordinates cmp_coordinates(std::uint32_t shot_index, std::uint32_t receiver_index,
                               const SurveyGeometry& geometry) {
  if (shot_index >= geometry.n_shots || receiver_index >= geometry.n_receivers)
    throw IndexError("cmp_coordinates: index out of range");
  CmpCoordinates c;
  c.offset = geometry.near_offset + static_cast<double>(receiver_index) * geometry.receiver_spacing;
  c.midpoint = geometry.shot_position(shot_index) - 0.5 * c.offset;
  return c;
}

namespace {

double min_midpoint(const SurveyGeometry& g) {
  // Shot 0 with the farthest receiver has the smallest midpoint.
  return g.shot_position(0) -
         0.5 * (g.near_offset + static_cast<double>(g.n_receivers - 1) * g.receiver_spacing);
}

}  // namespace

std::int64_t cmp_bin_index(double midpoint, const SurveyGeometry& geometry) {
  const double bin_width = 0.5 * geometry.receiver_spacing;
  return std::llround((midpoint - min_midpoint(geometry)) / bin_width);
}

std::int64_t cmp_bin_count(const SurveyGeometry& geometry) {
  const double max_mid = geometry.shot_position(geometry.n_shots - 1) - 0.5 * geometry.near_offset;
  return cmp_bin_index(max_mid, geometry) + 1;
}

}  // namespace sdb
