// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "sdb/array.hpp"
#include "sdb/error.hpp"

namespace sdb {

// Acquisition description for a 2D towed-streamer line. Receiver index is an
// offset class: receiver j of every shot sits at the same source-receiver
// offset, so a common offset gather is a fixed receiver index across shots.
struct SurveyGeometry {
  std::uint32_t n_shots = 0;
  std::uint32_t n_receivers = 0;
  std::uint32_t n_time = 0;
  double dt = 0.0;                // seconds per sample
  double shot_spacing = 0.0;      // meters
  double receiver_spacing = 0.0;  // meters
  double near_offset = 0.0;       // meters, source to first receiver
  bool towed = true;

  void validate() const;

  // Sail-line position of shot s; the streamer trails behind in -x.
  double shot_position(std::uint32_t shot) const {
    return static_cast<double>(shot) * shot_spacing;
  }

  std::size_t sample_count() const {
    return static_cast<std::size_t>(n_shots) * n_receivers * n_time;
  }

  bool operator==(const SurveyGeometry&) const = default;
};

// 3D cube of trace samples indexed (shot, receiver, time). The universal
// container for signal, noise, and blended data.
class TraceVolume {
 public:
  TraceVolume() = default;
  explicit TraceVolume(const SurveyGeometry& geom, float fill = 0.0f);

  const SurveyGeometry& geometry() const { return geom_; }

  float& at(std::uint32_t s, std::uint32_t r, std::uint32_t t) {
    return samples_[index(s, r, t)];
  }
  float at(std::uint32_t s, std::uint32_t r, std::uint32_t t) const {
    return samples_[index(s, r, t)];
  }

  std::span<float> trace(std::uint32_t s, std::uint32_t r) {
    return {samples_.data() + index(s, r, 0), geom_.n_time};
  }
  std::span<const float> trace(std::uint32_t s, std::uint32_t r) const {
    return {samples_.data() + index(s, r, 0), geom_.n_time};
  }

  std::vector<float>& storage() { return samples_; }
  const std::vector<float>& storage() const { return samples_; }

  // Population standard deviation over all samples, accumulated in double.
  double sample_std() const;

  void require_finite(const char* what) const;

  bool operator==(const TraceVolume& other) const {
    return geom_ == other.geom_ && samples_ == other.samples_;
  }

 private:
  std::size_t index(std::uint32_t s, std::uint32_t r, std::uint32_t t) const {
    return (static_cast<std::size_t>(s) * geom_.n_receivers + r) * geom_.n_time + t;
  }

  SurveyGeometry geom_;
  std::vector<float> samples_;
};

// One common offset gather: samples[shot][time] at a fixed receiver index.
struct OffsetGather {
  std::uint32_t offset_index = 0;
  Array2D<float> samples;  // [shot][time]
};

// A center gather plus k adjacent gathers per side arranged as channels,
// ordered by intended offset index ascending; the center sits at position k.
struct ChannelStack {
  std::uint32_t center_offset = 0;
  std::uint32_t k = 0;
  std::uint32_t neighbor_stride = 1;
  Array3D<float> channels;  // [2k+1][shot][time]
};

struct CmpCoordinates {
  double midpoint = 0.0;  // meters
  double offset = 0.0;    // meters
};

OffsetGather sort_common_offset(const TraceVolume& volume, std::uint32_t offset_index);

// Neighbors beyond the survey edge are clamped to the valid offset range, so
// edge stacks replicate the boundary gathers.
ChannelStack assemble_channel_stack(const TraceVolume& volume, std::uint32_t center,
                                    std::uint32_t k, std::uint32_t stride);

CmpCoordinates cmp_coordinates(std::uint32_t shot_index, std::uint32_t receiver_index,
                               const SurveyGeometry& geometry);

// Midpoint bin width is receiver_spacing / 2, the natural midpoint spacing
// for towed geometry. Bin 0 holds the smallest midpoint in the survey.
std::int64_t cmp_bin_index(double midpoint, const SurveyGeometry& geometry);
std::int64_t cmp_bin_count(const SurveyGeometry& geometry);

}  // namespace sdb
