// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace sdb {

// Error hierarchy used across the toolkit. Every category maps to one
// failure class a caller can reasonably act on; the CLI turns any of
// these into a nonzero exit with the message on stderr.

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid configuration values (bad ranges, CFL violation, degenerate params).
struct ConfigError : Error {
  using Error::Error;
};

// Array/tensor dimensions that do not line up.
struct ShapeError : Error {
  using Error::Error;
};

// Index outside the valid range of a container.
struct IndexError : Error {
  using Error::Error;
};

// Source/receiver placement outside the model grid.
struct GeometryError : Error {
  using Error::Error;
};

// Window or range request that does not fit the data.
struct RangeError : Error {
  using Error::Error;
};

// Gather too small for the requested patch, or similar sizing failure.
struct SizeError : Error {
  using Error::Error;
};

// Input that is degenerate for the requested statistic (all-zero gather,
// zero signal energy).
struct DegenerateInputError : Error {
  using Error::Error;
};

// On-disk format violation; the message names the offending field.
struct FormatError : Error {
  using Error::Error;
};

// Manifest parse or reference failure.
struct ManifestError : Error {
  using Error::Error;
};

// Training produced a non-finite loss.
struct TrainingDivergedError : Error {
  int epoch;
  TrainingDivergedError(const std::string& msg, int epoch_index)
      : Error(msg), epoch(epoch_index) {}
};

}  // namespace sdb
