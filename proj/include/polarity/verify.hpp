#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polarity/model.hpp"

namespace polarity {

/// Parameters shared by all verification suites. Suites ignore what they do not use.
struct VerifyParams {
  std::uint64_t seed = 1;
  /// Number of random instances; unset selects the suite default.
  std::optional<std::size_t> count;
  /// galois: enumerate every incidence relation up to max_a × max_b instead of sampling.
  bool exhaustive = false;
  std::size_t max_a = 4;
  std::size_t max_b = 4;
  /// axioms: sample serial frames only.
  bool serial_only = false;
  /// Frames (*.frame, *.model, *.lat) loaded in file-name order. galois checks only
  /// these; stability and axioms add them to their samples.
  std::optional<std::filesystem::path> frames_dir;
  /// Failures rendered in full; all failures are counted.
  std::size_t max_reported = 10;
};

struct CheckTally {
  std::size_t checked = 0;
  std::size_t failed = 0;
};

struct SuiteFailure {
  std::size_t instance = 0;
  std::string check;
  std::string detail;
  /// Replayable input in the file formats (frame/model/lattice/assignment/formulas).
  std::string witness;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t instances = 0;
  /// Keyed by check name; std::map keeps the rendering order stable.
  std::map<std::string, CheckTally> checks;
  std::vector<SuiteFailure> failures;
  std::size_t failure_count = 0;
  /// Set when a resource cap stopped the run; the tallies cover the finished part.
  std::optional<std::string> aborted;

  /// Records one check. `explain` runs only on failure and only while fewer than
  /// `limit` failures are stored.
  bool record(std::size_t instance, const std::string& check, bool ok,
              const std::function<SuiteFailure()>& explain = {}, std::size_t limit = 10);
  const CheckTally& tally(const std::string& check) const;
  bool passed() const noexcept { return failure_count == 0 && !aborted; }
  /// Deterministic line-oriented rendering (no timings).
  std::string render() const;
};

const std::vector<std::string>& suite_names();

/// Runs one suite. Throws UnknownNameError for an unknown suite name; resource caps
/// are reported through SuiteReport::aborted.
SuiteReport run_suite(std::string_view name, const VerifyParams& params);

/// Modal models on the canonical frames of every catalog lattice supporting `preset`:
/// `per_frame` random valuations of P_0..P_{p_vars-1}, Q_0..Q_{q_vars-1} each.
std::vector<ModalModel> catalog_model_family(std::string_view preset, std::size_t p_vars, std::size_t q_vars,
                                             std::size_t per_frame, std::uint64_t seed);

/// Frames read from a directory: *.frame, the frame of *.model, the canonical frame of
/// *.lat, in file-name order, each labelled by its file name.
std::vector<std::pair<std::string, SortedFrame>> load_frame_dir(const std::filesystem::path& dir);

}  // namespace polarity
