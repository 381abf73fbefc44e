#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>

#include "qcss/css.hpp"

namespace qcss {

/// Memoryless Pauli channel: each qubit independently I, X, Y or Z.
struct ChannelSpec {
  enum class Kind { kPauli, kDepolarizing };
  Kind kind = Kind::kPauli;
  double p_i = 1, p_x = 0, p_y = 0, p_z = 0;

  static ChannelSpec depolarizing(double p);
  static ChannelSpec pauli(double px, double py, double pz);
  /// Total error probability 1 - p_I.
  double p() const { return 1 - p_i; }
  std::string describe() const;
};

/// Per-trial generator: mt19937_64 seeded from (seed, trial) so that every trial
/// draws the same stream regardless of which thread runs it.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

PauliError sample_error(const ChannelSpec& ch, std::size_t n, std::mt19937_64& rng);

struct TrialReport {
  std::uint64_t trials = 0, successes = 0, decode_failures = 0, logical_errors = 0;
  double p = 0;
  std::uint64_t seed = 0;
  std::string channel;

  double logical_rate() const { return trials ? static_cast<double>(logical_errors) / trials : 0.0; }
  friend bool operator==(const TrialReport&, const TrialReport&) = default;
};

/// Sample, extract the syndrome, decode and classify each trial. workers = 0 uses worker_count().
TrialReport monte_carlo(const CssCode& code, const ChannelSpec& ch, std::uint64_t trials, std::uint64_t seed,
                        std::size_t workers = 0);

}  // namespace qcss
