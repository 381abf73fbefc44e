#include "qcss/channel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "qcss/errors.hpp"
#include "qcss/parallel.hpp"

namespace qcss {

namespace {

void validate(const ChannelSpec& ch) {
  for (double v : {ch.p_i, ch.p_x, ch.p_y, ch.p_z}) {
    if (!(v >= 0 && v <= 1)) throw InvalidInput("channel: probabilities must lie in [0, 1]");
  }
  if (std::abs(ch.p_i + ch.p_x + ch.p_y + ch.p_z - 1) > 1e-12) throw InvalidInput("channel: probabilities must sum to 1");
}

// uniform double in [0, 1) from the top 53 bits
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

ChannelSpec ChannelSpec::depolarizing(double p) {
  ChannelSpec ch{Kind::kDepolarizing, 1 - p, p / 3, p / 3, p / 3};
  validate(ch);
  return ch;
}

ChannelSpec ChannelSpec::pauli(double px, double py, double pz) {
  ChannelSpec ch{Kind::kPauli, 1 - px - py - pz, px, py, pz};
  validate(ch);
  return ch;
}

std::string ChannelSpec::describe() const {
  std::ostringstream os;
  if (kind == Kind::kDepolarizing) {
    os << "depolarizing(p=" << p() << ")";
  } else {
    os << "pauli(px=" << p_x << ",py=" << p_y << ",pz=" << p_z << ")";
  }
  return os.str();
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

PauliError sample_error(const ChannelSpec& ch, std::size_t n, std::mt19937_64& rng) {
  PauliError e(n);
  const double cx = ch.p_x, cy = cx + ch.p_y, cz = cy + ch.p_z;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = unit(rng);
    if (u < cx) {
      e.x.set(i);
    } else if (u < cy) {
      e.x.set(i);
      e.z.set(i);
    } else if (u < cz) {
      e.z.set(i);
    }
  }
  return e;
}

TrialReport monte_carlo(const CssCode& code, const ChannelSpec& ch, std::uint64_t trials, std::uint64_t seed,
                        std::size_t workers) {
  if (trials == 0) throw InvalidInput("monte_carlo: need at least one trial");
  validate(ch);
  // fixed-size chunks by trial index; counts are summed, so the result ignores scheduling
  constexpr std::uint64_t kChunk = 1024;
  const std::size_t chunks = static_cast<std::size_t>((trials + kChunk - 1) / kChunk);
  std::vector<TrialReport> part(chunks);
  parallel_for(
      chunks,
      [&](std::size_t c) {
        TrialReport& r = part[c];
        const std::uint64_t end = std::min(trials, (c + 1) * kChunk);
        for (std::uint64_t t = c * kChunk; t < end; ++t) {
          auto rng = trial_rng(seed, t);
          const PauliError e = sample_error(ch, code.n(), rng);
          const auto res = decode(code, syndrome(code, e));
          ++r.trials;
          if (!res.estimate) {
            ++r.decode_failures;
          } else if (residual_is_logical(code, e, *res.estimate)) {
            ++r.logical_errors;
          } else {
            ++r.successes;
          }
        }
      },
      workers == 0 ? worker_count() : workers);

  TrialReport out;
  out.p = ch.p();
  out.seed = seed;
  out.channel = ch.describe();
  for (const auto& r : part) {
    out.trials += r.trials;
    out.successes += r.successes;
    out.decode_failures += r.decode_failures;
    out.logical_errors += r.logical_errors;
  }
  return out;
}

}  // namespace qcss
