#pragma once

#include <cstdint>
#include <random>

namespace daml {

using Rng = std::mt19937_64;

// Named substreams so that independent consumers of one seed never share draws.
enum class Stream : std::uint32_t {
  kTruthInit = 1,
  kObsIndices = 2,
  kObsNoise = 3,
  kEnsembleInit = 4,
  kModelNoise = 5,
  kWeightInit = 6,
  kBatchShuffle = 7,
  kEvaluation = 8,
};

inline Rng make_rng(std::uint64_t seed, Stream stream, std::uint64_t salt = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(salt),
                    static_cast<std::uint32_t>(salt >> 32)};
  return Rng(seq);
}

}  // namespace daml
