#pragma once

namespace valnorm {

inline constexpr const char* kToolName = "valnorm";
inline constexpr const char* kToolVersion = "0.1.0";

// Pinned RNG contract, recorded in every report so Monte Carlo p-values
// are replayable.
inline constexpr const char* kRngAlgorithm =
    "mt19937_64(splitmix64(seed,stream)), rejection-sampled bounds";

}  // namespace valnorm
