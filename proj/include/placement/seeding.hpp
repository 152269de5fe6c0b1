#pragma once

#include <cstdint>
#include <string_view>

#include "placement/browsing.hpp"

namespace placement {

// Default seed for every entry point that takes one.
inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Seed for the named sub-stream `stream` (e.g. "placement", "estimation")
/// and counter `index` derived from a root seed. Distinct (stream, index)
/// pairs give statistically independent generators.
std::uint64_t derive_seed(std::uint64_t root, std::string_view stream,
                          std::uint64_t index = 0);

/// Generator for a derived sub-stream.
Rng make_rng(std::uint64_t root, std::string_view stream, std::uint64_t index = 0);

}  // namespace placement
