#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace tl {

// mt19937_64 raw output is pinned by the C++ standard, so raw draws are
// portable across platforms. Standard distributions are not; every bounded
// or real draw below is derived from raw output by hand.
using Rng = std::mt19937_64;

/// Independent per-(topic, purpose) stream: the run seed is mixed with the
/// topic id and a purpose label through splitmix64, so per-topic sampling
/// does not depend on topic processing order.
Rng make_stream(std::uint64_t seed, std::int64_t topic_id, std::string_view purpose);

/// Uniform integer in [0, n), n >= 1. Rejection sampling on raw draws.
std::uint64_t bounded_uniform(Rng& rng, std::uint64_t n);

/// Uniform real in [0, 1) with 53 random bits.
double uniform01(Rng& rng);

/// k distinct indices drawn uniformly from [0, pool) via partial
/// Fisher-Yates. Returned in draw order.
std::vector<std::size_t> sample_without_replacement(std::size_t pool, std::size_t k, Rng& rng);

} // namespace tl
