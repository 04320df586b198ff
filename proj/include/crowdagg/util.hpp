#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace crowdagg {

using Vec = std::vector<double>;

// SplitMix64 step; advances state and returns the next value.
std::uint64_t splitmix64(std::uint64_t& state);

// Derives an independent seed for a named stream from a base seed.
// Identical (seed, stream) pairs always yield the same value.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

// FNV-1a string hash. Stable across platforms, unlike std::hash.
std::uint64_t fnv1a64(const std::string& s);

std::mt19937_64 make_rng(std::uint64_t seed);

// log(sum_i exp(x_i)); tolerates -inf entries, returns -inf for empty input.
double logsumexp(const std::vector<double>& xs);

double dot(const Vec& a, const Vec& b);
double squared_distance(const Vec& a, const Vec& b);

std::string trim(const std::string& s);
std::vector<std::string> split(const std::string& s, char sep);

}  // namespace crowdagg
