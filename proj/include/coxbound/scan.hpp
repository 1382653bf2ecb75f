#pragma once

// Data-parallel kernels behind the ball scans. Each kernel has a serial
// reference and an OpenMP version; both must return identical results, which
// the test-suite checks and the benchmark compares for speed.

#include <cstdint>
#include <vector>

#include "coxbound/boundary.hpp"
#include "coxbound/dyadic.hpp"
#include "coxbound/system.hpp"

namespace coxbound::scan {

/// proxy_distance(g, a, b, depth) for every g in `elements`.
std::vector<Dyadic> proxy_distances_serial(const CoxeterSystem& system, const std::vector<Word>& elements,
                                           const sim::Ray& a, const sim::Ray& b, std::size_t depth);
std::vector<Dyadic> proxy_distances_parallel(const CoxeterSystem& system, const std::vector<Word>& elements,
                                             const sim::Ray& a, const sim::Ray& b, std::size_t depth);

inline constexpr std::int64_t kNoWitness = -1;

/// For each unordered pair (w_i, w_j), i <= j, of `elements` (flattened
/// row-major over the upper triangle), the index of the first candidate x with
/// descent_set(w_i x) = descent_set(w_j x) = {s0}, or kNoWitness.
std::vector<std::int64_t> descent_witnesses_serial(const CoxeterSystem& system, const std::vector<Word>& elements,
                                                   const std::vector<Word>& candidates, Generator s0);
std::vector<std::int64_t> descent_witnesses_parallel(const CoxeterSystem& system,
                                                     const std::vector<Word>& elements,
                                                     const std::vector<Word>& candidates, Generator s0);

/// Number of unordered pairs with repetition over n elements.
constexpr std::size_t pair_count(std::size_t n) { return n * (n + 1) / 2; }

/// The (i, j) pair at a flattened upper-triangle index.
std::pair<std::size_t, std::size_t> pair_at(std::size_t n, std::size_t index);

}  // namespace coxbound::scan
