#pragma once

// Desk-scale model of the boundary action of a right-angled Coxeter group.
//
// A boundary point is represented by an eventually periodic infinite reduced
// word head·period·period·⋯ read from the identity. The distance between two
// boundary points seen from the identity is the proxy
//
//     Σ_{i=1..depth} min( d_ℓ(u_i, v_i), 2^-i )
//
// where u_i, v_i are the length-i prefixes of the two rays and d_ℓ is the word
// metric. This is a combinatorial stand-in for the CAT(0) visual metric on
// the Davis complex, not that metric itself.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "coxbound/dyadic.hpp"
#include "coxbound/racg.hpp"
#include "coxbound/system.hpp"

namespace coxbound::sim {

/// Printed alongside every simulation result.
inline constexpr const char* kProxyDisclaimer =
    "note: distances use a word-metric proxy of the boundary metric on eventually periodic rays; "
    "they are not the CAT(0) visual metric and prove nothing about it";

enum class Execution { Serial, Parallel };

struct Ray {
  Word head;
  Word period;
};

/// The first n letters of head·period·period·⋯ as a raw word.
Word ray_word(const Ray& ray, std::size_t n);

/// Whether every prefix of length <= horizon is reduced. Requires a
/// right-angled system and horizon >= ℓ(head) + 2ℓ(period) (HorizonTooSmall);
/// at that horizon the check is exact for the whole infinite word.
/// Throws InvalidRay for an empty period.
bool validate_ray(const CoxeterSystem& system, const Ray& ray, std::size_t horizon);

/// Minimal horizon accepted by validate_ray.
std::size_t minimal_horizon(const Ray& ray);

/// Normal form of the first n letters.
racg::NormalForm ray_prefix(const CoxeterSystem& system, const Ray& ray, std::size_t n);

/// The ray g·ray re-expressed with a reduced head and the same period.
Ray act(const CoxeterSystem& system, std::span<const Generator> g, const Ray& ray);

/// Prefixes u_1..u_depth of the ray from the identity towards g·ray.
///
/// The finite word g·(first N letters of the ray) is reduced, and only its
/// recurrent part is kept: the occurrences lying below the last period block
/// in the trace order. Occurrences above none of them commute with the whole
/// tail; they are a bounded offset orthogonal to the ray and would not be
/// crossed by a geodesic towards the boundary point. The u_i are the prefixes
/// of the normal form of that recurrent part.
///
/// N = depth + 2ℓ(g) + ℓ(head) + ℓ(period); the result must agree with the
/// one computed at N + ℓ(period), otherwise Unstable is thrown.
std::vector<racg::NormalForm> translate_ray(const CoxeterSystem& system, std::span<const Generator> g,
                                            const Ray& ray, std::size_t depth);

/// Proxy distance between g·rayA and g·rayB seen from the identity.
/// depth <= 62 (DepthTooLarge).
Dyadic proxy_distance(const CoxeterSystem& system, std::span<const Generator> g, const Ray& ray_a,
                      const Ray& ray_b, std::size_t depth);

/// Same sum for already translated prefixes.
Dyadic proxy_distance_of_prefixes(const CoxeterSystem& system, const std::vector<racg::NormalForm>& u,
                                  const std::vector<racg::NormalForm>& v);

struct MetricSeries {
  std::vector<std::pair<std::size_t, Dyadic>> entries;
};

/// g_k = (s0 t0)^k x^-1 for k = 1..k_max.
std::vector<Word> liminf_sequence(const CoxeterSystem& system, Generator s0, Generator t0,
                                  std::span<const Generator> x, std::size_t k_max);

/// Entry k is the distance between the rays seen from the base point g_k^-1,
/// i.e. proxy_distance(g_k, rayA, rayB). Requires m(s0,t0) = ∞ (OrderNotInfinite).
MetricSeries liminf_experiment(const CoxeterSystem& system, const Ray& ray_a, const Ray& ray_b, Generator s0,
                               Generator t0, std::span<const Generator> x, std::size_t k_max,
                               std::size_t depth, Execution exec = Execution::Parallel);

struct LiminfParameters {
  Generator s0 = 0;
  Generator t0 = 0;
  Word x;
};

/// Picks t0 as the smallest generator with m(s0,t0) = ∞ and x from joint_push
/// applied to the inverses of the length-`prefix_length` prefixes of the rays,
/// so that both x⁻¹·(prefix) have left descent set {s0}.
LiminfParameters derive_liminf_parameters(const CoxeterSystem& system, const Ray& ray_a, const Ray& ray_b,
                                          Generator s0, std::size_t prefix_length);

struct ScanResult {
  Dyadic value;
  Word witness;          // an element realising the value, first in shortlex order
  std::size_t elements = 0;
};

/// Maximum proxy distance over every g with ℓ(g) <= radius.
ScanResult limsup_scan(const CoxeterSystem& system, const Ray& ray_a, const Ray& ray_b, std::size_t radius,
                       std::size_t depth, Execution exec = Execution::Parallel);

/// Minimum proxy distance over every g with ℓ(g) <= radius.
ScanResult obstruction_scan(const CoxeterSystem& system, const Ray& ray_a, const Ray& ray_b, std::size_t radius,
                            std::size_t depth, Execution exec = Execution::Parallel);

enum class ScanKind { Max, Min };

/// Entry r is the max (or min) over the ball of radius r, for r = 0..radius.
MetricSeries scan_profile(const CoxeterSystem& system, const Ray& ray_a, const Ray& ray_b, std::size_t radius,
                          std::size_t depth, ScanKind kind, Execution exec = Execution::Parallel);

}  // namespace coxbound::sim
