#pragma once

// Verdicts on whether the boundary of a Coxeter system is a scrambled set,
// each carrying a certificate that can be re-checked independently.

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "coxbound/boundary.hpp"
#include "coxbound/system.hpp"

namespace coxbound::decision {

enum class Outcome { Scrambled, NotScrambled, Unknown };

/// (W_S̃, S̃) is irreducible.
struct IrreducibleTilde {
  GeneratorSet tilde;
};
/// W_S̃ = W_first × W_second with both factors infinite.
struct ProductObstruction {
  GeneratorSet first;
  GeneratorSet second;
};
/// The centralizer of the reflection s is finite.
struct ReflectionCriterion {
  Generator s;
};
/// m(s0,t0) = ∞ and every pair of elements of length <= radius is pushed into
/// W^{s0} by a common x of length <= bound.
struct UniformDescentWitness {
  Generator s0;
  Generator t0;
  std::size_t bound;
  std::size_t radius;
};
/// Finite group or two-point boundary.
struct BoundaryTooSmall {};
struct OutOfScope {
  std::string reason;
};

using Certificate = std::variant<IrreducibleTilde, ProductObstruction, ReflectionCriterion, UniformDescentWitness,
                                 BoundaryTooSmall, OutOfScope>;

struct Verdict {
  Outcome outcome;
  Certificate certificate;
};

std::string to_string(Outcome outcome);

enum class BoundarySize {
  Empty,        // W finite
  TwoPoints,    // W_S̃ is an infinite dihedral group
  MoreThanTwo,
  Undetermined  // not right-angled and neither of the first two cases
};

std::string to_string(BoundarySize size);

BoundarySize boundary_size_class(const CoxeterSystem& system);

/// Decision for right-angled systems (throws NotRightAngled otherwise).
/// BoundaryTooSmall unless the boundary has more than two points; then
/// Scrambled with IrreducibleTilde when the ∞-graph on S̃ is connected, else
/// NotScrambled with ProductObstruction(one infinite component, the rest of S̃).
Verdict decide_scrambled_racg(const CoxeterSystem& system);

/// Decision for any system. Right-angled systems go through
/// decide_scrambled_racg. Otherwise only the sufficient product obstruction
/// is available and anything else is Unknown with OutOfScope.
Verdict decide(const CoxeterSystem& system);

/// Smallest s whose centralizer is finite by the right-angled link test;
/// nullopt for non-right-angled systems.
std::optional<Generator> reflection_criterion(const CoxeterSystem& system);

/// A split of S̃ into two unions of irreducible components, both infinite.
/// The first part is the component containing the smallest generator of S̃.
std::optional<std::pair<GeneratorSet, GeneratorSet>> product_obstruction(const CoxeterSystem& system);

/// is_hyperbolic_racg, defined when the boundary has more than two points.
/// Throws BoundaryTooSmall / NotRightAngled.
bool expansiveness_racg(const CoxeterSystem& system);

struct DescentWitness {
  Word w;
  Word v;
  Word x;  // empty when no x was found
  bool found = false;
};

struct UniformDescentCheck {
  bool holds = false;
  std::vector<DescentWitness> witnesses;  // one per unordered pair w <= v
};

/// Bounded check of: for every w, v of length <= radius there is x with
/// ℓ(x) <= bound and descent_set(wx) = descent_set(vx) = {s0}. Candidates x
/// are tried in shortlex order. Throws OrderNotInfinite unless m(s0,t0) = ∞.
UniformDescentCheck check_uniform_descent(const CoxeterSystem& system, Generator s0, Generator t0,
                                          std::size_t bound, std::size_t radius,
                                          sim::Execution exec = sim::Execution::Parallel);

/// Re-validates a certificate from scratch against the system.
bool certificate_valid(const CoxeterSystem& system, const Verdict& verdict);

}  // namespace coxbound::decision
