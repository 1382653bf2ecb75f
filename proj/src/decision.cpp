#include "coxbound/decision.hpp"

#include "coxbound/ball.hpp"
#include "coxbound/error.hpp"
#include "coxbound/parabolic.hpp"
#include "coxbound/racg.hpp"
#include "coxbound/scan.hpp"

namespace coxbound::decision {

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Scrambled: return "Scrambled";
    case Outcome::NotScrambled: return "NotScrambled";
    case Outcome::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string to_string(BoundarySize size) {
  switch (size) {
    case BoundarySize::Empty: return "empty";
    case BoundarySize::TwoPoints: return "two-points";
    case BoundarySize::MoreThanTwo: return "more-than-two";
    case BoundarySize::Undetermined: return "undetermined";
  }
  return "undetermined";
}

BoundarySize boundary_size_class(const CoxeterSystem& system) {
  const GeneratorSet tilde = tilde_S(system);
  if (tilde.empty()) return BoundarySize::Empty;
  if (tilde.size() == 2) {
    const Generator a = tilde.min();
    const Generator b = (tilde - GeneratorSet::single(a)).min();
    if (is_infinite(system.m(a, b))) return BoundarySize::TwoPoints;
  }
  return system.right_angled() ? BoundarySize::MoreThanTwo : BoundarySize::Undetermined;
}

std::optional<std::pair<GeneratorSet, GeneratorSet>> product_obstruction(const CoxeterSystem& system) {
  GeneratorSet first;
  GeneratorSet rest;
  for (GeneratorSet component : irreducible_components(system)) {
    if (finite_type(system, component)) continue;
    if (first.empty()) {
      first = component;
    } else {
      rest = rest | component;
    }
  }
  if (first.empty() || rest.empty()) return std::nullopt;
  return std::make_pair(first, rest);
}

Verdict decide_scrambled_racg(const CoxeterSystem& system) {
  racg::require_right_angled(system);
  if (boundary_size_class(system) != BoundarySize::MoreThanTwo) {
    return {Outcome::NotScrambled, BoundaryTooSmall{}};
  }
  const GeneratorSet tilde = tilde_S(system);
  if (racg::free_graph_connected(system, tilde)) return {Outcome::Scrambled, IrreducibleTilde{tilde}};
  // S̃ is a union of at least two infinite components.
  const auto split = product_obstruction(system);
  return {Outcome::NotScrambled, ProductObstruction{split->first, split->second}};
}

Verdict decide(const CoxeterSystem& system) {
  if (system.right_angled()) return decide_scrambled_racg(system);
  const BoundarySize size = boundary_size_class(system);
  if (size == BoundarySize::Empty || size == BoundarySize::TwoPoints) {
    return {Outcome::NotScrambled, BoundaryTooSmall{}};
  }
  if (const auto split = product_obstruction(system)) {
    return {Outcome::NotScrambled, ProductObstruction{split->first, split->second}};
  }
  return {Outcome::Unknown,
          OutOfScope{"not right-angled: no product obstruction, and the scrambling criteria need a "
                     "certified boundary size and centralizer"}};
}

std::optional<Generator> reflection_criterion(const CoxeterSystem& system) {
  if (!system.right_angled()) return std::nullopt;
  for (Generator s = 0; s < static_cast<Generator>(system.rank()); ++s) {
    if (racg::generator_centralizer_finite(system, s)) return s;
  }
  return std::nullopt;
}

bool expansiveness_racg(const CoxeterSystem& system) {
  racg::require_right_angled(system);
  if (boundary_size_class(system) != BoundarySize::MoreThanTwo) {
    throw Error(ErrorKind::BoundaryTooSmall, "expansiveness needs more than two boundary points");
  }
  return racg::is_hyperbolic_racg(system);
}

UniformDescentCheck check_uniform_descent(const CoxeterSystem& system, Generator s0, Generator t0,
                                          std::size_t bound, std::size_t radius, sim::Execution exec) {
  check_word(system, Word{s0, t0});
  if (!is_infinite(system.m(s0, t0))) {
    throw Error(ErrorKind::OrderNotInfinite,
                "m(" + system.label(s0) + "," + system.label(t0) + ") = " + format_order(system.m(s0, t0)));
  }
  const std::vector<Word> elements = ball(system, radius);
  const std::vector<Word> candidates = ball(system, bound);
  const std::vector<std::int64_t> hits = exec == sim::Execution::Serial
                                             ? scan::descent_witnesses_serial(system, elements, candidates, s0)
                                             : scan::descent_witnesses_parallel(system, elements, candidates, s0);
  UniformDescentCheck check;
  check.holds = true;
  check.witnesses.reserve(hits.size());
  for (std::size_t k = 0; k < hits.size(); ++k) {
    const auto [i, j] = scan::pair_at(elements.size(), k);
    DescentWitness entry{elements[i], elements[j], {}, hits[k] != scan::kNoWitness};
    if (entry.found) {
      entry.x = candidates[static_cast<std::size_t>(hits[k])];
    } else {
      check.holds = false;
    }
    check.witnesses.push_back(std::move(entry));
  }
  return check;
}

namespace {

bool commute_across(const CoxeterSystem& system, GeneratorSet a, GeneratorSet b) {
  for (Generator s : a) {
    for (Generator t : b) {
      if (system.m(s, t) != 2) return false;
    }
  }
  return true;
}

struct CertificateCheck {
  const CoxeterSystem& system;
  Outcome outcome;

  bool operator()(const IrreducibleTilde& c) const {
    if (outcome != Outcome::Scrambled || c.tilde != tilde_S(system)) return false;
    if (boundary_size_class(system) != BoundarySize::MoreThanTwo) return false;
    return system.right_angled() ? racg::free_graph_connected(system, c.tilde)
                                 : components_of(system, c.tilde).size() == 1;
  }
  bool operator()(const ProductObstruction& c) const {
    return outcome == Outcome::NotScrambled && !c.first.empty() && !c.second.empty() &&
           !c.first.intersects(c.second) && (c.first | c.second) == tilde_S(system) &&
           commute_across(system, c.first, c.second) && !is_spherical(system, c.first) &&
           !is_spherical(system, c.second);
  }
  bool operator()(const ReflectionCriterion& c) const {
    return outcome == Outcome::Scrambled && system.right_angled() &&
           boundary_size_class(system) == BoundarySize::MoreThanTwo &&
           racg::generator_centralizer_finite(system, c.s);
  }
  bool operator()(const UniformDescentWitness& c) const {
    return outcome == Outcome::Scrambled && boundary_size_class(system) == BoundarySize::MoreThanTwo &&
           check_uniform_descent(system, c.s0, c.t0, c.bound, c.radius).holds;
  }
  bool operator()(const BoundaryTooSmall&) const {
    const BoundarySize size = boundary_size_class(system);
    return outcome == Outcome::NotScrambled && (size == BoundarySize::Empty || size == BoundarySize::TwoPoints);
  }
  bool operator()(const OutOfScope&) const { return outcome == Outcome::Unknown; }
};

}  // namespace

bool certificate_valid(const CoxeterSystem& system, const Verdict& verdict) {
  return std::visit(CertificateCheck{system, verdict.outcome}, verdict.certificate);
}

}  // namespace coxbound::decision
