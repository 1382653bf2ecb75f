#pragma once

// Parabolic subgroups: irreducible decomposition, finite-type recognition,
// and the union of the infinite irreducible components.

#include <optional>
#include <string>
#include <vector>

#include "coxbound/system.hpp"

namespace coxbound {

/// Connected components of the Coxeter diagram restricted to `subset`
/// (edges are pairs with m >= 3, ∞ included), ordered by smallest member.
std::vector<GeneratorSet> components_of(const CoxeterSystem& system, GeneratorSet subset);

/// Irreducible components of the whole system.
std::vector<GeneratorSet> irreducible_components(const CoxeterSystem& system);

/// Name of the finite irreducible type ("A3", "B4", "D5", "E6", "F4", "H3",
/// "I2(8)", ...) of a connected diagram, or nullopt when W_component is infinite.
/// `component` must be connected in the Coxeter diagram.
std::optional<std::string> finite_type(const CoxeterSystem& system, GeneratorSet component);

/// W_subset is finite, i.e. every irreducible component of `subset` is one of
/// A_n, B_n, D_n, E_6..8, F_4, H_3, H_4, I_2(m). The empty set is spherical.
bool is_spherical(const CoxeterSystem& system, GeneratorSet subset);

/// Union of the irreducible components whose parabolic subgroup is infinite.
GeneratorSet tilde_S(const CoxeterSystem& system);

}  // namespace coxbound
