#pragma once

#include <vector>

#include "coxbound/racg.hpp"
#include "coxbound/system.hpp"

namespace coxbound {

/// Canonical words of every element of length <= radius, in shortlex order.
/// Works for any Coxeter system; right-angled systems use normal forms.
std::vector<Word> ball(const CoxeterSystem& system, std::size_t radius);

/// Right-angled ball as normal forms (descents cached), in shortlex order.
std::vector<racg::NormalForm> ball_racg(const CoxeterSystem& system, std::size_t radius);

}  // namespace coxbound
