#include "coxbound/ball.hpp"

#include <algorithm>
#include <set>

#include "coxbound/word.hpp"

namespace coxbound {

std::vector<racg::NormalForm> ball_racg(const CoxeterSystem& system, std::size_t radius) {
  racg::require_right_angled(system);
  std::vector<racg::NormalForm> out{racg::NormalForm{}};
  std::size_t layer_begin = 0;
  for (std::size_t k = 0; k < radius; ++k) {
    const std::size_t layer_end = out.size();
    std::set<racg::NormalForm> next;
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      const GeneratorSet ascents = system.all() - out[i].descents();
      for (Generator s : ascents) next.insert(racg::nf_append(system, out[i], s));
    }
    if (next.empty()) break;
    out.insert(out.end(), next.begin(), next.end());
    layer_begin = layer_end;
  }
  return out;
}

std::vector<Word> ball(const CoxeterSystem& system, std::size_t radius) {
  if (system.right_angled()) {
    std::vector<Word> out;
    for (const auto& element : ball_racg(system, radius)) out.push_back(element.word());
    return out;
  }
  std::vector<Word> out{Word{}};
  std::size_t layer_begin = 0;
  for (std::size_t k = 0; k < radius; ++k) {
    const std::size_t layer_end = out.size();
    std::set<Word> next;
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      const GeneratorSet ascents = system.all() - descent_set(system, out[i]);
      for (Generator s : ascents) {
        Word longer = out[i];
        longer.push_back(s);
        next.insert(reduce(system, longer));
      }
    }
    if (next.empty()) break;
    out.insert(out.end(), next.begin(), next.end());
    layer_begin = layer_end;
  }
  return out;
}

}  // namespace coxbound
