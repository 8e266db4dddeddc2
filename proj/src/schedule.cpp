#include "bayesext/schedule.hpp"

#include "bayesext/cantor.hpp"

namespace bayesext {

Element schedule_element(const ExtensionTower& tower, std::uint64_t k, std::uint64_t l) {
  const FiniteBooleanAlgebra& alg = tower.algebra(k);
  const std::size_t m = alg.size();
  AtomSet bits(m);
  for (std::size_t i = 0; i < m && i < 64; ++i) {
    if ((l >> i) & 1U) bits.set(i);
  }
  return alg.from_bits(std::move(bits));
}

Element schedule_next(const ExtensionTower& tower) {
  const std::uint64_t n = tower.latest_index();
  const auto [k, l] = cantor_unpair(n);
  return tower.psi(k, n, schedule_element(tower, k, l));
}

void run_schedule(ExtensionTower& tower, std::size_t steps) {
  for (std::size_t i = 0; i < steps; ++i) tower.extend(schedule_next(tower));
}

}  // namespace bayesext
