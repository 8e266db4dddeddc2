#pragma once

#include <cstdint>

#include "bayesext/boolalg.hpp"
#include "bayesext/tower.hpp"

namespace bayesext {

/// u(k, l): the element of stage k whose atom set is the bit pattern of l, cycling
/// through all elements of the stage as l grows.
Element schedule_element(const ExtensionTower& tower, std::uint64_t k, std::uint64_t l);

/// b_n = psi_{k,n}(u(k, l)) with (k, l) = cantor_unpair(n) and n the latest stage index.
Element schedule_next(const ExtensionTower& tower);

/// Extends the tower `steps` times on the Cantor schedule.
void run_schedule(ExtensionTower& tower, std::size_t steps);

}  // namespace bayesext
