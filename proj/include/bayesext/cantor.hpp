#pragma once

#include <cstdint>
#include <utility>

namespace bayesext {

/// gamma(i, j) = (i+j)(i+j+1)/2 + i. Throws DomainError on 64-bit overflow.
std::uint64_t cantor_pair(std::uint64_t i, std::uint64_t j);

/// Inverse of cantor_pair.
std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t n);

/// First component of the inverse, the stage index c(n) used by the schedule; c(n) <= n.
inline std::uint64_t cantor_first(std::uint64_t n) { return cantor_unpair(n).first; }

}  // namespace bayesext
