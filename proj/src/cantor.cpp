#include "bayesext/cantor.hpp"

#include <cmath>

#include "bayesext/error.hpp"

namespace bayesext {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && (r > n / r)) --r;  // r*r > n
  while ((r + 1) <= n / (r + 1)) ++r;  // (r+1)^2 <= n
  return r;
}

}  // namespace

std::uint64_t cantor_pair(std::uint64_t i, std::uint64_t j) {
  const unsigned __int128 w = static_cast<unsigned __int128>(i) + j;
  const unsigned __int128 n = w * (w + 1) / 2 + i;
  if (n > UINT64_MAX) throw DomainError("cantor_pair overflows 64 bits");
  return static_cast<std::uint64_t>(n);
}

std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t n) {
  // w = floor((sqrt(8n+1) - 1) / 2), computed in integers.
  const unsigned __int128 disc = static_cast<unsigned __int128>(n) * 8 + 1;
  std::uint64_t s;
  if (disc > UINT64_MAX) {
    // 8n+1 beyond 64 bits: sqrt(8n+1) ~ 2*sqrt(2n), refine below.
    s = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(disc)));
    while (static_cast<unsigned __int128>(s) * s > disc) --s;
    while (static_cast<unsigned __int128>(s + 1) * (s + 1) <= disc) ++s;
  } else {
    s = isqrt(static_cast<std::uint64_t>(disc));
  }
  const std::uint64_t w = (s - 1) / 2;
  const unsigned __int128 t = static_cast<unsigned __int128>(w) * (w + 1) / 2;
  const auto i = static_cast<std::uint64_t>(n - t);
  return {i, w - i};
}

}  // namespace bayesext
