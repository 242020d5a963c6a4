#include "easm/rng.hpp"

#include <stdexcept>

namespace easm {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng Rng::for_stream(std::uint64_t run_seed, Stream stream) {
  return Rng(splitmix64(splitmix64(run_seed) ^ static_cast<std::uint64_t>(stream)));
}

std::size_t Rng::pick(std::size_t n) {
  if (n == 0) throw std::invalid_argument("Rng::pick: empty range");
  const auto i = static_cast<std::size_t>(uniform() * static_cast<double>(n));
  return i < n ? i : n - 1;
}

}  // namespace easm
