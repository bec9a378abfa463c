#include "stiefel/rng.hpp"

namespace stiefel {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

SeededRng SeededRng::substream(std::uint64_t id) const {
  return SeededRng(seed_, splitmix64(stream_ * 0x2545f4914f6cdd1dULL + id + 1));
}

Engine SeededRng::engine_for_chunk(std::uint64_t chunk) const {
  const std::uint64_t a = splitmix64(seed_);
  const std::uint64_t b = splitmix64(a ^ splitmix64(stream_ + 0x632be59bd9b4e019ULL));
  const std::uint64_t c = splitmix64(b ^ splitmix64(chunk + 0x8cb92ba72f3d8dd7ULL));
  std::seed_seq seq{static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(c >> 32),
                    static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
  return Engine(seq);
}

}  // namespace stiefel
