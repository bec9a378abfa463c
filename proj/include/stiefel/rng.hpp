#pragma once

#include <cstdint>
#include <random>

namespace stiefel {

using Engine = std::mt19937_64;

/// A (seed, stream) pair. Identical pairs reproduce identical draws; chunked
/// Monte Carlo derives one engine per chunk from the pair and the chunk index.
class SeededRng {
 public:
  SeededRng(std::uint64_t seed = 0, std::uint64_t stream = 0)  // NOLINT
      : seed_(seed), stream_(stream) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  // Independent child stream (used to give each side of an identity its own
  // draws).
  SeededRng substream(std::uint64_t id) const;

  Engine engine() const { return engine_for_chunk(0); }
  Engine engine_for_chunk(std::uint64_t chunk) const;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace stiefel
