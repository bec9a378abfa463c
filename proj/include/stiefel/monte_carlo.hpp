#pragma once

// Chunked Monte Carlo. Samples are split into fixed-size chunks, each chunk
// draws from its own engine derived from (seed, stream, chunk index), and the
// per-chunk accumulators are merged in chunk order. The result therefore
// depends only on (seed, stream, n_samples, chunk_size), never on how many
// workers ran the chunks.

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "stiefel/rng.hpp"

namespace stiefel {

using complex = std::complex<double>;

struct MCEstimate {
  complex value{0.0, 0.0};
  double stderr = 0.0;  // sample standard deviation / sqrt(n_samples)
  std::size_t n_samples = 0;
  std::size_t rejected = 0;
  bool degenerate = false;  // kernel vanishes identically; value is exactly 0
};

struct McOptions {
  std::size_t chunk_size = 4096;
  unsigned workers = 0;  // 0: one per hardware thread
  double max_reject_rate = 1e-6;
};

McOptions& default_mc_options();

// Running mean / sum of squared deviations of a complex channel.
struct Accumulator {
  std::size_t count = 0;
  complex mean{0.0, 0.0};
  double m2 = 0.0;

  void add(complex x) {
    ++count;
    const complex d = x - mean;
    mean += d / static_cast<double>(count);
    m2 += std::real(std::conj(d) * (x - mean));
  }
  void merge(const Accumulator& o);
  MCEstimate estimate() const;
};

template <std::size_t K>
struct SampleValues {
  std::array<complex, K> values{};
  std::array<double, 2> aux{};  // max-reduced side channels (pathwise residuals)
  bool rejected = false;
};

template <std::size_t K>
struct MultiEstimate {
  std::array<MCEstimate, K> estimates{};
  std::array<double, 2> aux_max{};
  std::size_t rejected = 0;
};

namespace detail {
// Runs body(chunk) for chunk in [0, n_chunks) on the requested workers.
void parallel_chunks(std::size_t n_chunks, unsigned workers,
                     const std::function<void(std::size_t)>& body);
unsigned resolve_workers(unsigned requested);
void check_rejections(std::size_t rejected, std::size_t n, double max_rate);
}  // namespace detail

template <std::size_t K, class Fn>
MultiEstimate<K> monte_carlo_multi(std::size_t n_samples, const SeededRng& rng,
                                   Fn&& fn, const McOptions& opt = default_mc_options()) {
  struct Chunk {
    std::array<Accumulator, K> acc{};
    std::array<double, 2> aux{};
    std::size_t rejected = 0;
  };
  const std::size_t chunk = opt.chunk_size == 0 ? 4096 : opt.chunk_size;
  const std::size_t n_chunks = (n_samples + chunk - 1) / chunk;
  std::vector<Chunk> chunks(n_chunks);
  detail::parallel_chunks(n_chunks, opt.workers, [&](std::size_t c) {
    Engine engine = rng.engine_for_chunk(c);
    const std::size_t begin = c * chunk;
    const std::size_t end = std::min(n_samples, begin + chunk);
    Chunk& out = chunks[c];
    for (std::size_t i = begin; i < end; ++i) {
      const SampleValues<K> s = fn(engine);
      if (s.rejected) {
        ++out.rejected;
        continue;
      }
      for (std::size_t q = 0; q < K; ++q) out.acc[q].add(s.values[q]);
      for (std::size_t a = 0; a < 2; ++a) out.aux[a] = std::max(out.aux[a], s.aux[a]);
    }
  });
  std::array<Accumulator, K> total{};
  MultiEstimate<K> result;
  for (const Chunk& c : chunks) {
    for (std::size_t q = 0; q < K; ++q) total[q].merge(c.acc[q]);
    for (std::size_t a = 0; a < 2; ++a) result.aux_max[a] = std::max(result.aux_max[a], c.aux[a]);
    result.rejected += c.rejected;
  }
  detail::check_rejections(result.rejected, n_samples, opt.max_reject_rate);
  for (std::size_t q = 0; q < K; ++q) {
    result.estimates[q] = total[q].estimate();
    result.estimates[q].rejected = result.rejected;
  }
  return result;
}

/// Single-channel convenience wrapper. fn(engine) returns the integrand value,
/// or std::nullopt-like rejection through SampleValues<1>.
template <class Fn>
MCEstimate monte_carlo(std::size_t n_samples, const SeededRng& rng, Fn&& fn,
                       const McOptions& opt = default_mc_options()) {
  auto wrapped = [&fn](Engine& e) {
    SampleValues<1> s;
    s.values[0] = fn(e);
    return s;
  };
  return monte_carlo_multi<1>(n_samples, rng, wrapped, opt).estimates[0];
}

// Distance |value - reference| in units of stderr; a zero-variance estimate
// that agrees to 1e-12 (relative to max(1, |reference|)) has distance 0.
double sigma_distance(complex value, complex reference, double stderr);

}  // namespace stiefel
