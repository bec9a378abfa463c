#include "stiefel/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "stiefel/error.hpp"

namespace stiefel {

McOptions& default_mc_options() {
  static McOptions options;
  return options;
}

void Accumulator::merge(const Accumulator& o) {
  if (o.count == 0) return;
  if (count == 0) {
    *this = o;
    return;
  }
  const double na = static_cast<double>(count);
  const double nb = static_cast<double>(o.count);
  const complex d = o.mean - mean;
  const double n = na + nb;
  mean += d * (nb / n);
  m2 += o.m2 + std::norm(d) * na * nb / n;
  count += o.count;
}

MCEstimate Accumulator::estimate() const {
  MCEstimate e;
  e.value = mean;
  e.n_samples = count;
  if (count > 1) {
    e.stderr = std::sqrt(m2 / static_cast<double>(count - 1) /
                         static_cast<double>(count));
  }
  return e;
}

namespace detail {

unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_chunks(std::size_t n_chunks, unsigned workers,
                     const std::function<void(std::size_t)>& body) {
  const unsigned w = static_cast<unsigned>(
      std::min<std::size_t>(resolve_workers(workers), std::max<std::size_t>(n_chunks, 1)));
  if (w <= 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) body(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  pool.reserve(w);
  for (unsigned t = 0; t < w; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t c = next.fetch_add(1);
        if (c >= n_chunks || failed.load()) return;
        try {
          body(c);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

void check_rejections(std::size_t rejected, std::size_t n, double max_rate) {
  if (n == 0) return;
  if (static_cast<double>(rejected) > max_rate * static_cast<double>(n)) {
    throw SingularKernelError("singular kernel rejected " + std::to_string(rejected) +
                              " of " + std::to_string(n) + " samples");
  }
}

}  // namespace detail

double sigma_distance(complex value, complex reference, double stderr) {
  const double diff = std::abs(value - reference);
  const double floor = 1e-12 * std::max(1.0, std::abs(reference));
  if (diff <= floor) return 0.0;
  if (stderr <= 0.0) return std::numeric_limits<double>::infinity();
  return diff / stderr;
}

}  // namespace stiefel
