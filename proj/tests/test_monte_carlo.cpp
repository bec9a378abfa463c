#include <doctest.h>

#include <cmath>
#include <random>

#include "stiefel/error.hpp"
#include "stiefel/monte_carlo.hpp"

using namespace stiefel;

namespace {

MCEstimate uniform_mean(unsigned workers, std::size_t n, std::size_t chunk = 1000) {
  McOptions opt;
  opt.workers = workers;
  opt.chunk_size = chunk;
  return monte_carlo(
      n, SeededRng(42, 7),
      [](Engine& e) {
        std::uniform_real_distribution<double> u(0.0, 1.0);
        return complex(u(e), 0.0);
      },
      opt);
}

}  // namespace

TEST_CASE("results do not depend on the worker count") {
  const MCEstimate a = uniform_mean(1, 20'500);
  const MCEstimate b = uniform_mean(3, 20'500);
  const MCEstimate c = uniform_mean(8, 20'500);
  CHECK(a.value == b.value);
  CHECK(a.value == c.value);
  CHECK(a.stderr == b.stderr);
  CHECK(a.n_samples == 20'500);
  CHECK(std::abs(a.value.real() - 0.5) < 5 * a.stderr);
  CHECK(a.stderr == doctest::Approx(std::sqrt(1.0 / 12.0 / 20'500)).epsilon(0.02));
}

TEST_CASE("chunked accumulation matches a single pass") {
  Accumulator whole, left, right;
  const double xs[] = {0.3, -1.2, 4.0, 2.5, 0.0, 7.1, -3.3};
  for (int i = 0; i < 7; ++i) {
    whole.add(xs[i]);
    (i < 3 ? left : right).add(xs[i]);
  }
  left.merge(right);
  CHECK(left.count == whole.count);
  CHECK(std::abs(left.mean - whole.mean) < 1e-14);
  CHECK(left.m2 == doctest::Approx(whole.m2).epsilon(1e-13));
}

TEST_CASE("seed streams") {
  const SeededRng r(1, 2);
  Engine a = r.engine_for_chunk(0);
  Engine b = r.engine_for_chunk(1);
  Engine c = r.substream(5).engine();
  Engine d = SeededRng(1, 2).engine_for_chunk(0);
  const auto x = a();
  CHECK(x != b());
  CHECK(x != c());
  CHECK(x == d());
  CHECK(splitmix64(0) != splitmix64(1));
}

TEST_CASE("sigma distance") {
  CHECK(sigma_distance(1.0, 1.0, 0.0) == 0.0);
  CHECK(sigma_distance(1.0 + 1e-14, 1.0, 0.0) == 0.0);
  CHECK(std::isinf(sigma_distance(1.1, 1.0, 0.0)));
  CHECK(sigma_distance(1.3, 1.0, 0.1) == doctest::Approx(3.0));
  CHECK(sigma_distance(complex(1.0, 0.4), complex(1.0, 0.0), 0.2) == doctest::Approx(2.0));
}

TEST_CASE("rejection cap") {
  McOptions opt;
  opt.workers = 1;
  auto body = [](Engine& e) {
    SampleValues<1> s;
    s.values[0] = 1.0;
    s.rejected = (e() % 100) == 0;
    return s;
  };
  CHECK_THROWS_AS(monte_carlo_multi<1>(10'000, SeededRng(3), body, opt), SingularKernelError);
  opt.max_reject_rate = 0.05;
  const auto ok = monte_carlo_multi<1>(10'000, SeededRng(3), body, opt);
  CHECK(ok.rejected > 0);
  CHECK(ok.estimates[0].value == complex(1.0, 0.0));
  CHECK(ok.estimates[0].n_samples + ok.rejected == 10'000);
}
