#pragma once

#include <concepts>
#include <cstdint>
#include <random>

namespace boxplan {

// Uniform sampling interface shared by the stochastic operators. The engine
// uses Rng below; tests may substitute deterministic samplers.
template <class R>
concept UniformSampler = requires(R r, double lo, double hi, std::size_t n) {
  { r.uniform01() } -> std::convertible_to<double>;
  { r.uniform(lo, hi) } -> std::convertible_to<double>;
  { r.uniform_index(n) } -> std::convertible_to<std::size_t>;
};

// Seeded generator with explicit output mappings, so identical seeds give
// identical streams on every platform (mt19937_64 output is standardized).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // [0, 1)
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // [lo, hi)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // {0, 1, ..., n-1}; n must be positive
  std::size_t uniform_index(std::size_t n) {
    return static_cast<std::size_t>(gen_() % n);
  }

 private:
  std::mt19937_64 gen_;
};

static_assert(UniformSampler<Rng>);

// Stateless seed mixer (splitmix64 finalizer). Used to derive independent
// per-step and per-retry seeds from a run seed.
constexpr std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace boxplan
