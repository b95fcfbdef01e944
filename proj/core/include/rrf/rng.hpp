#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace rrf {

// Deterministic, splittable random stream (xoshiro256++ seeded via
// splitmix64). All sampling in the library goes through this type so that
// runs are bit-reproducible regardless of platform stdlib or thread count.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  // Uniform in [0, 1).
  double uniform();
  // Uniform in [lo, hi).
  double uniform(double lo, double hi);
  // Uniform integer in [0, n).
  std::uint64_t uniform_index(std::uint64_t n);
  // Standard normal via Box-Muller (one spare cached).
  double normal();
  void fill_normal(double* out, std::size_t n);

  // Child stream for parallel work items. Streams derived from distinct
  // ids are independent for practical purposes and stable across runs.
  Rng derive(std::uint64_t stream_id) const;

 private:
  std::uint64_t s_[4];
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace rrf
