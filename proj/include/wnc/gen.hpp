#pragma once

#include <cstdint>

#include "wnc/core.hpp"

namespace wnc {

/// xorshift64* (Vigna) with state seeded by one splitmix64 step of the seed.
/// Constants: shifts 12, 25, 27 and multiplier 0x2545F4914F6CDD1D; splitmix64
/// increment 0x9E3779B97F4A7C15, mixers 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed);

  std::uint64_t next();
  /// Uniform integer in [0, bound), bound > 0, by rejection (no modulo bias).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform double in [0, 1) from the top 53 bits.
  double unit();

 private:
  std::uint64_t state_;
};

enum class GenMode { uniform, structured };

struct GenConfig {
  std::uint64_t seed = 1;
  std::size_t n = 1;
  std::size_t m = 0;
  double negative_fraction = 0.3;
  bool allow_parallel = false;
  GenMode mode = GenMode::uniform;
};

/// m loop-free edges with independent signs. Throws InfeasibleBudget when m
/// exceeds what (n, allow_parallel) admits.
SignedGraph random_signed_graph(const GenConfig& cfg);

/// A graph whose weakly negative circles are pairwise edge-disjoint: positive
/// components of blocks and bridges, negative edges inside a bridge tree only
/// while the tree stays a cactus, and free negative edges between components.
/// Emits exactly m edges, round(m * negative_fraction) of them negative.
SignedGraph structured_signed_graph(const GenConfig& cfg);

/// Dispatches on cfg.mode.
SignedGraph generate(const GenConfig& cfg);

}  // namespace wnc
