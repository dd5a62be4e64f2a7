#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dk/chain.hpp"
#include "dk/simplicial.hpp"

namespace dk {

/// Seeded source of small integers; draws are taken with `%` so that a seed
/// gives the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [lo, hi].
  long uniform(long lo, long hi);
  bool coin(int one_in) { return uniform(0, one_in - 1) == 0; }
  Scalar scalar(const Field& field, long lo = -3, long hi = 3) { return Scalar(field, uniform(lo, hi)); }

 private:
  std::mt19937_64 engine_;
};

enum class BlockKind { standard, boundary };

/// One summand k[Δ^n] or k[∂Δ^n] of a generated module.
struct Block {
  BlockKind kind;
  int n;
  std::string to_string() const;
};

SimplicialModule block_module(const Field& field, const Block& b, int max_degree);

/// A direct sum of blocks seen through a degreewise basis change.
struct GeneratedModule {
  std::vector<Block> blocks;
  SimplicialModule plain;         // the direct sum itself
  std::vector<Matrix> basis;      // columns: new basis in plain coordinates
  SimplicialModule module;        // change_basis(plain, basis)
};

GeneratedModule generated_module(const Field& field, const std::vector<Block>& blocks, int max_degree, Rng& rng,
                                 bool scramble = true);
GeneratedModule random_module(const Field& field, int max_degree, Rng& rng, int max_blocks = 2, int max_n = 2);

/// A map out of a generated module determined by one element y ∈ Y_n per
/// block (the Yoneda correspondence), expressed in the scrambled bases.
SimplicialMap random_map(const GeneratedModule& x, const GeneratedModule& y, Rng& rng);

/// Random unit lower times unit upper triangular matrix.
Matrix random_invertible(const Field& field, std::size_t n, Rng& rng);

/// Random complex with d_n = K_{n-1} R, K_{n-1} a kernel basis of d_{n-1}.
ChainComplex random_chain_complex(const Field& field, int max_degree, int max_dim, Rng& rng);

}  // namespace dk
