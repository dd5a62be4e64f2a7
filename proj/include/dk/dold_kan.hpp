#pragma once

#include <string>
#include <vector>

#include "dk/chain.hpp"
#include "dk/operators.hpp"
#include "dk/simplicial.hpp"

namespace dk {

/// d_n = Σ (-1)^i ∂_i.
ChainComplex unnormalized_chain(const SemiSimplicialModule& x);
ChainMap unnormalized_chain(const SemiSimplicialMap& f);

struct MooreComplex {
  ChainComplex complex;
  /// Columns: the chosen basis of N_n inside X_n.
  std::vector<Matrix> inclusion;
};

/// N_n = ∩_{i ≥ 1} ker ∂_i with differential ∂_0. Throws StructuralError when
/// ∂_0 leaves the normalized subspace.
MooreComplex moore_normalization(const SemiSimplicialModule& x);
/// N(X) → unnormalized_chain(X).
ChainMap moore_inclusion(const SemiSimplicialModule& x);

/// ∂_0 = d_n, every other face zero.
SemiSimplicialModule chain_to_semisimplicial(const ChainComplex& y);

/// moore_normalization(chain_to_semisimplicial(y)) equals y on the nose.
Verdict roundtrip_chain(const ChainComplex& y);
/// chain_to_semisimplicial(moore_normalization(x)) → x is a face-compatible
/// inclusion and a chain-mode equivalence.
Verdict roundtrip_simplicial(const SemiSimplicialModule& x);

/// Columns Δ_r(m), 0 ≤ r ≤ R, 0 ≤ m ≤ N: d-words [r-1] → [m] with strictly
/// decreasing indices; the differential appends d_{0,r-1} at the bottom and
/// kills words already ending in index 0.
struct ResolutionComplex {
  int depth = 0;
  int max_internal = 0;
  std::vector<std::vector<std::vector<DWord>>> basis;  // [r][m]
  std::vector<std::vector<Matrix>> differential;       // [r][m] : Δ_r(m) → Δ_{r-1}(m), r ≥ 1
  std::vector<std::vector<std::size_t>> homology;      // [r][m], 1 ≤ r ≤ R-1
  bool square_zero = true;
  bool exact = true;
  bool oracle_agrees = true;
  std::string witness;
};

ResolutionComplex point_resolution(const Field& field, int depth, int max_internal);

}  // namespace dk
