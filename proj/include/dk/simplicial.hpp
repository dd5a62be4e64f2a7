#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dk/chain.hpp"
#include "dk/error.hpp"
#include "dk/matrix.hpp"
#include "dk/operators.hpp"

namespace dk {

/// Graded vector space X_0, …, X_N with face matrices ∂_i : X_n → X_{n-1}.
class SemiSimplicialModule {
 public:
  SemiSimplicialModule() = default;
  /// `faces[n]` holds ∂_0..∂_n for degree n; `faces[0]` must be empty.
  SemiSimplicialModule(const Field& field, std::vector<std::size_t> dims, std::vector<std::vector<Matrix>> faces);

  const Field& field() const { return field_; }
  int max_degree() const { return static_cast<int>(dims_.size()) - 1; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim(int n) const { return dims_.at(static_cast<std::size_t>(n)); }
  const Matrix& face(int n, int i) const;
  const std::vector<std::vector<Matrix>>& faces() const { return faces_; }

  friend bool operator==(const SemiSimplicialModule&, const SemiSimplicialModule&) = default;

 protected:
  Field field_;
  std::vector<std::size_t> dims_;
  std::vector<std::vector<Matrix>> faces_;
};

/// Adds degeneracies s_i : X_n → X_{n+1} for 0 ≤ n < N.
class SimplicialModule : public SemiSimplicialModule {
 public:
  SimplicialModule() = default;
  /// `degeneracies[n]` holds s_0..s_n for degree n < N.
  SimplicialModule(const Field& field, std::vector<std::size_t> dims, std::vector<std::vector<Matrix>> faces,
                   std::vector<std::vector<Matrix>> degeneracies);

  const Matrix& degeneracy(int n, int i) const;
  const std::vector<std::vector<Matrix>>& degeneracies() const { return degeneracies_; }

  friend bool operator==(const SimplicialModule&, const SimplicialModule&) = default;

 private:
  std::vector<std::vector<Matrix>> degeneracies_;
};

/// Matrix X_b → X_a of an arrow [a] → [b], read off its factorization: the
/// faces first (largest index first), then the degeneracies (smallest first).
Matrix apply_map(const SemiSimplicialModule& x, const MonotoneMap& f);
Matrix apply_map(const SimplicialModule& x, const MonotoneMap& f);
Matrix apply_operator(const SemiSimplicialModule& x, const Operator& op, int n);
Matrix apply_operator(const SimplicialModule& x, const Operator& op, int n);

/// Shapes plus every composable pair of generators against the canonical
/// action of the composite.
Report validate(const SemiSimplicialModule& x);
Report validate(const SimplicialModule& x);
void require_valid(const SemiSimplicialModule& x, const std::string& what = "module");
void require_valid(const SimplicialModule& x, const std::string& what = "module");

template <class Module>
struct ModuleMap {
  Module source;
  Module target;
  std::vector<Matrix> components;  // f_n : source_n → target_n

  static ModuleMap identity(const Module& x) {
    ModuleMap f{x, x, {}};
    for (int n = 0; n <= x.max_degree(); ++n) f.components.push_back(Matrix::identity(x.field(), x.dim(n)));
    return f;
  }
  static ModuleMap zero(const Module& s, const Module& t) {
    ModuleMap f{s, t, {}};
    for (int n = 0; n <= s.max_degree(); ++n) f.components.push_back(Matrix::zero(s.field(), t.dim(n), s.dim(n)));
    return f;
  }
};

using SemiSimplicialMap = ModuleMap<SemiSimplicialModule>;
using SimplicialMap = ModuleMap<SimplicialModule>;

Report validate(const SemiSimplicialMap& f);
Report validate(const SimplicialMap& f);
SemiSimplicialMap forget(const SimplicialMap& f);
/// "f then g".
SimplicialMap compose(const SimplicialMap& f, const SimplicialMap& g);

/// k[Δ^n]: degree m spanned by enumerate_hom(m, n), structure by precomposition.
SimplicialModule free_standard(const Field& field, int n, int max_degree);
/// k[∂Δ^n]: the non-surjective part of k[Δ^n]. Requires n ≥ 1.
SimplicialModule boundary_module(const Field& field, int n, int max_degree);
/// k_•.
SimplicialModule constant_module(const Field& field, int max_degree);
/// k[0]: the field in degree 0, all faces zero.
SemiSimplicialModule point_module(const Field& field, int max_degree);
/// Componentwise direct sum.
SimplicialModule direct_sum(const SimplicialModule& a, const SimplicialModule& b);
/// Conjugates every structure matrix by the degreewise bases `p_n` (columns
/// express the new basis in the old one).
SimplicialModule change_basis(const SimplicialModule& x, const std::vector<Matrix>& p);

/// ∩_{i ≤ n} ker ∂_i, all of X_0 at n = 0.
Matrix z_cycles(const SemiSimplicialModule& x, int n);

struct HomotopyGroup {
  std::size_t dimension = 0;
  Matrix cycles;
  Matrix relations;
  Subquotient quotient;
};

/// Z_n modulo (∂_n - ∂_{n+1}) applied to ∩_{i<n} ker ∂_i ⊆ X_{n+1}. Needs
/// n < N; throws StructuralError if the relations leave Z_n.
HomotopyGroup homotopy_group(const SimplicialModule& x, int n);
Matrix induced_homotopy_map(const SimplicialMap& f, int n);

enum class EquivalenceMode { pi, chain };

Verdict is_homotopy_equivalence(const SimplicialMap& f, EquivalenceMode mode, int up_to);
/// Chain mode only; pi mode needs degeneracies.
Verdict is_homotopy_equivalence(const SemiSimplicialMap& f, EquivalenceMode mode, int up_to);

}  // namespace dk
