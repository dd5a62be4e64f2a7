#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dk/error.hpp"
#include "dk/matrix.hpp"

namespace dk {

/// A complex C_0 ← C_1 ← ⋯ ← C_N. Construction only checks that the data is
/// present; shapes and d∘d = 0 are the business of validate().
class ChainComplex {
 public:
  ChainComplex() = default;
  /// `differentials[k]` is d_{k+1} : C_{k+1} → C_k.
  ChainComplex(const Field& field, std::vector<std::size_t> dims, std::vector<Matrix> differentials);

  static ChainComplex zero(const Field& field, std::vector<std::size_t> dims);
  /// One copy of the field in degree 0, nothing above, up to `max_degree`.
  static ChainComplex point(const Field& field, int max_degree);

  const Field& field() const { return field_; }
  int max_degree() const { return static_cast<int>(dims_.size()) - 1; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim(int n) const;
  /// d_n for 0 ≤ n ≤ N+1; d_0 and d_{N+1} are the zero maps at the ends.
  Matrix differential(int n) const;
  const std::vector<Matrix>& differentials() const { return d_; }

  friend bool operator==(const ChainComplex&, const ChainComplex&) = default;

 private:
  Field field_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> d_;
};

Report validate(const ChainComplex& c);
/// Throws StructuralError with the witness of validate().
void require_valid(const ChainComplex& c, const std::string& what = "chain complex");

struct Homology {
  std::size_t dimension = 0;
  Matrix cycles;
  Matrix boundaries;
  Subquotient quotient;
  /// Set at the top degree, where the missing d_{N+1} can only enlarge H_N.
  bool truncated = false;
};

Homology homology(const ChainComplex& c, int n);

struct Betti {
  std::vector<std::size_t> dims;
  /// Degrees at or above this index are truncation-sensitive.
  int reliable_below = 0;
  std::string to_string() const;
};

Betti betti(const ChainComplex& c);

struct ChainMap {
  ChainComplex source;
  ChainComplex target;
  std::vector<Matrix> components;  // f_n : source_n → target_n, n = 0..N

  static ChainMap identity(const ChainComplex& c);
  static ChainMap zero(const ChainComplex& source, const ChainComplex& target);
};

Report validate(const ChainMap& f);
/// "f then g".
ChainMap compose(const ChainMap& f, const ChainMap& g);

Matrix induced_homology_map(const ChainMap& f, int n);

struct Verdict {
  bool holds = true;
  /// First failing degree, or -1.
  int degree = -1;
  std::string witness;
  /// Degrees excluded from the verdict because of truncation.
  std::string note;
  explicit operator bool() const { return holds; }
};

/// H_n(f) invertible for every n ≤ up_to, clipped below the top degree of
/// either complex.
Verdict is_quasi_iso(const ChainMap& f, int up_to);
Verdict is_quasi_iso(const ChainMap& f);

/// H_n invertible, tested as rank(H_n(f)) = dim H_n(source) = dim H_n(target).
bool is_invertible_between(const Matrix& induced, std::size_t source_dim, std::size_t target_dim);

}  // namespace dk
