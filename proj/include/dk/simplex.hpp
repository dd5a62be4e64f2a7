#pragma once

#include <compare>
#include <string>
#include <vector>

namespace dk {

/// An arrow [source] → [target] of the simplex category, stored as its list
/// of values. Object [-1] (the empty ordinal) is admitted so that the
/// bottom-level operators d_{i,0} : [-1] → [0] exist; simplicial modules only
/// ever use objects [n] with n ≥ 0.
class MonotoneMap {
 public:
  MonotoneMap() = default;
  /// Throws DimensionError unless values are weakly increasing in [0, target].
  MonotoneMap(int source, int target, std::vector<int> values);

  static MonotoneMap identity(int n);
  /// The coface [level-1] → [level] whose image misses `missed`.
  static MonotoneMap coface(int level, int missed);
  /// The codegeneracy [level+1] → [level] identifying `i` and `i+1`.
  static MonotoneMap codegeneracy(int level, int i);

  int source() const { return source_; }
  int target() const { return target_; }
  const std::vector<int>& values() const { return values_; }
  int operator()(int j) const { return values_[static_cast<std::size_t>(j)]; }

  bool is_identity() const;
  bool is_injective() const;
  bool is_surjective() const;

  std::string to_string() const;

  friend auto operator<=>(const MonotoneMap&, const MonotoneMap&) = default;
  friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;

 private:
  int source_ = 0;
  int target_ = 0;
  std::vector<int> values_{0};
};

/// Diagrammatic composite "f then g"; requires target(f) = source(g).
MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g);

/// The unique factorization f = (injection) ∘ (surjection).
struct EpiMono {
  /// Positions j with f(j) = f(j+1), strictly decreasing.
  std::vector<int> degeneracies;
  /// Values of [target] missed by f, strictly decreasing.
  std::vector<int> faces;
};

EpiMono epi_mono_factorize(const MonotoneMap& f);

/// Rebuilds the map from its generator word: the codegeneracies are applied
/// largest index first, then the cofaces smallest index first.
MonotoneMap recompose(int source, const EpiMono& word);

/// All monotone maps [n] → [m] in lexicographic order of their values.
std::vector<MonotoneMap> enumerate_hom(int n, int m);

/// C(n, k) for small arguments; zero outside 0 ≤ k ≤ n.
long binomial(long n, long k);

}  // namespace dk
