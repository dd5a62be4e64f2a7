#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "dk/scalar.hpp"
#include "dk/simplex.hpp"

namespace dk {

/// A finite linear combination of arrows [source] → [target]: an element of
/// the categorical algebra of the simplex category. Zero coefficients are
/// never stored.
class Operator {
 public:
  Operator(const Field& field, int source, int target);

  static Operator of(const Field& field, const MonotoneMap& f);
  static Operator identity(const Field& field, int n);

  const Field& field() const { return field_; }
  int source() const { return source_; }
  int target() const { return target_; }
  const std::map<MonotoneMap, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of `f` (zero if absent).
  Scalar coefficient(const MonotoneMap& f) const;

  void add(const MonotoneMap& f, const Scalar& c);

  Operator operator+(const Operator& o) const;
  Operator operator-(const Operator& o) const;
  Operator scaled(const Scalar& s) const;

  /// Algebra product p*q = p ∘ q: q is applied first, so q.target() must equal
  /// p.source(). On a right module this is the order with x·(p*q) = (x·p)·q.
  friend Operator operator*(const Operator& p, const Operator& q);
  friend bool operator==(const Operator&, const Operator&) = default;

  std::string to_string() const;

 private:
  void check_compatible(const Operator& o) const;

  Field field_;
  int source_;
  int target_;
  std::map<MonotoneMap, Scalar> terms_;
};

namespace detail {
struct FaceTag {};
struct DTag {};
}  // namespace detail

/// A word of level-indexed generators g_{i_n,n} ⋯ g_{i_m,m}, read as a
/// composite [m-1] → [n]: the top generator is indices[0] at level target(),
/// the bottom one sits at level source()+1. The empty word is the identity
/// on [source].
template <class Tag>
struct LevelWord {
  int source = 0;
  std::vector<int> indices;

  int target() const { return source + static_cast<int>(indices.size()); }
  int level(std::size_t k) const { return target() - static_cast<int>(k); }

  friend auto operator<=>(const LevelWord&, const LevelWord&) = default;
  friend bool operator==(const LevelWord&, const LevelWord&) = default;
};

/// Composite ∂^n_{i_n} ⋯ ∂^m_{i_m} of cofaces.
using FaceWord = LevelWord<detail::FaceTag>;
/// Composite d_{j_n,n} ⋯ d_{j_m,m} of partial alternating sums.
using DWord = LevelWord<detail::DTag>;

/// Throws ParseError unless indices strictly decrease downward and each index
/// lies in [0, level].
template <class Tag>
void check_normal_form(const LevelWord<Tag>& w);

template <class Tag>
std::string to_string(const LevelWord<Tag>& w);

/// A normal-form basis element of the algebra: the collapse described by
/// `degeneracies` (as in epi_mono_factorize) followed by the d-word.
struct Monomial {
  std::vector<int> degeneracies;
  DWord word;

  int source() const { return word.source + static_cast<int>(degeneracies.size()); }
  int target() const { return word.target(); }
  bool is_identity() const { return degeneracies.empty() && word.indices.empty(); }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

std::string to_string(const Monomial& m);

template <class Key>
using Combination = std::map<Key, Scalar>;

/// d_{i,n} = Σ_{j=i}^{n} (-1)^j ∂^n_j : [n-1] → [n]. Requires 0 ≤ i ≤ n.
Operator d_element(const Field& field, int i, int n);

/// The single arrow named by a face word.
MonotoneMap face_word_map(const FaceWord& w);
/// The face word of a monotone injection.
FaceWord face_word_of(const MonotoneMap& injection);

/// Rewrites a normal-form face word in the d-basis, one generator at a time
/// from the top: ∂^ℓ_i = (-1)^i (d_{i,ℓ} - d_{i+1,ℓ}) with d_{ℓ+1,ℓ} = 0, and
/// products d_{i,ℓ+1} d_{i,ℓ} are dropped.
Combination<DWord> to_d_basis(const Field& field, const FaceWord& w);

/// Expands d-generators by their defining sums.
Operator from_d_basis(const Field& field, const DWord& w);
Operator from_d_basis(const Field& field, const Monomial& m);

/// Coordinates of an operator in the monomial basis.
Combination<Monomial> to_monomial_basis(const Operator& op);

/// All normal-form monomials [n] → [m], one per monotone map.
std::vector<Monomial> enumerate_monomials(int n, int m);

/// An element of the subalgebra generated by the identities 1_n and the
/// differentials d_{0,n}.
struct OmegaElement {
  Field field;
  std::map<int, Scalar> unit;          // coefficient of 1_n
  std::map<int, Scalar> differential;  // coefficient of d_{0,n}

  bool is_zero() const { return unit.empty() && differential.empty(); }
  void add_unit(int n, const Scalar& c);
  void add_differential(int n, const Scalar& c);
  OmegaElement operator+(const OmegaElement& o) const;
  friend bool operator==(const OmegaElement&, const OmegaElement&) = default;
  std::string to_string() const;
};

/// The part of an OmegaElement living in Hom([source], [target]).
Operator to_operator(const OmegaElement& x, int source, int target);

enum class EtaReading {
  /// 1_n ↦ 1_n, bare d_{0,n} ↦ d_{0,n}, every other monomial ↦ 0.
  amended,
  /// d_{0,n} when the σ-word is empty, the d-word has one letter and it has
  /// index 0; everything else (identities included) ↦ 0.
  literal,
};

OmegaElement eta(const Field& field, const Monomial& m, EtaReading reading = EtaReading::amended);
/// η extended linearly.
OmegaElement eta(const Operator& op, EtaReading reading = EtaReading::amended);

}  // namespace dk
