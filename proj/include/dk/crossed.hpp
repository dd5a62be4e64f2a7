#pragma once

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dk/simplicial.hpp"

namespace dk {

/// An arbitrary map of finite sets [source] → [target].
class SetMap {
 public:
  SetMap(int source, int target, std::vector<int> values);
  static SetMap of(const MonotoneMap& f) { return SetMap(f.source(), f.target(), f.values()); }

  int source() const { return source_; }
  int target() const { return target_; }
  const std::vector<int>& values() const { return values_; }
  int operator()(int j) const { return values_[static_cast<std::size_t>(j)]; }
  bool is_monotone() const;
  std::string to_string() const;

  friend auto operator<=>(const SetMap&, const SetMap&) = default;

 private:
  int source_;
  int target_;
  std::vector<int> values_;
};

/// "f then g".
SetMap compose(const SetMap& f, const SetMap& g);

/// A bijection of [n].
class Permutation {
 public:
  explicit Permutation(std::vector<int> values);
  static Permutation identity(int n);

  int level() const { return static_cast<int>(values_.size()) - 1; }
  const std::vector<int>& values() const { return values_; }
  int operator()(int j) const { return values_[static_cast<std::size_t>(j)]; }
  bool is_identity() const;
  Permutation inverse() const;
  SetMap as_set_map() const { return SetMap(level(), level(), values_); }
  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

/// "p then q": j ↦ q(p(j)).
Permutation compose(const Permutation& p, const Permutation& q);

/// α = mono ∘ σ^{-1}: σ sorts the positions stably by value, so α∘σ = mono is
/// monotone and σ increases along each fiber.
struct SetMapFactorization {
  MonotoneMap mono;
  Permutation sort;
};

SetMapFactorization factorize_set_map(const SetMap& alpha);

/// Elements of one level of a family, each with a generator word.
struct GroupLevel {
  std::vector<Permutation> elements;
  /// element = gen[w_0] ∘ gen[w_1] ∘ ⋯ (functional order)
  std::map<Permutation, std::vector<int>> words;
  std::map<Permutation, std::size_t> index;
};

/// A family {G_n} of subgroups of Aut([n]) closed under crossed composition.
class GroupFamily {
 public:
  virtual ~GroupFamily() = default;
  virtual std::string name() const = 0;
  virtual std::vector<Permutation> generators(int n) const = 0;
  /// Generator words that must act trivially.
  virtual std::vector<std::vector<int>> relations(int n) const = 0;
  virtual bool contains(const Permutation& p) const = 0;

  GroupLevel level(int n) const;
};

using Family = std::shared_ptr<const GroupFamily>;

/// G_n = Z/(n+1) generated by t_n(i) = i+1 mod n+1.
Family cyclic_family();
/// G_n = S_{n+1} generated by the adjacent transpositions s_0..s_{n-1}.
Family symmetric_family();
/// G_n trivial.
Family trivial_family();
Family family_by_name(const std::string& name);

/// The morphism mono ∘ g of the crossed category: g is applied first.
struct CrossedMorphism {
  MonotoneMap mono;
  Permutation g;

  int source() const { return g.level(); }
  int target() const { return mono.target(); }
  SetMap underlying() const { return compose(g.as_set_map(), SetMap::of(mono)); }
  std::string to_string() const;

  friend auto operator<=>(const CrossedMorphism&, const CrossedMorphism&) = default;
};

CrossedMorphism crossed_identity(int n);
CrossedMorphism crossed_of(const MonotoneMap& f);
CrossedMorphism crossed_of(const Permutation& g);

/// "a then b" in normal form. Throws StructuralError when the group part
/// leaves the family.
CrossedMorphism crossed_compose(const CrossedMorphism& a, const CrossedMorphism& b, const GroupFamily& family);

/// A module with per-degree representations: actions[n][k] is the matrix of
/// the k-th generator of G_n on X_n, a right action.
template <class Module>
struct BasicCrossedModule {
  Module base;
  Family family;
  std::vector<std::vector<Matrix>> actions;
};

using CrossedModule = BasicCrossedModule<SimplicialModule>;
using SemiCrossedModule = BasicCrossedModule<SemiSimplicialModule>;

/// Matrix of an arbitrary element, composed from its generator word.
template <class Module>
Matrix group_action(const BasicCrossedModule<Module>& m, const GroupLevel& level, const Permutation& g);

Report validate_crossed(const CrossedModule& m);
Report validate_crossed(const SemiCrossedModule& m);

/// Degree n spanned by Hom([n], [0]) in the crossed category (one basis
/// vector per element of G_n); structure and action by precomposition.
CrossedModule representable_crossed(const Family& family, int max_degree, const Field& field = Field::rationals());

CrossedModule trivial_action(const SimplicialModule& x, const Family& family);
SemiCrossedModule trivial_action(const SemiSimplicialModule& x, const Family& family);

/// Basis of the vectors fixed by every generator of G_n.
template <class Module>
Matrix fixed_subspace(const BasicCrossedModule<Module>& m, int n);
/// dim X_n - dim span{(ρ(g) - 1)x}.
template <class Module>
std::size_t coinvariant_dimension(const BasicCrossedModule<Module>& m, int n);

template <class Module>
struct Invariants {
  Module module;
  std::vector<Matrix> inclusion;
  ModuleMap<Module> as_map(const Module& ambient) const { return {module, ambient, inclusion}; }
};

/// Fixed subspaces with induced faces and degeneracies. Throws StructuralError
/// naming the structure map that leaves them.
Invariants<SimplicialModule> invariants(const CrossedModule& m);
/// Same, faces only.
Invariants<SemiSimplicialModule> face_invariants(const CrossedModule& m);
Invariants<SemiSimplicialModule> face_invariants(const SemiCrossedModule& m);

template <class Module>
struct BasicCrossedMap {
  BasicCrossedModule<Module> source;
  BasicCrossedModule<Module> target;
  std::vector<Matrix> components;
};

using CrossedMap = BasicCrossedMap<SimplicialModule>;
using SemiCrossedMap = BasicCrossedMap<SemiSimplicialModule>;

Report validate(const CrossedMap& f);
Report validate(const SemiCrossedMap& f);

/// The map induced on face invariants is a chain-mode homotopy equivalence.
/// Throws StructuralError when f is not equivariant or an invariant subspace
/// is not closed under faces.
Verdict is_equivariant_weak_equivalence(const CrossedMap& f, int up_to);
Verdict is_equivariant_weak_equivalence(const SemiCrossedMap& f, int up_to);

}  // namespace dk
