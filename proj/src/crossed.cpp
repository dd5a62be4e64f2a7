#include "dk/crossed.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <sstream>

namespace dk {

namespace {

std::string list(const std::vector<int>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << ")";
  return os.str();
}

class Cyclic final : public GroupFamily {
 public:
  std::string name() const override { return "cyclic"; }
  std::vector<Permutation> generators(int n) const override {
    std::vector<int> v;
    for (int i = 0; i <= n; ++i) v.push_back((i + 1) % (n + 1));
    return {Permutation(std::move(v))};
  }
  std::vector<std::vector<int>> relations(int n) const override {
    return {std::vector<int>(static_cast<std::size_t>(n + 1), 0)};
  }
  bool contains(const Permutation& p) const override {
    const int size = p.level() + 1;
    for (int i = 0; i < size; ++i)
      if (p(i) != (p(0) + i) % size) return false;
    return true;
  }
};

class Symmetric final : public GroupFamily {
 public:
  std::string name() const override { return "symmetric"; }
  std::vector<Permutation> generators(int n) const override {
    std::vector<Permutation> out;
    for (int i = 0; i < n; ++i) {
      std::vector<int> v(static_cast<std::size_t>(n + 1));
      std::iota(v.begin(), v.end(), 0);
      std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i + 1)]);
      out.emplace_back(std::move(v));
    }
    return out;
  }
  std::vector<std::vector<int>> relations(int n) const override {
    std::vector<std::vector<int>> out;
    for (int i = 0; i < n; ++i) {
      out.push_back({i, i});
      if (i + 1 < n) out.push_back({i, i + 1, i, i + 1, i, i + 1});
      for (int j = i + 2; j < n; ++j) out.push_back({i, j, i, j});
    }
    return out;
  }
  bool contains(const Permutation&) const override { return true; }
};

class Trivial final : public GroupFamily {
 public:
  std::string name() const override { return "trivial"; }
  std::vector<Permutation> generators(int) const override { return {}; }
  std::vector<std::vector<int>> relations(int) const override { return {}; }
  bool contains(const Permutation& p) const override { return p.is_identity(); }
};

template <class Module>
constexpr bool has_degeneracies = std::is_same_v<Module, SimplicialModule>;

Matrix word_action(const std::vector<Matrix>& gens, const std::vector<int>& word, const Field& field, std::size_t dim) {
  Matrix m = Matrix::identity(field, dim);
  for (int k : word) m = gens[static_cast<std::size_t>(k)] * m;
  return m;
}

template <class Module>
Report validate_crossed_impl(const BasicCrossedModule<Module>& m) {
  if (!m.family) return Report::fail("no group family");
  if (Report r = validate(m.base); !r) return Report::fail("base: " + r.witness);
  const GroupFamily& fam = *m.family;
  const int top = m.base.max_degree();
  if (static_cast<int>(m.actions.size()) != top + 1) return Report::fail("one action list per degree expected");
  std::vector<GroupLevel> levels;
  for (int n = 0; n <= top; ++n) {
    const auto gens = fam.generators(n);
    const auto& acts = m.actions[static_cast<std::size_t>(n)];
    if (acts.size() != gens.size())
      return Report::fail("degree " + std::to_string(n) + " needs " + std::to_string(gens.size()) + " action matrices");
    for (std::size_t k = 0; k < acts.size(); ++k)
      if (acts[k].rows() != m.base.dim(n) || acts[k].cols() != m.base.dim(n) || !(acts[k].field() == m.base.field()))
        return Report::fail("action " + std::to_string(k) + " at degree " + std::to_string(n) + " has wrong shape");
    for (const auto& rel : fam.relations(n))
      if (!(word_action(acts, rel, m.base.field(), m.base.dim(n)) == Matrix::identity(m.base.field(), m.base.dim(n))))
        return Report::fail("relation " + list(rel) + " fails at degree " + std::to_string(n));
    levels.push_back(fam.level(n));
  }
  for (int n = 0; n <= top; ++n) {
    const auto gens = fam.generators(n);
    std::vector<MonotoneMap> into;
    for (int i = 0; n >= 1 && i <= n; ++i) into.push_back(MonotoneMap::coface(n, i));
    if constexpr (has_degeneracies<Module>)
      for (int i = 0; n < top && i <= n; ++i) into.push_back(MonotoneMap::codegeneracy(n, i));
    for (std::size_t k = 0; k < gens.size(); ++k)
      for (const auto& c : into) {
        std::optional<CrossedMorphism> composite;
        try {
          composite = crossed_compose(crossed_of(c), crossed_of(gens[k]), fam);
        } catch (const StructuralError& e) {
          return Report::fail(e.what());
        }
        const CrossedMorphism& r = *composite;
        const Matrix lhs = apply_map(m.base, c) * m.actions[static_cast<std::size_t>(n)][k];
        const Matrix rhs = group_action(m, levels[static_cast<std::size_t>(c.source())], r.g) * apply_map(m.base, r.mono);
        if (!(lhs == rhs))
          return Report::fail("generator " + std::to_string(k) + " at degree " + std::to_string(n) +
                              " does not commute with " + c.to_string() + " (normal form " + r.to_string() + ")");
      }
  }
  return Report::pass();
}

template <class Module>
Invariants<SemiSimplicialModule> face_invariants_impl(const BasicCrossedModule<Module>& m) {
  Invariants<SemiSimplicialModule> out;
  std::vector<std::size_t> dims;
  for (int n = 0; n <= m.base.max_degree(); ++n) {
    out.inclusion.push_back(fixed_subspace(m, n));
    dims.push_back(out.inclusion.back().cols());
  }
  std::vector<std::vector<Matrix>> faces(dims.size());
  for (int n = 1; n <= m.base.max_degree(); ++n)
    for (int i = 0; i <= n; ++i)
      faces[static_cast<std::size_t>(n)].push_back(
          coordinates(out.inclusion[static_cast<std::size_t>(n - 1)], m.base.face(n, i) * out.inclusion[static_cast<std::size_t>(n)],
                      "face (" + std::to_string(n) + "," + std::to_string(i) + ") leaves the invariants"));
  out.module = SemiSimplicialModule(m.base.field(), std::move(dims), std::move(faces));
  return out;
}

template <class Module>
Report validate_map_impl(const BasicCrossedMap<Module>& f) {
  if (Report r = validate_crossed(f.source); !r) return Report::fail("source: " + r.witness);
  if (Report r = validate_crossed(f.target); !r) return Report::fail("target: " + r.witness);
  if (f.source.family->name() != f.target.family->name()) return Report::fail("different group families");
  if (Report r = validate(ModuleMap<Module>{f.source.base, f.target.base, f.components}); !r) return r;
  for (int n = 0; n <= f.source.base.max_degree(); ++n) {
    const auto& a = f.source.actions[static_cast<std::size_t>(n)];
    const auto& b = f.target.actions[static_cast<std::size_t>(n)];
    const Matrix& c = f.components[static_cast<std::size_t>(n)];
    for (std::size_t k = 0; k < a.size(); ++k)
      if (!(c * a[k] == b[k] * c))
        return Report::fail("not equivariant for generator " + std::to_string(k) + " at degree " + std::to_string(n));
  }
  return Report::pass();
}

template <class Module>
Verdict weak_equivalence_impl(const BasicCrossedMap<Module>& f, int up_to) {
  if (Report r = validate(f); !r) throw StructuralError("invalid crossed map: " + r.witness);
  const auto s = face_invariants(f.source);
  const auto t = face_invariants(f.target);
  SemiSimplicialMap restricted{s.module, t.module, {}};
  for (std::size_t n = 0; n < f.components.size(); ++n)
    restricted.components.push_back(coordinates(t.inclusion[n], f.components[n] * s.inclusion[n],
                                                "map leaves the invariants at degree " + std::to_string(n)));
  return is_homotopy_equivalence(restricted, EquivalenceMode::chain, up_to);
}

template <class Module>
BasicCrossedModule<Module> trivial_action_impl(const Module& x, const Family& family) {
  BasicCrossedModule<Module> m{x, family, {}};
  for (int n = 0; n <= x.max_degree(); ++n)
    m.actions.emplace_back(family->generators(n).size(), Matrix::identity(x.field(), x.dim(n)));
  return m;
}

}  // namespace

SetMap::SetMap(int source, int target, std::vector<int> values)
    : source_(source), target_(target), values_(std::move(values)) {
  if (source < 0 || target < 0) throw DimensionError("set maps live on [n], n >= 0");
  if (static_cast<int>(values_.size()) != source + 1) throw DimensionError("set map needs source+1 values");
  for (int v : values_)
    if (v < 0 || v > target) throw DimensionError("set map value " + std::to_string(v) + " outside [" + std::to_string(target) + "]");
}

bool SetMap::is_monotone() const { return std::is_sorted(values_.begin(), values_.end()); }

std::string SetMap::to_string() const {
  return "[" + std::to_string(source_) + "]->[" + std::to_string(target_) + "]" + list(values_);
}

SetMap compose(const SetMap& f, const SetMap& g) {
  if (f.target() != g.source()) throw DimensionError("cannot compose " + f.to_string() + " then " + g.to_string());
  std::vector<int> v;
  for (int x : f.values()) v.push_back(g(x));
  return SetMap(f.source(), g.target(), std::move(v));
}

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  std::vector<bool> seen(values_.size(), false);
  for (int v : values_) {
    if (v < 0 || v >= static_cast<int>(values_.size()) || seen[static_cast<std::size_t>(v)])
      throw DimensionError("not a permutation: " + list(values_));
    seen[static_cast<std::size_t>(v)] = true;
  }
  if (values_.empty()) throw DimensionError("permutations act on [n], n >= 0");
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n + 1));
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < values_.size(); ++k)
    if (values_[k] != static_cast<int>(k)) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(values_.size());
  for (std::size_t k = 0; k < values_.size(); ++k) v[static_cast<std::size_t>(values_[k])] = static_cast<int>(k);
  return Permutation(std::move(v));
}

std::string Permutation::to_string() const { return list(values_); }

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.level() != q.level()) throw DimensionError("permutations of different sizes");
  std::vector<int> v;
  for (int x : p.values()) v.push_back(q(x));
  return Permutation(std::move(v));
}

SetMapFactorization factorize_set_map(const SetMap& alpha) {
  std::vector<int> order(alpha.values().size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return alpha(a) < alpha(b); });
  std::vector<int> mono;
  for (int k : order) mono.push_back(alpha(k));
  return {MonotoneMap(alpha.source(), alpha.target(), std::move(mono)), Permutation(std::move(order))};
}

GroupLevel GroupFamily::level(int n) const {
  GroupLevel out;
  const auto gens = generators(n);
  const Permutation e = Permutation::identity(n);
  std::deque<Permutation> queue{e};
  out.words.emplace(e, std::vector<int>{});
  while (!queue.empty()) {
    const Permutation h = queue.front();
    queue.pop_front();
    out.index.emplace(h, out.elements.size());
    out.elements.push_back(h);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Permutation next = compose(gens[k], h);  // h ∘ gen_k
      if (out.words.count(next)) continue;
      auto w = out.words.at(h);
      w.push_back(static_cast<int>(k));
      out.words.emplace(next, std::move(w));
      queue.push_back(std::move(next));
    }
  }
  return out;
}

Family cyclic_family() { return std::make_shared<Cyclic>(); }
Family symmetric_family() { return std::make_shared<Symmetric>(); }
Family trivial_family() { return std::make_shared<Trivial>(); }

Family family_by_name(const std::string& name) {
  if (name == "cyclic") return cyclic_family();
  if (name == "symmetric") return symmetric_family();
  if (name == "trivial") return trivial_family();
  throw ParseError("unknown group family '" + name + "'");
}

std::string CrossedMorphism::to_string() const { return mono.to_string() + " . g" + g.to_string(); }

CrossedMorphism crossed_identity(int n) { return {MonotoneMap::identity(n), Permutation::identity(n)}; }
CrossedMorphism crossed_of(const MonotoneMap& f) { return {f, Permutation::identity(f.source())}; }
CrossedMorphism crossed_of(const Permutation& g) { return {MonotoneMap::identity(g.level()), g}; }

CrossedMorphism crossed_compose(const CrossedMorphism& a, const CrossedMorphism& b, const GroupFamily& family) {
  if (a.target() != b.source())
    throw DimensionError("crossed morphisms not composable: " + a.to_string() + " then " + b.to_string());
  // move b's group part past a's monotone part
  const SetMapFactorization f = factorize_set_map(compose(SetMap::of(a.mono), b.g.as_set_map()));
  CrossedMorphism r{compose(f.mono, b.mono), compose(a.g, f.sort.inverse())};
  if (!family.contains(r.g))
    throw StructuralError("crossed composite leaves the " + family.name() + " family: " + r.to_string());
  return r;
}

template <class Module>
Matrix group_action(const BasicCrossedModule<Module>& m, const GroupLevel& level, const Permutation& g) {
  const int n = g.level();
  auto it = level.words.find(g);
  if (it == level.words.end()) throw StructuralError("element " + g.to_string() + " is not in the group");
  return word_action(m.actions.at(static_cast<std::size_t>(n)), it->second, m.base.field(), m.base.dim(n));
}

template Matrix group_action(const CrossedModule&, const GroupLevel&, const Permutation&);
template Matrix group_action(const SemiCrossedModule&, const GroupLevel&, const Permutation&);

Report validate_crossed(const CrossedModule& m) { return validate_crossed_impl(m); }
Report validate_crossed(const SemiCrossedModule& m) { return validate_crossed_impl(m); }

CrossedModule representable_crossed(const Family& family, int max_degree, const Field& field) {
  if (max_degree < 0) throw DimensionError("representable_crossed needs N >= 0");
  std::vector<GroupLevel> levels;
  std::vector<std::size_t> dims;
  for (int n = 0; n <= max_degree; ++n) {
    levels.push_back(family->level(n));
    dims.push_back(levels.back().elements.size());
  }
  auto act = [&](const CrossedMorphism& u) {
    const auto s = static_cast<std::size_t>(u.source()), t = static_cast<std::size_t>(u.target());
    Matrix m(field, dims[s], dims[t]);
    const MonotoneMap to_point(static_cast<int>(t), 0, std::vector<int>(t + 1, 0));
    for (std::size_t c = 0; c < dims[t]; ++c) {
      const CrossedMorphism x{to_point, levels[t].elements[c]};
      const CrossedMorphism y = crossed_compose(u, x, *family);
      m(levels[s].index.at(y.g), c) = Scalar::one(field);
    }
    return m;
  };
  std::vector<std::vector<Matrix>> faces(dims.size()), degs(dims.size() - 1), actions;
  for (int n = 1; n <= max_degree; ++n)
    for (int i = 0; i <= n; ++i) faces[static_cast<std::size_t>(n)].push_back(act(crossed_of(MonotoneMap::coface(n, i))));
  for (int n = 0; n < max_degree; ++n)
    for (int i = 0; i <= n; ++i)
      degs[static_cast<std::size_t>(n)].push_back(act(crossed_of(MonotoneMap::codegeneracy(n, i))));
  for (int n = 0; n <= max_degree; ++n) {
    actions.emplace_back();
    for (const auto& g : family->generators(n)) actions.back().push_back(act(crossed_of(g)));
  }
  return CrossedModule{SimplicialModule(field, std::move(dims), std::move(faces), std::move(degs)), family,
                       std::move(actions)};
}

CrossedModule trivial_action(const SimplicialModule& x, const Family& family) { return trivial_action_impl(x, family); }
SemiCrossedModule trivial_action(const SemiSimplicialModule& x, const Family& family) {
  return trivial_action_impl(x, family);
}

template <class Module>
Matrix fixed_subspace(const BasicCrossedModule<Module>& m, int n) {
  const auto& acts = m.actions.at(static_cast<std::size_t>(n));
  const std::size_t dim = m.base.dim(n);
  if (acts.empty()) return Matrix::identity(m.base.field(), dim);
  const Matrix id = Matrix::identity(m.base.field(), dim);
  Matrix stacked = acts[0] - id;
  for (std::size_t k = 1; k < acts.size(); ++k) stacked = stacked.vstack(acts[k] - id);
  return kernel_basis(stacked);
}

template <class Module>
std::size_t coinvariant_dimension(const BasicCrossedModule<Module>& m, int n) {
  const auto& acts = m.actions.at(static_cast<std::size_t>(n));
  const std::size_t dim = m.base.dim(n);
  if (acts.empty()) return dim;
  const Matrix id = Matrix::identity(m.base.field(), dim);
  Matrix spanned = acts[0] - id;
  for (std::size_t k = 1; k < acts.size(); ++k) spanned = spanned.hstack(acts[k] - id);
  return dim - rank(spanned);
}

template Matrix fixed_subspace(const CrossedModule&, int);
template Matrix fixed_subspace(const SemiCrossedModule&, int);
template std::size_t coinvariant_dimension(const CrossedModule&, int);
template std::size_t coinvariant_dimension(const SemiCrossedModule&, int);

Invariants<SimplicialModule> invariants(const CrossedModule& m) {
  const auto f = face_invariants_impl(m);
  std::vector<std::vector<Matrix>> degs(f.inclusion.size() - 1);
  for (int n = 0; n < m.base.max_degree(); ++n)
    for (int i = 0; i <= n; ++i)
      degs[static_cast<std::size_t>(n)].push_back(
          coordinates(f.inclusion[static_cast<std::size_t>(n + 1)], m.base.degeneracy(n, i) * f.inclusion[static_cast<std::size_t>(n)],
                      "degeneracy (" + std::to_string(n) + "," + std::to_string(i) + ") leaves the invariants"));
  return {SimplicialModule(m.base.field(), f.module.dims(), f.module.faces(), std::move(degs)), f.inclusion};
}

Invariants<SemiSimplicialModule> face_invariants(const CrossedModule& m) { return face_invariants_impl(m); }
Invariants<SemiSimplicialModule> face_invariants(const SemiCrossedModule& m) { return face_invariants_impl(m); }

Report validate(const CrossedMap& f) { return validate_map_impl(f); }
Report validate(const SemiCrossedMap& f) { return validate_map_impl(f); }

Verdict is_equivariant_weak_equivalence(const CrossedMap& f, int up_to) { return weak_equivalence_impl(f, up_to); }
Verdict is_equivariant_weak_equivalence(const SemiCrossedMap& f, int up_to) { return weak_equivalence_impl(f, up_to); }

}  // namespace dk
