#include "dk/simplicial.hpp"

#include <functional>
#include <map>

#include "dk/dold_kan.hpp"

namespace dk {

namespace {

std::string at(int n, int i) { return "(" + std::to_string(n) + "," + std::to_string(i) + ")"; }

Matrix action(const SemiSimplicialModule& x, const std::vector<std::vector<Matrix>>* degs, const MonotoneMap& f) {
  if (f.source() < 0 || f.target() > x.max_degree())
    throw DimensionError("arrow " + f.to_string() + " leaves degrees 0.." + std::to_string(x.max_degree()));
  const EpiMono em = epi_mono_factorize(f);
  if (!em.degeneracies.empty() && degs == nullptr)
    throw DimensionError("arrow " + f.to_string() + " needs degeneracies on a semi-simplicial module");
  Matrix m = Matrix::identity(x.field(), x.dim(f.target()));
  int level = f.target();
  for (int i : em.faces) m = x.face(level--, i) * m;
  for (auto it = em.degeneracies.rbegin(); it != em.degeneracies.rend(); ++it) {
    m = (*degs)[static_cast<std::size_t>(level)][static_cast<std::size_t>(*it)] * m;
    ++level;
  }
  return m;
}

Matrix operator_action(const SemiSimplicialModule& x, const std::vector<std::vector<Matrix>>* degs, const Operator& op,
                       int n) {
  if (op.target() != n)
    throw DimensionError("operator into [" + std::to_string(op.target()) + "] applied at degree " + std::to_string(n));
  if (op.source() < 0 || op.target() > x.max_degree()) throw DimensionError("operator leaves the truncation");
  Matrix m = Matrix::zero(x.field(), x.dim(op.source()), x.dim(op.target()));
  for (const auto& [f, c] : op.terms()) m = m + action(x, degs, f).scaled(c);
  return m;
}

struct Generator {
  MonotoneMap map;
  const Matrix* matrix;
  std::string name;
};

std::vector<Generator> generators(const SemiSimplicialModule& x, const std::vector<std::vector<Matrix>>* degs) {
  std::vector<Generator> out;
  for (int n = 1; n <= x.max_degree(); ++n)
    for (int i = 0; i <= n; ++i) out.push_back({MonotoneMap::coface(n, i), &x.face(n, i), "d" + at(n, i)});
  if (degs)
    for (int n = 0; n < x.max_degree(); ++n)
      for (int i = 0; i <= n; ++i)
        out.push_back({MonotoneMap::codegeneracy(n, i),
                       &(*degs)[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)], "s" + at(n, i)});
  return out;
}

Report check_shapes(const SemiSimplicialModule& x) {
  if (x.faces().size() != x.dims().size()) return Report::fail("face table has the wrong number of degrees");
  if (!x.faces()[0].empty()) return Report::fail("degree 0 has no faces");
  for (int n = 1; n <= x.max_degree(); ++n) {
    if (x.faces()[static_cast<std::size_t>(n)].size() != static_cast<std::size_t>(n + 1))
      return Report::fail("degree " + std::to_string(n) + " needs " + std::to_string(n + 1) + " faces");
    for (int i = 0; i <= n; ++i) {
      const Matrix& m = x.face(n, i);
      if (!(m.field() == x.field())) return Report::fail("face " + at(n, i) + " over another field");
      if (m.rows() != x.dim(n - 1) || m.cols() != x.dim(n)) return Report::fail("face " + at(n, i) + " has wrong shape");
    }
  }
  return Report::pass();
}

Report check_pairs(const SemiSimplicialModule& x, const std::vector<std::vector<Matrix>>* degs) {
  const auto gens = generators(x, degs);
  for (const auto& g2 : gens)
    for (const auto& g1 : gens) {
      if (g1.map.target() != g2.map.source()) continue;
      const MonotoneMap h = compose(g1.map, g2.map);
      if (!(action(x, degs, h) == *g1.matrix * *g2.matrix))
        return Report::fail("identity fails for " + g2.name + " then " + g1.name + " (composite " + h.to_string() + ")");
    }
  return Report::pass();
}

template <class Module>
Report check_map_shapes(const ModuleMap<Module>& f) {
  if (!(f.source.field() == f.target.field())) return Report::fail("source and target over different fields");
  if (f.source.max_degree() != f.target.max_degree()) return Report::fail("source and target truncations differ");
  if (static_cast<int>(f.components.size()) != f.source.max_degree() + 1)
    return Report::fail("expected " + std::to_string(f.source.max_degree() + 1) + " components");
  for (int n = 0; n <= f.source.max_degree(); ++n) {
    const Matrix& m = f.components[static_cast<std::size_t>(n)];
    if (m.rows() != f.target.dim(n) || m.cols() != f.source.dim(n))
      return Report::fail("component " + std::to_string(n) + " has wrong shape");
  }
  for (int n = 1; n <= f.source.max_degree(); ++n)
    for (int i = 0; i <= n; ++i)
      if (!(f.components[static_cast<std::size_t>(n - 1)] * f.source.face(n, i) ==
            f.target.face(n, i) * f.components[static_cast<std::size_t>(n)]))
        return Report::fail("map does not commute with face " + at(n, i));
  return Report::pass();
}

// Basis of degree m: the arrows [m] → [n] accepted by `keep`.
SimplicialModule from_representable(const Field& field, int n, int max_degree,
                                     const std::function<bool(const MonotoneMap&)>& keep) {
  std::vector<std::vector<MonotoneMap>> basis;
  std::vector<std::map<MonotoneMap, std::size_t>> index;
  std::vector<std::size_t> dims;
  for (int m = 0; m <= max_degree; ++m) {
    basis.emplace_back();
    index.emplace_back();
    for (const auto& f : enumerate_hom(m, n))
      if (keep(f)) {
        index.back().emplace(f, basis.back().size());
        basis.back().push_back(f);
      }
    dims.push_back(basis.back().size());
  }
  auto precompose = [&](const MonotoneMap& g) {
    const auto s = static_cast<std::size_t>(g.source()), t = static_cast<std::size_t>(g.target());
    Matrix m(field, dims[s], dims[t]);
    for (std::size_t c = 0; c < basis[t].size(); ++c) m(index[s].at(compose(g, basis[t][c])), c) = Scalar::one(field);
    return m;
  };
  std::vector<std::vector<Matrix>> faces(dims.size()), degs(dims.size() - 1);
  for (int m = 1; m <= max_degree; ++m)
    for (int i = 0; i <= m; ++i) faces[static_cast<std::size_t>(m)].push_back(precompose(MonotoneMap::coface(m, i)));
  for (int m = 0; m < max_degree; ++m)
    for (int i = 0; i <= m; ++i)
      degs[static_cast<std::size_t>(m)].push_back(precompose(MonotoneMap::codegeneracy(m, i)));
  return SimplicialModule(field, std::move(dims), std::move(faces), std::move(degs));
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

}  // namespace

SemiSimplicialModule::SemiSimplicialModule(const Field& field, std::vector<std::size_t> dims,
                                           std::vector<std::vector<Matrix>> faces)
    : field_(field), dims_(std::move(dims)), faces_(std::move(faces)) {
  if (dims_.empty()) throw DimensionError("a module needs at least degree 0");
  if (faces_.size() != dims_.size()) throw DimensionError("face table must have one entry per degree");
  for (std::size_t n = 0; n < faces_.size(); ++n)
    if (faces_[n].size() != (n == 0 ? 0 : n + 1))
      throw DimensionError("degree " + std::to_string(n) + " needs " + std::to_string(n == 0 ? 0 : n + 1) + " faces");
}

const Matrix& SemiSimplicialModule::face(int n, int i) const {
  if (n < 1 || n > max_degree() || i < 0 || i > n) throw DimensionError("no face " + at(n, i));
  return faces_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
}

SimplicialModule::SimplicialModule(const Field& field, std::vector<std::size_t> dims,
                                   std::vector<std::vector<Matrix>> faces, std::vector<std::vector<Matrix>> degeneracies)
    : SemiSimplicialModule(field, std::move(dims), std::move(faces)), degeneracies_(std::move(degeneracies)) {
  if (degeneracies_.size() != dims_.size() - 1)
    throw DimensionError("degeneracy table must have one entry per degree below the top");
  for (std::size_t n = 0; n < degeneracies_.size(); ++n)
    if (degeneracies_[n].size() != n + 1)
      throw DimensionError("degree " + std::to_string(n) + " needs " + std::to_string(n + 1) + " degeneracies");
}

const Matrix& SimplicialModule::degeneracy(int n, int i) const {
  if (n < 0 || n >= max_degree() || i < 0 || i > n) throw DimensionError("no degeneracy " + at(n, i));
  return degeneracies_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
}

Matrix apply_map(const SemiSimplicialModule& x, const MonotoneMap& f) { return action(x, nullptr, f); }
Matrix apply_map(const SimplicialModule& x, const MonotoneMap& f) { return action(x, &x.degeneracies(), f); }
Matrix apply_operator(const SemiSimplicialModule& x, const Operator& op, int n) {
  return operator_action(x, nullptr, op, n);
}
Matrix apply_operator(const SimplicialModule& x, const Operator& op, int n) {
  return operator_action(x, &x.degeneracies(), op, n);
}

Report validate(const SemiSimplicialModule& x) {
  if (Report r = check_shapes(x); !r) return r;
  return check_pairs(x, nullptr);
}

Report validate(const SimplicialModule& x) {
  if (Report r = check_shapes(x); !r) return r;
  for (int n = 0; n < x.max_degree(); ++n)
    for (int i = 0; i <= n; ++i) {
      const Matrix& m = x.degeneracy(n, i);
      if (!(m.field() == x.field())) return Report::fail("degeneracy " + at(n, i) + " over another field");
      if (m.rows() != x.dim(n + 1) || m.cols() != x.dim(n))
        return Report::fail("degeneracy " + at(n, i) + " has wrong shape");
    }
  return check_pairs(x, &x.degeneracies());
}

void require_valid(const SemiSimplicialModule& x, const std::string& what) {
  if (Report r = validate(x); !r) throw StructuralError("invalid " + what + ": " + r.witness);
}

void require_valid(const SimplicialModule& x, const std::string& what) {
  if (Report r = validate(x); !r) throw StructuralError("invalid " + what + ": " + r.witness);
}

Report validate(const SemiSimplicialMap& f) {
  if (Report r = validate(f.source); !r) return Report::fail("source: " + r.witness);
  if (Report r = validate(f.target); !r) return Report::fail("target: " + r.witness);
  return check_map_shapes(f);
}

Report validate(const SimplicialMap& f) {
  if (Report r = validate(f.source); !r) return Report::fail("source: " + r.witness);
  if (Report r = validate(f.target); !r) return Report::fail("target: " + r.witness);
  if (Report r = check_map_shapes(f); !r) return r;
  for (int n = 0; n < f.source.max_degree(); ++n)
    for (int i = 0; i <= n; ++i)
      if (!(f.components[static_cast<std::size_t>(n + 1)] * f.source.degeneracy(n, i) ==
            f.target.degeneracy(n, i) * f.components[static_cast<std::size_t>(n)]))
        return Report::fail("map does not commute with degeneracy " + at(n, i));
  return Report::pass();
}

SemiSimplicialMap forget(const SimplicialMap& f) { return SemiSimplicialMap{f.source, f.target, f.components}; }

SimplicialMap compose(const SimplicialMap& f, const SimplicialMap& g) {
  if (!(f.target == g.source)) throw DimensionError("simplicial maps are not composable");
  SimplicialMap h{f.source, g.target, {}};
  for (std::size_t n = 0; n < f.components.size(); ++n) h.components.push_back(g.components[n] * f.components[n]);
  return h;
}

SimplicialModule free_standard(const Field& field, int n, int max_degree) {
  if (n < 0 || max_degree < 0) throw DimensionError("free_standard needs n, N >= 0");
  return from_representable(field, n, max_degree, [](const MonotoneMap&) { return true; });
}

SimplicialModule boundary_module(const Field& field, int n, int max_degree) {
  if (n < 1 || max_degree < 0) throw DimensionError("boundary_module needs n >= 1, N >= 0");
  return from_representable(field, n, max_degree, [](const MonotoneMap& f) { return !f.is_surjective(); });
}

SimplicialModule constant_module(const Field& field, int max_degree) { return free_standard(field, 0, max_degree); }

SemiSimplicialModule point_module(const Field& field, int max_degree) {
  if (max_degree < 0) throw DimensionError("point_module needs N >= 0");
  std::vector<std::size_t> dims(static_cast<std::size_t>(max_degree + 1), 0);
  dims[0] = 1;
  std::vector<std::vector<Matrix>> faces(dims.size());
  for (int n = 1; n <= max_degree; ++n)
    for (int i = 0; i <= n; ++i)
      faces[static_cast<std::size_t>(n)].push_back(Matrix::zero(field, dims[static_cast<std::size_t>(n - 1)], 0));
  return SemiSimplicialModule(field, std::move(dims), std::move(faces));
}

SimplicialModule direct_sum(const SimplicialModule& a, const SimplicialModule& b) {
  if (!(a.field() == b.field()) || a.max_degree() != b.max_degree())
    throw DimensionError("direct sum needs equal fields and truncations");
  std::vector<std::size_t> dims;
  std::vector<std::vector<Matrix>> faces(a.dims().size()), degs(a.dims().size() - 1);
  for (int n = 0; n <= a.max_degree(); ++n) {
    dims.push_back(a.dim(n) + b.dim(n));
    if (n >= 1)
      for (int i = 0; i <= n; ++i)
        faces[static_cast<std::size_t>(n)].push_back(block_diagonal(a.face(n, i), b.face(n, i)));
    if (n < a.max_degree())
      for (int i = 0; i <= n; ++i)
        degs[static_cast<std::size_t>(n)].push_back(block_diagonal(a.degeneracy(n, i), b.degeneracy(n, i)));
  }
  return SimplicialModule(a.field(), std::move(dims), std::move(faces), std::move(degs));
}

SimplicialModule change_basis(const SimplicialModule& x, const std::vector<Matrix>& p) {
  if (static_cast<int>(p.size()) != x.max_degree() + 1) throw DimensionError("one basis change per degree");
  std::vector<Matrix> inv;
  for (const auto& m : p) inv.push_back(inverse(m));
  std::vector<std::vector<Matrix>> faces(x.dims().size()), degs(x.dims().size() - 1);
  for (int n = 1; n <= x.max_degree(); ++n)
    for (int i = 0; i <= n; ++i)
      faces[static_cast<std::size_t>(n)].push_back(inv[static_cast<std::size_t>(n - 1)] * x.face(n, i) *
                                                   p[static_cast<std::size_t>(n)]);
  for (int n = 0; n < x.max_degree(); ++n)
    for (int i = 0; i <= n; ++i)
      degs[static_cast<std::size_t>(n)].push_back(inv[static_cast<std::size_t>(n + 1)] * x.degeneracy(n, i) *
                                                  p[static_cast<std::size_t>(n)]);
  return SimplicialModule(x.field(), x.dims(), std::move(faces), std::move(degs));
}

Matrix z_cycles(const SemiSimplicialModule& x, int n) {
  if (n < 0 || n > x.max_degree()) throw DimensionError("degree " + std::to_string(n) + " outside the module");
  if (n == 0) return Matrix::identity(x.field(), x.dim(0));
  Matrix stacked = x.face(n, 0);
  for (int i = 1; i <= n; ++i) stacked = stacked.vstack(x.face(n, i));
  return kernel_basis(stacked);
}

HomotopyGroup homotopy_group(const SimplicialModule& x, int n) {
  if (n < 0 || n >= x.max_degree())
    throw DimensionError("pi_" + std::to_string(n) + " needs degree " + std::to_string(n + 1) + " in the truncation");
  Matrix witnesses = Matrix::identity(x.field(), x.dim(n + 1));
  if (n > 0) {
    Matrix stacked = x.face(n + 1, 0);
    for (int i = 1; i < n; ++i) stacked = stacked.vstack(x.face(n + 1, i));
    witnesses = kernel_basis(stacked);
  }
  HomotopyGroup g;
  g.cycles = z_cycles(x, n);
  g.relations = (x.face(n + 1, n) - x.face(n + 1, n + 1)) * witnesses;
  if (!in_span(g.cycles, g.relations))
    throw StructuralError("pi_" + std::to_string(n) + ": relations leave Z_" + std::to_string(n));
  g.quotient = make_subquotient(g.cycles, g.relations);
  g.dimension = g.quotient.dimension();
  return g;
}

Matrix induced_homotopy_map(const SimplicialMap& f, int n) {
  const HomotopyGroup a = homotopy_group(f.source, n);
  const HomotopyGroup b = homotopy_group(f.target, n);
  return subquotient_map(f.components.at(static_cast<std::size_t>(n)), a.quotient, b.quotient);
}

Verdict is_homotopy_equivalence(const SimplicialMap& f, EquivalenceMode mode, int up_to) {
  if (Report r = validate(f); !r) throw StructuralError("invalid simplicial map: " + r.witness);
  if (mode == EquivalenceMode::chain) return is_quasi_iso(unnormalized_chain(forget(f)), up_to);
  Verdict v;
  const int top = f.source.max_degree();
  const int last = std::min(up_to, top - 1);
  if (up_to >= top) v.note = "degree " + std::to_string(top) + " excluded (truncation)";
  for (int n = 0; n <= last; ++n) {
    const HomotopyGroup a = homotopy_group(f.source, n);
    const HomotopyGroup b = homotopy_group(f.target, n);
    const Matrix m = subquotient_map(f.components[static_cast<std::size_t>(n)], a.quotient, b.quotient);
    if (!is_invertible_between(m, a.dimension, b.dimension)) {
      v.holds = false;
      v.degree = n;
      v.witness = "pi_" + std::to_string(n) + ": dims " + std::to_string(a.dimension) + " -> " +
                  std::to_string(b.dimension) + ", induced rank " + std::to_string(rank(m));
      return v;
    }
  }
  return v;
}

Verdict is_homotopy_equivalence(const SemiSimplicialMap& f, EquivalenceMode mode, int up_to) {
  if (mode == EquivalenceMode::pi) throw StructuralError("pi mode needs degeneracies; use chain mode");
  if (Report r = validate(f); !r) throw StructuralError("invalid map: " + r.witness);
  return is_quasi_iso(unnormalized_chain(f), up_to);
}

}  // namespace dk
