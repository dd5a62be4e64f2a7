#include "dk/chain.hpp"

#include <algorithm>
#include <sstream>

namespace dk {

namespace {

std::string shape(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace

ChainComplex::ChainComplex(const Field& field, std::vector<std::size_t> dims, std::vector<Matrix> differentials)
    : field_(field), dims_(std::move(dims)), d_(std::move(differentials)) {
  if (dims_.empty()) throw DimensionError("a complex needs at least degree 0");
  if (d_.size() + 1 != dims_.size())
    throw DimensionError("expected " + std::to_string(dims_.size() - 1) + " differentials, got " +
                         std::to_string(d_.size()));
}

ChainComplex ChainComplex::zero(const Field& field, std::vector<std::size_t> dims) {
  std::vector<Matrix> d;
  for (std::size_t n = 1; n < dims.size(); ++n) d.push_back(Matrix::zero(field, dims[n - 1], dims[n]));
  return ChainComplex(field, std::move(dims), std::move(d));
}

ChainComplex ChainComplex::point(const Field& field, int max_degree) {
  std::vector<std::size_t> dims(static_cast<std::size_t>(max_degree + 1), 0);
  dims[0] = 1;
  return zero(field, std::move(dims));
}

std::size_t ChainComplex::dim(int n) const {
  if (n < 0 || n > max_degree()) return 0;
  return dims_[static_cast<std::size_t>(n)];
}

Matrix ChainComplex::differential(int n) const {
  if (n <= 0) return Matrix::zero(field_, 0, dim(0));
  if (n > max_degree()) return Matrix::zero(field_, dim(max_degree()), 0);
  return d_[static_cast<std::size_t>(n - 1)];
}

Report validate(const ChainComplex& c) {
  for (int n = 1; n <= c.max_degree(); ++n) {
    const Matrix& d = c.differentials()[static_cast<std::size_t>(n - 1)];
    if (!(d.field() == c.field())) return Report::fail("d_" + std::to_string(n) + " is over another field");
    if (d.rows() != c.dim(n - 1) || d.cols() != c.dim(n))
      return Report::fail("d_" + std::to_string(n) + " has shape " + shape(d) + ", expected " +
                          std::to_string(c.dim(n - 1)) + "x" + std::to_string(c.dim(n)));
  }
  for (int n = 2; n <= c.max_degree(); ++n)
    if (!(c.differential(n - 1) * c.differential(n)).is_zero())
      return Report::fail("d_" + std::to_string(n - 1) + " d_" + std::to_string(n) + " != 0 at degree " +
                          std::to_string(n));
  return Report::pass();
}

void require_valid(const ChainComplex& c, const std::string& what) {
  if (Report r = validate(c); !r) throw StructuralError("invalid " + what + ": " + r.witness);
}

Homology homology(const ChainComplex& c, int n) {
  require_valid(c);
  if (n < 0 || n > c.max_degree()) throw DimensionError("degree " + std::to_string(n) + " outside the complex");
  Homology h;
  h.cycles = kernel_basis(c.differential(n));
  h.boundaries = image_basis(c.differential(n + 1));
  h.quotient = make_subquotient(h.cycles, h.boundaries);
  h.dimension = h.quotient.dimension();
  h.truncated = n == c.max_degree();
  return h;
}

std::string Betti::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t n = 0; n < dims.size(); ++n) {
    os << (n ? "," : "") << dims[n];
    if (static_cast<int>(n) >= reliable_below) os << "*";
  }
  os << ")";
  return os.str();
}

Betti betti(const ChainComplex& c) {
  require_valid(c);
  Betti b;
  for (int n = 0; n <= c.max_degree(); ++n) {
    const std::size_t z = c.dim(n) - rank(c.differential(n));
    b.dims.push_back(z - rank(c.differential(n + 1)));
  }
  b.reliable_below = c.max_degree();
  return b;
}

ChainMap ChainMap::identity(const ChainComplex& c) {
  ChainMap f{c, c, {}};
  for (int n = 0; n <= c.max_degree(); ++n) f.components.push_back(Matrix::identity(c.field(), c.dim(n)));
  return f;
}

ChainMap ChainMap::zero(const ChainComplex& source, const ChainComplex& target) {
  ChainMap f{source, target, {}};
  for (int n = 0; n <= source.max_degree(); ++n)
    f.components.push_back(Matrix::zero(source.field(), target.dim(n), source.dim(n)));
  return f;
}

Report validate(const ChainMap& f) {
  if (Report r = validate(f.source); !r) return Report::fail("source: " + r.witness);
  if (Report r = validate(f.target); !r) return Report::fail("target: " + r.witness);
  if (!(f.source.field() == f.target.field())) return Report::fail("source and target over different fields");
  if (f.source.max_degree() != f.target.max_degree()) return Report::fail("source and target truncations differ");
  const int top = f.source.max_degree();
  if (static_cast<int>(f.components.size()) != top + 1)
    return Report::fail("expected " + std::to_string(top + 1) + " components");
  for (int n = 0; n <= top; ++n) {
    const Matrix& m = f.components[static_cast<std::size_t>(n)];
    if (m.rows() != f.target.dim(n) || m.cols() != f.source.dim(n))
      return Report::fail("f_" + std::to_string(n) + " has shape " + shape(m));
    if (!(m.field() == f.source.field())) return Report::fail("f_" + std::to_string(n) + " is over another field");
  }
  for (int n = 1; n <= top; ++n) {
    const Matrix lhs = f.components[static_cast<std::size_t>(n - 1)] * f.source.differential(n);
    const Matrix rhs = f.target.differential(n) * f.components[static_cast<std::size_t>(n)];
    if (!(lhs == rhs)) return Report::fail("f does not commute with d_" + std::to_string(n));
  }
  return Report::pass();
}

ChainMap compose(const ChainMap& f, const ChainMap& g) {
  if (!(f.target == g.source)) throw DimensionError("chain maps are not composable");
  ChainMap h{f.source, g.target, {}};
  for (std::size_t n = 0; n < f.components.size(); ++n) h.components.push_back(g.components[n] * f.components[n]);
  return h;
}

Matrix induced_homology_map(const ChainMap& f, int n) {
  if (Report r = validate(f); !r) throw StructuralError("invalid chain map: " + r.witness);
  const Homology a = homology(f.source, n);
  const Homology b = homology(f.target, n);
  return subquotient_map(f.components[static_cast<std::size_t>(n)], a.quotient, b.quotient);
}

bool is_invertible_between(const Matrix& induced, std::size_t source_dim, std::size_t target_dim) {
  return source_dim == target_dim && rank(induced) == source_dim;
}

Verdict is_quasi_iso(const ChainMap& f, int up_to) {
  if (Report r = validate(f); !r) throw StructuralError("invalid chain map: " + r.witness);
  Verdict v;
  const int top = f.source.max_degree();
  const int last = std::min(up_to, top - 1);
  if (up_to >= top) v.note = "degree " + std::to_string(top) + " excluded (truncation)";
  for (int n = 0; n <= last; ++n) {
    const Homology a = homology(f.source, n);
    const Homology b = homology(f.target, n);
    const Matrix m = subquotient_map(f.components[static_cast<std::size_t>(n)], a.quotient, b.quotient);
    if (!is_invertible_between(m, a.dimension, b.dimension)) {
      v.holds = false;
      v.degree = n;
      v.witness = "H_" + std::to_string(n) + ": dims " + std::to_string(a.dimension) + " -> " +
                  std::to_string(b.dimension) + ", induced rank " + std::to_string(rank(m));
      return v;
    }
  }
  return v;
}

Verdict is_quasi_iso(const ChainMap& f) { return is_quasi_iso(f, f.source.max_degree()); }

}  // namespace dk
