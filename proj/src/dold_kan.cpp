#include "dk/dold_kan.hpp"

#include <map>

namespace dk {

ChainComplex unnormalized_chain(const SemiSimplicialModule& x) {
  require_valid(x);
  std::vector<Matrix> d;
  for (int n = 1; n <= x.max_degree(); ++n) {
    Matrix sum = Matrix::zero(x.field(), x.dim(n - 1), x.dim(n));
    for (int i = 0; i <= n; ++i) sum = i % 2 == 0 ? sum + x.face(n, i) : sum - x.face(n, i);
    d.push_back(std::move(sum));
  }
  return ChainComplex(x.field(), x.dims(), std::move(d));
}

ChainMap unnormalized_chain(const SemiSimplicialMap& f) {
  return ChainMap{unnormalized_chain(f.source), unnormalized_chain(f.target), f.components};
}

MooreComplex moore_normalization(const SemiSimplicialModule& x) {
  require_valid(x);
  MooreComplex out;
  std::vector<std::size_t> dims;
  for (int n = 0; n <= x.max_degree(); ++n) {
    if (n == 0) {
      out.inclusion.push_back(Matrix::identity(x.field(), x.dim(0)));
    } else {
      Matrix stacked = x.face(n, 1);
      for (int i = 2; i <= n; ++i) stacked = stacked.vstack(x.face(n, i));
      out.inclusion.push_back(kernel_basis(stacked));
    }
    dims.push_back(out.inclusion.back().cols());
  }
  std::vector<Matrix> d;
  for (int n = 1; n <= x.max_degree(); ++n) {
    const Matrix image = x.face(n, 0) * out.inclusion[static_cast<std::size_t>(n)];
    d.push_back(coordinates(out.inclusion[static_cast<std::size_t>(n - 1)], image,
                            "d_0 of the normalized degree " + std::to_string(n)));
  }
  out.complex = ChainComplex(x.field(), std::move(dims), std::move(d));
  if (Report r = validate(out.complex); !r) throw StructuralError("Moore complex: " + r.witness);
  return out;
}

ChainMap moore_inclusion(const SemiSimplicialModule& x) {
  MooreComplex m = moore_normalization(x);
  return ChainMap{m.complex, unnormalized_chain(x), m.inclusion};
}

SemiSimplicialModule chain_to_semisimplicial(const ChainComplex& y) {
  require_valid(y);
  std::vector<std::vector<Matrix>> faces(y.dims().size());
  for (int n = 1; n <= y.max_degree(); ++n) {
    faces[static_cast<std::size_t>(n)].push_back(y.differential(n));
    for (int i = 1; i <= n; ++i)
      faces[static_cast<std::size_t>(n)].push_back(Matrix::zero(y.field(), y.dim(n - 1), y.dim(n)));
  }
  return SemiSimplicialModule(y.field(), y.dims(), std::move(faces));
}

Verdict roundtrip_chain(const ChainComplex& y) {
  const MooreComplex m = moore_normalization(chain_to_semisimplicial(y));
  Verdict v;
  for (int n = 0; n <= y.max_degree(); ++n) {
    if (m.complex.dim(n) != y.dim(n)) {
      v = {false, n, "dimension changes at degree " + std::to_string(n), ""};
      return v;
    }
    if (n > 0 && !(m.complex.differential(n) == y.differential(n))) {
      v = {false, n, "differential changes at degree " + std::to_string(n), ""};
      return v;
    }
  }
  return v;
}

Verdict roundtrip_simplicial(const SemiSimplicialModule& x) {
  const MooreComplex m = moore_normalization(x);
  const SemiSimplicialMap incl{chain_to_semisimplicial(m.complex), x, m.inclusion};
  if (Report r = validate(incl); !r) return Verdict{false, -1, "inclusion is not face-compatible: " + r.witness, ""};
  return is_homotopy_equivalence(incl, EquivalenceMode::chain, x.max_degree());
}

ResolutionComplex point_resolution(const Field& field, int depth, int max_internal) {
  if (depth < 2 || max_internal < 0) throw DimensionError("point_resolution needs R >= 2 and N >= 0");
  ResolutionComplex res;
  res.depth = depth;
  res.max_internal = max_internal;
  std::vector<std::vector<std::map<DWord, std::size_t>>> index;
  for (int r = 0; r <= depth; ++r) {
    res.basis.emplace_back();
    index.emplace_back();
    for (int m = 0; m <= max_internal; ++m) {
      std::vector<DWord> words;
      // every injection [r-1] → [m] read in the d-basis
      for (const auto& f : enumerate_hom(r - 1, m))
        if (f.is_injective()) words.push_back(DWord{r - 1, epi_mono_factorize(f).faces});
      std::map<DWord, std::size_t> idx;
      for (std::size_t k = 0; k < words.size(); ++k) idx.emplace(words[k], k);
      res.basis.back().push_back(std::move(words));
      index.back().push_back(std::move(idx));
    }
  }
  auto fail = [&res](bool& flag, const std::string& w) {
    if (flag && res.witness.empty()) res.witness = w;
    flag = false;
  };
  res.differential.emplace_back();  // no d_0
  for (int r = 1; r <= depth; ++r) {
    res.differential.emplace_back();
    for (int m = 0; m <= max_internal; ++m) {
      const auto& src = res.basis[static_cast<std::size_t>(r)][static_cast<std::size_t>(m)];
      const auto& tgt_index = index[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(m)];
      Matrix fast(field, tgt_index.size(), src.size());
      Matrix oracle(field, tgt_index.size(), src.size());
      const Operator d0 = d_element(field, 0, r - 1);
      for (std::size_t c = 0; c < src.size(); ++c) {
        const DWord& w = src[c];
        if (w.indices.empty() || w.indices.back() != 0) {
          DWord e{r - 2, w.indices};
          e.indices.push_back(0);
          fast(tgt_index.at(e), c) = Scalar::one(field);
        }
        for (const auto& [x, a] : to_monomial_basis(from_d_basis(field, w) * d0)) {
          auto it = tgt_index.find(x.word);
          if (!x.degeneracies.empty() || it == tgt_index.end()) {
            fail(res.oracle_agrees, "oracle leaves the injective words at r=" + std::to_string(r));
            continue;
          }
          oracle(it->second, c) = a;
        }
      }
      if (!(fast == oracle))
        fail(res.oracle_agrees,
             "append rule disagrees with the rewriting oracle at r=" + std::to_string(r) + ", m=" + std::to_string(m));
      res.differential.back().push_back(std::move(fast));
    }
  }
  res.homology.assign(static_cast<std::size_t>(depth), {});
  for (int r = 2; r <= depth; ++r)
    for (int m = 0; m <= max_internal; ++m)
      if (!(res.differential[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(m)] *
            res.differential[static_cast<std::size_t>(r)][static_cast<std::size_t>(m)])
               .is_zero())
        fail(res.square_zero, "d^2 != 0 at r=" + std::to_string(r) + ", m=" + std::to_string(m));
  for (int r = 1; r < depth; ++r)
    for (int m = 0; m <= max_internal; ++m) {
      const Matrix& out = res.differential[static_cast<std::size_t>(r)][static_cast<std::size_t>(m)];
      const Matrix& in = res.differential[static_cast<std::size_t>(r + 1)][static_cast<std::size_t>(m)];
      const std::size_t h = out.cols() - rank(out) - rank(in);
      res.homology[static_cast<std::size_t>(r)].push_back(h);
      if (h != 0) fail(res.exact, "homology " + std::to_string(h) + " at r=" + std::to_string(r) + ", m=" + std::to_string(m));
    }
  return res;
}

}  // namespace dk
