#include "dk/generate.hpp"

namespace dk {

long Rng::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(engine_() % span);
}

std::string Block::to_string() const {
  return (kind == BlockKind::standard ? "k[D^" : "k[dD^") + std::to_string(n) + "]";
}

SimplicialModule block_module(const Field& field, const Block& b, int max_degree) {
  return b.kind == BlockKind::standard ? free_standard(field, b.n, max_degree) : boundary_module(field, b.n, max_degree);
}

Matrix random_invertible(const Field& field, std::size_t n, Rng& rng) {
  Matrix l = Matrix::identity(field, n), u = Matrix::identity(field, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (rng.coin(3)) l(i, j) = rng.scalar(field, -2, 2);
      if (rng.coin(3)) u(j, i) = rng.scalar(field, -2, 2);
    }
  return l * u;
}

GeneratedModule generated_module(const Field& field, const std::vector<Block>& blocks, int max_degree, Rng& rng,
                                 bool scramble) {
  if (blocks.empty()) throw DimensionError("a generated module needs at least one block");
  GeneratedModule g{blocks, block_module(field, blocks.front(), max_degree), {}, {}};
  for (std::size_t k = 1; k < blocks.size(); ++k) g.plain = direct_sum(g.plain, block_module(field, blocks[k], max_degree));
  for (int n = 0; n <= max_degree; ++n)
    g.basis.push_back(scramble ? random_invertible(field, g.plain.dim(n), rng) : Matrix::identity(field, g.plain.dim(n)));
  g.module = change_basis(g.plain, g.basis);
  return g;
}

GeneratedModule random_module(const Field& field, int max_degree, Rng& rng, int max_blocks, int max_n) {
  std::vector<Block> blocks;
  const long count = rng.uniform(1, max_blocks);
  for (long k = 0; k < count; ++k) {
    const bool boundary = max_n >= 1 && rng.coin(2);
    blocks.push_back(boundary ? Block{BlockKind::boundary, static_cast<int>(rng.uniform(1, max_n))}
                              : Block{BlockKind::standard, static_cast<int>(rng.uniform(0, max_n))});
  }
  return generated_module(field, blocks, max_degree, rng);
}

SimplicialMap random_map(const GeneratedModule& x, const GeneratedModule& y, Rng& rng) {
  const Field& field = x.module.field();
  const int top = x.module.max_degree();
  std::vector<Matrix> plain;
  for (int m = 0; m <= top; ++m) plain.push_back(Matrix::zero(field, y.plain.dim(m), x.plain.dim(m)));
  std::vector<std::size_t> offset(static_cast<std::size_t>(top + 1), 0);
  for (const Block& b : x.blocks) {
    // y ∈ Y_n, sparse; zero with some probability so that null maps occur
    const bool fits = b.n <= top;
    Vector yv(fits ? y.plain.dim(b.n) : 0, Scalar::zero(field));
    if (fits && !rng.coin(4))
      for (auto& s : yv)
        if (rng.coin(2)) s = rng.scalar(field);
    for (int m = 0; m <= top; ++m) {
      std::size_t col = 0;
      for (const auto& phi : enumerate_hom(m, b.n)) {
        if (b.kind == BlockKind::boundary && phi.is_surjective()) continue;
        if (fits) {
          const Vector image = apply_map(y.plain, phi).apply(yv);
          for (std::size_t r = 0; r < image.size(); ++r)
            plain[static_cast<std::size_t>(m)](r, offset[static_cast<std::size_t>(m)] + col) = image[r];
        }
        ++col;
      }
      offset[static_cast<std::size_t>(m)] += col;
    }
  }
  SimplicialMap f{x.module, y.module, {}};
  for (int m = 0; m <= top; ++m)
    f.components.push_back(inverse(y.basis[static_cast<std::size_t>(m)]) * plain[static_cast<std::size_t>(m)] *
                           x.basis[static_cast<std::size_t>(m)]);
  return f;
}

ChainComplex random_chain_complex(const Field& field, int max_degree, int max_dim, Rng& rng) {
  std::vector<std::size_t> dims;
  for (int n = 0; n <= max_degree; ++n) dims.push_back(static_cast<std::size_t>(rng.uniform(0, max_dim)));
  std::vector<Matrix> d;
  Matrix kernel = Matrix::identity(field, dims[0]);
  for (int n = 1; n <= max_degree; ++n) {
    Matrix r(field, kernel.cols(), dims[static_cast<std::size_t>(n)]);
    for (std::size_t i = 0; i < r.rows(); ++i)
      for (std::size_t j = 0; j < r.cols(); ++j)
        if (rng.coin(2)) r(i, j) = rng.scalar(field);
    d.push_back(kernel * r);
    kernel = kernel_basis(d.back());
  }
  return ChainComplex(field, std::move(dims), std::move(d));
}

}  // namespace dk
