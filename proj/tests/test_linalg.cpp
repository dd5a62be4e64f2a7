#include <doctest.h>

#include <functional>
#include <random>

#include "dk/error.hpp"
#include "dk/matrix.hpp"

using namespace dk;

namespace {

const Field Q = Field::rationals();

// Laplace expansion; only for tiny matrices
Scalar det(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Scalar::one(m.field());
  Scalar acc = Scalar::zero(m.field());
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < n; ++c)
      if (c != j) cols.push_back(c);
    Matrix minor(m.field(), n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0; c < cols.size(); ++c) minor(r - 1, c) = m(r, cols[c]);
    Scalar term = m(0, j) * det(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

// largest k with a nonzero k×k minor
std::size_t rank_by_minors(const Matrix& m) {
  std::size_t best = 0;
  const std::size_t k_max = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= k_max; ++k) {
    bool found = false;
    std::vector<std::size_t> rs, cs;
    std::function<void(std::size_t)> pick_cols;
    std::function<void(std::size_t)> pick_rows = [&](std::size_t start) {
      if (found) return;
      if (rs.size() == k) {
        pick_cols(0);
        return;
      }
      for (std::size_t r = start; r < m.rows(); ++r) {
        rs.push_back(r);
        pick_rows(r + 1);
        rs.pop_back();
      }
    };
    pick_cols = [&](std::size_t start) {
      if (found) return;
      if (cs.size() == k) {
        Matrix sub(m.field(), k, k);
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) sub(a, b) = m(rs[a], cs[b]);
        if (!det(sub).is_zero()) found = true;
        return;
      }
      for (std::size_t c = start; c < m.cols(); ++c) {
        cs.push_back(c);
        pick_cols(c + 1);
        cs.pop_back();
      }
    };
    pick_rows(0);
    if (!found) break;
    best = k;
  }
  return best;
}

Matrix random_matrix(const Field& f, std::mt19937& rng, std::size_t r, std::size_t c, int sparsity) {
  std::uniform_int_distribution<long> val(-3, 3);
  std::uniform_int_distribution<int> coin(0, sparsity);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (coin(rng) == 0) m(i, j) = Scalar(f, val(rng));
  return m;
}

}  // namespace

TEST_CASE("scalar grammar and normalization") {
  CHECK(Scalar::parse(Q, "6/4").to_string() == "3/2");
  CHECK(Scalar::parse(Q, "-0").to_string() == "0");
  CHECK_THROWS_AS(Scalar::parse(Q, "1/0"), ParseError);
  CHECK_THROWS_AS(Scalar::parse(Q, "1/-2"), ParseError);
  CHECK_THROWS_AS(Scalar::parse(Q, "+1"), ParseError);
  const Field F5 = Field::prime(5);
  CHECK(Scalar::parse(F5, "4").to_string() == "4");
  CHECK_THROWS_AS(Scalar::parse(F5, "5"), ParseError);
  CHECK_THROWS_AS(Scalar::parse(F5, "-1"), ParseError);
  CHECK(Scalar(F5, -1L).to_string() == "4");
  CHECK((Scalar(F5, 2L) * Scalar(F5, 3L)).to_string() == "1");
  CHECK((Scalar(F5, 2L).inverse()).to_string() == "3");
  CHECK(Scalar(F5, mpq_class(1, 2)).to_string() == "3");
  CHECK_THROWS_AS(Scalar(F5, 1L) + Scalar(Q, 1L), FieldMismatch);
  CHECK_THROWS_AS(Field::prime(4), ParseError);
  CHECK(Field::parse("p:7").characteristic() == 7);
  CHECK(Field::parse("q").is_rational());
}

TEST_CASE("rationals beyond machine words") {
  const Scalar big = Scalar::parse(Q, "4611686018427387904");  // 2^62
  const Scalar sq = big * big;
  CHECK(sq.to_string() == "21267647932558653966460912964485513216");
  CHECK(sq / big == big);
  CHECK((sq - sq).is_zero());
  CHECK(Scalar::parse(Q, "-9223372036854775808").to_string() == "-9223372036854775808");
  CHECK((Scalar::parse(Q, "-9223372036854775808") + Scalar::one(Q)).to_string() == "-9223372036854775807");
  const Scalar tiny = Scalar::one(Q) / sq;
  CHECK((tiny * sq).is_one());
  CHECK(Scalar(Q, sq.rational()) == sq);
  CHECK(Scalar::parse(Q, "123456789012345678901234567890/2").to_string() == "61728394506172839450617283945");
}

TEST_CASE("rank examples") {
  CHECK(rank(Matrix::identity(Q, 2)) == 2);
  CHECK(rank(Matrix::zero(Q, 3, 3)) == 0);
  CHECK(rank(Matrix::from_ints(Q, {{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(Matrix::identity(Q, 3)).cols() == 0);
  Matrix z = kernel_basis(Matrix::zero(Q, 2, 3));
  CHECK(z.cols() == 3);
  CHECK(rank(z) == 3);
  Matrix k = kernel_basis(Matrix::from_ints(Q, {{1, 1}}));
  REQUIRE(k.cols() == 1);
  CHECK(k(0, 0) == -k(1, 0));
  CHECK(!k(0, 0).is_zero());
}

TEST_CASE("image examples") {
  CHECK(image_basis(Matrix::identity(Q, 3)) == Matrix::identity(Q, 3));
  CHECK(image_basis(Matrix::zero(Q, 2, 2)).cols() == 0);
  CHECK(image_basis(Matrix::from_ints(Q, {{1, 2}, {2, 4}})).cols() == 1);
}

TEST_CASE("solve examples") {
  Vector b{Scalar(Q, 1L), Scalar(Q, -2L)};
  CHECK(*solve(Matrix::identity(Q, 2), b) == b);
  CHECK(!solve(Matrix::zero(Q, 2, 2), b).has_value());
  auto x = solve(Matrix::from_ints(Q, {{2}}), Vector{Scalar(Q, 3L)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Scalar(Q, mpq_class(3, 2)));
  CHECK_THROWS_AS(solve(Matrix::identity(Q, 2), Vector{Scalar(Q, 1L)}), DimensionError);
}

TEST_CASE("subquotient examples") {
  Matrix z = Matrix::identity(Q, 3);
  Matrix b = Matrix::from_ints(Q, {{1}, {1}, {0}});
  Subquotient sq = make_subquotient(z, b);
  CHECK(sq.dimension() == 2);
  CHECK(subquotient_map(Matrix::identity(Q, 3), z, b, z, b) == Matrix::identity(Q, 2));
  CHECK(subquotient_map(Matrix::identity(Q, 3), z, z, z, z).rows() == 0);
  CHECK(subquotient_map(Matrix::identity(Q, 3), z, z, z, z).cols() == 0);
  CHECK(subquotient_map(Matrix::zero(Q, 3, 3), z, b, z, b).is_zero());
  CHECK_THROWS_AS(make_subquotient(Matrix::from_ints(Q, {{1}, {0}, {0}}), b), StructuralError);
}

TEST_CASE("random matrices against the minor oracle") {
  std::mt19937 rng(11);
  for (const Field f : {Q, Field::prime(5), Field::prime(2)}) {
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
      Matrix m = random_matrix(f, rng, r, c, trial % 3);
      const std::size_t rk = rank(m);
      CHECK(rk == rank_by_minors(m));
      Matrix k = kernel_basis(m);
      CHECK(rk + k.cols() == c);
      CHECK((m * k).is_zero());
      CHECK(rank(k) == k.cols());
      CHECK(image_basis(m).cols() == rk);
      Vector b = m.apply(random_matrix(f, rng, c, 1, 0).column(0));
      auto x = solve(m, b);
      REQUIRE(x.has_value());
      CHECK(m.apply(*x) == b);
      Vector e = random_matrix(f, rng, r, 1, 0).column(0);
      Matrix em = Matrix::from_columns(f, r, {e});
      if (!solve(m, e)) CHECK(rank(m.hstack(em)) > rk);
      if (r == c && rk == r) CHECK(m * inverse(m) == Matrix::identity(f, r));
    }
  }
}

TEST_CASE("induced map through a change of representatives") {
  // quotient of k^3 by span(e1+e2); the map swapping e1 and e2 acts trivially
  Matrix z = Matrix::identity(Q, 3);
  Matrix b = Matrix::from_ints(Q, {{1}, {1}, {0}});
  Matrix swap = Matrix::from_ints(Q, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  Matrix induced = subquotient_map(swap, z, b, z, b);
  // on the class of e1: swap(e1) = e2 = -e1 + (e1+e2)
  Subquotient sq = make_subquotient(z, b);
  Matrix reps = sq.representatives;
  Matrix image = swap * reps;
  Matrix diff = image - reps * induced;
  CHECK(in_span(b, diff));
  CHECK(induced.rows() == 2);
}

TEST_CASE("mixed fields are rejected") {
  CHECK_THROWS_AS(Matrix::identity(Q, 2) * Matrix::identity(Field::prime(3), 2), FieldMismatch);
}
