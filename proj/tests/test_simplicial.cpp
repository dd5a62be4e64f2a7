#include <doctest.h>

#include "dk/dold_kan.hpp"
#include "dk/generate.hpp"
#include "dk/simplicial.hpp"

using namespace dk;

namespace {

const Field Q = Field::rationals();

long surjections(int m, int n) { return binomial(m, n); }

}  // namespace

TEST_CASE("validation of standard modules") {
  CHECK(validate(constant_module(Q, 4)).ok);
  CHECK(validate(free_standard(Q, 2, 5)).ok);
  CHECK(validate(point_module(Q, 4)).ok);
  for (int n = 0; n <= 3; ++n)
    for (int top = 0; top <= 5; ++top) {
      CHECK(validate(free_standard(Q, n, top)).ok);
      if (n >= 1) CHECK(validate(boundary_module(Q, n, top)).ok);
    }
}

TEST_CASE("a perturbed face is caught") {
  SimplicialModule x = free_standard(Q, 1, 3);
  auto faces = x.faces();
  faces[2][1](0, 0) = faces[2][1](0, 0) + Scalar::one(Q);
  SimplicialModule broken(Q, x.dims(), faces, x.degeneracies());
  Report r = validate(broken);
  CHECK(!r.ok);
  CHECK(r.witness.find("d(2,") != std::string::npos);
  CHECK(!validate(SemiSimplicialModule(broken)).ok);
}

TEST_CASE("dimensions of standard and boundary modules") {
  CHECK(free_standard(Q, 0, 4) == constant_module(Q, 4));
  CHECK(free_standard(Q, 1, 3).dims() == std::vector<std::size_t>{2, 3, 4, 5});
  CHECK(boundary_module(Q, 1, 3).dims() == std::vector<std::size_t>{2, 2, 2, 2});
  for (int n = 1; n <= 3; ++n) {
    SimplicialModule s = free_standard(Q, n, 5), b = boundary_module(Q, n, 5);
    for (int m = 0; m <= 5; ++m) {
      CHECK(static_cast<long>(s.dim(m)) == binomial(m + n + 1, m + 1));
      CHECK(static_cast<long>(b.dim(m)) == binomial(m + n + 1, m + 1) - surjections(m, n));
    }
  }
  CHECK_THROWS_AS(boundary_module(Q, 0, 3), DimensionError);
}

TEST_CASE("constant and point modules") {
  SimplicialModule k = constant_module(Q, 3);
  for (int n = 1; n <= 3; ++n)
    for (int i = 0; i <= n; ++i) CHECK(k.face(n, i) == Matrix::identity(Q, 1));
  SemiSimplicialModule p = point_module(Q, 3);
  CHECK(p.dims() == std::vector<std::size_t>{1, 0, 0, 0});
  for (int n = 1; n <= 3; ++n)
    for (int i = 0; i <= n; ++i) CHECK(p.face(n, i).is_zero());
}

TEST_CASE("operator actions") {
  SimplicialModule x = free_standard(Q, 2, 4);
  CHECK(apply_operator(x, Operator::identity(Q, 3), 3) == Matrix::identity(Q, x.dim(3)));
  for (int n = 1; n <= 4; ++n) {
    Matrix alt = Matrix::zero(Q, x.dim(n - 1), x.dim(n));
    for (int i = 0; i <= n; ++i) alt = i % 2 ? alt - x.face(n, i) : alt + x.face(n, i);
    CHECK(apply_operator(x, d_element(Q, 0, n), n) == alt);
  }
  SimplicialModule k = constant_module(Q, 3);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (const auto& f : enumerate_hom(a, b)) CHECK(apply_map(k, f) == Matrix::identity(Q, 1));
  // x·(p∘q) = (x·p)·q on every composable pair of arrows
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        for (const auto& q : enumerate_hom(a, b))
          for (const auto& p : enumerate_hom(b, c))
            CHECK(apply_map(x, compose(q, p)) == apply_map(x, q) * apply_map(x, p));
  CHECK_THROWS_AS(apply_map(SemiSimplicialModule(x), MonotoneMap::codegeneracy(1, 0)), DimensionError);
  CHECK_THROWS_AS(apply_operator(x, Operator::identity(Q, 5), 5), DimensionError);
}

TEST_CASE("cycles") {
  CHECK(z_cycles(constant_module(Q, 3), 1).cols() == 0);
  CHECK(z_cycles(point_module(Q, 3), 0).cols() == 1);
  CHECK(z_cycles(boundary_module(Q, 2, 3), 1).cols() == 1);
}

TEST_CASE("homotopy groups of small modules") {
  SimplicialModule k = constant_module(Q, 5);
  CHECK(homotopy_group(k, 0).dimension == 1);
  for (int n = 1; n <= 4; ++n) CHECK(homotopy_group(k, n).dimension == 0);
  SimplicialModule d1 = free_standard(Q, 1, 3);
  CHECK(homotopy_group(d1, 0).dimension == 1);
  CHECK(homotopy_group(d1, 1).dimension == 0);
  SimplicialModule b2 = boundary_module(Q, 2, 4);
  CHECK(homotopy_group(b2, 0).dimension == 1);
  CHECK(homotopy_group(b2, 1).dimension == 1);
  CHECK(homotopy_group(b2, 2).dimension == 0);
  CHECK_THROWS_AS(homotopy_group(k, 5), DimensionError);
}

TEST_CASE("homotopy equivalence verdicts") {
  SimplicialModule k = constant_module(Q, 4);
  for (auto mode : {EquivalenceMode::pi, EquivalenceMode::chain}) {
    CHECK(is_homotopy_equivalence(SimplicialMap::identity(k), mode, 3).holds);
    CHECK(!is_homotopy_equivalence(SimplicialMap::zero(k, k), mode, 3).holds);
  }
  SemiSimplicialModule p = point_module(Q, 4);
  SemiSimplicialMap incl{p, SemiSimplicialModule(k), {}};
  incl.components.push_back(Matrix::identity(Q, 1));
  for (int n = 1; n <= 4; ++n) incl.components.push_back(Matrix::zero(Q, 1, 0));
  CHECK(validate(incl).ok);
  CHECK(is_homotopy_equivalence(incl, EquivalenceMode::chain, 4).holds);
  CHECK_THROWS_AS(is_homotopy_equivalence(incl, EquivalenceMode::pi, 4), StructuralError);
}

TEST_CASE("generated modules and maps validate") {
  Rng rng(17);
  for (const Field f : {Q, Field::prime(5)})
    for (int trial = 0; trial < 6; ++trial) {
      GeneratedModule x = random_module(f, 4, rng);
      GeneratedModule y = random_module(f, 4, rng);
      CHECK(validate(x.module).ok);
      SimplicialMap g = random_map(x, y, rng);
      Report r = validate(g);
      CHECK_MESSAGE(r.ok, r.witness);
    }
}
