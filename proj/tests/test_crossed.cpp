#include <doctest.h>

#include "dk/crossed.hpp"
#include "dk/generate.hpp"
#include "oracles.hpp"

using namespace dk;

namespace {

const Field Q = Field::rationals();

CrossedMorphism random_morphism(int s, int t, Rng& rng) {
  auto hom = enumerate_hom(s, t);
  MonotoneMap f = hom[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(hom.size()) - 1))];
  std::vector<int> p(static_cast<std::size_t>(s + 1));
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t k = p.size(); k > 1; --k) std::swap(p[k - 1], p[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(k) - 1))]);
  return {f, Permutation(p)};
}

}  // namespace

TEST_CASE("factorization examples") {
  auto a = factorize_set_map(SetMap(2, 2, {0, 1, 1}));
  CHECK(a.mono == MonotoneMap(2, 2, {0, 1, 1}));
  CHECK(a.sort.is_identity());
  auto b = factorize_set_map(SetMap(1, 1, {1, 0}));
  CHECK(b.mono == MonotoneMap(1, 1, {0, 1}));
  CHECK(b.sort == Permutation({1, 0}));
  auto c = factorize_set_map(SetMap(2, 1, {1, 0, 1}));
  CHECK(c.mono == MonotoneMap(2, 1, {0, 1, 1}));
  CHECK(c.sort == Permutation({1, 0, 2}));
  CHECK(oracle::sorting_permutations(SetMap(2, 1, {1, 0, 1})) == 2);
}

TEST_CASE("factorization is the unique fiber-order-preserving sort") {
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      for (const auto& alpha : oracle::all_set_maps(n, m)) {
        const auto f = factorize_set_map(alpha);
        CHECK(compose(f.sort.as_set_map(), alpha) == SetMap::of(f.mono));
        CHECK(compose(f.sort.inverse().as_set_map(), SetMap::of(f.mono)) == alpha);
        const auto brute = oracle::fiber_order_preserving_sorts(alpha);
        REQUIRE(brute.size() == 1);
        CHECK(brute.front() == f.sort);
      }
}

TEST_CASE("group families") {
  Family c = cyclic_family(), s = symmetric_family();
  CHECK(c->generators(2).front() == Permutation({1, 2, 0}));
  CHECK(s->level(3).elements.size() == 24);
  CHECK(c->level(4).elements.size() == 5);
  for (int n = 0; n <= 4; ++n) {
    Permutation t = c->generators(n).front(), acc = Permutation::identity(n);
    for (int k = 0; k <= n; ++k) acc = compose(acc, t);
    CHECK(acc.is_identity());
    const GroupLevel lv = s->level(n);
    for (const auto& g : lv.elements) {
      // the stored word multiplies back to the element
      Permutation w = Permutation::identity(n);
      for (int k : lv.words.at(g)) w = compose(s->generators(n)[static_cast<std::size_t>(k)], w);
      CHECK(w == g);
    }
  }
  CHECK(!c->contains(Permutation({1, 0, 2})));
  CHECK(c->contains(Permutation({2, 0, 1})));
  CHECK_THROWS_AS(family_by_name("braid"), ParseError);
}

TEST_CASE("crossed composition examples") {
  const Family s = symmetric_family();
  MonotoneMap phi(1, 2, {0, 2}), psi(2, 1, {0, 1, 1});
  CrossedMorphism r = crossed_compose(crossed_of(phi), crossed_of(psi), *s);
  CHECK(r.mono == compose(phi, psi));
  CHECK(r.g.is_identity());
  Rng rng(4);
  for (int k = 0; k < 20; ++k) {
    CrossedMorphism a = random_morphism(2, 3, rng);
    CHECK(crossed_compose(crossed_identity(2), a, *s) == a);
    CHECK(crossed_compose(a, crossed_identity(3), *s) == a);
  }
}

TEST_CASE("crossed composition against ordered fibers") {
  const Family s = symmetric_family();
  Rng rng(9);
  for (int k = 0; k < 200; ++k) {
    const int l = static_cast<int>(rng.uniform(0, 3)), m = static_cast<int>(rng.uniform(0, 3)),
              n = static_cast<int>(rng.uniform(0, 3)), p = static_cast<int>(rng.uniform(0, 3));
    CrossedMorphism a = random_morphism(l, m, rng), b = random_morphism(m, n, rng), c = random_morphism(n, p, rng);
    CrossedMorphism ab = crossed_compose(a, b, *s);
    CHECK(ab == oracle::to_normal_form(oracle::compose(oracle::from_normal_form(a), oracle::from_normal_form(b))));
    CHECK(ab.underlying() == compose(a.underlying(), b.underlying()));
    CHECK(crossed_compose(ab, c, *s) == crossed_compose(a, crossed_compose(b, c, *s), *s));
  }
}

TEST_CASE("cyclic composites stay cyclic") {
  const Family c = cyclic_family();
  std::size_t checked = 0;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int d = 0; d <= 3; ++d)
        for (const auto& f : enumerate_hom(a, b))
          for (const auto& g1 : c->level(a).elements)
            for (const auto& h : enumerate_hom(b, d))
              for (const auto& g2 : c->level(b).elements) {
                CHECK_NOTHROW(crossed_compose({f, g1}, {h, g2}, *c));
                ++checked;
              }
  CHECK(checked > 0);
}

TEST_CASE("crossed module validation") {
  for (const Family& f : {cyclic_family(), symmetric_family()}) {
    CHECK(validate_crossed(trivial_action(constant_module(Q, 4), f)).ok);
    CrossedModule r = representable_crossed(f, 3);
    Report rep = validate_crossed(r);
    CHECK_MESSAGE(rep.ok, rep.witness);
    CrossedModule bad = r;
    bad.actions[2][0](0, 0) = bad.actions[2][0](0, 0) + Scalar::one(Q);
    Report broken = validate_crossed(bad);
    CHECK(!broken.ok);
    CHECK(!broken.witness.empty());
  }
  CHECK(representable_crossed(cyclic_family(), 4).base.dims() == std::vector<std::size_t>{1, 2, 3, 4, 5});
  CHECK(representable_crossed(symmetric_family(), 3).base.dims() == std::vector<std::size_t>{1, 2, 6, 24});
  // a base whose faces ignore the rotation is needed for the trivial action
  CHECK(!validate_crossed(trivial_action(free_standard(Q, 1, 3), cyclic_family())).ok);
}

TEST_CASE("invariants") {
  SimplicialModule x = free_standard(Q, 1, 3);
  auto triv = invariants(CrossedModule{x, trivial_family(), std::vector<std::vector<Matrix>>(4)});
  CHECK(triv.module == x);
  for (const Family& f : {cyclic_family(), symmetric_family()}) {
    CrossedModule r = representable_crossed(f, 3);
    for (int n = 0; n <= 3; ++n) CHECK(fixed_subspace(r, n).cols() == 1);
  }
  CHECK_THROWS_AS(invariants(representable_crossed(cyclic_family(), 3)), StructuralError);
  CHECK_THROWS_AS(invariants(representable_crossed(symmetric_family(), 3)), StructuralError);
  CHECK_THROWS_AS(face_invariants(representable_crossed(cyclic_family(), 3)), StructuralError);
  auto sym = face_invariants(representable_crossed(symmetric_family(), 3));
  CHECK(validate(sym.module).ok);
  Rng rng(31);
  for (int k = 0; k < 4; ++k) {
    GeneratedModule g = random_module(Q, 3, rng);
    auto inv = invariants(trivial_action(g.module, cyclic_family()));
    CHECK(inv.module == g.module);
    CHECK(validate(inv.as_map(g.module)).ok);
  }
}

TEST_CASE("coinvariant dimensions of a regular representation") {
  for (const Field f : {Q, Field::prime(2), Field::prime(3)}) {
    CrossedModule r = representable_crossed(symmetric_family(), 3, f);
    for (int n = 0; n <= 3; ++n) {
      CHECK(coinvariant_dimension(r, n) == 1);
      CHECK(fixed_subspace(r, n).cols() == 1);
    }
  }
}

TEST_CASE("equivariant weak equivalences") {
  for (const Family& f : {cyclic_family(), symmetric_family()}) {
    CrossedModule k = trivial_action(constant_module(Q, 3), f);
    CHECK(is_equivariant_weak_equivalence(CrossedMap{k, k, SimplicialMap::identity(k.base).components}, 3).holds);
    CHECK(!is_equivariant_weak_equivalence(CrossedMap{k, k, SimplicialMap::zero(k.base, k.base).components}, 3).holds);
    auto inv = invariants(k);
    CrossedModule back = trivial_action(inv.module, f);
    CHECK(is_equivariant_weak_equivalence(CrossedMap{back, k, inv.inclusion}, 3).holds);
  }
  CrossedModule r = representable_crossed(symmetric_family(), 3);
  CHECK(is_equivariant_weak_equivalence(CrossedMap{r, r, SimplicialMap::identity(r.base).components}, 3).holds);
  CHECK(!is_equivariant_weak_equivalence(CrossedMap{r, r, SimplicialMap::zero(r.base, r.base).components}, 3).holds);
  // a non-equivariant map is rejected
  CrossedModule c = representable_crossed(cyclic_family(), 2);
  std::vector<Matrix> comps = SimplicialMap::identity(c.base).components;
  comps[1] = Matrix::from_ints(Q, {{1, 0}, {0, 0}});
  CHECK_THROWS_AS(is_equivariant_weak_equivalence(CrossedMap{c, c, comps}, 2), StructuralError);
}
