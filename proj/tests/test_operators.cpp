#include <doctest.h>

#include <random>

#include "dk/error.hpp"
#include "dk/matrix.hpp"
#include "dk/operators.hpp"

using namespace dk;

namespace {

const Field Q = Field::rationals();

MonotoneMap mm(int s, int t, std::vector<int> v) { return MonotoneMap(s, t, std::move(v)); }

Operator face(int level, int i) { return Operator::of(Q, MonotoneMap::coface(level, i)); }

// every strictly decreasing index list of the given length with i_ℓ ≤ ℓ
template <class W>
std::vector<W> all_words(int source, int length) {
  std::vector<W> out;
  W w{source, {}};
  std::function<void()> rec = [&] {
    if (static_cast<int>(w.indices.size()) == length) {
      out.push_back(w);
      return;
    }
    const int level = source + length - static_cast<int>(w.indices.size());
    const int cap = w.indices.empty() ? level : std::min(level, w.indices.back() - 1);
    for (int i = cap; i >= 0; --i) {
      w.indices.push_back(i);
      rec();
      w.indices.pop_back();
    }
  };
  rec();
  return out;
}

Operator expand(const Combination<DWord>& c) {
  std::optional<Operator> acc;
  for (const auto& [w, a] : c) {
    Operator t = from_d_basis(Q, w).scaled(a);
    acc = acc ? *acc + t : t;
  }
  return *acc;
}

// Coordinates of op in the family `basis`, by solving a linear system over the
// arrows of the Hom-space.
std::optional<Vector> coordinates_in(const std::vector<Operator>& basis, const Operator& op) {
  std::vector<MonotoneMap> arrows = enumerate_hom(op.source(), op.target());
  Matrix a(Q, arrows.size(), basis.size());
  Vector b;
  for (std::size_t r = 0; r < arrows.size(); ++r) {
    for (std::size_t c = 0; c < basis.size(); ++c) a(r, c) = basis[c].coefficient(arrows[r]);
    b.push_back(op.coefficient(arrows[r]));
  }
  return solve(a, b);
}

}  // namespace

TEST_CASE("composition examples") {
  CHECK(compose(MonotoneMap::identity(1), mm(1, 0, {0, 0})) == mm(1, 0, {0, 0}));
  CHECK(compose(mm(1, 1, {0, 1}), mm(1, 0, {0, 0})) == mm(1, 0, {0, 0}));
  CHECK(compose(mm(1, 2, {0, 2}), mm(2, 1, {0, 1, 1})) == mm(1, 1, {0, 1}));
  CHECK_THROWS_AS(compose(mm(1, 2, {0, 2}), mm(1, 1, {0, 1})), DimensionError);
  CHECK_THROWS_AS(mm(1, 1, {1, 0}), DimensionError);
}

TEST_CASE("epi-mono factorization examples") {
  EpiMono a = epi_mono_factorize(mm(1, 2, {0, 2}));
  CHECK(a.degeneracies.empty());
  CHECK(a.faces == std::vector<int>{1});
  EpiMono b = epi_mono_factorize(mm(1, 1, {0, 0}));
  CHECK(b.degeneracies == std::vector<int>{0});
  CHECK(b.faces == std::vector<int>{1});
  EpiMono c = epi_mono_factorize(MonotoneMap::identity(3));
  CHECK(c.degeneracies.empty());
  CHECK(c.faces.empty());
}

TEST_CASE("factorizations recompose and hom-sets have the right size") {
  for (int n = -1; n <= 5; ++n)
    for (int m = -1; m <= 5; ++m) {
      auto hom = enumerate_hom(n, m);
      CHECK(static_cast<long>(hom.size()) == (n == -1 ? 1 : binomial(n + m + 1, n + 1)));
      for (std::size_t k = 1; k < hom.size(); ++k) CHECK(hom[k - 1] < hom[k]);
      for (const auto& f : hom) CHECK(recompose(n, epi_mono_factorize(f)) == f);
    }
  CHECK(enumerate_hom(0, 0).size() == 1);
  CHECK(enumerate_hom(2, 0).size() == 1);
  auto h11 = enumerate_hom(1, 1);
  REQUIRE(h11.size() == 3);
  CHECK(h11[0] == mm(1, 1, {0, 0}));
  CHECK(h11[1] == mm(1, 1, {0, 1}));
  CHECK(h11[2] == mm(1, 1, {1, 1}));
}

TEST_CASE("d elements") {
  CHECK(d_element(Q, 1, 2) == face(2, 2) - face(2, 1));
  CHECK(d_element(Q, 0, 0) == face(0, 0));
  CHECK(d_element(Q, 2, 2) == face(2, 2));
  CHECK_THROWS_AS(d_element(Q, 3, 2), DimensionError);
  CHECK_THROWS_AS(d_element(Q, -1, 2), DimensionError);
}

TEST_CASE("consecutive d elements with equal index compose to zero") {
  for (const Field f : {Q, Field::prime(3)})
    for (int n = 0; n <= 6; ++n)
      for (int i = 0; i <= n; ++i) CHECK((d_element(f, i, n + 1) * d_element(f, i, n)).is_zero());
}

TEST_CASE("from d basis examples") {
  CHECK(from_d_basis(Q, DWord{0, {1}}) == face(1, 1).scaled(Scalar(Q, -1L)));
  CHECK(from_d_basis(Q, DWord{0, {0}}) == face(1, 0) - face(1, 1));
  CHECK(from_d_basis(Q, DWord{2, {}}) == Operator::identity(Q, 2));
  CHECK_THROWS_AS(from_d_basis(Q, DWord{0, {0, 1}}), ParseError);
}

TEST_CASE("to d basis examples") {
  for (int n = 0; n <= 4; ++n)
    for (int i = 0; i <= n; ++i) {
      auto c = to_d_basis(Q, FaceWord{n - 1, {i}});
      Scalar s(Q, i % 2 == 0 ? 1L : -1L);
      CHECK(c.at(DWord{n - 1, {i}}) == s);
      if (i < n) {
        CHECK(c.size() == 2);
        CHECK(c.at(DWord{n - 1, {i + 1}}) == -s);
      } else {
        CHECK(c.size() == 1);
      }
    }
  auto c = to_d_basis(Q, FaceWord{0, {2, 0}});
  CHECK(c.size() == 2);
  CHECK(c.at(DWord{0, {2, 0}}) == Scalar(Q, 1L));
  CHECK(c.at(DWord{0, {2, 1}}) == Scalar(Q, -1L));
  auto id = to_d_basis(Q, FaceWord{3, {}});
  CHECK(id.size() == 1);
  CHECK(id.at(DWord{3, {}}) == Scalar(Q, 1L));
  CHECK_THROWS_AS(to_d_basis(Q, FaceWord{0, {0, 1}}), ParseError);
  CHECK_THROWS_AS(to_d_basis(Q, FaceWord{0, {3}}), ParseError);
}

TEST_CASE("to d basis agrees with a linear solve over the d words") {
  for (int source = -1; source <= 2; ++source)
    for (int len = 0; len <= 3; ++len) {
      auto dwords = all_words<DWord>(source, len);
      std::vector<Operator> basis;
      for (const auto& w : dwords) basis.push_back(from_d_basis(Q, w));
      for (const auto& fw : all_words<FaceWord>(source, len)) {
        auto coords = coordinates_in(basis, Operator::of(Q, face_word_map(fw)));
        REQUIRE(coords.has_value());
        auto c = to_d_basis(Q, fw);
        for (std::size_t k = 0; k < dwords.size(); ++k) {
          auto it = c.find(dwords[k]);
          CHECK((it == c.end() ? Scalar::zero(Q) : it->second) == (*coords)[k]);
        }
      }
    }
}

TEST_CASE("round trip through the d basis up to level five") {
  for (const Field f : {Q, Field::prime(5)})
    for (int source = -1; source <= 5; ++source)
      for (int len = 0; source + len <= 5; ++len)
        for (const auto& w : all_words<FaceWord>(source, len)) {
          auto c = to_d_basis(f, w);
          Operator acc(f, source, source + len);
          for (const auto& [dw, a] : c) {
            check_normal_form(dw);
            acc = acc + from_d_basis(f, dw).scaled(a);
          }
          CHECK(acc == Operator::of(f, face_word_map(w)));
        }
}

TEST_CASE("d words and face words are equinumerous and the monomials form a basis") {
  for (int source = -1; source <= 4; ++source)
    for (int len = 0; source + len <= 5; ++len) {
      const auto fw = all_words<FaceWord>(source, len);
      CHECK(fw.size() == all_words<DWord>(source, len).size());
      CHECK(static_cast<long>(fw.size()) == binomial(source + len + 1, len));
    }
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m) {
      auto monos = enumerate_monomials(n, m);
      std::vector<Operator> ops;
      for (const auto& x : monos) ops.push_back(from_d_basis(Q, x));
      auto arrows = enumerate_hom(n, m);
      Matrix a(Q, arrows.size(), ops.size());
      for (std::size_t r = 0; r < arrows.size(); ++r)
        for (std::size_t c = 0; c < ops.size(); ++c) a(r, c) = ops[c].coefficient(arrows[r]);
      CHECK(monos.size() == arrows.size());
      CHECK(rank(a) == arrows.size());
    }
}

TEST_CASE("monomial coordinates reproduce the operator") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(rng() % 4), m = static_cast<int>(rng() % 4);
    auto arrows = enumerate_hom(n, m);
    Operator op(Q, n, m);
    for (const auto& f : arrows)
      if (rng() % 2) op.add(f, Scalar(Q, static_cast<long>(rng() % 7) - 3));
    Operator back(Q, n, m);
    for (const auto& [x, c] : to_monomial_basis(op)) back = back + from_d_basis(Q, x).scaled(c);
    CHECK(back == op);
  }
}

TEST_CASE("each monomial splits uniquely off an omega factor") {
  for (int n = 0; n <= 5; ++n)
    for (int m = 0; m <= 5; ++m)
      for (const auto& x : enumerate_monomials(n, m)) {
        const auto& idx = x.word.indices;
        if (!idx.empty() && idx.back() == 0) {
          DWord rest{x.word.source + 1, std::vector<int>(idx.begin(), idx.end() - 1)};
          Monomial head{{}, rest};
          // the truncated word must not itself end in index 0
          CHECK((rest.indices.empty() || rest.indices.back() != 0));
          Operator lhs = from_d_basis(Q, x.word);
          Operator rhs = from_d_basis(Q, rest) * d_element(Q, 0, x.word.source + 1);
          CHECK(lhs == rhs);
        }
      }
}

TEST_CASE("eta examples") {
  OmegaElement d2 = eta(Q, Monomial{{}, DWord{1, {0}}});
  CHECK(d2.unit.empty());
  CHECK(d2.differential.size() == 1);
  CHECK(d2.differential.at(2) == Scalar::one(Q));
  CHECK(eta(face(2, 1)).is_zero());
  OmegaElement viaMonomials{Q, {}, {}};
  for (const auto& [x, c] : to_monomial_basis(face(2, 1))) {
    OmegaElement e = eta(Q, x);
    for (auto& [k, v] : e.differential) viaMonomials.add_differential(k, v * c);
    for (auto& [k, v] : e.unit) viaMonomials.add_unit(k, v * c);
  }
  CHECK(viaMonomials.is_zero());
  OmegaElement one = eta(Q, Monomial{{}, DWord{3, {}}});
  CHECK(one.unit.at(3) == Scalar::one(Q));
  CHECK(eta(Q, Monomial{{}, DWord{3, {}}}, EtaReading::literal).is_zero());
  CHECK(eta(Q, Monomial{{0}, DWord{0, {0}}}).is_zero());
}

TEST_CASE("eta splits the inclusion") {
  for (int n = 0; n <= 6; ++n) {
    OmegaElement unit{Q, {{n, Scalar::one(Q)}}, {}};
    OmegaElement diff{Q, {}, {{n, Scalar::one(Q)}}};
    CHECK(eta(to_operator(unit, n, n)) == unit);
    CHECK(eta(to_operator(diff, n - 1, n)) == diff);
    CHECK(eta(to_operator(diff, n - 1, n), EtaReading::literal) == diff);
    CHECK(eta(to_operator(unit, n, n), EtaReading::literal).is_zero());
  }
}

TEST_CASE("fast eta agrees with termwise eta on monomials") {
  for (const auto reading : {EtaReading::amended, EtaReading::literal})
    for (int n = 0; n <= 3; ++n)
      for (int m = 0; m <= 3; ++m)
        for (const auto& f : enumerate_hom(n, m)) {
          Operator op = Operator::of(Q, f);
          OmegaElement termwise{Q, {}, {}};
          for (const auto& [x, c] : to_monomial_basis(op)) {
            OmegaElement e = eta(Q, x, reading);
            for (auto& [k, v] : e.differential) termwise.add_differential(k, v * c);
            for (auto& [k, v] : e.unit) termwise.add_unit(k, v * c);
          }
          CHECK(termwise == eta(op, reading));
        }
}
