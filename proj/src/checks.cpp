#include "dk/checks.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "dk/chain.hpp"
#include "dk/crossed.hpp"
#include "dk/dold_kan.hpp"
#include "dk/generate.hpp"
#include "dk/simplicial.hpp"

namespace dk {

namespace {

struct Probe {
  std::size_t cases = 0;
  bool ok = true;
  std::string witness;

  template <class W>
  void expect(bool cond, W&& describe) {
    ++cases;
    if (!cond && ok) {
      ok = false;
      witness = describe();
    }
  }
};

class Runner {
 public:
  explicit Runner(std::vector<CheckResult>& out) : out_(out) {}

  void run(const std::string& suite, const std::string& property, const std::function<void(Probe&)>& body) {
    Probe p;
    try {
      body(p);
    } catch (const std::exception& e) {
      p.ok = false;
      if (p.witness.empty()) p.witness = std::string("raised: ") + e.what();
    }
    out_.push_back({suite, property, p.ok, p.cases, p.witness});
  }

 private:
  std::vector<CheckResult>& out_;
};

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, Rng& rng) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < c; ++k)
      if (!rng.coin(3)) m(i, k) = rng.scalar(f);
  return m;
}

std::vector<MonotoneMap> injections(int source, int target) {
  std::vector<MonotoneMap> out;
  if (source == -1) {
    out.emplace_back(-1, target, std::vector<int>{});
    return out;
  }
  for (const auto& f : enumerate_hom(source, target))
    if (f.is_injective()) out.push_back(f);
  return out;
}

Operator sum(const Field& f, const Combination<DWord>& c, int source, int target) {
  Operator acc(f, source, target);
  for (const auto& [w, a] : c) acc = acc + from_d_basis(f, w).scaled(a);
  return acc;
}

std::vector<SimplicialModule> named_modules(const Field& f, int top) {
  return {constant_module(f, top), free_standard(f, 1, top), free_standard(f, 2, top), boundary_module(f, 2, top)};
}

CrossedMorphism random_morphism(int source, int target, const GroupFamily& fam, Rng& rng) {
  const auto homs = enumerate_hom(source, target);
  const auto& elems = fam.level(source).elements;
  return {homs[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(homs.size()) - 1))],
          elems[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(elems.size()) - 1))]};
}

void linalg_suite(Runner& r, const SelfcheckOptions& o) {
  const Field& f = o.field;
  r.run("exact_linalg", "rank plus nullity equals columns, kernel is annihilated", [&](Probe& p) {
    Rng rng(o.seed);
    for (int k = 0; k < 60; ++k) {
      const auto rows = static_cast<std::size_t>(rng.uniform(0, 6)), cols = static_cast<std::size_t>(rng.uniform(0, 6));
      Matrix a = random_matrix(f, rows, cols, rng);
      Matrix kernel = kernel_basis(a);
      p.expect(rank(a) + kernel.cols() == cols && (a * kernel).is_zero(), [&] { return a.to_string(); });
      p.expect(rank(a) == rank(a.transpose()), [&] { return "row rank differs for " + a.to_string(); });
    }
  });
  r.run("exact_linalg", "solve reproduces consistent right-hand sides", [&](Probe& p) {
    Rng rng(o.seed + 1);
    for (int k = 0; k < 60; ++k) {
      const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
      Matrix a = random_matrix(f, n, n, rng);
      Vector x;
      for (std::size_t i = 0; i < n; ++i) x.push_back(rng.scalar(f));
      const Vector b = a.apply(x);
      auto s = solve(a, b);
      p.expect(s && a.apply(*s) == b, [&] { return a.to_string(); });
    }
  });
}

void operator_suite(Runner& r, const SelfcheckOptions& o) {
  const Field& f = o.field;
  const int top = o.max_level;
  r.run("simplicial_operators", "d(i,n+1) d(i,n) = 0", [&](Probe& p) {
    for (int n = 0; n <= top + 1; ++n)
      for (int i = 0; i <= n; ++i)
        p.expect((d_element(f, i, n + 1) * d_element(f, i, n)).is_zero(),
                 [&] { return "i=" + std::to_string(i) + " n=" + std::to_string(n); });
  });
  r.run("simplicial_operators", "face words survive the d-basis round trip", [&](Probe& p) {
    for (int source = -1; source <= top; ++source)
      for (int target = std::max(source, 0); target <= top; ++target)
        for (const auto& inj : injections(source, target)) {
          const FaceWord w = face_word_of(inj);
          p.expect(sum(f, to_d_basis(f, w), source, target) == Operator::of(f, inj), [&] { return to_string(w); });
        }
  });
  r.run("simplicial_operators", "normal-form counting bijection", [&](Probe& p) {
    for (int source = -1; source <= top; ++source)
      for (int target = std::max(source, 0); target <= top; ++target) {
        const auto faces = injections(source, target);
        p.expect(static_cast<long>(faces.size()) == binomial(target + 1, target - source),
                 [&] { return "[" + std::to_string(source) + "]->[" + std::to_string(target) + "]"; });
      }
    for (int n = 0; n <= std::min(top, 3); ++n)
      for (int m = 0; m <= std::min(top, 3); ++m) {
        const auto monos = enumerate_monomials(n, m);
        const auto arrows = enumerate_hom(n, m);
        Matrix a(f, arrows.size(), monos.size());
        for (std::size_t c = 0; c < monos.size(); ++c) {
          const Operator op = from_d_basis(f, monos[c]);
          for (std::size_t row = 0; row < arrows.size(); ++row) a(row, c) = op.coefficient(arrows[row]);
        }
        p.expect(monos.size() == arrows.size() && rank(a) == arrows.size(),
                 [&] { return "monomials do not form a basis of Hom([" + std::to_string(n) + "],[" + std::to_string(m) + "])"; });
      }
  });
  r.run("simplicial_operators", "epi-mono factorizations recompose", [&](Probe& p) {
    for (int n = 0; n <= top; ++n)
      for (int m = 0; m <= top; ++m)
        for (const auto& g : enumerate_hom(n, m))
          p.expect(recompose(n, epi_mono_factorize(g)) == g, [&] { return g.to_string(); });
  });
  r.run("simplicial_operators", "monomials split uniquely off d(0,m)", [&](Probe& p) {
    for (int n = 0; n <= top; ++n)
      for (int m = 0; m <= top; ++m) {
        std::size_t split = 0, rest = 0;
        for (const auto& x : enumerate_monomials(n, m)) {
          const auto& idx = x.word.indices;
          if (idx.empty() || idx.back() != 0) {
            ++rest;
            continue;
          }
          ++split;
          const DWord head{x.word.source + 1, std::vector<int>(idx.begin(), idx.end() - 1)};
          p.expect(head.indices.empty() || head.indices.back() != 0, [&] { return to_string(x); });
          p.expect(from_d_basis(f, x.word) == from_d_basis(f, head) * d_element(f, 0, x.word.source + 1),
                   [&] { return to_string(x); });
        }
        p.expect(split + rest == enumerate_hom(n, m).size(),
                 [&] { return "count mismatch at [" + std::to_string(n) + "]->[" + std::to_string(m) + "]"; });
      }
  });
  r.run("simplicial_operators", "eta splits the inclusion of omega", [&](Probe& p) {
    for (int n = 0; n <= top + 1; ++n) {
      const OmegaElement unit{f, {{n, Scalar::one(f)}}, {}};
      const OmegaElement diff{f, {}, {{n, Scalar::one(f)}}};
      p.expect(eta(to_operator(unit, n, n)) == unit, [&] { return "1_" + std::to_string(n); });
      p.expect(eta(to_operator(diff, n - 1, n)) == diff, [&] { return "d(0," + std::to_string(n) + ")"; });
    }
  });
}

void chain_suite(Runner& r, const SelfcheckOptions& o) {
  const Field& f = o.field;
  r.run("chain_complexes", "random complexes validate and keep their euler characteristic", [&](Probe& p) {
    Rng rng(o.seed + 2);
    for (int k = 0; k < 40; ++k) {
      const ChainComplex c = random_chain_complex(f, o.max_level, 6, rng);
      p.expect(validate(c).ok, [&] { return validate(c).witness; });
      long chi = 0, chi_h = 0;
      const Betti b = betti(c);
      for (int n = 0; n <= c.max_degree(); ++n) {
        const long sign = n % 2 ? -1 : 1;
        chi += sign * static_cast<long>(c.dim(n));
        chi_h += sign * static_cast<long>(b.dims[static_cast<std::size_t>(n)]);
      }
      p.expect(chi == chi_h, [&] { return "euler characteristic differs, trial " + std::to_string(k); });
    }
  });
  r.run("chain_complexes", "identity is a quasi-isomorphism, zero is not on nonzero homology", [&](Probe& p) {
    Rng rng(o.seed + 3);
    for (int k = 0; k < 20; ++k) {
      const ChainComplex c = random_chain_complex(f, o.max_level, 5, rng);
      p.expect(is_quasi_iso(ChainMap::identity(c)).holds, [&] { return "identity, trial " + std::to_string(k); });
      const Betti b = betti(c);
      const bool homology_below_top =
          std::any_of(b.dims.begin(), b.dims.begin() + b.reliable_below, [](std::size_t d) { return d > 0; });
      p.expect(is_quasi_iso(ChainMap::zero(c, c)).holds == !homology_below_top,
               [&] { return "zero map, trial " + std::to_string(k); });
    }
  });
}

void simplicial_suite(Runner& r, const SelfcheckOptions& o) {
  const Field& f = o.field;
  const int top = o.max_level;
  r.run("simplicial_modules", "standard and boundary modules validate", [&](Probe& p) {
    for (int n = 0; n <= 3; ++n) {
      SimplicialModule x = free_standard(f, n, top);
      if (o.inject_fault && n == 1) {
        auto faces = x.faces();
        faces[2][1](0, 0) = faces[2][1](0, 0) + Scalar::one(f);
        auto degs = x.degeneracies();
        x = SimplicialModule(f, x.dims(), faces, degs);
      }
      const Report rep = validate(x);
      p.expect(rep.ok, [&] { return "k[Delta^" + std::to_string(n) + "]: " + rep.witness; });
      if (n >= 1) {
        const Report b = validate(boundary_module(f, n, top));
        p.expect(b.ok, [&] { return "k[dDelta^" + std::to_string(n) + "]: " + b.witness; });
      }
    }
  });
  r.run("simplicial_modules", "generated modules and maps validate", [&](Probe& p) {
    Rng rng(o.seed + 4);
    for (int k = 0; k < 10; ++k) {
      const GeneratedModule x = random_module(f, top, rng);
      const GeneratedModule y = random_module(f, top, rng);
      const SimplicialMap g = random_map(x, y, rng);
      p.expect(validate(x.module).ok, [&] { return validate(x.module).witness; });
      p.expect(validate(g).ok, [&] { return validate(g).witness; });
    }
  });
  r.run("simplicial_modules", "homotopy groups exist below the truncation", [&](Probe& p) {
    for (const auto& x : named_modules(f, top))
      for (int n = 0; n < top; ++n) {
        homotopy_group(x, n);
        p.expect(true, [] { return std::string(); });
      }
  });
}

void dold_kan_suite(Runner& r, const SelfcheckOptions& o) {
  const Field& f = o.field;
  const int top = o.max_level;
  std::vector<SimplicialModule> modules = named_modules(f, top);
  {
    Rng rng(o.seed + 5);
    for (int k = 0; k < 6; ++k) modules.push_back(random_module(f, top, rng).module);
  }
  r.run("dold_kan", "unnormalized complexes validate", [&](Probe& p) {
    for (const auto& x : modules) p.expect(validate(unnormalized_chain(x)).ok, [&] { return validate(unnormalized_chain(x)).witness; });
  });
  r.run("dold_kan", "moore of inflate is the identity on complexes", [&](Probe& p) {
    Rng rng(o.seed + 6);
    for (int k = 0; k < 50; ++k) {
      const Verdict v = roundtrip_chain(random_chain_complex(f, top, 6, rng));
      p.expect(v.holds, [&] { return "trial " + std::to_string(k) + ": " + v.witness; });
    }
  });
  r.run("dold_kan", "inflate of moore includes as a chain equivalence", [&](Probe& p) {
    for (std::size_t k = 0; k < modules.size(); ++k) {
      const Verdict v = roundtrip_simplicial(modules[k]);
      p.expect(v.holds, [&] { return "module " + std::to_string(k) + ": " + v.witness; });
    }
  });
  r.run("dold_kan", "moore inclusion is a quasi-isomorphism", [&](Probe& p) {
    for (std::size_t k = 0; k < modules.size(); ++k) {
      const Verdict v = is_quasi_iso(moore_inclusion(modules[k]));
      p.expect(v.holds, [&] { return "module " + std::to_string(k) + ": " + v.witness; });
    }
  });
  r.run("dold_kan", "homotopy groups match normalized homology", [&](Probe& p) {
    for (std::size_t k = 0; k < modules.size(); ++k) {
      const ChainComplex n = moore_normalization(modules[k]).complex;
      for (int d = 0; d < top; ++d)
        p.expect(homotopy_group(modules[k], d).dimension == homology(n, d).dimension,
                 [&] { return "module " + std::to_string(k) + " degree " + std::to_string(d); });
    }
  });
  r.run("dold_kan", "pi and chain verdicts agree", [&](Probe& p) {
    Rng rng(o.seed + 7);
    for (int k = 0; k < 20; ++k) {
      const GeneratedModule x = random_module(f, top, rng);
      const GeneratedModule y = random_module(f, top, rng);
      const SimplicialMap g = random_map(x, y, rng);
      const bool pi = is_homotopy_equivalence(g, EquivalenceMode::pi, top - 1).holds;
      const bool chain = is_homotopy_equivalence(g, EquivalenceMode::chain, top - 1).holds;
      p.expect(pi == chain, [&] { return "trial " + std::to_string(k); });
    }
  });
  r.run("dold_kan", "point resolution is exact", [&](Probe& p) {
    const ResolutionComplex res = point_resolution(f, 5, top);
    p.expect(res.square_zero, [&] { return "d^2 != 0: " + res.witness; });
    p.expect(res.exact, [&] { return "homology: " + res.witness; });
    p.expect(res.oracle_agrees, [&] { return "oracle: " + res.witness; });
  });
  r.run("dold_kan", "point includes into the constant module as an equivalence", [&](Probe& p) {
    const SemiSimplicialModule point = point_module(f, top);
    const SemiSimplicialModule constant = constant_module(f, top);
    SemiSimplicialMap inc = SemiSimplicialMap::zero(point, constant);
    inc.components[0] = Matrix::identity(f, 1);
    p.expect(validate(inc).ok, [&] { return validate(inc).witness; });
    const Verdict v = is_homotopy_equivalence(inc, EquivalenceMode::chain, top - 1);
    p.expect(v.holds, [&] { return v.witness; });
  });
}

void crossed_suite(Runner& r, const SelfcheckOptions& o) {
  const Field& f = o.field;
  const int small = std::min(o.max_level, 4);
  r.run("crossed_groups", "set maps factor through a unique stable sort", [&](Probe& p) {
    for (int n = 0; n <= small; ++n)
      for (int m = 0; m <= small; ++m) {
        std::vector<int> values(static_cast<std::size_t>(n + 1), 0);
        while (true) {
          const SetMap alpha(n, m, values);
          const auto fac = factorize_set_map(alpha);
          const SetMap sorted = compose(fac.sort.as_set_map(), alpha);
          p.expect(sorted == SetMap::of(fac.mono) && compose(fac.sort.inverse().as_set_map(), SetMap::of(fac.mono)) == alpha,
                   [&] { return alpha.to_string(); });
          std::vector<int> perm(values.size());
          std::iota(perm.begin(), perm.end(), 0);
          std::size_t stable = 0;
          do {
            bool monotone = true, fiberwise = true;
            for (std::size_t j = 0; j + 1 < perm.size(); ++j) {
              const int a = alpha(perm[j]), b = alpha(perm[j + 1]);
              if (a > b) monotone = false;
              if (a == b && perm[j] > perm[j + 1]) fiberwise = false;
            }
            if (monotone && fiberwise) {
              ++stable;
              p.expect(Permutation(perm) == fac.sort, [&] { return alpha.to_string(); });
            }
          } while (std::next_permutation(perm.begin(), perm.end()));
          p.expect(stable == 1, [&] { return alpha.to_string(); });
          std::size_t k = 0;
          while (k < values.size() && values[k] == m) values[k++] = 0;
          if (k == values.size()) break;
          ++values[k];
        }
      }
  });
  r.run("crossed_groups", "crossed composition covers set-map composition and associates", [&](Probe& p) {
    const Family s = symmetric_family();
    Rng rng(o.seed + 8);
    for (int k = 0; k < 200; ++k) {
      const int l = static_cast<int>(rng.uniform(0, 3)), m = static_cast<int>(rng.uniform(0, 3)),
                n = static_cast<int>(rng.uniform(0, 3)), q = static_cast<int>(rng.uniform(0, 3));
      const CrossedMorphism a = random_morphism(l, m, *s, rng), b = random_morphism(m, n, *s, rng),
                            c = random_morphism(n, q, *s, rng);
      const CrossedMorphism ab = crossed_compose(a, b, *s);
      p.expect(ab.underlying() == compose(a.underlying(), b.underlying()), [&] { return a.to_string() + " then " + b.to_string(); });
      p.expect(crossed_compose(ab, c, *s) == crossed_compose(a, crossed_compose(b, c, *s), *s),
               [&] { return a.to_string() + ", " + b.to_string() + ", " + c.to_string(); });
    }
  });
  r.run("crossed_groups", "cyclic composites stay cyclic", [&](Probe& p) {
    const Family c = cyclic_family();
    for (int a = 0; a <= small; ++a)
      for (int b = 0; b <= small; ++b)
        for (int d = 0; d <= small; ++d)
          for (const auto& g1 : c->level(a).elements)
            for (const auto& g2 : c->level(b).elements)
              for (const auto& x : enumerate_hom(a, b))
                for (const auto& y : enumerate_hom(b, d)) {
                  const CrossedMorphism first{x, g1}, second{y, g2};
                  bool closed = true;
                  try {
                    crossed_compose(first, second, *c);
                  } catch (const StructuralError&) {
                    closed = false;
                  }
                  p.expect(closed, [&] { return first.to_string() + " then " + second.to_string(); });
                }
  });
  r.run("crossed_groups", "representable crossed modules validate with one-dimensional fixed vectors", [&](Probe& p) {
    for (const Family& fam : {cyclic_family(), symmetric_family()}) {
      const CrossedModule m = representable_crossed(fam, 3, f);
      const Report rep = validate_crossed(m);
      p.expect(rep.ok, [&] { return fam->name() + ": " + rep.witness; });
      for (int n = 0; n <= 3; ++n)
        p.expect(fixed_subspace(m, n).cols() == 1, [&] { return fam->name() + " degree " + std::to_string(n); });
    }
  });
  r.run("crossed_groups", "invariants of a trivial action give back the module", [&](Probe& p) {
    Rng rng(o.seed + 9);
    for (int k = 0; k < 6; ++k) {
      const GeneratedModule x = random_module(f, 3, rng);
      for (const Family& fam : {cyclic_family(), symmetric_family()}) {
        const auto inv = invariants(trivial_action(x.module, fam));
        p.expect(inv.module == x.module, [&] { return fam->name() + ", module " + std::to_string(k); });
        p.expect(validate(inv.as_map(x.module)).ok, [&] { return validate(inv.as_map(x.module)).witness; });
      }
    }
  });
  r.run("crossed_groups", "equivariant equivalence verdicts", [&](Probe& p) {
    const CrossedModule sym = representable_crossed(symmetric_family(), 3, f);
    std::vector<CrossedModule> modules{sym};
    for (const Family& fam : {cyclic_family(), symmetric_family()})
      modules.push_back(trivial_action(constant_module(f, 3), fam));
    for (const auto& m : modules) {
      const auto id = SimplicialMap::identity(m.base).components;
      const auto zero = SimplicialMap::zero(m.base, m.base).components;
      p.expect(is_equivariant_weak_equivalence(CrossedMap{m, m, id}, 3).holds, [&] { return m.family->name() + " identity"; });
      p.expect(!is_equivariant_weak_equivalence(CrossedMap{m, m, zero}, 3).holds, [&] { return m.family->name() + " zero"; });
    }
    for (std::size_t k = 1; k < modules.size(); ++k) {
      const auto inv = face_invariants(modules[k]);
      const SemiCrossedModule back = trivial_action(inv.module, modules[k].family);
      const SemiCrossedModule ambient = trivial_action(SemiSimplicialModule(modules[k].base), modules[k].family);
      const bool via_predicate = is_equivariant_weak_equivalence(SemiCrossedMap{back, ambient, inv.inclusion}, 3).holds;
      const bool direct = is_homotopy_equivalence(inv.as_map(modules[k].base), EquivalenceMode::chain, 3).holds;
      p.expect(via_predicate == direct && direct, [&] { return modules[k].family->name() + " self-equivalence"; });
    }
  });
}

}  // namespace

std::string to_string(EtaReading r) { return r == EtaReading::amended ? "amended" : "literal"; }

std::vector<CheckResult> run_selfcheck(const SelfcheckOptions& options) {
  std::vector<CheckResult> out;
  Runner r(out);
  linalg_suite(r, options);
  operator_suite(r, options);
  chain_suite(r, options);
  simplicial_suite(r, options);
  dold_kan_suite(r, options);
  crossed_suite(r, options);
  return out;
}

std::vector<EtaOutcome> eta_report(const Field& field, int splitting_level, int multiplicativity_level) {
  std::vector<EtaOutcome> out;
  const int top = multiplicativity_level;
  // cache the expanded monomials per hom-set
  std::map<std::pair<int, int>, std::vector<std::pair<Monomial, Operator>>> expanded;
  for (int a = 0; a <= top; ++a)
    for (int b = 0; b <= top; ++b)
      for (const auto& x : enumerate_monomials(a, b)) expanded[{a, b}].emplace_back(x, from_d_basis(field, x));
  for (const auto reading : {EtaReading::amended, EtaReading::literal}) {
    EtaOutcome o{reading, splitting_level, true, "", top, 0, 0, ""};
    for (int n = 0; n <= splitting_level && o.splits; ++n) {
      const OmegaElement unit{field, {{n, Scalar::one(field)}}, {}};
      const OmegaElement diff{field, {}, {{n, Scalar::one(field)}}};
      if (!(eta(to_operator(unit, n, n), reading) == unit)) {
        o.splits = false;
        o.splitting_witness = "1_" + std::to_string(n);
      } else if (!(eta(to_operator(diff, n - 1, n), reading) == diff)) {
        o.splits = false;
        o.splitting_witness = "d(0," + std::to_string(n) + ")";
      }
    }
    for (int a = 0; a <= top; ++a)
      for (int c = a; c <= std::min(a + 1, top); ++c) {
        // only the identity or the zeroth coface can carry a nonzero image
        const MonotoneMap probe = c == a ? MonotoneMap::identity(a) : MonotoneMap::coface(c, 0);
        for (int b = 0; b <= top; ++b) {
          const auto& xs = expanded[{a, b}];
          const auto& ys = expanded[{b, c}];
          const auto arrows = enumerate_hom(a, b);
          std::map<MonotoneMap, std::size_t> arrow_index;
          for (std::size_t k = 0; k < arrows.size(); ++k) arrow_index[arrows[k]] = k;
          for (const auto& [y, yop] : ys) {
            // coefficient of the probe in yop ∘ g for each arrow g
            std::vector<Scalar> functional(arrows.size(), Scalar::zero(field));
            for (std::size_t k = 0; k < arrows.size(); ++k)
              for (const auto& [h, coeff] : yop.terms())
                if (compose(arrows[k], h) == probe) functional[k] = functional[k] + coeff;
            const Operator ey = to_operator(eta(field, y, reading), b, c);
            for (const auto& [x, xop] : xs) {
              Scalar coeff = Scalar::zero(field);
              for (const auto& [g, cg] : xop.terms()) coeff = coeff + cg * functional[arrow_index.at(g)];
              Operator product(field, a, c);
              product.add(probe, coeff);
              const Operator lhs = to_operator(eta(product, reading), a, c);
              const Operator rhs = ey * to_operator(eta(field, x, reading), a, b);
              ++o.pairs;
              if (!(lhs == rhs)) {
                if (o.failures == 0) o.first_failure = to_string(x) + " then " + to_string(y);
                ++o.failures;
              }
            }
          }
        }
      }
    out.push_back(o);
  }
  return out;
}

}  // namespace dk
