#pragma once

// Reference implementations used only by tests.

#include <algorithm>
#include <numeric>
#include <vector>

#include "dk/crossed.hpp"

namespace oracle {

/// A map of finite sets with a total order on every fiber.
struct OrderedFiberMap {
  int source = 0;
  int target = 0;
  std::vector<std::vector<int>> fibers;  // fibers[v] in their order

  friend bool operator==(const OrderedFiberMap&, const OrderedFiberMap&) = default;
};

inline OrderedFiberMap from_normal_form(const dk::CrossedMorphism& x) {
  OrderedFiberMap f{x.source(), x.target(), std::vector<std::vector<int>>(static_cast<std::size_t>(x.target() + 1))};
  std::vector<int> by_position(static_cast<std::size_t>(x.source() + 1));
  for (int j = 0; j <= x.source(); ++j) by_position[static_cast<std::size_t>(x.g(j))] = j;
  for (int pos = 0; pos <= x.source(); ++pos) {
    const int j = by_position[static_cast<std::size_t>(pos)];
    f.fibers[static_cast<std::size_t>(x.mono(pos))].push_back(j);
  }
  return f;
}

/// a then b: the fiber over w lists the a-fibers over b's fiber over w, in order.
inline OrderedFiberMap compose(const OrderedFiberMap& a, const OrderedFiberMap& b) {
  OrderedFiberMap c{a.source, b.target, std::vector<std::vector<int>>(static_cast<std::size_t>(b.target + 1))};
  for (int w = 0; w <= b.target; ++w)
    for (int v : b.fibers[static_cast<std::size_t>(w)])
      for (int j : a.fibers[static_cast<std::size_t>(v)]) c.fibers[static_cast<std::size_t>(w)].push_back(j);
  return c;
}

inline dk::CrossedMorphism to_normal_form(const OrderedFiberMap& f) {
  std::vector<int> mono, g(static_cast<std::size_t>(f.source + 1));
  int pos = 0;
  for (int w = 0; w <= f.target; ++w)
    for (int j : f.fibers[static_cast<std::size_t>(w)]) {
      mono.push_back(w);
      g[static_cast<std::size_t>(j)] = pos++;
    }
  return {dk::MonotoneMap(f.source, f.target, mono), dk::Permutation(g)};
}

/// Every permutation σ of [n] with α∘σ monotone and σ increasing on each fiber.
inline std::vector<dk::Permutation> fiber_order_preserving_sorts(const dk::SetMap& alpha) {
  std::vector<dk::Permutation> out;
  std::vector<int> s(alpha.values().size());
  std::iota(s.begin(), s.end(), 0);
  do {
    bool ok = true;
    for (std::size_t k = 1; k < s.size() && ok; ++k) {
      const int a = alpha(s[k - 1]), b = alpha(s[k]);
      if (a > b || (a == b && s[k - 1] > s[k])) ok = false;
    }
    if (ok) out.emplace_back(s);
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

/// Every permutation σ with α∘σ monotone.
inline std::size_t sorting_permutations(const dk::SetMap& alpha) {
  std::size_t count = 0;
  std::vector<int> s(alpha.values().size());
  std::iota(s.begin(), s.end(), 0);
  do {
    bool ok = true;
    for (std::size_t k = 1; k < s.size() && ok; ++k) ok = alpha(s[k - 1]) <= alpha(s[k]);
    if (ok) ++count;
  } while (std::next_permutation(s.begin(), s.end()));
  return count;
}

/// All maps [n] → [m] of finite sets.
inline std::vector<dk::SetMap> all_set_maps(int n, int m) {
  std::vector<dk::SetMap> out;
  std::vector<int> v(static_cast<std::size_t>(n + 1), 0);
  while (true) {
    out.emplace_back(n, m, v);
    int k = n;
    while (k >= 0 && v[static_cast<std::size_t>(k)] == m) v[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) break;
    ++v[static_cast<std::size_t>(k)];
  }
  return out;
}

}  // namespace oracle

namespace oracle {

/// Strictly decreasing index lists for words [source] → [source+length] with i_ℓ ≤ ℓ.
inline std::vector<std::vector<int>> decreasing_words(int source, int length) {
  std::vector<std::vector<int>> out;
  std::vector<int> w;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(w.size()) == length) {
      out.push_back(w);
      return;
    }
    const int level = source + length - static_cast<int>(w.size());
    const int cap = w.empty() ? level : std::min(level, w.back() - 1);
    for (int i = cap; i >= 0; --i) {
      w.push_back(i);
      self(self);
      w.pop_back();
    }
  };
  rec(rec);
  return out;
}

/// |{monotone [n] → [m]}| by filtering every function.
inline std::size_t monotone_count(int n, int m) {
  std::size_t count = 0;
  for (const auto& f : all_set_maps(n, m)) count += f.is_monotone() ? 1 : 0;
  return count;
}

/// dim H_n from ranks: dim C_n - rank d_n - rank d_{n+1}.
inline std::size_t homology_dim(const dk::ChainComplex& c, int n) {
  return c.dim(n) - dk::rank(c.differential(n)) - dk::rank(c.differential(n + 1));
}

/// H_n(f) is an isomorphism for every n ≤ up_to, from ranks of f(Z) + B.
inline bool quasi_iso_by_ranks(const dk::ChainMap& f, int up_to) {
  for (int n = 0; n <= up_to; ++n) {
    const dk::Matrix z = dk::kernel_basis(f.source.differential(n));
    const dk::Matrix b = f.target.differential(n + 1);
    const std::size_t rb = dk::rank(b);
    const std::size_t image = dk::rank((f.components[static_cast<std::size_t>(n)] * z).hstack(b)) - rb;
    const std::size_t hs = homology_dim(f.source, n), ht = homology_dim(f.target, n);
    if (image != hs || image != ht) return false;
  }
  return true;
}

/// Z_n modulo (∂_n - ∂_{n+1}) applied to ∩_{i<n} ker ∂_i, dimension by ranks.
inline std::size_t homotopy_dim(const dk::SimplicialModule& x, int n) {
  const dk::Field& f = x.field();
  dk::Matrix zs(f, 0, x.dim(n));
  for (int i = 0; i <= n && n > 0; ++i) zs = zs.vstack(x.face(n, i));
  const dk::Matrix z = dk::kernel_basis(zs);
  dk::Matrix ks(f, 0, x.dim(n + 1));
  for (int i = 0; i < n; ++i) ks = ks.vstack(x.face(n + 1, i));
  const dk::Matrix k = dk::kernel_basis(ks);
  const dk::Matrix rel = (x.face(n + 1, n) - x.face(n + 1, n + 1)) * k;
  return z.cols() - dk::rank(rel);
}

}  // namespace oracle
