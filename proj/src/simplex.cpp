#include "dk/simplex.hpp"

#include <sstream>

#include "dk/error.hpp"

namespace dk {

MonotoneMap::MonotoneMap(int source, int target, std::vector<int> values)
    : source_(source), target_(target), values_(std::move(values)) {
  if (source < -1 || target < -1) throw DimensionError("objects start at [-1]");
  if (static_cast<int>(values_.size()) != source + 1)
    throw DimensionError("monotone map [" + std::to_string(source) + "] needs " + std::to_string(source + 1) + " values");
  for (std::size_t j = 0; j < values_.size(); ++j) {
    if (values_[j] < 0 || values_[j] > target)
      throw DimensionError("value " + std::to_string(values_[j]) + " outside [" + std::to_string(target) + "]");
    if (j > 0 && values_[j] < values_[j - 1]) throw DimensionError("values are not weakly increasing: " + to_string());
  }
}

MonotoneMap MonotoneMap::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n + 1));
  for (int j = 0; j <= n; ++j) v[static_cast<std::size_t>(j)] = j;
  return MonotoneMap(n, n, std::move(v));
}

MonotoneMap MonotoneMap::coface(int level, int missed) {
  if (level < 0 || missed < 0 || missed > level)
    throw DimensionError("coface index " + std::to_string(missed) + " at level " + std::to_string(level));
  std::vector<int> v;
  for (int j = 0; j < level; ++j) v.push_back(j < missed ? j : j + 1);
  return MonotoneMap(level - 1, level, std::move(v));
}

MonotoneMap MonotoneMap::codegeneracy(int level, int i) {
  if (level < 0 || i < 0 || i > level)
    throw DimensionError("codegeneracy index " + std::to_string(i) + " at level " + std::to_string(level));
  std::vector<int> v;
  for (int j = 0; j <= level + 1; ++j) v.push_back(j <= i ? j : j - 1);
  return MonotoneMap(level + 1, level, std::move(v));
}

bool MonotoneMap::is_identity() const { return source_ == target_ && is_injective(); }

bool MonotoneMap::is_injective() const {
  for (std::size_t j = 1; j < values_.size(); ++j)
    if (values_[j] == values_[j - 1]) return false;
  return true;
}

bool MonotoneMap::is_surjective() const {
  int next = 0;
  for (int v : values_) {
    if (v > next) return false;
    if (v == next) ++next;
  }
  return next == target_ + 1;
}

std::string MonotoneMap::to_string() const {
  std::ostringstream os;
  os << "[" << source_ << "]->[" << target_ << "](";
  for (std::size_t j = 0; j < values_.size(); ++j) os << (j ? "," : "") << values_[j];
  os << ")";
  return os.str();
}

MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g) {
  if (f.target() != g.source())
    throw DimensionError("cannot compose " + f.to_string() + " then " + g.to_string());
  std::vector<int> v;
  v.reserve(f.values().size());
  for (int x : f.values()) v.push_back(g(x));
  return MonotoneMap(f.source(), g.target(), std::move(v));
}

EpiMono epi_mono_factorize(const MonotoneMap& f) {
  EpiMono w;
  const auto& v = f.values();
  for (int j = static_cast<int>(v.size()) - 2; j >= 0; --j)
    if (v[static_cast<std::size_t>(j)] == v[static_cast<std::size_t>(j) + 1]) w.degeneracies.push_back(j);
  std::vector<bool> hit(static_cast<std::size_t>(f.target() + 1), false);
  for (int x : v) hit[static_cast<std::size_t>(x)] = true;
  for (int i = f.target(); i >= 0; --i)
    if (!hit[static_cast<std::size_t>(i)]) w.faces.push_back(i);
  return w;
}

MonotoneMap recompose(int source, const EpiMono& word) {
  MonotoneMap cur = MonotoneMap::identity(source);
  for (int j : word.degeneracies) cur = compose(cur, MonotoneMap::codegeneracy(cur.target() - 1, j));
  for (auto it = word.faces.rbegin(); it != word.faces.rend(); ++it)
    cur = compose(cur, MonotoneMap::coface(cur.target() + 1, *it));
  return cur;
}

std::vector<MonotoneMap> enumerate_hom(int n, int m) {
  std::vector<MonotoneMap> out;
  if (n < -1 || m < -1) return out;
  if (n == -1) {
    out.emplace_back(-1, m, std::vector<int>{});
    return out;
  }
  if (m == -1) return out;
  std::vector<int> v(static_cast<std::size_t>(n + 1), 0);
  while (true) {
    out.emplace_back(n, m, v);
    // next weakly increasing sequence in lexicographic order
    int k = n;
    while (k >= 0 && v[static_cast<std::size_t>(k)] == m) --k;
    if (k < 0) break;
    const int next = v[static_cast<std::size_t>(k)] + 1;
    for (int j = k; j <= n; ++j) v[static_cast<std::size_t>(j)] = next;
  }
  return out;
}

long binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace dk
