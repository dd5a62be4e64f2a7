#include "dk/operators.hpp"

#include <sstream>
#include <type_traits>

#include "dk/error.hpp"

namespace dk {

namespace {

Scalar sign(const Field& field, int k) { return Scalar(field, (k % 2 == 0) ? 1L : -1L); }

template <class Key>
void accumulate(Combination<Key>& c, const Key& k, const Scalar& s) {
  if (s.is_zero()) return;
  auto [it, inserted] = c.try_emplace(k, s);
  if (!inserted) {
    it->second += s;
    if (it->second.is_zero()) c.erase(it);
  }
}

void add_level(std::map<int, Scalar>& m, int n, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.try_emplace(n, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

}  // namespace

Operator::Operator(const Field& field, int source, int target) : field_(field), source_(source), target_(target) {
  if (source < -1 || target < -1) throw DimensionError("objects start at [-1]");
}

Operator Operator::of(const Field& field, const MonotoneMap& f) {
  Operator op(field, f.source(), f.target());
  op.add(f, Scalar::one(field));
  return op;
}

Operator Operator::identity(const Field& field, int n) { return of(field, MonotoneMap::identity(n)); }

Scalar Operator::coefficient(const MonotoneMap& f) const {
  auto it = terms_.find(f);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void Operator::add(const MonotoneMap& f, const Scalar& c) {
  if (f.source() != source_ || f.target() != target_)
    throw DimensionError("arrow " + f.to_string() + " does not lie in Hom([" + std::to_string(source_) + "], [" +
                         std::to_string(target_) + "])");
  if (!(c.field() == field_)) throw FieldMismatch("coefficient over " + c.field().to_string());
  accumulate(terms_, f, c);
}

void Operator::check_compatible(const Operator& o) const {
  if (!(field_ == o.field_)) throw FieldMismatch("operators over different fields");
  if (source_ != o.source_ || target_ != o.target_) throw DimensionError("operators in different Hom-spaces");
}

Operator Operator::operator+(const Operator& o) const {
  check_compatible(o);
  Operator r = *this;
  for (const auto& [f, c] : o.terms_) accumulate(r.terms_, f, c);
  return r;
}

Operator Operator::operator-(const Operator& o) const { return *this + o.scaled(-Scalar::one(field_)); }

Operator Operator::scaled(const Scalar& s) const {
  Operator r(field_, source_, target_);
  for (const auto& [f, c] : terms_) accumulate(r.terms_, f, c * s);
  return r;
}

Operator operator*(const Operator& p, const Operator& q) {
  if (!(p.field_ == q.field_)) throw FieldMismatch("operators over different fields");
  if (q.target_ != p.source_)
    throw DimensionError("product needs target " + std::to_string(q.target_) + " = source " + std::to_string(p.source_));
  Operator r(p.field_, q.source_, p.target_);
  for (const auto& [g, b] : q.terms_)
    for (const auto& [f, a] : p.terms_) accumulate(r.terms_, compose(g, f), a * b);
  return r;
}

std::string Operator::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [f, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.to_string() << "*" << f.to_string();
  }
  return os.str();
}

template <class Tag>
void check_normal_form(const LevelWord<Tag>& w) {
  if (w.source < -1) throw ParseError("word source below [-1]");
  for (std::size_t k = 0; k < w.indices.size(); ++k) {
    const int i = w.indices[k];
    if (i < 0 || i > w.level(k))
      throw ParseError("index " + std::to_string(i) + " out of range at level " + std::to_string(w.level(k)));
    if (k > 0 && w.indices[k - 1] <= i) throw ParseError("indices must strictly decrease: " + to_string(w));
  }
}

template <class Tag>
std::string to_string(const LevelWord<Tag>& w) {
  const char* g = std::is_same_v<Tag, detail::FaceTag> ? "f" : "d";
  if (w.indices.empty()) return "1_" + std::to_string(w.source);
  std::ostringstream os;
  for (std::size_t k = 0; k < w.indices.size(); ++k)
    os << (k ? " " : "") << g << "(" << w.indices[k] << "," << w.level(k) << ")";
  return os.str();
}

template void check_normal_form(const FaceWord&);
template void check_normal_form(const DWord&);
template std::string to_string(const FaceWord&);
template std::string to_string(const DWord&);

std::string to_string(const Monomial& m) {
  std::ostringstream os;
  if (!m.degeneracies.empty()) {
    os << "s(";
    for (std::size_t k = 0; k < m.degeneracies.size(); ++k) os << (k ? "," : "") << m.degeneracies[k];
    os << ") ";
  }
  os << to_string(m.word);
  return os.str();
}

Operator d_element(const Field& field, int i, int n) {
  if (n < 0 || i < 0 || i > n)
    throw DimensionError("d_{" + std::to_string(i) + "," + std::to_string(n) + "} needs 0 <= i <= n");
  Operator op(field, n - 1, n);
  for (int j = i; j <= n; ++j) op.add(MonotoneMap::coface(n, j), sign(field, j));
  return op;
}

MonotoneMap face_word_map(const FaceWord& w) {
  check_normal_form(w);
  MonotoneMap cur = MonotoneMap::identity(w.source);
  for (std::size_t k = w.indices.size(); k-- > 0;) cur = compose(cur, MonotoneMap::coface(w.level(k), w.indices[k]));
  return cur;
}

FaceWord face_word_of(const MonotoneMap& injection) {
  if (!injection.is_injective()) throw DimensionError("not an injection: " + injection.to_string());
  return FaceWord{injection.source(), epi_mono_factorize(injection).faces};
}

Combination<DWord> to_d_basis(const Field& field, const FaceWord& w) {
  check_normal_form(w);
  Combination<DWord> acc;
  acc.emplace(DWord{w.source, {}}, Scalar::one(field));
  for (std::size_t k = 0; k < w.indices.size(); ++k) {
    const int i = w.indices[k];
    const int level = w.level(k);
    const Scalar s = sign(field, i);
    Combination<DWord> next;
    for (const auto& [word, c] : acc) {
      auto extend = [&](int j, const Scalar& coeff) {
        DWord e{w.source, word.indices};
        e.indices.push_back(j);
        accumulate(next, e, coeff);
      };
      extend(i, c * s);
      const bool killed = i + 1 > level || (!word.indices.empty() && word.indices.back() == i + 1);
      if (!killed) extend(i + 1, -(c * s));
    }
    acc = std::move(next);
  }
  return acc;
}

Operator from_d_basis(const Field& field, const DWord& w) {
  check_normal_form(w);
  Operator acc = Operator::identity(field, w.target());
  for (std::size_t k = 0; k < w.indices.size(); ++k) acc = acc * d_element(field, w.indices[k], w.level(k));
  return acc;
}

Operator from_d_basis(const Field& field, const Monomial& m) {
  const MonotoneMap epi = recompose(m.source(), EpiMono{m.degeneracies, {}});
  return from_d_basis(field, m.word) * Operator::of(field, epi);
}

Combination<Monomial> to_monomial_basis(const Operator& op) {
  Combination<Monomial> out;
  for (const auto& [f, c] : op.terms()) {
    EpiMono em = epi_mono_factorize(f);
    const int image = f.source() - static_cast<int>(em.degeneracies.size());
    for (const auto& [word, a] : to_d_basis(op.field(), FaceWord{image, em.faces}))
      accumulate(out, Monomial{em.degeneracies, word}, a * c);
  }
  return out;
}

std::vector<Monomial> enumerate_monomials(int n, int m) {
  std::vector<Monomial> out;
  for (const auto& f : enumerate_hom(n, m)) {
    EpiMono em = epi_mono_factorize(f);
    const int image = n - static_cast<int>(em.degeneracies.size());
    out.push_back(Monomial{std::move(em.degeneracies), DWord{image, std::move(em.faces)}});
  }
  return out;
}

void OmegaElement::add_unit(int n, const Scalar& c) {
  if (!(c.field() == field)) throw FieldMismatch("coefficient over " + c.field().to_string());
  add_level(unit, n, c);
}

void OmegaElement::add_differential(int n, const Scalar& c) {
  if (!(c.field() == field)) throw FieldMismatch("coefficient over " + c.field().to_string());
  add_level(differential, n, c);
}

OmegaElement OmegaElement::operator+(const OmegaElement& o) const {
  if (!(field == o.field)) throw FieldMismatch("omega elements over different fields");
  OmegaElement r = *this;
  for (const auto& [n, c] : o.unit) r.add_unit(n, c);
  for (const auto& [n, c] : o.differential) r.add_differential(n, c);
  return r;
}

std::string OmegaElement::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, c] : unit) {
    os << (first ? "" : " + ") << c.to_string() << "*1_" << n;
    first = false;
  }
  for (const auto& [n, c] : differential) {
    os << (first ? "" : " + ") << c.to_string() << "*d_" << n;
    first = false;
  }
  return os.str();
}

Operator to_operator(const OmegaElement& x, int source, int target) {
  Operator op(x.field, source, target);
  if (source == target) {
    if (auto it = x.unit.find(source); it != x.unit.end()) op = Operator::identity(x.field, source).scaled(it->second);
  } else if (source + 1 == target && target >= 0) {
    if (auto it = x.differential.find(target); it != x.differential.end())
      op = d_element(x.field, 0, target).scaled(it->second);
  }
  return op;
}

OmegaElement eta(const Field& field, const Monomial& m, EtaReading reading) {
  check_normal_form(m.word);
  OmegaElement r{field, {}, {}};
  if (!m.degeneracies.empty()) return r;
  if (m.word.indices.empty()) {
    if (reading == EtaReading::amended) r.add_unit(m.word.source, Scalar::one(field));
    return r;
  }
  if (m.word.indices.size() == 1 && m.word.indices[0] == 0) r.add_differential(m.word.target(), Scalar::one(field));
  return r;
}

OmegaElement eta(const Operator& op, EtaReading reading) {
  // Only 1_n and ∂^n_0 have d-expansions touching an Ω generator: the
  // identity is its own monomial and ∂^n_0 = d_{0,n} - d_{1,n}.
  OmegaElement r{op.field(), {}, {}};
  if (op.source() == op.target() && reading == EtaReading::amended)
    r.add_unit(op.source(), op.coefficient(MonotoneMap::identity(op.source())));
  if (op.source() + 1 == op.target())
    r.add_differential(op.target(), op.coefficient(MonotoneMap::coface(op.target(), 0)));
  return r;
}

}  // namespace dk
