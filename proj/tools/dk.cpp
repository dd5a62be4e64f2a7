#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dk/checks.hpp"
#include "dk/crossed.hpp"
#include "dk/document.hpp"
#include "dk/dold_kan.hpp"
#include "dk/generate.hpp"

using namespace dk;

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kError = 2;

class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& os) const {
    std::vector<std::size_t> width;
    for (const auto& row : rows_)
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (width.size() <= c) width.push_back(0);
        width[c] = std::max(width[c], row[c].size());
      }
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        line += row[c];
        if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
      }
      os << line << '\n';
    }
  }

  Json to_json() const {
    Json rows = Json::array();
    for (std::size_t r = 1; r < rows_.size(); ++r) {
      Json row = Json::object();
      for (std::size_t c = 0; c < rows_[r].size(); ++c) row[rows_[0][c]] = rows_[r][c];
      rows.push_back(row);
    }
    return rows;
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

struct Options {
  std::string field = "q";
  std::uint64_t seed = 1;
  std::string json_out;
  std::string file;
  std::string out;
  bool normalized = false;
  std::string mode = "chain";
  bool equivariant = false;
  int up_to = -1;
  int depth = 5;
  int internal = 5;
  std::string map;
  int target = -1;
  std::string first;
  std::string second;
  std::string group = "symmetric";
  std::string kind = "standard";
  int n = 1;
  int max_degree = 5;
  int max_level = 5;
  bool inject_fault = false;
  int splitting_level = 6;
  int multiplicativity_level = 4;
};

/// Verdict record written by --json-out.
struct Record {
  std::string command;
  bool ok = true;
  std::string witness;
  Json result = Json::object();
};

void emit(const Options& o, const Record& r) {
  if (o.json_out.empty()) return;
  Json j{{"command", r.command}, {"result", r.ok ? "pass" : "fail"}, {"value", r.result}};
  if (!r.witness.empty()) j["witness"] = r.witness;
  std::ofstream os(o.json_out);
  if (!os) throw ParseError("cannot write " + o.json_out);
  os << j.dump(2) << '\n';
}

Json write_document(const Options& o, const Payload& payload, const std::string& name) {
  const Report rep = validate(payload);
  if (!rep.ok) throw StructuralError("refusing to write an invalid document: " + rep.witness);
  Json doc = to_json(payload, name);
  const std::string text = doc.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
    return doc;
  }
  std::ofstream os(o.out);
  if (!os) throw ParseError("cannot write " + o.out);
  os << text;
  return doc;
}

/// Loads and validates; invalid payloads are input errors.
Document require_document(const Options& o) {
  if (o.file.empty()) throw ParseError("--file is required");
  Document d = load_document(o.file);
  const Report rep = validate(d.payload);
  if (!rep.ok) throw StructuralError(o.file + " does not validate: " + rep.witness);
  return d;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw ParseError("");
    } catch (const std::exception&) {
      throw ParseError("expected comma-separated integers, got '" + text + "'");
    }
  }
  return out;
}

/// "m:values/perm", e.g. "1:0,1,1/1,0,2".
CrossedMorphism parse_morphism(const std::string& text) {
  const auto colon = text.find(':');
  const auto slash = text.find('/');
  if (colon == std::string::npos || slash == std::string::npos || slash < colon)
    throw ParseError("expected target:values/permutation, got '" + text + "'");
  const auto target = parse_ints(text.substr(0, colon));
  const auto values = parse_ints(text.substr(colon + 1, slash - colon - 1));
  const auto perm = parse_ints(text.substr(slash + 1));
  if (target.size() != 1) throw ParseError("bad target in '" + text + "'");
  if (perm.size() != values.size()) throw ParseError("permutation and map sizes differ in '" + text + "'");
  return {MonotoneMap(static_cast<int>(values.size()) - 1, target[0], values), Permutation(perm)};
}

ChainComplex chain_of(const Payload& p, bool normalized) {
  if (auto* c = std::get_if<ChainComplex>(&p)) return *c;
  const SemiSimplicialModule* x = nullptr;
  if (auto* s = std::get_if<SimplicialModule>(&p)) x = s;
  if (auto* s = std::get_if<SemiSimplicialModule>(&p)) x = s;
  if (auto* s = std::get_if<CrossedModule>(&p)) x = &s->base;
  if (auto* s = std::get_if<SemiCrossedModule>(&p)) x = &s->base;
  if (!x) throw StructuralError("expected a complex or a module");
  return normalized ? moore_normalization(*x).complex : unnormalized_chain(*x);
}

int cmd_validate(const Options& o, Record& rec) {
  const Document d = load_document(o.file);
  const Report r = validate(d.payload);
  Table t({"type", "valid", "witness"});
  t.add({type_name(d.payload), r.ok ? "yes" : "no", r.ok ? "-" : r.witness});
  t.print(std::cout);
  rec.ok = r.ok;
  rec.witness = r.witness;
  rec.result = t.to_json();
  return r.ok ? kTrue : kFalse;
}

int cmd_homology(const Options& o, Record& rec) {
  const Document d = require_document(o);
  const ChainComplex c = chain_of(d.payload, o.normalized);
  const Betti b = betti(c);
  Table t({"degree", "dim", "note"});
  for (std::size_t n = 0; n < b.dims.size(); ++n)
    t.add({std::to_string(n), std::to_string(b.dims[n]), static_cast<int>(n) >= b.reliable_below ? "truncated" : "-"});
  t.print(std::cout);
  rec.result = t.to_json();
  return kTrue;
}

int cmd_pi(const Options& o, Record& rec) {
  const Document d = require_document(o);
  const SimplicialModule* x = std::get_if<SimplicialModule>(&d.payload);
  if (auto* m = std::get_if<CrossedModule>(&d.payload)) x = &m->base;
  if (!x) throw StructuralError("homotopy groups need degeneracies");
  Table t({"degree", "dim"});
  for (int n = 0; n < x->max_degree(); ++n) t.add({std::to_string(n), std::to_string(homotopy_group(*x, n).dimension)});
  t.print(std::cout);
  rec.result = t.to_json();
  return kTrue;
}

const SemiSimplicialModule& module_of(const Payload& p) {
  if (auto* s = std::get_if<SimplicialModule>(&p)) return *s;
  if (auto* s = std::get_if<SemiSimplicialModule>(&p)) return *s;
  if (auto* s = std::get_if<CrossedModule>(&p)) return s->base;
  if (auto* s = std::get_if<SemiCrossedModule>(&p)) return s->base;
  throw StructuralError("expected a simplicial or semisimplicial module");
}

int cmd_normalize(const Options& o, Record& rec) {
  const Document d = require_document(o);
  const ChainComplex c = moore_normalization(module_of(d.payload)).complex;
  const Json doc = write_document(o, c, d.name.empty() ? "" : "N(" + d.name + ")");
  rec.result = {{"dims", c.dims()}, {"document", doc}};
  return kTrue;
}

int cmd_chain(const Options& o, Record& rec) {
  const Document d = require_document(o);
  const ChainComplex c = unnormalized_chain(module_of(d.payload));
  const Json doc = write_document(o, c, d.name.empty() ? "" : "C(" + d.name + ")");
  rec.result = {{"dims", c.dims()}, {"document", doc}};
  return kTrue;
}

int cmd_inflate(const Options& o, Record& rec) {
  const Document d = require_document(o);
  const auto* c = std::get_if<ChainComplex>(&d.payload);
  if (!c) throw StructuralError("inflate expects a chain complex");
  const SemiSimplicialModule x = chain_to_semisimplicial(*c);
  const Json doc = write_document(o, x, d.name.empty() ? "" : "K(" + d.name + ")");
  rec.result = {{"dims", x.dims()}, {"document", doc}};
  return kTrue;
}

int cmd_resolve(const Options& o, Record& rec) {
  const ResolutionComplex r = point_resolution(Field::parse(o.field), o.depth, o.internal);
  Table t({"r", "dims", "homology"});
  for (int k = 0; k <= r.depth; ++k) {
    std::vector<std::size_t> dims;
    for (const auto& b : r.basis[static_cast<std::size_t>(k)]) dims.push_back(b.size());
    const bool interior = k >= 1 && k <= r.depth - 1;
    t.add({std::to_string(k), join(dims), interior ? join(r.homology[static_cast<std::size_t>(k)]) : "-"});
  }
  t.print(std::cout);
  std::cout << "square zero: " << (r.square_zero ? "yes" : "no") << "\nexact: " << (r.exact ? "yes" : "no")
            << "\noracle agrees: " << (r.oracle_agrees ? "yes" : "no") << '\n';
  rec.ok = r.square_zero && r.exact && r.oracle_agrees;
  rec.witness = r.witness;
  rec.result = {{"table", t.to_json()}, {"squareZero", r.square_zero}, {"exact", r.exact}, {"oracleAgrees", r.oracle_agrees}};
  if (!rec.ok) std::cout << "witness: " << r.witness << '\n';
  return rec.ok ? kTrue : kFalse;
}

int cmd_factorize(const Options& o, Record& rec) {
  const auto values = parse_ints(o.map);
  if (values.empty()) throw ParseError("--map is empty");
  const int target = o.target >= 0 ? o.target : *std::max_element(values.begin(), values.end());
  const SetMap alpha(static_cast<int>(values.size()) - 1, target, values);
  const auto f = factorize_set_map(alpha);
  Table t({"map", "mono", "perm"});
  t.add({alpha.to_string(), f.mono.to_string(), f.sort.to_string()});
  t.print(std::cout);
  rec.result = {{"mono", f.mono.values()}, {"perm", f.sort.values()}};
  return kTrue;
}

int cmd_compose(const Options& o, Record& rec) {
  const Family fam = family_by_name(o.group);
  const CrossedMorphism a = parse_morphism(o.first), b = parse_morphism(o.second);
  for (const auto* m : {&a, &b})
    if (!fam->contains(m->g)) throw StructuralError(m->g.to_string() + " is not in the " + fam->name() + " family");
  const CrossedMorphism c = crossed_compose(a, b, *fam);
  Table t({"first", "second", "composite", "underlying"});
  t.add({a.to_string(), b.to_string(), c.to_string(), c.underlying().to_string()});
  t.print(std::cout);
  rec.result = {{"mono", c.mono.values()}, {"target", c.mono.target()}, {"perm", c.g.values()}};
  return kTrue;
}

template <class Module>
int invariants_table(const BasicCrossedModule<Module>& m, Record& rec) {
  Table t({"degree", "dim", "invariant", "coinvariant"});
  for (int n = 0; n <= m.base.max_degree(); ++n)
    t.add({std::to_string(n), std::to_string(m.base.dim(n)), std::to_string(fixed_subspace(m, n).cols()),
           std::to_string(coinvariant_dimension(m, n))});
  t.print(std::cout);
  rec.result = {{"table", t.to_json()}};
  std::string closure = "closed";
  try {
    if constexpr (std::is_same_v<Module, SimplicialModule>) invariants(m);
    else face_invariants(m);
  } catch (const StructuralError& e) {
    closure = e.what();
  }
  std::cout << "structure maps on invariants: " << closure << '\n';
  rec.result["closure"] = closure;
  return kTrue;
}

int cmd_invariants(const Options& o, Record& rec) {
  const Document d = require_document(o);
  if (auto* m = std::get_if<CrossedModule>(&d.payload)) return invariants_table(*m, rec);
  if (auto* m = std::get_if<SemiCrossedModule>(&d.payload)) return invariants_table(*m, rec);
  throw StructuralError("invariants expects a crossed module");
}

int finish_verdict(const Verdict& v, Record& rec) {
  Table t({"verdict", "degree", "witness", "note"});
  t.add({v.holds ? "equivalence" : "not an equivalence", v.degree < 0 ? "-" : std::to_string(v.degree),
         v.witness.empty() ? "-" : v.witness, v.note.empty() ? "-" : v.note});
  t.print(std::cout);
  rec.ok = v.holds;
  rec.witness = v.witness;
  rec.result = t.to_json();
  return v.holds ? kTrue : kFalse;
}

int cmd_compare(const Options& o, Record& rec) {
  const Document d = require_document(o);
  if (o.mode != "pi" && o.mode != "chain") throw ParseError("--mode must be pi or chain");
  const EquivalenceMode mode = o.mode == "pi" ? EquivalenceMode::pi : EquivalenceMode::chain;
  return std::visit(
      [&](const auto& f) -> int {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, ChainMap>) {
          const int up = o.up_to >= 0 ? o.up_to : f.source.max_degree() - 1;
          return finish_verdict(is_quasi_iso(f, up), rec);
        } else if constexpr (std::is_same_v<T, SimplicialMap> || std::is_same_v<T, SemiSimplicialMap>) {
          if (o.equivariant) throw StructuralError("--equivariant needs a map of crossed modules");
          const int up = o.up_to >= 0 ? o.up_to : f.source.max_degree() - 1;
          return finish_verdict(is_homotopy_equivalence(f, mode, up), rec);
        } else if constexpr (std::is_same_v<T, CrossedMap> || std::is_same_v<T, SemiCrossedMap>) {
          const int up = o.up_to >= 0 ? o.up_to : f.source.base.max_degree();
          if (o.equivariant) return finish_verdict(is_equivariant_weak_equivalence(f, up), rec);
          ModuleMap<std::decay_t<decltype(f.source.base)>> plain{f.source.base, f.target.base, f.components};
          return finish_verdict(is_homotopy_equivalence(plain, mode, std::min(up, f.source.base.max_degree() - 1)), rec);
        } else {
          throw StructuralError("compare expects a map document");
        }
      },
      d.payload);
}

int cmd_generate(const Options& o, Record& rec) {
  const Field field = Field::parse(o.field);
  const int top = o.max_degree;
  std::string name;
  Payload p = ChainComplex();
  if (o.kind == "standard") {
    p = free_standard(field, o.n, top);
    name = "k[Delta^" + std::to_string(o.n) + "]";
  } else if (o.kind == "boundary") {
    p = boundary_module(field, o.n, top);
    name = "k[dDelta^" + std::to_string(o.n) + "]";
  } else if (o.kind == "constant") {
    p = constant_module(field, top);
    name = "k";
  } else if (o.kind == "point") {
    p = point_module(field, top);
    name = "k[0]";
  } else if (o.kind == "representable") {
    p = representable_crossed(family_by_name(o.group), top, field);
    name = "representable " + o.group;
  } else if (o.kind == "point-inclusion") {
    SemiSimplicialMap f = SemiSimplicialMap::zero(point_module(field, top), constant_module(field, top));
    f.components[0] = Matrix::identity(field, 1);
    p = f;
    name = "k[0] -> k";
  } else if (o.kind == "random") {
    Rng rng(o.seed);
    GeneratedModule g = random_module(field, top, rng);
    p = g.module;
    for (const auto& b : g.blocks) name += (name.empty() ? "" : " + ") + b.to_string();
  } else {
    throw ParseError("unknown --kind '" + o.kind + "'");
  }
  const Json doc = write_document(o, p, name);
  rec.result = {{"kind", o.kind}, {"name", name}, {"document", doc}};
  return kTrue;
}

int cmd_selfcheck(const Options& o, Record& rec) {
  SelfcheckOptions so;
  so.max_level = o.max_level;
  so.field = Field::parse(o.field);
  so.seed = o.seed;
  so.inject_fault = o.inject_fault;
  const auto results = run_selfcheck(so);
  Table t({"suite", "property", "cases", "result"});
  Json records = Json::array();
  for (const auto& r : results) {
    t.add({r.suite, r.property, std::to_string(r.cases), r.ok ? "pass" : "FAIL"});
    Json j{{"suite", r.suite}, {"property", r.property}, {"cases", r.cases}, {"ok", r.ok}};
    if (!r.ok) {
      j["witness"] = r.witness;
      if (rec.ok) rec.witness = r.suite + ": " + r.property + ": " + r.witness;
      rec.ok = false;
    }
    records.push_back(j);
  }
  t.print(std::cout);
  for (const auto& r : results)
    if (!r.ok) std::cout << "witness [" << r.suite << ": " << r.property << "]: " << r.witness << '\n';
  std::cout << "\neta report (informational)\n";
  Table e({"reading", "splits", "pairs", "non-multiplicative", "first"});
  Json eta = Json::array();
  for (const auto& x : eta_report(so.field, so.max_level + 1, std::min(so.max_level, 4))) {
    e.add({to_string(x.reading), x.splits ? "yes" : "no (" + x.splitting_witness + ")", std::to_string(x.pairs),
           std::to_string(x.failures), x.first_failure.empty() ? "-" : x.first_failure});
    eta.push_back({{"reading", to_string(x.reading)}, {"splits", x.splits}, {"pairs", x.pairs}, {"failures", x.failures}});
  }
  e.print(std::cout);
  rec.result = {{"properties", records}, {"eta", eta}};
  return rec.ok ? kTrue : kFalse;
}

int cmd_report(const Options& o, Record& rec) {
  Table e({"reading", "splitting", "splits", "pairs", "non-multiplicative", "first"});
  Json eta = Json::array();
  for (const auto& x : eta_report(Field::parse(o.field), o.splitting_level, o.multiplicativity_level)) {
    e.add({to_string(x.reading), "<= " + std::to_string(x.splitting_level),
           x.splits ? "yes" : "no (" + x.splitting_witness + ")", std::to_string(x.pairs), std::to_string(x.failures),
           x.first_failure.empty() ? "-" : x.first_failure});
    eta.push_back({{"reading", to_string(x.reading)}, {"splits", x.splits}, {"pairs", x.pairs},
                   {"failures", x.failures}, {"first", x.first_failure}});
  }
  e.print(std::cout);
  rec.result = eta;
  return kTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simplicial modules, Dold-Kan and crossed simplicial groups over exact fields"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--field", o.field, "q or p:<prime>")->capture_default_str();
  app.add_option("--seed", o.seed, "random seed")->capture_default_str();
  app.add_option("--json-out", o.json_out, "write a machine-readable verdict record");

  using Handler = int (*)(const Options&, Record&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto verb = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, h);
    return sub;
  };
  auto file_opt = [&](CLI::App* sub) { sub->add_option("--file", o.file, "input document")->required(); };
  auto out_opt = [&](CLI::App* sub) { sub->add_option("--out", o.out, "output document (default stdout)"); };

  file_opt(verb("validate", "check a document against its validator", cmd_validate));
  auto* homology = verb("homology", "Betti numbers of a complex or module", cmd_homology);
  file_opt(homology);
  homology->add_flag("--normalized", o.normalized, "use the Moore complex");
  file_opt(verb("pi", "homotopy group dimensions", cmd_pi));
  auto* normalize = verb("normalize", "Moore complex of a module", cmd_normalize);
  file_opt(normalize);
  out_opt(normalize);
  auto* chain = verb("chain", "unnormalized complex of a module", cmd_chain);
  file_opt(chain);
  out_opt(chain);
  auto* inflate = verb("inflate", "semisimplicial module of a complex", cmd_inflate);
  file_opt(inflate);
  out_opt(inflate);
  auto* resolve = verb("resolve", "resolution of the point module", cmd_resolve);
  resolve->add_option("--depth", o.depth, "resolution degrees")->capture_default_str();
  resolve->add_option("--internal", o.internal, "internal degrees")->capture_default_str();
  auto* factorize = verb("factorize", "monotone map and sorting permutation of a set map", cmd_factorize);
  factorize->add_option("--map", o.map, "values, comma separated")->required();
  factorize->add_option("--target", o.target, "target object (default: largest value)");
  auto* compose = verb("compose", "composite of two crossed morphisms", cmd_compose);
  compose->add_option("--first", o.first, "target:values/permutation")->required();
  compose->add_option("--second", o.second, "target:values/permutation")->required();
  compose->add_option("--group", o.group, "cyclic, symmetric or trivial")->capture_default_str();
  file_opt(verb("invariants", "invariant and coinvariant dimensions", cmd_invariants));
  auto* compare = verb("compare", "homotopy equivalence verdict for a map", cmd_compare);
  compare->add_option("--map,--file", o.file, "map document")->required();
  compare->add_option("--mode", o.mode, "pi or chain")->capture_default_str();
  compare->add_flag("--equivariant", o.equivariant, "compare on invariants");
  compare->add_option("--up-to", o.up_to, "highest degree compared");
  auto* generate = verb("generate", "write a standard document", cmd_generate);
  generate->add_option("--kind", o.kind, "standard, boundary, constant, point, representable, point-inclusion or random")
      ->capture_default_str();
  generate->add_option("--n", o.n, "simplex dimension")->capture_default_str();
  generate->add_option("--max-degree", o.max_degree, "truncation")->capture_default_str();
  generate->add_option("--group", o.group, "family for representable")->capture_default_str();
  out_opt(generate);
  auto* selfcheck = verb("selfcheck", "run every property suite", cmd_selfcheck);
  selfcheck->add_option("--max-level", o.max_level, "truncation")->capture_default_str();
  selfcheck->add_flag("--inject-fault", o.inject_fault, "corrupt one module first");
  auto* report = verb("report", "eta splitting and multiplicativity", cmd_report);
  report->add_option("--splitting-level", o.splitting_level)->capture_default_str();
  report->add_option("--multiplicativity-level", o.multiplicativity_level)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  for (const auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    Record rec;
    rec.command = sub->get_name();
    const auto start = std::chrono::steady_clock::now();
    try {
      const int code = handler(o, rec);
      emit(o, rec);
      const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
      std::cerr << sub->get_name() << ": " << took.count() << " s\n";
      return code;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kError;
    }
  }
  return kError;
}
