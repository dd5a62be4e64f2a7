#include "dk/document.hpp"

#include <fstream>

namespace dk {

namespace {

std::string at(const std::string& where, std::size_t k) { return where + "[" + std::to_string(k) + "]"; }

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing '" + key + "'");
  return *it;
}

const Json& array_of(const Json& j, std::size_t size, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  if (j.size() != size)
    throw ParseError(where + ": expected " + std::to_string(size) + " entries, got " + std::to_string(j.size()));
  return j;
}

Scalar scalar_from_json(const Json& j, const Field& field, const std::string& where) {
  try {
    if (j.is_string()) return Scalar::parse(field, j.get<std::string>());
    if (j.is_number_integer()) return Scalar::parse(field, j.dump());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": expected a scalar string");
}

std::vector<std::size_t> dims_from_json(const Json& j, int max_degree, const std::string& where) {
  const Json& d = array_of(member(j, "dims", where), static_cast<std::size_t>(max_degree + 1), where + ".dims");
  std::vector<std::size_t> dims;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (!d[k].is_number_unsigned()) throw ParseError(at(where + ".dims", k) + ": expected a nonnegative integer");
    dims.push_back(d[k].get<std::size_t>());
  }
  return dims;
}

int max_degree_from_json(const Json& j, const std::string& where) {
  const Json& n = member(j, "maxDegree", where);
  if (!n.is_number_unsigned()) throw ParseError(where + ".maxDegree: expected a nonnegative integer");
  return n.get<int>();
}

Field field_from_json(const Json& j, const std::string& where) {
  const Json& f = member(j, "field", where);
  if (!f.is_string()) throw ParseError(where + ".field: expected a string");
  try {
    return Field::parse(f.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ".field: " + e.what());
  }
}

std::vector<std::vector<Matrix>> faces_from_json(const Json& j, const Field& field, const std::vector<std::size_t>& dims,
                                                 const std::string& where) {
  const int top = static_cast<int>(dims.size()) - 1;
  const Json& f = array_of(member(j, "faces", where), static_cast<std::size_t>(top), where + ".faces");
  std::vector<std::vector<Matrix>> faces(dims.size());
  for (int n = 1; n <= top; ++n) {
    const std::string w = at(where + ".faces", static_cast<std::size_t>(n - 1));
    const Json& level = array_of(f[static_cast<std::size_t>(n - 1)], static_cast<std::size_t>(n + 1), w);
    for (int i = 0; i <= n; ++i)
      faces[static_cast<std::size_t>(n)].push_back(matrix_from_json(
          level[static_cast<std::size_t>(i)], field, dims[static_cast<std::size_t>(n - 1)], dims[static_cast<std::size_t>(n)], at(w, static_cast<std::size_t>(i))));
  }
  return faces;
}

std::vector<std::vector<Matrix>> degeneracies_from_json(const Json& j, const Field& field,
                                                        const std::vector<std::size_t>& dims, const std::string& where) {
  const int top = static_cast<int>(dims.size()) - 1;
  const Json& s = array_of(member(j, "degeneracies", where), static_cast<std::size_t>(top), where + ".degeneracies");
  std::vector<std::vector<Matrix>> degs(static_cast<std::size_t>(top));
  for (int n = 0; n < top; ++n) {
    const std::string w = at(where + ".degeneracies", static_cast<std::size_t>(n));
    const Json& level = array_of(s[static_cast<std::size_t>(n)], static_cast<std::size_t>(n + 1), w);
    for (int i = 0; i <= n; ++i)
      degs[static_cast<std::size_t>(n)].push_back(matrix_from_json(
          level[static_cast<std::size_t>(i)], field, dims[static_cast<std::size_t>(n + 1)], dims[static_cast<std::size_t>(n)], at(w, static_cast<std::size_t>(i))));
  }
  return degs;
}

std::vector<Matrix> components_from_json(const Json& j, const Field& field, const std::vector<std::size_t>& source,
                                         const std::vector<std::size_t>& target, const std::string& where) {
  if (source.size() != target.size()) throw ParseError(where + ": source and target truncations differ");
  const Json& c = array_of(member(j, "components", where), source.size(), where + ".components");
  std::vector<Matrix> out;
  for (std::size_t n = 0; n < source.size(); ++n)
    out.push_back(matrix_from_json(c[n], field, target[n], source[n], at(where + ".components", n)));
  return out;
}

Json dims_json(const std::vector<std::size_t>& dims) { return Json(dims); }

Json faces_json(const SemiSimplicialModule& x) {
  Json f = Json::array();
  for (int n = 1; n <= x.max_degree(); ++n) {
    Json level = Json::array();
    for (int i = 0; i <= n; ++i) level.push_back(matrix_to_json(x.face(n, i)));
    f.push_back(level);
  }
  return f;
}

Json module_json(const SemiSimplicialModule& x, const SimplicialModule* full) {
  Json j{{"field", x.field().to_string()},
         {"type", full ? "simplicial" : "semisimplicial"},
         {"maxDegree", x.max_degree()},
         {"dims", dims_json(x.dims())},
         {"faces", faces_json(x)}};
  if (full) {
    Json d = Json::array();
    for (int n = 0; n < full->max_degree(); ++n) {
      Json level = Json::array();
      for (int i = 0; i <= n; ++i) level.push_back(matrix_to_json(full->degeneracy(n, i)));
      d.push_back(level);
    }
    j["degeneracies"] = d;
  }
  return j;
}

Json chain_json(const ChainComplex& c) {
  Json d = Json::array();
  for (const auto& m : c.differentials()) d.push_back(matrix_to_json(m));
  return Json{{"field", c.field().to_string()},
              {"type", "chain"},
              {"maxDegree", c.max_degree()},
              {"dims", dims_json(c.dims())},
              {"differentials", d}};
}

template <class Module>
Json crossed_json(const BasicCrossedModule<Module>& m) {
  Json a = Json::array();
  for (const auto& level : m.actions) {
    Json l = Json::array();
    for (const auto& g : level) l.push_back(matrix_to_json(g));
    a.push_back(l);
  }
  const SimplicialModule* full = nullptr;
  if constexpr (std::is_same_v<Module, SimplicialModule>) full = &m.base;
  return Json{{"field", m.base.field().to_string()},
              {"type", "crossed"},
              {"group", m.family->name()},
              {"base", module_json(m.base, full)},
              {"actions", a}};
}

Json components_json(const std::vector<Matrix>& comps) {
  Json c = Json::array();
  for (const auto& m : comps) c.push_back(matrix_to_json(m));
  return c;
}

Json map_json(const Json& source, const Json& target, const std::vector<Matrix>& comps, const Field& field) {
  return Json{{"field", field.to_string()}, {"type", "map"}, {"source", source}, {"target", target},
              {"components", components_json(comps)}};
}

Payload parse_payload(const Json& j, const std::filesystem::path& base_dir, const std::string& where);

Payload resolve(const Json& j, const std::filesystem::path& base_dir, const std::string& where) {
  if (j.is_string()) {
    const std::filesystem::path p = base_dir / j.get<std::string>();
    std::ifstream in(p);
    if (!in) throw ParseError(where + ": cannot open " + p.string());
    Json inner;
    try {
      inner = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw ParseError(p.string() + ": " + e.what());
    }
    return parse_payload(inner, p.parent_path(), p.string());
  }
  return parse_payload(j, base_dir, where);
}

template <class Module>
BasicCrossedModule<Module> crossed_from_json(const Json& j, const Module& base, const Family& family, const Field& field,
                                             const std::string& where) {
  const Json& a = array_of(member(j, "actions", where), base.dims().size(), where + ".actions");
  BasicCrossedModule<Module> m{base, family, {}};
  for (int n = 0; n <= base.max_degree(); ++n) {
    const std::string w = at(where + ".actions", static_cast<std::size_t>(n));
    const Json& level = array_of(a[static_cast<std::size_t>(n)], family->generators(n).size(), w);
    m.actions.emplace_back();
    for (std::size_t k = 0; k < level.size(); ++k)
      m.actions.back().push_back(matrix_from_json(level[k], field, base.dim(n), base.dim(n), at(w, k)));
  }
  return m;
}

Payload parse_payload(const Json& j, const std::filesystem::path& base_dir, const std::string& where) {
  const Field field = field_from_json(j, where);
  const Json& t = member(j, "type", where);
  if (!t.is_string()) throw ParseError(where + ".type: expected a string");
  const std::string type = t.get<std::string>();
  if (type == "chain") {
    const int top = max_degree_from_json(j, where);
    const auto dims = dims_from_json(j, top, where);
    const Json& d = array_of(member(j, "differentials", where), static_cast<std::size_t>(top), where + ".differentials");
    std::vector<Matrix> diffs;
    for (int n = 1; n <= top; ++n)
      diffs.push_back(matrix_from_json(d[static_cast<std::size_t>(n - 1)], field, dims[static_cast<std::size_t>(n - 1)],
                                       dims[static_cast<std::size_t>(n)], at(where + ".differentials", static_cast<std::size_t>(n - 1))));
    return ChainComplex(field, dims, std::move(diffs));
  }
  if (type == "simplicial" || type == "semisimplicial") {
    const int top = max_degree_from_json(j, where);
    const auto dims = dims_from_json(j, top, where);
    auto faces = faces_from_json(j, field, dims, where);
    if (type == "semisimplicial") return SemiSimplicialModule(field, dims, std::move(faces));
    return SimplicialModule(field, dims, std::move(faces), degeneracies_from_json(j, field, dims, where));
  }
  if (type == "crossed") {
    const Json& g = member(j, "group", where);
    if (!g.is_string()) throw ParseError(where + ".group: expected a string");
    const Family family = family_by_name(g.get<std::string>());
    const Payload base = parse_payload(member(j, "base", where), base_dir, where + ".base");
    if (auto* full = std::get_if<SimplicialModule>(&base)) return crossed_from_json(j, *full, family, field, where);
    if (auto* semi = std::get_if<SemiSimplicialModule>(&base)) return crossed_from_json(j, *semi, family, field, where);
    throw ParseError(where + ".base: expected a simplicial or semisimplicial module");
  }
  if (type == "map") {
    Payload s = resolve(member(j, "source", where), base_dir, where + ".source");
    Payload r = resolve(member(j, "target", where), base_dir, where + ".target");
    if (auto* full = std::get_if<SimplicialModule>(&s); full && std::holds_alternative<SemiSimplicialModule>(r))
      s = SemiSimplicialModule(*full);
    if (auto* full = std::get_if<SimplicialModule>(&r); full && std::holds_alternative<SemiSimplicialModule>(s))
      r = SemiSimplicialModule(*full);
    if (s.index() != r.index()) throw ParseError(where + ": source and target have different types");
    return std::visit(
        [&](const auto& src) -> Payload {
          using T = std::decay_t<decltype(src)>;
          const T& tgt = std::get<T>(r);
          if constexpr (std::is_same_v<T, ChainComplex>) {
            return ChainMap{src, tgt, components_from_json(j, field, src.dims(), tgt.dims(), where)};
          } else if constexpr (std::is_same_v<T, SimplicialModule>) {
            return SimplicialMap{src, tgt, components_from_json(j, field, src.dims(), tgt.dims(), where)};
          } else if constexpr (std::is_same_v<T, SemiSimplicialModule>) {
            return SemiSimplicialMap{src, tgt, components_from_json(j, field, src.dims(), tgt.dims(), where)};
          } else if constexpr (std::is_same_v<T, CrossedModule>) {
            return CrossedMap{src, tgt, components_from_json(j, field, src.base.dims(), tgt.base.dims(), where)};
          } else if constexpr (std::is_same_v<T, SemiCrossedModule>) {
            return SemiCrossedMap{src, tgt, components_from_json(j, field, src.base.dims(), tgt.base.dims(), where)};
          } else {
            throw ParseError(where + ": maps between maps are not documents");
          }
        },
        s);
  }
  throw ParseError(where + ".type: unknown type '" + type + "'");
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).to_string());
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, const Field& field, std::size_t rows, std::size_t cols, const std::string& where) {
  const Json& r = array_of(j, rows, where);
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = array_of(r[i], cols, at(where, i));
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = scalar_from_json(row[k], field, at(at(where, i), k));
  }
  return m;
}

Document parse_document(const Json& j, const std::filesystem::path& base_dir) {
  Document d{"", parse_payload(j, base_dir, "$")};
  if (j.contains("name") && j["name"].is_string()) d.name = j["name"].get<std::string>();
  return d;
}

Document load_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return parse_document(j, path.parent_path().empty() ? std::filesystem::path(".") : path.parent_path());
}

Json to_json(const Payload& payload, const std::string& name) {
  Json j = std::visit(
      [](const auto& p) -> Json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, ChainComplex>) return chain_json(p);
        else if constexpr (std::is_same_v<T, SimplicialModule>) return module_json(p, &p);
        else if constexpr (std::is_same_v<T, SemiSimplicialModule>) return module_json(p, nullptr);
        else if constexpr (std::is_same_v<T, CrossedModule> || std::is_same_v<T, SemiCrossedModule>) return crossed_json(p);
        else if constexpr (std::is_same_v<T, ChainMap>)
          return map_json(chain_json(p.source), chain_json(p.target), p.components, p.source.field());
        else if constexpr (std::is_same_v<T, SimplicialMap>)
          return map_json(module_json(p.source, &p.source), module_json(p.target, &p.target), p.components, p.source.field());
        else if constexpr (std::is_same_v<T, SemiSimplicialMap>)
          return map_json(module_json(p.source, nullptr), module_json(p.target, nullptr), p.components, p.source.field());
        else
          return map_json(crossed_json(p.source), crossed_json(p.target), p.components, p.source.base.field());
      },
      payload);
  if (!name.empty()) j["name"] = name;
  return j;
}

Json to_json(const Document& doc) { return to_json(doc.payload, doc.name); }

Report validate(const Payload& payload) {
  return std::visit(
      [](const auto& p) -> Report {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, CrossedModule> || std::is_same_v<T, SemiCrossedModule>) return validate_crossed(p);
        else return validate(p);
      },
      payload);
}

std::string type_name(const Payload& payload) {
  switch (payload.index()) {
    case 0: return "chain";
    case 1: return "simplicial";
    case 2: return "semisimplicial";
    case 3:
    case 4: return "crossed";
    default: return "map";
  }
}

}  // namespace dk
