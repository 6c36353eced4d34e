#include "msrlab/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

namespace msrlab {
namespace {

using ojson = nlohmann::ordered_json;
using json = nlohmann::json;

// ---------------------------------------------------------------- writing

bool scalar_array(const ojson& v) {
  return std::all_of(v.begin(), v.end(), [](const ojson& e) { return e.is_primitive(); });
}

void emit(std::ostringstream& os, const ojson& v, int indent) {
  const std::string pad(indent * 2, ' '), inner((indent + 1) * 2, ' ');
  if (v.is_object()) {
    if (v.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    std::size_t i = 0;
    for (auto it = v.begin(); it != v.end(); ++it, ++i) {
      os << inner << ojson(it.key()).dump() << ": ";
      emit(os, it.value(), indent + 1);
      os << (i + 1 < v.size() ? ",\n" : "\n");
    }
    os << pad << "}";
  } else if (v.is_array()) {
    if (scalar_array(v)) {
      os << "[";
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].dump();
      os << "]";
      return;
    }
    os << "[\n";
    for (std::size_t i = 0; i < v.size(); ++i) {
      os << inner;
      emit(os, v[i], indent + 1);
      os << (i + 1 < v.size() ? ",\n" : "\n");
    }
    os << pad << "]";
  } else {
    os << v.dump();
  }
}

ojson one_based(const std::vector<std::size_t>& v) {
  ojson out = ojson::array();
  for (auto x : v) out.push_back(x + 1);
  return out;
}

ojson matrix_json(const Matrix& m) {
  ojson out = ojson::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(ojson(std::vector<Elem>(m.row(r).begin(), m.row(r).end())));
  return out;
}

ojson repair_matrix_json(const RepairMatrix& m) {
  ojson out = ojson::object();
  if (m.is_access())
    out["access"] = one_based(m.access_rows());
  else
    out["full"] = matrix_json(m.full_matrix());
  return out;
}

std::string key_text(std::size_t helper, std::size_t failed, const std::vector<std::size_t>* set) {
  std::string s = std::to_string(helper + 1) + "," + std::to_string(failed + 1);
  if (set)
    for (auto h : *set) s += "," + std::to_string(h + 1);
  return s;
}

ojson repair_json(const CodeSpec& spec, const RepairScheme& scheme) {
  ojson out = ojson::object();
  out["w_nodes"] = one_based(scheme.w_nodes);
  out["mode"] = to_string(scheme.mode);
  // Sorted by failed node, then helper set, then helper.
  std::vector<std::tuple<std::size_t, std::vector<std::size_t>, std::size_t, std::string, const RepairMatrix*>> rows;
  for (const auto& [key, m] : scheme.entries) {
    if (scheme.mode == RepairMode::Constant) {
      for (std::size_t h = 0; h < spec.params.n; ++h)
        if (h != key.failed) rows.emplace_back(key.failed, std::vector<std::size_t>{}, h, key_text(h, key.failed, nullptr), &m);
    } else {
      const auto* set = key.helpers ? &*key.helpers : nullptr;
      rows.emplace_back(key.failed, set ? *set : std::vector<std::size_t>{}, *key.helper,
                        key_text(*key.helper, key.failed, set), &m);
    }
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a), std::get<2>(a)) <
           std::tie(std::get<0>(b), std::get<1>(b), std::get<2>(b));
  });
  ojson matrices = ojson::object();
  for (const auto& row : rows) matrices[std::get<3>(row)] = repair_matrix_json(*std::get<4>(row));
  out["matrices"] = std::move(matrices);
  return out;
}

// ---------------------------------------------------------------- reading

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::ParseError, path + ": " + what);
}

void only_keys(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) fail(path, "expected an object");
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return it.key() == k; }))
      fail(path, "unknown key '" + it.key() + "'");
}

const json& need(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing key '") + key + "'");
  return *it;
}

std::uint64_t as_uint(const json& v, const std::string& path) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    fail(path, "expected a non-negative integer");
  return v.get<std::uint64_t>();
}

std::vector<std::size_t> node_list(const json& v, const std::string& path, std::size_t n) {
  if (!v.is_array()) fail(path, "expected an array");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto x = as_uint(v[i], path + "[" + std::to_string(i) + "]");
    if (x < 1 || x > n) fail(path + "[" + std::to_string(i) + "]", "node " + std::to_string(x) + " outside 1.." + std::to_string(n));
    out.push_back(x - 1);
  }
  return out;
}

Matrix read_matrix(const json& v, const std::string& path, const FieldPtr& field, std::size_t rows,
                   std::size_t cols) {
  if (!v.is_array() || v.size() != rows) fail(path, "expected " + std::to_string(rows) + " rows");
  Matrix m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rp = path + "[" + std::to_string(r) + "]";
    if (!v[r].is_array() || v[r].size() != cols) fail(rp, "expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      const std::string cp = rp + "[" + std::to_string(c) + "]";
      const auto x = as_uint(v[r][c], cp);
      if (x >= field->order())
        fail(cp, "entry " + std::to_string(x) + " out of range for q=" + std::to_string(field->order()));
      m(r, c) = static_cast<Elem>(x);
    }
  }
  return m;
}

FieldPtr read_field(const json& v) {
  only_keys(v, "field", {"p", "m", "poly"});
  const auto p = as_uint(need(v, "p", "field"), "field.p");
  const auto m = as_uint(need(v, "m", "field"), "field.m");
  std::vector<std::uint32_t> poly;
  const json& pj = need(v, "poly", "field");
  if (!pj.is_null()) {
    if (!pj.is_array()) fail("field.poly", "expected an array or null");
    for (std::size_t i = 0; i < pj.size(); ++i)
      poly.push_back(static_cast<std::uint32_t>(as_uint(pj[i], "field.poly[" + std::to_string(i) + "]")));
  }
  if (p > Field::kMaxOrder || m > 16) fail("field", "field too large");
  try {
    return Field::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m), std::move(poly));
  } catch (const Error& e) {
    fail("field", e.what());
  }
}

RepairMatrix read_repair_matrix(const json& v, const std::string& path, const FieldPtr& field, std::size_t alpha,
                                std::size_t beta) {
  only_keys(v, path, {"access", "full"});
  if (v.contains("access") == v.contains("full")) fail(path, "expected exactly one of 'access' or 'full'");
  try {
    if (v.contains("access")) {
      const json& a = v["access"];
      if (!a.is_array()) fail(path + ".access", "expected an array");
      std::vector<std::size_t> rows;
      for (std::size_t i = 0; i < a.size(); ++i) {
        const auto x = as_uint(a[i], path + ".access[" + std::to_string(i) + "]");
        if (x < 1 || x > alpha) fail(path + ".access[" + std::to_string(i) + "]", "row outside 1..alpha");
        rows.push_back(x - 1);
      }
      return RepairMatrix::access(std::move(rows), alpha);
    }
    return RepairMatrix::full(read_matrix(v["full"], path + ".full", field, beta, alpha));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    fail(path, e.what());
  }
}

RepairScheme read_repair(const json& v, const CodeSpec& spec) {
  only_keys(v, "repair", {"w_nodes", "mode", "matrices"});
  const std::size_t n = spec.params.n, alpha = spec.params.alpha;
  const std::size_t beta = alpha / spec.params.s();
  RepairScheme scheme;
  scheme.w_nodes = node_list(need(v, "w_nodes", "repair"), "repair.w_nodes", n);
  const json& mj = need(v, "mode", "repair");
  if (!mj.is_string()) fail("repair.mode", "expected a string");
  try {
    scheme.mode = parse_repair_mode(mj.get<std::string>());
  } catch (const Error& e) {
    fail("repair.mode", e.what());
  }
  const json& mats = need(v, "matrices", "repair");
  if (!mats.is_object()) fail("repair.matrices", "expected an object");

  std::map<std::size_t, std::map<std::size_t, RepairMatrix>> constant;  // failed -> helper -> matrix
  for (auto it = mats.begin(); it != mats.end(); ++it) {
    const std::string path = "repair.matrices[\"" + it.key() + "\"]";
    std::vector<std::size_t> parts;
    std::stringstream ss(it.key());
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit)) fail(path, "malformed key");
      const auto x = std::stoull(tok);
      if (x < 1 || x > n) fail(path, "node outside 1.." + std::to_string(n));
      parts.push_back(x - 1);
    }
    if (parts.size() < 2) fail(path, "key needs at least helper and failed node");
    RepairMatrix m = read_repair_matrix(it.value(), path, spec.field(), alpha, beta);
    const std::size_t helper = parts[0], failed = parts[1];
    if (parts.size() > 2) {
      if (scheme.mode != RepairMode::General) fail(path, "helper sets are only allowed in general mode");
      scheme.set(helper, failed, std::vector<std::size_t>(parts.begin() + 2, parts.end()), std::move(m));
    } else if (scheme.mode == RepairMode::General) {
      fail(path, "general mode entries need a helper set");
    } else if (scheme.mode == RepairMode::HelperIndependent) {
      scheme.set(helper, failed, std::move(m));
    } else {
      constant[failed].insert_or_assign(helper, std::move(m));
    }
  }
  for (auto& [failed, by_helper] : constant) {
    const RepairMatrix& first = by_helper.begin()->second;
    if (by_helper.size() != n - 1)
      fail("repair.matrices", "constant entry for node " + std::to_string(failed + 1) + " must list every helper");
    for (const auto& [h, m] : by_helper)
      if (!(m == first))
        fail("repair.matrices", "constant entries for node " + std::to_string(failed + 1) + " differ between helpers");
    scheme.set_constant(failed, first);
  }
  try {
    scheme.validate(spec);
  } catch (const Error& e) {
    fail("repair", e.what());
  }
  return scheme;
}

StructureMeta read_structure(const json& v, std::size_t alpha) {
  only_keys(v, "structure", {"case", "Q", "supports", "coefficient_sources"});
  StructureMeta meta;
  const auto c = as_uint(need(v, "case", "structure"), "structure.case");
  if (c != 1 && c != 2) fail("structure.case", "expected 1 or 2");
  meta.case_id = static_cast<int>(c);
  meta.Q = as_uint(need(v, "Q", "structure"), "structure.Q");
  const json& sup = need(v, "supports", "structure");
  if (!sup.is_array()) fail("structure.supports", "expected an array");
  for (std::size_t j = 0; j < sup.size(); ++j) {
    const std::string pj = "structure.supports[" + std::to_string(j) + "]";
    if (!sup[j].is_array()) fail(pj, "expected an array");
    std::vector<std::vector<std::size_t>> rows;
    for (std::size_t t = 0; t < sup[j].size(); ++t) rows.push_back(node_list(sup[j][t], pj + "[" + std::to_string(t) + "]", alpha));
    meta.supports.push_back(std::move(rows));
  }
  const json& src = need(v, "coefficient_sources", "structure");
  if (!src.is_array()) fail("structure.coefficient_sources", "expected an array");
  for (const auto& s : src) {
    if (!s.is_string()) fail("structure.coefficient_sources", "expected strings");
    meta.coefficient_sources.push_back(s.get<std::string>());
  }
  return meta;
}

}  // namespace

std::string serialize(const CodeFile& file) {
  const CodeSpec& spec = file.spec;
  const Field& f = *spec.field();
  ojson root = ojson::object();
  ojson field = ojson::object();
  field["p"] = f.characteristic();
  field["m"] = f.degree();
  field["poly"] = f.poly().empty() ? ojson(nullptr) : ojson(f.poly());
  root["field"] = std::move(field);
  ojson params = ojson::object();
  params["n"] = spec.params.n;
  params["k"] = spec.params.k;
  params["d"] = spec.params.d;
  params["alpha"] = spec.params.alpha;
  root["params"] = std::move(params);
  root["systematic"] = one_based(spec.systematic);
  root["parity"] = one_based(spec.parity);
  ojson grid = ojson::array();
  for (std::size_t i = 0; i < spec.params.r(); ++i) {
    ojson row = ojson::array();
    for (std::size_t j = 0; j < spec.params.k; ++j) row.push_back(matrix_json(spec.A(i, j)));
    grid.push_back(std::move(row));
  }
  root["A"] = std::move(grid);
  if (file.scheme) root["repair"] = repair_json(spec, *file.scheme);
  if (file.structure) {
    const auto& s = *file.structure;
    ojson st = ojson::object();
    st["case"] = s.case_id;
    st["Q"] = s.Q;
    ojson sup = ojson::array();
    for (const auto& node : s.supports) {
      ojson rows = ojson::array();
      for (const auto& row : node) rows.push_back(one_based(row));
      sup.push_back(std::move(rows));
    }
    st["supports"] = std::move(sup);
    st["coefficient_sources"] = s.coefficient_sources;
    root["structure"] = std::move(st);
  }
  std::ostringstream os;
  emit(os, root, 0);
  os << "\n";
  return os.str();
}

CodeFile deserialize(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed JSON: ") + e.what());
  }
  only_keys(root, "$", {"field", "params", "systematic", "parity", "A", "repair", "structure"});
  CodeFile file;
  CodeSpec& spec = file.spec;
  spec.params.field = read_field(need(root, "field", "$"));
  const json& pj = need(root, "params", "$");
  only_keys(pj, "params", {"n", "k", "d", "alpha"});
  spec.params.n = as_uint(need(pj, "n", "params"), "params.n");
  spec.params.k = as_uint(need(pj, "k", "params"), "params.k");
  spec.params.d = as_uint(need(pj, "d", "params"), "params.d");
  spec.params.alpha = as_uint(need(pj, "alpha", "params"), "params.alpha");
  if (spec.params.n > 4096 || spec.params.alpha > 4096) fail("params", "dimensions too large");
  try {
    spec.params.validate();
  } catch (const Error& e) {
    fail("params", e.what());
  }
  spec.systematic = node_list(need(root, "systematic", "$"), "systematic", spec.params.n);
  spec.parity = node_list(need(root, "parity", "$"), "parity", spec.params.n);
  const json& grid = need(root, "A", "$");
  const std::size_t r = spec.params.r(), k = spec.params.k, a = spec.params.alpha;
  if (!grid.is_array() || grid.size() != r) fail("A", "expected " + std::to_string(r) + " rows of blocks");
  for (std::size_t i = 0; i < r; ++i) {
    const std::string pi = "A[" + std::to_string(i) + "]";
    if (!grid[i].is_array() || grid[i].size() != k) fail(pi, "expected " + std::to_string(k) + " blocks");
    for (std::size_t j = 0; j < k; ++j)
      spec.blocks.push_back(read_matrix(grid[i][j], pi + "[" + std::to_string(j) + "]", spec.field(), a, a));
  }
  try {
    spec.validate();
  } catch (const Error& e) {
    fail("$", e.what());
  }
  if (root.contains("repair")) file.scheme = read_repair(root["repair"], spec);
  if (root.contains("structure")) file.structure = read_structure(root["structure"], a);
  return file;
}

CodeFile read_code_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return deserialize(ss.str());
}

void write_code_file(const std::string& path, const CodeFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidParams, "cannot write " + path);
  out << serialize(file);
}

}  // namespace msrlab
