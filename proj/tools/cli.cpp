#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "msrlab/analysis.hpp"
#include "msrlab/bounds.hpp"
#include "msrlab/combinatorics.hpp"
#include "msrlab/construction.hpp"
#include "msrlab/search.hpp"
#include "msrlab/serialize.hpp"

namespace msrlab::cli {

namespace {

using ojson = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ojson one_based(const std::vector<std::size_t>& v) {
  ojson out = ojson::array();
  for (auto x : v) out.push_back(x + 1);
  return out;
}

ojson bigint_json(const BigInt& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  return v.str();
}

std::vector<std::size_t> parse_nodes(const std::string& text, std::size_t n, const std::string& what) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      throw UsageError(what + ": '" + item + "' is not a node index");
    }
    if (pos != item.size() || v < 1 || v > n)
      throw UsageError(what + ": node " + item + " is outside 1.." + std::to_string(n));
    out.push_back(v - 1);
  }
  if (out.empty()) throw UsageError(what + ": empty node list");
  auto sorted = out;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw UsageError(what + ": repeated node");
  return out;
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

FieldPtr make_field(std::uint32_t q, std::uint32_t m, const std::string& poly_text) {
  if (q < 2 || q > Field::kMaxOrder) throw UsageError("--q must be a prime power in [2, 65536]");
  std::uint32_t p = 0;
  for (std::uint32_t c = 2; c <= q; ++c)
    if (q % c == 0) {
      p = c;
      break;
    }
  std::uint32_t e = 0;
  for (std::uint32_t v = q; v > 1; v /= p) {
    if (v % p != 0) throw UsageError("--q " + std::to_string(q) + " is not a prime power");
    ++e;
  }
  if (m != 0 && m != e)
    throw UsageError("--m " + std::to_string(m) + " does not match q = " + std::to_string(p) + "^" + std::to_string(e));
  std::vector<std::uint32_t> poly;
  for (const auto& c : split(poly_text)) {
    try {
      poly.push_back(static_cast<std::uint32_t>(std::stoul(c)));
    } catch (const std::exception&) {
      throw UsageError("--poly: '" + c + "' is not a coefficient");
    }
  }
  if (e > 1 && poly.empty()) poly = find_irreducible(p, e);
  return Field::make(p, e, poly);
}

std::size_t hex_width(const Field& f) {
  std::size_t w = 1;
  for (std::uint32_t v = (f.order() - 1) >> 4; v > 0; v >>= 4) ++w;
  return w;
}

std::string to_hex(const Message& m) {
  const std::size_t w = hex_width(*m.field);
  std::string out;
  for (const auto& b : m.blocks)
    for (auto x : b) {
      char buf[8];
      std::snprintf(buf, sizeof buf, "%0*x", static_cast<int>(w), static_cast<unsigned>(x));
      out += buf;
    }
  return out;
}

Message from_hex(const CodeSpec& spec, const std::string& text) {
  const Field& f = *spec.field();
  const std::size_t w = hex_width(f), total = spec.params.B();
  if (text.size() != w * total)
    throw UsageError("--message needs " + std::to_string(total) + " symbols of " + std::to_string(w) +
                     " hex digits each (" + std::to_string(w * total) + " characters), got " +
                     std::to_string(text.size()));
  Message m{spec.field(), std::vector<Block>(spec.params.k, Block(spec.params.alpha))};
  for (std::size_t i = 0; i < total; ++i) {
    const std::string digits = text.substr(i * w, w);
    if (digits.find_first_not_of("0123456789abcdefABCDEF") != std::string::npos)
      throw UsageError("--message: '" + digits + "' is not hexadecimal");
    const auto v = std::stoul(digits, nullptr, 16);
    if (v >= f.order())
      throw UsageError("--message: symbol " + std::to_string(i + 1) + " = " + std::to_string(v) +
                       " out of range for q=" + std::to_string(f.order()));
    m.blocks[i / spec.params.alpha][i % spec.params.alpha] = static_cast<Elem>(v);
  }
  return m;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

const RepairScheme& need_scheme(const CodeFile& file) {
  if (!file.scheme) throw UsageError("code file has no repair section");
  return *file.scheme;
}

// Bound query matching the scheme: all-node modes when W covers every node,
// node-subset modes with w = |W| otherwise.
BoundQuery matching_query(const CodeSpec& spec, const RepairScheme& scheme) {
  const auto& p = spec.params;
  BoundQuery q;
  q.n = p.n;
  q.k = p.k;
  q.d = p.d;
  if (scheme.w_nodes.size() == p.n) {
    if (p.d == p.n - 1)
      q.mode = scheme.mode == RepairMode::Constant ? BoundMode::MsrConstant : BoundMode::MsrAllNode;
    else
      q.mode = BoundMode::MsrAnyDHelperIndep;
  } else {
    q.mode = p.d == p.n - 1 ? BoundMode::MdsSubset : BoundMode::MdsSubsetAnyD;
    q.w = scheme.w_nodes.size();
  }
  return q;
}

ojson structure_json(const StructureReport& r) {
  ojson items = ojson::array();
  for (const auto& it : r.items) {
    ojson j{{"name", it.name}, {"pass", it.pass}};
    if (!it.pass) j["witness"] = it.witness;
    items.push_back(j);
  }
  return {{"pass", r.pass}, {"items", items}};
}

StructureReport run_structure(const CodeFile& file) {
  if (!file.structure) throw UsageError("code file has no structure section");
  const auto& scheme = need_scheme(file);
  return file.structure->case_id == 1 ? verify_structure_case1(file.spec, scheme)
                                      : verify_structure_case2(file.spec, scheme);
}

struct Options {
  // construct
  std::string case_id;
  std::size_t n = 0, k = 0, d = 0;
  std::uint32_t q = 0, m = 0;
  std::string poly;
  std::uint64_t seed = 0;
  std::size_t retries = 64;
  std::string out_path;
  // shared
  std::string path;
  // verify
  std::string checks = "mds,ia,fr,access,structure,bound";
  bool strict_access = true;
  // repair
  std::size_t fail = 0;
  std::string helpers;
  bool message_sweep = false;
  // bound
  std::string mode;
  std::optional<std::uint64_t> w;
  // search
  std::string targets;
  std::uint64_t limit = kSearchMaxCandidates;
  // encode / decode
  std::string message;
  std::string nodes;
  std::string symbols;
};

int run_construct(const Options& o, const CLI::App& sub, std::ostream& out, std::ostream& err) {
  const FieldPtr field = make_field(o.q, o.m, o.poly);
  ConstructionConfig config{o.seed, o.retries};
  BuiltCode built;
  if (o.case_id == "coupled") {
    for (const char* flag : {"--n", "--k", "--d"})
      if (sub.count(flag) > 0) throw UsageError(std::string(flag) + " is fixed for the coupled example");
    built = build_coupled_example(field, config);
  } else {
    for (const char* flag : {"--n", "--k", "--d"})
      if (sub.count(flag) == 0) throw UsageError(std::string(flag) + " is required for case " + o.case_id);
    built = o.case_id == "1" ? static_cast<BuiltCode>(build_case1(o.n, o.k, o.d, field, config))
                             : static_cast<BuiltCode>(build_case2(o.n, o.k, o.d, field, config));
  }
  write_code_file(o.out_path, built.file());
  const auto& p = built.spec.params;
  ojson report{{"case", o.case_id},  {"n", p.n},         {"k", p.k},
               {"d", p.d},           {"alpha", p.alpha}, {"beta", p.beta()},
               {"q", field->order()}, {"seed", o.seed},   {"attempts", built.attempts},
               {"path", o.out_path}};
  out << report.dump(2) << "\n";
  err << "constructed (" << p.n << "," << p.k << "," << p.d << ") code with alpha=" << p.alpha << " over "
      << field->name() << " after " << built.attempts << " attempt(s)\n";
  return kOk;
}

int run_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const CodeFile file = read_code_file(o.path);
  const CodeSpec& spec = file.spec;
  ojson checks = ojson::object();
  bool all = true;
  for (const auto& name : split(o.checks)) {
    ojson r;
    try {
      if (name == "mds") {
        const auto rep = mds_check(spec);
        r = {{"pass", rep.pass}, {"minors_checked", rep.minors_checked}};
        if (!rep.pass)
          r["witness"] = {{"parity", one_based(rep.witness_parity)},
                          {"systematic", one_based(rep.witness_systematic)},
                          {"nodes", one_based(rep.witness_nodes)}};
      } else if (name == "ia") {
        const auto& scheme = need_scheme(file);
        bool pass = true;
        std::size_t checked = 0;
        ojson failures = ojson::array();
        for (auto j : scheme.w_nodes) {
          if (!spec.systematic_index(j)) continue;
          const auto rep = check_interference_alignment(spec, scheme, j);
          checked += rep.checked;
          pass = pass && rep.pass;
          for (const auto& f : rep.failures)
            failures.push_back({{"failed", j + 1}, {"parity", f.parity + 1}, {"systematic", f.systematic + 1}});
        }
        r = {{"pass", pass}, {"checked", checked}};
        if (!pass) r["failures"] = failures;
      } else if (name == "fr") {
        const auto& scheme = need_scheme(file);
        bool pass = true;
        std::size_t checked = 0;
        ojson failures = ojson::array();
        for (auto j : scheme.w_nodes)
          for (const auto& helpers : subsets(without(iota_nodes(spec.params.n), {j}), spec.params.d)) {
            const auto rep = check_full_rank(spec, scheme, j, helpers);
            ++checked;
            if (!rep.pass) {
              pass = false;
              failures.push_back({{"failed", j + 1}, {"helpers", one_based(helpers)}, {"rank", rep.rank}});
            }
          }
        r = {{"pass", pass}, {"helper_sets_checked", checked}};
        if (!pass) r["failures"] = failures;
      } else if (name == "access") {
        const auto rep = check_optimal_access(need_scheme(file), o.strict_access);
        r = {{"pass", rep.pass}, {"strict", o.strict_access}};
        if (!rep.pass) {
          ojson offenders = ojson::array();
          for (const auto& off : rep.offenders) offenders.push_back({{"key", to_string(off.key)}, {"row", off.row + 1}});
          r["offenders"] = offenders;
        }
      } else if (name == "sweep") {
        const auto rep = repair_sweep(spec, need_scheme(file));
        r = {{"pass", rep.pass}, {"pairs", rep.pairs}, {"messages", rep.messages}};
        if (!rep.pass) {
          ojson failures = ojson::array();
          for (const auto& f : rep.failures)
            failures.push_back({{"failed", f.failed + 1}, {"helpers", one_based(f.helpers)}, {"reason", f.reason}});
          r["failures"] = failures;
        }
      } else if (name == "structure") {
        r = structure_json(run_structure(file));
      } else if (name == "bound") {
        const auto& scheme = need_scheme(file);
        const auto q = matching_query(spec, scheme);
        const auto cmp = compare(spec, scheme, q);
        r = {{"pass", cmp.verdict != Verdict::Violates},
             {"mode", to_string(q.mode)},
             {"alpha", cmp.alpha},
             {"bound", bigint_json(cmp.bound)},
             {"verdict", to_string(cmp.verdict)}};
        if (q.w) r["w"] = *q.w;
        if (!cmp.detail.empty()) r["detail"] = cmp.detail;
      } else {
        throw UsageError("unknown check '" + name + "' (expected mds, ia, fr, access, sweep, structure, bound)");
      }
    } catch (const Error& e) {
      r = {{"pass", false}, {"error", e.what()}};
    }
    all = all && r["pass"].get<bool>();
    err << name << ": " << (r["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
    checks[name] = r;
  }
  out << ojson{{"path", o.path}, {"pass", all}, {"checks", checks}}.dump(2) << "\n";
  return all ? kOk : kNegative;
}

int run_repair(const Options& o, std::ostream& out, std::ostream& err) {
  const CodeFile file = read_code_file(o.path);
  const CodeSpec& spec = file.spec;
  const auto& scheme = need_scheme(file);
  if (o.fail < 1 || o.fail > spec.params.n) throw UsageError("--fail is outside 1.." + std::to_string(spec.params.n));
  const std::size_t failed = o.fail - 1;
  auto helpers = parse_nodes(o.helpers, spec.params.n, "--helpers");
  if (std::find(helpers.begin(), helpers.end(), failed) != helpers.end())
    throw UsageError("--helpers contains the failed node");
  if (helpers.size() != spec.params.d)
    throw UsageError("--helpers needs exactly d = " + std::to_string(spec.params.d) + " nodes");
  std::sort(helpers.begin(), helpers.end());

  std::vector<Message> messages;
  if (o.message_sweep) {
    for (std::size_t i = 0; i < spec.params.B(); ++i) messages.push_back(basis_message(spec, i));
  } else {
    Message m{spec.field(), std::vector<Block>(spec.params.k, Block(spec.params.alpha))};
    for (std::size_t i = 0; i < spec.params.B(); ++i)
      m.blocks[i / spec.params.alpha][i % spec.params.alpha] = static_cast<Elem>((i + 1) % spec.field()->order());
    messages.push_back(std::move(m));
  }
  ojson report{{"failed", o.fail}, {"helpers", one_based(helpers)}};
  const auto map = try_derive_combination(spec, scheme, failed, helpers);
  if (!map) {
    report["feasible"] = false;
    out << report.dump(2) << "\n";
    err << "node " << o.fail << " cannot be repaired from these helpers\n";
    return kNegative;
  }
  bool exact = true;
  std::size_t downloaded = 0;
  for (const auto& m : messages) {
    const Codeword c = encode(spec, m);
    const auto got = repair_node(spec, scheme, c, failed, helpers);
    downloaded = got.downloaded;
    exact = exact && got.block == c.blocks[failed];
  }
  const auto bw = bandwidth(spec.params);
  report["feasible"] = true;
  report["exact"] = exact;
  report["messages_checked"] = messages.size();
  report["downloaded"] = downloaded;
  report["beta"] = bw.beta;
  report["bandwidth"] = bw.total;
  out << report.dump(2) << "\n";
  err << "repaired node " << o.fail << " downloading " << downloaded << " symbols over " << messages.size()
      << " message(s): " << (exact ? "exact" : "MISMATCH") << "\n";
  return exact ? kOk : kNegative;
}

int run_bound(const Options& o, const CLI::App& sub, std::ostream& out, std::ostream& err) {
  BoundQuery q;
  try {
    q.mode = parse_bound_mode(o.mode);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  q.n = o.n;
  q.k = o.k;
  q.d = o.d;
  if (sub.count("--w") > 0) q.w = o.w;
  const auto r = bound(q);
  ojson report{{"alpha_lower_bound", bigint_json(r.value)},
               {"mode", to_string(q.mode)},
               {"n", q.n},
               {"k", q.k},
               {"d", q.d}};
  if (q.w) report["w"] = *q.w;
  report["branch"] = r.branch;
  report["formula"] = r.formula;
  report["previous_bound"] = previous_bound(q.mode);
  out << report.dump(2) << "\n";
  err << to_string(q.mode) << ": alpha >= " << r.value.str() << " (" << r.formula << ")\n";
  return kOk;
}

int run_audit(const Options& o, std::ostream& out, std::ostream& err) {
  const CodeFile file = read_code_file(o.path);
  const auto& scheme = need_scheme(file);
  AuditMode mode = AuditMode::Cor2;
  if (!o.mode.empty()) {
    try {
      mode = parse_audit_mode(o.mode);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  const auto a = bipartite_audit(file.spec, scheme, mode);
  ojson hist = ojson::object();
  for (const auto& [deg, count] : a.left_histogram) hist[std::to_string(deg)] = count;
  ojson report{{"mode", to_string(a.mode)}};
  report["helper"] = a.helper ? ojson(*a.helper + 1) : ojson(nullptr);
  report["right_nodes"] = one_based(a.right_nodes);
  report["left_degree"] = a.left_degree;
  report["right_degree"] = a.right_degree;
  report["left_histogram"] = hist;
  report["left_sum"] = a.left_sum;
  report["right_sum"] = a.right_sum;
  report["edge_identity"] = a.edge_identity;
  report["max_left_degree"] = a.max_left_degree;
  report["log_bound"] = a.log_bound;
  report["bound_applies"] = a.bound_applies;
  report["implied_bound"] = a.implied_bound;
  report["recomputed_bound"] = a.recomputed_bound;
  report["alpha"] = file.spec.params.alpha;
  report["saturated"] = a.saturated;

  const auto p = proof_audit(file.spec, scheme);
  ojson proof{{"pass", p.pass},
              {"invariance_checked", p.invariance_checked},
              {"inequality_checked", p.inequality_checked},
              {"cascade_checked", p.cascade_checked}};
  if (!p.pass) proof["failures"] = p.failures;
  report["proof"] = proof;
  const bool pass = a.edge_identity && a.bound_applies && p.pass;
  report["pass"] = pass;
  out << report.dump(2) << "\n";
  err << to_string(a.mode) << " audit: implied bound " << a.implied_bound << ", alpha " << file.spec.params.alpha
      << (a.saturated ? " (saturated)" : "") << "; proof checks " << (p.pass ? "pass" : "FAIL") << "\n";
  return pass ? kOk : kNegative;
}

int run_search(const Options& o, std::ostream& out, std::ostream& err) {
  const CodeFile file = read_code_file(o.path);
  SearchSpec s{file.spec, parse_nodes(o.targets, file.spec.params.n, "--targets"), o.limit};
  const auto r = exhaustive_search(s);
  ojson report{{"found", r.found.has_value()}};
  if (r.found) {
    const auto text = serialize(CodeFile{file.spec, r.found, std::nullopt});
    report["repair"] = ojson::parse(text)["repair"];
  } else {
    report["repair"] = nullptr;
  }
  report["stats"] = ojson::parse(stats_json(r.stats));
  out << report.dump(2) << "\n";
  err << (r.found ? "found an optimal-access scheme" : "no optimal-access scheme exists for these targets") << "\n";
  return r.found ? kOk : kNegative;
}

int run_encode(const Options& o, std::ostream& out, std::ostream& err) {
  const CodeFile file = read_code_file(o.path);
  const Message m = from_hex(file.spec, o.message);
  const Codeword c = encode(file.spec, m);
  ojson blocks = ojson::array();
  for (const auto& b : c.blocks) blocks.push_back(b);
  ojson doc{{"n", file.spec.params.n}, {"alpha", file.spec.params.alpha}, {"symbols", blocks}};
  write_text(o.out_path, doc.dump() + "\n");
  out << ojson{{"path", o.out_path}, {"nodes", file.spec.params.n}}.dump(2) << "\n";
  err << "encoded " << file.spec.params.B() << " symbols into " << file.spec.params.n << " nodes\n";
  return kOk;
}

int run_decode(const Options& o, std::ostream& out, std::ostream& err) {
  const CodeFile file = read_code_file(o.path);
  const CodeSpec& spec = file.spec;
  const auto nodes = parse_nodes(o.nodes, spec.params.n, "--nodes");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_text(o.symbols));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(o.symbols + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("symbols") || !doc["symbols"].is_array())
    throw UsageError(o.symbols + ": expected an object with a \"symbols\" array");
  const auto& arr = doc["symbols"];
  if (arr.size() != nodes.size() && arr.size() != spec.params.n)
    throw UsageError(o.symbols + ": expected " + std::to_string(nodes.size()) + " or " +
                     std::to_string(spec.params.n) + " blocks");
  std::vector<Block> blocks;
  for (std::size_t x = 0; x < nodes.size(); ++x) {
    const auto& b = arr[arr.size() == spec.params.n ? nodes[x] : x];
    if (!b.is_array() || b.size() != spec.params.alpha)
      throw UsageError(o.symbols + ": block " + std::to_string(x + 1) + " needs " +
                       std::to_string(spec.params.alpha) + " symbols");
    Block blk;
    for (const auto& v : b) {
      if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= spec.field()->order())
        throw UsageError(o.symbols + ": symbol out of range for q=" + std::to_string(spec.field()->order()));
      blk.push_back(static_cast<Elem>(v.get<std::uint64_t>()));
    }
    blocks.push_back(std::move(blk));
  }
  const Message m = decode_from_nodes(spec, nodes, blocks);
  ojson msg = ojson::array();
  for (const auto& b : m.blocks) msg.push_back(b);
  out << ojson{{"message", to_hex(m)}, {"blocks", msg}}.dump(2) << "\n";
  err << "decoded from nodes " << o.nodes << "\n";
  return kOk;
}

int exit_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::ConstructionFailed: return kConstructionFailed;
    case ErrorKind::Infeasible:
    case ErrorKind::Underdetermined: return kNegative;
    default: return kUsage;
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-field lab for optimal-access MSR and MDS codes", "msrlab"};
  app.require_subcommand(1);
  Options o;

  auto* construct = app.add_subcommand("construct", "Build a code and write it to a file");
  construct->add_option("--case", o.case_id, "1, 2 or coupled")->required()->check(CLI::IsMember({"1", "2", "coupled"}));
  construct->add_option("--n", o.n);
  construct->add_option("--k", o.k);
  construct->add_option("--d", o.d);
  construct->add_option("--q", o.q, "Field order (prime power)")->required();
  construct->add_option("--m", o.m, "Extension degree, checked against --q");
  construct->add_option("--poly", o.poly, "Modulus coefficients low-to-high, comma separated");
  construct->add_option("--seed", o.seed)->required();
  construct->add_option("--retries", o.retries)->check(CLI::PositiveNumber);
  construct->add_option("-o,--out", o.out_path)->required();

  auto* verify = app.add_subcommand("verify", "Run checks on a code file");
  verify->add_option("path", o.path)->required();
  verify->add_option("--checks", o.checks, "Comma list of mds, ia, fr, access, sweep, structure, bound");
  verify->add_option("--strict-access", o.strict_access);

  auto* repair = app.add_subcommand("repair", "Repair one node from a helper set");
  repair->add_option("path", o.path)->required();
  repair->add_option("--fail", o.fail)->required();
  repair->add_option("--helpers", o.helpers)->required();
  repair->add_flag("--message-sweep", o.message_sweep, "Check every basis message");

  auto* bound_cmd = app.add_subcommand("bound", "Sub-packetization lower bound");
  bound_cmd->add_option("--mode", o.mode)->required();
  bound_cmd->add_option("--n", o.n)->required();
  bound_cmd->add_option("--k", o.k)->required();
  bound_cmd->add_option("--d", o.d)->required();
  bound_cmd->add_option("--w", o.w);

  auto* audit = app.add_subcommand("audit", "Bipartite counting audit and intersection checks");
  audit->add_option("path", o.path)->required();
  audit->add_option("--mode", o.mode, "thm1, cor2 or cor3");

  auto* search = app.add_subcommand("search", "Exhaustive search over access repair schemes");
  search->add_option("path", o.path)->required();
  search->add_option("--targets", o.targets)->required();
  search->add_option("--limit", o.limit, "Candidate limit per node")->check(CLI::PositiveNumber);

  auto* encode_cmd = app.add_subcommand("encode", "Encode a hex message");
  encode_cmd->add_option("path", o.path)->required();
  encode_cmd->add_option("--message", o.message)->required();
  encode_cmd->add_option("-o,--out", o.out_path)->required();

  auto* decode_cmd = app.add_subcommand("decode", "Decode from a set of nodes");
  decode_cmd->add_option("path", o.path)->required();
  decode_cmd->add_option("--nodes", o.nodes)->required();
  decode_cmd->add_option("--symbols", o.symbols)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (construct->parsed()) return run_construct(o, *construct, out, err);
    if (verify->parsed()) return run_verify(o, out, err);
    if (repair->parsed()) return run_repair(o, out, err);
    if (bound_cmd->parsed()) return run_bound(o, *bound_cmd, out, err);
    if (audit->parsed()) return run_audit(o, out, err);
    if (search->parsed()) return run_search(o, out, err);
    if (encode_cmd->parsed()) return run_encode(o, out, err);
    if (decode_cmd->parsed()) return run_decode(o, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace msrlab::cli
