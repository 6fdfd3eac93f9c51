#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "cwb/celltheory.hpp"
#include "cwb/glrep.hpp"
#include "cwb/hwv.hpp"
#include "cwb/models.hpp"

#ifndef CWB_VERSION
#define CWB_VERSION "0"
#endif

using json = nlohmann::ordered_json;
using namespace cwb;
namespace fs = std::filesystem;

namespace {

struct RunConfig {
  GroundConfig ground{1, {1}, {frac(0, 1)}};
  int r = 1, t = 1;
  bool has_r = false, has_t = false;
  int horizon = 6;
  std::size_t max_dim = 500;
  bool vectors = false;
  std::vector<std::string> args;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);)
    if (!item.empty()) out.push_back(item);
  return out;
}

int parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::ConfigParse, "not an integer: " + s);
}

Scalar parse_rational(const json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  throw Error(ErrorCode::ConfigParse, "rationals are integers or \"p/q\" strings");
}

void apply_field(RunConfig& rc, const std::string& key, const json& v) {
  if (key == "k") {
    rc.ground.k = v.is_string() ? parse_int(v.get<std::string>()) : v.get<int>();
  } else if (key == "q") {
    rc.ground.q.clear();
    if (v.is_string())
      for (const auto& s : split(v.get<std::string>(), ',')) rc.ground.q.push_back(parse_int(s));
    else
      for (const auto& x : v) rc.ground.q.push_back(x.get<int>());
  } else if (key == "d") {
    rc.ground.d.clear();
    if (v.is_string())
      for (const auto& s : split(v.get<std::string>(), ',')) rc.ground.d.push_back(parse_scalar(s));
    else
      for (const auto& x : v) rc.ground.d.push_back(parse_rational(x));
  } else if (key == "r") {
    rc.r = v.is_string() ? parse_int(v.get<std::string>()) : v.get<int>();
    rc.has_r = true;
  } else if (key == "t") {
    rc.t = v.is_string() ? parse_int(v.get<std::string>()) : v.get<int>();
    rc.has_t = true;
  } else {
    throw Error(ErrorCode::ConfigParse, "unknown field " + key);
  }
}

void load_config(RunConfig& rc, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ConfigParse, "cannot read " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ConfigParse, e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::ConfigParse, "config must be an object");
  try {
    for (const auto& [key, v] : j.items()) apply_field(rc, key, v);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ConfigParse, e.what());
  }
}

void validate(RunConfig& rc) {
  if (rc.ground.k < 1 || static_cast<int>(rc.ground.q.size()) != rc.ground.k)
    throw Error(ErrorCode::ConfigParse, "q must have k entries");
  if (rc.ground.d.empty() && rc.ground.k == 1) rc.ground.d = {0};
  if (static_cast<int>(rc.ground.d.size()) != rc.ground.k) throw Error(ErrorCode::ConfigParse, "d must have k entries");
  if (rc.r < 0 || rc.t < 0) throw Error(ErrorCode::ConfigParse, "r and t must be non-negative");
  rc.ground.validate();
}

std::string str(const Scalar& x) { return to_string(x); }

json scalars(const std::vector<Scalar>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(str(x));
  return a;
}

json matrix_json(const Matrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(scalars(m.row(i)));
  return a;
}

json config_json(const RunConfig& rc) {
  return {{"k", rc.ground.k}, {"q", rc.ground.q}, {"d", scalars(rc.ground.d)}, {"r", rc.r}, {"t", rc.t}};
}

struct Report {
  json body;
  bool ok = true;
};

AlgebraParameters module_parameters(const GroundConfig& cfg, int horizon) {
  AlgebraParameters p = derive_parameters(cfg, horizon);
  p.omegabar = omega_table(cfg, horizon, true);
  return p;
}

Report cmd_dims(const RunConfig& rc) {
  VermaOracle o(rc.ground, rc.r, rc.t, {.require_faithful = false, .verify = true});
  std::size_t n = o.basis().size();
  Report rep;
  rep.ok = o.rank() == n;
  rep.body = {{"regular_monomials", n}, {"rank", o.rank()}};
  return rep;
}

Report cmd_verify_relations(const RunConfig& rc) {
  VermaOracle o(rc.ground, rc.r, rc.t, {.require_faithful = false, .verify = true});
  AlgebraParameters p = module_parameters(rc.ground, rc.horizon);
  Report rep;
  json rows = json::array();
  auto add = [&](const Relation& rel) {
    bool holds = o.annihilates(rel.element);
    rep.ok = rep.ok && holds;
    rows.push_back({{"number", rel.number}, {"name", rel.name}, {"holds", holds}});
  };
  for (const auto& rel : relation_suite(rc.r, rc.t, p)) add(rel);
  for (const auto& rel : cyclotomic_relations(rc.ground.k, rc.r, rc.t, p)) add(rel);
  rep.body = {{"rows", rows}, {"all_hold", rep.ok}};
  return rep;
}

Report cmd_omega(const RunConfig& rc) {
  AlgebraParameters p = derive_parameters(rc.ground, rc.horizon);
  std::vector<Scalar> bar = omegabar_series(rc.ground, rc.horizon);
  Report rep;
  json rows = json::array();
  for (int a = 0; a <= rc.horizon; ++a) {
    Scalar w = omega_extract(rc.ground, a, false), wb = omega_extract(rc.ground, a, true);
    bool agree = w == p.omega[a] && wb == bar[a];
    rep.ok = rep.ok && agree;
    rows.push_back({{"a", a},
                    {"omega", str(p.omega[a])},
                    {"omega_module", str(w)},
                    {"omegabar", str(bar[a])},
                    {"omegabar_module", str(wb)},
                    {"agree", agree}});
  }
  rep.body = {{"u", scalars(p.u)}, {"ubar", scalars(p.ubar)}, {"admissible", admissible(p)}, {"rows", rows}};
  rep.ok = rep.ok && admissible(p);
  return rep;
}

Report cmd_gram(const RunConfig& rc) {
  CellDatum d = build_cell_datum(rc.ground, rc.r, rc.t);
  if (d.dim() > rc.max_dim) throw Error(ErrorCode::BoundExceeded, "algebra dimension above --max-dim");
  Report rep;
  json rows = json::array();
  for (std::size_t c = 0; c < d.poset.size(); ++c) {
    CellModule m = cell_module(d, c);
    Matrix g = gram_matrix(d, m);
    json row = {{"cell", d.poset[c].label()}, {"dim", m.dim()}, {"gram_rank", rank(g)}};
    if (rc.vectors) row["gram"] = matrix_json(g);
    rows.push_back(row);
  }
  rep.body = {{"rows", rows}};
  return rep;
}

Report cmd_decomp(const RunConfig& rc) {
  DecompositionResult d = decomposition_matrix(rc.ground, rc.r, rc.t, rc.max_dim);
  Report rep;
  rep.ok = d.wedderburn_ok && d.rows_ok;
  json rows = json::array();
  for (std::size_t i = 0; i < d.rows.size(); ++i) {
    json row = {{"cell", d.rows[i].label()}, {"dim", d.cell_dims[i]}, {"gram_rank", d.gram_ranks[i]}};
    for (std::size_t j = 0; j < d.columns.size(); ++j) row[d.columns[j].label()] = d.matrix[i][j];
    rows.push_back(row);
  }
  rep.body = {{"algebra_dim", d.algebra_dim},
              {"radical_dim", d.radical_dim},
              {"identity", d.is_identity()},
              {"wedderburn_ok", d.wedderburn_ok},
              {"rows_ok", d.rows_ok},
              {"rows", rows}};
  return rep;
}

Report cmd_hwv(const RunConfig& rc) {
  HwvClassification c = classify_hwv(rc.ground, rc.r, rc.t);
  Report rep;
  rep.ok = c.ok();
  json rows = json::array();
  std::optional<TensorModule> mod;
  AlgebraParameters p = derive_parameters(rc.ground, 2 * (rc.r + rc.t) + 2);
  for (const auto& w : c.weights) {
    json row = {{"weight", scalars(w.weight)},
                {"cell", w.cell ? w.cell->label() : ""},
                {"dim", w.brute},
                {"expected", w.expected}};
    if (rc.vectors && w.cell) {
      if (!mod) mod.emplace(rc.ground, rc.r, rc.t);
      json vs = json::array();
      for (const auto& v : build_hwv_family(*mod, *w.cell, p).vectors) vs.push_back(mod->to_string(v));
      row["vectors"] = vs;
    }
    rows.push_back(row);
  }
  rep.body = {{"families", c.families},
              {"families_ok", c.families_ok},
              {"raw_families_ok", c.raw_families_ok},
              {"raw_failures", c.raw_failures},
              {"failures", c.failures},
              {"rows", rows}};
  return rep;
}

Generator parse_generator(const std::string& s) {
  auto index = [&](std::size_t skip) { return parse_int(s.substr(skip)); };
  if (s.rfind("sbar", 0) == 0) return {Generator::SBar, index(4)};
  if (s.rfind("s", 0) == 0) return {Generator::S, index(1)};
  if (s == "e1") return {Generator::E, 1};
  throw Error(ErrorCode::ConfigParse, "unknown generator " + s + " (use e1, s<i>, sbar<j>)");
}

Report cmd_diagram_compose(const RunConfig& rc) {
  if (rc.args.empty()) throw Error(ErrorCode::ConfigParse, "diagram-compose needs generators");
  std::vector<Generator> gens;
  int r = 0, t = 0;
  for (const auto& a : rc.args) {
    Generator g = parse_generator(a);
    if (g.index < 1) throw Error(ErrorCode::ConfigParse, "generator index starts at 1");
    gens.push_back(g);
    if (g.kind == Generator::S) r = std::max(r, g.index + 1);
    if (g.kind == Generator::SBar) t = std::max(t, g.index + 1);
    if (g.kind == Generator::E) r = std::max(r, 1), t = std::max(t, 1);
  }
  if (rc.has_r) r = std::max(r, rc.r);
  if (rc.has_t) t = std::max(t, rc.t);
  WalledDiagram d = WalledDiagram::identity(r, t);
  int circles = 0;
  for (const auto& g : gens) {
    auto [next, c] = compose(d, WalledDiagram::generator(g, r, t));
    d = next;
    circles += c;
  }
  std::string word;
  for (const auto& g : factorize(d)) word += (word.empty() ? "" : " ") + g.name();
  Report rep;
  rep.body = {{"diagram", word.empty() ? "1" : word}, {"circles", circles}, {"edges", d.to_string()}};
  return rep;
}

Report cmd_cross_model(const RunConfig& rc) {
  CrossModelReport c = cross_model_check(rc.ground, rc.r, rc.t, std::min(rc.horizon, 4));
  Report rep;
  rep.ok = c.ok();
  rep.body = {{"expected_rank", c.expected_rank},
              {"shifted_rank", c.shifted_rank},
              {"graded_rank", c.graded_rank},
              {"injective_regime", c.injective_regime},
              {"omega_model", scalars(c.omega_model)},
              {"omega_module", scalars(c.omega_module)},
              {"omegabar_model", scalars(c.omegabar_model)},
              {"omegabar_module", scalars(c.omegabar_module)},
              {"module_kernel_in_shifted", c.module_kernel_in_shifted},
              {"ranks_ok", c.ranks_ok()},
              {"omegas_ok", c.omegas_ok()}};
  return rep;
}

Report cmd_certify_basis(const RunConfig& rc) {
  Report rep;
  json rows = json::array();
  for (const auto& m : regular_monomials(rc.ground.k, rc.r, rc.t)) {
    LabeledCertificate c = labeled_certificate(m, rc.ground);
    Scalar coeff = certificate_coefficient(m, rc.ground);
    rep.ok = rep.ok && coeff != 0;
    rows.push_back({{"monomial", m.to_string()},
                    {"bottom", c.bottom_string()},
                    {"top", c.top_string()},
                    {"lowering", c.lowering_string()},
                    {"coefficient", str(coeff)}});
  }
  rep.body = {{"certified", rep.ok}, {"rows", rows}};
  return rep;
}

// First row headers, then one line per element of "rows" (or the scalar fields).
std::string to_csv(const json& body) {
  auto cell = [](const json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  };
  std::ostringstream os;
  std::vector<json> rows;
  if (body.contains("rows") && !body["rows"].empty())
    for (const auto& r : body["rows"]) rows.push_back(r);
  else {
    json flat = json::object();
    for (const auto& [k, v] : body.items())
      if (k != "rows") flat[k] = v;
    rows.push_back(flat);
  }
  std::vector<std::string> headers;
  for (const auto& [k, v] : rows.front().items()) headers.push_back(k);
  for (std::size_t i = 0; i < headers.size(); ++i) os << (i ? "," : "") << cell(headers[i]);
  os << "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < headers.size(); ++i) os << (i ? "," : "") << (r.contains(headers[i]) ? cell(r[headers[i]]) : "");
    os << "\n";
  }
  return os.str();
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
  return h;
}

void write_atomic(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    out << text;
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for cyclotomic walled Brauer algebras"};
  RunConfig rc;
  std::string config_path, out_path, format = "json", cache_dir, command;
  std::vector<std::string> params;
  int threads = 1;
  app.add_option("command", command, "dims | verify-relations | omega | gram | decomp | hwv | diagram-compose | "
                                     "cross-model | certify-basis")
      ->required();
  app.add_option("args", rc.args, "generator names for diagram-compose");
  app.add_option("--config", config_path, "JSON file with k, q, d (rationals as \"p/q\"), r, t");
  app.add_option("--param", params, "field override key=value, e.g. q=3,3 or d=0,1/2")->take_all();
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--cache", cache_dir, "directory for cached reports");
  app.add_option("--threads", threads, "worker threads (computations run single-threaded)")->check(CLI::PositiveNumber);
  app.add_option("--horizon", rc.horizon, "largest omega index")->check(CLI::NonNegativeNumber);
  app.add_option("--max-dim", rc.max_dim, "largest algebra dimension for gram and decomp");
  app.add_flag("--vectors", rc.vectors, "include hwv vectors or Gram matrices");
  CLI11_PARSE(app, argc, argv);

  try {
    if (!config_path.empty()) load_config(rc, config_path);
    for (const auto& p : params) {
      auto eq = p.find('=');
      if (eq == std::string::npos) throw Error(ErrorCode::ConfigParse, "--param expects key=value");
      apply_field(rc, p.substr(0, eq), json(p.substr(eq + 1)));
    }
    if (command != "diagram-compose") validate(rc);

    std::string key_text = std::string(CWB_VERSION) + "|" + command + "|" + rc.ground.canonical() + "|r=" +
                           std::to_string(rc.r) + "|t=" + std::to_string(rc.t) + "|h=" + std::to_string(rc.horizon) +
                           "|m=" + std::to_string(rc.max_dim) + "|v=" + std::to_string(rc.vectors) + "|f=" + format;
    for (const auto& a : rc.args) key_text += "|" + a;
    std::ostringstream digest;
    digest << std::hex << fnv1a(key_text);
    fs::path cached = cache_dir.empty() ? fs::path() : fs::path(cache_dir) / (digest.str() + "." + format);

    std::string text;
    bool ok = true;
    if (!cached.empty() && fs::exists(cached)) {
      std::ifstream in(cached, std::ios::binary);
      std::string status;
      std::getline(in, status);
      ok = status == "ok";
      text.assign(std::istreambuf_iterator<char>(in), {});
    } else {
      Report rep;
      if (command == "dims") rep = cmd_dims(rc);
      else if (command == "verify-relations") rep = cmd_verify_relations(rc);
      else if (command == "omega") rep = cmd_omega(rc);
      else if (command == "gram") rep = cmd_gram(rc);
      else if (command == "decomp") rep = cmd_decomp(rc);
      else if (command == "hwv") rep = cmd_hwv(rc);
      else if (command == "diagram-compose") rep = cmd_diagram_compose(rc);
      else if (command == "cross-model") rep = cmd_cross_model(rc);
      else if (command == "certify-basis") rep = cmd_certify_basis(rc);
      else throw Error(ErrorCode::ConfigParse, "unknown command " + command);
      ok = rep.ok;
      if (command != "diagram-compose") {
        json head = {{"config", config_json(rc)}, {"ok", rep.ok}};
        head.update(rep.body);
        rep.body = std::move(head);
      }
      text = format == "csv" ? to_csv(rep.body) : rep.body.dump(2) + "\n";
      if (!cached.empty()) write_atomic(cached, (ok ? "ok\n" : "fail\n") + text);
    }
    if (out_path.empty())
      std::cout << text;
    else
      write_atomic(out_path, text);
    return ok ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << json{{"error", error_name(e.code())}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "INTERNAL"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }
}
