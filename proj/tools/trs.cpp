// Command-line front end. Exit codes: 0 success, 1 domain error, 2 usage
// error, 3 golden-table mismatch. Errors go to stderr as one line of JSON.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "trs/census.hpp"
#include "trs/decode.hpp"
#include "trs/equiv.hpp"
#include "trs/mdscheck.hpp"

using json = nlohmann::ordered_json;
using namespace trs;

namespace {

constexpr int kSchemaVersion = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GoldenMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

[[noreturn]] void fail_usage(const std::string& msg) { throw UsageError(msg); }

json read_json(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) fail_usage("cannot open " + path);
    return json::parse(in);
  } catch (const json::exception& e) {
    fail_usage(std::string("invalid JSON: ") + e.what());
  }
}

std::vector<std::string> split(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

long long to_integer(const std::string& s) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail_usage("not an integer: '" + s + "'");
  }
}

// ------------------------------------------------------------ input model

/// Field, evaluation points and twist parameters collected from flags or a
/// JSON spec file. JSON keys: q | (p, m, modulus), alpha, k, t, h, eta,
/// long_twist, or generator (rows of integers) for a bare code.
struct Inputs {
  std::string spec_path;
  std::string code_path;
  unsigned q = 0;
  unsigned p = 0;
  unsigned m = 0;
  std::string modulus;
  std::string alpha;
  unsigned k = 0;
  unsigned t = 1;
  unsigned h = 0;
  unsigned eta = 1;
  bool long_twist = false;

  void add_field_flags(CLI::App* app) {
    app->add_option("--q", q, "field order (default modulus)");
    app->add_option("--p", p, "characteristic");
    app->add_option("--m", m, "extension degree");
    app->add_option("--modulus", modulus, "modulus digits, constant term first, e.g. 1,1,0,1");
  }
  void add_spec_flags(CLI::App* app, bool allow_code) {
    add_field_flags(app);
    app->add_option("--spec", spec_path, "twisted code spec as JSON ('-' for stdin)");
    if (allow_code) app->add_option("--code", code_path, "generator matrix as JSON");
    app->add_option("--alpha", alpha, "evaluation points, e.g. 0,1,2,inf");
    app->add_option("--k", k, "dimension");
    app->add_option("--t", t, "twist");
    app->add_option("--h", h, "hook");
    app->add_option("--eta", eta, "twist coefficient");
    app->add_flag("--long-twist", long_twist, "admit n-k < t <= q-1-k");
  }
};

FieldPtr make_field(unsigned q, unsigned p, unsigned m, const std::vector<unsigned>& modulus) {
  if (p != 0) {
    if (m == 0) m = 1;
    return Field::make(p, m, modulus.empty() ? std::nullopt : std::optional(modulus));
  }
  if (q == 0) fail_usage("a field is required: --q or --p/--m");
  if (!modulus.empty()) fail_usage("--modulus needs --p and --m");
  return field_of_order(q);
}

FieldPtr field_from_json(const json& j) {
  std::vector<unsigned> modulus;
  if (j.contains("modulus")) modulus = j.at("modulus").get<std::vector<unsigned>>();
  return make_field(j.value("q", 0u), j.value("p", 0u), j.value("m", 0u), modulus);
}

EvalPoint parse_point(const Field& f, const json& v) {
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "inf" || s == "infinity") return EvalPoint::infinity();
    return EvalPoint::finite(f.from_int(to_integer(s)));
  }
  if (!v.is_number_integer()) fail_usage("evaluation points are integers or \"inf\"");
  return EvalPoint::finite(f.from_int(v.get<long long>()));
}

json point_json(const EvalPoint& a) {
  if (a.is_infinity()) return "inf";
  return val(a.value());
}

std::vector<Elem> parse_elems(const Field& f, const std::string& csv) {
  std::vector<Elem> out;
  for (const auto& s : split(csv)) out.push_back(f.from_int(to_integer(s)));
  return out;
}

json elems_json(std::span<const Elem> v) {
  json out = json::array();
  for (Elem e : v) out.push_back(val(e));
  return out;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(val(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

TwistedCodeSpec spec_from_json(const json& j) {
  TwistedCodeSpec s;
  try {
    s.field = field_from_json(j);
    for (const auto& v : j.at("alpha")) s.alpha.push_back(parse_point(*s.field, v));
    s.k = j.at("k").get<unsigned>();
    s.t = j.value("t", 1u);
    s.h = j.value("h", 0u);
    s.eta = s.field->from_int(j.value("eta", 1));
    s.long_twist = j.value("long_twist", false);
  } catch (const json::exception& e) {
    fail_usage(std::string("bad spec: ") + e.what());
  }
  return s;
}

json spec_json(const TwistedCodeSpec& s) {
  json j;
  j["p"] = s.field->p();
  j["m"] = s.field->m();
  j["modulus"] = s.field->modulus();
  json alpha = json::array();
  for (const auto& a : s.alpha) alpha.push_back(point_json(a));
  j["alpha"] = alpha;
  j["k"] = s.k;
  j["t"] = s.t;
  j["h"] = s.h;
  j["eta"] = val(s.eta);
  if (s.long_twist) j["long_twist"] = true;
  return j;
}

std::vector<unsigned> parse_modulus(const std::string& csv) {
  std::vector<unsigned> out;
  for (const auto& s : split(csv)) out.push_back(static_cast<unsigned>(to_integer(s)));
  return out;
}

TwistedCodeSpec spec_from_inputs(const Inputs& in) {
  if (!in.spec_path.empty()) return spec_from_json(read_json(in.spec_path));
  if (in.alpha.empty() || in.k == 0) fail_usage("give --spec or --alpha and --k");
  TwistedCodeSpec s;
  s.field = make_field(in.q, in.p, in.m, parse_modulus(in.modulus));
  for (const auto& a : split(in.alpha)) s.alpha.push_back(parse_point(*s.field, json(a)));
  s.k = in.k;
  s.t = in.t;
  s.h = in.h;
  s.eta = s.field->from_int(in.eta);
  s.long_twist = in.long_twist;
  return s;
}

struct CodeInput {
  LinearCode code;
  std::optional<TwistedCodeSpec> spec;
};

CodeInput code_from_inputs(const Inputs& in) {
  if (in.code_path.empty()) {
    auto s = spec_from_inputs(in);
    return {twisted_code(s), s};
  }
  const json j = read_json(in.code_path);
  LinearCode c;
  try {
    c.field = field_from_json(j);
    const auto& rows = j.at("generator");
    if (!rows.is_array() || rows.empty()) fail_usage("generator must be a non-empty list of rows");
    const std::size_t n = rows.at(0).size();
    c.generator = Matrix(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != n) fail_usage("generator rows differ in length");
      for (std::size_t jj = 0; jj < n; ++jj) c.generator(i, jj) = c.field->from_int(rows[i][jj].get<long long>());
    }
  } catch (const json::exception& e) {
    fail_usage(std::string("bad code: ") + e.what());
  }
  return {c, std::nullopt};
}

// ------------------------------------------------------------ output

struct Output {
  bool as_json = false;

  void emit(json j, const std::string& text) const {
    if (as_json) {
      json out;
      out["schema_version"] = kSchemaVersion;
      for (auto& [key, value] : j.items()) out[key] = value;
      std::cout << out.dump() << '\n';
    } else {
      std::cout << text;
    }
  }
};

std::string matrix_text(const Matrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << val(m(i, j));
    os << '\n';
  }
  return os.str();
}

std::string join(std::span<const Elem> v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << val(v[i]);
  return os.str();
}

json witness_json(const MdsWitness& w) {
  json j;
  j["subset"] = w.subset;
  j["g"] = elems_json(w.g);
  return j;
}

// ------------------------------------------------------------ subcommands

void cmd_field_info(const Inputs& in, const Output& out) {
  auto f = make_field(in.q, in.p, in.m, parse_modulus(in.modulus));
  json j;
  j["q"] = f->q();
  j["p"] = f->p();
  j["m"] = f->m();
  j["modulus"] = f->modulus();
  j["primitive"] = val(f->primitive());
  std::ostringstream os;
  os << f->describe() << "\nprimitive element: " << val(f->primitive()) << '\n';
  out.emit(j, os.str());
}

void cmd_construct(const Inputs& in, const Output& out) {
  auto s = spec_from_inputs(in);
  const LinearCode c = twisted_code(s);
  json j;
  j["spec"] = spec_json(s);
  j["generator"] = matrix_json(c.generator);
  out.emit(j, matrix_text(c.generator));
}

void cmd_encode(const Inputs& in, const std::string& message, const Output& out) {
  auto s = spec_from_inputs(in);
  const auto msg = parse_elems(*s.field, message);
  const auto cw = encode(s, msg);
  json j;
  j["codeword"] = elems_json(cw);
  out.emit(j, join(cw) + "\n");
}

void cmd_decode(const Inputs& in, const std::string& received, std::optional<unsigned> tau, const Output& out) {
  auto s = spec_from_inputs(in);
  const auto r = parse_elems(*s.field, received);
  const unsigned radius = tau.value_or(static_cast<unsigned>((s.n() - s.k) / 2));
  const auto res = twisted_decode(s, r, radius);
  json j;
  j["tau"] = radius;
  j["hook_guesses"] = res.hook_guesses;
  j["rs_calls"] = res.rs_calls;
  json list = json::array();
  std::ostringstream os;
  for (const auto& c : res.candidates) {
    json cj;
    cj["codeword"] = elems_json(c.codeword);
    cj["message"] = elems_json(c.message);
    cj["distance"] = c.distance;
    list.push_back(cj);
    os << join(c.codeword) << " distance " << c.distance << " message " << join(c.message) << '\n';
  }
  j["candidates"] = list;
  if (res.candidates.empty()) os << "no codeword within distance " << radius << '\n';
  out.emit(j, os.str());
}

void cmd_is_mds(const Inputs& in, const std::string& method, bool allow_inf, const Output& out) {
  MdsVerdict v;
  if (method == "minors") {
    v = is_mds_minors(code_from_inputs(in).code);
  } else {
    if (!in.code_path.empty()) fail_usage("--code works only with --method minors");
    auto s = spec_from_inputs(in);
    if (method == "general") {
      v = is_mds_general(s, {.allow_inf_any_hook = allow_inf});
    } else if (method == "star") {
      if (s.t != 1 || s.h != 0) throw DomainError("the star condition needs (t,h) = (1,0)");
      v = is_mds_condition_star(*s.field, s.alpha, s.k, s.eta);
    } else if (method == "plus") {
      if (s.t != 1 || s.h + 1 != s.k) throw DomainError("the plus condition needs (t,h) = (1,k-1)");
      v = is_mds_condition_plus(*s.field, s.alpha, s.k, s.eta);
    } else {
      fail_usage("unknown method '" + method + "'");
    }
  }
  json j;
  j["mds"] = v.is_mds;
  if (v.witness) j["witness"] = witness_json(*v.witness);
  std::ostringstream os;
  os << (v.is_mds ? "MDS" : "not MDS");
  if (v.witness) {
    os << ", witness subset";
    for (auto i : v.witness->subset) os << ' ' << i;
  }
  os << '\n';
  out.emit(j, os.str());
}

void cmd_is_grs(const Inputs& in, const Output& out) {
  const auto c = code_from_inputs(in).code;
  if (!is_mds_minors(c).is_mds) throw DomainError("the GRS test needs an MDS code");
  const bool grs = is_grs(c);
  json j;
  j["grs"] = grs;
  out.emit(j, grs ? "GRS\n" : "not GRS\n");
}

void cmd_canon(const Inputs& in, const Output& out) {
  const auto sig = canonical_form(code_from_inputs(in).code);
  json j;
  j["q"] = sig.q;
  j["n"] = sig.n;
  j["k"] = sig.k;
  j["signature"] = sig.hex();
  out.emit(j, sig.hex() + "\n");
}

struct CensusFlags {
  unsigned q = 0, n = 0, k = 0;
  std::string family = "twisted";
  std::optional<unsigned> t, h;
  std::string inf_policy = "liberal";
  std::string twist_range = "field";
  unsigned jobs = 0;
  bool allow_small = false;
  std::string out_path;
};

json manifest(const CensusResult& r) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["q"] = r.row.q;
  j["n"] = r.row.n;
  j["k"] = r.row.k;
  j["family"] = to_string(r.row.family);
  j["inf_policy"] = to_string(r.row.inf_policy);
  j["twist_range"] = to_string(r.row.twist_range);
  j["total"] = r.row.total;
  j["inequivalent"] = r.row.inequivalent;
  j["non_grs"] = r.row.non_grs;
  j["seconds"] = r.row.seconds;
  json classes = json::array();
  for (const auto& [sig, info] : r.classes) {
    json c;
    c["signature"] = sig.hex();
    c["members"] = info.members;
    c["grs"] = info.grs;
    c["origin"] = info.origin;
    classes.push_back(c);
  }
  j["classes"] = classes;
  return j;
}

void cmd_census(const CensusFlags& cf, const Output& out) {
  CensusOptions opts;
  opts.t = cf.t;
  opts.h = cf.h;
  opts.inf_policy = parse_infinity_policy(cf.inf_policy);
  opts.twist_range = parse_twist_range(cf.twist_range);
  opts.jobs = cf.jobs;
  opts.allow_small_dimensions = cf.allow_small;
  const auto res = run_census(parse_family(cf.family), field_of_order(cf.q), cf.n, cf.k, opts);
  const std::string csv = CensusRow::csv_header() + "\n" + res.row.csv_line() + "\n";
  if (!cf.out_path.empty()) {
    std::ofstream f(cf.out_path);
    if (!f) fail_usage("cannot write " + cf.out_path);
    f << csv;
    std::ofstream m(cf.out_path + ".json");
    m << manifest(res).dump(2) << '\n';
  }
  json j = manifest(res);
  j.erase("seconds");
  j.erase("schema_version");
  out.emit(j, csv);
}

struct TablesFlags {
  unsigned table = 0;
  std::optional<unsigned> q;
  std::string golden_dir = TRS_GOLDEN_DIR;
};

void cmd_tables(const TablesFlags& tf, const Output& out) {
  std::vector<unsigned> tables;
  if (tf.table == 0) tables = {1, 2};
  else if (tf.table == 1 || tf.table == 2) tables = {tf.table};
  else fail_usage("--table is 1 or 2");
  json rows = json::array();
  std::ostringstream text;
  std::size_t mismatches = 0;
  for (unsigned t : tables) {
    const std::string path = tf.golden_dir + "/table" + std::to_string(t) + ".csv";
    std::ifstream in(path);
    if (!in) fail_usage("cannot open " + path);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
      const auto cells = split(line);
      if (cells.size() < 7) continue;
      const unsigned q = static_cast<unsigned>(to_integer(cells[0]));
      if (tf.q && *tf.q != q) continue;
      const unsigned n = static_cast<unsigned>(to_integer(cells[1])), k = static_cast<unsigned>(to_integer(cells[2]));
      const auto res = t == 1 ? census_star(field_of_order(q), n, k) : census_twisted(field_of_order(q), n, k);
      const std::string got = res.row.csv_line();
      const bool ok = got == line;
      mismatches += !ok;
      json r;
      r["table"] = t;
      r["row"] = got;
      r["golden"] = line;
      r["match"] = ok;
      rows.push_back(r);
      text << (ok ? "ok       " : "MISMATCH ") << got;
      if (!ok) text << "   (golden " << line << ")";
      text << '\n';
    }
  }
  json j;
  j["rows"] = rows;
  j["mismatches"] = mismatches;
  text << rows.size() << " rows, " << mismatches << " mismatches\n";
  out.emit(j, text.str());
  if (mismatches) throw GoldenMismatch(std::to_string(mismatches) + " rows differ from the golden tables");
}

void report(const char* kind, const std::string& msg) {
  json j;
  j["error"] = kind;
  j["message"] = msg;
  std::cerr << j.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted Reed-Solomon codes: construction, MDS checks, equivalence, decoding, census"};
  app.require_subcommand(1);
  // --h is the hook, so help is long-form only (inherited by subcommands)
  app.set_help_flag("--help", "Print this help message and exit");
  Output out;
  app.add_flag("--json", out.as_json, "machine-readable output");

  Inputs in;
  auto* field_info = app.add_subcommand("field-info", "describe GF(q)");
  in.add_field_flags(field_info);

  auto* construct = app.add_subcommand("construct", "generator matrix of a twisted code");
  in.add_spec_flags(construct, false);

  std::string message, received, method = "general";
  std::optional<unsigned> tau;
  bool allow_inf = false;
  auto* enc = app.add_subcommand("encode", "encode a message");
  in.add_spec_flags(enc, false);
  enc->add_option("--message", message, "k comma-separated symbols")->required();

  auto* dec = app.add_subcommand("decode", "hook-guessing list decoder");
  in.add_spec_flags(dec, false);
  dec->add_option("--received", received, "n comma-separated symbols")->required();
  dec->add_option("--tau", tau, "decoding radius (default floor((n-k)/2))");

  auto* mds = app.add_subcommand("is-mds", "decide the MDS property");
  in.add_spec_flags(mds, true);
  mds->add_option("--method", method, "general | minors | star | plus")
      ->check(CLI::IsMember({"general", "minors", "star", "plus"}));
  mds->add_flag("--allow-inf-any-hook", allow_inf, "accept infinity with h != k-1 (decided by minors)");

  auto* grs = app.add_subcommand("is-grs", "test equivalence to a GRS code");
  in.add_spec_flags(grs, true);

  auto* canon = app.add_subcommand("canon", "canonical signature of an MDS code");
  in.add_spec_flags(canon, true);

  CensusFlags cf;
  auto* census = app.add_subcommand("census", "count codes and equivalence classes");
  census->add_option("--q", cf.q, "field order")->required();
  census->add_option("--n", cf.n, "length")->required();
  census->add_option("--k", cf.k, "dimension")->required();
  census->add_option("--family", cf.family, "star | plus | twisted | rl")
      ->check(CLI::IsMember({"star", "plus", "twisted", "rl"}));
  census->add_option("--t", cf.t, "restrict the twist");
  census->add_option("--h", cf.h, "restrict the hook");
  census->add_option("--inf-policy", cf.inf_policy, "none | strict | liberal")
      ->check(CLI::IsMember({"none", "strict", "liberal"}));
  census->add_option("--twist-range", cf.twist_range, "redundancy (t <= n-k) | field (t <= q-1-k)")
      ->check(CLI::IsMember({"redundancy", "field"}));
  census->add_option("--jobs", cf.jobs, "worker threads (default TRS_JOBS or core count)");
  census->add_flag("--allow-small-dimensions", cf.allow_small, "allow k <= 2 or k >= n-2");
  census->add_option("--out", cf.out_path, "CSV output; a JSON manifest is written next to it");

  TablesFlags tf;
  auto* tables = app.add_subcommand("tables", "recompute the golden census tables and diff against them");
  tables->add_option("--table", tf.table, "1 or 2 (default both)");
  tables->add_option("--q", tf.q, "only rows with this q");
  tables->add_option("--golden-dir", tf.golden_dir, "directory holding table1.csv and table2.csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report("usage", e.what());
    return 2;
  }

  try {
    if (*field_info) cmd_field_info(in, out);
    else if (*construct) cmd_construct(in, out);
    else if (*enc) cmd_encode(in, message, out);
    else if (*dec) cmd_decode(in, received, tau, out);
    else if (*mds) cmd_is_mds(in, method, allow_inf, out);
    else if (*grs) cmd_is_grs(in, out);
    else if (*canon) cmd_canon(in, out);
    else if (*census) cmd_census(cf, out);
    else if (*tables) cmd_tables(tf, out);
  } catch (const UsageError& e) {
    report("usage", e.what());
    return 2;
  } catch (const GoldenMismatch& e) {
    report("golden-mismatch", e.what());
    return 3;
  } catch (const DomainError& e) {
    report("domain", e.what());
    return 1;
  }
  return 0;
}
