#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "permband/amidakuji.hpp"
#include "permband/cayley.hpp"
#include "permband/error.hpp"
#include "permband/extremal.hpp"
#include "permband/factorize.hpp"
#include "permband/rank.hpp"

namespace permband::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "text";
  int threads = 0;
  std::string memory_cap;
  bool allow_large = false;
};

std::uint64_t parse_bytes(const std::string& text) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    throw UsageError("invalid memory size '" + text + "'");
  }
  std::string suffix = text.substr(used);
  if (!suffix.empty() && (suffix.back() == 'B' || suffix.back() == 'b')) suffix.pop_back();
  static const std::map<std::string, unsigned> shifts{{"", 0},  {"K", 10}, {"k", 10}, {"M", 20},
                                                      {"m", 20}, {"G", 30}, {"g", 30}, {"T", 40}};
  auto it = shifts.find(suffix);
  if (it == shifts.end()) throw UsageError("invalid memory size suffix in '" + text + "'");
  return static_cast<std::uint64_t>(value) << it->second;
}

BfsOptions bfs_options(const Globals& g) {
  BfsOptions o;
  o.threads = g.threads;
  o.allow_large = g.allow_large;
  if (!g.memory_cap.empty()) {
    o.memory_cap = parse_bytes(g.memory_cap);
  } else if (const char* env = std::getenv("PERMBAND_MEMCAP"); env && *env) {
    o.memory_cap = parse_bytes(env);
  }
  return o;
}

Json perm_json(const Permutation& p) { return Json(std::vector<int>(p.one_line().begin(), p.one_line().end())); }

std::string one_line_text(const Json& arr) {
  std::string s;
  for (const auto& v : arr) {
    if (!s.empty()) s += ' ';
    s += std::to_string(v.get<int>());
  }
  return s;
}

Permutation read_perm(const std::string& text, int n) { return parse_permutation(text, n); }

Json ladder_json(const Ladder& l) { return Json{{"n", l.n}, {"levels", l.levels}}; }

Ladder read_ladder_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open ladder file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    const Json doc = Json::parse(text);
    const Json& body = doc.contains("ladder") ? doc.at("ladder") : doc;
    Ladder l;
    l.n = body.at("n").get<int>();
    l.levels = body.at("levels").get<std::vector<std::vector<int>>>();
    return l;
  }
  return parse_ladder(text);
}

// ---------------------------------------------------------------- commands

struct Request {
  std::string perm;
  int n = 0;
  int m = 0;
  std::string method = "auto";
  std::string strategy = "auto";
  bool prove_optimal = false;
  std::string farthest = "count";
  std::string kernel = "parallel";
  std::uint64_t farthest_limit = 1'000'000;
  int n_min = 2;
  int n_max = 10;
  int bfs_max_n = 10;
  std::string reading = "resolved";
  std::string file;
  bool render = false;
  int rung_width = 3;
};

Json cmd_dist(const Request& r, const Globals& g) {
  const Permutation p = read_perm(r.perm, r.n);
  validate_degree_width(p.degree(), r.m);
  DistanceOptions opts;
  opts.fallback = bfs_options(g);
  opts.fallback.collect_farthest = false;
  const int d = distance(p, r.m, opts);
  return Json{{"permutation", perm_json(p)}, {"cycles", format_cycles(p)}, {"m", r.m}, {"distance", d}};
}

Json cmd_factor(const Request& r, const Globals& g, int& exit_code) {
  const Permutation p = read_perm(r.perm, r.n);
  const int n = p.degree();
  validate_degree_width(n, r.m);

  std::optional<Factorization> f;
  const std::string& method = r.method;
  if (method == "auto") {
    f = auto_factor(p, r.m);
  } else if (method == "adjacent") {
    f = adjacent_sort(p);
    f->m = r.m;
  } else if (method == "unrestricted") {
    if (r.m != n - 1) throw UsageError("method unrestricted needs m = n-1 = " + std::to_string(n - 1));
    f = unrestricted_factor(p);
  } else if (method == "lemma210" || method == "cycle-pairing") {
    f = cycle_pairing_factor(p, r.m);
  } else if (method == "recursive") {
    RecursiveStrategy s = RecursiveStrategy::automatic;
    if (r.strategy == "move-last") s = RecursiveStrategy::move_last;
    if (r.strategy == "move-ends") s = RecursiveStrategy::move_ends;
    f = recursive_factor(p, r.m, s);
  } else if (method == "bfs") {
    f = bfs_factor(p, r.m);
  } else {
    throw UsageError("unknown method '" + method + "'");
  }

  Json factors = Json::array();
  for (auto t : f->factors) factors.push_back({t.i, t.j});
  Json res{{"permutation", perm_json(p)},
           {"m", f->m},
           {"method", std::string(to_string(f->method))},
           {"length", f->length()},
           {"factors", factors},
           {"claimed_bound", f->claimed_bound ? Json(*f->claimed_bound) : Json(nullptr)}};
  if (f->pairing) res["pairing"] = {{"lm_cycles", f->pairing->lm_cycles}, {"pairs", f->pairing->pairs}};
  res["text"] = format_factorization(*f);

  const auto violation = verify(*f);
  res["verified"] = !violation.has_value();
  if (violation) {
    res["violation"] = violation->message;
    exit_code = 1;
  }
  if (f->claimed_bound && f->length() > *f->claimed_bound) {
    res["verified"] = false;
    res["violation"] = "length exceeds the construction's bound";
    exit_code = 1;
  }
  if (r.prove_optimal) {
    DistanceOptions opts;
    opts.fallback = bfs_options(g);
    const int d = distance(p, r.m, opts);
    res["distance"] = d;
    res["optimal"] = d == f->length();
    if (d > f->length()) {
      res["verified"] = false;
      res["violation"] = "factorization shorter than the search distance";
      exit_code = 1;
    }
  }
  return res;
}

Json cmd_diameter(const Request& r, const Globals& g) {
  validate_degree_width(r.n, r.m);
  BfsOptions opts = bfs_options(g);
  if (r.kernel != "serial" && r.kernel != "parallel") throw UsageError("unknown kernel '" + r.kernel + "'");
  opts.kernel = r.kernel == "serial" ? Kernel::serial : Kernel::parallel;
  opts.collect_farthest = r.farthest == "list";
  opts.farthest_limit = r.farthest_limit;
  const auto rep = bfs_diameter(r.n, r.m, opts);
  Json res{{"n", rep.n},
           {"m", rep.m},
           {"delta", rep.delta},
           {"level_counts", rep.level_counts},
           {"codec", rep.codec}};
  if (r.farthest != "none") res["farthest_count"] = rep.farthest_count;
  if (r.farthest == "list") {
    Json list = Json::array();
    for (const auto& p : rep.farthest) list.push_back(perm_json(p));
    res["farthest"] = list;
    res["farthest_elided"] = rep.farthest_elided;
  }
  return res;
}

Json cmd_histogram(const Request& r, const Globals& g) {
  validate_degree_width(r.n, r.m);
  BfsOptions opts = bfs_options(g);
  opts.collect_farthest = false;
  const auto counts = distance_histogram(r.n, r.m, opts);
  Json levels = Json::array();
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    levels.push_back({{"distance", k}, {"count", counts[k]}});
    total += counts[k];
  }
  return Json{{"n", r.n}, {"m", r.m}, {"delta", counts.size() - 1}, {"levels", levels}, {"total", total}};
}

Json cmd_table(const Request& r, const Globals& g) {
  if (r.n_min < 2 || r.n_max < r.n_min) throw UsageError("need 2 <= n-min <= n-max");
  if (r.n_max > 64) throw UsageError("n-max above 64 is not supported");
  BfsOptions opts = bfs_options(g);
  DeltaOracle oracle(r.bfs_max_n, opts);
  Json cells = Json::array();
  for (int n = r.n_min; n <= r.n_max; ++n) {
    for (int m = 1; m <= n - 1; ++m) {
      const auto b = delta_bounds(n, m, oracle);
      std::string kind = "bound";
      if (b.exact) kind = *oracle.source(n, m) == "closed-form" ? "closed-form" : "bfs";
      cells.push_back({{"n", n}, {"m", m}, {"value", b.upper}, {"kind", kind}});
    }
  }
  return Json{{"n_min", r.n_min}, {"n_max", r.n_max}, {"bfs_max_n", r.bfs_max_n}, {"cells", cells}};
}

Json cmd_bounds(const Request& r, const Globals& g) {
  validate_degree_width(r.n, r.m);
  DeltaOracle oracle(r.bfs_max_n, bfs_options(g));
  const auto b = delta_bounds(r.n, r.m, oracle);
  return Json{{"n", b.n},
              {"m", b.m},
              {"lower", b.lower},
              {"lower_source", b.lower_source},
              {"upper", b.upper},
              {"upper_source", b.upper_source},
              {"exact", b.exact},
              {"bfs_max_n", r.bfs_max_n}};
}

Reading reading_of(const std::string& s) {
  if (s == "resolved") return Reading::resolved;
  if (s == "literal") return Reading::literal;
  throw UsageError("unknown reading '" + s + "'");
}

Json cmd_extremal_gen(const Request& r) {
  validate_degree_width(r.n, r.m);
  const auto perms = enumerate_extremal(r.n, r.m, reading_of(r.reading));
  Json list = Json::array();
  for (const auto& p : perms) list.push_back(perm_json(p));
  const auto closed = delta_closed_form(r.n, r.m);
  return Json{{"n", r.n},
              {"m", r.m},
              {"reading", r.reading},
              {"delta", closed ? Json(*closed) : Json(nullptr)},
              {"count", perms.size()},
              {"permutations", list}};
}

Json case_json(const ExtremalCase& c) {
  Json pairs = Json::array();
  for (auto [i, j] : c.pairs) pairs.push_back({i, j});
  return Json{{"tag", std::string(to_string(c.tag))}, {"d", c.d}, {"pairs", pairs}, {"special", c.special},
              {"rest", c.rest}};
}

Json cmd_extremal_check(const Request& r, const Globals& g) {
  const Reading reading = reading_of(r.reading);
  if (!r.perm.empty()) {
    const Permutation p = read_perm(r.perm, r.n);
    validate_degree_width(p.degree(), r.m);
    Json res{{"permutation", perm_json(p)}, {"m", r.m}, {"reading", r.reading}};
    res.update(case_json(is_extremal(p, r.m, reading)));
    return res;
  }
  validate_degree_width(r.n, r.m);
  const auto audit = audit_classification(r.n, r.m, reading, bfs_options(g));
  return Json{{"n", r.n},
              {"m", r.m},
              {"reading", r.reading},
              {"farthest_count", audit.farthest_count},
              {"recognized_count", audit.recognized_count},
              {"ok", audit.ok()},
              {"mismatches", audit.mismatch_report()}};
}

Json cmd_amida_apply(const Request& r) {
  const Ladder l = read_ladder_file(r.file);
  const Permutation p = apply(l);
  return Json{{"ladder", ladder_json(l)}, {"rungs", l.rung_count()}, {"permutation", perm_json(p)}};
}

Json cmd_amida_solve(const Request& r) {
  const Permutation p = read_perm(r.perm, r.n);
  const Ladder l = synthesize(p);
  Json res{{"permutation", perm_json(p)},
           {"inversions", inversion_count(p)},
           {"rungs", l.rung_count()},
           {"ladder", ladder_json(l)},
           {"text", format_ladder(l)}};
  if (r.render) res["ascii"] = render_ascii(l, r.rung_width);
  return res;
}

Json cmd_amida_check(const Request& r) {
  const Ladder l = read_ladder_file(r.file);
  const auto v = validate(l);
  Json res{{"ladder", ladder_json(l)}, {"ok", !v.has_value()}};
  res["violation"] = v ? Json{{"level", v->level}, {"column", v->column}, {"message", v->message}} : Json(nullptr);
  return res;
}

// ---------------------------------------------------------------- rendering

std::string cell_text(const Json& c) {
  const std::string v = std::to_string(c.at("value").get<int>());
  const std::string kind = c.at("kind").get<std::string>();
  // Degrees below 5 are left unmarked even when searched.
  if (kind == "bfs" && c.at("n").get<int>() >= 5) return "[" + v + "]";
  if (kind == "bound") return v + "?";
  return v;
}

void render_text(const std::string& cmd, const Json& res, std::ostream& out) {
  if (cmd == "dist") {
    out << "permutation " << one_line_text(res["permutation"]) << "\n"
        << "m " << res["m"].get<int>() << "\n"
        << "distance " << res["distance"].get<int>() << "\n";
  } else if (cmd == "factor") {
    out << res["text"].get<std::string>() << "\n";
    if (!res["claimed_bound"].is_null()) out << "bound " << res["claimed_bound"].get<int>() << "\n";
    if (res.contains("pairing")) {
      out << "lm_cycles " << res["pairing"]["lm_cycles"].get<int>() << " pairs "
          << res["pairing"]["pairs"].get<int>() << "\n";
    }
    out << "verified " << (res["verified"].get<bool>() ? "yes" : "no") << "\n";
    if (res.contains("violation")) out << "violation " << res["violation"].get<std::string>() << "\n";
    if (res.contains("distance")) {
      out << "distance " << res["distance"].get<int>() << " optimal "
          << (res["optimal"].get<bool>() ? "yes" : "no") << "\n";
    }
  } else if (cmd == "diameter") {
    out << "delta(" << res["n"].get<int>() << "," << res["m"].get<int>() << ") = " << res["delta"].get<int>()
        << "\n";
    if (res.contains("farthest_count")) out << "farthest " << res["farthest_count"].get<std::uint64_t>() << "\n";
    if (res.contains("farthest")) {
      if (res["farthest_elided"].get<bool>()) out << "farthest list elided\n";
      for (const auto& p : res["farthest"]) out << one_line_text(p) << "\n";
    }
  } else if (cmd == "histogram") {
    out << "distance count\n";
    for (const auto& lv : res["levels"]) {
      out << lv["distance"].get<int>() << " " << lv["count"].get<std::uint64_t>() << "\n";
    }
    out << "total " << res["total"].get<std::uint64_t>() << "\n";
  } else if (cmd == "table") {
    const int n_min = res["n_min"].get<int>();
    const int n_max = res["n_max"].get<int>();
    out << std::setw(4) << "n\\m";
    for (int m = 1; m <= n_max - 1; ++m) out << std::setw(6) << m;
    out << "\n";
    std::size_t k = 0;
    const auto& cells = res["cells"];
    for (int n = n_min; n <= n_max; ++n) {
      out << std::setw(4) << n;
      for (int m = 1; m <= n - 1; ++m) out << std::setw(6) << cell_text(cells[k++]);
      out << "\n";
    }
  } else if (cmd == "bounds") {
    out << "delta(" << res["n"].get<int>() << "," << res["m"].get<int>() << ")";
    if (res["exact"].get<bool>()) {
      out << " = " << res["upper"].get<int>() << " (" << res["upper_source"].get<std::string>() << ")\n";
    } else {
      out << ": lower " << res["lower"].get<int>() << " (" << res["lower_source"].get<std::string>()
          << "), upper " << res["upper"].get<int>() << " (" << res["upper_source"].get<std::string>() << ")\n";
    }
  } else if (cmd == "extremal gen") {
    for (const auto& p : res["permutations"]) out << one_line_text(p) << "\n";
  } else if (cmd == "extremal check") {
    if (res.contains("tag")) {
      out << "tag " << res["tag"].get<std::string>() << " d " << res["d"].get<int>() << "\n";
      if (res["tag"] != "NONE") {
        out << "pairs";
        for (const auto& pr : res["pairs"]) out << " (" << pr[0].get<int>() << "," << pr[1].get<int>() << ")";
        out << "\nspecial " << format_cycle(res["special"].get<std::vector<int>>()) << "\nrest "
            << format_cycle(res["rest"].get<std::vector<int>>()) << "\n";
      }
    } else {
      out << "farthest " << res["farthest_count"].get<std::uint64_t>() << " recognized "
          << res["recognized_count"].get<std::uint64_t>() << " " << (res["ok"].get<bool>() ? "ok" : "MISMATCH")
          << "\n";
      for (const auto& line : res["mismatches"]) out << line.get<std::string>() << "\n";
    }
  } else if (cmd == "amida apply") {
    out << "permutation " << one_line_text(res["permutation"]) << "\n";
  } else if (cmd == "amida solve") {
    out << res["text"].get<std::string>();
    if (res.contains("ascii")) out << res["ascii"].get<std::string>();
  } else if (cmd == "amida check") {
    if (res["ok"].get<bool>()) {
      out << "ok\n";
    } else {
      out << "violation " << res["violation"]["message"].get<std::string>() << "\n";
    }
  }
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

void render_csv(const std::string& cmd, const Json& res, std::ostream& out) {
  if (cmd == "table") {
    out << "n,m,value,kind\n";
    for (const auto& c : res["cells"]) {
      out << c["n"].get<int>() << "," << c["m"].get<int>() << "," << c["value"].get<int>() << ","
          << c["kind"].get<std::string>() << "\n";
    }
  } else if (cmd == "histogram") {
    out << "level,count\n";
    for (const auto& lv : res["levels"]) {
      out << lv["distance"].get<int>() << "," << lv["count"].get<std::uint64_t>() << "\n";
    }
  } else if (cmd == "diameter" && res.contains("farthest")) {
    out << "permutation\n";
    for (const auto& p : res["farthest"]) out << csv_quote(one_line_text(p)) << "\n";
  } else if (cmd == "diameter") {
    out << "n,m,delta,farthest_count\n"
        << res["n"].get<int>() << "," << res["m"].get<int>() << "," << res["delta"].get<int>() << ","
        << (res.contains("farthest_count") ? std::to_string(res["farthest_count"].get<std::uint64_t>()) : "")
        << "\n";
  } else if (cmd == "extremal gen") {
    out << "permutation\n";
    for (const auto& p : res["permutations"]) out << csv_quote(one_line_text(p)) << "\n";
  } else if (cmd == "factor") {
    out << "index,i,j\n";
    int k = 0;
    for (const auto& t : res["factors"]) out << k++ << "," << t[0].get<int>() << "," << t[1].get<int>() << "\n";
  } else {
    // Flat key,value rows for the scalar fields.
    out << "key,value\n";
    for (const auto& [key, value] : res.items()) {
      if (value.is_structured()) {
        out << key << "," << csv_quote(value.dump()) << "\n";
      } else if (value.is_string()) {
        out << key << "," << csv_quote(value.get<std::string>()) << "\n";
      } else {
        out << key << "," << value.dump() << "\n";
      }
    }
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounded-width transposition factorizations and Cayley graph diameters", "permband"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  Request r;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--threads", g.threads, "Worker threads (0 = all)")->check(CLI::NonNegativeNumber);
  app.add_option("--memory-cap", g.memory_cap, "Search memory cap in bytes (K/M/G suffixes); env PERMBAND_MEMCAP");
  app.add_flag("--allow-large", g.allow_large, "Allow exhaustive searches above degree 12");

  auto perm_opts = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--perm", r.perm, "Permutation in one-line or cycle notation");
    if (required) o->required();
    sub->add_option("--n", r.n, "Degree (for cycle notation)");
  };

  auto* dist = app.add_subcommand("dist", "Exact distance from the identity");
  perm_opts(dist, true);
  dist->add_option("--m", r.m, "Maximum transposition width")->required();

  auto* factor = app.add_subcommand("factor", "Factor into transpositions of width <= m");
  perm_opts(factor, true);
  factor->add_option("--m", r.m, "Maximum transposition width")->required();
  factor->add_option("--method", r.method, "Construction")
      ->check(CLI::IsMember({"auto", "adjacent", "unrestricted", "lemma210", "cycle-pairing", "recursive", "bfs"}));
  factor->add_option("--strategy", r.strategy, "Peeling strategy for --method recursive")
      ->check(CLI::IsMember({"auto", "move-last", "move-ends"}));
  factor->add_flag("--prove-optimal", r.prove_optimal, "Compare the length with the exact distance");

  auto* diameter = app.add_subcommand("diameter", "Diameter by exhaustive search");
  diameter->add_option("--n", r.n, "Degree")->required();
  diameter->add_option("--m", r.m, "Maximum transposition width")->required();
  diameter->add_option("--farthest", r.farthest, "Report on the farthest permutations")
      ->check(CLI::IsMember({"none", "count", "list"}));
  diameter->add_option("--farthest-limit", r.farthest_limit, "Most farthest permutations to list");
  diameter->add_option("--kernel", r.kernel, "Search kernel")->check(CLI::IsMember({"serial", "parallel"}));

  auto* histogram = app.add_subcommand("histogram", "Number of permutations at each distance");
  histogram->add_option("--n", r.n, "Degree")->required();
  histogram->add_option("--m", r.m, "Maximum transposition width")->required();

  auto* table = app.add_subcommand("table", "Diameter table for a range of degrees");
  table->add_option("--n-min", r.n_min, "Smallest degree");
  table->add_option("--n-max", r.n_max, "Largest degree");
  table->add_option("--bfs-max-n", r.bfs_max_n, "Search exhaustively up to this degree");

  auto* bounds = app.add_subcommand("bounds", "Lower and upper diameter bounds");
  bounds->add_option("--n", r.n, "Degree")->required();
  bounds->add_option("--m", r.m, "Maximum transposition width")->required();
  bounds->add_option("--bfs-max-n", r.bfs_max_n, "Search exhaustively up to this degree");

  auto* extremal = app.add_subcommand("extremal", "Permutations at maximum distance");
  extremal->require_subcommand(1);
  extremal->fallthrough();
  auto* ext_gen = extremal->add_subcommand("gen", "Enumerate by case templates");
  ext_gen->fallthrough();
  ext_gen->add_option("--n", r.n, "Degree")->required();
  ext_gen->add_option("--m", r.m, "Maximum transposition width")->required();
  ext_gen->add_option("--reading", r.reading, "Case reading")->check(CLI::IsMember({"resolved", "literal"}));
  auto* ext_check = extremal->add_subcommand("check", "Classify a permutation, or audit a degree against search");
  ext_check->fallthrough();
  perm_opts(ext_check, false);
  ext_check->add_option("--m", r.m, "Maximum transposition width")->required();
  ext_check->add_option("--reading", r.reading, "Case reading")->check(CLI::IsMember({"resolved", "literal"}));

  auto* amida = app.add_subcommand("amida", "Ladder drawings");
  amida->require_subcommand(1);
  amida->fallthrough();
  auto* am_apply = amida->add_subcommand("apply", "Permutation produced by a ladder file");
  am_apply->fallthrough();
  am_apply->add_option("--file", r.file, "Ladder file (text or JSON)")->required();
  auto* am_solve = amida->add_subcommand("solve", "Minimal ladder for a permutation");
  am_solve->fallthrough();
  perm_opts(am_solve, true);
  am_solve->add_flag("--render", r.render, "Append an ASCII drawing");
  am_solve->add_option("--rung-width", r.rung_width, "Characters per rung in the drawing");
  auto* am_check = amida->add_subcommand("check", "Validate a ladder file");
  am_check->fallthrough();
  am_check->add_option("--file", r.file, "Ladder file (text or JSON)")->required();

  for (auto* sub : {dist, factor, diameter, histogram, table, bounds}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::string cmd;
  int exit_code = 0;
  Json result;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (dist->parsed()) {
      cmd = "dist";
      result = cmd_dist(r, g);
    } else if (factor->parsed()) {
      cmd = "factor";
      result = cmd_factor(r, g, exit_code);
    } else if (diameter->parsed()) {
      cmd = "diameter";
      result = cmd_diameter(r, g);
    } else if (histogram->parsed()) {
      cmd = "histogram";
      result = cmd_histogram(r, g);
    } else if (table->parsed()) {
      cmd = "table";
      result = cmd_table(r, g);
    } else if (bounds->parsed()) {
      cmd = "bounds";
      result = cmd_bounds(r, g);
    } else if (ext_gen->parsed()) {
      cmd = "extremal gen";
      result = cmd_extremal_gen(r);
    } else if (ext_check->parsed()) {
      cmd = "extremal check";
      if (r.perm.empty() && r.n == 0) throw UsageError("extremal check needs --perm, or --n for an audit");
      result = cmd_extremal_check(r, g);
    } else if (am_apply->parsed()) {
      cmd = "amida apply";
      result = cmd_amida_apply(r);
    } else if (am_solve->parsed()) {
      cmd = "amida solve";
      result = cmd_amida_solve(r);
    } else if (am_check->parsed()) {
      cmd = "amida check";
      result = cmd_amida_check(r);
    }
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const RegimeError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (g.format == "json") {
    Json inputs = Json::object();
    for (const CLI::App* level = &app; level != nullptr;) {
      for (const CLI::Option* opt : level->get_options()) {
        if (opt->count() == 0 || opt->get_lnames().empty()) continue;
        const auto& values = opt->results();
        inputs[opt->get_lnames().front()] = values.size() == 1 ? Json(values.front()) : Json(values);
      }
      const auto subs = level->get_subcommands();
      level = subs.empty() ? nullptr : subs.front();
    }
    Json doc{{"schema", kSchema},
             {"tool", "permband"},
             {"version", kVersion},
             {"codec", std::string(RankCodec::kScheme)},
             {"command", cmd},
             {"argv", args},
             {"inputs", inputs},
             {"result", result},
             {"timing", {{"wall_seconds", seconds}}}};
    out << doc.dump(2) << "\n";
  } else if (g.format == "csv") {
    render_csv(cmd, result, out);
  } else {
    render_text(cmd, result, out);
  }
  if (exit_code == 1) err << "internal violation: " << result.value("violation", std::string("unknown")) << "\n";
  return exit_code;
}

}  // namespace permband::cli
