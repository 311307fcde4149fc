#include "pgs/cli.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pgs/constructions.hpp"
#include "pgs/errors.hpp"
#include "pgs/group.hpp"
#include "pgs/limits.hpp"
#include "pgs/series.hpp"
#include "pgs/verify.hpp"

namespace pgs::cli {

namespace {

using nlohmann::json;

struct Config {
  bool json_out = false;
  std::uint64_t max_order = 0;  // 0: keep the environment or default
  std::uint64_t decompose_bound = 0;
  std::uint64_t seed = kDefaultSeed;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A description is a file name, or inline JSON when it starts with '{'.
GroupDescription load(const std::string& arg) {
  std::size_t i = arg.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && arg[i] == '{') return parse_description(arg);
  return parse_description(slurp(arg));
}

// A named element or a short power of one, else the coordinates.
std::string render(const FiniteGroup& g, const Element& x) {
  for (const auto& n : g.named_elements())
    if (n.value == x) return n.name;
  for (const auto& n : g.named_elements()) {
    Element y = n.value;
    for (int e = 2; e <= 64; ++e) {
      y = g.multiply(y, n.value);
      if (y.is_zero()) break;
      if (y == x) return n.name + "^" + std::to_string(e);
    }
  }
  return x.to_string();
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string set_text(const std::set<unsigned>& s) {
  std::string t = "{";
  for (unsigned i : s) t += (t.size() > 1 ? "," : "") + std::to_string(i);
  return t + "}";
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_describe(const Config& cfg, const std::string& arg, std::ostream& out) {
  const GroupDescription d = load(arg);
  GroupPtr g = build_from_description(d);
  const CentralSeriesChain ucs = upper_central_series(*g);
  const auto orders = ucs.orders();
  std::vector<std::string> gens;
  for (const auto& n : g->generators()) gens.push_back(n.name);
  if (cfg.json_out) {
    emit(out, {{"group", to_json(d)},
               {"label", g->label()},
               {"p", g->prime()},
               {"order", g->order()},
               {"class", ucs.length()},
               {"generators", gens},
               {"upper_central_orders", orders}});
    return kOk;
  }
  out << g->label() << ": order " << g->order() << ", class " << ucs.length() << '\n';
  out << "generators:";
  for (const auto& n : gens) out << ' ' << n;
  out << "\nupper central orders: " << join(orders) << '\n';
  return kOk;
}

int cmd_spectrum(const Config& cfg, const std::string& arg, std::ostream& out) {
  const GroupDescription d = load(arg);
  GroupPtr g = build_from_description(d);
  const SpectrumReport r = spectrum(*g);
  if (cfg.json_out) {
    json j = spectrum_json(r);
    j["group"] = to_json(d);
    j["label"] = g->label();
    emit(out, j);
    return kOk;
  }
  out << g->label() << ": class " << r.nilpotence_class << ", spectrum " << set_text(r.spectrum) << '\n';
  out << "layer  |Z_i|       order-p witness\n";
  for (unsigned i = 1; i < r.layer_orders.size(); ++i) {
    std::string ord = std::to_string(r.layer_orders[i]);
    out << i << std::string(i < 10 ? 6 : 5, ' ') << ord << std::string(ord.size() < 12 ? 12 - ord.size() : 1, ' ');
    auto it = r.witnesses.find(i);
    out << (it == r.witnesses.end() ? "-" : render(*g, it->second)) << '\n';
  }
  return kOk;
}

int cmd_series(const Config& cfg, const std::string& arg, bool lower, std::ostream& out) {
  const GroupDescription d = load(arg);
  GroupPtr g = build_from_description(d);
  // Terms listed top-down for the lower series, bottom-up for the upper.
  std::vector<EnumeratedSubgroup> terms;
  if (lower) {
    terms = lower_central_terms(*g);
  } else {
    terms = upper_central_series(*g).terms();
  }
  const std::string sym = lower ? "gamma_" : "Z_";
  json rows = json::array();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    // Least element of the term outside its successor (lower) or predecessor (upper).
    const EnumeratedSubgroup* other = nullptr;
    if (lower && i + 1 < terms.size()) other = &terms[i + 1];
    if (!lower && i > 0) other = &terms[i - 1];
    std::optional<Element> w;
    if (other)
      for (const Element& x : terms[i].elements())
        if (!other->contains(x)) {
          w = x;
          break;
        }
    json row = {{"name", sym + std::to_string(lower ? i + 1 : i)}, {"order", terms[i].size()}};
    if (w) row["witness"] = render(*g, *w);
    rows.push_back(row);
  }
  if (cfg.json_out) {
    emit(out, {{"group", to_json(d)}, {"label", g->label()}, {"series", lower ? "lower" : "upper"}, {"terms", rows}});
    return kOk;
  }
  out << g->label() << ": " << (lower ? "lower" : "upper") << " central series\n";
  for (const auto& row : rows) {
    out << row["name"].get<std::string>() << "  order " << row["order"].get<std::uint64_t>();
    if (row.contains("witness")) out << "  witness " << row["witness"].get<std::string>();
    out << '\n';
  }
  return kOk;
}

int report(const Config& cfg, const std::vector<CheckRecord>& records, bool timings, std::ostream& out) {
  const int code = exit_code(records);
  if (cfg.json_out) {
    json arr = json::array();
    for (const auto& r : records) arr.push_back(record_json(r, timings));
    emit(out, {{"seed", cfg.seed}, {"records", arr}, {"exit", code}});
    return code;
  }
  std::map<Status, int> tally;
  for (const auto& r : records) {
    out << record_line(r, timings) << '\n';
    ++tally[r.status];
  }
  out << records.size() << " records:";
  for (Status s : {Status::Pass, Status::Fail, Status::PreconditionFailed, Status::ResourceLimit, Status::Error})
    out << ' ' << status_name(s) << ' ' << tally[s];
  out << " (seed " << cfg.seed << ")\n";
  return code;
}

int cmd_verify(const Config& cfg, const std::string& arg, std::vector<std::string> checks, bool timings,
               std::ostream& out) {
  const GroupDescription d = load(arg);
  if (checks.empty()) checks = description_check_names();
  return report(cfg, verify_description(d, checks, cfg.seed), timings, out);
}

int cmd_suite(const Config& cfg, const std::vector<std::string>& checks, std::size_t recipes, bool timings,
              std::ostream& out) {
  SuiteOptions o;
  o.seed = cfg.seed;
  o.filter = checks;
  o.random_recipes = recipes;
  return report(cfg, run_paper_suite(o), timings, out);
}

int cmd_decompose(const Config& cfg, const std::string& arg, std::ostream& out) {
  const GroupDescription d = load(arg);
  GroupPtr g = build_from_description(d);
  const auto r = direct_factor_search(*g);
  if (cfg.json_out) {
    json j = {{"group", to_json(d)}, {"label", g->label()}, {"order", g->order()}, {"decomposable", r.has_value()}};
    if (r) {
      j["factor_orders"] = {r->first.size(), r->second.size()};
      std::vector<std::string> a, b;
      for (const auto& x : r->first.generators()) a.push_back(render(*g, x));
      for (const auto& x : r->second.generators()) b.push_back(render(*g, x));
      j["factor_generators"] = {a, b};
    }
    emit(out, j);
    return kOk;
  }
  out << g->label() << " (order " << g->order() << "): ";
  if (!r) {
    out << "indecomposable\n";
  } else {
    out << "direct product of normal subgroups of orders " << r->first.size() << " and " << r->second.size() << '\n';
  }
  return kOk;
}

std::uint64_t parse_env_bound(const char* v) {
  char* end = nullptr;
  errno = 0;
  const unsigned long long n = std::strtoull(v, &end, 10);
  if (errno || end == v || *end || n == 0 || v[0] == '-') throw InputError(std::string("PGS_MAX_ORDER: not a positive integer: '") + v + "'");
  return n;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Upper central series and order-p spectra of finite p-groups", "pgs"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_flag("--json", cfg.json_out, "Machine-readable output");
  app.add_option("--max-order", cfg.max_order, "Largest group enumerated (default 2000000)")
      ->check(CLI::PositiveNumber);
  app.add_option("--decompose-bound", cfg.decompose_bound, "Largest order for direct factor search (default 20000)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for randomized recipes and sampling");

  std::string desc;
  std::vector<std::string> checks;
  bool upper = false, lower = false, paper = false, no_timings = false;
  std::size_t recipes = 50;

  auto* describe = app.add_subcommand("describe", "Order, class, generators and upper central orders");
  describe->add_option("group", desc, "Description file or inline JSON")->required();
  auto* spec = app.add_subcommand("spectrum", "Layers of the upper central series holding elements of order p");
  spec->add_option("group", desc, "Description file or inline JSON")->required();
  auto* series = app.add_subcommand("series", "Terms of the upper or lower central series");
  series->add_option("group", desc, "Description file or inline JSON")->required();
  auto* up = series->add_flag("--upper", upper, "Upper central series (default)");
  series->add_flag("--lower", lower, "Lower central series")->excludes(up);
  auto* verify = app.add_subcommand("verify", "Run checks on one group");
  verify->add_option("group", desc, "Description file or inline JSON")->required();
  verify->add_option("--check", checks, "Comma-separated checks (default: all)")->delimiter(',');
  verify->add_flag("--no-timings", no_timings, "Report 0 ms for every record");
  auto* suite = app.add_subcommand("suite", "Run the built-in battery of checks");
  suite->add_flag("--paper", paper, "The full battery (the default)");
  suite->add_option("--check", checks, "Comma-separated check names to keep")->delimiter(',');
  suite->add_option("--recipes", recipes, "Number of random recipes")->check(CLI::NonNegativeNumber);
  suite->add_flag("--no-timings", no_timings, "Report 0 ms for every record");
  auto* decompose = app.add_subcommand("decompose", "Search for a direct product decomposition");
  decompose->add_option("group", desc, "Description file or inline JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    Limits lim = current_limits();
    if (const char* v = std::getenv("PGS_MAX_ORDER"); v && *v) lim.max_order = parse_env_bound(v);
    if (cfg.max_order) lim.max_order = cfg.max_order;
    if (cfg.decompose_bound) lim.decompose_bound = cfg.decompose_bound;
    ScopedLimits scope(lim);

    if (*describe) return cmd_describe(cfg, desc, out);
    if (*spec) return cmd_spectrum(cfg, desc, out);
    if (*series) return cmd_series(cfg, desc, lower, out);
    if (*verify) return cmd_verify(cfg, desc, checks, !no_timings, out);
    if (*suite) return cmd_suite(cfg, checks, recipes, !no_timings, out);
    if (*decompose) return cmd_decompose(cfg, desc, out);
    return kBadInput;
  } catch (const InputError& e) {
    err << "pgs: invalid input: " << e.what() << '\n';
    return kBadInput;
  } catch (const ResourceLimit& e) {
    err << "pgs: resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const std::exception& e) {
    err << "pgs: error: " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace pgs::cli
