// Command-line front end: closed-form family polynomials in three bases,
// positivity/real-rootedness checks, lattice-point counts, the bipartite
// positivity table, large-d scans, and the cross-oracle selftest.

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ehrhart/ehrhart.hpp"
#include "ehrhart/graph_io.hpp"

namespace {

using ehrhart::BudgetExceeded;
using ehrhart::CountMethod;
using ehrhart::CountReport;
using ehrhart::Family;
using ehrhart::FamilyId;
using ehrhart::GraphSource;
using ehrhart::GraphSpec;
using ehrhart::HStarVector;
using ehrhart::Int;
using ehrhart::MagicForm;
using ehrhart::Poly;
using ehrhart::Rational;
using nlohmann::json;

enum class Format { text, json, csv };

std::string join_strings(const std::vector<std::string>& v, const std::string& sep = " ") {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

std::vector<std::string> coeff_strings(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& c : v) out.push_back(c.str());
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

json form_to_json(int d, const std::vector<Rational>& coeffs) {
  return json{{"d", d}, {"coefficients", coeff_strings(coeffs)}};
}

// ---------------------------------------------------------------------------
// Ordered parallel execution: work items are computed by a pool but results
// are committed strictly in index order, so output does not depend on the
// thread count.

template <class R>
std::vector<R> parallel_map(int count, int threads, const std::function<R(int)>& work,
                            const std::function<void(int, const R&)>& on_ready) {
  std::vector<R> results(static_cast<size_t>(count));
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) {
      results[static_cast<size_t>(i)] = work(i);
      if (on_ready) on_ready(i, results[static_cast<size_t>(i)]);
    }
    return results;
  }
  std::vector<char> ready(static_cast<size_t>(count), 0);
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<int> next{0};
  std::exception_ptr error;
  auto body = [&] {
    while (true) {
      const int i = next.fetch_add(1);
      if (i >= count) return;
      R r;
      try {
        r = work(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
        cv.notify_all();
        return;
      }
      {
        std::lock_guard<std::mutex> lock(mu);
        results[static_cast<size_t>(i)] = std::move(r);
        ready[static_cast<size_t>(i)] = 1;
      }
      cv.notify_all();
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  for (int t = 0; t < threads; ++t) pool.emplace_back(body);
  {
    std::unique_lock<std::mutex> lock(mu);
    for (int i = 0; i < count; ++i) {
      cv.wait(lock, [&] { return ready[static_cast<size_t>(i)] || error; });
      if (error) break;
      if (on_ready) on_ready(i, results[static_cast<size_t>(i)]);
    }
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return results;
}

// ---------------------------------------------------------------------------
// Source resolution

struct Source {
  bool is_family = false;
  FamilyId family;
  GraphSource graph;
  std::string label;
};

/// `check` accepts family strings first, then graph shortcuts; for the
/// overlapping names (cycle:, complete:) the number is therefore a
/// dimension. `count` is graph-only, so there the number counts vertices.
Source resolve_check_source(const std::string& name, const std::string& graph_file) {
  Source src;
  if (!graph_file.empty()) {
    src.graph.spec = ehrhart::load_graph_file(graph_file);
    src.label = graph_file;
    return src;
  }
  try {
    src.family = ehrhart::parse_family_id(name);
    src.is_family = true;
    src.label = ehrhart::to_string(src.family);
    return src;
  } catch (const std::invalid_argument&) {
  }
  try {
    src.graph = ehrhart::parse_graph_shortcut(name);
    src.label = name;
    return src;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("check: \"" + name +
                                "\" is neither a family string (cross:, typeA:, typeC:, tree:, "
                                "complete:, stasheff:, cycle:) nor a graph shortcut "
                                "(k_bipartite:, complete_minus_edge:, cycle:, path:, complete:)");
  }
}

Source resolve_graph_source(const std::string& name, const std::string& graph_file) {
  Source src;
  if (!graph_file.empty()) {
    src.graph.spec = ehrhart::load_graph_file(graph_file);
    src.label = graph_file;
  } else {
    src.graph = ehrhart::parse_graph_shortcut(name);
    src.label = name;
  }
  return src;
}

// ---------------------------------------------------------------------------
// check

struct CheckData {
  std::string label;
  std::string kind;  // "family" or "graph"
  std::optional<CountMethod> method;
  int d = 0;
  Poly p;
  MagicForm magic;
  ehrhart::MagicVerdict verdict;
  bool magic_palindromic = false;
  HStarVector hstar;
  bool hstar_integral = false;
  ehrhart::SequenceFlags hflags;
  ehrhart::RootCountReport hroots;
};

CheckData run_check(const Source& src, unsigned long long budget) {
  CheckData c;
  c.label = src.label;
  if (src.is_family) {
    c.kind = "family";
    c.d = src.family.d;
    c.p = ehrhart::family_ehrhart(src.family);
  } else {
    c.kind = "graph";
    c.d = src.graph.spec.num_vertices - 1;
    c.method = ehrhart::count_graph_auto(src.graph, 0, budget).method;
    c.p = ehrhart::ehrhart_from_counts(
        [&](long n) { return ehrhart::count_graph_auto(src.graph, n, budget).count; }, c.d);
  }
  c.magic = ehrhart::power_to_magic(c.p, c.d);
  c.verdict = ehrhart::is_magic_positive(c.magic);
  c.magic_palindromic = ehrhart::is_palindromic(c.magic);
  c.hstar = ehrhart::power_to_hstar(c.p, c.d);
  c.hstar_integral = true;
  for (const auto& h : c.hstar.h)
    if (!h.is_integer()) c.hstar_integral = false;
  c.hflags = ehrhart::sequence_checks(c.hstar.h);
  c.hroots = ehrhart::real_root_report(Poly(c.hstar.h));
  return c;
}

std::string witnesses_text(const ehrhart::MagicVerdict& v) {
  std::vector<std::string> parts;
  for (const auto& [i, val] : v.negative_witnesses)
    parts.push_back("a[" + std::to_string(i) + "]=" + val.str());
  return parts.empty() ? "none" : join_strings(parts);
}

void emit_check(const CheckData& c, Format fmt, std::ostream& os) {
  const char* bool_str[2] = {"false", "true"};
  if (fmt == Format::json) {
    json j{{"command", "check"},
           {"source", c.label},
           {"kind", c.kind},
           {"dimension", c.d},
           {"power", coeff_strings(c.p.coeffs())},
           {"polynomial", c.p.str()},
           {"magic", form_to_json(c.magic.d, c.magic.a)},
           {"magic_positive", c.verdict.positive},
           {"magic_palindromic", c.magic_palindromic},
           {"hstar", form_to_json(c.hstar.d, c.hstar.h)},
           {"hstar_nonnegative", c.hflags.nonnegative},
           {"hstar_integral", c.hstar_integral},
           {"hstar_palindromic", c.hflags.palindromic},
           {"hstar_log_concave", c.hflags.log_concave},
           {"hstar_unimodal", c.hflags.unimodal},
           {"hstar_real_rooted", c.hroots.real_rooted},
           {"hstar_distinct_real_roots", c.hroots.distinct_real_roots}};
    json w = json::array();
    for (const auto& [i, val] : c.verdict.negative_witnesses)
      w.push_back(json{{"index", i}, {"value", val.str()}});
    j["negative_witnesses"] = w;
    if (c.method) j["count_method"] = ehrhart::to_string(*c.method);
    os << j.dump(2) << "\n";
    return;
  }
  if (fmt == Format::csv) {
    os << "key,value\n";
    auto row = [&os](const std::string& k, const std::string& v) {
      os << k << "," << csv_field(v) << "\n";
    };
    row("source", c.label);
    row("kind", c.kind);
    if (c.method) row("count_method", ehrhart::to_string(*c.method));
    row("dimension", std::to_string(c.d));
    row("power", join_strings(coeff_strings(c.p.coeffs())));
    row("magic", join_strings(coeff_strings(c.magic.a)));
    row("magic_positive", bool_str[c.verdict.positive]);
    row("negative_witnesses", witnesses_text(c.verdict));
    row("magic_palindromic", bool_str[c.magic_palindromic]);
    row("hstar", join_strings(coeff_strings(c.hstar.h)));
    row("hstar_nonnegative", bool_str[c.hflags.nonnegative]);
    row("hstar_integral", bool_str[c.hstar_integral]);
    row("hstar_palindromic", bool_str[c.hflags.palindromic]);
    row("hstar_log_concave", bool_str[c.hflags.log_concave]);
    row("hstar_unimodal", bool_str[c.hflags.unimodal]);
    row("hstar_real_rooted", bool_str[c.hroots.real_rooted]);
    return;
  }
  os << "source: " << c.label << "\n";
  os << "kind: " << c.kind << "\n";
  if (c.method) os << "count_method: " << ehrhart::to_string(*c.method) << "\n";
  os << "dimension: " << c.d << "\n";
  os << "polynomial: " << c.p.str() << "\n";
  os << "power: " << join_strings(coeff_strings(c.p.coeffs())) << "\n";
  os << "magic: " << join_strings(coeff_strings(c.magic.a)) << "\n";
  os << "magic_positive: " << bool_str[c.verdict.positive] << "\n";
  os << "negative_witnesses: " << witnesses_text(c.verdict) << "\n";
  os << "magic_palindromic: " << bool_str[c.magic_palindromic] << "\n";
  os << "hstar: " << join_strings(coeff_strings(c.hstar.h)) << "\n";
  os << "hstar_nonnegative: " << bool_str[c.hflags.nonnegative] << "\n";
  os << "hstar_integral: " << bool_str[c.hstar_integral] << "\n";
  os << "hstar_palindromic: " << bool_str[c.hflags.palindromic] << "\n";
  os << "hstar_log_concave: " << bool_str[c.hflags.log_concave] << "\n";
  os << "hstar_unimodal: " << bool_str[c.hflags.unimodal] << "\n";
  os << "hstar_real_rooted: " << bool_str[c.hroots.real_rooted] << "\n";
}

// ---------------------------------------------------------------------------
// command implementations

int cmd_family(const std::string& name, const std::string& basis, Format fmt) {
  const FamilyId id = ehrhart::parse_family_id(name);
  const Poly p = ehrhart::family_ehrhart(id);
  int d = id.d;
  std::vector<Rational> coeffs;
  if (basis == "power") {
    coeffs = p.coeffs();
    coeffs.resize(static_cast<size_t>(d) + 1);  // pad to ambient degree
  } else if (basis == "magic") {
    coeffs = ehrhart::power_to_magic(p, d).a;
  } else {
    coeffs = ehrhart::power_to_hstar(p, d).h;
  }
  if (fmt == Format::json) {
    json j{{"command", "family"}, {"family", ehrhart::to_string(id)}, {"basis", basis},
           {"d", d},              {"coefficients", coeff_strings(coeffs)}};
    if (basis == "power") j["polynomial"] = p.str();
    std::cout << j.dump(2) << "\n";
  } else if (fmt == Format::csv) {
    std::cout << "index,coefficient\n";
    for (size_t i = 0; i < coeffs.size(); ++i)
      std::cout << i << "," << csv_field(coeffs[i].str()) << "\n";
  } else {
    std::cout << "family: " << ehrhart::to_string(id) << "\n";
    std::cout << "dimension: " << d << "\n";
    std::cout << "basis: " << basis << "\n";
    std::cout << "coefficients: " << join_strings(coeff_strings(coeffs)) << "\n";
    if (basis == "power") std::cout << "polynomial: " << p.str() << "\n";
  }
  return 0;
}

int cmd_check(const std::string& name, const std::string& graph_file, unsigned long long budget,
              Format fmt) {
  const Source src = resolve_check_source(name, graph_file);
  const CheckData c = run_check(src, budget);
  emit_check(c, fmt, std::cout);
  return 0;
}

int cmd_count(const std::string& name, const std::string& graph_file, long n,
              unsigned long long budget, Format fmt) {
  const Source src = resolve_graph_source(name, graph_file);
  const CountReport r = ehrhart::count_graph_auto(src.graph, n, budget);
  if (fmt == Format::json) {
    json j{{"command", "count"},
           {"source", src.label},
           {"n", r.n},
           {"count", r.count.get_str()},
           {"method", ehrhart::to_string(r.method)}};
    std::cout << j.dump(2) << "\n";
  } else if (fmt == Format::csv) {
    std::cout << "source,n,count,method\n";
    std::cout << csv_field(src.label) << "," << r.n << "," << r.count.get_str() << ","
              << ehrhart::to_string(r.method) << "\n";
  } else {
    std::cout << "source: " << src.label << "\n";
    std::cout << "n: " << r.n << "\n";
    std::cout << "count: " << r.count.get_str() << "\n";
    std::cout << "method: " << ehrhart::to_string(r.method) << "\n";
  }
  return 0;
}

int cmd_table(const std::string& kind, int max_m, int max_n, int threads, Format fmt) {
  if (kind != "bipartite") throw std::invalid_argument("table: unknown kind \"" + kind + "\"");
  if (max_m < 2 || max_n < 2) throw std::invalid_argument("table: ranges start at 2");
  const int rows = max_m - 1, cols = max_n - 1;
  const int cells = rows * cols;
  std::function<char(int)> work = [&](int idx) -> char {
    const int m = 2 + idx / cols;
    const int n = 2 + idx % cols;
    const int d = m + n - 1;
    const Poly p =
        ehrhart::ehrhart_from_counts([&](long x) { return ehrhart::count_bipartite_dual(m, n, x); }, d);
    return ehrhart::is_magic_positive(ehrhart::power_to_magic(p, d)).positive ? 1 : 0;
  };
  const auto grid = parallel_map<char>(cells, threads, work, nullptr);
  auto cell = [&](int m, int n) { return grid[static_cast<size_t>((m - 2) * cols + (n - 2))]; };
  if (fmt == Format::json) {
    json cellsj = json::array();
    for (int m = 2; m <= max_m; ++m)
      for (int n = 2; n <= max_n; ++n)
        cellsj.push_back(json{{"m", m}, {"n", n}, {"magic_positive", cell(m, n) != 0}});
    json j{{"command", "table"}, {"kind", kind}, {"max_m", max_m}, {"max_n", max_n},
           {"cells", cellsj}};
    std::cout << j.dump(2) << "\n";
  } else if (fmt == Format::csv) {
    std::cout << "m,n,magic_positive\n";
    for (int m = 2; m <= max_m; ++m)
      for (int n = 2; n <= max_n; ++n)
        std::cout << m << "," << n << "," << (cell(m, n) ? "true" : "false") << "\n";
  } else {
    std::cout << "magic positivity of complete bipartite duals (+ positive, - not)\n";
    std::cout << "m\\n";
    for (int n = 2; n <= max_n; ++n) std::cout << " " << std::setw(2) << n;
    std::cout << "\n";
    for (int m = 2; m <= max_m; ++m) {
      std::cout << std::setw(3) << m;
      for (int n = 2; n <= max_n; ++n) std::cout << "  " << (cell(m, n) ? '+' : '-');
      std::cout << "\n";
    }
  }
  return 0;
}

struct ScanRow {
  int d = 0;
  bool positive = false;
  std::string witnesses;
};

int cmd_scan(const std::string& kind, int max_d, int threads, Format fmt) {
  if (kind != "cycle" && kind != "stasheff")
    throw std::invalid_argument("scan: unknown kind \"" + kind + "\"");
  if (max_d < 2) throw std::invalid_argument("scan: --max-d must be >= 2");
  const bool cycle = (kind == "cycle");
  const int first = 2;
  const int count = max_d - first + 1;
  std::function<ScanRow(int)> work = [&](int idx) -> ScanRow {
    const int d = first + idx;
    const Poly p = cycle ? ehrhart::cycle_dual(d) : ehrhart::stasheff_dual(d);
    const auto verdict = ehrhart::is_magic_positive(ehrhart::power_to_magic(p, d));
    ScanRow row;
    row.d = d;
    row.positive = verdict.positive;
    row.witnesses = verdict.positive ? "" : witnesses_text(verdict);
    return row;
  };
  int positive = 0;
  std::function<void(int, const ScanRow&)> stream = nullptr;
  if (fmt == Format::text) {
    stream = [&](int, const ScanRow& row) {
      std::cout << "d=" << row.d << (row.positive ? " positive" : " not-positive " + row.witnesses)
                << "\n";
    };
  }
  const auto rowsv = parallel_map<ScanRow>(count, threads, work, stream);
  for (const auto& r : rowsv)
    if (r.positive) ++positive;
  if (fmt == Format::json) {
    json rows = json::array();
    for (const auto& r : rowsv) {
      json jr{{"d", r.d}, {"magic_positive", r.positive}};
      if (!r.positive) jr["witnesses"] = r.witnesses;
      rows.push_back(jr);
    }
    json j{{"command", "scan"},       {"kind", kind},
           {"max_d", max_d},          {"results", rows},
           {"positive", positive},    {"all_positive", positive == count}};
    std::cout << j.dump(2) << "\n";
  } else if (fmt == Format::csv) {
    std::cout << "d,magic_positive,witnesses\n";
    for (const auto& r : rowsv)
      std::cout << r.d << "," << (r.positive ? "true" : "false") << "," << csv_field(r.witnesses)
                << "\n";
  } else {
    std::cout << "scan " << kind << " d=" << first << ".." << max_d << ": " << positive << "/"
              << count << " magic positive\n";
  }
  return 0;
}

int cmd_selftest(Format fmt) {
  const auto results = ehrhart::run_selftest();
  int failures = 0;
  if (fmt == Format::json) {
    json rows = json::array();
    for (const auto& r : results) {
      json jr{{"name", r.name}, {"ok", r.ok}};
      if (!r.ok) jr["detail"] = r.detail;
      rows.push_back(jr);
      if (!r.ok) ++failures;
    }
    json j{{"command", "selftest"}, {"results", rows}, {"all_ok", failures == 0}};
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      if (r.ok) {
        std::cout << "ok   " << r.name << "\n";
      } else {
        std::cout << "FAIL " << r.name << ": " << r.detail << "\n";
        ++failures;
      }
    }
    std::cout << (failures == 0 ? "selftest passed" : "selftest FAILED") << " (" << results.size()
              << " checks)\n";
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Ehrhart polynomials of reflexive polytope families: magic/h* basis "
               "conversions, positivity and real-rootedness checks, and independent "
               "lattice-point-counting oracles"};
  app.require_subcommand(1);

  const std::map<std::string, Format> fmt_map{
      {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
  const int default_threads =
      std::max(1u, std::thread::hardware_concurrency());

  std::string family_name, basis = "power";
  Format family_fmt = Format::text;
  auto* family = app.add_subcommand("family", "Print a family polynomial in a chosen basis");
  family->add_option("name", family_name, "family string, e.g. stasheff:5 or cycle:12 (d = dimension)")
      ->required();
  family->add_option("--basis", basis, "coefficient basis")
      ->check(CLI::IsMember({"power", "magic", "hstar"}));
  family->add_option("--format", family_fmt, "output format")
      ->transform(CLI::CheckedTransformer(fmt_map));

  std::string check_name, check_graph;
  unsigned long long check_budget = ehrhart::kDefaultBudget;
  Format check_fmt = Format::text;
  auto* check = app.add_subcommand(
      "check", "Magic positivity, palindromicity and h* properties of a family or graph dual");
  check->add_option("source", check_name,
                    "family string (cycle:d, d = dimension) or graph shortcut "
                    "(k_bipartite:m,n | complete_minus_edge:v | path:v; v = vertices)");
  check->add_option("--graph", check_graph, "graph JSON file {vertices, edges, root}");
  check->add_option("--budget", check_budget, "node cap for the generic counter");
  check->add_option("--format", check_fmt, "output format")
      ->transform(CLI::CheckedTransformer(fmt_map));

  std::string count_name, count_graph;
  long count_n = 0;
  unsigned long long count_budget = ehrhart::kDefaultBudget;
  Format count_fmt = Format::text;
  auto* count = app.add_subcommand("count", "Count lattice points of n * (dual symmetric edge polytope)");
  count->add_option("source", count_name,
                    "graph shortcut (cycle:v | path:v | complete:v | k_bipartite:m,n | "
                    "complete_minus_edge:v; v = vertices)");
  count->add_option("--graph", count_graph, "graph JSON file {vertices, edges, root}");
  count->add_option("-n,--dilation", count_n, "dilation factor")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--budget", count_budget, "node cap for the generic counter");
  count->add_option("--format", count_fmt, "output format")
      ->transform(CLI::CheckedTransformer(fmt_map));

  std::string table_kind = "bipartite";
  int table_max_m = 11, table_max_n = 11, table_threads = default_threads;
  Format table_fmt = Format::text;
  auto* table = app.add_subcommand("table", "Magic positivity grid for complete bipartite duals");
  table->add_option("kind", table_kind, "table kind")->check(CLI::IsMember({"bipartite"}));
  table->add_option("--max-m", table_max_m, "largest m (rows, from 2)");
  table->add_option("--max-n", table_max_n, "largest n (columns, from 2)");
  table->add_option("--threads", table_threads, "worker threads");
  table->add_option("--format", table_fmt, "output format")
      ->transform(CLI::CheckedTransformer(fmt_map));

  std::string scan_kind;
  int scan_max_d = 50, scan_threads = default_threads;
  Format scan_fmt = Format::text;
  auto* scan = app.add_subcommand("scan", "Per-d magic positivity verdicts for a family");
  scan->add_option("kind", scan_kind, "cycle or stasheff")
      ->required()
      ->check(CLI::IsMember({"cycle", "stasheff"}));
  scan->add_option("--max-d", scan_max_d, "largest dimension to scan");
  scan->add_option("--threads", scan_threads, "worker threads");
  scan->add_option("--format", scan_fmt, "output format")
      ->transform(CLI::CheckedTransformer(fmt_map));

  Format selftest_fmt = Format::text;
  auto* selftest = app.add_subcommand("selftest", "Run the cross-oracle consistency suite");
  selftest->add_option("--format", selftest_fmt, "output format")
      ->transform(CLI::CheckedTransformer(fmt_map));

  try {
    app.parse(argc, argv);
    if (family->parsed()) return cmd_family(family_name, basis, family_fmt);
    if (check->parsed()) {
      if (check_name.empty() && check_graph.empty())
        throw std::invalid_argument("check: give a source or --graph file");
      return cmd_check(check_name, check_graph, check_budget, check_fmt);
    }
    if (count->parsed()) {
      if (count_name.empty() && count_graph.empty())
        throw std::invalid_argument("count: give a source or --graph file");
      return cmd_count(count_name, count_graph, count_n, count_budget, count_fmt);
    }
    if (table->parsed()) return cmd_table(table_kind, table_max_m, table_max_n, table_threads, table_fmt);
    if (scan->parsed()) return cmd_scan(scan_kind, scan_max_d, scan_threads, scan_fmt);
    if (selftest->parsed()) return cmd_selftest(selftest_fmt);
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
