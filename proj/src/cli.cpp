#include "tutte/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tutte/cover.hpp"
#include "tutte/engine.hpp"
#include "tutte/oracles.hpp"
#include "tutte/tutte_table.hpp"

namespace tutte::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int parse_int_arg(const std::string& text, const char* what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw UsageError(std::string("bad ") + what + ": " + text);
  return v;
}

// Parsed --algorithm/--split, or nullopt for auto.
std::optional<Algorithm> requested_algorithm(const RunConfig& c) {
  std::optional<Algorithm> a;
  const std::string& s = c.algorithm;
  if (s == "auto") {
  } else if (s == "dense") {
    a = Algorithm::dense();
  } else if (s == "polyspace") {
    a = Algorithm::polyspace();
  } else if (s == "connected") {
    a = Algorithm::connected();
  } else if (s == "recursion") {
    a = Algorithm::recursion();
  } else if (s == "split") {
    if (!c.split) throw UsageError("--algorithm split needs a size (split:s or --split S)");
    a = Algorithm::split(*c.split);
  } else if (s.rfind("split:", 0) == 0) {
    a = Algorithm::split(parse_int_arg(s.substr(6), "split size"));
  } else {
    throw UsageError("unknown algorithm: " + s);
  }
  if (c.split) {
    if (!a) a = Algorithm::split(*c.split);
    if (a->kind != Algorithm::Kind::split || a->split_size != *c.split)
      throw UsageError("--split conflicts with --algorithm " + s);
  }
  return a;
}

int largest_component(const Multigraph& g) {
  int best = 0;
  for (VertexSet c : connected_components(g)) best = std::max(best, set_size(c));
  return best;
}

Algorithm tutte_algorithm(const RunConfig& c, const Multigraph& g, std::ostream& err) {
  const int n = g.vertex_count();
  const int big = largest_component(g);
  const std::uint64_t workers = static_cast<std::uint64_t>(std::max(c.threads, 1));
  auto a = requested_algorithm(c);
  if (!a) {
    a = choose_algorithm(big, c.memory_budget, c.threads);
    err << "algorithm: " << a->name() << '\n';
  }
  if (a->kind == Algorithm::Kind::split && (a->split_size < 0 || a->split_size > n))
    throw UsageError("split size must lie in 0.." + std::to_string(n));
  Algorithm sized = *a;
  if (sized.kind == Algorithm::Kind::split) sized.split_size = std::min(sized.split_size, big);
  if (working_bytes(sized, big) * workers > c.memory_budget)
    throw BudgetError("algorithm " + a->name() + " needs more than the memory budget of " +
                      std::to_string(c.memory_budget) + " bytes");
  return *a;
}

std::uint64_t cover_bytes(CoverMode mode, int n) {
  const std::uint64_t width = static_cast<std::uint64_t>(n) + 1;
  if (mode == CoverMode::polyspace) return width * width * 4 * sizeof(u64);
  return (std::uint64_t{1} << n) * (2 * width + 2 * n + 2) * sizeof(u64);
}

CoverMode cover_mode(const RunConfig& c, int n, std::ostream& err) {
  const std::uint64_t workers = static_cast<std::uint64_t>(std::max(c.threads, 1));
  auto a = requested_algorithm(c);
  CoverMode mode;
  if (!a) {
    mode = cover_bytes(CoverMode::fast, n) * workers <= c.memory_budget ? CoverMode::fast
                                                                        : CoverMode::polyspace;
    err << "algorithm: " << (mode == CoverMode::fast ? "dense" : "polyspace") << '\n';
  } else if (a->kind == Algorithm::Kind::dense) {
    mode = CoverMode::fast;
  } else if (a->kind == Algorithm::Kind::polyspace) {
    mode = CoverMode::polyspace;
  } else {
    throw UsageError("cover supports only --algorithm auto, dense or polyspace");
  }
  if (cover_bytes(mode, n) * workers > c.memory_budget)
    throw BudgetError("cover needs more than the memory budget of " +
                      std::to_string(c.memory_budget) + " bytes");
  return mode;
}

// Name of the oracle that agreed, or empty when none is affordable.
std::string tutte_oracle(const TutteTable& t, const Multigraph& g) {
  try {
    if (oracle::tutte_bruteforce(g) != t)
      throw ConsistencyError("table differs from the subset-expansion oracle");
    return "subset-expansion";
  } catch (const oracle::BudgetExceeded&) {
  }
  try {
    if (oracle::tutte_deletion_contraction(g) != t)
      throw ConsistencyError("table differs from the deletion-contraction oracle");
    return "deletion-contraction";
  } catch (const oracle::BudgetExceeded&) {
  }
  return {};
}

struct CheckedTable {
  TutteTable table;
  ConsistencyReport report;
  std::string oracle;
};

CheckedTable checked_tutte(const RunConfig& c, const Multigraph& g, std::ostream& err) {
  const Algorithm a = tutte_algorithm(c, g, err);
  CheckedTable out{compute_tutte(g, a, c.threads), {}, {}};
  out.report = consistency_check(out.table, g);
  if (c.oracle_check) {
    out.oracle = tutte_oracle(out.table, g);
    if (out.oracle.empty()) err << "oracle check skipped: graph too large\n";
  }
  return out;
}

void require_consistent(const ConsistencyReport& r) {
  if (!r.sum_eq_tau()) throw ConsistencyError("sum of coefficients differs from tau");
  if (!r.eval22_eq_2m()) throw ConsistencyError("T(2,2) differs from 2^m");
}

std::string ok_word(bool ok) { return ok ? "ok" : "FAIL"; }

int cmd_tutte(const RunConfig& c, const Multigraph& g, std::ostream& out, std::ostream& err) {
  const auto ct = checked_tutte(c, g, err);
  const auto& r = ct.report;
  if (c.json) {
    json j;
    j["n"] = ct.table.n;
    j["m"] = ct.table.m;
    j["components"] = ct.table.components;
    json coeffs = json::array();
    for (const auto& [ij, v] : ct.table.coeffs) coeffs.push_back({ij.first, ij.second, v.get_str()});
    j["coefficients"] = std::move(coeffs);
    j["checks"] = {{"sum_eq_tau", r.sum_eq_tau()}, {"eval22_eq_2m", r.eval22_eq_2m()}};
    if (c.oracle_check) j["checks"]["oracle"] = ct.oracle.empty() ? json(nullptr) : json(ct.oracle);
    out << j.dump() << '\n';
  } else {
    for (const auto& [ij, v] : ct.table.coeffs) out << ij.first << ' ' << ij.second << ' ' << v << '\n';
    out << "check sum_eq_tau " << r.coefficient_sum << ' ' << r.tau << ' ' << ok_word(r.sum_eq_tau())
        << '\n';
    out << "check eval22_eq_2m " << r.eval22 << ' ' << r.two_to_m << ' '
        << ok_word(r.eval22_eq_2m()) << '\n';
    if (c.oracle_check)
      out << "check oracle " << (ct.oracle.empty() ? "skipped" : ct.oracle + " ok") << '\n';
  }
  require_consistent(r);
  return ok;
}

int cmd_cover(const RunConfig& c, const Digraph& d, std::ostream& out, std::ostream& err) {
  const CoverMode mode = cover_mode(c, d.vertex_count(), err);
  const CoverTable t = cover_table(d, mode, c.threads);
  std::string oracle_result;
  if (c.oracle_check) {
    try {
      if (oracle::cover_bruteforce(d) != t)
        throw ConsistencyError("cover table differs from the enumeration oracle");
      oracle_result = "enumeration";
    } catch (const oracle::BudgetExceeded&) {
      err << "oracle check skipped: digraph too large\n";
    }
  }
  if (c.json) {
    json j;
    j["n"] = t.n;
    j["m"] = t.m;
    json cells = json::array();
    for (int i = 0; i <= t.n; ++i)
      for (int k = 0; i + k <= t.n; ++k)
        if (t.at(i, k) != 0) cells.push_back({i, k, t.at(i, k).get_str()});
    j["cover"] = std::move(cells);
    if (c.oracle_check) j["oracle"] = oracle_result.empty() ? json(nullptr) : json(oracle_result);
    out << j.dump() << '\n';
  } else {
    for (int i = 0; i <= t.n; ++i)
      for (int k = 0; i + k <= t.n; ++k)
        if (t.at(i, k) != 0) out << i << ' ' << k << ' ' << t.at(i, k) << '\n';
    if (c.oracle_check)
      out << "check oracle " << (oracle_result.empty() ? "skipped" : oracle_result + " ok") << '\n';
  }
  return ok;
}

void emit_scalar(const RunConfig& c, std::ostream& out, const char* key, const std::string& value) {
  if (c.json) {
    json j;
    j[key] = value;
    out << j.dump() << '\n';
  } else {
    out << value << '\n';
  }
}

int cmd_eval(const RunConfig& c, const Multigraph& g, std::ostream& out, std::ostream& err) {
  if (!c.eval) throw UsageError("eval needs --eval X Y");
  const mpq_class x = parse_rational(c.eval->first);
  const mpq_class y = parse_rational(c.eval->second);
  const auto ct = checked_tutte(c, g, err);
  require_consistent(ct.report);
  emit_scalar(c, out, "value", evaluate(ct.table, x, y).get_str());
  return ok;
}

int cmd_chromatic(const RunConfig& c, const Multigraph& g, std::ostream& out, std::ostream& err) {
  const auto ct = checked_tutte(c, g, err);
  require_consistent(ct.report);
  const auto poly = chromatic_polynomial(ct.table);
  if (c.json) {
    json terms = json::array();
    for (std::size_t d = 0; d < poly.size(); ++d)
      if (poly[d] != 0) terms.push_back({d, poly[d].get_str()});
    json j;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["chromatic"] = std::move(terms);
    out << j.dump() << '\n';
  } else {
    for (std::size_t d = 0; d < poly.size(); ++d)
      if (poly[d] != 0) out << d << ' ' << poly[d] << '\n';
  }
  return ok;
}

int cmd_reliability(const RunConfig& c, const Multigraph& g, std::ostream& out, std::ostream& err) {
  if (!c.p) throw UsageError("reliability needs --p P");
  const mpq_class p = parse_rational(*c.p);
  if (p <= 0 || p >= 1) throw UsageError("--p must lie strictly between 0 and 1");
  const auto ct = checked_tutte(c, g, err);
  require_consistent(ct.report);
  emit_scalar(c, out, "reliability", reliability(ct.table, p).get_str());
  return ok;
}

// Z(Q, w) as a polynomial in w: coefficient of w^l is sum_k a[k][l] Q^k,
// multiplied over components.
int cmd_potts(const RunConfig& c, const Multigraph& g, std::ostream& out, std::ostream& err) {
  if (!c.q) throw UsageError("potts needs --q Q");
  const int q = parse_int_arg(*c.q, "--q");
  if (q < 1) throw UsageError("--q must be a positive integer");
  const Algorithm a = tutte_algorithm(c, g, err);
  std::vector<mpz_class> poly{1};
  for (VertexSet comp : connected_components(g)) {
    const Multigraph h = g.induced(comp);
    Algorithm sized = a;
    if (sized.kind == Algorithm::Kind::split)
      sized.split_size = std::min(sized.split_size, h.vertex_count());
    const ZCoefficients z = z_coefficients(h, sized, c.threads);
    std::vector<mpz_class> part(z.m + 1, 0);
    for (int l = 0; l <= z.m; ++l) {
      mpz_class qk = 1;
      for (int k = 0; k <= z.n; ++k, qk *= q) part[l] += z.at(k, l) * qk;
    }
    std::vector<mpz_class> next(poly.size() + part.size() - 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i)
      for (std::size_t j = 0; j < part.size(); ++j) next[i + j] += poly[i] * part[j];
    poly = std::move(next);
  }
  if (c.oracle_check) {
    try {
      const ZCoefficients z = oracle::z_bruteforce(g);
      for (int l = 0; l <= z.m; ++l) {
        mpz_class v = 0, qk = 1;
        for (int k = 0; k <= z.n; ++k, qk *= q) v += z.at(k, l) * qk;
        if (v != poly[l]) throw ConsistencyError("Potts polynomial differs from the subset oracle");
      }
    } catch (const oracle::BudgetExceeded&) {
      err << "oracle check skipped: graph too large\n";
    }
  }
  if (c.json) {
    json terms = json::array();
    for (std::size_t l = 0; l < poly.size(); ++l)
      if (poly[l] != 0) terms.push_back({l, poly[l].get_str()});
    json j;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["q"] = q;
    j["potts"] = std::move(terms);
    out << j.dump() << '\n';
  } else {
    for (std::size_t l = 0; l < poly.size(); ++l)
      if (poly[l] != 0) out << l << ' ' << poly[l] << '\n';
  }
  return ok;
}

int dispatch(const RunConfig& c, std::istream& in, std::ostream& out, std::ostream& err) {
  if (c.threads < 1) throw UsageError("--threads must be at least 1");
  if (c.command == "cover") return cmd_cover(c, parse_digraph(in), out, err);
  if (c.command != "tutte" && c.command != "tau" && c.command != "sigma" && c.command != "eval" &&
      c.command != "chromatic" && c.command != "reliability" && c.command != "potts")
    throw UsageError("unknown command: " + c.command);
  const Multigraph g = parse_graph(in);
  if (c.command == "tutte") return cmd_tutte(c, g, out, err);
  if (c.command == "tau") {
    emit_scalar(c, out, "tau", spanning_tree_count(g).get_str());
    return ok;
  }
  if (c.command == "sigma") {
    emit_scalar(c, out, "sigma", count_connected_sets(g).get_str());
    return ok;
  }
  if (c.command == "eval") return cmd_eval(c, g, out, err);
  if (c.command == "chromatic") return cmd_chromatic(c, g, out, err);
  if (c.command == "reliability") return cmd_reliability(c, g, out, err);
  return cmd_potts(c, g, out, err);
}

}  // namespace

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  // Buffer so that a failing run never leaves partial output behind, except
  // for the tutte check lines which are part of the report.
  std::ostringstream buffer;
  int code = ok;
  try {
    code = dispatch(config, in, buffer, err);
  } catch (const CapacityError& e) {
    err << "capacity exceeded: " << e.what() << '\n';
    return capacity_exceeded;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return parse_error;
  } catch (const BudgetError& e) {
    err << "capacity exceeded: " << e.what() << '\n';
    return capacity_exceeded;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return parse_error;
  } catch (const ConsistencyError& e) {
    out << buffer.str();
    err << "consistency failure: " << e.what() << '\n';
    return consistency_failure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return parse_error;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return consistency_failure;
  }
  out << buffer.str();
  return code;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Exact Tutte and cover polynomials of small multigraphs"};
  app.add_option("command", c.command,
                 "tutte | cover | tau | sigma | eval | chromatic | reliability | potts")
      ->required();
  app.add_option("input", c.input, "edge-list file, or - for standard input");
  app.add_option("--algorithm", c.algorithm,
                 "auto | dense | polyspace | split:s | connected | recursion");
  app.add_flag("--oracle-check", c.oracle_check, "cross-check against a brute-force oracle");
  app.add_flag("--json", c.json, "JSON output");
  app.add_option("--threads", c.threads, "worker threads");
  app.add_option("--memory-budget", c.memory_budget, "bytes available for tables");
  app.add_option("--split", c.split, "split size s, same as --algorithm split:s");
  std::vector<std::string> eval;
  app.add_option("--eval", eval, "evaluation point X Y (rationals)")
      ->expected(2)
      ->allow_extra_args(false);
  app.add_option("--q", c.q, "number of Potts states");
  app.add_option("--p", c.p, "edge survival probability");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return parse_error;
  }
  if (!eval.empty()) c.eval = std::make_pair(eval[0], eval[1]);

  if (c.input == "-") return run(c, std::cin, out, err);
  std::ifstream file(c.input, std::ios::binary);
  if (!file) {
    err << "error: cannot open " << c.input << '\n';
    return parse_error;
  }
  return run(c, file, out, err);
}

}  // namespace tutte::cli
