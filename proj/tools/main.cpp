#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "catalog.hpp"
#include "dormant/edgecount.hpp"
#include "dormant/ehrhart.hpp"
#include "dormant/fusion.hpp"
#include "dormant/hypergeom.hpp"
#include "dormant/semigraph.hpp"
#include "dormant/triples.hpp"
#include "suites.hpp"

namespace {

using dormant::Bigint;
using dormant::PrimeLevel;
using dormant::RadiusClass;
using nlohmann::json;

struct GlobalOpts {
  long long p = 3;
  int level = 1;
  std::string format = "text";
  double tol = dormant::kDefaultTol;
  std::uint64_t seed = dormant::kDefaultSeed;
  std::string cache_dir;
  long long max_q = dormant::kDefaultMaxQ;
};

void add_common(CLI::App* cmd, GlobalOpts& g, bool with_pn = true) {
  if (with_pn) {
    cmd->add_option("--p", g.p, "odd prime p");
    cmd->add_option("--level", g.level, "level N");
  }
  cmd->add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--tol", g.tol, "floating point tolerance");
  cmd->add_option("--seed", g.seed, "seed for the character randomization");
  cmd->add_option("--cache-dir", g.cache_dir, "catalog directory");
  cmd->add_option("--max-q", g.max_q, "budget cap on q = p^N");
}

PrimeLevel make_level(const GlobalOpts& g) {
  const PrimeLevel pp(g.p, g.level);
  if (pp.q > g.max_q) {
    throw dormant::ResourceLimit("q = " + std::to_string(pp.q) +
                                 " exceeds the budget --max-q " +
                                 std::to_string(g.max_q));
  }
  return pp;
}

std::string fmt_double(double x) {
  std::ostringstream out;
  out << std::setprecision(12) << x;
  return out.str();
}

std::string now_utc() {
  const std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

std::vector<RadiusClass> parse_radii(const std::vector<long long>& lambdas,
                                     const PrimeLevel& pp) {
  std::vector<RadiusClass> out;
  for (const long long lambda : lambdas) {
    if (lambda % pp.p == 0) {
      throw dormant::ParameterError(
          "radius " + std::to_string(lambda) + " is not coprime to p");
    }
    out.push_back(dormant::radius_class(lambda, pp));
  }
  return out;
}

std::string render_series(const dormant::TruncatedSeries& s) {
  if (!s.terminated) return "(" + s.reason + ")";
  std::ostringstream out;
  for (size_t k = 0; k < s.coefficients.size(); ++k) {
    const long long c = s.coefficients[k];
    if (c == 0) continue;
    const long long e = s.start_exponent + static_cast<long long>(k);
    if (out.tellp() > 0) out << " + ";
    if (c != 1 || e == 0) out << c;
    if (e == 1) {
      out << "x";
    } else if (e > 1) {
      out << "x^" << e;
    }
  }
  if (out.tellp() == 0) out << "0";
  return out.str();
}

// Character-sum estimate of the total over all radius tuples.
double char_total(const dormant::CharacterTable& table, int genus,
                  int marked) {
  double total = 0.0;
  for (size_t k = 0; k < table.chi.size(); ++k) {
    double row = 0.0;
    for (const double x : table.chi[k]) row += x;
    total += std::pow(table.casimir_values[k], genus - 1) *
             std::pow(row, marked);
  }
  return total;
}

json radii_table_json(const dormant::CountResult& result) {
  json rows = json::array();
  for (const auto& [key, value] : result.per_radius) {
    rows.push_back(json{{"radii", key}, {"count", value.str()}});
  }
  return rows;
}

int cmd_fusion(const GlobalOpts& g) {
  const PrimeLevel pp = make_level(g);
  const dormant::FusionRing ring = dormant::build_fusion_ring(pp);
  const dormant::CharacterTable table =
      dormant::characters(ring, g.tol, g.seed);
  const int d = ring.dim();

  struct Row {
    int i, j, k;
  };
  std::vector<Row> nonzero;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        if (ring.structure_constant(i, j, k)) nonzero.push_back({i, j, k});
      }
    }
  }

  if (g.format == "json") {
    json basis = json::array();
    for (int i = 0; i < d; ++i) {
      basis.push_back(
          json{{"lambda", ring.basis[i].lambda}, {"s", ring.svalues[i]}});
    }
    json constants = json::array();
    for (const Row& r : nonzero) {
      constants.push_back(json{
          {"i", r.i},
          {"j", r.j},
          {"k", r.k},
          {"lambda",
           {ring.basis[r.i].lambda, ring.basis[r.j].lambda,
            ring.basis[r.k].lambda}},
          {"s", {ring.svalues[r.i], ring.svalues[r.j], ring.svalues[r.k]}}});
    }
    json chars = json::array();
    for (size_t k = 0; k < table.chi.size(); ++k) {
      chars.push_back(json{{"casimir", table.casimir_values[k]},
                           {"values", table.chi[k]}});
    }
    const json out{{"p", pp.p},
                   {"level", pp.N},
                   {"dim", d},
                   {"basis", basis},
                   {"nonzero", constants},
                   {"characters",
                    json{{"residual", table.residual}, {"rows", chars}}}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (g.format == "csv") {
    std::cout << "i,j,k,lambda_i,lambda_j,lambda_k,s_i,s_j,s_k\n";
    for (const Row& r : nonzero) {
      std::cout << r.i << "," << r.j << "," << r.k << ","
                << ring.basis[r.i].lambda << "," << ring.basis[r.j].lambda
                << "," << ring.basis[r.k].lambda << "," << ring.svalues[r.i]
                << "," << ring.svalues[r.j] << "," << ring.svalues[r.k]
                << "\n";
    }
    std::cout << "\ncharacter,casimir";
    for (int i = 0; i < d; ++i) std::cout << ",chi_" << i;
    std::cout << "\n";
    for (size_t k = 0; k < table.chi.size(); ++k) {
      std::cout << k << "," << fmt_double(table.casimir_values[k]);
      for (const double x : table.chi[k]) std::cout << "," << fmt_double(x);
      std::cout << "\n";
    }
    return 0;
  }

  std::cout << "fusion ring p=" << pp.p << " level=" << pp.N << " dim=" << d
            << "\n";
  std::cout << "basis (lambda:s):";
  for (int i = 0; i < d; ++i) {
    std::cout << " " << ring.basis[i].lambda << ":" << ring.svalues[i];
  }
  std::cout << "\nnonzero structure constants (" << nonzero.size() << "):\n";
  for (const Row& r : nonzero) {
    std::cout << "  lambda (" << ring.basis[r.i].lambda << ","
              << ring.basis[r.j].lambda << "," << ring.basis[r.k].lambda
              << ")  s (" << ring.svalues[r.i] << "," << ring.svalues[r.j]
              << "," << ring.svalues[r.k] << ")\n";
  }
  std::cout << "characters (residual " << fmt_double(table.residual)
            << "):\n";
  for (size_t k = 0; k < table.chi.size(); ++k) {
    std::cout << "  casimir " << fmt_double(table.casimir_values[k]) << ":";
    for (const double x : table.chi[k]) std::cout << " " << fmt_double(x);
    std::cout << "\n";
  }
  return 0;
}

int cmd_degree(const GlobalOpts& g, int genus, int marked,
               const std::vector<long long>& radii_in, bool all_radii) {
  const PrimeLevel pp = make_level(g);
  const dormant::ClutchingData graph = dormant::standard_graph(genus, marked);
  const dormant::FusionRing ring = dormant::build_fusion_ring(pp);
  const dormant::CharacterTable table =
      dormant::characters(ring, g.tol, g.seed);

  std::optional<std::vector<RadiusClass>> radii;
  if (!radii_in.empty()) {
    if (static_cast<int>(radii_in.size()) != marked) {
      throw dormant::ParameterError(
          "expected " + std::to_string(marked) + " radii, got " +
          std::to_string(radii_in.size()));
    }
    radii = parse_radii(radii_in, pp);
  }

  const dormant::CountResult result =
      dormant::count_numberings(graph, pp, radii, all_radii);
  const double estimate =
      radii ? dormant::degree_char_sum(table, ring, genus, *radii)
            : char_total(table, genus, marked);

  if (!g.cache_dir.empty()) {
    dormant::cli::CatalogEntry entry;
    entry.p = pp.p;
    entry.level = pp.N;
    entry.genus = genus;
    entry.marked = marked;
    entry.radii = radii_in;
    entry.count = result.total.str();
    entry.method = "dp";
    entry.timestamp = now_utc();
    entry.version = dormant::cli::kLibraryVersion;
    dormant::cli::append_entry(g.cache_dir, entry);
  }

  if (g.format == "json") {
    json out{{"p", pp.p},
             {"level", pp.N},
             {"genus", genus},
             {"marked", marked},
             {"degree", result.total.str()},
             {"char_estimate", estimate}};
    if (radii) out["radii"] = radii_in;
    if (all_radii) out["by_radii"] = radii_table_json(result);
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (g.format == "csv") {
    if (all_radii) {
      std::cout << "radii,count\n";
      for (const auto& [key, value] : result.per_radius) {
        std::cout << "\"";
        for (size_t i = 0; i < key.size(); ++i) {
          std::cout << (i ? " " : "") << key[i];
        }
        std::cout << "\"," << value.str() << "\n";
      }
    }
    std::cout << "degree,char_estimate\n"
              << result.total.str() << "," << fmt_double(estimate) << "\n";
    return 0;
  }

  if (all_radii) {
    for (const auto& [key, value] : result.per_radius) {
      std::cout << "radii";
      for (const long long lambda : key) std::cout << " " << lambda;
      std::cout << "  count " << value.str() << "\n";
    }
  }
  std::cout << "degree " << result.total.str() << "\n";
  std::cout << "char estimate " << fmt_double(estimate) << "\n";
  return 0;
}

int cmd_enumerate(const GlobalOpts& g, const std::string& graph_file,
                  int genus, int marked, const std::vector<long long>& radii_in,
                  bool count_only) {
  const PrimeLevel pp = make_level(g);
  dormant::ClutchingData graph;
  if (!graph_file.empty()) {
    std::ifstream in(graph_file);
    if (!in) {
      throw dormant::ParameterError("cannot open graph file: " + graph_file);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    graph = dormant::clutching_from_json(buffer.str());
  } else {
    graph = dormant::standard_graph(genus, marked);
  }
  const dormant::GraphType type = dormant::graph_type(graph.graph);

  std::optional<std::vector<RadiusClass>> radii;
  if (!radii_in.empty()) radii = parse_radii(radii_in, pp);

  const dormant::CountResult result =
      dormant::count_numberings(graph, pp, radii, true);
  std::vector<dormant::EdgeNumbering> numberings;
  if (!count_only) numberings = dormant::enumerate_numberings(graph, pp, radii);

  if (g.format == "json") {
    json out{{"p", pp.p},
             {"level", pp.N},
             {"genus", type.genus},
             {"marked", type.marked},
             {"count", result.total.str()},
             {"by_radii", radii_table_json(result)}};
    if (!count_only) {
      json rows = json::array();
      for (const auto& numbering : numberings) rows.push_back(numbering.values);
      out["numberings"] = rows;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (g.format == "csv") {
    if (count_only) {
      std::cout << "radii,count\n";
      for (const auto& [key, value] : result.per_radius) {
        std::cout << "\"";
        for (size_t i = 0; i < key.size(); ++i) {
          std::cout << (i ? " " : "") << key[i];
        }
        std::cout << "\"," << value.str() << "\n";
      }
      std::cout << "total," << result.total.str() << "\n";
    } else {
      const size_t ne = graph.graph.edges.size();
      for (size_t e = 0; e < ne; ++e) std::cout << (e ? "," : "") << "edge_" << e;
      std::cout << "\n";
      for (const auto& numbering : numberings) {
        for (size_t e = 0; e < numbering.values.size(); ++e) {
          std::cout << (e ? "," : "") << numbering.values[e];
        }
        std::cout << "\n";
      }
    }
    return 0;
  }

  std::cout << "type (" << type.genus << "," << type.marked << ")  edges "
            << graph.graph.edges.size() << "\n";
  if (!count_only) {
    for (const auto& numbering : numberings) {
      for (size_t e = 0; e < numbering.values.size(); ++e) {
        std::cout << (e ? " " : "") << numbering.values[e];
      }
      std::cout << "\n";
    }
  }
  for (const auto& [key, value] : result.per_radius) {
    if (key.empty()) continue;
    std::cout << "radii";
    for (const long long lambda : key) std::cout << " " << lambda;
    std::cout << "  count " << value.str() << "\n";
  }
  std::cout << "count " << result.total.str() << "\n";
  return 0;
}

int cmd_verify(const GlobalOpts& g, const std::string& suite,
               const std::vector<long long>& p_list, int level_max) {
  dormant::cli::SuiteConfig cfg;
  if (!p_list.empty()) cfg.p_list = p_list;
  cfg.level_max = level_max;
  cfg.max_q = g.max_q;
  cfg.tol = g.tol;
  cfg.seed = g.seed;
  cfg.cache_dir = g.cache_dir;
  for (const long long p : cfg.p_list) {
    PrimeLevel check(p, 1);
    (void)check;
  }

  const auto checks = dormant::cli::run_suite(suite, cfg);
  int failed = 0;
  for (const auto& check : checks) failed += check.pass ? 0 : 1;

  if (g.format == "json") {
    json rows = json::array();
    for (const auto& check : checks) {
      rows.push_back(json{{"name", check.name},
                          {"params", check.params},
                          {"expected", check.expected},
                          {"actual", check.actual},
                          {"pass", check.pass}});
    }
    const json out{{"suite", suite},
                   {"version", dormant::cli::kLibraryVersion},
                   {"checks", rows}};
    std::cout << out.dump(2) << "\n";
  } else if (g.format == "csv") {
    std::cout << "name,params,expected,actual,pass\n";
    for (const auto& check : checks) {
      std::cout << "\"" << check.name << "\",\"" << check.params << "\",\""
                << check.expected << "\",\"" << check.actual << "\","
                << (check.pass ? "true" : "false") << "\n";
    }
  } else {
    for (const auto& check : checks) {
      std::cout << (check.pass ? "[PASS] " : "[FAIL] ") << check.name;
      if (!check.params.empty()) std::cout << " (" << check.params << ")";
      if (!check.pass) {
        std::cout << ": expected " << check.expected << ", got "
                  << check.actual;
      }
      std::cout << "\n";
    }
    std::cout << checks.size() - failed << "/" << checks.size()
              << " checks passed\n";
  }
  return failed == 0 ? 0 : 1;
}

int cmd_hypergeom(const GlobalOpts& g, const std::vector<long long>& abc) {
  const PrimeLevel pp = make_level(g);
  if (abc.size() != 3) {
    throw dormant::ParameterError("--abc expects three comma-separated values");
  }
  for (const long long x : abc) {
    if (x < 1 || x > pp.q) {
      throw dormant::ParameterError(
          "parameter " + std::to_string(x) + " out of range [1, " +
          std::to_string(pp.q) + "]");
    }
  }
  const dormant::HGOperator op(abc[0], abc[1], abc[2], pp);
  const bool full = dormant::has_full_root_functions(op);
  const auto series0 = dormant::truncated_2F1(op.a, op.b, op.c, pp);
  const auto series1 = dormant::truncated_2F1(op.a - op.c + 1, op.b - op.c + 1,
                                              2 - op.c, pp);
  const auto diffs = dormant::exponent_differences(op);

  json radii_json = nullptr;
  std::string radii_text = "undefined (a difference is divisible by p)";
  try {
    const auto radii = dormant::hg_radii(op);
    radii_json = json::array({radii[0].lambda, radii[1].lambda,
                              radii[2].lambda});
    radii_text = std::to_string(radii[0].lambda) + " " +
                 std::to_string(radii[1].lambda) + " " +
                 std::to_string(radii[2].lambda);
  } catch (const dormant::NotInvertible&) {
  }

  if (g.format == "json") {
    const auto series_json = [](const dormant::TruncatedSeries& s) {
      json out{{"start_exponent", s.start_exponent},
               {"terminated", s.terminated},
               {"coefficients", s.coefficients}};
      if (!s.terminated) out["reason"] = s.reason;
      return out;
    };
    const json out{{"a", op.a},
                   {"b", op.b},
                   {"c", op.c},
                   {"full", full},
                   {"series0", series_json(series0)},
                   {"series1", series_json(series1)},
                   {"exponent_differences",
                    {diffs[0].rep, diffs[1].rep, diffs[2].rep}},
                   {"radii", radii_json}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << "operator (a,b,c) = (" << op.a << "," << op.b << "," << op.c
            << ")  p=" << pp.p << " level=" << pp.N << "\n";
  std::cout << "full=" << (full ? "true" : "false") << "\n";
  std::cout << "series at 0:   " << render_series(series0) << "\n";
  std::cout << "series at 1-c: " << render_series(series1) << "\n";
  std::cout << "exponent differences: " << diffs[0].rep << " " << diffs[1].rep
            << " " << diffs[2].rep << "\n";
  std::cout << "radii: " << radii_text << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact counts of dormant rank-two opers and their fusion ring"};
  app.require_subcommand(1);

  GlobalOpts g;
  if (const char* env = std::getenv("DORMANT_CACHE_DIR")) g.cache_dir = env;

  int genus = 0, marked = 0;
  std::vector<long long> radii;
  bool all_radii = false;
  std::string graph_file;
  bool count_only = false;
  std::string suite = "all";
  std::vector<long long> p_list;
  int level_max = 2;
  std::vector<long long> abc;

  CLI::App* fusion = app.add_subcommand("fusion", "fusion table and characters");
  add_common(fusion, g);

  CLI::App* degree = app.add_subcommand("degree", "moduli space degree");
  add_common(degree, g);
  degree->add_option("--genus", genus, "genus")->required();
  degree->add_option("--marked", marked, "number of marked points")
      ->required();
  degree->add_option("--radii", radii, "radii as lambda values")
      ->delimiter(',');
  degree->add_flag("--all-radii", all_radii, "print the per-radius table");

  CLI::App* enumerate = app.add_subcommand("enumerate", "edge numberings");
  add_common(enumerate, g);
  enumerate->add_option("--graph", graph_file, "clutching data JSON file");
  enumerate->add_option("--genus", genus, "genus of the standard graph");
  enumerate->add_option("--marked", marked, "marked points");
  enumerate->add_option("--radii", radii, "radii as lambda values")
      ->delimiter(',');
  enumerate->add_flag("--count-only", count_only, "skip the full listing");

  CLI::App* verify = app.add_subcommand("verify", "verification suites");
  add_common(verify, g, false);
  verify->add_option("--suite", suite, "suite name")
      ->check(CLI::IsMember(dormant::cli::suite_names()));
  verify->add_option("--p-list", p_list, "primes for the grid")
      ->delimiter(',');
  verify->add_option("--level-max", level_max, "largest level in the grid");

  CLI::App* hypergeom =
      app.add_subcommand("hypergeom", "hypergeometric membership report");
  add_common(hypergeom, g);
  hypergeom->add_option("--abc", abc, "parameters a,b,c")
      ->delimiter(',')
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (fusion->parsed()) return cmd_fusion(g);
    if (degree->parsed()) return cmd_degree(g, genus, marked, radii, all_radii);
    if (enumerate->parsed()) {
      return cmd_enumerate(g, graph_file, genus, marked, radii, count_only);
    }
    if (verify->parsed()) return cmd_verify(g, suite, p_list, level_max);
    if (hypergeom->parsed()) return cmd_hypergeom(g, abc);
  } catch (const dormant::ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const dormant::ResourceLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
