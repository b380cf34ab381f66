#include "suites.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "catalog.hpp"
#include "dormant/edgecount.hpp"
#include "dormant/ehrhart.hpp"
#include "dormant/fusion.hpp"
#include "dormant/hypergeom.hpp"
#include "dormant/semigraph.hpp"
#include "dormant/triples.hpp"

namespace dormant::cli {

namespace {

std::string param_tag(const PrimeLevel& pp) {
  return "p=" + std::to_string(pp.p) + ",N=" + std::to_string(pp.N);
}

CheckResult mk(const std::string& name, const std::string& params,
               const std::string& expected, const std::string& actual) {
  return CheckResult{name, params, expected, actual, expected == actual};
}

CheckResult mk_count(const std::string& name, const std::string& params,
                     const Bigint& expected, const Bigint& actual) {
  return mk(name, params, expected.str(), actual.str());
}

std::vector<PrimeLevel> grid(const SuiteConfig& cfg) {
  std::vector<PrimeLevel> out;
  for (const long long p : cfg.p_list) {
    for (int N = 1; N <= cfg.level_max; ++N) {
      const PrimeLevel pp(p, N);
      if (pp.q <= cfg.max_q) out.push_back(pp);
    }
  }
  return out;
}

// (p^2 - 1) p^N (p^2 + 2)^{N-1} / (8 3^N), always an integer.
Bigint closed_form_03(const PrimeLevel& pp) {
  Bigint num = Bigint(pp.p) * pp.p - 1;
  num *= ipow(Bigint(pp.p), pp.N);
  num *= ipow(Bigint(pp.p) * pp.p + 2, pp.N - 1);
  const Bigint den = 8 * ipow(Bigint(3), pp.N);
  if (num % den != 0) throw Error("closed form is not integral");
  return num / den;
}

Bigint dagger_b_formula(const PrimeLevel& pp) {
  return closed_form_03(pp) * 8;
}

Bigint total_count(int genus, int marked, const PrimeLevel& pp) {
  return count_numberings(standard_graph(genus, marked), pp).total;
}

std::vector<CheckResult> suite_closedform(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  for (const PrimeLevel& pp : grid(cfg)) {
    const Bigint form = closed_form_03(pp);
    out.push_back(mk_count("deg(0,3) closed form", param_tag(pp), form,
                           total_count(0, 3, pp)));
    out.push_back(mk_count("deg(2,0) closed form", param_tag(pp), form,
                           total_count(2, 0, pp)));
  }
  for (const long long p : cfg.p_list) {
    for (int N = 1; N <= std::min(cfg.level_max, 2); ++N) {
      if (ipow(Bigint(p), N + 1) > cfg.max_q) continue;
      const Bigint lower = total_count(2, 0, PrimeLevel(p, N));
      const Bigint upper = total_count(2, 0, PrimeLevel(p, N + 1));
      out.push_back(mk_count(
          "level ratio (p^3+2p)/3",
          "p=" + std::to_string(p) + ",N=" + std::to_string(N) + "->" +
              std::to_string(N + 1),
          lower * (Bigint(p) * p * p + 2 * p), upper * 3));
    }
  }
  return out;
}

std::vector<CheckResult> suite_golden(const SuiteConfig& cfg) {
  (void)cfg;
  const std::vector<ExponentTriple> expected = {
      {0, 0, 0}, {0, 2, 2}, {0, 3, 3}, {2, 0, 2}, {2, 2, 0}, {2, 2, 2},
      {2, 2, 3}, {2, 3, 2}, {3, 0, 3}, {3, 2, 2}, {3, 3, 0}};
  const auto actual = enumerate_dagger_C(PrimeLevel(3, 2));
  std::ostringstream want, got;
  for (const auto& t : expected) {
    want << "(" << t.s1 << "," << t.s2 << "," << t.s3 << ")";
  }
  for (const auto& t : actual) {
    got << "(" << t.s1 << "," << t.s2 << "," << t.s3 << ")";
  }
  return {mk("golden balanced triples", "p=3,N=2", want.str(), got.str())};
}

std::vector<CheckResult> suite_daggerb(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  for (const PrimeLevel& pp : grid(cfg)) {
    const auto brute = enumerate_dagger_B_bruteforce(pp, cfg.max_q);
    out.push_back(mk_count("dagger-B cardinality", param_tag(pp),
                           dagger_b_formula(pp), Bigint(brute.size())));

    const auto built = enumerate_dagger_B(pp, cfg.max_q);
    out.push_back(mk("digitwise construction matches brute force",
                     param_tag(pp), "equal",
                     built == brute ? "equal" : "different"));

    const auto index = build_dagger_c_index(pp, cfg.max_q);
    std::map<ExponentTriple, long long> fibers;
    for (const ParamTriple& t : brute) ++fibers[bc_map(t, pp, index)];
    bool eight = fibers.size() * 8 == brute.size();
    for (const auto& [key, size] : fibers) eight = eight && size == 8;
    out.push_back(mk("all fibers have eight elements", param_tag(pp), "yes",
                     eight ? "yes" : "no"));
  }
  return out;
}

std::vector<CheckResult> suite_smallforms(const SuiteConfig& cfg) {
  (void)cfg;
  std::vector<CheckResult> out;
  const PrimeLevel pp(3, 2);
  const auto pow_ll = [](long long b, int e) { return ipow(Bigint(b), e); };

  for (int g = 2; g <= 6; ++g) {
    const Bigint form = pow_ll(2, g - 1) + pow_ll(3, g - 1) + pow_ll(6, g - 1);
    out.push_back(mk_count("deg(g,0) = 2^{g-1}+3^{g-1}+6^{g-1}",
                           "g=" + std::to_string(g), form,
                           total_count(g, 0, pp)));
  }
  for (int m = 3; m <= 8; ++m) {
    const Bigint form = (1 + 2 * pow_ll(4, m - 1)) / 3;
    out.push_back(mk_count("deg(0,m) = (1+2*4^{m-1})/3",
                           "m=" + std::to_string(m), form,
                           total_count(0, m, pp)));
  }
  for (int g = 1; g <= 6; ++g) {
    for (int m = 1; m <= 7; ++m) {
      const Bigint form = pow_ll(3, g - 1) + pow_ll(6, g - 1) * pow_ll(4, m);
      out.push_back(mk_count("deg(g,m) = 3^{g-1}+6^{g-1}*4^m",
                             "g=" + std::to_string(g) + ",m=" +
                                 std::to_string(m),
                             form, total_count(g, m, pp)));
    }
  }
  return out;
}

std::vector<CheckResult> suite_hypergeom(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  for (const PrimeLevel& pp : grid(cfg)) {
    long long mismatches = 0;
    for (long long a = 1; a <= pp.q; ++a) {
      for (long long b = 1; b <= pp.q; ++b) {
        for (long long c = 1; c <= pp.q; ++c) {
          const bool full = has_full_root_functions(HGOperator(a, b, c, pp));
          if (full != in_dagger_B(ParamTriple{a, b, c}, pp)) ++mismatches;
        }
      }
    }
    out.push_back(mk("oracle matches dagger-B on the full cube",
                     param_tag(pp), "0 mismatches",
                     std::to_string(mismatches) + " mismatches"));
  }
  return out;
}

std::vector<CheckResult> suite_tqft(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  for (const PrimeLevel& pp : grid(cfg)) {
    const FusionRing ring = build_fusion_ring(pp);
    const TQFTReport report = tqft_checks(ring, 20, cfg.seed);
    std::string detail = "all " + std::to_string(report.checks_run) + " pass";
    if (!report.all_pass()) {
      detail = report.failures.front() + " (+" +
               std::to_string(report.failures.size() - 1) + " more)";
    }
    out.push_back(mk("tqft identities", param_tag(pp),
                     "all " + std::to_string(report.checks_run) + " pass",
                     detail));

    const std::vector<std::pair<int, int>> types = {
        {0, 3}, {0, 4}, {0, 5}, {1, 1}, {1, 2}, {1, 3},
        {2, 0}, {2, 1}, {2, 2}, {3, 0}};
    int failures = 0;
    for (const auto& [g, r] : types) {
      std::vector<RadiusClass> radii;
      for (int i = 0; i < r; ++i) radii.push_back(ring.basis[i % ring.dim()]);
      if (!forgetting_tails_check(ring, g, radii)) ++failures;
    }
    out.push_back(mk("forgetting tails on 10 types", param_tag(pp),
                     "0 failures", std::to_string(failures) + " failures"));
  }
  return out;
}

std::vector<CheckResult> suite_graphs(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  const std::vector<std::pair<int, int>> types = {{2, 0}, {0, 4}, {1, 2},
                                                  {3, 0}};
  for (const PrimeLevel& pp : grid(cfg)) {
    for (const auto& [g, r] : types) {
      out.push_back(mk("standard vs alternative graph",
                       param_tag(pp) + ",g=" + std::to_string(g) + ",r=" +
                           std::to_string(r),
                       "agree", independence_check(g, r, pp) ? "agree"
                                                             : "disagree"));
    }
  }
  return out;
}

std::vector<std::vector<RadiusClass>> radius_tuples(const FusionRing& ring,
                                                    int r) {
  std::vector<std::vector<RadiusClass>> out{{}};
  for (int i = 0; i < r; ++i) {
    std::vector<std::vector<RadiusClass>> next;
    for (const auto& t : out) {
      for (const RadiusClass& rho : ring.basis) {
        auto u = t;
        u.push_back(rho);
        next.push_back(std::move(u));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<CheckResult> suite_characters(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  for (const PrimeLevel& pp : grid(cfg)) {
    const FusionRing ring = build_fusion_ring(pp);
    const CharacterTable table = characters(ring, cfg.tol, cfg.seed);
    for (int g = 0; g <= 4; ++g) {
      for (int r = 0; r <= 2; ++r) {
        if (2 * g - 2 + r <= 0) continue;
        const CountResult exact = count_numberings(
            standard_graph(g, r), pp, std::nullopt, true);
        bool ok = true;
        for (const auto& radii : radius_tuples(ring, r)) {
          std::vector<long long> key;
          for (const RadiusClass& rho : radii) key.push_back(rho.lambda);
          const auto it = exact.per_radius.find(key);
          const Bigint want = it == exact.per_radius.end() ? Bigint(0)
                                                           : it->second;
          const double sum = degree_char_sum(table, ring, g, radii);
          const double gap = std::abs(sum - want.convert_to<double>());
          ok = ok && gap <= cfg.tol * (1.0 + want.convert_to<double>());
        }
        out.push_back(mk("character sums match exact degrees",
                         param_tag(pp) + ",g=" + std::to_string(g) + ",r=" +
                             std::to_string(r),
                         "all gaps within tolerance",
                         ok ? "all gaps within tolerance"
                            : "gap beyond tolerance"));
      }
    }
  }
  return out;
}

std::vector<CheckResult> suite_verlinde(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  for (const long long p : cfg.p_list) {
    const PrimeLevel pp(p, 1);
    for (int g = 0; g <= 4; ++g) {
      for (int r = 0; r <= 3; ++r) {
        if (2 * g - 2 + r <= 0) continue;
        const Bigint exact = total_count(g, r, pp);
        const double trig = verlinde_N1(p, g, r);
        const double ex = exact.convert_to<double>();
        const bool ok = std::abs(trig - ex) <= cfg.tol * (1.0 + std::abs(ex));
        out.push_back(mk("trigonometric total at level one",
                         "p=" + std::to_string(p) + ",g=" + std::to_string(g) +
                             ",r=" + std::to_string(r),
                         "match", ok ? "match" : "off"));
      }
    }
  }
  return out;
}

std::vector<CheckResult> suite_ehrhart(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  for (const PrimeLevel& pp : grid(cfg)) {
    out.push_back(mk_count(
        "lattice count of balanced triples", param_tag(pp),
        Bigint(enumerate_dagger_C(pp, cfg.max_q).size()),
        dagger_C_via_lattice(pp)));
    for (const auto& [g, r] :
         std::vector<std::pair<int, int>>{{0, 3}, {1, 1}}) {
      const ClutchingData c = standard_graph(g, r);
      out.push_back(mk_count("lattice count matches edge-count DP",
                             param_tag(pp) + ",g=" + std::to_string(g) +
                                 ",r=" + std::to_string(r),
                             count_numberings(c, pp).total,
                             edge_count_via_lattice(c, pp)));
    }
  }
  for (int N = 1; N <= cfg.level_max; ++N) {
    std::vector<long long> primes;
    for (const long long p : cfg.p_list) {
      if (ipow(Bigint(p), N) <= cfg.max_q) primes.push_back(p);
    }
    if (primes.empty()) continue;
    const CountingFitReport report = verify_thm5(0, 3, primes, N);
    bool rows_ok = true;
    for (const auto& row : report.rows) rows_ok = rows_ok && row.match;
    std::ostringstream actual;
    actual << "degree " << report.counting_function.degree() << ", "
           << (report.period_even ? "even" : "odd") << " period, primes "
           << (rows_ok ? "match" : "mismatch");
    std::ostringstream expected;
    expected << "degree " << report.expected_degree
             << ", even period, primes match";
    out.push_back(mk("quasi-polynomial for (0,3)", "N=" + std::to_string(N),
                     expected.str(), actual.str()));
  }
  return out;
}

std::vector<CheckResult> suite_diffop(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  out.push_back(mk_count("second-order operators at genus two", "p=3,N=2",
                         Bigint(891), diff_op_count(2, PrimeLevel(3, 2))));
  for (const PrimeLevel& pp : grid(cfg)) {
    for (int g = 2; g <= 3; ++g) {
      const Bigint scaled =
          ipow(Bigint(pp.p), g * pp.N) * total_count(g, 0, pp);
      out.push_back(mk_count("p^{gN} scaling",
                             param_tag(pp) + ",g=" + std::to_string(g), scaled,
                             diff_op_count(g, pp)));
    }
  }
  return out;
}

std::vector<CheckResult> suite_catalog(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  if (cfg.cache_dir.empty()) {
    out.push_back(
        mk("catalog", "", "nothing stored without a cache directory",
           "nothing stored without a cache directory"));
    return out;
  }
  const Catalog cat = load_catalog(cfg.cache_dir);
  out.push_back(mk("line checksums", cat.path, "intact",
                   cat.corrupted ? "rebuilt after corruption" : "intact"));
  for (const CatalogEntry& e : cat.entries) {
    const PrimeLevel pp(e.p, e.level);
    std::optional<std::vector<RadiusClass>> radii;
    if (!e.radii.empty()) {
      radii.emplace();
      for (const long long lambda : e.radii) {
        radii->push_back(radius_class(lambda, pp));
      }
    }
    const Bigint again =
        count_numberings(standard_graph(e.genus, e.marked), pp, radii).total;
    out.push_back(mk("stored degree recomputes bit-exactly",
                     param_tag(pp) + ",g=" + std::to_string(e.genus) + ",r=" +
                         std::to_string(e.marked),
                     e.count, again.str()));
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "closedform", "golden",     "daggerb", "smallforms", "hypergeom",
      "tqft",       "graphs",     "characters", "verlinde", "ehrhart",
      "diffop",     "catalog",    "all"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& name,
                                   const SuiteConfig& cfg) {
  if (name == "closedform") return suite_closedform(cfg);
  if (name == "golden") return suite_golden(cfg);
  if (name == "daggerb") return suite_daggerb(cfg);
  if (name == "smallforms") return suite_smallforms(cfg);
  if (name == "hypergeom") return suite_hypergeom(cfg);
  if (name == "tqft") return suite_tqft(cfg);
  if (name == "graphs") return suite_graphs(cfg);
  if (name == "characters") return suite_characters(cfg);
  if (name == "verlinde") return suite_verlinde(cfg);
  if (name == "ehrhart") return suite_ehrhart(cfg);
  if (name == "diffop") return suite_diffop(cfg);
  if (name == "catalog") return suite_catalog(cfg);
  if (name == "all") {
    std::vector<CheckResult> out;
    for (const std::string& sub : suite_names()) {
      if (sub == "all") continue;
      auto rows = run_suite(sub, cfg);
      out.insert(out.end(), rows.begin(), rows.end());
    }
    return out;
  }
  throw ParameterError("unknown suite: " + name);
}

}  // namespace dormant::cli
