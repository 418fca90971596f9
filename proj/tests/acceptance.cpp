// Acceptance suite: runs the project's acceptance criteria end to end
// and prints one PASS/FAIL line per criterion.
//
//   acceptance <path-to-cli> <data-dir>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sciwealth/cohorts.hpp"
#include "sciwealth/indicators.hpp"
#include "sciwealth/ingest.hpp"
#include "sciwealth/stats.hpp"
#include "support/generators.hpp"
#include "support/naive_indicators.hpp"
#include "support/subprocess.hpp"

using namespace sciwealth;

namespace {

struct Checker {
  int failures = 0;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      ++failures;
      notes.push_back(what);
    }
  }
  void expect_near(double actual, double expected, double tol, const std::string& what) {
    if (!(std::abs(actual - expected) <= tol)) {
      ++failures;
      std::ostringstream msg;
      msg << what << ": got " << actual << ", want " << expected << " +/- " << tol;
      notes.push_back(msg.str());
    }
  }
};

int g_failed_criteria = 0;

void criterion(int number, const std::string& title, const std::function<void(Checker&)>& body) {
  Checker check;
  try {
    body(check);
  } catch (const std::exception& e) {
    check.failures++;
    check.notes.push_back(std::string("exception: ") + e.what());
  }
  if (check.failures == 0) {
    std::cout << "[PASS] criterion " << number << ": " << title << "\n";
  } else {
    ++g_failed_criteria;
    std::cout << "[FAIL] criterion " << number << ": " << title << "\n";
    for (const auto& note : check.notes) {
      std::cout << "       " << note << "\n";
    }
  }
}

double rel_diff(double a, double b) {
  if (a == b) return 0.0;
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

std::string g_cli;
std::string g_data_dir;

int run_cli_in(const std::string& args) {
  const std::string command = g_cli + " " + args + " >/dev/null 2>/dev/null";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <path-to-cli> <data-dir>\n";
    return 2;
  }
  g_cli = argv[1];
  g_data_dir = argv[2];

  criterion(1, "closed-form reference values for impact and exergy", [](Checker& c) {
    c.expect_near(impact(74852741, 930), 80486.82, 0.01, "impact for N=930");
    c.expect_near(exergy(74852741, 930), 6.02e12, 0.005 * 6.02e12, "exergy for N=930");
    c.expect_near(impact(190531311, 4447), 42844.91, 0.01, "impact for N=4447");
    c.expect_near(exergy(190531311, 4447), 8.16e12, 0.005 * 8.16e12, "exergy for N=4447");
  });

  criterion(2, "eta and percentage-of-world ratio consistency", [](Checker& c) {
    c.expect_near(eta(6.02e12, 3.02e13), 0.200, 0.002, "eta from rounded USA X and E");
    c.expect_near(eta(8.16e12, 5.14e13), 0.159, 0.002, "eta from rounded world X and E");
    c.expect_near(share_of_world(930.0, 4447.0), 20.9, 0.1, "institution share");
    c.expect_near(share_of_world(74852741.0, 190531311.0), 39.3, 0.1, "citation share");
    c.expect_near(share_of_world(exergy(74852741, 930), exergy(190531311, 4447)), 73.8, 0.1,
                  "exergy share");
    c.expect_near(share_of_world(3.02e13, 5.14e13), 58.7, 0.2, "energy share (rounded inputs)");
  });

  criterion(3, "shipped cohort config: sizes 12/25/18, union 52, overlap {BR,ES,PT}",
            [](Checker& c) {
    std::ifstream in(g_data_dir + "/cohorts.json");
    c.expect(in.good(), "cannot open " + g_data_dir + "/cohorts.json");
    if (!in.good()) return;
    const auto cohorts = load_cohorts(in);
    c.expect(cohorts.size() == 3, "expected 3 cohorts");
    if (cohorts.size() != 3) return;
    c.expect(cohorts[0].members.size() == 12, "first cohort must have 12 members");
    c.expect(cohorts[1].members.size() == 25, "second cohort must have 25 members");
    c.expect(cohorts[2].members.size() == 18, "third cohort must have 18 members");
    c.expect(cohort_union(cohorts).size() == 52, "union must cover 52 distinct countries");

    auto overlap = [](const Cohort& a, const Cohort& b) {
      std::set<std::string> in_a(a.members.begin(), a.members.end());
      std::set<std::string> shared;
      for (const auto& code : b.members) {
        if (in_a.contains(code)) shared.insert(code);
      }
      return shared;
    };
    c.expect(overlap(cohorts[0], cohorts[2]) == std::set<std::string>{"BR", "ES", "PT"},
             "first/third overlap must be exactly {BR, ES, PT}");
    c.expect(overlap(cohorts[0], cohorts[1]).empty(), "first/second overlap must be empty");
    c.expect(overlap(cohorts[1], cohorts[2]).empty(), "second/third overlap must be empty");
  });

  criterion(4, "correlation properties and the inequality-vs-size sign check", [](Checker& c) {
    std::mt19937_64 rng(20161220);

    // (a) structural properties on 1000 random datasets
    const std::vector<Variable> variables = {Variable::institutions, Variable::citations,
                                             Variable::exergy,       Variable::energy,
                                             Variable::gdp,          Variable::impact,
                                             Variable::eta};
    for (int trial = 0; trial < 1000 && c.failures == 0; ++trial) {
      const auto rows = testsupport::random_country_rows(rng, 10);
      const auto matrix = correlation_matrix(rows, variables);
      for (std::size_t i = 0; i < variables.size(); ++i) {
        c.expect(matrix.values[i][i] == 1.0, "diagonal must be exactly 1");
        for (std::size_t j = 0; j < variables.size(); ++j) {
          c.expect(matrix.values[i][j] == matrix.values[j][i], "matrix must be symmetric");
          c.expect(matrix.values[i][j] >= -1.0 && matrix.values[i][j] <= 1.0,
                   "entries must lie in [-1, 1]");
        }
      }
    }

    // (b) pearson affine invariance and sign flip
    for (int trial = 0; trial < 1000 && c.failures == 0; ++trial) {
      const std::size_t n = 3 + rng() % 30;
      std::vector<double> xs(n), ys(n);
      for (std::size_t i = 0; i < n; ++i) {
        xs[i] = testsupport::rand_unit(rng) * 1000.0;
        ys[i] = testsupport::rand_unit(rng) * 1000.0;
      }
      xs[0] += 1.0;
      ys[0] += 1.0;
      const double a = 0.1 + 5.0 * testsupport::rand_unit(rng);
      const double b = -100.0 + 200.0 * testsupport::rand_unit(rng);
      std::vector<double> mapped(n), flipped(n);
      for (std::size_t i = 0; i < n; ++i) {
        mapped[i] = a * xs[i] + b;
        flipped[i] = -a * xs[i] + b;
      }
      const double base = pearson(xs, ys);
      c.expect(std::abs(pearson(mapped, ys) - base) <= 1e-12, "affine map must not change r");
      c.expect(std::abs(pearson(flipped, ys) + base) <= 1e-12, "negative scale must flip r");
    }

    // (c) ensembles where concentration grows with total size must give
    //     a negative correlation between eta and energy
    for (int ensemble = 0; ensemble < 20; ++ensemble) {
      std::vector<CountryRow> rows;
      for (int k = 0; k < 30; ++k) {
        const int size = 3 + k;
        const double scale = 1000.0 * (1.0 + k) * (1.0 + 0.2 * testsupport::rand_unit(rng));
        const double gamma = 0.3 + 0.05 * k * (1.0 + 0.2 * testsupport::rand_unit(rng));
        std::vector<std::int64_t> citations;
        for (int j = 1; j <= size; ++j) {
          citations.push_back(
              static_cast<std::int64_t>(scale * std::pow(static_cast<double>(j), -gamma)) + 1);
        }
        CountryRow row;
        row.indicators = group_indicators("C" + std::to_string(k),
                                          testsupport::records_from(citations));
        rows.push_back(std::move(row));
      }
      const std::vector<Variable> pair = {Variable::eta, Variable::energy};
      const auto matrix = correlation_matrix(rows, pair);
      c.expect(matrix.values[0][1] < 0.0, "corr(eta, E) must be negative when concentration "
                                          "grows with size");
    }
  });

  criterion(5, "indicator algebra: variance identity, eta bounds, scaling, oracle",
            [](Checker& c) {
    std::mt19937_64 rng(5150);

    for (int trial = 0; trial < 1000 && c.failures == 0; ++trial) {
      const auto citations = testsupport::random_citations(rng, 20);
      const auto records = testsupport::records_from(citations);
      const auto row = group_indicators("US", records);

      // E = X + N * variance
      const double expected = row.exergy + static_cast<double>(row.institutions) *
                                               testsupport::naive_variance(citations);
      c.expect(rel_diff(row.energy, expected) <= 1e-9, "E must equal X + N*sigma^2");

      // eta in (0, 1]
      c.expect(row.eta > 0.0 && row.eta <= 1.0, "eta must lie in (0, 1]");

      // brute-force oracle
      const auto naive = testsupport::naive_indicators(citations);
      c.expect(row.institutions == naive.n && row.citations == naive.c,
               "counts must match the oracle");
      c.expect(rel_diff(row.impact, naive.impact) <= 1e-12, "impact must match the oracle");
      c.expect(rel_diff(row.exergy, naive.exergy) <= 1e-12, "exergy must match the oracle");
      c.expect(rel_diff(row.energy, naive.energy) <= 1e-12, "energy must match the oracle");
      c.expect(std::abs(row.eta - naive.eta) <= 1e-12, "eta must match the oracle");
    }

    // eta = 1 iff all equal; N = 1 exact values
    for (int trial = 0; trial < 200 && c.failures == 0; ++trial) {
      const auto n = testsupport::rand_in(rng, 2, 20);
      const auto value = testsupport::rand_in(rng, 1, 1000000);
      std::vector<std::int64_t> equal(static_cast<std::size_t>(n), value);
      c.expect(group_indicators("US", testsupport::records_from(equal)).eta == 1.0,
               "equal counts must give eta exactly 1");
      auto unequal = equal;
      unequal[0] = std::max<std::int64_t>(1, unequal[0] / 2);
      if (unequal[0] != equal[0]) {
        c.expect(group_indicators("US", testsupport::records_from(unequal)).eta < 1.0 - 1e-12,
                 "substantively unequal counts must give eta < 1");
      }

      const std::int64_t single = testsupport::rand_in(rng, 1, 1000000);
      const auto one = group_indicators("EE", testsupport::records_from({single}));
      c.expect(one.eta == 1.0 && one.entropy == 0.0, "N=1 must give eta=1 and S=0 exactly");
      c.expect(one.exergy == one.energy, "N=1 must give X=E exactly");
    }

    // scale covariance
    for (int trial = 0; trial < 200 && c.failures == 0; ++trial) {
      const auto citations = testsupport::random_citations(rng, 20, 100000);
      const std::int64_t k = testsupport::rand_in(rng, 2, 30);
      std::vector<std::int64_t> scaled;
      for (auto v : citations) scaled.push_back(v * k);
      const auto base = group_indicators("US", testsupport::records_from(citations));
      const auto big = group_indicators("US", testsupport::records_from(scaled));
      const double kd = static_cast<double>(k);
      c.expect(big.institutions == base.institutions, "N must be scale-invariant");
      c.expect(big.citations == k * base.citations, "C must scale linearly");
      c.expect(rel_diff(big.exergy, kd * kd * base.exergy) <= 1e-12, "X must scale as k^2");
      c.expect(rel_diff(big.energy, kd * kd * base.energy) <= 1e-12, "E must scale as k^2");
      c.expect(std::abs(big.eta - base.eta) <= 1e-12, "eta must be scale-invariant");
    }
  });

  criterion(6, "log-log slope recovers the indicative exponents 1.0, 1.5, 2.0", [](Checker& c) {
    std::mt19937_64 rng(1620);
    for (double s : {1.0, 1.5, 2.0}) {
      for (int trial = 0; trial < 50; ++trial) {
        const double k = 0.05 + 20.0 * testsupport::rand_unit(rng);
        std::vector<CountryRow> rows;
        for (int i = 0; i < 10; ++i) {
          const double x = std::pow(10.0, 0.5 * i);
          CountryRow row;
          row.indicators.country = "C" + std::to_string(i);
          row.indicators.institutions = 1;
          row.indicators.citations = 1;
          row.indicators.eta = 1.0;
          row.indicators.exergy = k * std::pow(x, s);  // y variable
          row.indicators.energy = row.indicators.exergy;
          row.gdp_busd = x;                            // x variable
          rows.push_back(std::move(row));
        }
        const double slope = loglog_slope(rows, Variable::gdp, Variable::exergy);
        c.expect(std::abs(slope - s) <= 1e-9,
                 "slope " + std::to_string(s) + " not recovered: got " + std::to_string(slope));
      }
    }
  });

  criterion(7, "end-to-end pipeline determinism on the synthetic sample", [](Checker& c) {
    testsupport::TempDir dir;
    auto pipeline = [&](const std::string& tag) {
      const std::string inst = dir.file("inst_" + tag + ".csv");
      const std::string ind = dir.file("ind_" + tag + ".csv");
      c.expect(run_cli_in("ingest --seed-sample --seed 42 -o " + inst) == 0, "ingest failed");
      c.expect(run_cli_in("indicators -i " + inst + " -o " + ind) == 0, "indicators failed");
      c.expect(run_cli_in("report -i " + inst + " --countries US,GB,BR -o " +
                          dir.file("report_" + tag + ".csv")) == 0,
               "report failed");
      c.expect(run_cli_in("correlate --indicators " + ind + " --gdp " + g_data_dir +
                          "/gdp.csv --cohorts " + g_data_dir + "/cohorts.json -o " +
                          dir.file("corr_" + tag + ".csv")) == 0,
               "correlate failed");
      c.expect(run_cli_in("scatter --indicators " + ind + " --gdp " + g_data_dir +
                          "/gdp.csv --cohorts " + g_data_dir + "/cohorts.json --preset figure1 "
                          "--output-dir " + dir.file("fig1_" + tag)) == 0,
               "scatter figure1 failed");
      c.expect(run_cli_in("scatter --indicators " + ind + " --gdp " + g_data_dir +
                          "/gdp.csv --cohorts " + g_data_dir + "/cohorts.json --preset figure2 "
                          "--output-dir " + dir.file("fig2_" + tag)) == 0,
               "scatter figure2 failed");
    };
    pipeline("a");
    pipeline("b");

    auto same = [&](const std::string& left, const std::string& right) {
      const std::string lhs = testsupport::slurp(dir.file(left));
      const std::string rhs = testsupport::slurp(dir.file(right));
      c.expect(!lhs.empty(), left + " is empty");
      c.expect(lhs == rhs, left + " and " + right + " differ");
    };
    same("inst_a.csv", "inst_b.csv");
    same("ind_a.csv", "ind_b.csv");
    same("report_a.csv", "report_b.csv");
    same("corr_a.csv", "corr_b.csv");
    for (const std::string name : {"scatter_GDP_N.csv", "scatter_GDP_C.csv", "scatter_GDP_X.csv",
                                   "scatter_GDP_E.csv"}) {
      same("fig1_a/" + name, "fig1_b/" + name);
    }
    for (const std::string name :
         {"scatter_top-12_X_eta.csv", "scatter_islamic_E_eta.csv",
          "scatter_iberia-latin-america_X_eta.csv"}) {
      same("fig2_a/" + name, "fig2_b/" + name);
    }
  });

  if (g_failed_criteria != 0) {
    std::cout << g_failed_criteria << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all acceptance criteria passed\n";
  return 0;
}
