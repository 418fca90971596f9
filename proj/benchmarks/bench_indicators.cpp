#include <benchmark/benchmark.h>

#include <sstream>
#include <vector>

#include "sciwealth/indicators.hpp"
#include "sciwealth/ingest.hpp"
#include "sciwealth/stats.hpp"
#include "sciwealth/synthetic.hpp"

using namespace sciwealth;

namespace {

std::vector<InstitutionRecord> dataset() {
  static const auto records = synthetic_ranking(42);
  return records;
}

void BM_aggregate(benchmark::State& state) {
  const auto records = dataset();
  for (auto _ : state) {
    benchmark::DoNotOptimize(aggregate(records));
  }
}
BENCHMARK(BM_aggregate);

void BM_energy(benchmark::State& state) {
  std::vector<std::int64_t> citations;
  for (std::int64_t i = 0; i < state.range(0); ++i) {
    citations.push_back(1000 + (i * 2654435761u) % 5000000);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(energy(citations));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_energy)->Range(1 << 8, 1 << 16)->Complexity(benchmark::oNLogN);

void BM_country_indicators(benchmark::State& state) {
  const auto records = dataset();
  for (auto _ : state) {
    benchmark::DoNotOptimize(country_indicators(records));
  }
}
BENCHMARK(BM_country_indicators);

void BM_parse_ranking(benchmark::State& state) {
  std::ostringstream buffer;
  write_ranking(buffer, dataset(), csv::Dialect::tsv);
  const std::string text = buffer.str();
  for (auto _ : state) {
    std::istringstream in(text);
    benchmark::DoNotOptimize(parse_ranking(in, csv::Dialect::tsv));
  }
}
BENCHMARK(BM_parse_ranking);

void BM_pearson(benchmark::State& state) {
  std::vector<double> xs, ys;
  for (std::int64_t i = 0; i < state.range(0); ++i) {
    xs.push_back(static_cast<double>(i % 97));
    ys.push_back(static_cast<double>((i * 31) % 89));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(pearson(xs, ys));
  }
}
BENCHMARK(BM_pearson)->Range(1 << 6, 1 << 14);

void BM_correlation_matrix(benchmark::State& state) {
  std::vector<CountryRow> rows;
  std::vector<InstitutionRecord> group;
  std::size_t target = 7;  // varied so no indicator column is constant
  for (const auto& record : dataset()) {
    group.push_back(record);
    if (group.size() == target) {
      CountryRow row;
      row.indicators = group_indicators(record.country, group);
      row.gdp_busd = static_cast<double>(row.indicators.citations) / 1e6;
      rows.push_back(std::move(row));
      group.clear();
      target = 7 + (target * 13) % 41;
    }
  }
  const std::vector<Variable> variables = {Variable::institutions, Variable::citations,
                                           Variable::exergy,       Variable::energy,
                                           Variable::gdp,          Variable::impact,
                                           Variable::eta};
  for (auto _ : state) {
    benchmark::DoNotOptimize(correlation_matrix(rows, variables));
  }
}
BENCHMARK(BM_correlation_matrix);

}  // namespace

BENCHMARK_MAIN();
