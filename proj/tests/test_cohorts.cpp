#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "sciwealth/cohorts.hpp"
#include "sciwealth/errors.hpp"
#include "support/paths.hpp"

using namespace sciwealth;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::io_error;
}

std::vector<Cohort> cohorts_from(const std::string& text) {
  std::istringstream in(text);
  return load_cohorts(in);
}

std::vector<GdpEntry> gdp_from(const std::string& text) {
  std::istringstream in(text);
  return load_gdp(in);
}

std::string data_dir() {
  return testsupport::data_dir();
}

CountryRow row_for(const std::string& country, std::int64_t citations = 100) {
  CountryRow row;
  row.indicators.country = country;
  row.indicators.institutions = 1;
  row.indicators.citations = citations;
  return row;
}

}  // namespace

TEST_CASE("shipped cohort config matches the documented shape") {
  std::ifstream in(data_dir() + "/cohorts.json");
  REQUIRE(in.good());
  auto cohorts = load_cohorts(in);

  REQUIRE(cohorts.size() == 3);
  CHECK(cohorts[0].name == "Top 12");
  CHECK(cohorts[0].members.size() == 12);
  CHECK(cohorts[1].name == "Islamic");
  CHECK(cohorts[1].members.size() == 25);
  CHECK(cohorts[2].name == "Iberia & Latin America");
  CHECK(cohorts[2].members.size() == 18);

  CHECK(cohorts[0].members == std::vector<std::string>{"US", "GB", "CA", "IT", "KR", "DE", "ES",
                                                       "FR", "JP", "BR", "IN", "PT"});

  CHECK(cohort_union(cohorts).size() == 52);

  // The only pairwise overlap is {BR, ES, PT} between the first and third.
  auto overlap = [](const Cohort& a, const Cohort& b) {
    std::set<std::string> sa(a.members.begin(), a.members.end());
    std::set<std::string> out;
    for (const auto& code : b.members) {
      if (sa.contains(code)) out.insert(code);
    }
    return out;
  };
  CHECK(overlap(cohorts[0], cohorts[2]) == std::set<std::string>{"BR", "ES", "PT"});
  CHECK(overlap(cohorts[0], cohorts[1]).empty());
  CHECK(overlap(cohorts[1], cohorts[2]).empty());
}

TEST_CASE("shipped GDP table loads and covers the cohort union except Cuba") {
  std::ifstream gdp_in(data_dir() + "/gdp.csv");
  REQUIRE(gdp_in.good());
  auto gdp = load_gdp(gdp_in);
  CHECK(gdp.size() == 51);
  for (const auto& entry : gdp) CHECK(entry.gdp_busd > 0.0);

  std::ifstream cohorts_in(data_dir() + "/cohorts.json");
  auto cohorts = load_cohorts(cohorts_in);
  std::set<std::string> covered;
  for (const auto& entry : gdp) covered.insert(entry.country);
  std::vector<std::string> missing;
  for (const auto& code : cohort_union(cohorts)) {
    if (!covered.contains(code)) missing.push_back(code);
  }
  CHECK(missing == std::vector<std::string>{"CU"});
}

TEST_CASE("load_cohorts uppercases and keeps file order") {
  auto cohorts = cohorts_from(R"({"One": ["us", "gb"], "Two": ["de"]})");
  REQUIRE(cohorts.size() == 2);
  CHECK(cohorts[0].name == "One");
  CHECK(cohorts[0].members == std::vector<std::string>{"US", "GB"});
  CHECK(cohorts[1].members == std::vector<std::string>{"DE"});
}

TEST_CASE("load_cohorts rejects bad configs") {
  CHECK(code_of([] { cohorts_from(R"({"A": ["ZZ"]})"); }) == Errc::bad_config);
  CHECK(code_of([] { cohorts_from(R"({"A": ["US", "US"]})"); }) == Errc::bad_config);
  CHECK(code_of([] { cohorts_from(R"({"A": []})"); }) == Errc::empty_cohort);
  CHECK(code_of([] { cohorts_from("not json"); }) == Errc::bad_config);
  CHECK(code_of([] { cohorts_from(R"(["US"])"); }) == Errc::bad_config);
  CHECK(code_of([] { cohorts_from(R"({"A": "US"})"); }) == Errc::bad_config);
}

TEST_CASE("load_gdp") {
  auto entries = gdp_from("country,gdp_busd\nus,18624.5\nGB,2647.9\n");
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].country == "US");
  CHECK(entries[0].gdp_busd == doctest::Approx(18624.5));

  CHECK(code_of([] { gdp_from("country,gdp_busd\nUS,1\nUS,2\n"); }) ==
        Errc::duplicate_gdp_entry);
  CHECK(code_of([] { gdp_from("country,gdp_busd\nUS,0\n"); }) == Errc::malformed_row);
  CHECK(code_of([] { gdp_from("country,gdp_busd\nUS,abc\n"); }) == Errc::malformed_row);
  CHECK(code_of([] { gdp_from("country\nUS\n"); }) == Errc::missing_column);
}

TEST_CASE("join_gdp flags missing countries and keeps order") {
  std::vector<CountryIndicators> rows = {row_for("US").indicators, row_for("GB").indicators};
  std::vector<GdpEntry> gdp = {{"US", 18624.5}};
  auto joined = join_gdp(rows, gdp);
  REQUIRE(joined.rows.size() == 2);
  CHECK(joined.rows[0].indicators.country == "US");
  CHECK(joined.rows[0].gdp_busd == doctest::Approx(18624.5));
  CHECK_FALSE(joined.rows[1].gdp_busd.has_value());
  CHECK(joined.missing_gdp == std::vector<std::string>{"GB"});

  auto all_missing = join_gdp(rows, {});
  CHECK(all_missing.missing_gdp.size() == 2);

  std::vector<GdpEntry> duplicated = {{"US", 1.0}, {"US", 2.0}};
  CHECK(code_of([&] { join_gdp(rows, duplicated); }) == Errc::duplicate_gdp_entry);
}

TEST_CASE("select_cohort returns member order and reports gaps") {
  std::vector<CountryRow> rows = {row_for("GB"), row_for("US"), row_for("DE")};
  Cohort cohort{"Sample", {"US", "FR", "GB"}};
  auto selection = select_cohort(rows, cohort);
  REQUIRE(selection.rows.size() == 2);
  CHECK(selection.rows[0].indicators.country == "US");
  CHECK(selection.rows[1].indicators.country == "GB");
  CHECK(selection.missing_members == std::vector<std::string>{"FR"});

  // Selecting again from the selection is idempotent.
  auto again = select_cohort(selection.rows, cohort);
  CHECK(again.rows.size() == selection.rows.size());
  for (std::size_t i = 0; i < again.rows.size(); ++i) {
    CHECK(again.rows[i].indicators.country == selection.rows[i].indicators.country);
  }

  Cohort empty_match{"None", {"JP"}};
  auto nothing = select_cohort(rows, empty_match);
  CHECK(nothing.rows.empty());
  CHECK(nothing.missing_members == std::vector<std::string>{"JP"});
}

TEST_CASE("overlapping cohorts select the shared country in both") {
  std::vector<CountryRow> rows = {row_for("PT"), row_for("US")};
  Cohort a{"A", {"US", "PT"}};
  Cohort b{"B", {"PT"}};
  CHECK(select_cohort(rows, a).rows.size() == 2);
  CHECK(select_cohort(rows, b).rows.size() == 1);
  CHECK(select_cohort(rows, b).rows[0].indicators.country == "PT");
}

TEST_CASE("tag_memberships and cohort_union") {
  std::vector<CountryRow> rows = {row_for("US"), row_for("PT"), row_for("JP")};
  std::vector<Cohort> cohorts = {{"A", {"US", "PT"}}, {"B", {"PT", "BR"}}};
  tag_memberships(rows, cohorts);
  CHECK(rows[0].cohorts == std::vector<std::string>{"A"});
  CHECK(rows[1].cohorts == std::vector<std::string>{"A", "B"});
  CHECK(rows[2].cohorts.empty());

  CHECK(cohort_union(cohorts) == std::vector<std::string>{"US", "PT", "BR"});
}
