#include <cmath>
#include <limits>

#include "alab/bounds.hpp"
#include "alab/csvio.hpp"
#include "alab/errors.hpp"
#include "alab/svg.hpp"
#include "doctest.h"

using namespace alab;

TEST_CASE("shortest round-trip double formatting") {
  for (double v : {0.1, 1.0 / 3.0, 1e-12, 123456.789, -0.25, 0.0}) {
    CHECK(parse_double(format_double(v)) == v);
  }
  CHECK(format_double(0.1) == "0.1");
  CHECK(std::isnan(parse_double(format_double(std::numeric_limits<double>::quiet_NaN()))));
  CHECK(parse_double(format_double(std::numeric_limits<double>::infinity())) ==
        std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(parse_double("12x"), ValidationError);
  CHECK_THROWS_AS(parse_long("1.5"), ValidationError);
}

TEST_CASE("csv line splitting keeps empty fields and quoted commas") {
  auto fields = split_csv_line("a,,c");
  REQUIRE(fields.size() == 3);
  CHECK(fields[1].empty());

  fields = split_csv_line("ejs,\"rich:m=5,labels=2\",5");
  REQUIRE(fields.size() == 3);
  CHECK(fields[1] == "rich:m=5,labels=2");
  CHECK(csv_escape("rich:m=5,labels=2") == "\"rich:m=5,labels=2\"");
  CHECK(csv_escape("plain") == "plain");
}

TEST_CASE("key=value config text") {
  const auto pairs = parse_key_value_text(
      "# experiment\nclass=\"rich:m=5,labels=2\"\n\nepsilon = 0.01\nseed=42\n", "test");
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0] == std::pair<std::string, std::string>{"class", "rich:m=5,labels=2"});
  CHECK(pairs[1] == std::pair<std::string, std::string>{"epsilon", "0.01"});
  CHECK(pairs[2] == std::pair<std::string, std::string>{"seed", "42"});
  CHECK_THROWS_AS(parse_key_value_text("keyonly\n", "test"), ValidationError);
}

TEST_CASE("bound report csv round trip") {
  const std::vector<BoundReport> reports = {class_bound_report("rich", 5, 0.01, 0.2),
                                            class_bound_report("disjoint", 4, 0.1, 0.3)};
  const std::string text = format_bound_csv(reports);
  CHECK(text.rfind(kBoundCsvHeader, 0) == 0);
  CHECK(format_bound_csv(parse_bound_csv(text)) == text);
}

TEST_CASE("constants csv round trip") {
  const std::string text = format_constants_csv(constants_sweep({0.1, 0.2, 0.3}));
  CHECK(text.rfind("p,C,C1,half_minus_p_sq,lambda\n", 0) == 0);
  CHECK(format_constants_csv(parse_constants_csv(text)) == text);
}

TEST_CASE("svg plots are deterministic and carry the series") {
  const std::vector<SvgSeries> series = {
      {"ejs", {{0.001, 21.0}, {0.01, 14.5}, {0.1, 7.0}}},
      {"msgbs", {{0.001, 33.0}, {0.01, 22.0}, {0.1, 9.0}}}};
  const std::string a = render_line_plot("mean queries vs epsilon", "epsilon",
                                         "mean queries", series);
  CHECK(a == render_line_plot("mean queries vs epsilon", "epsilon", "mean queries", series));
  CHECK(a.find("<polyline") != std::string::npos);
  CHECK(a.find(">ejs</text>") != std::string::npos);
  CHECK(a.find(">msgbs</text>") != std::string::npos);
  CHECK(a.find("epsilon") != std::string::npos);
  CHECK_THROWS_AS(render_line_plot("t", "x", "y", {}), Error);
}
