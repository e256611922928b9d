#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "qrod/config.hpp"
#include "qrod/output.hpp"

using namespace qrod;

TEST_CASE("config: parses keys, comments and blank lines") {
    const auto map = parse_key_value_text(
        "# rod setup\n"
        "mass = 2.0\n"
        "half_length=0.5   # metres\n"
        "\n"
        "gravity = 9.8\n"
        "sigma = 0.1\n");
    CHECK(map.at("mass") == "2.0");
    CHECK(map.at("half_length") == "0.5");
    CHECK(map.at("gravity") == "9.8");
    CHECK(map.size() == 4);
}

TEST_CASE("config: malformed input is aggregated into one report") {
    try {
        parse_key_value_text("mass = 1\nnonsense line\nmass = 2\n= empty\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("line 2") != std::string::npos);
        CHECK(msg.find("duplicate") != std::string::npos);
        CHECK(msg.find("line 4") != std::string::npos);
    }
}

TEST_CASE("config: problem assembly, defaults and units modes") {
    const auto si = problem_from_config(parse_key_value_text(
        "mass = 2.0\nhalf_length = 0.5\ngravity = 9.8\nsigma = 0.2\n"));
    CHECK(si.params.mass == 2.0);
    CHECK(si.params.half_length == 0.5);
    CHECK(si.params.hbar == kCodataHbar);  // default applies when hbar is absent
    CHECK(!si.hbar_explicit);
    CHECK(si.sigma == 0.2);
    CHECK(si.units == UnitsMode::Si);

    const auto natural = problem_from_config(parse_key_value_text(
        "units_mode = natural\nhbar = 0.01\nsigma = 0.1\n"));
    CHECK(natural.params.mass == 1.0);
    CHECK(natural.params.half_length == 1.0);
    CHECK(natural.params.gravity == 1.0);
    CHECK(natural.params.hbar == 0.01);
    CHECK(natural.hbar_explicit);
}

TEST_CASE("config: every problem is reported at once") {
    try {
        problem_from_config(parse_key_value_text(
            "units_mode = natural\nmass = 2\nhbar = not_a_number\nunknown_key = 3\n"));
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("natural units pin") != std::string::npos);
        CHECK(msg.find("not_a_number") != std::string::npos);
        CHECK(msg.find("unknown_key") != std::string::npos);
    }

    CHECK_THROWS_AS(problem_from_config(parse_key_value_text("hbar = 0\n")), ConfigError);
    CHECK_THROWS_AS(problem_from_config(parse_key_value_text("mass = -1\n")), ConfigError);
    CHECK_THROWS_AS(problem_from_config(parse_key_value_text("units_mode = imperial\n")),
                    ConfigError);
}

TEST_CASE("format_full: 17 significant digits, round-trip faithful") {
    CHECK(format_full(0.1) == "0.10000000000000001");
    CHECK(format_full(1.0) == "1");
    CHECK(format_full(0.80584655661624862) == "0.8058465566162486");
    CHECK(std::stod(format_full(0.80584655661624862)) == 0.80584655661624862);
    CHECK(format_full(std::numeric_limits<double>::quiet_NaN()) == "nan");
    CHECK(format_full(-std::numeric_limits<double>::infinity()) == "-inf");
    const double value = 0.123456789012345678;
    CHECK(std::stod(format_full(value)) == value);
}

TEST_CASE("csv writer: stamped header and strict column counts") {
    std::ostringstream out;
    CsvWriter csv(out, {{"sigma", "0.1"}, {"units", "natural"}}, {"t", "density"});
    csv.row({0.5, 1.25});
    const std::string text = out.str();
    CHECK(text.find("# sigma = 0.1\n") != std::string::npos);
    CHECK(text.find("# units = natural\n") != std::string::npos);
    CHECK(text.find("t,density\n") != std::string::npos);
    CHECK(text.find("0.5,1.25\n") != std::string::npos);
    CHECK_THROWS_AS(csv.row({1.0}), std::invalid_argument);
}

TEST_CASE("json writer: stable layout with ordered keys") {
    JsonWriter json;
    json.begin_object();
    json.field("name", std::string("tiptime"));
    json.field("t_tip", 0.5);
    json.field("ok", true);
    json.begin_array("values");
    json.element(1.0);
    json.element(2.5);
    json.end_array();
    json.begin_object("nested");
    json.field("count", 3LL);
    json.end_object();
    json.end_object();
    const std::string text = json.str();
    CHECK(text ==
          "{\n"
          "  \"name\": \"tiptime\",\n"
          "  \"t_tip\": 0.5,\n"
          "  \"ok\": true,\n"
          "  \"values\": [\n"
          "    1,\n"
          "    2.5\n"
          "  ],\n"
          "  \"nested\": {\n"
          "    \"count\": 3\n"
          "  }\n"
          "}");
}

TEST_CASE("svg writer: produces a plausible self-contained chart") {
    const auto path = std::filesystem::temp_directory_path() / "qrod_test_plot.svg";
    SvgSeries series;
    series.label = "P(0.3, t)";
    for (int i = 0; i <= 50; ++i) {
        series.x.push_back(0.05 * i);
        series.y.push_back(std::exp(-0.05 * i));
    }
    SvgPlotOptions options;
    options.title = "density";
    options.x_label = "t";
    options.y_label = "P";
    write_svg_line_plot(path, options, {series}, {{"sigma", "0.3"}});

    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string svg = buffer.str();
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK(svg.find("sigma = 0.3") != std::string::npos);
    CHECK(svg.find("P(0.3, t)") != std::string::npos);
    std::filesystem::remove(path);
}
