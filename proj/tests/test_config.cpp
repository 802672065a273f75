#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "smplab/config.hpp"
#include "smplab/io.hpp"

using namespace smplab;

namespace {

const char* kSample = R"(# band problem
mesh_n = 1024
problem {
  mode = full
  domain {
    lo = -2
    hi = 2
  }
  forcing {
    piece {
      lo = -2
      hi = -1
      value = -1
    }
    piece {
      lo = -1
      hi = 1
      value = 1
    }
    piece {
      lo = 1
      hi = 2
      value = -1
    }
  }
}
tol {
  rel = 1e-09
}
)";

}  // namespace

TEST_CASE("parse + serialize round trip is stable") {
    const auto tree = config::parse(kSample);
    const std::string once = config::serialize(tree);
    const auto again = config::parse(once);
    CHECK(config::serialize(again) == once);

    CHECK(tree.get_int("mesh_n", 0) == 1024);
    const auto* problem = tree.child("problem");
    REQUIRE(problem != nullptr);
    CHECK(problem->get_string("mode", "?") == "full");
    CHECK(problem->child("domain")->require_double("hi") == 2.0);
    CHECK(problem->child("forcing")->children_named("piece").size() == 3);
}

TEST_CASE("comments, blank lines, and errors") {
    CHECK_NOTHROW(config::parse("  \n# only a comment\n\n"));
    CHECK_THROWS_AS(config::parse("foo\n"), config::ConfigError);
    CHECK_THROWS_AS(config::parse("a {\n"), config::ConfigError);
    CHECK_THROWS_AS(config::parse("}\n"), config::ConfigError);
    CHECK_THROWS_AS(config::parse("= 3\n"), config::ConfigError);

    // inline comments after values
    const auto t = config::parse("k = 3.5 # trailing\n");
    CHECK(t.require_double("k") == 3.5);
}

TEST_CASE("mesh descriptors round-trip through the config format") {
    config::Node root;
    auto& mesh = root.add_child("mesh");
    mesh.set("kind", "disk");
    mesh.set_int("n", 128);
    mesh.set_double("r", 1.5);
    mesh.set_int("dim", 2);
    const auto back = config::parse(config::serialize(root));
    const auto* m = back.child("mesh");
    REQUIRE(m != nullptr);
    CHECK(m->get_string("kind", "?") == "disk");
    CHECK(m->get_int("n", 0) == 128);
    CHECK(m->require_double("r") == 1.5);
    CHECK(m->get_int("dim", 0) == 2);
}

TEST_CASE("shortest-exact double formatting") {
    for (double v : {0.0, 1.0, -1.5, 0.1, 1e-9, 3.141592653589793, 2.2250738585072014e-308}) {
        const std::string s = config::format_double(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
    CHECK(config::format_double(0.5) == "0.5");
    CHECK(config::format_double(1024.0) == "1024");
}

TEST_CASE("csv emission is deterministic and rectangular") {
    const std::string csv =
        io::csv_from_columns({"x", "u"}, {{0.0, 0.5, 1.0}, {1.0, 0.25, 0.0}});
    CHECK(csv == "x,u\n0,1\n0.5,0.25\n1,0\n");
    CHECK_THROWS_AS(io::csv_from_columns({"x"}, {{1.0}, {2.0}}), std::invalid_argument);
    CHECK_THROWS_AS(io::csv_from_columns({"x", "y"}, {{1.0}, {2.0, 3.0}}),
                    std::invalid_argument);
}

TEST_CASE("json mirror carries numbers and nested blocks") {
    const auto tree = config::parse(kSample);
    const std::string j = io::json_of_node(tree);
    CHECK(j.find("\"mesh_n\": 1024") != std::string::npos);
    CHECK(j.find("\"piece\": [") != std::string::npos);
    CHECK(j.find("\"mode\": \"full\"") != std::string::npos);
}

TEST_CASE("svg output is structurally sound") {
    io::SvgPanel panel;
    panel.title = "demo";
    io::SvgSeries ser;
    for (int i = 0; i <= 10; ++i) {
        ser.x.push_back(i / 10.0);
        ser.y.push_back(i % 2 ? 1.0 : -1.0);
    }
    panel.series.push_back(ser);
    const std::string svg = io::svg_line_plot({panel, panel});
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(std::count(svg.begin(), svg.end(), '\n') > 10);
    // two panels, one polyline each
    std::size_t count = 0, pos = 0;
    while ((pos = svg.find("<polyline", pos)) != std::string::npos) {
        ++count;
        ++pos;
    }
    CHECK(count == 2);
}
