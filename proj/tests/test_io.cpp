#include <doctest.h>

#include "fixtures.hpp"
#include "scgid/discovery.hpp"
#include "scgid/io.hpp"

using namespace scgid;

TEST_CASE("template parsing") {
    auto t = parse_template("# comment\nY[-2] -> X   # trailing\nX -> Y\n\nX[-0] -> Z\nW\n");
    CHECK(t.names.all() == std::vector<std::string>{"Y", "X", "Z", "W"});
    CHECK(t.graph.n_series() == 4);
    CHECK(t.graph.gamma_max() == 2);
    CHECK(t.graph.contains({SeriesId{0}, 2, SeriesId{1}}));
    CHECK(t.graph.contains({SeriesId{1}, 0, SeriesId{0}}));
    CHECK(t.graph.contains({SeriesId{1}, 0, SeriesId{2}}));
    CHECK(t.graph.edges().size() == 3);
}

TEST_CASE("template parse errors carry line numbers") {
    auto line_of = [](const char* text) {
        try {
            parse_template(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return std::size_t{0};
    };
    CHECK(line_of("X -> Y\nX[-1 -> Y\n") == 2);
    CHECK(line_of("X -> \n") == 1);
    CHECK(line_of("\n\nX -> X\n") == 3);
    CHECK(line_of("X => Y\n") == 1);
    CHECK(line_of("X -> Y Z\n") == 1);
    CHECK(line_of("X[+1] -> Y\n") == 1);
    CHECK(line_of("X -> Y\nY -> X\n") == 2);
    CHECK(line_of("X-1 -> Y\n") == 1);
    CHECK_THROWS_AS(read_template_file("/nonexistent/file.tmpl"), std::runtime_error);
}

TEST_CASE("SCG parsing") {
    auto s = parse_scg("A <-> B\nB -> C\nA -> A\nD\n");
    CHECK(s.names.all() == std::vector<std::string>{"A", "B", "C", "D"});
    CHECK(s.scg.edge(std::size_t{0}, std::size_t{1}));
    CHECK(s.scg.edge(std::size_t{1}, std::size_t{0}));
    CHECK(s.scg.edge(std::size_t{1}, std::size_t{2}));
    CHECK(s.scg.edge(std::size_t{0}, std::size_t{0}));
    CHECK(s.scg.edge_count() == 4);
    CHECK(parse_scg("").scg.n_series() == 0);
    CHECK_THROWS_AS(parse_scg("A <- B\n"), ParseError);
    CHECK_THROWS_AS(parse_scg("A -> B[-1]\n"), ParseError);
}

TEST_CASE("seeded names keep the seed order") {
    auto s = parse_scg("Y -> X\n", SeriesNames({"X", "Y"}));
    CHECK(s.names.all() == std::vector<std::string>{"X", "Y"});
    CHECK(s.scg.edge(std::size_t{1}, std::size_t{0}));
}

TEST_CASE("series names") {
    CHECK(valid_series_name("S_1"));
    CHECK_FALSE(valid_series_name(""));
    CHECK_FALSE(valid_series_name("a-b"));
    CHECK(default_names(3).all() == std::vector<std::string>{"A", "B", "C"});
    CHECK(default_names(28)[SeriesId{27}] == "S27");
    CHECK_THROWS_AS(SeriesNames({"A", "A"}), std::invalid_argument);
}

TEST_CASE("formatting round trips") {
    auto t = fixtures::tmpl("fig6_m1.tmpl");
    auto again = parse_template(format_template(t.graph, t.names));
    CHECK(again.graph == t.graph);
    CHECK(again.names == t.names);

    auto s = fixtures::scg("fig6.scg");
    auto s2 = parse_scg(format_scg(s.scg, s.names));
    CHECK(s2.scg == s.scg);
}

TEST_CASE("PDAG dump") {
    auto t = parse_template("X\nY\nX -> Y\nX[-1] -> X\nY[-1] -> Y\nX[-1] -> Y\nY[-1] -> X\n");
    auto p = ftmpdag_of(t.graph, scg_of(t.graph), 2);
    CHECK(format_pdag(p, t.names) ==
          "X[0] -- Y[0]\n"
          "X[0] -> X[1]\n"
          "X[0] -> Y[1]\n"
          "Y[0] -> X[1]\n"
          "Y[0] -> Y[1]\n"
          "X[1] -- Y[1]\n");
}
