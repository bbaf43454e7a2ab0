#include <catch2/catch_amalgamated.hpp>

#include "mdim/graph6.hpp"
#include "mdim/json_io.hpp"

#include "test_util.hpp"

using namespace mdim;

TEST_CASE("graph6 encodes known graphs") {
    CHECK(to_graph6(path_graph(2)) == "A_");
    CHECK(to_graph6(complete_graph(4)) == "C~");
    CHECK(to_graph6(complement(complete_graph(2))) == "A?");
}

TEST_CASE("graph6 round-trips the corpus") {
    for (const auto& g : testutil::small_corpus()) {
        const auto text = to_graph6(g);
        for (char c : text) REQUIRE((c >= 63 && c <= 126));
        REQUIRE(from_graph6(text) == g);
    }
    const Graph a7 = andrasfai(7);
    CHECK(from_graph6(to_graph6(a7)) == a7);
}

TEST_CASE("graph6 extended length prefix") {
    const Graph big = path_graph(63);
    const auto text = to_graph6(big);
    REQUIRE(text[0] == '~');
    CHECK(text.size() == 4 + (static_cast<std::size_t>(63 * 62 / 2) + 5) / 6);
    CHECK(from_graph6(text) == big);
    CHECK(from_graph6(to_graph6(path_graph(100))) == path_graph(100));
}

TEST_CASE("graph6 accepts the conventional header and trailing newline") {
    const auto text = to_graph6(andrasfai(3));
    CHECK(from_graph6(">>graph6<<" + text) == andrasfai(3));
    CHECK(from_graph6(text + "\n") == andrasfai(3));
    CHECK(from_graph6(text, "custom").name() == "custom");
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(from_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(from_graph6("\n"), std::invalid_argument);
    CHECK_THROWS_AS(from_graph6("A_\x07"), std::invalid_argument);
    CHECK_THROWS_AS(from_graph6("A"), std::invalid_argument);    // body too short
    CHECK_THROWS_AS(from_graph6("A__"), std::invalid_argument);  // body too long
    CHECK_THROWS_AS(from_graph6("~~????"), std::invalid_argument);
    CHECK_THROWS_AS(from_graph6("~?"), std::invalid_argument);  // truncated prefix
    CHECK_THROWS_AS(from_graph6("?"), std::invalid_argument);   // zero vertices
}

TEST_CASE("edge-list json round-trips") {
    for (const auto& g : testutil::small_corpus()) {
        const auto j = to_edge_list_json(g);
        REQUIRE(graph_from_edge_list_json(j) == g);
        REQUIRE(graph_from_edge_list_json(j.dump()).name() == g.name());
    }
}

TEST_CASE("edge-list json shape") {
    const auto j = to_edge_list_json(Graph(3, {{2, 1}, {1, 0}}, "probe"));
    CHECK(j["n"] == 3);
    CHECK(j["name"] == "probe");
    CHECK(j["edges"] == nlohmann::json::parse("[[0,1],[1,2]]"));
}

TEST_CASE("edge-list json rejects malformed documents") {
    CHECK_THROWS_AS(graph_from_edge_list_json(std::string("[]")), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_edge_list_json(std::string("{\"edges\":[]}")),
                    std::invalid_argument);
    CHECK_THROWS_AS(graph_from_edge_list_json(std::string("{\"n\":2.5,\"edges\":[]}")),
                    std::invalid_argument);
    CHECK_THROWS_AS(graph_from_edge_list_json(std::string("{\"n\":2,\"edges\":[[0]]}")),
                    std::invalid_argument);
    CHECK_THROWS_AS(graph_from_edge_list_json(std::string("{\"n\":2,\"edges\":[[0,\"x\"]]}")),
                    std::invalid_argument);
    CHECK_THROWS_AS(graph_from_edge_list_json(std::string("{\"n\":2,\"edges\":[[0,2]]}")),
                    std::invalid_argument);
    CHECK_THROWS_AS(graph_from_edge_list_json(std::string("not json")), nlohmann::json::exception);
}

TEST_CASE("dimension report json") {
    const auto exact = to_json(metric_dimension_exact(andrasfai(4)));
    CHECK(exact["graph"] == "And(4)");
    CHECK(exact["n"] == 11);
    CHECK(exact["exact"] == true);
    CHECK(exact["dim"] == 4);
    CHECK(exact["witness"] == nlohmann::json::parse("[0,1,4,7]"));
    CHECK(exact["lower_bound"]["value"] == 3);
    CHECK(exact["lower_bound"]["source"] == "diameter-count");
    CHECK(exact["stats"].contains("levels"));
    CHECK(exact.contains("timing"));
    CHECK_FALSE(exact.contains("dim_lo"));

    SearchBudget tiny;
    tiny.max_subsets = 1;
    const auto interval = to_json(metric_dimension_exact(andrasfai(6), tiny));
    CHECK(interval["exact"] == false);
    CHECK_FALSE(interval.contains("dim"));
    CHECK(interval["dim_lo"] == 4);
    CHECK(interval["dim_hi"].get<int>() >= 6);
}

TEST_CASE("report json is reproducible apart from timing") {
    auto a = to_json(metric_dimension_exact(andrasfai(5)));
    auto b = to_json(metric_dimension_exact(andrasfai(5)));
    a.erase("timing");
    b.erase("timing");
    CHECK(a.dump() == b.dump());
}

TEST_CASE("theorem check json") {
    const auto j = to_json(check_theorem_andk(2));
    CHECK(j["theorem"] == "AND_K");
    CHECK(j["name"] == "And(k) dimension theorem");
    CHECK(j["k"] == 2);
    CHECK_FALSE(j.contains("n"));
    CHECK(j["passed"] == true);
    REQUIRE(j["claims"].is_array());
    CHECK(j["claims"].size() == 4);
    for (const auto& c : j["claims"]) {
        CHECK(c.contains("claim"));
        CHECK(c["passed"] == true);
        CHECK(c.contains("evidence"));
    }
}
