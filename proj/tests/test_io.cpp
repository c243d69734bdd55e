#include <dnnclust/errors.hpp>
#include <dnnclust/eval.hpp>
#include <dnnclust/io.hpp>
#include <dnnclust/mixture.hpp>

#include "oracles.hpp"

#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <string>

using namespace dnnclust;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) {
        path = (std::filesystem::temp_directory_path() / name).string();
    }
    ~TempFile() {
        std::error_code ec;
        std::filesystem::remove(path, ec);
        std::filesystem::remove(path + ".tmp", ec);
    }
};

} // namespace

TEST_CASE("parse_points_csv accepts comma and whitespace delimiters") {
    auto a = parse_points_csv("0,0\n1,1\n");
    CHECK(a.points == PointList{{0, 0}, {1, 1}});
    CHECK_FALSE(a.labels.has_value());

    auto b = parse_points_csv("0 0 1\n5 5 2\n");
    REQUIRE(b.labels.has_value());
    CHECK(b.points == PointList{{0, 0}, {5, 5}});
    CHECK(*b.labels == std::vector<VertexId>{1, 2});

    auto c = parse_points_csv("# header comment\n\n1.5\t2.5\n3,4 # trailing comment\n");
    CHECK(c.points == PointList{{1.5, 2.5}, {3, 4}});
}

TEST_CASE("parse_points_csv reports the offending line") {
    try {
        parse_points_csv("0,0\nnot,a,number\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_points_csv("1,2,3,4\n"), ParseError);
    CHECK_THROWS_AS(parse_points_csv("0,0\n1,1,7\n"), ParseError); // inconsistent columns
    CHECK_THROWS_AS(parse_points_csv("inf,0\n"), ParseError);
    CHECK_THROWS_AS(parse_points_csv("nan nan\n"), ParseError);
    CHECK_THROWS_AS(parse_points_csv("# only comments\n"), ParseError);
    CHECK_THROWS_AS(load_points_csv("/nonexistent/path.csv"), IoError);
}

TEST_CASE("format_double round-trips every double") {
    SplitMix64 rng(4711);
    for (int t = 0; t < 1000; ++t) {
        double v = (rng.uniform_co() - 0.5) * std::pow(10.0, double(rng.next() % 40) - 20.0);
        auto parsed = parse_points_csv(format_double(v) + " 0\n");
        CHECK(parsed.points[0].x == v);
    }
}

TEST_CASE("result CSV round trip preserves everything") {
    auto [pts, labels] = generate_mixture(two_gaussian_spec());
    auto result = cluster_pipeline(pts, 2.0, GraphKind::delaunay());

    std::string text = result_csv_text(result);
    CHECK(text.rfind("index,x,y,potential,parent,root,cluster", 0) == 0);

    auto rows = parse_result_csv(text);
    REQUIRE(rows.size() == pts.size());
    std::size_t roots = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].index == VertexId(i));
        CHECK(rows[i].point == pts[i]);                    // 17 digits: lossless
        CHECK(rows[i].cluster == result.labels[i]);
        auto u = std::size_t(result.dedup.remap[i]);
        CHECK(rows[i].potential == result.field.values[u]);
        if (!rows[i].parent) ++roots;
    }
    CHECK(roots == result.forest.root_count());
}

TEST_CASE("write_result_csv is atomic and reloadable") {
    TempFile tmp("dnnclust_result_test.csv");
    auto r = cluster_pipeline({{0, 0}, {1, 0}, {0, 1}}, 1.0, GraphKind::delaunay());
    write_result_csv(tmp.path, r);
    CHECK_FALSE(std::filesystem::exists(tmp.path + ".tmp"));
    auto rows = load_result_csv(tmp.path);
    CHECK(rows.size() == 3);
}

TEST_CASE("edge list export is sorted and round-trips") {
    auto tri = build_delaunay({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    auto g = adjacency(tri);
    std::string text = edge_list_text(g);
    CHECK(text == "0 1\n0 2\n0 3\n1 2\n2 3\n");

    TempFile tmp("dnnclust_edges_test.txt");
    atomic_write_file(tmp.path, text);
    auto edges = load_edge_list(tmp.path);
    CHECK(edges == g.edges());
}

TEST_CASE("graph JSON export carries points and edges") {
    PointList pts{{0, 0}, {1, 0}, {0.5, 1}};
    auto g = adjacency(build_delaunay(pts));
    auto parsed = nlohmann::json::parse(graph_json_text(pts, g));
    REQUIRE(parsed.contains("points"));
    REQUIRE(parsed.contains("edges"));
    CHECK(parsed["points"].size() == 3);
    CHECK(parsed["edges"].size() == 3);
    CHECK(parsed["points"][1][0].get<double>() == 1.0);
}

TEST_CASE("points_csv_text writes generator output with labels") {
    PointList pts{{0.5, -1.25}, {3, 4}};
    std::vector<VertexId> labels{0, 1};
    std::string text = points_csv_text(pts, &labels);
    CHECK(text == "0.5,-1.25,0\n3,4,1\n");
    auto back = parse_points_csv(text);
    CHECK(back.points == pts);
    REQUIRE(back.labels.has_value());
    CHECK(*back.labels == labels);
}
