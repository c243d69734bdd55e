#include <dnnclust/errors.hpp>
#include <dnnclust/geometry.hpp>
#include <dnnclust/predicates.hpp>

#include "oracles.hpp"

#include <doctest.h>

#include <array>
#include <set>

using namespace dnnclust;

namespace {

void check_euler_and_empty_circle(const Triangulation& tri) {
    const auto n = tri.points.size();
    std::size_t h = oracles::hull_point_count(tri.points);
    NeighborGraph g = adjacency(tri);
    CHECK(tri.triangles.size() == 2 * n - h - 2);
    CHECK(g.edge_count() == 3 * n - h - 3);

    for (const auto& t : tri.triangles) {
        const Point2& a = tri.points[std::size_t(t[0])];
        const Point2& b = tri.points[std::size_t(t[1])];
        const Point2& c = tri.points[std::size_t(t[2])];
        REQUIRE(orient2d(a, b, c) == Orientation::CounterClockwise);
        for (std::size_t w = 0; w < n; ++w) {
            if (w == std::size_t(t[0]) || w == std::size_t(t[1]) || w == std::size_t(t[2]))
                continue;
            REQUIRE(in_circumcircle(a, b, c, tri.points[w]) != CirclePosition::Inside);
        }
    }
}

} // namespace

TEST_CASE("dedupe_points merges exact duplicates only") {
    auto d = dedupe_points({{0, 0}, {1, 1}, {0, 0}});
    CHECK(d.unique_points == PointList{{0, 0}, {1, 1}});
    CHECK(d.remap == std::vector<VertexId>{0, 1, 0});

    auto id = dedupe_points({{0, 0}, {1, 0}});
    CHECK(id.unique_points.size() == 2);
    CHECK(id.remap == std::vector<VertexId>{0, 1});

    auto all = dedupe_points({{5, 5}, {5, 5}, {5, 5}});
    CHECK(all.unique_points == PointList{{5, 5}});
    CHECK(all.remap == std::vector<VertexId>{0, 0, 0});

    // nearby but unequal points stay distinct
    auto near = dedupe_points({{0, 0}, {0, 1e-300}});
    CHECK(near.unique_points.size() == 2);

    CHECK_THROWS_AS(dedupe_points({}), InvalidParameter);
    CHECK_THROWS_AS(dedupe_points({{0, 0}, {std::nan(""), 0}}), InvalidParameter);
}

TEST_CASE("build_delaunay on a single triangle") {
    auto tri = build_delaunay({{0, 0}, {2, 0}, {1, 2}});
    REQUIRE(tri.triangles.size() == 1);
    CHECK(tri.triangles[0] == std::array<VertexId, 3>{0, 1, 2});
    CHECK(tri.neighbors[0] ==
          std::array<int, 3>{Triangulation::kNoTriangle, Triangulation::kNoTriangle,
                             Triangulation::kNoTriangle});

    NeighborGraph g = adjacency(tri);
    CHECK(g.edge_count() == 3);
    CHECK(g.adj[0] == std::vector<VertexId>{1, 2});
    CHECK(g.adj[1] == std::vector<VertexId>{0, 2});
    CHECK(g.adj[2] == std::vector<VertexId>{0, 1});
}

TEST_CASE("build_delaunay on the cocircular unit square is pinned") {
    PointList square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    auto tri = build_delaunay(square);
    REQUIRE(tri.triangles.size() == 2);
    // the index-ordered perturbation keeps the 0-2 diagonal
    CHECK(tri.triangles[0] == std::array<VertexId, 3>{0, 1, 2});
    CHECK(tri.triangles[1] == std::array<VertexId, 3>{0, 2, 3});

    NeighborGraph g = adjacency(tri);
    CHECK(g.edge_count() == 5);
    CHECK(g.adj[0].size() == 3);
    CHECK(g.adj[2].size() == 3);
    CHECK(g.adj[1].size() == 2);
    CHECK(g.adj[3].size() == 2);

    // identical across runs
    auto tri2 = build_delaunay(square);
    CHECK(tri.triangles == tri2.triangles);
}

TEST_CASE("build_delaunay rejects degenerate and invalid input") {
    CHECK_THROWS_AS(build_delaunay({{0, 0}, {1, 1}}), DegenerateInput);
    CHECK_THROWS_AS(build_delaunay({{0, 0}, {0, 0}, {0, 0}}), DegenerateInput);
    CHECK_THROWS_AS(build_delaunay({{0, 0}, {1, 0}, {2, 0}, {3, 0}}), DegenerateInput);
    // three distinct points but a duplicate row: caller must dedupe
    CHECK_THROWS_AS(build_delaunay({{0, 0}, {1, 0}, {0, 1}, {0, 0}}), InvalidParameter);
}

TEST_CASE("build_delaunay equals the brute-force oracle on random points") {
    auto pts = oracles::random_points(1234, 200);
    auto tri = build_delaunay(pts);

    auto want_tris = oracles::delaunay_triangles_bruteforce(pts);
    REQUIRE(tri.triangles.size() == want_tris.size());
    CHECK(tri.triangles == want_tris);

    auto got_edges = oracles::edge_set(adjacency(tri));
    auto want_edges = oracles::delaunay_edges_bruteforce(pts);
    CHECK(got_edges == want_edges);

    // degree sum identity against the oracle edge count
    std::size_t deg_sum = 0;
    for (const auto& a : adjacency(tri).adj) deg_sum += a.size();
    CHECK(deg_sum == 2 * want_edges.size());
}

TEST_CASE("Euler relation holds on random instances") {
    for (auto [seed, n] : std::vector<std::pair<std::uint64_t, std::size_t>>{
             {7, 10}, {8, 50}, {9, 120}}) {
        auto pts = oracles::random_points(seed, n);
        check_euler_and_empty_circle(build_delaunay(pts));
    }
}

TEST_CASE("grids and on-edge points triangulate cleanly") {
    SUBCASE("5x5 integer grid, heavily cocircular") {
        PointList pts;
        for (int y = 0; y < 5; ++y) {
            for (int x = 0; x < 5; ++x) pts.push_back({double(x), double(y)});
        }
        auto tri = build_delaunay(pts);
        check_euler_and_empty_circle(tri);
        auto again = build_delaunay(pts);
        CHECK(tri.triangles == again.triangles);
    }
    SUBCASE("midpoints landing exactly on existing edges") {
        PointList pts{{0, 0}, {4, 0}, {0, 4}, {2, 0}, {2, 2}, {0, 2}};
        check_euler_and_empty_circle(build_delaunay(pts));
    }
    SUBCASE("leading collinear run before the first proper triangle") {
        PointList pts{{0, 0}, {1, 0}, {2, 0}, {3, 0}, {1.5, 1}};
        auto tri = build_delaunay(pts);
        check_euler_and_empty_circle(tri);
        CHECK(tri.triangles.size() == 3); // 2n - h - 2 with every point on the hull
    }
    SUBCASE("hull extension along a line") {
        PointList pts{{0, 0}, {1, 0}, {0, 1}, {3, 0}, {5, 0}};
        check_euler_and_empty_circle(build_delaunay(pts));
    }
}

TEST_CASE("triangle adjacency is mutual and edge-consistent") {
    auto pts = oracles::random_points(77, 60);
    auto tri = build_delaunay(pts);
    for (std::size_t t = 0; t < tri.triangles.size(); ++t) {
        for (int k = 0; k < 3; ++k) {
            int nb = tri.neighbors[t][std::size_t(k)];
            if (nb == Triangulation::kNoTriangle) continue;
            // the neighbor must point back at t across the shared edge
            const auto& nv = tri.neighbors[std::size_t(nb)];
            CHECK(std::count(nv.begin(), nv.end(), int(t)) == 1);
        }
    }
}
