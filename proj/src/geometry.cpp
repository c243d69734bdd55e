#include "dnnclust/geometry.hpp"

#include "dnnclust/errors.hpp"
#include "dnnclust/predicates.hpp"

#include <algorithm>
#include <cstring>
#include <unordered_map>
#include <vector>

namespace dnnclust {
namespace {

using detail::incircle_perturbed;
using detail::orient2d_sign;

// Hash key for a point; -0.0 folds onto 0.0 so numerically equal coordinates
// collide.
std::uint64_t coord_bits(double v) {
    if (v == 0.0) v = 0.0;
    std::uint64_t b;
    std::memcpy(&b, &v, sizeof b);
    return b;
}

struct PointKey {
    std::uint64_t x, y;
    bool operator==(const PointKey&) const = default;
};

struct PointKeyHash {
    std::size_t operator()(const PointKey& k) const {
        std::uint64_t h = k.x * 0x9E3779B97F4A7C15ull;
        h ^= k.y + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

PointKey key_of(const Point2& p) { return PointKey{coord_bits(p.x), coord_bits(p.y)}; }

// ---------------------------------------------------------------------------
// Bowyer–Watson with ghost triangles
//
// Ghost triangles are stored as (a, b, kGhost) where (a, b) is a directed
// hull edge whose OUTSIDE halfplane lies to the left of a->b; the adjacent
// solid triangle contains the reversed edge (b, a). Every edge of every
// triangle therefore has exactly one neighbor, which makes hull growth a
// regular case of cavity retriangulation.
// ---------------------------------------------------------------------------

constexpr VertexId kGhost = -1;
constexpr int kUnlinked = -2;

struct Tri {
    std::array<VertexId, 3> v{};
    std::array<int, 3> nbr{kUnlinked, kUnlinked, kUnlinked}; // nbr[k] across edge opposite v[k]
    bool alive = true;

    bool is_ghost() const { return v[2] == kGhost; }
};

// p strictly inside the open segment (a, b); requires a, b, p collinear.
bool strictly_between(const Point2& a, const Point2& b, const Point2& p) {
    if (a.x != b.x) return (a.x < p.x) != (b.x < p.x) && p.x != a.x && p.x != b.x;
    return (a.y < p.y) != (b.y < p.y) && p.y != a.y && p.y != b.y;
}

class DelaunayBuilder {
public:
    explicit DelaunayBuilder(const PointList& pts) : pts_(pts) {}

    Triangulation run() {
        bootstrap();
        for (VertexId j = 2; j < static_cast<VertexId>(pts_.size()); ++j) {
            if (j != third_) insert(j);
        }
        return finalize();
    }

private:
    const PointList& pts_;
    std::vector<Tri> tris_;
    std::vector<std::uint32_t> stamp_;
    std::vector<char> conflict_;
    std::uint32_t epoch_ = 0;
    int hint_ = 0;
    VertexId third_ = -1;

    const Point2& pt(VertexId v) const { return pts_[static_cast<std::size_t>(v)]; }

    int add_tri(VertexId a, VertexId b, VertexId c) {
        // keep ghosts canonical: kGhost in slot 2
        std::array<VertexId, 3> v{a, b, c};
        while (v[0] == kGhost || v[1] == kGhost) {
            v = {v[1], v[2], v[0]};
        }
        tris_.push_back(Tri{v, {kUnlinked, kUnlinked, kUnlinked}, true});
        stamp_.push_back(0);
        conflict_.push_back(0);
        return static_cast<int>(tris_.size()) - 1;
    }

    int slot_of_edge(int t, VertexId from, VertexId to) const {
        const auto& v = tris_[static_cast<std::size_t>(t)].v;
        for (int k = 0; k < 3; ++k) {
            if (v[(k + 1) % 3] == from && v[(k + 2) % 3] == to) return k;
        }
        throw InternalError("delaunay: adjacency link not found");
    }

    void link(int t1, int k1, int t2) {
        tris_[static_cast<std::size_t>(t1)].nbr[static_cast<std::size_t>(k1)] = t2;
    }

    void bootstrap() {
        const auto n = static_cast<VertexId>(pts_.size());
        if (n < 3) throw DegenerateInput("delaunay: need at least 3 distinct points");
        for (VertexId j = 2; j < n; ++j) {
            if (orient2d_sign(pt(0), pt(1), pt(j)) != 0) {
                third_ = j;
                break;
            }
        }
        if (third_ < 0) throw DegenerateInput("delaunay: all points are collinear");

        VertexId a = 0, b = 1, c = third_;
        if (orient2d_sign(pt(a), pt(b), pt(c)) < 0) std::swap(b, c);

        int t0 = add_tri(a, b, c);
        int gab = add_tri(b, a, kGhost);
        int gbc = add_tri(c, b, kGhost);
        int gca = add_tri(a, c, kGhost);

        link(t0, 0, gbc); // edge b->c
        link(t0, 1, gca); // edge c->a
        link(t0, 2, gab); // edge a->b
        link(gab, 2, t0);
        link(gbc, 2, t0);
        link(gca, 2, t0);
        // ghost ring around kGhost
        link(gab, 0, gca); // edge a->ghost
        link(gab, 1, gbc); // edge ghost->b
        link(gbc, 0, gab); // edge b->ghost
        link(gbc, 1, gca); // edge ghost->c
        link(gca, 0, gbc); // edge c->ghost
        link(gca, 1, gab); // edge ghost->a
        hint_ = t0;
    }

    bool conflicts(int t, const Point2& p, VertexId pid) const {
        const Tri& tr = tris_[static_cast<std::size_t>(t)];
        if (!tr.is_ghost()) {
            return incircle_perturbed(pt(tr.v[0]), tr.v[0], pt(tr.v[1]), tr.v[1],
                                      pt(tr.v[2]), tr.v[2], p, pid) > 0;
        }
        const Point2& a = pt(tr.v[0]);
        const Point2& b = pt(tr.v[1]);
        int o = orient2d_sign(a, b, p);
        if (o != 0) return o > 0;
        // On the hull edge's line: the limit circumdisk of a ghost triangle is
        // the open outer halfplane plus the open segment itself.
        return strictly_between(a, b, p);
    }

    int locate(const Point2& p) const {
        int t = hint_;
        std::size_t steps_left = 4 * tris_.size() + 16;
        while (steps_left-- > 0) {
            const Tri& tr = tris_[static_cast<std::size_t>(t)];
            int next = -1;
            for (int k = 0; k < 3; ++k) {
                VertexId x = tr.v[(k + 1) % 3];
                VertexId y = tr.v[(k + 2) % 3];
                if (orient2d_sign(pt(x), pt(y), p) < 0) {
                    next = tr.nbr[static_cast<std::size_t>(k)];
                    break;
                }
            }
            if (next < 0) return t;
            if (tris_[static_cast<std::size_t>(next)].is_ghost()) return next;
            t = next;
        }
        throw InternalError("delaunay: point location walk did not terminate");
    }

    void insert(VertexId pid) {
        const Point2& p = pt(pid);
        int start = locate(p);
        if (!conflicts(start, p, pid)) {
            throw InternalError("delaunay: located triangle does not conflict");
        }

        ++epoch_;
        std::vector<int> cavity;
        std::vector<std::pair<int, int>> boundary; // (cavity tri, slot)
        cavity.push_back(start);
        stamp_[static_cast<std::size_t>(start)] = epoch_;
        conflict_[static_cast<std::size_t>(start)] = 1;
        for (std::size_t qi = 0; qi < cavity.size(); ++qi) {
            int t = cavity[qi];
            for (int k = 0; k < 3; ++k) {
                int nb = tris_[static_cast<std::size_t>(t)].nbr[static_cast<std::size_t>(k)];
                auto ub = static_cast<std::size_t>(nb);
                if (stamp_[ub] != epoch_) {
                    stamp_[ub] = epoch_;
                    conflict_[ub] = conflicts(nb, p, pid) ? 1 : 0;
                    if (conflict_[ub]) cavity.push_back(nb);
                }
                if (!conflict_[ub]) boundary.emplace_back(t, k);
            }
        }

        // Retriangulate: one new triangle per boundary edge, fanned around pid.
        std::unordered_map<std::uint64_t, std::pair<int, int>> open_edges;
        open_edges.reserve(boundary.size() * 2);
        auto edge_key = [](VertexId u, VertexId w) {
            return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
                   static_cast<std::uint32_t>(w);
        };

        int first_solid = -1;
        for (auto [t, k] : boundary) {
            const Tri& tr = tris_[static_cast<std::size_t>(t)];
            VertexId x = tr.v[(k + 1) % 3];
            VertexId y = tr.v[(k + 2) % 3];
            int outer = tr.nbr[static_cast<std::size_t>(k)];
            int nid = add_tri(x, y, pid);
            Tri& nt = tris_[static_cast<std::size_t>(nid)];
            if (!nt.is_ghost()) {
                if (orient2d_sign(pt(nt.v[0]), pt(nt.v[1]), pt(nt.v[2])) <= 0) {
                    throw InternalError("delaunay: degenerate cavity triangle");
                }
                if (first_solid < 0) first_solid = nid;
            }
            int k_new = slot_of_edge(nid, x, y);
            int k_out = slot_of_edge(outer, y, x);
            link(nid, k_new, outer);
            link(outer, k_out, nid);
            for (int k2 = 0; k2 < 3; ++k2) {
                if (k2 == k_new) continue;
                VertexId u = nt.v[(k2 + 1) % 3];
                VertexId w = nt.v[(k2 + 2) % 3];
                auto it = open_edges.find(edge_key(w, u));
                if (it != open_edges.end()) {
                    link(nid, k2, it->second.first);
                    link(it->second.first, it->second.second, nid);
                    open_edges.erase(it);
                } else {
                    open_edges.emplace(edge_key(u, w), std::make_pair(nid, k2));
                }
            }
        }
        if (!open_edges.empty()) throw InternalError("delaunay: cavity boundary not closed");
        if (first_solid < 0) throw InternalError("delaunay: insertion created no solid triangle");

        for (int t : cavity) tris_[static_cast<std::size_t>(t)].alive = false;
        hint_ = first_solid;
    }

    Triangulation finalize() const {
        Triangulation out;
        out.points = pts_;
        for (const Tri& t : tris_) {
            if (!t.alive || t.is_ghost()) continue;
            auto v = t.v;
            // canonical rotation: smallest vertex first, CCW order preserved
            int r = 0;
            if (v[1] < v[0] && v[1] <= v[2]) r = 1;
            if (v[2] < v[0] && v[2] < v[1]) r = 2;
            out.triangles.push_back({v[r], v[(r + 1) % 3], v[(r + 2) % 3]});
        }
        std::sort(out.triangles.begin(), out.triangles.end());

        // rebuild adjacency in public numbering
        std::unordered_map<std::uint64_t, int> by_edge;
        by_edge.reserve(out.triangles.size() * 3);
        auto edge_key = [](VertexId u, VertexId w) {
            return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
                   static_cast<std::uint32_t>(w);
        };
        for (std::size_t t = 0; t < out.triangles.size(); ++t) {
            const auto& v = out.triangles[t];
            for (int k = 0; k < 3; ++k) {
                by_edge[edge_key(v[(k + 1) % 3], v[(k + 2) % 3])] = static_cast<int>(t);
            }
        }
        out.neighbors.resize(out.triangles.size());
        for (std::size_t t = 0; t < out.triangles.size(); ++t) {
            const auto& v = out.triangles[t];
            for (int k = 0; k < 3; ++k) {
                auto it = by_edge.find(edge_key(v[(k + 2) % 3], v[(k + 1) % 3]));
                out.neighbors[t][static_cast<std::size_t>(k)] =
                    it == by_edge.end() ? Triangulation::kNoTriangle : it->second;
            }
        }
        return out;
    }
};

} // namespace

std::size_t NeighborGraph::edge_count() const {
    std::size_t deg = 0;
    for (const auto& a : adj) deg += a.size();
    return deg / 2;
}

std::vector<std::pair<VertexId, VertexId>> NeighborGraph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edge_count());
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j : adj[static_cast<std::size_t>(i)]) {
            if (i < j) out.emplace_back(i, j);
        }
    }
    return out; // per-vertex lists are sorted, so this is lexicographic already
}

bool NeighborGraph::has_edge(VertexId i, VertexId j) const {
    const auto& a = adj[static_cast<std::size_t>(i)];
    return std::binary_search(a.begin(), a.end(), j);
}

DedupMap dedupe_points(const PointList& points) {
    if (points.empty()) throw InvalidParameter("dedupe_points: empty input");
    DedupMap out;
    out.remap.resize(points.size());
    std::unordered_map<PointKey, VertexId, PointKeyHash> seen;
    seen.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!is_finite(points[i])) {
            throw InvalidParameter("dedupe_points: non-finite coordinate at index " +
                                   std::to_string(i));
        }
        auto [it, inserted] =
            seen.emplace(key_of(points[i]), static_cast<VertexId>(out.unique_points.size()));
        if (inserted) out.unique_points.push_back(points[i]);
        out.remap[i] = it->second;
    }
    return out;
}

Triangulation build_delaunay(const PointList& points) {
    DedupMap dedup = dedupe_points(points); // also validates finiteness
    if (dedup.unique_points.size() < 3) {
        throw DegenerateInput("delaunay: need at least 3 distinct points, got " +
                              std::to_string(dedup.unique_points.size()));
    }
    if (dedup.unique_points.size() != points.size()) {
        throw InvalidParameter("delaunay: input contains duplicate points; dedupe first");
    }
    return DelaunayBuilder(points).run();
}

NeighborGraph adjacency(const Triangulation& tri) {
    NeighborGraph g;
    g.n = static_cast<VertexId>(tri.points.size());
    g.adj.resize(tri.points.size());
    for (const auto& t : tri.triangles) {
        for (int k = 0; k < 3; ++k) {
            VertexId u = t[static_cast<std::size_t>(k)];
            VertexId w = t[(static_cast<std::size_t>(k) + 1) % 3];
            g.adj[static_cast<std::size_t>(u)].push_back(w);
            g.adj[static_cast<std::size_t>(w)].push_back(u);
        }
    }
    for (auto& a : g.adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return g;
}

} // namespace dnnclust
