#include "dnnclust/render.hpp"

#include "dnnclust/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <unordered_map>

namespace dnnclust {
namespace {

const char* kPalette[] = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#aec7e8", "#ffbb78",
};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

// piecewise-linear blue -> pale -> red ramp over t in [0, 1]
std::string potential_color(double t) {
    struct Rgb {
        int r, g, b;
    };
    const Rgb lo{0x2c, 0x7b, 0xb6}, mid{0xff, 0xff, 0xbf}, hi{0xd7, 0x19, 0x1c};
    t = std::clamp(t, 0.0, 1.0);
    Rgb a = t < 0.5 ? lo : mid;
    Rgb b = t < 0.5 ? mid : hi;
    double u = t < 0.5 ? t * 2.0 : (t - 0.5) * 2.0;
    auto lerp = [u](int x, int y) { return static_cast<int>(std::lround(x + (y - x) * u)); };
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", lerp(a.r, b.r), lerp(a.g, b.g),
                  lerp(a.b, b.b));
    return buf;
}

} // namespace

std::string render_svg(const std::vector<ResultRow>& rows,
                       const std::vector<std::pair<VertexId, VertexId>>* graph_edges,
                       const RenderOptions& opts) {
    if (rows.empty()) throw InvalidParameter("render_svg: no rows");

    double xmin = rows[0].point.x, xmax = xmin;
    double ymin = rows[0].point.y, ymax = ymin;
    double pmin = rows[0].potential, pmax = pmin;
    for (const auto& r : rows) {
        xmin = std::min(xmin, r.point.x);
        xmax = std::max(xmax, r.point.x);
        ymin = std::min(ymin, r.point.y);
        ymax = std::max(ymax, r.point.y);
        pmin = std::min(pmin, r.potential);
        pmax = std::max(pmax, r.potential);
    }
    double span_x = xmax - xmin, span_y = ymax - ymin;
    if (span_x <= 0.0) span_x = 1.0;
    if (span_y <= 0.0) span_y = 1.0;

    const double margin = 40.0;
    const double plot_w = 720.0;
    const double scale = plot_w / std::max(span_x, span_y);
    const double width = span_x * scale + 2 * margin;
    const double height = span_y * scale + 2 * margin;
    auto sx = [&](double x) { return margin + (x - xmin) * scale; };
    auto sy = [&](double y) { return height - margin - (y - ymin) * scale; };

    std::unordered_map<VertexId, const ResultRow*> by_index;
    by_index.reserve(rows.size());
    for (const auto& r : rows) by_index.emplace(r.index, &r);

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" +
           fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) + "\">\n";
    svg += "<defs><marker id=\"arrow\" viewBox=\"0 0 8 6\" refX=\"8\" refY=\"3\" "
           "markerWidth=\"8\" markerHeight=\"6\" orient=\"auto\">"
           "<path d=\"M0,0 L8,3 L0,6 z\" fill=\"#333333\"/></marker></defs>\n";
    svg += "<rect width=\"" + fmt(width) + "\" height=\"" + fmt(height) +
           "\" fill=\"#ffffff\"/>\n";

    if (graph_edges && opts.draw_graph_edges && !graph_edges->empty()) {
        svg += "<g class=\"graph-edges\" stroke=\"#c8c8c8\" stroke-width=\"0.8\">\n";
        for (auto [i, j] : *graph_edges) {
            auto a = by_index.find(i);
            auto b = by_index.find(j);
            if (a == by_index.end() || b == by_index.end()) {
                throw InvalidParameter("render_svg: edge endpoint " +
                                       std::to_string(a == by_index.end() ? i : j) +
                                       " not present in result rows");
            }
            svg += "<line x1=\"" + fmt(sx(a->second->point.x)) + "\" y1=\"" +
                   fmt(sy(a->second->point.y)) + "\" x2=\"" + fmt(sx(b->second->point.x)) +
                   "\" y2=\"" + fmt(sy(b->second->point.y)) + "\"/>\n";
        }
        svg += "</g>\n";
    }

    if (opts.draw_forest) {
        svg += "<g class=\"forest-edges\" stroke=\"#333333\" stroke-width=\"1.2\">\n";
        for (const auto& r : rows) {
            if (!r.parent) continue;
            auto p = by_index.find(*r.parent);
            if (p == by_index.end()) {
                throw InvalidParameter("render_svg: parent " + std::to_string(*r.parent) +
                                       " not present in result rows");
            }
            double x1 = sx(r.point.x), y1 = sy(r.point.y);
            double x2 = sx(p->second->point.x), y2 = sy(p->second->point.y);
            // pull the arrowhead back to the marker edge of the parent dot
            double dx = x2 - x1, dy = y2 - y1;
            double len = std::sqrt(dx * dx + dy * dy);
            double trim = opts.point_radius + 1.0;
            if (len > trim * 2) {
                x2 -= dx / len * trim;
                y2 -= dy / len * trim;
            }
            svg += "<line x1=\"" + fmt(x1) + "\" y1=\"" + fmt(y1) + "\" x2=\"" + fmt(x2) +
                   "\" y2=\"" + fmt(y2) + "\" marker-end=\"url(#arrow)\"/>\n";
        }
        svg += "</g>\n";
    }

    svg += "<g class=\"points\" stroke=\"#222222\" stroke-width=\"0.4\">\n";
    for (const auto& r : rows) {
        std::string fill;
        if (opts.color_by == RenderOptions::ColorBy::Cluster) {
            fill = kPalette[static_cast<std::size_t>(r.cluster) % kPaletteSize];
        } else {
            double t = pmax > pmin ? (r.potential - pmin) / (pmax - pmin) : 0.5;
            fill = potential_color(t);
        }
        svg += "<circle cx=\"" + fmt(sx(r.point.x)) + "\" cy=\"" + fmt(sy(r.point.y)) +
               "\" r=\"" + fmt(opts.point_radius) + "\" fill=\"" + fill + "\"/>\n";
    }
    svg += "</g>\n</svg>\n";
    return svg;
}

} // namespace dnnclust
