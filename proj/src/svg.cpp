#include "tourlab/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

namespace tourlab {

namespace {

constexpr double kViewport = 1000.0;
constexpr double kMargin = 40.0;

struct Mapper {
    double min_x = 0, min_y = 0, scale = 1;

    explicit Mapper(const Instance& inst) {
        double max_x = 0, max_y = 0;
        bool first = true;
        for (const Point& p : inst.points) {
            double x = rat_to_double(p.x), y = rat_to_double(p.y);
            if (first) {
                min_x = max_x = x;
                min_y = max_y = y;
                first = false;
            }
            min_x = std::min(min_x, x);
            max_x = std::max(max_x, x);
            min_y = std::min(min_y, y);
            max_y = std::max(max_y, y);
        }
        double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
        scale = (kViewport - 2 * kMargin) / span;
    }

    double x(double v) const { return kMargin + (v - min_x) * scale; }
    double y(double v) const { return kViewport - kMargin - (v - min_y) * scale; }  // y up
    double px(const Point& p) const { return x(rat_to_double(p.x)); }
    double py(const Point& p) const { return y(rat_to_double(p.y)); }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

void line(std::string& out, const std::string& cls, double x1, double y1, double x2, double y2,
          const std::string& style) {
    out += "<line class=\"" + cls + "\" x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" +
           num(x2) + "\" y2=\"" + num(y2) + "\" " + style + "/>\n";
}

void circle(std::string& out, const std::string& cls, double cx, double cy, double r,
            const std::string& fill) {
    out += "<circle class=\"" + cls + "\" cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" +
           num(r) + "\" fill=\"" + fill + "\"/>\n";
}

const char* kTourStyle = "stroke=\"#c62828\" stroke-width=\"2.5\" ";
const char* kInteriorStyle = "stroke=\"#1565c0\" stroke-width=\"2\" ";
const char* kExteriorStyle = "stroke=\"#1565c0\" stroke-width=\"2\" stroke-dasharray=\"2,5\" ";
const char* kOnTourStyle = "stroke=\"#1565c0\" stroke-width=\"2\" stroke-dasharray=\"9,6\" ";

const std::map<std::string, std::string> kDualColors = {
    {"interior-forward", "#2e7d32"},
    {"interior-backward", "#6a1b9a"},
    {"exterior-forward", "#ef6c00"},
    {"exterior-backward", "#00838f"},
};

}  // namespace

std::string render_svg(SvgStage stage, const PipelineArtifacts& art) {
    const Instance& inst = art.sub.v_prime;
    Mapper map(inst);

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    out += "<svg width=\"1000\" height=\"1000\" viewBox=\"0 0 1000 1000\" version=\"1.1\" "
           "xmlns=\"http://www.w3.org/2000/svg\">\n";
    out += "<rect width=\"1000\" height=\"1000\" fill=\"#ffffff\"/>\n";

    const Tour& t = art.sub.t_prime;
    const Tour& s = art.sub.s_prime;
    for (int i = 0; i < t.n(); ++i) {
        const Point& a = inst.points[t.at(i)];
        const Point& b = inst.points[t.at(i + 1)];
        line(out, "t-edge", map.px(a), map.py(a), map.px(b), map.py(b), kTourStyle);
    }

    if (stage == SvgStage::kTours) {
        for (int i = 0; i < s.n(); ++i) {
            const Point& a = inst.points[s.at(i)];
            const Point& b = inst.points[s.at(i + 1)];
            line(out, "s-edge", map.px(a), map.py(a), map.px(b), map.py(b),
                 "stroke=\"#2e7d32\" stroke-width=\"2\" stroke-dasharray=\"6,4\" ");
        }
    } else {
        auto draw_class = [&](const std::vector<DirectedEdge>& edges, const char* cls,
                              const char* style) {
            for (const DirectedEdge& e : edges) {
                const Point& a = inst.points[e.tail];
                const Point& b = inst.points[e.head];
                line(out, cls, map.px(a), map.py(a), map.px(b), map.py(b), style);
            }
        };
        draw_class(art.partition.interior, "s-interior", kInteriorStyle);
        draw_class(art.partition.exterior, "s-exterior", kExteriorStyle);
        draw_class(art.partition.on_tour, "s-on-tour", kOnTourStyle);
    }

    if (stage == SvgStage::kArborescence) {
        for (const auto& entry : art.arbs.entries) {
            std::string color = kDualColors.count(entry.label) ? kDualColors.at(entry.label) : "#444444";
            const RegionTree& rt = entry.build.regions;

            // Dual vertices sit at the mean of each region's boundary vertices.
            const std::vector<int>& path = entry.label.rfind("interior", 0) == 0
                                               ? art.partition.interior_path
                                               : art.partition.exterior_path;
            std::vector<double> cx(rt.regions.size(), 0.0), cy(rt.regions.size(), 0.0);
            for (size_t r = 0; r < rt.regions.size(); ++r) {
                std::vector<int> verts;
                for (int pos : rt.regions[r].path_edges) {
                    verts.push_back(path[pos]);
                    verts.push_back(path[pos + 1]);
                }
                for (int cid : rt.regions[r].chord_ids) {
                    verts.push_back(entry.build.chords[cid].tail);
                    verts.push_back(entry.build.chords[cid].head);
                }
                std::sort(verts.begin(), verts.end());
                verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
                double sx = 0, sy = 0;
                for (int v : verts) {
                    sx += map.px(inst.points[v]);
                    sy += map.py(inst.points[v]);
                }
                cx[r] = sx / static_cast<double>(verts.size());
                cy[r] = sy / static_cast<double>(verts.size());
            }
            for (size_t cid = 0; cid < rt.chord_outer.size(); ++cid) {
                line(out, "dual-edge", cx[rt.chord_outer[cid]], cy[rt.chord_outer[cid]],
                     cx[rt.chord_inner[cid]], cy[rt.chord_inner[cid]],
                     "stroke=\"" + color + "\" stroke-width=\"2.5\" ");
            }
            for (size_t r = 0; r < rt.regions.size(); ++r) {
                circle(out, static_cast<int>(r) == rt.root ? "dual-root" : "dual-vertex",
                       cx[r], cy[r], static_cast<int>(r) == rt.root ? 7.0 : 5.0, color);
            }
        }
    }

    for (int i = 0; i < inst.n(); ++i) {
        bool added = i >= art.sub.original_n;
        circle(out, added ? "crossing-point" : "point", map.px(inst.points[i]),
               map.py(inst.points[i]), 4.0, added ? "#1e88e5" : "#000000");
    }

    out += "</svg>\n";
    return out;
}

}  // namespace tourlab
