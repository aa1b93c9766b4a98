#pragma once

// Deterministic SVG and DOT rendering of chord diagrams, trees and forests.
// Marked point 0 sits at the bottom of the circle and the labels run
// clockwise, matching the convention used everywhere else.

#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "chords.hpp"
#include "forest.hpp"

namespace excseq {

namespace detail {

inline std::string fmt1(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", v);
    return buf;
}

struct Pt {
    double x, y;
};

inline Pt circle_point(int m, int n, double cx, double cy, double r) {
    double ang = (90.0 + 360.0 * m / n) * M_PI / 180.0;
    return {cx + r * std::cos(ang), cy + r * std::sin(ang)};
}

}  // namespace detail

inline std::string svg_diagram(const ChordSequence& s) {
    using detail::Pt;
    const double cx = 150, cy = 150, r = 120;
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"300\" height=\"300\" "
           "viewBox=\"0 0 300 300\">\n";
    out += "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
           "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto-start-reverse\">"
           "<path d=\"M 0 0 L 10 5 L 0 10 z\"/></marker></defs>\n";
    out += "<circle cx=\"150\" cy=\"150\" r=\"120\" fill=\"none\" stroke=\"black\"/>\n";
    for (int m = 0; m < s.n; ++m) {
        Pt p = detail::circle_point(m, s.n, cx, cy, r);
        Pt lp = detail::circle_point(m, s.n, cx, cy, r + 14);
        out += "<circle cx=\"" + detail::fmt1(p.x) + "\" cy=\"" + detail::fmt1(p.y) +
               "\" r=\"3\" fill=\"black\"/>\n";
        out += "<text x=\"" + detail::fmt1(lp.x) + "\" y=\"" + detail::fmt1(lp.y) +
               "\" font-size=\"13\" text-anchor=\"middle\" dominant-baseline=\"middle\">" +
               std::to_string(m) + "</text>\n";
    }
    for (size_t t = 0; t < s.items.size(); ++t) {
        const ChordObject& g = s.items[t];
        std::string pos = std::to_string(t + 1);
        if (g.is_loop()) {
            // small circle pulled toward the center from its marked point
            Pt p = detail::circle_point(g.from, s.n, cx, cy, r - 26);
            out += "<circle cx=\"" + detail::fmt1(p.x) + "\" cy=\"" + detail::fmt1(p.y) +
                   "\" r=\"12\" fill=\"none\" stroke=\"black\"/>\n";
            out += "<text x=\"" + detail::fmt1(p.x) + "\" y=\"" + detail::fmt1(p.y) +
                   "\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"middle\">" +
                   pos + "</text>\n";
        } else {
            Pt a = detail::circle_point(g.from, s.n, cx, cy, r);
            Pt b = detail::circle_point(g.to, s.n, cx, cy, r);
            out += "<line x1=\"" + detail::fmt1(a.x) + "\" y1=\"" + detail::fmt1(a.y) +
                   "\" x2=\"" + detail::fmt1(b.x) + "\" y2=\"" + detail::fmt1(b.y) +
                   "\" stroke=\"black\" marker-end=\"url(#arrow)\"/>\n";
            double mx = (a.x + 2 * b.x) / 3, my = (a.y + 2 * b.y) / 3;
            out += "<text x=\"" + detail::fmt1(mx) + "\" y=\"" + detail::fmt1(my - 4) +
                   "\" font-size=\"12\" text-anchor=\"middle\">" + pos + "</text>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

// Layered drawing: x by leaf order, y by depth; components left to right by
// root label.  An augmentation, when given, is printed in the corner.
inline std::string svg_forest(const RootedForest& f, const std::string& caption = "") {
    std::vector<int> depth(static_cast<size_t>(f.n), 0);
    for (int v = 1; v <= f.n; ++v) {
        int cur = v, d = 0;
        while (f.parent_of(cur) != 0) {
            cur = f.parent_of(cur);
            ++d;
        }
        depth[static_cast<size_t>(v - 1)] = d;
    }
    // post-order x positions
    std::vector<double> x(static_cast<size_t>(f.n), 0);
    double next = 0;
    auto place = [&](auto&& self, int v) -> double {
        auto kids = f.children_of(v);
        if (kids.empty()) return x[static_cast<size_t>(v - 1)] = next++;
        double lo = 1e9, hi = -1e9;
        for (int c : kids) {
            double cx = self(self, c);
            lo = std::min(lo, cx);
            hi = std::max(hi, cx);
        }
        return x[static_cast<size_t>(v - 1)] = (lo + hi) / 2;
    };
    for (int v = 1; v <= f.n; ++v)
        if (f.is_root(v)) place(place, v);
    int maxd = 0;
    for (int d : depth) maxd = std::max(maxd, d);
    double w = 60.0 * std::max(1.0, next) + 20, h = 60.0 * (maxd + 1) + 40;
    auto px = [&](int v) { return 40 + 60 * x[static_cast<size_t>(v - 1)]; };
    auto py = [&](int v) { return 30.0 + 60 * depth[static_cast<size_t>(v - 1)]; };
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fmt1(w) +
                      "\" height=\"" + detail::fmt1(h) + "\">\n";
    for (int v = 1; v <= f.n; ++v) {
        int p = f.parent_of(v);
        if (p == 0) continue;
        out += "<line x1=\"" + detail::fmt1(px(p)) + "\" y1=\"" + detail::fmt1(py(p)) +
               "\" x2=\"" + detail::fmt1(px(v)) + "\" y2=\"" + detail::fmt1(py(v)) +
               "\" stroke=\"black\"/>\n";
    }
    for (int v = 1; v <= f.n; ++v) {
        out += "<circle cx=\"" + detail::fmt1(px(v)) + "\" cy=\"" + detail::fmt1(py(v)) +
               "\" r=\"12\" fill=\"white\" stroke=\"black\"/>\n";
        out += "<text x=\"" + detail::fmt1(px(v)) + "\" y=\"" + detail::fmt1(py(v)) +
               "\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"middle\">" +
               std::to_string(v) + "</text>\n";
    }
    if (!caption.empty())
        out += "<text x=\"8\" y=\"" + detail::fmt1(h - 8) + "\" font-size=\"12\">" + caption +
               "</text>\n";
    out += "</svg>\n";
    return out;
}

inline std::string dot_forest(const RootedForest& f, const std::string& label = "") {
    std::string out = "digraph forest {\n";
    if (!label.empty()) out += "  label=\"" + label + "\";\n";
    for (int v = 1; v <= f.n; ++v) out += "  v" + std::to_string(v) + ";\n";
    for (int v = 1; v <= f.n; ++v)
        if (f.parent_of(v) != 0)
            out += "  v" + std::to_string(f.parent_of(v)) + " -> v" + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace excseq
