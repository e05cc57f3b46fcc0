#include "sca/render.hpp"

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

namespace sca {

namespace {

char glyph(Strand s) {
    switch (s) {
        case Strand::Straight: return '|';
        case Strand::TurnRight: return '\\';
        case Strand::TurnLeft: return '/';
        case Strand::None: break;
    }
    return ' ';
}

// Position extent across the rows that carry strands; false if none do.
bool extent(const Pattern& p, long long& lo, long long& hi) {
    bool any = false;
    for (const Generation& g : p) {
        if (g.empty()) continue;
        const long long last = g.base() + 2 * static_cast<long long>(g.width()) - 1;
        lo = any ? std::min(lo, g.base()) : g.base();
        hi = any ? std::max(hi, last) : last;
        any = true;
    }
    return any;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

}  // namespace

std::string render_ascii(const Pattern& p) {
    if (p.empty()) return "";
    long long lo = 0, hi = 0;
    const bool any = extent(p, lo, hi);
    std::string out;
    for (const Generation& g : p) {
        std::string line(any ? static_cast<std::size_t>(hi - lo + 1) : 0, ' ');
        for (std::size_t k = 0; k < g.width(); ++k) {
            const CellContent c = g.cells()[k];
            const std::size_t col = static_cast<std::size_t>(g.base() + 2 * static_cast<long long>(k) - lo);
            if (c == CellContent::CrossingZ || c == CellContent::CrossingS) {
                line[col] = c == CellContent::CrossingZ ? 'X' : '%';
            } else {
                line[col] = glyph(left_slot(c));
                line[col + 1] = glyph(right_slot(c));
            }
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

std::string render_svg(const Pattern& p) {
    if (p.empty()) return "";
    constexpr double unit = 16.0, margin = 8.0;

    struct Seg {
        double x0, y0, x1, y1;
        bool under;
    };
    std::vector<Seg> segs;
    long long lo = 0, hi = 0;
    extent(p, lo, hi);
    double minx = 0.0, maxx = 0.0;
    bool anyx = false;

    for (std::size_t i = 0; i < p.size(); ++i) {
        const Generation& g = p[i];
        const double y0 = margin + static_cast<double>(i) * unit;
        const double y1 = y0 + unit;
        auto xpos = [&](long long pos) { return margin + static_cast<double>(pos - lo) * unit; };
        auto add = [&](long long from, long long to, bool under) {
            segs.push_back({xpos(from), y0, xpos(to), y1, under});
            const double a = std::min(xpos(from), xpos(to));
            const double b = std::max(xpos(from), xpos(to));
            minx = anyx ? std::min(minx, a) : a;
            maxx = anyx ? std::max(maxx, b) : b;
            anyx = true;
        };
        for (std::size_t k = 0; k < g.width(); ++k) {
            const CellContent c = g.cells()[k];
            const long long cell = g.base() + 2 * static_cast<long long>(k);
            if (is_crossing(c)) {
                // CrossingZ: the strand entering on the right passes over.
                add(cell, cell + 1, c == CellContent::CrossingZ);
                add(cell + 1, cell, c == CellContent::CrossingS);
                continue;
            }
            if (const Strand l = left_slot(c); l != Strand::None)
                add(cell, cell + displacement(l), false);
            if (const Strand r = right_slot(c); r != Strand::None)
                add(cell + 1, cell + 1 + displacement(r), false);
        }
    }

    const double width = (anyx ? maxx - minx : 0.0) + 2 * margin;
    const double height = static_cast<double>(p.size()) * unit + 2 * margin;
    const double shift = anyx ? margin - minx : 0.0;

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + num(width) +
                      " " + num(height) + "\">\n";
    out += "<g stroke=\"black\" stroke-width=\"2\" stroke-linecap=\"round\" fill=\"none\">\n";
    for (const Seg& s : segs) {
        const double x0 = s.x0 + shift, x1 = s.x1 + shift;
        auto line = [&](double ax, double ay, double bx, double by) {
            out += "<line x1=\"" + num(ax) + "\" y1=\"" + num(ay) + "\" x2=\"" + num(bx) +
                   "\" y2=\"" + num(by) + "\"/>\n";
        };
        if (!s.under) {
            line(x0, s.y0, x1, s.y1);
            continue;
        }
        // leave the middle fifth open so the over strand reads as on top
        line(x0, s.y0, x0 + 0.4 * (x1 - x0), s.y0 + 0.4 * (s.y1 - s.y0));
        line(x0 + 0.6 * (x1 - x0), s.y0 + 0.6 * (s.y1 - s.y0), x1, s.y1);
    }
    out += "</g>\n</svg>\n";
    return out;
}

}  // namespace sca
