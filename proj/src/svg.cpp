#include "intervalia/svg.hpp"

#include "intervalia/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace intervalia {

namespace {

struct Doc {
    std::ostringstream body;
    int width = 0, height = 0;

    std::string finish() {
        std::ostringstream out;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
            << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
            << body.str() << "</svg>\n";
        return out.str();
    }
};

const char* color_of(int elem, const RenderOptions& opt) {
    for (int e : opt.longElems)
        if (e == elem) return "#cc0000";
    for (int e : opt.shortElems)
        if (e == elem) return "#008800";
    return "#000000";
}

} // namespace

std::string render_representation(const IntervalFamily& f, const RenderOptions& opt,
                                  const Rat* helly) {
    const int n = f.size();
    // clear denominators so every coordinate is an exact integer
    std::vector<Rat> vals;
    for (const auto& [l, r] : f.iv) {
        vals.push_back(l);
        vals.push_back(r);
    }
    if (helly) vals.push_back(*helly);
    Int scale = lcm_denominators(vals);
    auto scaled = [&](const Rat& q) {
        Rat s = q * Rat(scale);
        return s.get_num(); // integer by construction
    };
    Int minX = n ? scaled(f.left(0)) : Int(0), maxX = minX;
    for (const auto& [l, r] : f.iv) {
        minX = std::min(minX, scaled(l));
        maxX = std::max(maxX, scaled(r));
    }
    Int span = maxX - minX;
    if (span == 0) span = 1;
    // integer pixels per unit, at least 1
    Int unit = Int(opt.unitMin);
    long spanL = span.get_si();
    long px = std::max(1L, 720 / std::max(1L, spanL));
    unit = Int(std::max(px, 1L));

    const int margin = 40;
    Doc doc;
    doc.width = margin * 2 + static_cast<int>(Int(span * unit).get_si());
    doc.height = margin * 2 + opt.trackHeight * n;
    auto X = [&](const Rat& q) {
        Int v = (scaled(q) - minX) * unit;
        return margin + static_cast<int>(v.get_si());
    };

    // endpoint gridlines, sorted and deduplicated
    std::set<Int> lines;
    for (const auto& [l, r] : f.iv) {
        lines.insert(scaled(l));
        lines.insert(scaled(r));
    }
    int y0 = margin - 12, y1 = margin + opt.trackHeight * n;
    for (const Int& g : lines) {
        int x = margin + static_cast<int>(Int((g - minX) * unit).get_si());
        doc.body << "<line class=\"grid\" x1=\"" << x << "\" y1=\"" << y0 << "\" x2=\"" << x
                 << "\" y2=\"" << y1 << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    }
    if (helly) {
        int x = X(*helly);
        doc.body << "<line class=\"helly\" x1=\"" << x << "\" y1=\"" << y0 << "\" x2=\"" << x
                 << "\" y2=\"" << y1
                 << "\" stroke=\"#000000\" stroke-width=\"1\" stroke-dasharray=\"3,3\"/>\n";
    }
    // tracks sorted by (l, r, id) for a stable layout
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (f.left(a) != f.left(b)) return f.left(a) < f.left(b);
        if (f.right(a) != f.right(b)) return f.right(a) < f.right(b);
        return a < b;
    });
    for (int t = 0; t < n; ++t) {
        int e = order[t];
        int y = margin + opt.trackHeight * t + opt.trackHeight / 2;
        int xa = X(f.left(e)), xb = X(f.right(e));
        const char* col = color_of(e, opt);
        doc.body << "<line id=\"iv" << e + 1 << "\" x1=\"" << xa << "\" y1=\"" << y << "\" x2=\""
                 << xb << "\" y2=\"" << y << "\" stroke=\"" << col << "\" stroke-width=\"3\"/>\n";
        doc.body << "<circle cx=\"" << xa << "\" cy=\"" << y << "\" r=\"3\" fill=\"" << col
                 << "\"/>\n<circle cx=\"" << xb << "\" cy=\"" << y << "\" r=\"3\" fill=\"" << col
                 << "\"/>\n";
        doc.body << "<text x=\"" << xa - 16 << "\" y=\"" << y + 4 << "\" font-size=\"11\">" << e + 1
                 << "</text>\n";
    }
    return doc.finish();
}

std::string render_hasse(const IntervalOrder& p, const RenderOptions& opt) {
    const int n = p.n;
    // layer = longest chain strictly below
    std::vector<int> layer(n, 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (p.less(x, y) && layer[y] < layer[x] + 1) {
                    layer[y] = layer[x] + 1;
                    changed = true;
                }
    }
    int layers = 0;
    for (int x = 0; x < n; ++x) layers = std::max(layers, layer[x] + 1);
    std::vector<std::vector<int>> rows(layers);
    for (int x = 0; x < n; ++x) rows[layer[x]].push_back(x);

    const int cw = 64, ch = 64, margin = 40;
    int maxRow = 0;
    for (auto& r : rows) maxRow = std::max(maxRow, static_cast<int>(r.size()));
    Doc doc;
    doc.width = margin * 2 + cw * std::max(1, maxRow);
    doc.height = margin * 2 + ch * layers;
    std::vector<std::pair<int, int>> pos(n);
    for (int ly = 0; ly < layers; ++ly)
        for (size_t i = 0; i < rows[ly].size(); ++i) {
            int x = margin + cw / 2 + static_cast<int>(i) * cw;
            int y = doc.height - margin - ch / 2 - ly * ch;
            pos[rows[ly][i]] = {x, y};
        }
    // covering edges only
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (!p.less(x, y)) continue;
            bool cover = true;
            for (int z = 0; z < n && cover; ++z)
                if (p.less(x, z) && p.less(z, y)) cover = false;
            if (!cover) continue;
            doc.body << "<line x1=\"" << pos[x].first << "\" y1=\"" << pos[x].second << "\" x2=\""
                     << pos[y].first << "\" y2=\"" << pos[y].second
                     << "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
        }
    for (int x = 0; x < n; ++x) {
        doc.body << "<circle id=\"el" << x + 1 << "\" cx=\"" << pos[x].first << "\" cy=\""
                 << pos[x].second << "\" r=\"12\" fill=\"#ffffff\" stroke=\"" << color_of(x, opt)
                 << "\" stroke-width=\"2\"/>\n";
        doc.body << "<text x=\"" << pos[x].first - 5 << "\" y=\"" << pos[x].second + 4
                 << "\" font-size=\"11\">" << x + 1 << "</text>\n";
    }
    return doc.finish();
}

std::string render_pp(const IntervalOrder& p, const RenderOptions& opt) {
    PPGraph g = pp_graph(p);
    const int n = g.n;
    const int cw = 72, margin = 48;
    int cols = std::max(1, (n + 2) / 3);
    Doc doc;
    doc.width = margin * 2 + cw * cols;
    doc.height = margin * 2 + cw * 3;
    std::vector<std::pair<int, int>> pos(n);
    for (int x = 0; x < n; ++x) {
        int row = x % 3, colIdx = x / 3;
        pos[x] = {margin + cw / 2 + colIdx * cw, margin + cw / 2 + row * cw};
    }
    doc.body << "<defs><marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" refX=\"7\" "
                "refY=\"3\" orient=\"auto\"><path d=\"M0,0 L7,3 L0,6 z\" fill=\"#000000\"/>"
                "</marker></defs>\n";
    for (size_t i = 0; i < g.arcs.size(); ++i) {
        auto [u, v] = g.arcs[i];
        doc.body << "<line class=\"arc\" x1=\"" << pos[u].first << "\" y1=\"" << pos[u].second
                 << "\" x2=\"" << pos[v].first << "\" y2=\"" << pos[v].second
                 << "\" stroke=\"#000000\" stroke-width=\"1\" marker-end=\"url(#arrow)\"/>\n";
    }
    for (int x = 0; x < n; ++x) {
        doc.body << "<circle id=\"pp" << x + 1 << "\" cx=\"" << pos[x].first << "\" cy=\""
                 << pos[x].second << "\" r=\"12\" fill=\"#ffffff\" stroke=\"" << color_of(x, opt)
                 << "\" stroke-width=\"2\"/>\n";
        doc.body << "<text x=\"" << pos[x].first - 5 << "\" y=\"" << pos[x].second + 4
                 << "\" font-size=\"11\">" << x + 1 << "</text>\n";
    }
    return doc.finish();
}

} // namespace intervalia
