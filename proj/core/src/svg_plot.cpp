// Copyright 2026 The tokq authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "tokq/svg_plot.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "tokq/stats.hpp"

namespace tokq {

namespace {

std::string xml_escape(const std::string &text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '&':
            out += "&amp;";
            break;
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '"':
            out += "&quot;";
            break;
        default:
            out += c;
        }
    }
    return out;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

struct BoxStats {
    double q1, median, q3;
    double whisker_lo, whisker_hi;
    std::vector<double> outliers;
};

BoxStats box_stats(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    BoxStats b;
    b.q1 = quantile_sorted(values, 0.25);
    b.median = quantile_sorted(values, 0.5);
    b.q3 = quantile_sorted(values, 0.75);
    const double iqr = b.q3 - b.q1;
    const double lo_fence = b.q1 - 1.5 * iqr;
    const double hi_fence = b.q3 + 1.5 * iqr;
    b.whisker_lo = b.q3;
    b.whisker_hi = b.q1;
    bool any = false;
    for (double v : values) {
        if (v >= lo_fence && v <= hi_fence) {
            if (!any) {
                b.whisker_lo = v;
                b.whisker_hi = v;
                any = true;
            } else {
                b.whisker_lo = std::min(b.whisker_lo, v);
                b.whisker_hi = std::max(b.whisker_hi, v);
            }
        } else {
            b.outliers.push_back(v);
        }
    }
    if (!any) { // degenerate: everything flagged, fall back to the box
        b.whisker_lo = b.q1;
        b.whisker_hi = b.q3;
    }
    return b;
}

} // namespace

void emit_boxplot(const std::vector<BoxGroup> &groups,
                  const std::filesystem::path &out) {
    if (groups.empty())
        throw std::invalid_argument("boxplot needs at least one group");
    for (const auto &group : groups)
        if (group.values.empty())
            throw std::invalid_argument("boxplot group '" + group.name +
                                        "' is empty");

    std::vector<BoxStats> boxes;
    boxes.reserve(groups.size());
    double lo = groups.front().values.front();
    double hi = lo;
    for (const auto &group : groups) {
        boxes.push_back(box_stats(group.values));
        for (double v : group.values) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    if (hi == lo) {
        hi += 1.0;
        lo -= 1.0;
    }
    const double pad = 0.05 * (hi - lo);
    lo -= pad;
    hi += pad;

    const double group_width = 90.0;
    const double margin_left = 70.0;
    const double margin_top = 20.0;
    const double plot_height = 360.0;
    const double margin_bottom = 60.0;
    const double width = margin_left + group_width * groups.size() + 30.0;
    const double height = margin_top + plot_height + margin_bottom;

    auto y_of = [&](double v) {
        return margin_top + plot_height * (hi - v) / (hi - lo);
    };

    std::ofstream svg(out);
    if (!svg)
        throw std::runtime_error("cannot write " + out.string());
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width)
        << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width)
        << " " << fmt(height) << "\">\n";
    svg << "<rect width=\"" << fmt(width) << "\" height=\"" << fmt(height)
        << "\" fill=\"white\"/>\n";

    // Value axis with 5 ticks.
    svg << "<line x1=\"" << fmt(margin_left - 10) << "\" y1=\"" << fmt(margin_top)
        << "\" x2=\"" << fmt(margin_left - 10) << "\" y2=\""
        << fmt(margin_top + plot_height) << "\" stroke=\"black\"/>\n";
    for (int t = 0; t <= 4; ++t) {
        const double v = lo + (hi - lo) * t / 4.0;
        const double y = y_of(v);
        svg << "<line x1=\"" << fmt(margin_left - 14) << "\" y1=\"" << fmt(y)
            << "\" x2=\"" << fmt(margin_left - 10) << "\" y2=\"" << fmt(y)
            << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << fmt(margin_left - 18) << "\" y=\"" << fmt(y + 4)
            << "\" font-size=\"11\" text-anchor=\"end\">" << fmt(v)
            << "</text>\n";
    }

    for (std::size_t i = 0; i < groups.size(); ++i) {
        const BoxStats &b = boxes[i];
        const double cx = margin_left + group_width * (i + 0.5);
        const double half = group_width * 0.28;

        svg << "<g>\n";
        svg << "<title>" << xml_escape(groups[i].name) << ": q1=" << fmt(b.q1)
            << " median=" << fmt(b.median) << " q3=" << fmt(b.q3)
            << "</title>\n";
        svg << "<line x1=\"" << fmt(cx) << "\" y1=\"" << fmt(y_of(b.whisker_lo))
            << "\" x2=\"" << fmt(cx) << "\" y2=\"" << fmt(y_of(b.q1))
            << "\" stroke=\"black\"/>\n";
        svg << "<line x1=\"" << fmt(cx) << "\" y1=\"" << fmt(y_of(b.q3))
            << "\" x2=\"" << fmt(cx) << "\" y2=\"" << fmt(y_of(b.whisker_hi))
            << "\" stroke=\"black\"/>\n";
        for (double w : {b.whisker_lo, b.whisker_hi})
            svg << "<line x1=\"" << fmt(cx - half * 0.6) << "\" y1=\""
                << fmt(y_of(w)) << "\" x2=\"" << fmt(cx + half * 0.6)
                << "\" y2=\"" << fmt(y_of(w)) << "\" stroke=\"black\"/>\n";

        svg << "<rect x=\"" << fmt(cx - half) << "\" y=\"" << fmt(y_of(b.q3))
            << "\" width=\"" << fmt(2 * half) << "\" height=\""
            << fmt(y_of(b.q1) - y_of(b.q3))
            << "\" fill=\"#9ecae1\" stroke=\"black\"/>\n";
        svg << "<line x1=\"" << fmt(cx - half) << "\" y1=\"" << fmt(y_of(b.median))
            << "\" x2=\"" << fmt(cx + half) << "\" y2=\"" << fmt(y_of(b.median))
            << "\" stroke=\"black\" stroke-width=\"2\"/>\n";

        for (double v : b.outliers)
            svg << "<circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(y_of(v))
                << "\" r=\"2.5\" fill=\"none\" stroke=\"black\"/>\n";

        svg << "<text x=\"" << fmt(cx) << "\" y=\""
            << fmt(margin_top + plot_height + 20)
            << "\" font-size=\"11\" text-anchor=\"middle\">"
            << xml_escape(groups[i].name) << "</text>\n";
        svg << "</g>\n";
    }
    svg << "</svg>\n";
    if (!svg)
        throw std::runtime_error("write failed for " + out.string());
}

} // namespace tokq
