// Copyright 2026 The qspoof Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "emit.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qspoof::tools {
namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string short_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

std::string escape_xml(const std::string &s) {
    std::string out;
    for (char c : s) {
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

constexpr const char *kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

}  // namespace

std::string to_csv(const SweepTable &table) {
    table.validate();
    std::string out = table.x_name;
    for (const auto &s : table.series) {
        out += ',';
        out += s.name;
    }
    out += '\n';
    for (size_t i = 0; i < table.x_values.size(); ++i) {
        out += format_double(table.x_values[i]);
        for (const auto &s : table.series) {
            out += ',';
            out += format_double(s.values[i]);
        }
        out += '\n';
    }
    return out;
}

std::string to_svg(const SweepTable &table) {
    table.validate();
    constexpr double width = 720.0, height = 450.0;
    constexpr double left = 80.0, right = 200.0, top = 30.0, bottom = 60.0;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    auto xmap = [&](double x) { return table.log_x ? std::log10(x) : x; };
    double x_lo = xmap(table.x_values.front());
    double x_hi = xmap(table.x_values.back());
    if (x_hi == x_lo) {
        x_hi = x_lo + 1.0;
    }
    double y_lo = INFINITY, y_hi = -INFINITY;
    for (const auto &s : table.series) {
        for (double v : s.values) {
            if (std::isfinite(v)) {
                y_lo = std::min(y_lo, v);
                y_hi = std::max(y_hi, v);
            }
        }
    }
    if (!std::isfinite(y_lo)) {
        y_lo = 0.0;
        y_hi = 1.0;
    }
    if (y_hi - y_lo < 1e-12) {
        y_lo -= 0.5;
        y_hi += 0.5;
    }
    const double pad = 0.05 * (y_hi - y_lo);
    y_lo -= pad;
    y_hi += pad;

    auto px = [&](double x) { return left + (xmap(x) - x_lo) / (x_hi - x_lo) * plot_w; };
    auto py = [&](double y) { return top + (y_hi - y) / (y_hi - y_lo) * plot_h; };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!table.notes.empty()) {
        svg << "<desc>";
        for (const auto &[k, v] : table.notes) {
            svg << escape_xml(k) << '=' << format_double(v) << ';';
        }
        svg << "</desc>\n";
    }
    svg << "<g stroke=\"black\" stroke-width=\"1\">\n";
    svg << "<line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\"" << left + plot_w << "\" y2=\""
        << top + plot_h << "\"/>\n";
    svg << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << top + plot_h
        << "\"/>\n";
    svg << "</g>\n";

    svg << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
    constexpr int kTicks = 5;
    for (int i = 0; i <= kTicks; ++i) {
        const double fx = x_lo + (x_hi - x_lo) * i / kTicks;
        const double xv = table.log_x ? std::pow(10.0, fx) : fx;
        const double x = left + plot_w * i / kTicks;
        svg << "<line x1=\"" << x << "\" y1=\"" << top + plot_h << "\" x2=\"" << x << "\" y2=\"" << top + plot_h + 5
            << "\" stroke=\"black\"/>";
        svg << "<text x=\"" << x << "\" y=\"" << top + plot_h + 18 << "\" text-anchor=\"middle\">"
            << short_number(xv) << "</text>\n";
        const double yv = y_lo + (y_hi - y_lo) * i / kTicks;
        const double y = py(yv);
        svg << "<line x1=\"" << left - 5 << "\" y1=\"" << y << "\" x2=\"" << left << "\" y2=\"" << y
            << "\" stroke=\"black\"/>";
        svg << "<text x=\"" << left - 8 << "\" y=\"" << y + 4 << "\" text-anchor=\"end\">" << short_number(yv)
            << "</text>\n";
    }
    svg << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 15 << "\" text-anchor=\"middle\">"
        << escape_xml(table.x_name) << (table.log_x ? " (log scale)" : "") << "</text>\n";
    svg << "<text transform=\"translate(20," << top + plot_h / 2
        << ") rotate(-90)\" text-anchor=\"middle\">value</text>\n";
    svg << "</g>\n";

    for (size_t s = 0; s < table.series.size(); ++s) {
        const auto &series = table.series[s];
        const char *color = kPalette[s % std::size(kPalette)];
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"";
        if (s % 2 == 1) {
            svg << " stroke-dasharray=\"6,4\"";
        }
        svg << " points=\"";
        for (size_t i = 0; i < table.x_values.size(); ++i) {
            if (i) {
                svg << ' ';
            }
            svg << px(table.x_values[i]) << ',' << py(series.values[i]);
        }
        svg << "\"/>\n";
        const double ly = top + 15.0 + 18.0 * static_cast<double>(s);
        svg << "<line x1=\"" << left + plot_w + 10 << "\" y1=\"" << ly << "\" x2=\"" << left + plot_w + 30
            << "\" y2=\"" << ly << "\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>";
        svg << "<text x=\"" << left + plot_w + 35 << "\" y=\"" << ly + 4
            << "\" font-family=\"sans-serif\" font-size=\"11\">" << escape_xml(series.name) << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

void emit(const SweepTable &table, Format format, const std::string &path) {
    const std::string body = format == Format::kCsv ? to_csv(table) : to_svg(table);
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    file.write(body.data(), static_cast<std::streamsize>(body.size()));
    file.close();
    if (!file) {
        throw IoError("failed writing '" + path + "'");
    }
}

}  // namespace qspoof::tools
