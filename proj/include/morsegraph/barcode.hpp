#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "morsegraph/errors.hpp"
#include "morsegraph/persistence.hpp"

namespace morsegraph {

enum class BarcodeFormat { Ascii, Svg };

struct RenderSpec {
  BarcodeFormat format = BarcodeFormat::Ascii;
  /// Maximum line width for ASCII output (one column per integer time).
  int width = 100;
  /// Dashed (SVG) or dotted (ASCII) gridlines at integer times.
  bool show_grid = false;
};

namespace detail {

struct Bar {
  long long birth;
  long long death;  // -1 = essential
  bool essential() const { return death < 0; }
};

/// Bars of one band, bottom row first: ascending birth, deaths breaking
/// ties, essentials drawn as the longest of equal births.
inline std::vector<Bar> band_bars(
    const std::vector<std::pair<long long, long long>>& finite,
    const std::vector<long long>& essential) {
  std::vector<Bar> bars;
  for (auto [birth, death] : finite) bars.push_back({birth, death});
  for (long long birth : essential) bars.push_back({birth, -1});
  std::sort(bars.begin(), bars.end(), [](const Bar& a, const Bar& b) {
    if (a.birth != b.birth) return a.birth < b.birth;
    if (a.essential() != b.essential()) return b.essential();
    return a.death < b.death;
  });
  return bars;
}

inline long long horizon(const PersistenceDiagram& d) {
  long long t = 0;
  for (auto [birth, death] : d.finite_pairs) t = std::max(t, death);
  for (long long birth : d.essential_h0) t = std::max(t, birth);
  for (long long birth : d.essential_h1) t = std::max(t, birth);
  return t;
}

inline std::string ascii_render(const PersistenceDiagram& d,
                                const RenderSpec& spec) {
  const long long t_max = horizon(d);
  const long long plot_cols = t_max + 2;  // arrow head column at t_max + 1

  std::vector<Bar> h1 = band_bars({}, d.essential_h1);
  std::vector<Bar> h0 = band_bars(d.finite_pairs, d.essential_h0);
  auto label = [](const Bar& b) {
    return "(" + std::to_string(b.birth) + "," +
           (b.essential() ? "inf" : std::to_string(b.death)) + ")";
  };
  size_t label_width = 0;
  for (const Bar& b : h1) label_width = std::max(label_width, label(b).size());
  for (const Bar& b : h0) label_width = std::max(label_width, label(b).size());

  const long long line_width =
      2 + 3 + static_cast<long long>(label_width) + 1 + plot_cols;
  if (line_width > spec.width)
    throw InputError("barcode needs width " + std::to_string(line_width) +
                     ", render width is " + std::to_string(spec.width));

  std::string out;
  auto bar_row = [&](const std::string& band, const Bar& b) {
    std::string line = band + " | " + label(b);
    line.resize(2 + 3 + label_width + 1, ' ');
    std::string plot(static_cast<size_t>(plot_cols),
                     spec.show_grid ? '.' : ' ');
    long long end = b.essential() ? t_max : b.death;
    for (long long t = b.birth; t <= end; ++t)
      plot[static_cast<size_t>(t)] = '=';
    if (b.essential()) plot[static_cast<size_t>(t_max + 1)] = '>';
    out += line + plot + "\n";
  };
  // Bands top-down, each band's later births on top.
  for (size_t i = h1.size(); i-- > 0;)
    bar_row(i == 0 ? "b1" : "  ", h1[i]);
  if (!h1.empty() && !h0.empty())
    out += std::string(static_cast<size_t>(line_width), '-') + "\n";
  for (size_t i = h0.size(); i-- > 0;)
    bar_row(i == 0 ? "b0" : "  ", h0[i]);

  out += std::string(static_cast<size_t>(line_width), '-') + "\n";
  const size_t prefix = 2 + 3 + label_width + 1;
  std::string ticks(prefix + static_cast<size_t>(plot_cols), ' ');
  std::string numbers(prefix + static_cast<size_t>(plot_cols) + 8, ' ');
  for (long long t = 0; t <= t_max; t += 5) {
    ticks[prefix + static_cast<size_t>(t)] = '+';
    std::string n = std::to_string(t);
    for (size_t c = 0; c < n.size(); ++c)
      numbers[prefix + static_cast<size_t>(t) + c] = n[c];
  }
  while (!numbers.empty() && numbers.back() == ' ') numbers.pop_back();
  while (!ticks.empty() && ticks.back() == ' ') ticks.pop_back();
  out += ticks + "\n" + numbers + "\n";
  return out;
}

inline std::string svg_render(const PersistenceDiagram& d,
                              const RenderSpec& spec) {
  const long long t_max = horizon(d);
  const int unit = 24;       // pixels per time unit
  const int row = 18;        // pixels per bar row
  const int left = 30;
  const int top = 16;
  const int arrow = 16;      // extra reach of essential bars

  std::vector<Bar> h1 = band_bars({}, d.essential_h1);
  std::vector<Bar> h0 = band_bars(d.finite_pairs, d.essential_h0);
  const int gap = (!h1.empty() && !h0.empty()) ? row : 0;
  const int rows = static_cast<int>(h1.size() + h0.size());
  const int height = top + rows * row + gap + 2 * row;
  const int width = left + static_cast<int>(t_max) * unit + arrow + left;

  std::string svg;
  auto add = [&](const std::string& s) { svg += s + "\n"; };
  add("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
      std::to_string(width) + "\" height=\"" + std::to_string(height) +
      "\" viewBox=\"0 0 " + std::to_string(width) + " " +
      std::to_string(height) + "\">");
  add("  <defs>");
  add("    <marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" "
      "refX=\"6\" refY=\"3\" orient=\"auto\">");
  add("      <path d=\"M0,0 L6,3 L0,6 z\"/>");
  add("    </marker>");
  add("  </defs>");

  const int axis_y = top + rows * row + gap + row / 2;
  if (spec.show_grid) {
    for (long long t = 0; t <= t_max; ++t)
      add("  <line x1=\"" + std::to_string(left + t * unit) + "\" y1=\"" +
          std::to_string(top) + "\" x2=\"" + std::to_string(left + t * unit) +
          "\" y2=\"" + std::to_string(axis_y) +
          "\" stroke=\"#bbbbbb\" stroke-dasharray=\"3 3\"/>");
  }

  int y = top + row / 2;
  auto bar_line = [&](const Bar& b) {
    long long x1 = left + b.birth * unit;
    long long x2 = b.essential() ? left + t_max * unit + arrow
                                 : left + b.death * unit;
    std::string line = "  <line x1=\"" + std::to_string(x1) + "\" y1=\"" +
                       std::to_string(y) + "\" x2=\"" + std::to_string(x2) +
                       "\" y2=\"" + std::to_string(y) +
                       "\" stroke=\"#000000\" stroke-width=\"4\"";
    if (b.essential()) line += " marker-end=\"url(#arrow)\"";
    add(line + "/>");
    y += row;
  };
  if (!h1.empty()) {
    add("  <text x=\"4\" y=\"" + std::to_string(y + 4) +
        "\" font-size=\"12\">b1</text>");
    for (size_t i = h1.size(); i-- > 0;) bar_line(h1[i]);
    y += gap;
  }
  if (!h0.empty()) {
    add("  <text x=\"4\" y=\"" + std::to_string(y + 4) +
        "\" font-size=\"12\">b0</text>");
    for (size_t i = h0.size(); i-- > 0;) bar_line(h0[i]);
  }

  add("  <line x1=\"" + std::to_string(left) + "\" y1=\"" +
      std::to_string(axis_y) + "\" x2=\"" +
      std::to_string(left + t_max * unit + arrow) + "\" y2=\"" +
      std::to_string(axis_y) + "\" stroke=\"#000000\"/>");
  for (long long t = 0; t <= t_max; ++t) {
    add("  <line x1=\"" + std::to_string(left + t * unit) + "\" y1=\"" +
        std::to_string(axis_y) + "\" x2=\"" + std::to_string(left + t * unit) +
        "\" y2=\"" + std::to_string(axis_y + 4) + "\" stroke=\"#000000\"/>");
    add("  <text x=\"" + std::to_string(left + t * unit - 3) + "\" y=\"" +
        std::to_string(axis_y + 16) + "\" font-size=\"10\">" +
        std::to_string(t) + "</text>");
  }
  add("</svg>");
  return svg;
}

}  // namespace detail

/// Deterministic barcode rendering: bars by band (b1 above b0), later
/// births stacked higher, essential intervals ending in an arrow.
inline std::string render_barcode(const PersistenceDiagram& diagram,
                                  const RenderSpec& spec = {}) {
  PersistenceDiagram d = diagram;
  d.canonicalize();
  if (spec.format == BarcodeFormat::Ascii) return detail::ascii_render(d, spec);
  return detail::svg_render(d, spec);
}

}  // namespace morsegraph
