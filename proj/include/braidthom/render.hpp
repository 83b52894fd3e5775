#pragma once

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "braidthom/diagram.hpp"

namespace braidthom {

namespace detail {

inline std::string fmt1(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", v);
  return buf;
}

struct SvgOut {
  std::string body;

  void line(double x1, double y1, double x2, double y2, const char* cls = "s") {
    body += "<line class=\"" + std::string(cls) + "\" x1=\"" + fmt1(x1) + "\" y1=\"" + fmt1(y1) +
            "\" x2=\"" + fmt1(x2) + "\" y2=\"" + fmt1(y2) + "\"/>\n";
  }
  void curve(double x1, double y1, double x2, double y2, const char* cls = "s") {
    const double ym = (y1 + y2) / 2;
    body += "<path class=\"" + std::string(cls) + "\" d=\"M " + fmt1(x1) + " " + fmt1(y1) +
            " C " + fmt1(x1) + " " + fmt1(ym) + ", " + fmt1(x2) + " " + fmt1(ym) + ", " +
            fmt1(x2) + " " + fmt1(y2) + "\"/>\n";
  }
};

// Tree edges with leaves pinned at y_leaf on the given columns; internal
// nodes sit dir*row per height unit away from the leaf line (dir = -1 draws
// the root above, +1 below).
inline void tree_edges(SvgOut& svg, const Tree& t, const std::vector<double>& cols, double y_leaf,
                       double row, int dir) {
  auto walk = [&](auto&& self, const Tree& node, int base) -> std::pair<double, double> {
    if (node.is_leaf()) return {cols[static_cast<std::size_t>(base)], y_leaf};
    auto [lx, ly] = self(self, node.left(), base);
    auto [rx, ry] = self(self, node.right(), base + node.left().leaf_count());
    const double x = (cols[static_cast<std::size_t>(base)] +
                      cols[static_cast<std::size_t>(base + node.leaf_count() - 1)]) /
                     2;
    const double y = y_leaf + dir * row * tree_height(node);
    svg.line(x, y, lx, ly);
    svg.line(x, y, rx, ry);
    return {x, y};
  };
  if (!t.is_leaf()) walk(walk, t, 0);
}

}  // namespace detail

/// Deterministic SVG rendering of a split-braid-merge diagram: the top tree
/// opens downward onto the strands, each braid letter occupies one row with
/// the over-strand drawn across a casing gap, and the bottom tree closes the
/// strands below. Identical input yields identical bytes.
inline std::string render_svg(const Diagram& d) {
  const int n = d.strands();
  const double col = 40, margin = 30, tree_row = 28, braid_row = 34;
  const int rows = std::max<int>(1, static_cast<int>(d.braid().letters().size()));

  std::vector<double> cols(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cols[static_cast<std::size_t>(i)] = margin + i * col;

  const double top_h = tree_row * std::max(1, tree_height(d.top()));
  const double braid_top = margin + top_h;
  const double braid_bot = braid_top + rows * braid_row;
  const double bot_h = tree_row * std::max(1, tree_height(d.bottom()));
  const double width = 2 * margin + (n - 1) * col;
  const double height = braid_bot + bot_h + margin;

  detail::SvgOut svg;
  detail::tree_edges(svg, d.top(), cols, braid_top, tree_row, -1);
  detail::tree_edges(svg, d.bottom(), cols, braid_bot, tree_row, +1);

  // Rows bottom to top: letter k occupies the k-th row from the bottom. In
  // a row with letter +-i the strand entering at position i+1 leaves at
  // position i; for +i that strand passes over.
  const auto& letters = d.braid().letters();
  if (letters.empty()) {
    for (int p = 0; p < n; ++p)
      svg.line(cols[static_cast<std::size_t>(p)], braid_top, cols[static_cast<std::size_t>(p)],
               braid_bot);
  } else {
    for (std::size_t k = 0; k < letters.size(); ++k) {
      const double y_bot = braid_bot - static_cast<double>(k) * braid_row;
      const double y_top = y_bot - braid_row;
      const int l = letters[k];
      const int i = l > 0 ? l : -l;
      for (int p = 1; p <= n; ++p) {
        if (p == i || p == i + 1) continue;
        svg.line(cols[static_cast<std::size_t>(p - 1)], y_bot,
                 cols[static_cast<std::size_t>(p - 1)], y_top);
      }
      const double xa = cols[static_cast<std::size_t>(i - 1)];
      const double xb = cols[static_cast<std::size_t>(i)];
      if (l > 0) {
        svg.curve(xa, y_bot, xb, y_top);       // under: position i to i+1
        svg.curve(xb, y_bot, xa, y_top, "c");  // casing
        svg.curve(xb, y_bot, xa, y_top);       // over: position i+1 to i
      } else {
        svg.curve(xb, y_bot, xa, y_top);
        svg.curve(xa, y_bot, xb, y_top, "c");
        svg.curve(xa, y_bot, xb, y_top);
      }
    }
  }

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fmt1(width) +
         "\" height=\"" + detail::fmt1(height) + "\" viewBox=\"0 0 " + detail::fmt1(width) + " " +
         detail::fmt1(height) + "\">\n";
  out +=
      "<style>.s{stroke:#000;stroke-width:2;fill:none;stroke-linecap:round}"
      ".c{stroke:#fff;stroke-width:7;fill:none}</style>\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";
  out += svg.body;
  out += "</svg>\n";
  return out;
}

}  // namespace braidthom
