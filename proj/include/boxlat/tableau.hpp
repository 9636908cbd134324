#pragma once

// Chain tableaux: a saturated chain drawn inside its box.  The starting
// partition is the base shape; step t of the chain adds one cell, which
// is written into that cell as the label t.  Rows and columns are
// 1-based.

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "boxlat/chains.hpp"
#include "boxlat/partition.hpp"

namespace boxlat {

struct ChainTableau {
  BoxShape box;
  Partition base;
  std::vector<std::pair<int, int>> steps;  // steps[t-1] = (row, col) of label t

  int last_label() const { return static_cast<int>(steps.size()); }
};

inline ChainTableau tableau_of_chain(const Chain& chain, const BoxShape& box) {
  if (chain.elements.empty())
    throw lattice_error(errc::not_saturated, "empty chain");
  ChainTableau t{box, chain.start(), {}};
  for (size_t i = 0; i + 1 < chain.elements.size(); ++i) {
    const Partition& a = chain.elements[i];
    const Partition& b = chain.elements[i + 1];
    if (!is_cover_step(a, b))
      throw lattice_error(errc::not_saturated,
                          to_string(a) + " -> " + to_string(b));
    for (int row = 0; row < box.rows; ++row)
      if (b[row] == a[row] + 1) t.steps.emplace_back(row + 1, b[row]);
  }
  return t;
}

// Fixed-width cells, one line per row: base cells are '#'-filled, labeled
// cells carry the right-aligned step number, the rest is blank.
inline std::string render_ascii(const ChainTableau& t) {
  int w = 2;
  for (int digits = t.last_label(); digits >= 100; digits /= 10) ++w;
  std::vector<std::vector<int>> grid(
      static_cast<size_t>(t.box.rows),
      std::vector<int>(static_cast<size_t>(t.box.cols), 0));
  for (int row = 0; row < t.box.rows; ++row)
    for (int col = 0; col < t.base[row]; ++col)
      grid[static_cast<size_t>(row)][static_cast<size_t>(col)] = -1;
  for (size_t s = 0; s < t.steps.size(); ++s)
    grid[static_cast<size_t>(t.steps[s].first - 1)]
        [static_cast<size_t>(t.steps[s].second - 1)] = static_cast<int>(s) + 1;
  std::string out;
  for (const auto& row : grid) {
    out += '|';
    for (int cell : row) {
      std::string field;
      if (cell < 0)
        field.assign(static_cast<size_t>(w), '#');
      else if (cell > 0) {
        field = std::to_string(cell);
        field.insert(0, static_cast<size_t>(w) - field.size(), ' ');
      } else
        field.assign(static_cast<size_t>(w), ' ');
      out += field;
      out += '|';
    }
    out += '\n';
  }
  return out;
}

inline nlohmann::ordered_json tableau_json(const ChainTableau& t) {
  nlohmann::ordered_json j;
  j["box"] = {t.box.rows, t.box.cols};
  j["base"] = t.base.parts;
  nlohmann::ordered_json labels = nlohmann::ordered_json::array();
  for (size_t s = 0; s < t.steps.size(); ++s)
    labels.push_back({t.steps[s].first, t.steps[s].second,
                      static_cast<int>(s) + 1});
  j["labels"] = std::move(labels);
  return j;
}

// Standalone SVG with one group per tableau, stacked vertically.
// 24-unit cells; base cells are gray, labels are centered.
inline std::string render_svg(const std::vector<ChainTableau>& tableaux) {
  constexpr int cell = 24, margin = 8;
  int rows = 0, cols = 0;
  for (const ChainTableau& t : tableaux) {
    rows = std::max(rows, t.box.rows);
    cols = std::max(cols, t.box.cols);
  }
  int width = 2 * margin + cols * cell;
  int height = margin;
  std::string body;
  for (const ChainTableau& t : tableaux) {
    std::vector<std::vector<int>> grid(
        static_cast<size_t>(t.box.rows),
        std::vector<int>(static_cast<size_t>(t.box.cols), 0));
    for (int row = 0; row < t.box.rows; ++row)
      for (int col = 0; col < t.base[row]; ++col)
        grid[static_cast<size_t>(row)][static_cast<size_t>(col)] = -1;
    for (size_t s = 0; s < t.steps.size(); ++s)
      grid[static_cast<size_t>(t.steps[s].first - 1)]
          [static_cast<size_t>(t.steps[s].second - 1)] =
              static_cast<int>(s) + 1;
    body += "  <g transform=\"translate(" + std::to_string(margin) + "," +
            std::to_string(height) + ")\">\n";
    for (int row = 0; row < t.box.rows; ++row)
      for (int col = 0; col < t.box.cols; ++col) {
        int v = grid[static_cast<size_t>(row)][static_cast<size_t>(col)];
        body += "    <rect x=\"" + std::to_string(col * cell) + "\" y=\"" +
                std::to_string(row * cell) + "\" width=\"" +
                std::to_string(cell) + "\" height=\"" + std::to_string(cell) +
                "\" fill=\"" + (v < 0 ? "#c0c0c0" : "#ffffff") +
                "\" stroke=\"#000000\"/>\n";
        if (v > 0)
          body += "    <text x=\"" + std::to_string(col * cell + cell / 2) +
                  "\" y=\"" + std::to_string(row * cell + cell / 2) +
                  "\" text-anchor=\"middle\" dominant-baseline=\"central\" "
                  "font-size=\"12\">" +
                  std::to_string(v) + "</text>\n";
      }
    body += "  </g>\n";
    height += t.box.rows * cell + margin;
  }
  std::string out =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
      std::to_string(width) + "\" height=\"" + std::to_string(height) +
      "\" viewBox=\"0 0 " + std::to_string(width) + " " +
      std::to_string(height) + "\">\n";
  out += body;
  out += "</svg>\n";
  return out;
}

}  // namespace boxlat
