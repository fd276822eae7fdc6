#include "reeb/render.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <sstream>

namespace reeb {

namespace {

std::string quoted(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

std::string xml_escaped(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

int kind_order(VertexKind kind) {
  switch (kind) {
    case VertexKind::BoundaryMinus: return 0;
    case VertexKind::BoundaryPlus: return 2;
    default: return 1;
  }
}

}  // namespace

Layout layered_layout(const ReebGraph& g) {
  std::vector<std::size_t> order(g.vertex_count());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const auto vertices = g.vertices();
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    if (vertices[a].level != vertices[b].level) return vertices[a].level < vertices[b].level;
    return kind_order(vertices[a].kind) < kind_order(vertices[b].kind);
  });

  // Strands run level at their slot between events and bend within a
  // fifth of the gap on either side of a vertex.
  std::vector<Level> levels;
  for (auto v : order) {
    if (levels.empty() || levels.back() != vertices[v].level) levels.push_back(vertices[v].level);
  }
  auto neighbor_gap = [&](Level x, int side) {
    auto it = std::lower_bound(levels.begin(), levels.end(), x);
    if (side < 0) return it == levels.begin() ? 0.0 : x - *std::prev(it);
    return std::next(it) == levels.end() ? 0.0 : *std::next(it) - x;
  };

  Layout layout;
  std::vector<std::size_t> strands;
  auto mark = [&](double x) {
    for (std::size_t pos = 0; pos < strands.size(); ++pos) {
      layout.edge[g.edges()[strands[pos]].id].emplace_back(x, static_cast<double>(pos));
    }
  };
  for (std::size_t first = 0; first < order.size();) {
    const double x = vertices[order[first]].level;
    std::size_t last = first;
    while (last < order.size() && vertices[order[last]].level == x) ++last;
    mark(x - 0.2 * neighbor_gap(x, -1));

    for (std::size_t k = first; k < last; ++k) {
      const auto v = order[k];
      std::vector<double> touching;
      std::size_t slot = strands.size();
      for (std::size_t pos = 0; pos < strands.size(); ++pos) {
        if (g.upper_of(strands[pos]) != v) continue;
        touching.push_back(static_cast<double>(pos));
        slot = std::min(slot, pos);
      }
      std::vector<std::size_t> outgoing;
      for (auto e : g.incident(v)) {
        if (g.lower_of(e) == v) outgoing.push_back(e);
      }
      std::erase_if(strands, [&](std::size_t e) { return g.upper_of(e) == v; });
      slot = std::min(slot, strands.size());
      strands.insert(strands.begin() + static_cast<std::ptrdiff_t>(slot), outgoing.begin(),
                     outgoing.end());
      for (std::size_t j = 0; j < outgoing.size(); ++j) {
        touching.push_back(static_cast<double>(slot + j));
      }
      const double y = touching.empty()
                           ? static_cast<double>(slot)
                           : std::accumulate(touching.begin(), touching.end(), 0.0) /
                                 static_cast<double>(touching.size());
      layout.vertex[vertices[v].id] = {x, y};
      for (auto e : g.incident(v)) layout.edge[g.edges()[e].id].emplace_back(x, y);
      layout.slots = std::max(layout.slots, static_cast<double>(strands.size()));
    }

    mark(x + 0.2 * neighbor_gap(x, +1));
    first = last;
  }
  return layout;
}

std::string to_dot(const ReebGraph& g, const EdgeNumbers& numbers) {
  const auto layout = layered_layout(g);
  const double span = g.hi() - g.lo();
  std::ostringstream out;
  out << std::setprecision(6);
  out << "digraph reeb {\n  rankdir=LR;\n  node [shape=circle, width=0.12, fixedsize=true, label=\"\"];\n";
  for (const auto& v : g.vertices()) {
    const auto [x, y] = layout.vertex.at(v.id);
    out << "  " << quoted(v.id) << " [xlabel=" << quoted(v.id + " (" + std::string(to_string(v.kind)) + ")")
        << ", pos=\"" << 10.0 * (x - g.lo()) / span << ',' << -y << "!\"];\n";
  }
  for (const auto& e : g.edges()) {
    const bool essential = e.label == EdgeLabel::Essential;
    out << "  " << quoted(e.lower) << " -> " << quoted(e.upper) << " [id=" << quoted(e.id)
        << ", color=" << (essential ? "\"#c0392b\"" : "\"#7f8c8d\", style=dashed");
    auto it = numbers.find(e.id);
    if (it != numbers.end()) out << ", label=" << quoted(std::to_string(it->second));
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_svg(const ReebGraph& g, const EdgeNumbers& numbers) {
  const auto layout = layered_layout(g);
  constexpr double kWidth = 800.0;
  constexpr double kMargin = 40.0;
  constexpr double kRow = 36.0;
  const double height = 2 * kMargin + kRow * std::max(0.0, layout.slots - 1.0);
  const double span = g.hi() - g.lo();
  auto px = [&](double level) { return kMargin + (kWidth - 2 * kMargin) * (level - g.lo()) / span; };
  auto py = [&](double slot) { return kMargin + kRow * slot; };

  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << kWidth << ' ' << height << "\">\n";
  for (const auto& e : g.edges()) {
    const bool essential = e.label == EdgeLabel::Essential;
    const auto& path = layout.edge.at(e.id);
    out << "  <polyline id=\"" << xml_escaped(e.id) << "\" fill=\"none\" stroke=\""
        << (essential ? "#c0392b" : "#7f8c8d") << "\" stroke-width=\"2\""
        << (essential ? "" : " stroke-dasharray=\"5,4\"") << " points=\"";
    for (std::size_t k = 0; k < path.size(); ++k) {
      out << (k ? " " : "") << px(path[k].first) << ',' << py(path[k].second);
    }
    out << "\"/>\n";
    auto it = numbers.find(e.id);
    if (it != numbers.end() && !path.empty()) {
      const auto& a = path[(path.size() - 1) / 2];
      const auto& b = path[path.size() / 2];
      out << "  <text x=\"" << (px(a.first) + px(b.first)) / 2 << "\" y=\""
          << (py(a.second) + py(b.second)) / 2 - 4 << "\" font-size=\"12\" text-anchor=\"middle\">"
          << it->second << "</text>\n";
    }
  }
  for (const auto& v : g.vertices()) {
    const auto [x, y] = layout.vertex.at(v.id);
    out << "  <circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"4\" fill=\""
        << (is_boundary(v.kind) ? "#2c3e50" : "#ffffff") << "\" stroke=\"#2c3e50\"><title>"
        << xml_escaped(v.id) << "</title></circle>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace reeb
