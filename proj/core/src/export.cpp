#include <sstream>

#include "pcg/graph.hpp"

namespace pcg {

std::string export_edges(const ThetaGraph& theta) {
  std::ostringstream out;
  out << "# vertices " << theta.size() << '\n';
  for (const auto& v : theta.vertices()) out << v.label << ' ' << v.order << '\n';
  const auto edges = theta.graph().edges();
  out << "# edges " << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << theta.label(u) << ' ' << theta.label(v) << '\n';
  return out.str();
}

std::string export_dot(const ThetaGraph& theta) {
  std::ostringstream out;
  out << "graph theta {\n";
  for (std::size_t v = 0; v < theta.size(); ++v) {
    out << "  " << v << " [label=\"" << theta.label(v) << '(' << theta.order(v) << ")\"];\n";
  }
  for (const auto& [u, v] : theta.graph().edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace pcg
