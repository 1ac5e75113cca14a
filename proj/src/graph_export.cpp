#include "stpsw/graph_export.hpp"

#include <sstream>

namespace stpsw {

std::string input_state_graph_dot(const LogicalNetwork& net) {
  std::ostringstream os;
  os << "digraph input_state {\n";
  os << "  node [shape=ellipse];\n";
  for (std::size_t j = 1; j <= net.input_states(); ++j) {
    auto [g, t] = net.decode(j);
    os << "  s" << j << " [label=\"" << net.label(g, t) << "\"];\n";
  }
  for (std::size_t j = 1; j <= net.input_states(); ++j) {
    auto [g, t] = net.decode(j);
    std::size_t next = net.next_state(g, t);
    for (std::size_t g2 = 1; g2 <= net.inputs(); ++g2) os << "  s" << j << " -> s" << net.encode(g2, next) << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace stpsw
