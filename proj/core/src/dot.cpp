#include "hyperkalman/dot.hpp"

#include <sstream>

namespace hyperkalman {

std::string export_dot(const Proset& p, const std::string& name) {
  auto classes = p.similarity_classes();
  int m = static_cast<int>(classes.size());
  auto class_leq = [&](int c, int d) {
    return p.leq(classes[c][0], classes[d][0]);
  };

  std::ostringstream os;
  os << "digraph " << name << " {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box];\n";
  for (int c = 0; c < m; ++c) {
    os << "  c" << c << " [label=\"";
    for (std::size_t i = 0; i < classes[c].size(); ++i) {
      if (i) os << "\\n";
      os << p.label(classes[c][i]);
    }
    os << "\"];\n";
  }
  for (int c = 0; c < m; ++c)
    for (int d = 0; d < m; ++d) {
      if (c == d || !class_leq(c, d)) continue;
      bool implied = false;
      for (int e = 0; e < m && !implied; ++e)
        if (e != c && e != d && class_leq(c, e) && class_leq(e, d)) implied = true;
      if (!implied) os << "  c" << c << " -> c" << d << ";\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace hyperkalman
