#include "scop/poset_io.hpp"

#include <sstream>
#include <vector>

#include <json.hpp>

namespace scop::lattice {

namespace {

// Upper covers per element: y covers x iff x < y with nothing in between.
std::vector<std::vector<std::size_t>> upper_covers(const OrthoPoset& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<std::size_t>> covers(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y || !p.leq_by_index(x, y) || p.leq_by_index(y, x)) continue;
      bool direct = true;
      for (std::size_t z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        if (p.leq_by_index(x, z) && !p.leq_by_index(z, x) &&
            p.leq_by_index(z, y) && !p.leq_by_index(y, z)) {
          direct = false;
          break;
        }
      }
      if (direct) covers[x].push_back(y);
    }
  return covers;
}

std::string escape_dot(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

ExportFormat parse_export_format(const std::string& name) {
  if (name == "dot") return ExportFormat::dot;
  if (name == "json") return ExportFormat::json;
  throw InputError("unknown export format: " + name);
}

std::string export_poset(const OrthoPoset& p, ExportFormat format) {
  auto covers = upper_covers(p);
  if (format == ExportFormat::dot) {
    std::ostringstream os;
    os << "digraph lattice {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < p.size(); ++i)
      os << "  n" << i << " [label=\"" << escape_dot(p.element(i).str())
         << "\"];\n";
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j : covers[i]) os << "  n" << i << " -> n" << j << ";\n";
    os << "}\n";
    return os.str();
  }

  nlohmann::ordered_json doc;
  doc["elements"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    nlohmann::ordered_json el;
    el["id"] = i;
    el["term"] = p.element(i).str();
    el["ortho"] = p.complement_index(i);
    el["covers"] = covers[i];
    doc["elements"].push_back(el);
  }
  doc["zero_meets"] = nlohmann::ordered_json::array();
  for (const auto& [a, b] : p.zero_meets())
    doc["zero_meets"].push_back({a.str(), b.str()});
  return doc.dump(2) + "\n";
}

}  // namespace scop::lattice
