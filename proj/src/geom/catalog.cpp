#include <map>
#include <numeric>
#include <sstream>

#include "toric3/geom.hpp"

namespace toric3::geom {

namespace {

using Columns = std::vector<LatticeVector>;

// vertex matrix given row by row, one column per vertex
Columns from_rows(const std::vector<std::vector<Int>>& rows) {
  Columns cols(rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) cols[c][r] = rows[r][c];
  return cols;
}

const std::map<std::string, Columns>& fixed_entries() {
  static const std::map<std::string, Columns> table = {
      {"T0", {e1, e2, {-1, -1, 0}}},
      {"S1", {{0, 0, 0}, e1, e2, e3}},
      {"S2", {e1, e2, e3, {1, 1, 1}}},
      {"E", {{0, 0, 0}, e1, e2, e3, {1, 1, 1}}},
      {"K1", {e1, e2, e3, {-1, -1, -1}}},
      {"K2", {e1, e2, {1, 1, 2}, {-1, -1, -1}}},
      {"T1", from_rows({{1, 0, -1, 0}, {0, 1, -1, 0}, {0, 0, 0, 1}})},
      {"T2", from_rows({{1, 0, -1, 2}, {0, 1, -1, 1}, {0, 0, 0, 3}})},
      {"P8", from_rows({{0, 1, 0, 6}, {0, 0, 1, 8}, {0, 0, 0, 35}})},
      {"Q8", from_rows({{0, 1, 0, 0, 2}, {0, 0, 0, 1, 15}, {0, 1, 1, 1, 28}})},
      // tetrahedron equivalent to S2 that shows up next to K2
      {"S", from_rows({{0, 0, 1, 1}, {0, 1, 0, 1}, {0, 0, 0, 2}})},
      // the two partners of T0 with L(T0 + Q) = 2 and four lattice points
      {"T0Q1", from_rows({{0, 0, 3}, {0, 0, 0}, {0, 1, -1}})},
      {"T0Q2", from_rows({{0, 1, 0, 1}, {0, 0, 0, 2}, {0, 0, 1, -1}})},
      {"Delta2", {{0, 0, 0}, e1, e2}},
      {"Delta3", {{0, 0, 0}, e1, e2, e3}},
  };
  return table;
}

std::pair<Int, Int> parse_pair(const std::string& args, const std::string& name) {
  std::istringstream in(args);
  Int a = 0, b = 0;
  char comma = 0;
  if (!(in >> a >> comma >> b) || comma != ',' || !in.eof()) throw std::invalid_argument("malformed catalog name: " + name);
  return {a, b};
}

Int parse_int(const std::string& args, const std::string& name) {
  std::size_t used = 0;
  Int v = 0;
  try {
    v = std::stoll(args, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed catalog name: " + name);
  }
  if (used != args.size()) throw std::invalid_argument("malformed catalog name: " + name);
  return v;
}

}  // namespace

LatticePolytope catalog(const std::string& name) {
  const auto& fixed = fixed_entries();
  if (auto it = fixed.find(name); it != fixed.end()) return LatticePolytope(it->second);
  if (name == "EX72") {
    // T0 + [0, e1, e3]
    return minkowski_sum(catalog("T0"), LatticePolytope({{0, 0, 0}, e1, e3}));
  }
  if (name == "EX63") {
    return minkowski_sum(LatticePolytope({{2, 1, 0}, {1, 2, 0}, {0, 0, 0}}),
                         LatticePolytope({{3, 0, 0}, e3, {0, 0, 2}}));
  }
  auto colon = name.find(':');
  if (colon != std::string::npos) {
    std::string head = name.substr(0, colon), args = name.substr(colon + 1);
    if (head == "Tab" || head == "Howe") {
      auto [a, b] = parse_pair(args, name);
      if (std::gcd(a, b) != 1) throw std::invalid_argument("catalog " + head + " needs gcd(a,b) = 1");
      if (head == "Tab") return LatticePolytope({e1, e2, e3, {a, b, 1}});
      return LatticePolytope({{0, 0, 0}, e1, e2, e3, {a, b, 1}});
    }
    if (head == "Delta3" || head == "Delta2" || head == "Cube") {
      Int d = parse_int(args, name);
      if (d < 0) throw std::invalid_argument("negative dilation in catalog name: " + name);
      if (head == "Delta3") return LatticePolytope({{0, 0, 0}, d * e1, d * e2, d * e3});
      if (head == "Delta2") return LatticePolytope({{0, 0, 0}, d * e1, d * e2});
      std::vector<LatticeVector> corners;
      for (int m = 0; m < 8; ++m) corners.push_back({(m & 1) * d, ((m >> 1) & 1) * d, ((m >> 2) & 1) * d});
      return LatticePolytope(corners);
    }
  }
  throw std::invalid_argument("unknown catalog name: " + name);
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : fixed_entries()) out.push_back(k);
  out.insert(out.end(), {"EX72", "EX63", "Tab:a,b", "Howe:a,b", "Delta3:d", "Delta2:d", "Cube:d"});
  return out;
}

}  // namespace toric3::geom
