#include "symq/group_io.hpp"

#include <fstream>
#include <sstream>

namespace symq {

GroupPtr read_group_table(std::istream& in, const std::string& name,
                          std::uint64_t seed) {
  std::string label = name;
  std::string line;
  int order = -1;
  std::vector<int> mul;
  while (std::getline(in, line)) {
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') {
      std::size_t text = line.find_first_not_of(" \t", pos + 1);
      if (label.empty() && text != std::string::npos)
        label = line.substr(text);
      continue;
    }
    std::istringstream row(line);
    if (order < 0) {
      if (!(row >> order) || order <= 0)
        throw io_error("expected a positive order on the first data line");
      mul.reserve(static_cast<std::size_t>(order) * order);
      continue;
    }
    int v;
    while (row >> v) mul.push_back(v);
    if (!row.eof()) throw io_error("non-numeric entry in multiplication table");
  }
  if (order < 0) throw io_error("empty group table");
  if (mul.size() != static_cast<std::size_t>(order) * order)
    throw shape_error("expected " + std::to_string(order) + "x" +
                      std::to_string(order) + " table entries, got " +
                      std::to_string(mul.size()));
  return std::make_shared<FiniteGroup>(order, std::move(mul), label,
                                       /*strict=*/false, seed);
}

GroupPtr read_group_file(const std::string& path, std::uint64_t seed) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open group table file: " + path);
  return read_group_table(in, "", seed);
}

}  // namespace symq
