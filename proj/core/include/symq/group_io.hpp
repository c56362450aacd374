#pragma once

#include <iosfwd>
#include <string>

#include "symq/group.hpp"

namespace symq {

// Multiplication-table format: optional `# label` comment lines, a line
// with the order n, then n lines of n whitespace-separated 0-based
// indices (row g, column h, entry g*h). Throws io_error on unreadable
// input and input_error if the table is not a group.
// `seed` feeds the sampled associativity check used above the exhaustive
// order limit.
GroupPtr read_group_table(std::istream& in, const std::string& name = "",
                          std::uint64_t seed = 0);
GroupPtr read_group_file(const std::string& path, std::uint64_t seed = 0);

}  // namespace symq
