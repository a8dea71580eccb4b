#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "szreg/graph.hpp"
#include "szreg/partition.hpp"

namespace szreg::io {

// Edge list: one "u v" pair per line, 0-based, undirected. Blank lines and
// lines starting with '#' are ignored, except a "# vertices N" header which
// fixes the vertex count (needed for isolated vertices). Without the header
// the vertex count is one more than the largest endpoint.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// Partition: one class per line, "k: v1 v2 ... vm", with k = 0, 1, 2, ...
// in order. The classes must partition {0..n-1}.
Partition read_partition(std::istream& in, std::size_t n);
void write_partition(std::ostream& out, const Partition& p);

Graph load_graph(const std::filesystem::path& path);
Partition load_partition(const std::filesystem::path& path, std::size_t n);
void save_graph(const std::filesystem::path& path, const Graph& g);
void save_partition(const std::filesystem::path& path, const Partition& p);
void save_text(const std::filesystem::path& path, const std::string& text);

} // namespace szreg::io
