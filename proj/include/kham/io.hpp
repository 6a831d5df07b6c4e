#pragma once

// Native graph text format:
//
//   kpartite <k> <n> <m>
//   <u> <v>            (m lines, 0 <= u < v < k*n, u and v in different parts)
//
// Lines starting with `#` are comments; blank lines are ignored. Several
// graphs may follow one another in a single stream.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "kham/constructive.hpp"
#include "kham/graph.hpp"

namespace kham {

// Exactly one graph; throws ParseError with the offending line number.
KPartiteGraph parse_graph(std::string_view text);

// Zero or more graphs back to back.
std::vector<KPartiteGraph> parse_graphs(std::string_view text);

// Header plus edges in ascending order, LF-terminated.
std::string write_graph(const KPartiteGraph& g);

// Whitespace-separated vertex ids, e.g. the `--cycle` argument.
HamCycle parse_cycle(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace kham
