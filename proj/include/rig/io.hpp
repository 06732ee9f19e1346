#pragma once

#include "rig/framework.hpp"

namespace rig {

struct ParseError : std::runtime_error {
  std::string path;
  int line = 0;
  ParseError(std::string p, int l, const std::string& what)
      : std::runtime_error(p + ":" + std::to_string(l) + ": " + what),
        path(std::move(p)),
        line(l) {}
};

/// Graph text format: "n m" header, then m lines "u v" with 0 <= u < v < n.
/// Lines starting with '#' are ignored.
Graph load_graph(const std::string& path);

/// Placement format: one line "v x_1 ... x_d" per vertex, each vertex once.
Placement load_placement(const std::string& path);

/// Polyhedral space file: "d m" header, then m facet functional rows.
NormedSpace load_polyhedral_space(const std::string& path);

/// Space descriptors: "lp:<p>:<d>" (p decimal or "inf"), "linf:<d>",
/// "poly:<path>".
NormedSpace parse_space(const std::string& descriptor);

}  // namespace rig
