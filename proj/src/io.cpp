#include "rig/io.hpp"

#include <fstream>
#include <sstream>

namespace rig {

namespace {

// Yields non-comment, non-blank lines with their 1-based line numbers.
class LineReader {
 public:
  explicit LineReader(const std::string& path) : path_(path), in_(path) {
    if (!in_) throw ParseError(path, 0, "cannot open file");
  }

  bool next(std::string& out, int& line_no) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      std::size_t start = raw.find_first_not_of(" \t\r");
      if (start == std::string::npos || raw[start] == '#') continue;
      out = raw;
      line_no = line_;
      return true;
    }
    return false;
  }

  const std::string& path() const { return path_; }
  int line() const { return line_; }

 private:
  std::string path_;
  std::ifstream in_;
  int line_ = 0;
};

}  // namespace

Graph load_graph(const std::string& path) {
  LineReader rd(path);
  std::string line;
  int ln = 0;
  if (!rd.next(line, ln)) throw ParseError(path, rd.line(), "missing header");
  int n = 0, m = 0;
  {
    std::istringstream is(line);
    std::string extra;
    if (!(is >> n >> m) || (is >> extra))
      throw ParseError(path, ln, "expected header \"n m\"");
  }
  if (n < 1) throw ParseError(path, ln, "vertex count must be positive");
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    if (!rd.next(line, ln))
      throw ParseError(path, rd.line(), "expected " + std::to_string(m) +
                                            " edges, got " + std::to_string(i));
    std::istringstream is(line);
    int u = 0, v = 0;
    std::string extra;
    if (!(is >> u >> v) || (is >> extra))
      throw ParseError(path, ln, "expected edge line \"u v\"");
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw ParseError(path, ln, "edge endpoints out of range");
    edges.emplace_back(u, v);
  }
  if (rd.next(line, ln)) throw ParseError(path, ln, "trailing content");
  try {
    return Graph(n, std::move(edges));
  } catch (const std::exception& e) {
    throw ParseError(path, 0, e.what());
  }
}

Placement load_placement(const std::string& path) {
  LineReader rd(path);
  std::string line;
  int ln = 0;
  std::vector<std::pair<int, Vec>> rows;
  int d = -1;
  while (rd.next(line, ln)) {
    std::istringstream is(line);
    int v = 0;
    if (!(is >> v)) throw ParseError(path, ln, "expected \"v x_1 ... x_d\"");
    Vec coords;
    double x = 0.0;
    while (is >> x) coords.push_back(x);
    if (!is.eof()) throw ParseError(path, ln, "malformed coordinate");
    if (coords.empty()) throw ParseError(path, ln, "missing coordinates");
    if (d < 0) d = (int)coords.size();
    if ((int)coords.size() != d)
      throw ParseError(path, ln, "inconsistent coordinate dimension");
    rows.emplace_back(v, std::move(coords));
  }
  if (rows.empty()) throw ParseError(path, rd.line(), "empty placement file");
  const int n = (int)rows.size();
  Placement p;
  p.points.assign(n, {});
  std::vector<bool> seen(n, false);
  for (auto& [v, coords] : rows) {
    if (v < 0 || v >= n)
      throw ParseError(path, 0, "vertex index " + std::to_string(v) +
                                    " out of range for " + std::to_string(n) +
                                    " rows");
    if (seen[v])
      throw ParseError(path, 0, "vertex " + std::to_string(v) + " repeated");
    seen[v] = true;
    p.points[v] = std::move(coords);
  }
  return p;
}

NormedSpace load_polyhedral_space(const std::string& path) {
  LineReader rd(path);
  std::string line;
  int ln = 0;
  if (!rd.next(line, ln)) throw ParseError(path, rd.line(), "missing header");
  int d = 0, m = 0;
  {
    std::istringstream is(line);
    std::string extra;
    if (!(is >> d >> m) || (is >> extra))
      throw ParseError(path, ln, "expected header \"d m\"");
  }
  std::vector<Vec> facets;
  for (int i = 0; i < m; ++i) {
    if (!rd.next(line, ln))
      throw ParseError(path, rd.line(), "expected " + std::to_string(m) +
                                            " facet rows, got " +
                                            std::to_string(i));
    std::istringstream is(line);
    Vec f;
    double x = 0.0;
    while (is >> x) f.push_back(x);
    if (!is.eof() || (int)f.size() != d)
      throw ParseError(path, ln, "expected " + std::to_string(d) +
                                     " coordinates");
    facets.push_back(std::move(f));
  }
  if (rd.next(line, ln)) throw ParseError(path, ln, "trailing content");
  try {
    return NormedSpace::polyhedral(d, std::move(facets));
  } catch (const std::exception& e) {
    throw ParseError(path, 0, e.what());
  }
}

NormedSpace parse_space(const std::string& descriptor) {
  const auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("space descriptor \"" + descriptor + "\"", 0, why);
  };
  const std::size_t colon = descriptor.find(':');
  if (colon == std::string::npos) throw fail("missing ':'");
  const std::string kind = descriptor.substr(0, colon);
  const std::string rest = descriptor.substr(colon + 1);
  try {
    if (kind == "linf") return NormedSpace::linf(std::stoi(rest));
    if (kind == "poly") return load_polyhedral_space(rest);
    if (kind == "lp") {
      const std::size_t c2 = rest.find(':');
      if (c2 == std::string::npos) throw fail("expected lp:<p>:<d>");
      const std::string p_str = rest.substr(0, c2);
      const int d = std::stoi(rest.substr(c2 + 1));
      if (p_str == "inf") return NormedSpace::linf(d);
      return NormedSpace::lp(std::stod(p_str), d);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw fail(e.what());
  }
  throw fail("unknown space kind \"" + kind + "\"");
}

}  // namespace rig
