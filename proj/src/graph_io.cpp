#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "tb/errors.hpp"
#include "tb/graph.hpp"

namespace tb {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Exactly two nonnegative decimal integers separated by blanks.
std::pair<long long, long long> parse_pair(std::string_view line, int line_no) {
  long long values[2] = {0, 0};
  std::size_t pos = 0;
  for (int k = 0; k < 2; ++k) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    const char* begin = line.data() + pos;
    const char* end = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(begin, end, values[k]);
    if (ec != std::errc{} || ptr == begin || values[k] < 0) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected two nonnegative integers, got '" + std::string(line) +
                       "'");
    }
    pos = static_cast<std::size_t>(ptr - line.data());
    if (k == 0 && (pos >= line.size() || (line[pos] != ' ' && line[pos] != '\t'))) {
      throw ParseError("line " + std::to_string(line_no) + ": malformed pair '" +
                       std::string(line) + "'");
    }
  }
  if (!trim(line.substr(pos)).empty()) {
    throw ParseError("line " + std::to_string(line_no) + ": trailing data in '" +
                     std::string(line) + "'");
  }
  return {values[0], values[1]};
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> data;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    ++line_no;
    std::string_view line = trim(text.substr(start, nl - start));
    if (!line.empty() && line.front() != '#') data.emplace_back(line_no, line);
    start = nl + 1;
  }
  if (data.empty()) throw ParseError("missing header line 'n m'");

  auto [n, m] = parse_pair(data.front().second, data.front().first);
  if (n > 1'000'000) throw ParseError("vertex count " + std::to_string(n) + " too large");
  if (static_cast<long long>(data.size()) - 1 != m) {
    throw ParseError("header declares " + std::to_string(m) + " edges but " +
                     std::to_string(data.size() - 1) + " edge lines follow");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::size_t i = 1; i < data.size(); ++i) {
    auto [u, v] = parse_pair(data[i].second, data[i].first);
    if (u < 1 || u > n || v < 1 || v > n) {
      throw InvalidInput("line " + std::to_string(data[i].first) + ": endpoint outside [1," +
                         std::to_string(n) + "]");
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return Graph(static_cast<int>(n), edges);
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

void write_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << format_graph(g);
}

}  // namespace tb
