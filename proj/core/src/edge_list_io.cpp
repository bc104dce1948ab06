#include "sparsehfs/edge_list_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "sparsehfs/errors.hpp"

namespace sparsehfs {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Splits on runs of tabs/spaces. Returns false if there are not exactly
// `want` fields.
bool split_fields(std::string_view s, std::string_view* out, int want) {
  int got = 0;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    if (i >= s.size()) break;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (got == want) return false;
    out[got++] = s.substr(i, j - i);
    i = j;
  }
  return got == want;
}

bool parse_u32(std::string_view s, NodeId& out) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

bool parse_f64(std::string_view s, double& out) {
  // std::from_chars<double> exists in libstdc++ 11; strtod kept out because
  // it is locale-sensitive.
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

// `# nodes=<n>` possibly with spaces after '#'.
std::optional<NodeId> parse_nodes_header(std::string_view line) {
  std::string_view s = trim(line);
  if (s.empty() || s.front() != '#') return std::nullopt;
  s.remove_prefix(1);
  s = trim(s);
  constexpr std::string_view kKey = "nodes=";
  if (s.substr(0, kKey.size()) != kKey) return std::nullopt;
  NodeId n = 0;
  if (!parse_u32(trim(s.substr(kKey.size())), n)) return std::nullopt;
  return n;
}

WeightedEdge parse_edge_line(std::string_view line, NodeId n, const std::string& path,
                             std::size_t line_no) {
  std::string_view f[3];
  if (!split_fields(line, f, 3))
    throw parse_error(path + ": expected 'u<TAB>v<TAB>weight' at line " + std::to_string(line_no),
                      line_no);
  WeightedEdge e;
  if (!parse_u32(f[0], e.u) || !parse_u32(f[1], e.v))
    throw parse_error(path + ": bad node id at line " + std::to_string(line_no), line_no);
  if (!parse_f64(f[2], e.weight))
    throw parse_error(path + ": bad weight at line " + std::to_string(line_no), line_no);
  if (e.u >= n || e.v >= n)
    throw parse_error(path + ": node id out of range (n=" + std::to_string(n) + ") at line " +
                          std::to_string(line_no),
                      line_no);
  if (e.u == e.v)
    throw parse_error(path + ": self-loop at line " + std::to_string(line_no), line_no);
  if (!(e.weight > 0.0) || !std::isfinite(e.weight))
    throw parse_error(path + ": weight must be positive at line " + std::to_string(line_no),
                      line_no);
  return e;
}

}  // namespace

EdgeListFileSource::EdgeListFileSource(const std::string& path) : path_(path), in_(path) {
  if (!in_) throw io_error("cannot open edge list: " + path);
  // The nodes= header must precede any edge line.
  std::string line;
  while (std::getline(in_, line)) {
    ++line_no_;
    std::string_view s = trim(line);
    if (s.empty()) continue;
    if (s.front() == '#') {
      if (auto n = parse_nodes_header(s)) {
        if (*n == 0) throw parse_error(path_ + ": header nodes=0 is invalid", line_no_);
        n_ = *n;
        return;
      }
      continue;
    }
    throw parse_error(path_ + ": missing '# nodes=<n>' header before first edge", line_no_);
  }
  throw parse_error(path_ + ": missing '# nodes=<n>' header");
}

std::optional<WeightedEdge> EdgeListFileSource::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_no_;
    std::string_view s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    return parse_edge_line(s, n_, path_, line_no_);
  }
  return std::nullopt;
}

EdgeListData read_edge_list(const std::string& path) {
  EdgeListFileSource src(path);
  EdgeListData data;
  data.n = src.num_nodes();
  while (auto e = src.next()) data.edges.push_back(*e);
  return data;
}

WeightedGraph read_graph(const std::string& path) {
  EdgeListData data = read_edge_list(path);
  return WeightedGraph(data.n, std::move(data.edges));
}

void write_edge_list(const std::string& path, NodeId n, std::span<const WeightedEdge> edges) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw io_error("cannot open for writing: " + path);
  std::fprintf(f, "# nodes=%u\n", n);
  for (const auto& e : edges) {
    std::fprintf(f, "%u\t%u\t%.17g\n", e.u, e.v, e.weight);
  }
  if (std::fclose(f) != 0) throw io_error("write failed: " + path);
}

}  // namespace sparsehfs
