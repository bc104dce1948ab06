#include "sparsehfs/dataset.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "sparsehfs/errors.hpp"

namespace sparsehfs {

namespace {

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    std::string_view cell = line.substr(start, comma == std::string_view::npos
                                                   ? std::string_view::npos
                                                   : comma - start);
    while (!cell.empty() && (cell.front() == ' ' || cell.front() == '\t')) cell.remove_prefix(1);
    while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\t' || cell.back() == '\r'))
      cell.remove_suffix(1);
    cells.push_back(cell);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

bool parse_double(std::string_view s, double& out) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

}  // namespace

Dataset load_feature_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open feature csv: " + path);

  std::string line;
  std::size_t line_no = 0;
  bool has_label = false;
  std::size_t cols = 0;
  std::vector<double> values;
  std::vector<std::int8_t> labels;
  bool first_content = true;

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto cells = split_csv(line);
    if (first_content) {
      first_content = false;
      double tmp;
      bool numeric = true;
      for (const auto& c : cells) {
        if (!parse_double(c, tmp)) {
          numeric = false;
          break;
        }
      }
      if (!numeric) {
        // Header row; a trailing `label` column carries truth classes.
        cols = cells.size();
        has_label = !cells.empty() && cells.back() == "label";
        continue;
      }
      cols = cells.size();
    }
    if (cells.size() != cols)
      throw parse_error(path + ": row " + std::to_string(line_no) + " has " +
                            std::to_string(cells.size()) + " columns, expected " +
                            std::to_string(cols),
                        line_no);
    const std::size_t feature_cols = cols - (has_label ? 1 : 0);
    for (std::size_t c = 0; c < feature_cols; ++c) {
      double v;
      if (!parse_double(cells[c], v) || !std::isfinite(v))
        throw parse_error(path + ": non-numeric cell at row " + std::to_string(line_no) +
                              ", column " + std::to_string(c + 1),
                          line_no, c + 1);
      values.push_back(v);
    }
    if (has_label) {
      double v;
      if (!parse_double(cells.back(), v) || (v != 1.0 && v != -1.0))
        throw parse_error(path + ": label must be -1 or +1 at row " + std::to_string(line_no) +
                              ", column " + std::to_string(cols),
                          line_no, cols);
      labels.push_back(static_cast<std::int8_t>(v));
    }
  }

  if (cols == 0 || values.empty()) throw parse_error(path + ": no data rows");
  const std::size_t feature_cols = cols - (has_label ? 1 : 0);
  if (feature_cols == 0) throw parse_error(path + ": no feature columns");
  const std::size_t rows = values.size() / feature_cols;

  Dataset data;
  data.points.resize(rows, feature_cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < feature_cols; ++c) data.points(r, c) = values[r * feature_cols + c];
  data.truth_labels = std::move(labels);
  return data;
}

void write_feature_csv(const std::string& path, const Dataset& data) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw io_error("cannot open for writing: " + path);
  const bool has_label = !data.truth_labels.empty();
  for (int c = 0; c < data.dim(); ++c) std::fprintf(f, "%sx%d", c ? "," : "", c);
  std::fprintf(f, has_label ? ",label\n" : "\n");
  for (NodeId r = 0; r < data.size(); ++r) {
    for (int c = 0; c < data.dim(); ++c)
      std::fprintf(f, "%s%.17g", c ? "," : "", data.points(r, c));
    if (has_label) std::fprintf(f, ",%d", static_cast<int>(data.truth_labels[r]));
    std::fprintf(f, "\n");
  }
  if (std::fclose(f) != 0) throw io_error("write failed: " + path);
}

}  // namespace sparsehfs
