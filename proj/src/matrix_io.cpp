#include "simplexmatch/matrix_io.hpp"

#include "simplexmatch/graph_models.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace simplexmatch {
namespace {

double parse_double(std::string_view s, const std::string& where) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw InvalidArgument("cannot parse number '" + std::string(s) + "' in " + where);
  return v;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw Error("format_double failed");
  return std::string(buf, ptr);
}

Matrix read_matrix_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) throw InvalidArgument("'" + path + "': missing dimension line");
  const double nd = parse_double(line, path + " (dimension line)");
  if (nd < 1 || nd != static_cast<int>(nd)) throw InvalidArgument("'" + path + "': bad dimension");
  const int n = static_cast<int>(nd);
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    if (!std::getline(in, line)) throw InvalidArgument("'" + path + "': expected " + std::to_string(n) + " rows");
    std::string_view rest(line);
    for (int j = 0; j < n; ++j) {
      const auto comma = rest.find(',');
      if ((comma == std::string_view::npos) != (j == n - 1))
        throw InvalidArgument("'" + path + "': row " + std::to_string(i) + " does not have " + std::to_string(n) +
                              " columns");
      m(i, j) = parse_double(rest.substr(0, comma), path);
      if (comma != std::string_view::npos) rest.remove_prefix(comma + 1);
    }
  }
  return m;
}

void write_matrix_csv(const std::string& path, const Matrix& m) {
  auto out = open_out(path);
  out << m.rows() << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << format_double(m(i, j));
    }
    out << '\n';
  }
  if (!out) throw IoError("write failed for '" + path + "'");
}

SymMatrix read_graph(const std::string& path) {
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) return SymMatrix(read_matrix_csv(path));
  return load_edge_list(path);
}

Permutation read_permutation(const std::string& path) {
  std::vector<int> map;
  for (double v : read_column(path)) {
    if (v != static_cast<int>(v)) throw InvalidArgument("'" + path + "': non-integer permutation entry");
    map.push_back(static_cast<int>(v));
  }
  return Permutation(std::move(map));
}

void write_permutation(const std::string& path, const Permutation& p) {
  auto out = open_out(path);
  for (int v : p.map()) out << v << '\n';
  if (!out) throw IoError("write failed for '" + path + "'");
}

std::vector<double> read_column(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::vector<double> out;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (first) {
      first = false;
      try {
        out.push_back(parse_double(line, path));
      } catch (const InvalidArgument&) {
        // header line
      }
      continue;
    }
    out.push_back(parse_double(line, path));
  }
  return out;
}

}  // namespace simplexmatch
