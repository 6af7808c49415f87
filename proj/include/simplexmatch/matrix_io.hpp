#pragma once

#include "simplexmatch/types.hpp"

#include <string>
#include <vector>

namespace simplexmatch {

// Matrix CSV: first line holds n, then n comma-separated rows.
Matrix read_matrix_csv(const std::string& path);
void write_matrix_csv(const std::string& path, const Matrix& m);

// ".csv" files are read as matrix CSV, anything else as an edge list.
SymMatrix read_graph(const std::string& path);

// One image per line: line i holds π(i).
Permutation read_permutation(const std::string& path);
void write_permutation(const std::string& path, const Permutation& p);

// One value per line; blank lines and '#' comments ignored, a non-numeric first line is a header.
std::vector<double> read_column(const std::string& path);

// Shortest round-trip decimal form.
std::string format_double(double v);

}  // namespace simplexmatch
