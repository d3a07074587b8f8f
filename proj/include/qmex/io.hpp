#ifndef QMEX_IO_HPP
#define QMEX_IO_HPP

#include <string>

#include "qmex/fourier.hpp"
#include "qmex/learn.hpp"

namespace qmex {

/// Shortest round-trip decimal form of a double (stable across runs).
std::string format_double(double v);

/// Columns: draw_id,n1,n2,re,im — one row per draw per frequency, draws in
/// order, frequencies in (n1,n2) lexicographic order from -1 to 1.
std::string coefficient_csv(const CoefficientCloud& cloud);

/// Columns: x1,x2,y_teacher,y_student.
std::string prediction_map_csv(const std::vector<std::array<double, 4>>& map);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace qmex

#endif
