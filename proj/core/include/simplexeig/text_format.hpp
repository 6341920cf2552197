#pragma once

#include <Eigen/Dense>

#include <string>

namespace simplexeig {

// All floating output is printed with 17 significant digits so that CSV
// and JSON round-trip 64-bit values exactly.
std::string fmt17(double x);

// Compact formatting for report text (3 significant digits, %g).
std::string fmt3(double x);

std::string join17(const Eigen::VectorXd& v, const std::string& sep = ",");

std::string json_escape(const std::string& s);

} // namespace simplexeig
