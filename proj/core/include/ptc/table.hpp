#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ptc/catenary.hpp"

namespace ptc {

/// One polyline-vs-catenary comparison row: vertex k of the m-cone-pair
/// polyline on the positive abscissa side.
struct ComparisonRow {
  int m = 0;
  Branch branch = Branch::Plus;
  int vertex = 0;  // profile index k, 0-based from the center
  double t = 0.0;
  double polyline_r = 0.0;
  double catenary_r = 0.0;
  double error = 0.0;  // polyline_r - catenary_r

  friend bool operator==(const ComparisonRow&, const ComparisonRow&) = default;
};

/// Rows for every m in 1..m_max, Plus branch before Minus.
std::vector<ComparisonRow> comparison_table(Parity parity, double a, int m_max,
                                            const SolverConfig& cfg = {});

/// RFC 4180 field quoting: wraps and doubles quotes only when needed.
std::string csv_quote(std::string_view field);

/// CSV with header m,branch,vertex,t,polyline_r,catenary_r,error and numbers
/// at 17 significant digits.
std::string to_csv(std::span<const ComparisonRow> rows);

}  // namespace ptc
