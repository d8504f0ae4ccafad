#include "ptc/table.hpp"

#include <cstdio>

#include "ptc/errors.hpp"
#include "ptc/report.hpp"

namespace ptc {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::vector<ComparisonRow> comparison_table(Parity parity, double a, int m_max,
                                            const SolverConfig& cfg) {
  if (m_max < 1) throw DomainError("comparison_table: m_max must be >= 1");
  std::vector<ComparisonRow> rows;
  for (int m = 1; m <= m_max; ++m) {
    for (const Branch branch : {Branch::Plus, Branch::Minus}) {
      const CatenaryFit fit = build_polyline(parity, m, a, branch, cfg);
      // Positive-abscissa interior vertices: one row per distinct radius.
      const std::size_t center = static_cast<std::size_t>(m);
      const std::size_t first =
          parity == Parity::Odd ? center + 1 : center;
      for (int k = 0; k < m; ++k) {
        const auto& v = fit.vertices[first + static_cast<std::size_t>(k)];
        const double reference = catenary_eval(fit.reference, v.t);
        rows.push_back(ComparisonRow{m, branch, k, v.t, v.r, reference,
                                     v.r - reference});
      }
    }
  }
  return rows;
}

std::string csv_quote(std::string_view field) {
  const bool needs_quoting =
      field.find_first_of(",\"\r\n") != std::string_view::npos;
  if (!needs_quoting) return std::string(field);
  std::string quoted = "\"";
  for (const char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string to_csv(std::span<const ComparisonRow> rows) {
  std::string out = "m,branch,vertex,t,polyline_r,catenary_r,error\n";
  for (const auto& row : rows) {
    out += std::to_string(row.m);
    out += ',';
    out += csv_quote(branch_name(row.branch));
    out += ',';
    out += std::to_string(row.vertex);
    out += ',';
    out += fmt17(row.t);
    out += ',';
    out += fmt17(row.polyline_r);
    out += ',';
    out += fmt17(row.catenary_r);
    out += ',';
    out += fmt17(row.error);
    out += '\n';
  }
  return out;
}

}  // namespace ptc
