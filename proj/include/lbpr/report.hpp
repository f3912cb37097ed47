/**
 * @file report.hpp
 * @brief Per-run CSV records and their aggregation into per-subclass means.
 *
 * Run CSV columns (header mandatory):
 *   instance,kind,n,variant,seed,front_size,time_s,lp_count,hv,hv_pct,front_file
 * hv and hv_pct are blank when no reference was available.
 *
 * Aggregate CSV columns:
 *   kind,n,variant,instances,runs,front_size,time_s,lp_count,hv,hv_pct
 */

#ifndef LBPR_REPORT_HPP
#define LBPR_REPORT_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lbpr {

struct RunReport {
  std::string instance;
  std::string kind;
  std::size_t n = 0;
  std::string variant;
  std::uint64_t seed = 0;
  std::size_t front_size = 0;
  double time_s = 0.0;
  std::size_t lp_count = 0;
  std::optional<double> hv;
  std::optional<double> hv_pct;
  std::string front_file;
};

void write_report_header(std::ostream &out);
void write_report_row(const RunReport &row, std::ostream &out);
/// @throws ParseError on a malformed row or a missing header.
std::vector<RunReport> read_reports(std::istream &in);

struct AggregateRow {
  std::string kind;
  std::size_t n = 0;
  std::string variant;
  std::size_t instances = 0;
  std::size_t runs = 0;
  double front_size = 0.0;
  double time_s = 0.0;
  double lp_count = 0.0;
  std::optional<double> hv;     ///< blank if any row lacks it
  std::optional<double> hv_pct; ///< blank if any row lacks it
};

/**
 * @brief Groups rows by (kind, n, variant). Each instance is first averaged
 * over its runs, then the group averages over instances. Rows are sorted
 * before summation, so the result does not depend on input order.
 */
std::vector<AggregateRow> aggregate(std::vector<RunReport> rows);

void write_aggregate(const std::vector<AggregateRow> &rows, std::ostream &out);

} // namespace lbpr

#endif
