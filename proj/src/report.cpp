#include "lbpr/report.hpp"

#include <algorithm>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

#include "lbpr/heuristic.hpp"
#include "lbpr/io.hpp"

namespace lbpr {

namespace {

constexpr const char *kRunHeader =
    "instance,kind,n,variant,seed,front_size,time_s,lp_count,hv,hv_pct,front_file";

std::vector<std::string> split_csv(const std::string &line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) {
    fields.push_back(field);
  }
  if (!line.empty() && line.back() == ',') {
    fields.emplace_back();
  }
  return fields;
}

void write_optional(std::ostream &out, const std::optional<double> &v) {
  if (v) {
    out << *v;
  }
}

/// Variants sort in their declaration order, unknown names after them.
int variant_rank(const std::string &name) {
  try {
    return static_cast<int>(parse_variant(name));
  } catch (const std::invalid_argument &) {
    return 1000;
  }
}

} // namespace

void write_report_header(std::ostream &out) { out << kRunHeader << '\n'; }

void write_report_row(const RunReport &row, std::ostream &out) {
  std::ostringstream s;
  s << std::setprecision(10);
  s << row.instance << ',' << row.kind << ',' << row.n << ',' << row.variant << ','
    << row.seed << ',' << row.front_size << ',' << row.time_s << ',' << row.lp_count
    << ',';
  write_optional(s, row.hv);
  s << ',';
  write_optional(s, row.hv_pct);
  s << ',' << row.front_file << '\n';
  out << s.str();
}

std::vector<RunReport> read_reports(std::istream &in) {
  std::vector<RunReport> rows;
  std::string line;
  std::size_t number = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    if (!header) {
      if (line != kRunHeader) {
        throw ParseError(number, "expected run report header");
      }
      header = true;
      continue;
    }
    const auto f = split_csv(line);
    if (f.size() != 11) {
      throw ParseError(number, "expected 11 fields, found " + std::to_string(f.size()));
    }
    RunReport r;
    const char *field = "instance";
    try {
      r.instance = f[0];
      r.kind = f[1];
      field = "n";
      r.n = std::stoul(f[2]);
      r.variant = f[3];
      field = "seed";
      r.seed = std::stoull(f[4]);
      field = "front_size";
      r.front_size = std::stoul(f[5]);
      field = "time_s";
      r.time_s = std::stod(f[6]);
      field = "lp_count";
      r.lp_count = std::stoul(f[7]);
      field = "hv";
      if (!f[8].empty())
        r.hv = std::stod(f[8]);
      field = "hv_pct";
      if (!f[9].empty())
        r.hv_pct = std::stod(f[9]);
      r.front_file = f[10];
    } catch (const std::exception &) {
      throw ParseError(number, std::string("field '") + field + "': not a number");
    }
    rows.push_back(std::move(r));
  }
  if (!header) {
    throw ParseError(number, "missing run report header");
  }
  return rows;
}

std::vector<AggregateRow> aggregate(std::vector<RunReport> rows) {
  std::sort(rows.begin(), rows.end(), [](const RunReport &a, const RunReport &b) {
    return std::forward_as_tuple(a.kind, a.n, a.variant, a.instance, a.seed, a.time_s) <
           std::forward_as_tuple(b.kind, b.n, b.variant, b.instance, b.seed, b.time_s);
  });

  struct Sums {
    std::size_t runs = 0;
    double front = 0, time = 0, lps = 0, hv = 0, hv_pct = 0;
    bool hv_ok = true, hv_pct_ok = true;
  };
  using GroupKey = std::tuple<std::string, std::size_t, std::string>;
  // group -> instance -> sums, both in sorted order
  std::map<GroupKey, std::map<std::string, Sums>> groups;
  for (const auto &r : rows) {
    Sums &s = groups[{r.kind, r.n, r.variant}][r.instance];
    ++s.runs;
    s.front += static_cast<double>(r.front_size);
    s.time += r.time_s;
    s.lps += static_cast<double>(r.lp_count);
    s.hv_ok = s.hv_ok && r.hv.has_value();
    s.hv_pct_ok = s.hv_pct_ok && r.hv_pct.has_value();
    s.hv += r.hv.value_or(0.0);
    s.hv_pct += r.hv_pct.value_or(0.0);
  }

  std::vector<AggregateRow> out;
  for (const auto &[key, instances] : groups) {
    AggregateRow a;
    std::tie(a.kind, a.n, a.variant) = key;
    a.instances = instances.size();
    double hv = 0, hv_pct = 0;
    bool hv_ok = true, hv_pct_ok = true;
    for (const auto &[name, s] : instances) {
      const double runs = static_cast<double>(s.runs);
      a.runs += s.runs;
      a.front_size += s.front / runs;
      a.time_s += s.time / runs;
      a.lp_count += s.lps / runs;
      hv += s.hv / runs;
      hv_pct += s.hv_pct / runs;
      hv_ok = hv_ok && s.hv_ok;
      hv_pct_ok = hv_pct_ok && s.hv_pct_ok;
    }
    const double count = static_cast<double>(a.instances);
    a.front_size /= count;
    a.time_s /= count;
    a.lp_count /= count;
    if (hv_ok)
      a.hv = hv / count;
    if (hv_pct_ok)
      a.hv_pct = hv_pct / count;
    out.push_back(std::move(a));
  }
  std::stable_sort(out.begin(), out.end(), [](const AggregateRow &a, const AggregateRow &b) {
    return std::make_tuple(a.kind, a.n, variant_rank(a.variant), a.variant) <
           std::make_tuple(b.kind, b.n, variant_rank(b.variant), b.variant);
  });
  return out;
}

void write_aggregate(const std::vector<AggregateRow> &rows, std::ostream &out) {
  std::ostringstream s;
  s << std::setprecision(10);
  s << "kind,n,variant,instances,runs,front_size,time_s,lp_count,hv,hv_pct\n";
  for (const auto &a : rows) {
    s << a.kind << ',' << a.n << ',' << a.variant << ',' << a.instances << ',' << a.runs
      << ',' << a.front_size << ',' << a.time_s << ',' << a.lp_count << ',';
    write_optional(s, a.hv);
    s << ',';
    write_optional(s, a.hv_pct);
    s << '\n';
  }
  out << s.str();
}

} // namespace lbpr
