#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "lbpr/io.hpp"
#include "lbpr/lbset.hpp"

namespace lbpr {

namespace {

void write_sense_header(const Problem &problem, std::ostream &out) {
  out << "sense";
  for (auto s : problem.original_sense()) {
    out << ' ' << to_string(s);
  }
  out << '\n';
}

} // namespace

void write_front(const Problem &problem, const std::vector<Solution> &front,
                 std::ostream &out) {
  write_sense_header(problem, out);
  for (const auto &s : front) {
    const Point y = to_original(problem, s.y);
    out << to_bit_string(s.x) << ' ' << y[0] << ' ' << y[1] << ' ' << y[2] << '\n';
  }
}

void write_front(const Problem &problem, const std::vector<Solution> &front,
                 const std::filesystem::path &path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write front '" + path.string() + "'");
  }
  write_front(problem, front, out);
}

void write_lb_front(const Problem &problem, const LbSet &lb, std::ostream &out,
                    double int_tol) {
  write_sense_header(problem, out);
  out << std::setprecision(12);
  for (const auto &p : lb.points) {
    std::string bits(p.x.size(), 'f');
    for (std::size_t j = 0; j < p.x.size(); ++j) {
      if (std::abs(p.x[j]) <= int_tol) {
        bits[j] = '0';
      } else if (std::abs(p.x[j] - 1.0) <= int_tol) {
        bits[j] = '1';
      }
    }
    const RealPoint y = to_original(problem, p.y);
    out << bits << ' ' << y[0] << ' ' << y[1] << ' ' << y[2] << '\n';
  }
}

std::vector<RealPoint> FrontFile::min_form_points() const {
  std::vector<RealPoint> out;
  out.reserve(records.size());
  for (const auto &r : records) {
    RealPoint y = r.y;
    for (std::size_t k = 0; k < kNumObjectives; ++k) {
      if (senses[k] == ObjectiveSense::Maximize) {
        y[k] = -y[k];
      }
    }
    out.push_back(y);
  }
  return out;
}

FrontFile read_front(std::istream &in) {
  FrontFile file;
  std::string line;
  std::size_t number = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream words(line);
    std::string first;
    if (!(words >> first)) {
      continue;
    }
    if (!have_header) {
      if (first != "sense") {
        throw ParseError(number, "expected 'sense' header, found '" + first + "'");
      }
      for (auto &s : file.senses) {
        std::string word;
        if (!(words >> word)) {
          throw ParseError(number, "field 'sense': expected 3 entries");
        }
        try {
          s = parse_objective_sense(word);
        } catch (const std::invalid_argument &e) {
          throw ParseError(number, std::string("field 'sense': ") + e.what());
        }
      }
      have_header = true;
      continue;
    }
    FrontRecord rec;
    rec.bits = first;
    if (rec.bits.find_first_not_of("01f") != std::string::npos) {
      throw ParseError(number, "field 'x': expected characters 0, 1 or f");
    }
    for (auto &v : rec.y) {
      if (!(words >> v)) {
        throw ParseError(number, "field 'y': expected 3 numbers");
      }
    }
    std::string extra;
    if (words >> extra) {
      throw ParseError(number, "trailing data '" + extra + "'");
    }
    file.records.push_back(std::move(rec));
  }
  if (!have_header) {
    throw ParseError(number, "missing 'sense' header");
  }
  return file;
}

FrontFile read_front(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open front '" + path.string() + "'");
  }
  return read_front(in);
}

} // namespace lbpr
