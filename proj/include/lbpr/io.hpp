/**
 * @file io.hpp
 * @brief Text formats for instances and solution fronts.
 *
 * Instance file (whitespace separated, '#' starts a comment):
 *
 *     kind knapsack|assignment|general
 *     n <variables>
 *     p 3
 *     sense <min|max> <min|max> <min|max>
 *     objectives
 *     <p rows of n integers, in the stated senses>
 *     # knapsack only
 *     weights
 *     <n integers>
 *     capacity <integer>
 *     # assignment only
 *     tasks <t>            (n must equal t*t)
 *     # general only
 *     m <rows>
 *     constraints
 *     <m rows: n integers, then <=|>=|=, then the right-hand side>
 *
 * Front file: a header line "sense s1 s2 s3" followed by one record per line,
 * "<x as 0/1 string> <y1> <y2> <y3>" with y in the original senses. Fractional
 * components of LP solutions are written as 'f' and their y as decimals.
 */

#ifndef LBPR_IO_HPP
#define LBPR_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "lbpr/model.hpp"

namespace lbpr {

struct LbSet;

/// Malformed input; the message names the line and field.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string &what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

Problem read_instance(std::istream &in);
Problem read_instance(const std::filesystem::path &path);
void write_instance(const Problem &problem, std::ostream &out);
void write_instance(const Problem &problem, const std::filesystem::path &path);

/**
 * @brief Reads a knapsack or assignment instance in the Kirlik benchmark
 * layout. All integers in the file are read in order, brackets and commas
 * are ignored.
 *
 * Knapsack: n, capacity, 3 x n profits (objective-major), n weights.
 * Assignment: n (tasks), 3 x n x n costs (objective, then agent rows).
 */
Problem read_kirlik(std::istream &in, ProblemKind kind);

struct FrontRecord {
  std::string bits;
  RealPoint y{}; ///< original senses

  bool fractional() const { return bits.find('f') != std::string::npos; }
};

struct FrontFile {
  std::array<ObjectiveSense, kNumObjectives> senses{};
  std::vector<FrontRecord> records;

  /// Record points mapped to minimization form.
  std::vector<RealPoint> min_form_points() const;
};

void write_front(const Problem &problem, const std::vector<Solution> &front,
                 std::ostream &out);
void write_front(const Problem &problem, const std::vector<Solution> &front,
                 const std::filesystem::path &path);
void write_lb_front(const Problem &problem, const LbSet &lb, std::ostream &out,
                    double int_tol = 1e-6);

FrontFile read_front(std::istream &in);
FrontFile read_front(const std::filesystem::path &path);

} // namespace lbpr

#endif
