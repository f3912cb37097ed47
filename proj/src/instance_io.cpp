#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "lbpr/io.hpp"

namespace lbpr {

namespace {

struct Token {
  std::string text;
  std::size_t line = 0;
};

/// Whitespace tokenizer that drops '#' comments and remembers line numbers.
class TokenStream {
public:
  explicit TokenStream(std::istream &in) {
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
      ++number;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      std::istringstream words(line);
      std::string word;
      while (words >> word) {
        tokens_.push_back({word, number});
      }
      last_line_ = number;
    }
  }

  bool done() const { return pos_ >= tokens_.size(); }

  const Token &peek() const {
    if (done()) {
      throw ParseError(last_line_, "unexpected end of file");
    }
    return tokens_[pos_];
  }

  Token next() {
    const Token &t = peek();
    ++pos_;
    return t;
  }

  void expect(std::string_view keyword) {
    Token t = next();
    if (t.text != keyword) {
      throw ParseError(t.line, "expected '" + std::string(keyword) + "', found '" +
                                   t.text + "'");
    }
  }

  Coefficient integer(std::string_view field) {
    Token t = next();
    Coefficient value = 0;
    const char *first = t.text.data();
    const char *last = first + t.text.size();
    if (*first == '+') {
      ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
      throw ParseError(t.line, "field '" + std::string(field) +
                                   "': expected an integer, found '" + t.text + "'");
    }
    return value;
  }

  std::size_t count(std::string_view field) {
    const std::size_t line = peek().line;
    Coefficient v = integer(field);
    if (v < 0) {
      throw ParseError(line, "field '" + std::string(field) + "' must be nonnegative");
    }
    return static_cast<std::size_t>(v);
  }

  std::size_t line() const { return done() ? last_line_ : tokens_[pos_].line; }

private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t last_line_ = 0;
};

} // namespace

Problem read_instance(std::istream &in) {
  TokenStream ts(in);

  ts.expect("kind");
  Token kind_token = ts.next();
  ProblemKind kind;
  try {
    kind = parse_kind(kind_token.text);
  } catch (const std::invalid_argument &e) {
    throw ParseError(kind_token.line, std::string("field 'kind': ") + e.what());
  }

  ts.expect("n");
  const std::size_t n = ts.count("n");
  ts.expect("p");
  const std::size_t p_line = ts.line();
  const std::size_t p = ts.count("p");
  if (p != kNumObjectives) {
    throw ParseError(p_line, "field 'p': only p = 3 is supported, found " +
                                 std::to_string(p));
  }

  ts.expect("sense");
  std::array<ObjectiveSense, kNumObjectives> senses{};
  for (auto &s : senses) {
    Token t = ts.next();
    try {
      s = parse_objective_sense(t.text);
    } catch (const std::invalid_argument &e) {
      throw ParseError(t.line, std::string("field 'sense': ") + e.what());
    }
  }

  ts.expect("objectives");
  std::vector<std::vector<Coefficient>> objectives(kNumObjectives,
                                                   std::vector<Coefficient>(n));
  for (auto &row : objectives) {
    for (auto &v : row) {
      v = ts.integer("objectives");
    }
  }

  const std::size_t block_line = ts.line();
  try {
    switch (kind) {
    case ProblemKind::Knapsack: {
      for (auto s : senses) {
        if (s != ObjectiveSense::Maximize) {
          throw ValidationError("knapsack objectives must be 'max'");
        }
      }
      ts.expect("weights");
      std::vector<Coefficient> weights(n);
      for (auto &w : weights) {
        w = ts.integer("weights");
      }
      ts.expect("capacity");
      const Coefficient capacity = ts.integer("capacity");
      if (!ts.done()) {
        throw ParseError(ts.line(), "trailing data '" + ts.peek().text + "'");
      }
      return Problem::knapsack(objectives, weights, capacity);
    }
    case ProblemKind::Assignment: {
      for (auto s : senses) {
        if (s != ObjectiveSense::Minimize) {
          throw ValidationError("assignment objectives must be 'min'");
        }
      }
      ts.expect("tasks");
      const std::size_t tasks = ts.count("tasks");
      if (tasks * tasks != n) {
        throw ValidationError("assignment needs n = tasks^2");
      }
      if (!ts.done()) {
        throw ParseError(ts.line(), "trailing data '" + ts.peek().text + "'");
      }
      return Problem::assignment(tasks, objectives);
    }
    case ProblemKind::General: {
      ts.expect("m");
      const std::size_t m = ts.count("m");
      ts.expect("constraints");
      std::vector<ConstraintRow> rows(m);
      for (auto &row : rows) {
        row.coeffs.resize(n);
        for (auto &a : row.coeffs) {
          a = ts.integer("constraints");
        }
        Token sense = ts.next();
        try {
          row.sense = parse_row_sense(sense.text);
        } catch (const std::invalid_argument &e) {
          throw ParseError(sense.line, std::string("field 'constraints': ") + e.what());
        }
        row.rhs = ts.integer("constraints");
      }
      if (!ts.done()) {
        throw ParseError(ts.line(), "trailing data '" + ts.peek().text + "'");
      }
      return Problem::general(objectives, senses, std::move(rows));
    }
    }
  } catch (const ValidationError &e) {
    throw ValidationError("line " + std::to_string(block_line) + ": " + e.what());
  }
  throw ParseError(kind_token.line, "unsupported kind");
}

Problem read_instance(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open instance '" + path.string() + "'");
  }
  return read_instance(in);
}

namespace {

void write_row(std::ostream &out, const std::vector<Coefficient> &row) {
  for (std::size_t j = 0; j < row.size(); ++j) {
    out << (j ? " " : "") << row[j];
  }
}

} // namespace

void write_instance(const Problem &problem, std::ostream &out) {
  out << "kind " << to_string(problem.kind()) << '\n';
  out << "n " << problem.num_vars() << '\n';
  out << "p " << kNumObjectives << '\n';
  out << "sense";
  for (auto s : problem.original_sense()) {
    out << ' ' << to_string(s);
  }
  out << "\nobjectives\n";
  for (std::size_t k = 0; k < kNumObjectives; ++k) {
    write_row(out, problem.original_objective(k));
    out << '\n';
  }
  switch (problem.kind()) {
  case ProblemKind::Knapsack:
    out << "weights\n";
    write_row(out, problem.weights());
    out << "\ncapacity " << problem.capacity() << '\n';
    break;
  case ProblemKind::Assignment:
    out << "tasks " << problem.tasks() << '\n';
    break;
  case ProblemKind::General:
    out << "m " << problem.num_rows() << "\nconstraints\n";
    for (const auto &row : problem.rows()) {
      write_row(out, row.coeffs);
      out << ' ' << to_string(row.sense) << ' ' << row.rhs << '\n';
    }
    break;
  }
}

void write_instance(const Problem &problem, const std::filesystem::path &path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write instance '" + path.string() + "'");
  }
  write_instance(problem, out);
  if (!out) {
    throw std::runtime_error("error writing instance '" + path.string() + "'");
  }
}

Problem read_kirlik(std::istream &in, ProblemKind kind) {
  std::vector<Coefficient> values;
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  for (char &c : text) {
    if (c == '[' || c == ']' || c == ',') {
      c = ' ';
    }
  }
  std::istringstream words(text);
  std::string word;
  while (words >> word) {
    Coefficient v = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
    if (ec != std::errc{} || ptr != word.data() + word.size()) {
      throw ParseError(0, "kirlik file: non-integer token '" + word + "'");
    }
    values.push_back(v);
  }
  std::size_t pos = 0;
  auto take = [&]() {
    if (pos >= values.size()) {
      throw ParseError(0, "kirlik file: too few values");
    }
    return values[pos++];
  };

  if (kind == ProblemKind::Knapsack) {
    const auto n = static_cast<std::size_t>(take());
    const Coefficient capacity = take();
    std::vector<std::vector<Coefficient>> profits(kNumObjectives,
                                                  std::vector<Coefficient>(n));
    for (auto &row : profits) {
      for (auto &v : row) {
        v = take();
      }
    }
    std::vector<Coefficient> weights(n);
    for (auto &w : weights) {
      w = take();
    }
    if (pos != values.size()) {
      throw ParseError(0, "kirlik file: trailing values");
    }
    return Problem::knapsack(profits, weights, capacity);
  }
  if (kind == ProblemKind::Assignment) {
    const auto tasks = static_cast<std::size_t>(take());
    std::vector<std::vector<Coefficient>> costs(kNumObjectives,
                                                std::vector<Coefficient>(tasks * tasks));
    for (auto &row : costs) {
      for (auto &v : row) {
        v = take();
      }
    }
    if (pos != values.size()) {
      throw ParseError(0, "kirlik file: trailing values");
    }
    return Problem::assignment(tasks, costs);
  }
  throw std::invalid_argument("kirlik layout only covers knapsack and assignment");
}

} // namespace lbpr
