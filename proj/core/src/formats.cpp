#include "qf/formats.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace qf {

namespace {

struct Lines {
  std::vector<std::string> lines;  // raw, 1-based via index+1
};

Lines split_lines(std::string_view text) {
  Lines out;
  std::string current;
  for (char ch : text) {
    if (ch == '\n') {
      out.lines.push_back(current);
      current.clear();
    } else if (ch != '\r') {
      current.push_back(ch);
    }
  }
  if (!current.empty()) out.lines.push_back(current);
  return out;
}

bool blank(const std::string& s) {
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  return true;
}

int parse_int(const std::string& line, std::size_t& pos, int line_no) {
  while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
  if (pos >= line.size() || !std::isdigit(static_cast<unsigned char>(line[pos])))
    throw ParseError("expected integer", line_no, static_cast<int>(pos) + 1);
  int value = 0;
  const std::size_t start = pos;
  while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) {
    value = value * 10 + (line[pos] - '0');
    if (value > 1'000'000) throw ParseError("integer too large", line_no, static_cast<int>(start) + 1);
    ++pos;
  }
  return value;
}

void expect_line_end(const std::string& line, std::size_t pos, int line_no) {
  while (pos < line.size()) {
    if (!std::isspace(static_cast<unsigned char>(line[pos])))
      throw ParseError("trailing characters", line_no, static_cast<int>(pos) + 1);
    ++pos;
  }
}

}  // namespace

std::string to_table_text(const Quandle& q) {
  std::string out = std::to_string(q.order());
  out += '\n';
  for (const auto& row : q.table()) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(row[k]);
    }
    out += '\n';
  }
  return out;
}

std::string to_permutation_text(const Quandle& q) {
  std::string out = std::to_string(q.order());
  out += '\n';
  for (int i = 1; i <= q.order(); ++i) {
    out += q.mu(i).cycle_string();
    out += '\n';
  }
  return out;
}

std::string to_text(const Quandle& q, QuandleFormat format) {
  return format == QuandleFormat::Table ? to_table_text(q) : to_permutation_text(q);
}

ParsedQuandle parse_quandle_text(std::string_view text) {
  const Lines split = split_lines(text);
  // keep only non-blank lines, remembering original numbers
  std::vector<std::pair<int, const std::string*>> lines;
  for (std::size_t k = 0; k < split.lines.size(); ++k)
    if (!blank(split.lines[k])) lines.emplace_back(static_cast<int>(k) + 1, &split.lines[k]);

  if (lines.empty()) throw ParseError("empty input", 1, 1);

  std::size_t pos = 0;
  const int n = parse_int(*lines[0].second, pos, lines[0].first);
  expect_line_end(*lines[0].second, pos, lines[0].first);
  if (n < 1) throw ParseError("order must be positive", lines[0].first, 1);
  if (n > 1024) throw ParseError("order too large", lines[0].first, 1);
  if (lines.size() < static_cast<std::size_t>(n) + 1) {
    const int last = lines.back().first;
    throw ParseError("expected " + std::to_string(n) + " data lines", last, 1);
  }
  if (lines.size() > static_cast<std::size_t>(n) + 1) {
    const int extra = lines[static_cast<std::size_t>(n) + 1].first;
    throw ParseError("unexpected extra line", extra, 1);
  }

  const bool perm_format = lines[1].second->find('(') != std::string::npos;
  ParsedQuandle out{.result = {}, .format = perm_format ? QuandleFormat::Permutations
                                                        : QuandleFormat::Table};
  if (perm_format) {
    std::vector<Permutation> mus;
    mus.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
      const auto& [line_no, line] = lines[static_cast<std::size_t>(i)];
      try {
        mus.push_back(Permutation::parse_cycles(n, *line));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line_no, e.col);
      }
    }
    out.result = Quandle::from_permutations(std::move(mus));
  } else {
    Table table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 1; a <= n; ++a) {
      const auto& [line_no, line] = lines[static_cast<std::size_t>(a)];
      std::size_t col = 0;
      for (int b = 1; b <= n; ++b) {
        const int v = parse_int(*line, col, line_no);
        if (v < 1 || v > n)
          throw ParseError("entry out of range: " + std::to_string(v), line_no, 1);
        table[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] = v;
      }
      expect_line_end(*line, col, line_no);
    }
    out.result = Quandle::from_table(table);
  }
  return out;
}

ParsedQuandle read_quandle(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_quandle_text(buffer.str());
}

ParsedQuandle read_quandle_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path, 1, 1);
  return read_quandle(in);
}

}  // namespace qf
