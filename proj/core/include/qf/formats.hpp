#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "qf/quandle.hpp"

namespace qf {

/// Quandle text formats. Both start with a line holding n.
///   Table format: n rows of n whitespace-separated entries in {1..n};
///     row a, column b holds a*b.
///   Permutation format: n lines, line i holding mu_i in cycle notation.
/// Either format parses the other's output of the same quandle.
enum class QuandleFormat { Table, Permutations };

std::string to_table_text(const Quandle& q);
std::string to_permutation_text(const Quandle& q);
std::string to_text(const Quandle& q, QuandleFormat format);

struct ParsedQuandle {
  QuandleResult result;
  QuandleFormat format;
};

/// Auto-detects the format (a '(' in the second line means permutations).
/// Throws ParseError with 1-based line/column on malformed input; axiom
/// failures are reported through the QuandleResult, not thrown.
ParsedQuandle parse_quandle_text(std::string_view text);

/// Reads a whole stream/file; same contract as parse_quandle_text.
ParsedQuandle read_quandle(std::istream& in);
ParsedQuandle read_quandle_file(const std::string& path);  // ParseError on unreadable file

}  // namespace qf
