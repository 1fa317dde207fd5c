#include "qf/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace qf {

Pattern::Pattern(std::vector<int> lengths) : lengths_(std::move(lengths)) {
  for (int len : lengths_) {
    if (len < 1) throw std::invalid_argument("cycle length must be positive");
  }
  std::sort(lengths_.begin(), lengths_.end());
}

Pattern Pattern::cyclic(int n, int f) {
  if (f < 0 || n - f < 2) throw std::invalid_argument("cyclic pattern needs n-f >= 2");
  std::vector<int> lens(static_cast<std::size_t>(f), 1);
  lens.push_back(n - f);
  return Pattern(std::move(lens));
}

int Pattern::total() const noexcept {
  return std::accumulate(lengths_.begin(), lengths_.end(), 0);
}

std::string Pattern::to_string() const {
  std::string out = "{";
  for (std::size_t k = 0; k < lengths_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(lengths_[k]);
  }
  out += '}';
  return out;
}

Permutation::Permutation(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  if (n == 0) throw std::invalid_argument("permutation degree must be positive");
  img_.assign(images.size(), -1);
  std::vector<char> seen(images.size(), 0);
  for (int k = 0; k < n; ++k) {
    const int v = images[static_cast<std::size_t>(k)];
    if (v < 1 || v > n) throw std::invalid_argument("image out of range: " + std::to_string(v));
    if (seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("repeated image: " + std::to_string(v));
    seen[static_cast<std::size_t>(v - 1)] = 1;
    img_[static_cast<std::size_t>(k)] = v - 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("permutation degree must be positive");
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img), raw_tag{});
}

Permutation Permutation::from_cycles(int n, std::span<const std::vector<int>> cycles) {
  if (n < 1) throw std::invalid_argument("permutation degree must be positive");
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (const auto& cyc : cycles) {
    for (int p : cyc) {
      if (p < 1 || p > n) throw std::invalid_argument("cycle point out of range: " + std::to_string(p));
      if (used[static_cast<std::size_t>(p - 1)])
        throw std::invalid_argument("repeated cycle point: " + std::to_string(p));
      used[static_cast<std::size_t>(p - 1)] = 1;
    }
    const auto len = cyc.size();
    for (std::size_t k = 0; k < len; ++k)
      img[static_cast<std::size_t>(cyc[k] - 1)] = cyc[(k + 1) % len] - 1;
  }
  return Permutation(std::move(img), raw_tag{});
}

Permutation Permutation::from_cycles(int n, std::initializer_list<std::vector<int>> cycles) {
  std::vector<std::vector<int>> v(cycles);
  return from_cycles(n, std::span<const std::vector<int>>(v));
}

Permutation Permutation::parse_cycles(int n, std::string_view text) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw ParseError("expected '('", 0, static_cast<int>(pos) + 1);
    ++pos;
    std::vector<int> cyc;
    for (;;) {
      skip_ws();
      if (pos >= text.size()) throw ParseError("unterminated cycle", 0, static_cast<int>(pos) + 1);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("expected point or ')'", 0, static_cast<int>(pos) + 1);
      int value = 0;
      const std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > 1'000'000) throw ParseError("point too large", 0, static_cast<int>(start) + 1);
        ++pos;
      }
      cyc.push_back(value);
    }
    if (cyc.empty()) throw ParseError("empty cycle", 0, static_cast<int>(pos));
    cycles.push_back(std::move(cyc));
    skip_ws();
  }
  try {
    return from_cycles(n, std::span<const std::vector<int>>(cycles));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0, 1);
  }
}

int Permutation::operator()(int point) const {
  if (point < 1 || point > degree())
    throw std::invalid_argument("point out of range: " + std::to_string(point));
  return img_[static_cast<std::size_t>(point - 1)] + 1;
}

Permutation Permutation::compose(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw std::invalid_argument("degree mismatch in compose");
  std::vector<int> img(img_.size());
  for (std::size_t k = 0; k < img_.size(); ++k)
    img[k] = img_[static_cast<std::size_t>(rhs.img_[k])];
  return Permutation(std::move(img), raw_tag{});
}

Permutation Permutation::inverse() const {
  std::vector<int> img(img_.size());
  for (std::size_t k = 0; k < img_.size(); ++k)
    img[static_cast<std::size_t>(img_[k])] = static_cast<int>(k);
  return Permutation(std::move(img), raw_tag{});
}

Permutation Permutation::power(long long k) const {
  Permutation base = k >= 0 ? *this : inverse();
  unsigned long long e = k >= 0 ? static_cast<unsigned long long>(k)
                                : static_cast<unsigned long long>(-(k + 1)) + 1;
  Permutation acc = identity(degree());
  while (e) {
    if (e & 1) acc = acc.compose(base);
    base = base.compose(base);
    e >>= 1;
  }
  return acc;
}

Permutation Permutation::conjugated_by(const Permutation& alpha) const {
  return alpha.compose(*this).compose(alpha.inverse());
}

std::vector<std::vector<int>> Permutation::cycles() const {
  const int n = degree();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> out;
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start - 1)]) continue;
    std::vector<int> cyc;
    int p = start;
    do {
      cyc.push_back(p);
      seen[static_cast<std::size_t>(p - 1)] = 1;
      p = (*this)(p);
    } while (p != start);
    out.push_back(std::move(cyc));
  }
  return out;  // starts are increasing, so cycles are sorted by minimum
}

Pattern Permutation::pattern() const {
  std::vector<int> lens;
  for (const auto& cyc : cycles()) lens.push_back(static_cast<int>(cyc.size()));
  return Pattern(std::move(lens));
}

std::vector<int> Permutation::fixed_points() const {
  std::vector<int> out;
  for (int p = 1; p <= degree(); ++p)
    if (fixes(p)) out.push_back(p);
  return out;
}

std::vector<int> Permutation::moved_points() const {
  std::vector<int> out;
  for (int p = 1; p <= degree(); ++p)
    if (!fixes(p)) out.push_back(p);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < img_.size(); ++k)
    if (img_[k] != static_cast<int>(k)) return false;
  return true;
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(img_.size());
  for (std::size_t k = 0; k < img_.size(); ++k) out[k] = img_[k] + 1;
  return out;
}

std::string Permutation::cycle_string() const {
  std::string out;
  for (const auto& cyc : cycles()) {
    out += '(';
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(cyc[k]);
    }
    out += ')';
  }
  return out;
}

}  // namespace qf
