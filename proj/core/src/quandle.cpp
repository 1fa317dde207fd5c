#include "qf/quandle.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qf {

std::string AxiomViolation::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::NotBijection:
      out << "column " << i << " is not a bijection";
      break;
    case Kind::Idempotency:
      out << "mu_" << i << " does not fix " << i;
      break;
    case Kind::Conjugation:
      out << "mu_{mu_" << i << "(" << j << ")} != mu_" << i << " mu_" << j << " mu_" << i << "^-1";
      break;
  }
  return out.str();
}

bool Profile::constant() const {
  for (const auto& p : patterns_)
    if (p != patterns_.front()) return false;
  return true;
}

std::vector<std::pair<Pattern, int>> Profile::histogram() const {
  std::map<Pattern, int> counts;
  for (const auto& p : patterns_) ++counts[p];
  return {counts.begin(), counts.end()};
}

bool Profile::same_multiset(const Profile& other) const {
  return histogram() == other.histogram();
}

std::string Profile::to_string() const {
  std::string out;
  for (const auto& [pat, count] : histogram()) {
    if (!out.empty()) out += ' ';
    out += pat.to_string() + "x" + std::to_string(count);
  }
  return out;
}

std::vector<AxiomViolation> Quandle::verify(std::span<const Permutation> mus) {
  const int n = static_cast<int>(mus.size());
  if (n == 0) throw std::invalid_argument("empty permutation sequence");
  for (const auto& p : mus)
    if (p.degree() != n)
      throw std::invalid_argument("permutation degree does not match sequence length");

  std::vector<AxiomViolation> out;
  for (int i = 1; i <= n; ++i)
    if (!mus[static_cast<std::size_t>(i - 1)].fixes(i))
      out.push_back({AxiomViolation::Kind::Idempotency, i, 0});

  for (int i = 1; i <= n; ++i) {
    const Permutation& mi = mus[static_cast<std::size_t>(i - 1)];
    const Permutation mi_inv = mi.inverse();
    for (int j = 1; j <= n; ++j) {
      const Permutation& mj = mus[static_cast<std::size_t>(j - 1)];
      const int target = mi(j);
      const Permutation conj = mi.compose(mj).compose(mi_inv);
      if (mus[static_cast<std::size_t>(target - 1)] != conj)
        out.push_back({AxiomViolation::Kind::Conjugation, i, j});
    }
  }
  return out;
}

Quandle QuandleResult::value() const {
  if (quandle) return *quandle;
  std::string msg = "not a quandle:";
  for (const auto& v : violations) msg += " [" + v.describe() + "]";
  throw std::invalid_argument(msg);
}

QuandleResult Quandle::from_permutations(std::vector<Permutation> mus) {
  QuandleResult result;
  result.violations = verify(mus);
  if (result.violations.empty()) result.quandle = Quandle(std::move(mus), verified_tag{});
  return result;
}

QuandleResult Quandle::from_table(const Table& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw std::invalid_argument("empty table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("table is not square");
    for (int v : row)
      if (v < 1 || v > n)
        throw std::invalid_argument("table entry out of range: " + std::to_string(v));
  }

  QuandleResult result;
  std::vector<Permutation> mus;
  for (int b = 1; b <= n; ++b) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    bool bijective = true;
    for (int a = 1; a <= n; ++a) {
      const int v = table[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)];
      images[static_cast<std::size_t>(a - 1)] = v;
      if (seen[static_cast<std::size_t>(v - 1)]) bijective = false;
      seen[static_cast<std::size_t>(v - 1)] = 1;
    }
    if (!bijective) {
      result.violations.push_back({AxiomViolation::Kind::NotBijection, b, 0});
      continue;
    }
    mus.push_back(Permutation(images));
  }
  if (!result.violations.empty()) return result;  // some column unusable

  auto built = from_permutations(std::move(mus));
  return built;
}

Table Quandle::table() const {
  Table out(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_)));
  for (int a = 1; a <= n_; ++a)
    for (int b = 1; b <= n_; ++b)
      out[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] = op(a, b);
  return out;
}

Profile Quandle::profile() const {
  std::vector<Pattern> pats;
  pats.reserve(mus_.size());
  for (const auto& m : mus_) pats.push_back(m.pattern());
  return Profile(std::move(pats));
}

CyclicTypeStatus cyclic_type_status(const Quandle& q, int f) {
  const int n = q.order();
  if (f <= 1 || f > n - 2) return CyclicTypeStatus::FOutOfRange;
  const Pattern want = Pattern::cyclic(n, f);
  for (int i = 1; i <= n; ++i)
    if (q.mu(i).pattern() != want) return CyclicTypeStatus::WrongProfile;
  return CyclicTypeStatus::Yes;
}

bool is_cyclic_type(const Quandle& q, int f) {
  return cyclic_type_status(q, f) == CyclicTypeStatus::Yes;
}

std::optional<int> infer_fixed_point_count(const Quandle& q) {
  const Profile prof = q.profile();
  if (!prof.constant()) return std::nullopt;
  const auto& lens = prof.at(1).lengths();
  const int longest = lens.back();
  const int f = q.order() - longest;
  if (is_cyclic_type(q, f)) return f;
  return std::nullopt;
}

Quandle relabel(const Quandle& q, const Permutation& alpha) {
  if (alpha.degree() != q.order()) throw std::invalid_argument("relabeling degree mismatch");
  const int n = q.order();
  std::vector<Permutation> mus(static_cast<std::size_t>(n), Permutation::identity(n));
  for (int i = 1; i <= n; ++i)
    mus[static_cast<std::size_t>(alpha(i) - 1)] = q.mu(i).conjugated_by(alpha);
  return Quandle::from_permutations(std::move(mus)).value();
}

bool table_less(const Quandle& a, const Quandle& b) {
  return a.table() < b.table();
}

std::vector<TableAxiomViolation> table_axiom_violations(const Table& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw std::invalid_argument("empty table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("table is not square");
    for (int v : row)
      if (v < 1 || v > n)
        throw std::invalid_argument("table entry out of range: " + std::to_string(v));
  }
  auto star = [&table](int a, int b) {
    return table[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)];
  };

  std::vector<TableAxiomViolation> out;
  for (int a = 1; a <= n; ++a)
    if (star(a, a) != a) out.push_back({TableAxiomViolation::Kind::Idempotency, a, 0, 0});

  // right-invertibility: x -> x*b hits every value exactly once
  for (int b = 1; b <= n; ++b) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    bool bijective = true;
    for (int x = 1; x <= n; ++x) {
      const int v = star(x, b);
      if (seen[static_cast<std::size_t>(v - 1)]) bijective = false;
      seen[static_cast<std::size_t>(v - 1)] = 1;
    }
    if (!bijective) out.push_back({TableAxiomViolation::Kind::NotBijection, b, 0, 0});
  }

  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        if (star(star(a, b), c) != star(star(a, c), star(b, c)))
          out.push_back({TableAxiomViolation::Kind::Distributivity, a, b, c});
  return out;
}

}  // namespace qf
