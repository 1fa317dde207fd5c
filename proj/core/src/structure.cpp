#include "qf/structure.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace qf {

const std::vector<int>& FixedPointData::C(int i) const {
  if (!cycle) throw std::logic_error("cycle sets are defined only for cyclic-type quandles");
  return cycle->at(static_cast<std::size_t>(i - 1));
}

FixedPointData fixed_point_data(const Quandle& q) {
  FixedPointData out;
  const int n = q.order();
  out.fixed.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) out.fixed.push_back(q.mu(i).fixed_points());
  if (infer_fixed_point_count(q)) {
    std::vector<std::vector<int>> cycles;
    cycles.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) cycles.push_back(q.mu(i).moved_points());
    out.cycle = std::move(cycles);
  }
  return out;
}

Connectivity connectivity(const Quandle& q) {
  const int n = q.order();
  Connectivity out;
  out.reached.assign(static_cast<std::size_t>(n), false);
  std::vector<std::pair<int, int>> via(static_cast<std::size_t>(n), {0, 0});  // (parent, signed gen)

  std::deque<int> queue;
  out.reached[0] = true;
  queue.push_back(1);
  while (!queue.empty()) {
    const int p = queue.front();
    queue.pop_front();
    for (int g = 1; g <= n; ++g) {
      for (int sign : {+1, -1}) {
        const int img = sign > 0 ? q.mu(g)(p) : q.mu(g).inverse()(p);
        if (!out.reached[static_cast<std::size_t>(img - 1)]) {
          out.reached[static_cast<std::size_t>(img - 1)] = true;
          via[static_cast<std::size_t>(img - 1)] = {p, sign * g};
          queue.push_back(img);
        }
      }
    }
  }

  out.words.assign(static_cast<std::size_t>(n), {});
  out.connected = true;
  for (int p = 1; p <= n; ++p) {
    if (!out.reached[static_cast<std::size_t>(p - 1)]) {
      out.connected = false;
      continue;
    }
    std::vector<int> word;
    for (int at = p; at != 1; at = via[static_cast<std::size_t>(at - 1)].first)
      word.push_back(via[static_cast<std::size_t>(at - 1)].second);
    std::reverse(word.begin(), word.end());
    out.words[static_cast<std::size_t>(p - 1)] = std::move(word);
  }
  return out;
}

bool is_connected(const Quandle& q) { return connectivity(q).connected; }

bool are_associate(const Quandle& q, int i, int j) {
  return i != j && q.mu(i).fixes(j) && q.mu(j).fixes(i);
}

PartitionClasses PartitionClasses::singletons(int n) {
  PartitionClasses out;
  for (int p = 1; p <= n; ++p) out.classes.push_back({p});
  return out;
}

PartitionClasses PartitionClasses::from_classes(int n, std::vector<std::vector<int>> classes) {
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (auto& cls : classes) {
    if (cls.empty()) throw std::invalid_argument("empty partition class");
    std::sort(cls.begin(), cls.end());
    for (int p : cls) {
      if (p < 1 || p > n) throw std::invalid_argument("partition element out of range");
      if (seen[static_cast<std::size_t>(p - 1)])
        throw std::invalid_argument("partition classes overlap at " + std::to_string(p));
      seen[static_cast<std::size_t>(p - 1)] = 1;
    }
  }
  for (int p = 1; p <= n; ++p)
    if (!seen[static_cast<std::size_t>(p - 1)])
      throw std::invalid_argument("partition does not cover " + std::to_string(p));
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return PartitionClasses{std::move(classes)};
}

int PartitionClasses::class_of(int element) const {
  for (std::size_t k = 0; k < classes.size(); ++k)
    for (int p : classes[k])
      if (p == element) return static_cast<int>(k) + 1;
  throw std::invalid_argument("element not covered by partition");
}

std::string PartitionClasses::label(int class_index) const {
  const auto& cls = classes.at(static_cast<std::size_t>(class_index - 1));
  std::string out = "{";
  for (std::size_t k = 0; k < cls.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(cls[k]);
  }
  out += '}';
  return out;
}

AssociationClasses association_classes(const Quandle& q) {
  const int n = q.order();
  std::vector<std::vector<char>> rel(static_cast<std::size_t>(n),
                                     std::vector<char>(static_cast<std::size_t>(n), 0));
  for (int i = 1; i <= n; ++i) {
    rel[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i - 1)] = 1;
    for (int j = i + 1; j <= n; ++j)
      if (are_associate(q, i, j)) {
        rel[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = 1;
        rel[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = 1;
      }
  }

  AssociationClasses out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (!rel[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]) continue;
      for (int k = 1; k <= n; ++k)
        if (rel[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)] &&
            !rel[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)]) {
          out.failure = {i, j, k};
          return out;
        }
    }

  std::vector<char> placed(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> classes;
  for (int i = 1; i <= n; ++i) {
    if (placed[static_cast<std::size_t>(i - 1)]) continue;
    std::vector<int> cls;
    for (int j = i; j <= n; ++j)
      if (rel[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]) {
        cls.push_back(j);
        placed[static_cast<std::size_t>(j - 1)] = 1;
      }
    classes.push_back(std::move(cls));
  }
  out.classes = PartitionClasses::from_classes(n, std::move(classes));
  return out;
}

bool is_congruence(const Quandle& q, const PartitionClasses& partition) {
  const int n = q.order();
  std::vector<int> cls(static_cast<std::size_t>(n));
  for (int p = 1; p <= n; ++p) cls[static_cast<std::size_t>(p - 1)] = partition.class_of(p);
  auto c = [&cls](int p) { return cls[static_cast<std::size_t>(p - 1)]; };

  for (int a = 1; a <= n; ++a)
    for (int a2 = 1; a2 <= n; ++a2) {
      if (c(a) != c(a2)) continue;
      for (int b = 1; b <= n; ++b)
        for (int b2 = 1; b2 <= n; ++b2) {
          if (c(b) != c(b2)) continue;
          if (c(q.op(a, b)) != c(q.op(a2, b2))) return false;
        }
    }
  return true;
}

Quandle quotient(const Quandle& q, const PartitionClasses& partition) {
  if (!is_congruence(q, partition))
    throw std::invalid_argument("partition is not a congruence of the quandle");
  const int k = partition.size();
  Table table(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k)));
  for (int A = 1; A <= k; ++A)
    for (int B = 1; B <= k; ++B) {
      const int a = partition.classes[static_cast<std::size_t>(A - 1)].front();
      const int b = partition.classes[static_cast<std::size_t>(B - 1)].front();
      table[static_cast<std::size_t>(A - 1)][static_cast<std::size_t>(B - 1)] =
          partition.class_of(q.op(a, b));
    }
  return Quandle::from_table(table).value();
}

std::string quotient_table_text(const Quandle& q, const PartitionClasses& partition) {
  const Quandle quot = quotient(q, partition);
  const int k = quot.order();
  std::string out = std::to_string(k);
  out += '\n';
  for (int A = 1; A <= k; ++A) {
    for (int B = 1; B <= k; ++B) {
      if (B > 1) out += ' ';
      out += partition.label(quot.op(A, B));
    }
    out += '\n';
  }
  return out;
}

std::vector<int> common_fixed_points(const Quandle& q) {
  std::vector<int> out;
  for (int g = 1; g <= q.order(); ++g) {
    bool common = true;
    for (int i = 1; i <= q.order() && common; ++i) common = q.mu(i).fixes(g);
    if (common) out.push_back(g);
  }
  return out;
}

bool ConditionReport::all() const {
  return std::all_of(holds.begin(), holds.end(), [](bool b) { return b; });
}

bool ConditionReport::first_three() const { return holds[0] && holds[1] && holds[2]; }

std::string ConditionReport::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < holds.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(k + 1);
    out += holds[k] ? "=ok" : "=fail";
  }
  return out;
}

namespace {

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

/// True when p moves no point outside `allowed` (sorted).
bool moves_only_within(const Permutation& p, const std::vector<int>& allowed) {
  for (int x : p.moved_points())
    if (!std::binary_search(allowed.begin(), allowed.end(), x)) return false;
  return true;
}

}  // namespace

ConditionReport check_structure_conditions(const Quandle& q, int f) {
  const int n = q.order();
  if (f <= 1 || f > n - 2) throw std::invalid_argument("f out of range: need n-2 >= f > 1");
  const int m = n - f;  // length of the non-singular cycle

  ConditionReport report;
  const Permutation& mu_n = q.mu(n);
  const Permutation& mu_m = q.mu(m);

  // 1. mu_n is the canonical cycle (1 2 ... m).
  {
    std::vector<int> canon(static_cast<std::size_t>(m));
    std::iota(canon.begin(), canon.end(), 1);
    report.holds[0] = (mu_n == Permutation::from_cycles(n, {canon}));
  }

  // 2. associate permutations are coprime powers of each other.
  {
    bool ok = true;
    for (int h = 1; h <= n; ++h)
      for (int hp = h + 1; hp <= n; ++hp) {
        if (!are_associate(q, h, hp)) continue;
        bool found = false;
        for (int l = 1; l < m && !found; ++l) {
          if (q.mu(hp).power(l) == q.mu(h)) {
            found = gcd_ll(m, l) == 1;
            if (found) report.assoc_powers.push_back({h, hp, l});
          }
        }
        ok = ok && found;
      }
    report.holds[1] = ok;
  }

  // 3. mu_k = mu_n^k mu_m mu_n^-k for 1 <= k <= m.
  {
    bool ok = true;
    for (int k = 1; k <= m && ok; ++k)
      ok = (q.mu(k) == mu_m.conjugated_by(mu_n.power(k)));
    report.holds[2] = ok;
  }

  const std::vector<int> f_n = mu_n.fixed_points();
  const Permutation mu_m_inv = mu_m.inverse();

  // 4. mu_m mu_a mu_m^-1 = mu_n^{mu_m(a)} mu_m mu_n^-{mu_m(a)} for a in F_n.
  {
    bool ok = true;
    for (int a : f_n) {
      const int e = mu_m(a);
      if (q.mu(a).conjugated_by(mu_m) != mu_m.conjugated_by(mu_n.power(e))) {
        ok = false;
        break;
      }
    }
    report.holds[3] = ok;
  }

  // 5. the same with mu_m^-1 on the left.
  {
    bool ok = true;
    for (int a : f_n) {
      const int e = mu_m_inv(a);
      if (q.mu(a).conjugated_by(mu_m_inv) != mu_m.conjugated_by(mu_n.power(e))) {
        ok = false;
        break;
      }
    }
    report.holds[4] = ok;
  }

  // 6. mu_n^-{mu_m(m0)} mu_m mu_n^{m0} factors as sigma tau^k with sigma a
  //    permutation of F_m and tau the big cycle of mu_m (tau = mu_m for
  //    cyclic type, whose other cycles are singletons).
  {
    std::vector<int> excluded;  // { mu_m^-1(a) : a in F_n }
    for (int a : f_n) excluded.push_back(mu_m_inv(a));
    std::sort(excluded.begin(), excluded.end());

    const std::vector<int> f_m = mu_m.fixed_points();
    bool ok = true;
    for (int m0 = 1; m0 <= m; ++m0) {
      if (std::binary_search(excluded.begin(), excluded.end(), m0)) continue;
      const Permutation g =
          mu_n.power(-mu_m(m0)).compose(mu_m).compose(mu_n.power(m0));
      bool found = false;
      for (int k = 1; k < m && !found; ++k) {
        const Permutation sigma = g.compose(mu_m.power(-k));
        if (moves_only_within(sigma, f_m)) {
          report.factors.push_back({m0, k, sigma});
          found = true;
        }
      }
      ok = ok && found;
    }
    report.holds[5] = ok;
  }

  return report;
}

std::optional<Quandle> normalize_labeling(const Quandle& q) {
  const int n = q.order();
  const Permutation& mu_n = q.mu(n);

  std::vector<std::vector<int>> big_cycles;
  for (const auto& cyc : mu_n.cycles())
    if (cyc.size() > 1) big_cycles.push_back(cyc);
  if (big_cycles.size() != 1) return std::nullopt;
  const std::vector<int>& cyc = big_cycles.front();  // starts at its minimum
  const int m = static_cast<int>(cyc.size());

  std::vector<int> alpha_images(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < m; ++k) alpha_images[static_cast<std::size_t>(cyc[static_cast<std::size_t>(k)] - 1)] = k + 1;
  int next = m + 1;
  for (int p : mu_n.fixed_points()) alpha_images[static_cast<std::size_t>(p - 1)] = next++;

  return relabel(q, Permutation(alpha_images));
}

}  // namespace qf
