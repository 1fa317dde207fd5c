#include "qf/families.hpp"

#include <algorithm>
#include <numeric>

#include "qf/structure.hpp"

namespace qf {

namespace {

Quandle build_or_throw(std::vector<Permutation> mus, const char* what) {
  auto result = Quandle::from_permutations(std::move(mus));
  if (!result.ok())
    throw std::logic_error(std::string(what) + ": construction failed verification");
  return *result.quandle;
}

void require_cyclic(const Quandle& q, int f, const char* what) {
  if (!is_cyclic_type(q, f))
    throw std::logic_error(std::string(what) + ": output is not cyclic type");
}

}  // namespace

Quandle trivial(int n) {
  if (n < 1) throw std::invalid_argument("trivial quandle needs n >= 1");
  std::vector<Permutation> mus(static_cast<std::size_t>(n), Permutation::identity(n));
  return build_or_throw(std::move(mus), "trivial");
}

Quandle dihedral(int n) {
  if (n < 2) throw std::invalid_argument("dihedral quandle needs n >= 2");
  std::vector<Permutation> mus;
  mus.reserve(static_cast<std::size_t>(n));
  for (int b = 1; b <= n; ++b) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int a = 1; a <= n; ++a) {
      const int r = ((2 * (b - 1) - (a - 1)) % n + n) % n;
      images[static_cast<std::size_t>(a - 1)] = r + 1;
    }
    mus.push_back(Permutation(images));
  }
  return build_or_throw(std::move(mus), "dihedral");
}

Quandle q62() {
  static const Table table = {
      {1, 5, 1, 6, 4, 2},
      {6, 2, 5, 2, 1, 3},
      {3, 6, 3, 5, 2, 4},
      {5, 4, 6, 4, 3, 1},
      {2, 3, 4, 1, 5, 5},
      {4, 1, 2, 3, 6, 6},
  };
  return Quandle::from_table(table).value();
}

Quandle two_f_canonical(int f) {
  if (f < 2) throw std::invalid_argument("two_f_canonical needs f >= 2");
  const int n = 2 * f;
  std::vector<int> low(static_cast<std::size_t>(f)), high(static_cast<std::size_t>(f));
  std::iota(low.begin(), low.end(), 1);
  std::iota(high.begin(), high.end(), f + 1);
  const Permutation cycle_high = Permutation::from_cycles(n, {high});
  const Permutation cycle_low = Permutation::from_cycles(n, {low});

  std::vector<Permutation> mus;
  mus.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < f; ++i) mus.push_back(cycle_high);
  for (int i = 0; i < f; ++i) mus.push_back(cycle_low);
  Quandle q = build_or_throw(std::move(mus), "two_f_canonical");
  require_cyclic(q, f, "two_f_canonical");
  return q;
}

Quandle divisible_family(int n, int f) {
  if (f < 2 || n < f + 2 || n > 2 * f)
    throw std::invalid_argument("divisible_family needs f+2 <= n <= 2f");
  const int m = n - f;
  if (f % m != 0)
    throw std::invalid_argument("divisible_family needs (n-f) | f");
  const int blocks = n / m;

  std::vector<Permutation> mus;
  mus.reserve(static_cast<std::size_t>(n));
  for (int block = 1; block <= blocks; ++block) {
    const int target = block % blocks + 1;  // block indices wrap after n/(n-f)
    std::vector<int> cyc(static_cast<std::size_t>(m));
    std::iota(cyc.begin(), cyc.end(), (target - 1) * m + 1);
    const Permutation p = Permutation::from_cycles(n, {cyc});
    for (int k = 0; k < m; ++k) mus.push_back(p);
  }
  Quandle q = build_or_throw(std::move(mus), "divisible_family");
  require_cyclic(q, f, "divisible_family");
  return q;
}

namespace {

Quandle restrict_to_complement(const Quandle& q, int g0, const char* what) {
  const int n = q.order();
  // order-preserving relabeling of {1..n} minus g0 onto {1..n-1}
  auto renumber = [g0](int p) { return p < g0 ? p : p - 1; };
  std::vector<Permutation> mus;
  mus.reserve(static_cast<std::size_t>(n - 1));
  for (int i = 1; i <= n; ++i) {
    if (i == g0) continue;
    std::vector<int> images(static_cast<std::size_t>(n - 1));
    for (int x = 1; x <= n; ++x) {
      if (x == g0) continue;
      images[static_cast<std::size_t>(renumber(x) - 1)] = renumber(q.mu(i)(x));
    }
    mus.push_back(Permutation(images));
  }
  return build_or_throw(std::move(mus), what);
}

}  // namespace

Quandle extract_common_fixed_point(const Quandle& q, int g0) {
  const int n = q.order();
  const auto f_opt = infer_fixed_point_count(q);
  if (!f_opt) throw std::invalid_argument("extract: quandle is not of cyclic type");
  const int f = *f_opt;
  if (f <= 2) throw std::invalid_argument("extract: needs f > 2");
  if (n < f + 2 || n > 2 * f) throw std::invalid_argument("extract: needs f+2 <= n <= 2f");
  const auto common = common_fixed_points(q);
  if (!std::binary_search(common.begin(), common.end(), g0))
    throw std::invalid_argument("extract: " + std::to_string(g0) + " is not a common fixed point");

  Quandle out = restrict_to_complement(q, g0, "extract");
  require_cyclic(out, f - 1, "extract");
  return out;
}

Quandle extract_unchecked(const Quandle& q, int g0) {
  const auto common = common_fixed_points(q);
  if (!std::binary_search(common.begin(), common.end(), g0))
    throw std::invalid_argument("extract: " + std::to_string(g0) + " is not a common fixed point");
  return restrict_to_complement(q, g0, "extract_unchecked");
}

Quandle adjoin_common_fixed_point(const Quandle& q, const Permutation& mu) {
  const int n = q.order();
  if (mu.degree() != n) throw std::invalid_argument("adjoin: permutation degree mismatch");
  for (int i = 1; i <= n; ++i)
    if (mu.compose(q.mu(i)) != q.mu(i).compose(mu))
      throw CommutationError("adjoin: permutation does not commute with mu_" + std::to_string(i), i);

  auto extend = [n](const Permutation& p) {
    std::vector<int> images = p.images();
    images.push_back(n + 1);
    return Permutation(images);
  };

  std::vector<Permutation> mus;
  mus.reserve(static_cast<std::size_t>(n + 1));
  for (int i = 1; i <= n; ++i) mus.push_back(extend(q.mu(i)));
  mus.push_back(extend(mu));

  auto result = Quandle::from_permutations(std::move(mus));
  if (!result.ok()) {
    std::string msg = "adjoin: extension violates the quandle axioms:";
    for (const auto& v : result.violations) msg += " [" + v.describe() + "]";
    throw std::invalid_argument(msg);
  }
  return *result.quandle;
}

Quandle iterate_adjoin(const Quandle& q, int i0, int k) {
  const int n = q.order();
  if (i0 < 1 || i0 > n) throw std::invalid_argument("iterate_adjoin: i0 out of range");
  if (k < 0) throw std::invalid_argument("iterate_adjoin: k must be non-negative");
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (q.mu(i) == q.mu(j)) continue;
      const auto mi = q.mu(i).moved_points();
      const auto mj = q.mu(j).moved_points();
      std::vector<int> overlap;
      std::set_intersection(mi.begin(), mi.end(), mj.begin(), mj.end(),
                            std::back_inserter(overlap));
      if (!overlap.empty())
        throw std::invalid_argument(
            "iterate_adjoin: permutations must be pairwise equal or disjoint");
    }

  Quandle current = q;
  for (int step = 0; step < k; ++step)
    current = adjoin_common_fixed_point(current, current.mu(i0));
  return current;
}

}  // namespace qf
