#include "qf/iso.hpp"

#include <algorithm>
#include <map>

#include "qf/structure.hpp"

namespace qf {

bool is_isomorphism(const Quandle& q, const Quandle& r, const Permutation& alpha) {
  if (q.order() != r.order() || alpha.degree() != q.order()) return false;
  for (int i = 1; i <= q.order(); ++i)
    if (r.mu(alpha(i)) != q.mu(i).conjugated_by(alpha)) return false;
  return true;
}

namespace {

/// Relabeling-invariant per-element signature: own pattern, number of
/// associates, and the pattern multiset over the element's fixed set.
struct Signature {
  Pattern own;
  int associates;
  std::vector<Pattern> fixed_set_patterns;  // sorted

  friend bool operator==(const Signature&, const Signature&) = default;
};

std::vector<Signature> signatures(const Quandle& q) {
  const int n = q.order();
  std::vector<Pattern> pats;
  pats.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) pats.push_back(q.mu(i).pattern());

  std::vector<Signature> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    Signature sig{pats[static_cast<std::size_t>(i - 1)], 0, {}};
    for (int j = 1; j <= n; ++j)
      if (are_associate(q, i, j)) ++sig.associates;
    for (int p : q.mu(i).fixed_points())
      sig.fixed_set_patterns.push_back(pats[static_cast<std::size_t>(p - 1)]);
    std::sort(sig.fixed_set_patterns.begin(), sig.fixed_set_patterns.end());
    out.push_back(std::move(sig));
  }
  return out;
}

struct WitnessSearch {
  const Quandle& q;
  const Quandle& r;
  std::vector<Signature> sig_q;
  std::vector<Signature> sig_r;
  std::vector<int> order;    // assignment order over q's elements
  std::vector<int> alpha;    // alpha[i-1], 0 = unassigned
  std::vector<char> used;    // used[i'-1] in r
  std::vector<int> assigned; // q-elements assigned so far

  bool consistent_after(int i) {
    // check every conjugation instance whose participants are assigned
    // and which involves the newly assigned element i
    for (int a : assigned) {
      for (int b : assigned) {
        const int t = q.mu(a)(b);
        if (a != i && b != i && t != i) continue;
        const int ta = alpha[static_cast<std::size_t>(t - 1)];
        if (ta == 0) continue;
        const int aa = alpha[static_cast<std::size_t>(a - 1)];
        const int ab = alpha[static_cast<std::size_t>(b - 1)];
        if (r.mu(aa)(ab) != ta) return false;
      }
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const int i = order[depth];
    for (int cand = 1; cand <= r.order(); ++cand) {
      if (used[static_cast<std::size_t>(cand - 1)]) continue;
      if (!(sig_q[static_cast<std::size_t>(i - 1)] == sig_r[static_cast<std::size_t>(cand - 1)]))
        continue;
      alpha[static_cast<std::size_t>(i - 1)] = cand;
      used[static_cast<std::size_t>(cand - 1)] = 1;
      assigned.push_back(i);
      if (consistent_after(i) && extend(depth + 1)) return true;
      assigned.pop_back();
      used[static_cast<std::size_t>(cand - 1)] = 0;
      alpha[static_cast<std::size_t>(i - 1)] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<IsoWitness> find_isomorphism(const Quandle& q, const Quandle& r) {
  if (q.order() != r.order()) return std::nullopt;
  if (!q.profile().same_multiset(r.profile())) return std::nullopt;

  WitnessSearch search{q, r, signatures(q), signatures(r), {}, {}, {}, {}};
  {
    std::vector<std::pair<Signature, int>> sq, sr;
    for (int i = 1; i <= q.order(); ++i) sq.emplace_back(search.sig_q[static_cast<std::size_t>(i - 1)], i);
    for (int i = 1; i <= r.order(); ++i) sr.emplace_back(search.sig_r[static_cast<std::size_t>(i - 1)], i);
    auto key = [](const std::pair<Signature, int>& s) {
      return std::tuple(s.first.own, s.first.associates, s.first.fixed_set_patterns);
    };
    auto by_key = [&key](const auto& a, const auto& b) { return key(a) < key(b); };
    std::sort(sq.begin(), sq.end(), by_key);
    std::sort(sr.begin(), sr.end(), by_key);
    for (std::size_t k = 0; k < sq.size(); ++k)
      if (!(sq[k].first == sr[k].first)) return std::nullopt;  // signature multisets differ
  }

  // most constrained first: fewest associates, then smallest index
  const int n = q.order();
  search.order.resize(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) search.order[static_cast<std::size_t>(i - 1)] = i;
  std::sort(search.order.begin(), search.order.end(), [&search](int a, int b) {
    const int ca = search.sig_q[static_cast<std::size_t>(a - 1)].associates;
    const int cb = search.sig_q[static_cast<std::size_t>(b - 1)].associates;
    if (ca != cb) return ca < cb;
    return a < b;
  });
  search.alpha.assign(static_cast<std::size_t>(n), 0);
  search.used.assign(static_cast<std::size_t>(n), 0);

  if (!search.extend(0)) return std::nullopt;

  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    images[static_cast<std::size_t>(i - 1)] = search.alpha[static_cast<std::size_t>(i - 1)];
  Permutation alpha(images);
  if (!is_isomorphism(q, r, alpha))
    throw std::logic_error("witness failed re-verification");
  return IsoWitness{std::move(alpha)};
}

std::vector<IsoClass> dedup_up_to_iso(std::span<const Quandle> quandles) {
  std::vector<IsoClass> out;
  for (const Quandle& q : quandles) {
    bool placed = false;
    for (IsoClass& cls : out) {
      if (find_isomorphism(q, cls.representative)) {
        ++cls.size;
        if (table_less(q, cls.representative)) cls.representative = q;
        placed = true;
        break;
      }
    }
    if (!placed) out.push_back({q, 1});
  }
  return out;
}

std::string witness_text(const IsoWitness& witness) {
  std::string out = witness.alpha.cycle_string();
  out += '\n';
  for (int i = 1; i <= witness.alpha.degree(); ++i) {
    out += std::to_string(i);
    out += " -> ";
    out += std::to_string(witness.alpha(i));
    out += '\n';
  }
  return out;
}

}  // namespace qf
