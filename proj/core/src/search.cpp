#include "qf/search.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <sstream>
#include <thread>

#include "qf/iso.hpp"
#include "qf/structure.hpp"

namespace qf {

namespace {

constexpr int kMaxBruteDegree = 7;

using Clock = std::chrono::steady_clock;

struct Budget {
  std::atomic<std::int64_t> nodes_left;
  Clock::time_point deadline;
  std::atomic<bool> exhausted{false};

  Budget(std::uint64_t nodes, std::chrono::milliseconds time)
      : nodes_left(static_cast<std::int64_t>(nodes)), deadline(Clock::now() + time) {}

  /// One node of work; false once either budget is exceeded.
  bool tick() {
    if (exhausted.load(std::memory_order_relaxed)) return false;
    const std::int64_t left = nodes_left.fetch_sub(1, std::memory_order_relaxed);
    if (left <= 0) {
      exhausted.store(true, std::memory_order_relaxed);
      return false;
    }
    if ((left & 0xFFF) == 0 && Clock::now() > deadline) {
      exhausted.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }
};

/// All permutations of degree n consisting of one cycle through exactly
/// the points of `support` (all other points fixed), sorted by image list.
std::vector<Permutation> cycles_on_support(int n, std::vector<int> support) {
  std::sort(support.begin(), support.end());
  std::vector<Permutation> out;
  if (support.size() < 2) return out;
  std::vector<int> rest(support.begin() + 1, support.end());
  std::vector<int> cycle(support.size());
  cycle[0] = support.front();
  do {
    std::copy(rest.begin(), rest.end(), cycle.begin() + 1);
    out.push_back(Permutation::from_cycles(n, {cycle}));
  } while (std::next_permutation(rest.begin(), rest.end()));
  std::sort(out.begin(), out.end());
  return out;
}

/// All permutations with pattern {1 x f, n-f} fixing `anchor`, sorted by
/// image list.
std::vector<Permutation> pattern_candidates(int n, int f, int anchor) {
  std::vector<int> others;
  for (int p = 1; p <= n; ++p)
    if (p != anchor) others.push_back(p);

  std::vector<Permutation> out;
  const int extra = f - 1;  // fixed points besides the anchor
  std::vector<int> pick(static_cast<std::size_t>(extra));
  // lexicographic combinations of `others`
  std::vector<int> idx(static_cast<std::size_t>(extra));
  std::iota(idx.begin(), idx.end(), 0);
  const int limit = static_cast<int>(others.size());
  auto emit = [&] {
    std::vector<char> fixed(static_cast<std::size_t>(n), 0);
    fixed[static_cast<std::size_t>(anchor - 1)] = 1;
    for (int k : idx) fixed[static_cast<std::size_t>(others[static_cast<std::size_t>(k)] - 1)] = 1;
    std::vector<int> support;
    for (int p = 1; p <= n; ++p)
      if (!fixed[static_cast<std::size_t>(p - 1)]) support.push_back(p);
    auto cycles = cycles_on_support(n, std::move(support));
    out.insert(out.end(), cycles.begin(), cycles.end());
  };
  if (extra == 0) {
    emit();
  } else {
    for (;;) {
      emit();
      int pos = extra - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == limit - extra + pos) --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (int k = pos + 1; k < extra; ++k)
        idx[static_cast<std::size_t>(k)] = idx[static_cast<std::size_t>(k - 1)] + 1;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void validate_range(int n, int f) {
  if (f <= 1 || f > n - 2)
    throw std::invalid_argument("need n-2 >= f > 1, got n=" + std::to_string(n) +
                                " f=" + std::to_string(f));
}

struct FoundBatch {
  std::vector<Quandle> quandles;  // DFS order within one top-level candidate
  bool complete = true;
};

/// Merge per-candidate batches in candidate order, cutting at the first
/// incomplete batch so output does not depend on thread scheduling.
void merge_batches(std::vector<FoundBatch>& batches, std::vector<Quandle>& out, bool& exhaustive) {
  for (const FoundBatch& batch : batches) {
    if (!batch.complete) {
      exhaustive = false;
      break;
    }
    out.insert(out.end(), batch.quandles.begin(), batch.quandles.end());
  }
}

void run_over_candidates(unsigned jobs, std::size_t count,
                         const std::function<void(std::size_t)>& work) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t k = 0; k < count; ++k) work(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto loop = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= count) return;
      work(k);
    }
  };
  std::vector<std::thread> pool;
  const unsigned used = std::min<unsigned>(jobs, static_cast<unsigned>(count));
  pool.reserve(used);
  for (unsigned t = 0; t < used; ++t) pool.emplace_back(loop);
  for (auto& th : pool) th.join();
}

// ---------------------------------------------------------------------------
// structured mode: mu_n is the canonical cycle, mu_1..mu_{n-f} are its
// conjugates of the mu_{n-f} candidate, the remaining permutations are
// coprime powers of mu_n.
// ---------------------------------------------------------------------------

struct StructuredSearch {
  const SearchParams& params;
  int n;
  int f;
  int m;  // n - f
  Permutation mu_n;
  std::vector<int> coprime;  // exponents l with gcd(l, m) = 1
  Budget& budget;
  SearchStats& stats;

  StructuredSearch(const SearchParams& p, Budget& b, SearchStats& s)
      : params(p), n(p.n), f(p.f), m(p.n - p.f), mu_n(Permutation::identity(1)), budget(b), stats(s) {
    std::vector<int> canon(static_cast<std::size_t>(m));
    std::iota(canon.begin(), canon.end(), 1);
    mu_n = Permutation::from_cycles(n, {canon});
    for (int l = 1; l < m; ++l)
      if (std::gcd(l, m) == 1) coprime.push_back(l);
  }

  std::vector<Permutation> filtered_candidates() {
    const bool forced_fixed_set = params.rules.on(PruneRule::FixedSet) && n % f == 0;
    std::vector<Permutation> raw;
    if (forced_fixed_set) {
      const int step = m / f;
      std::vector<char> fixed(static_cast<std::size_t>(n), 0);
      for (int i = 1; i <= f; ++i) fixed[static_cast<std::size_t>(i * step - 1)] = 1;
      std::vector<int> support;
      for (int p = 1; p <= n; ++p)
        if (!fixed[static_cast<std::size_t>(p - 1)]) support.push_back(p);
      raw = cycles_on_support(n, std::move(support));
    } else {
      raw = pattern_candidates(n, f, m);
    }

    const bool coset_rules_apply = n > 2 * f && n % f == 0;
    const int step = n % f == 0 ? m / f : 0;
    std::vector<Permutation> out;
    for (const Permutation& cand : raw) {
      if (coset_rules_apply && params.rules.on(PruneRule::ImageCoset)) {
        bool ok = true;
        int residue = -1;
        for (int a = m + 1; a <= n && ok; ++a) {
          const int s = cand(a);
          if (s > m) {
            ok = false;  // image may not meet F_n
            break;
          }
          const int r = s % step;
          if (residue < 0)
            residue = r;
          else if (r != residue)
            ok = false;
        }
        if (ok && residue == 0) ok = false;  // coset must avoid F_{n-f}
        if (!ok) {
          ++stats.pruned[static_cast<std::size_t>(PruneRule::ImageCoset)];
          continue;
        }
      }
      if (coset_rules_apply && params.rules.on(PruneRule::CycleSpacing)) {
        const auto cycles = cand.cycles();
        const std::vector<int>* big = nullptr;
        for (const auto& cyc : cycles)
          if (cyc.size() > 1) big = &cyc;
        std::vector<int> positions;
        bool ok = big != nullptr;
        for (int a = m + 1; a <= n && ok; ++a) {
          const int s = cand(a);
          const auto it = std::find(big->begin(), big->end(), s);
          if (it == big->end())
            ok = false;  // image must lie on the non-singular cycle
          else
            positions.push_back(static_cast<int>(it - big->begin()));
        }
        if (ok) {
          std::sort(positions.begin(), positions.end());
          for (std::size_t k = 0; k < positions.size() && ok; ++k) {
            const int next_pos =
                k + 1 < positions.size() ? positions[k + 1] : positions.front() + m;
            ok = (next_pos - positions[k]) == step;
          }
        }
        if (!ok) {
          ++stats.pruned[static_cast<std::size_t>(PruneRule::CycleSpacing)];
          continue;
        }
      }
      out.push_back(cand);
    }
    return out;
  }

  /// All normalized quandles with this mu_{n-f}; empty batch when the
  /// derived conjugates already contradict each other.
  FoundBatch expand(const Permutation& cand, std::uint64_t& local_nodes,
                    std::uint64_t& local_leaves) const {
    FoundBatch batch;
    ++local_nodes;
    if (!budget.tick()) {
      batch.complete = false;
      return batch;
    }
    std::vector<Permutation> mus(static_cast<std::size_t>(n), mu_n);
    for (int k = 1; k <= m; ++k)
      mus[static_cast<std::size_t>(k - 1)] = cand.conjugated_by(mu_n.power(k));
    mus[static_cast<std::size_t>(n - 1)] = mu_n;

    // consistency of the derived block: every conjugation instance that
    // stays inside {1..m, n} must already hold
    auto in_block = [this](int idx) { return idx <= m || idx == n; };
    for (int i = 1; i <= n; ++i) {
      if (!in_block(i)) continue;
      const Permutation& mi = mus[static_cast<std::size_t>(i - 1)];
      const Permutation mi_inv = mi.inverse();
      for (int j = 1; j <= n; ++j) {
        if (!in_block(j)) continue;
        const int t = mi(j);
        if (!in_block(t)) continue;
        if (mus[static_cast<std::size_t>(t - 1)] != mi.compose(mus[static_cast<std::size_t>(j - 1)]).compose(mi_inv))
          return batch;  // candidate dead before any exponent choice
      }
    }

    // odometer over exponent vectors for mu_{m+1} .. mu_{n-1}
    const int slots = f - 1;
    std::vector<std::size_t> pick(static_cast<std::size_t>(slots), 0);
    std::vector<Permutation> powers;  // powers[k] = mu_n^{coprime[k]}
    powers.reserve(coprime.size());
    for (int l : coprime) powers.push_back(mu_n.power(l));

    for (;;) {
      ++local_nodes;
      if (!budget.tick()) {
        batch.complete = false;
        return batch;
      }
      for (int s = 0; s < slots; ++s)
        mus[static_cast<std::size_t>(m + s)] = powers[pick[static_cast<std::size_t>(s)]];
      ++local_leaves;
      if (Quandle::verify(mus).empty()) {
        Quandle q = Quandle::from_permutations(mus).value();
        if (is_cyclic_type(q, f)) batch.quandles.push_back(std::move(q));
      }
      int pos = slots - 1;
      while (pos >= 0 && pick[static_cast<std::size_t>(pos)] + 1 == powers.size()) {
        pick[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++pick[static_cast<std::size_t>(pos)];
    }
    return batch;
  }
};

// ---------------------------------------------------------------------------
// general mode: backtracking over all n permutations with the conjugation
// identity as a propagation rule (forward and backward unit propagation).
// ---------------------------------------------------------------------------

struct GeneralSearch {
  int n;
  int f;
  std::vector<std::vector<Permutation>> cands;  // per index
  std::vector<Permutation> assigned;
  std::vector<char> has;
  int assigned_count = 0;
  Budget& budget;
  std::vector<Quandle> found;
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  bool complete = true;

  GeneralSearch(int n, int f, Budget& budget)
      : n(n), f(f), assigned(static_cast<std::size_t>(n), Permutation::identity(n)),
        has(static_cast<std::size_t>(n), 0), budget(budget) {
    cands.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) cands.push_back(pattern_candidates(n, f, i));
  }

  /// Assigns index i := p, propagates all forced equalities, and appends
  /// every newly assigned index to the trail. False on contradiction.
  bool assign(int i, const Permutation& p, std::vector<int>& trail) {
    std::vector<std::pair<int, Permutation>> queue;
    queue.emplace_back(i, p);
    while (!queue.empty()) {
      auto [idx, perm] = std::move(queue.back());
      queue.pop_back();
      if (has[static_cast<std::size_t>(idx - 1)]) {
        if (assigned[static_cast<std::size_t>(idx - 1)] != perm) return false;
        continue;
      }
      if (!perm.fixes(idx)) return false;
      assigned[static_cast<std::size_t>(idx - 1)] = perm;
      has[static_cast<std::size_t>(idx - 1)] = 1;
      ++assigned_count;
      trail.push_back(idx);

      const Permutation& pi = assigned[static_cast<std::size_t>(idx - 1)];
      const Permutation pi_inv = pi.inverse();
      for (int j = 1; j <= n; ++j) {
        if (!has[static_cast<std::size_t>(j - 1)] || j == idx) continue;
        const Permutation& pj = assigned[static_cast<std::size_t>(j - 1)];
        const Permutation pj_inv = pj.inverse();
        // forward: both arguments known, target forced
        queue.emplace_back(pi(j), pi.compose(pj).compose(pi_inv));
        queue.emplace_back(pj(idx), pj.compose(pi).compose(pj_inv));
        // backward: argument whose image is a known index gets forced
        const int x = pi_inv(j);  // pi(x) = j, so mu_x = pi^-1 mu_j pi
        if (!has[static_cast<std::size_t>(x - 1)])
          queue.emplace_back(x, pi_inv.compose(pj).compose(pi));
        const int y = pj_inv(idx);
        if (!has[static_cast<std::size_t>(y - 1)])
          queue.emplace_back(y, pj_inv.compose(pi).compose(pj));
      }
    }
    return true;
  }

  void undo(std::vector<int>& trail, std::size_t mark) {
    while (trail.size() > mark) {
      has[static_cast<std::size_t>(trail.back() - 1)] = 0;
      --assigned_count;
      trail.pop_back();
    }
  }

  int pick_variable() const {
    int best = 0;
    int best_score = -1;
    for (int i = 1; i <= n; ++i) {
      if (has[static_cast<std::size_t>(i - 1)]) continue;
      int score = 0;
      for (int j = 1; j <= n; ++j)
        if (has[static_cast<std::size_t>(j - 1)] &&
            assigned[static_cast<std::size_t>(j - 1)].fixes(i))
          ++score;
      if (score > best_score) {
        best = i;
        best_score = score;
      }
    }
    return best;
  }

  void dfs(std::vector<int>& trail) {
    if (!complete) return;
    if (assigned_count == n) {
      ++leaves;
      if (Quandle::verify(assigned).empty())
        found.push_back(Quandle::from_permutations(assigned).value());
      return;
    }
    const int i = pick_variable();
    for (const Permutation& cand : cands[static_cast<std::size_t>(i - 1)]) {
      ++nodes;
      if (!budget.tick()) {
        complete = false;
        return;
      }
      const std::size_t mark = trail.size();
      if (assign(i, cand, trail)) dfs(trail);
      undo(trail, mark);
      if (!complete) return;
    }
  }
};

// ---------------------------------------------------------------------------
// brute-force oracle: fixed index order, complete candidate lists, pruning
// only by directly violated axiom instances among assigned indices.
// ---------------------------------------------------------------------------

struct BruteSearch {
  int n;
  int f;
  std::vector<std::vector<Permutation>> cands;
  std::vector<Permutation> assigned;
  Budget& budget;
  std::vector<Quandle> found;
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  bool complete = true;

  BruteSearch(int n, int f, Budget& budget)
      : n(n), f(f), assigned(static_cast<std::size_t>(n), Permutation::identity(n)), budget(budget) {
    cands.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) cands.push_back(pattern_candidates(n, f, i));
  }

  bool prefix_consistent(int d) const {
    // axiom instances with all three participating indices in 1..d
    const Permutation& pd = assigned[static_cast<std::size_t>(d - 1)];
    const Permutation pd_inv = pd.inverse();
    for (int j = 1; j <= d; ++j) {
      const Permutation& pj = assigned[static_cast<std::size_t>(j - 1)];
      const int t1 = pd(j);
      if (t1 <= d &&
          assigned[static_cast<std::size_t>(t1 - 1)] != pd.compose(pj).compose(pd_inv))
        return false;
      const int t2 = pj(d);
      if (t2 <= d &&
          assigned[static_cast<std::size_t>(t2 - 1)] !=
              pj.compose(pd).compose(pj.inverse()))
        return false;
    }
    for (int i = 1; i < d; ++i) {
      const Permutation& pi = assigned[static_cast<std::size_t>(i - 1)];
      for (int j = 1; j < d; ++j)
        if (pi(j) == d &&
            pd != pi.compose(assigned[static_cast<std::size_t>(j - 1)]).compose(pi.inverse()))
          return false;
    }
    return true;
  }

  void dfs(int d) {
    if (!complete) return;
    if (d > n) {
      ++leaves;
      if (Quandle::verify(assigned).empty())
        found.push_back(Quandle::from_permutations(assigned).value());
      return;
    }
    for (const Permutation& cand : cands[static_cast<std::size_t>(d - 1)]) {
      ++nodes;
      if (!budget.tick()) {
        complete = false;
        return;
      }
      assigned[static_cast<std::size_t>(d - 1)] = cand;
      if (prefix_consistent(d)) dfs(d + 1);
      if (!complete) return;
    }
  }
};

void finalize(EnumerationResult& result, std::vector<Quandle> labeled) {
  result.labeled_count = labeled.size();
  auto classes = dedup_up_to_iso(labeled);
  result.representatives.clear();
  result.class_sizes.clear();
  for (auto& cls : classes) {
    result.representatives.push_back(std::move(cls.representative));
    result.class_sizes.push_back(cls.size);
  }
}

EnumerationResult run_structured(const SearchParams& params) {
  EnumerationResult result;
  result.n = params.n;
  result.f = params.f;
  result.mode_used = SearchMode::Structured;
  result.labeled_kind = LabeledKind::NormalizedLabelings;

  Budget budget(params.node_budget, params.time_budget);
  StructuredSearch search(params, budget, result.stats);
  const std::vector<Permutation> candidates = search.filtered_candidates();
  result.stats.structured_candidates = candidates;

  std::vector<FoundBatch> batches(candidates.size());
  std::vector<std::uint64_t> node_counts(candidates.size(), 0);
  std::vector<std::uint64_t> leaf_counts(candidates.size(), 0);
  run_over_candidates(params.jobs, candidates.size(), [&](std::size_t k) {
    batches[k] = search.expand(candidates[k], node_counts[k], leaf_counts[k]);
  });

  result.stats.nodes = std::accumulate(node_counts.begin(), node_counts.end(), std::uint64_t{0});
  result.stats.leaf_checks =
      std::accumulate(leaf_counts.begin(), leaf_counts.end(), std::uint64_t{0});

  std::vector<Quandle> labeled;
  merge_batches(batches, labeled, result.exhaustive);
  if (!result.exhaustive) result.note = "budget exhausted";
  finalize(result, std::move(labeled));
  return result;
}

EnumerationResult run_general(const SearchParams& params) {
  EnumerationResult result;
  result.n = params.n;
  result.f = params.f;
  result.mode_used = SearchMode::General;
  result.labeled_kind = LabeledKind::AllLabelings;

  Budget budget(params.node_budget, params.time_budget);
  // split on the root variable's candidates (index 1: nothing assigned yet,
  // so every score ties and the smallest index wins)
  const std::vector<Permutation> root = pattern_candidates(params.n, params.f, 1);

  std::vector<FoundBatch> batches(root.size());
  std::vector<std::uint64_t> node_counts(root.size(), 0);
  std::vector<std::uint64_t> leaf_counts(root.size(), 0);
  run_over_candidates(params.jobs, root.size(), [&](std::size_t k) {
    GeneralSearch search(params.n, params.f, budget);
    std::vector<int> trail;
    ++search.nodes;
    if (budget.tick() && search.assign(1, root[k], trail)) search.dfs(trail);
    batches[k].quandles = std::move(search.found);
    batches[k].complete = search.complete && !budget.exhausted.load();
    node_counts[k] = search.nodes;
    leaf_counts[k] = search.leaves;
  });

  result.stats.nodes = std::accumulate(node_counts.begin(), node_counts.end(), std::uint64_t{0});
  result.stats.leaf_checks =
      std::accumulate(leaf_counts.begin(), leaf_counts.end(), std::uint64_t{0});

  std::vector<Quandle> labeled;
  merge_batches(batches, labeled, result.exhaustive);
  if (!result.exhaustive) result.note = "budget exhausted";
  finalize(result, std::move(labeled));
  return result;
}

}  // namespace

const char* search_mode_name(SearchMode mode) {
  switch (mode) {
    case SearchMode::Auto: return "auto";
    case SearchMode::Structured: return "structured";
    case SearchMode::General: return "general";
    case SearchMode::BruteForce: return "brute";
  }
  return "?";
}

std::optional<SearchMode> parse_search_mode(std::string_view name) {
  for (SearchMode mode : {SearchMode::Auto, SearchMode::Structured, SearchMode::General,
                          SearchMode::BruteForce})
    if (name == search_mode_name(mode)) return mode;
  return std::nullopt;
}

const char* prune_rule_name(PruneRule rule) {
  switch (rule) {
    case PruneRule::Divisibility: return "divisibility";
    case PruneRule::Gcd: return "gcd";
    case PruneRule::MultipleBound: return "cf";
    case PruneRule::FixedSet: return "fixed-set";
    case PruneRule::ImageCoset: return "image-coset";
    case PruneRule::CycleSpacing: return "cycle-spacing";
  }
  return "?";
}

std::optional<PruneRule> parse_prune_rule(std::string_view name) {
  for (int k = 0; k < kPruneRuleCount; ++k) {
    const PruneRule rule = static_cast<PruneRule>(k);
    if (name == prune_rule_name(rule)) return rule;
  }
  return std::nullopt;
}

std::string Feasibility::describe() const {
  switch (reason) {
    case Reason::None:
      return "feasible";
    case Reason::Divisibility:
      return "infeasible: n >= 2f requires f | n";
    case Reason::Gcd: {
      std::string out = "infeasible: exponent set {";
      for (std::size_t k = 0; k < exponents.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(exponents[k]);
      }
      out += "} contains a value not coprime to n-f";
      return out;
    }
    case Reason::MultipleBound:
      return "infeasible: no quandles at n = cf with c > 3, nor at n = 3f with f > 2";
  }
  return "?";
}

Feasibility feasibility_precheck(int n, int f) { return feasibility_precheck(n, f, RuleSet{}); }

Feasibility feasibility_precheck(int n, int f, const RuleSet& rules) {
  validate_range(n, f);
  Feasibility out;
  if (rules.on(PruneRule::Divisibility) && n >= 2 * f && n % f != 0) {
    out.feasible = false;
    out.reason = Feasibility::Reason::Divisibility;
    return out;
  }
  if (rules.on(PruneRule::Gcd) && n > 2 * f && n % f == 0) {
    const int m = n - f;
    const int step = m / f;
    for (int j = 0; j < f; ++j) out.exponents.push_back(1 + j * step);
    for (int l : out.exponents)
      if (std::gcd(m, l) != 1) {
        out.feasible = false;
        out.reason = Feasibility::Reason::Gcd;
        return out;
      }
    out.exponents.clear();
  }
  if (rules.on(PruneRule::MultipleBound) && n > 2 * f && n % f == 0) {
    const int c = n / f;
    if (c > 3 || (c == 3 && f > 2)) {
      out.feasible = false;
      out.reason = Feasibility::Reason::MultipleBound;
      return out;
    }
  }
  return out;
}

std::string result_line(const EnumerationResult& result) {
  std::ostringstream out;
  out << "result n=" << result.n << " f=" << result.f
      << " classes=" << result.representatives.size() << " labeled=" << result.labeled_count
      << " exhaustive=" << (result.exhaustive ? "yes" : "no");
  return out.str();
}

EnumerationResult enumerate_quandles(const SearchParams& params) {
  validate_range(params.n, params.f);
  const auto started = Clock::now();

  SearchMode mode = params.mode;
  if (mode == SearchMode::Auto)
    mode = params.n >= 2 * params.f ? SearchMode::Structured : SearchMode::General;

  EnumerationResult result;
  if (mode == SearchMode::BruteForce) {
    result = brute_force_oracle(params.n, params.f, params.node_budget);
  } else {
    const Feasibility feas = feasibility_precheck(params.n, params.f, params.rules);
    if (!feas.feasible && !params.force_search) {
      result.n = params.n;
      result.f = params.f;
      result.mode_used = mode;
      result.exhaustive = true;  // the closed form proves emptiness
      result.note = feas.describe();
    } else {
      result = mode == SearchMode::Structured ? run_structured(params) : run_general(params);
    }
  }
  result.stats.wall_seconds = std::chrono::duration<double>(Clock::now() - started).count();
  return result;
}

EnumerationResult brute_force_oracle(int n, int f, std::uint64_t node_budget) {
  validate_range(n, f);
  if (n > kMaxBruteDegree)
    throw std::invalid_argument("brute_force_oracle supports n <= " +
                                std::to_string(kMaxBruteDegree));
  const auto started = Clock::now();

  EnumerationResult result;
  result.n = n;
  result.f = f;
  result.mode_used = SearchMode::BruteForce;
  result.labeled_kind = LabeledKind::AllLabelings;

  Budget budget(node_budget, std::chrono::hours(24));
  BruteSearch search(n, f, budget);
  search.dfs(1);
  result.stats.nodes = search.nodes;
  result.stats.leaf_checks = search.leaves;
  result.exhaustive = search.complete;
  if (!result.exhaustive) result.note = "budget exhausted";
  finalize(result, std::move(search.found));
  result.stats.wall_seconds = std::chrono::duration<double>(Clock::now() - started).count();
  return result;
}

ClaimReport rederive_claims(int n_min, int n_max, const SearchParams& base) {
  ClaimReport report;
  for (int n = std::max(4, n_min); n <= n_max; ++n) {
    for (int f = 2; f <= n - 2; ++f) {
      SearchParams params = base;
      params.n = n;
      params.f = f;
      params.mode = SearchMode::Auto;
      const EnumerationResult res = enumerate_quandles(params);

      CellReport cell;
      cell.n = n;
      cell.f = f;
      cell.classes = res.representatives.size();
      cell.exhaustive = res.exhaustive;
      for (const Quandle& rep : res.representatives) {
        const bool conn = is_connected(rep);
        cell.all_connected = cell.all_connected && conn;
        cell.none_connected = cell.none_connected && !conn;
      }
      if (n > 2 * f)
        cell.expected_classes = (n == 6 && f == 2) ? 1 : 0;
      else if (n == 2 * f)
        cell.expected_classes = 1;

      cell.ok = res.exhaustive;
      if (cell.expected_classes && cell.classes != *cell.expected_classes) cell.ok = false;
      if (n > 2 * f && !cell.all_connected) cell.ok = false;
      if (n <= 2 * f && !cell.none_connected) cell.ok = false;

      report.all_ok = report.all_ok && cell.ok;
      report.cells.push_back(cell);
    }
  }
  return report;
}

}  // namespace qf
