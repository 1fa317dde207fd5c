#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qf::cli {

struct ClaimContext {
  unsigned jobs = 1;
  std::uint64_t node_budget = 100'000'000;
  bool machine = false;
};

struct Claim {
  std::string id;
  std::string title;
  bool (*run)(std::ostream& out, const ClaimContext& ctx);
};

/// The classification facts this tool re-derives computationally, plus
/// the cross-checking property suites (PROP-*). "reproduce all" runs the
/// whole list in order.
const std::vector<Claim>& claim_registry();

/// Returns the exit code: 0 when every selected claim passes, 1 otherwise.
/// `id` is a claim id or "all".
int run_claims(const std::string& id, std::ostream& out, const ClaimContext& ctx);

}  // namespace qf::cli
