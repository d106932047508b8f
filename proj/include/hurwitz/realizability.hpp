#pragma once

#include <cstdint>
#include <optional>

#include "hurwitz/branch_datum.hpp"
#include "hurwitz/permutation.hpp"

namespace hurwitz {

enum class Status { Realizable, NotRealizable, Unknown };

// NotRealizable is only ever produced by exhaustive refutation (or a
// structural short-circuit); budget exhaustion yields Unknown.
struct RealizabilityResult {
    Status status = Status::Unknown;
    std::optional<PermutationTuple> witness;
    std::int64_t nodes_explored = 0;
};

inline constexpr std::int64_t kDefaultBudget = 100'000'000;

// Backtracking search for a transitive tuple with the datum's cycle types
// and identity product. Incompatible data and degree-1 data with branch
// points short-circuit to NotRealizable without search. The first
// permutation is pinned to a canonical class representative and the last
// is forced to the inverse of the running product. With workers == 1 the
// returned witness is deterministic (lexicographically least in search
// order); with workers > 1 only the status is deterministic.
RealizabilityResult find_monodromy(const BranchDatum& datum,
                                   std::int64_t budget = kDefaultBudget,
                                   int workers = 1);

inline constexpr int kOracleDegreeCap = 5;

// Independent oracle: plain enumeration of all class-element tuples for
// the first n-1 partitions, last element forced and checked. Accepts a
// tuple only if its total ramification reproduces the datum's genus.
// Never returns Unknown. Throws std::domain_error above the degree cap.
RealizabilityResult brute_force_realizable(const BranchDatum& datum,
                                           int degree_cap = kOracleDegreeCap);

}  // namespace hurwitz
