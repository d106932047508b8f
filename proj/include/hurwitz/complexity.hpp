#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hurwitz/branch_datum.hpp"
#include "hurwitz/permutation.hpp"
#include "hurwitz/realizability.hpp"

namespace hurwitz {

// An exact multiple of pi; the represented value is coeff * pi.
struct PiMultiple {
    std::int64_t coeff = 0;

    bool operator==(const PiMultiple&) const = default;
};

struct TraceEntry {
    int k = 0;  // the search key: d(n-2) for m_min_search, d for the simple search
    std::int64_t data_count = 0;
    bool realizable_found = false;
};

struct ComplexityReport {
    PiMultiple value;
    BranchDatum achieved_by;
    PermutationTuple witness;
    std::vector<TraceEntry> trace;
    // a lower-key datum returned Unknown, so the value is only an upper bound
    bool inconclusive = false;
};

// Hyperbolic area of the sphere minus n points, as a pi-multiple: 2(n-2).
// Throws std::domain_error for n < 3 (the complement is not hyperbolic).
PiMultiple hyperbolic_area_coeff(int n);

// Complexity of a (d,n)-branched cover: 2d(n-2).
PiMultiple cover_complexity(int d, int n);

// Simple complexity of the genus-g surface: 8g. Requires g >= 1.
PiMultiple simple_complexity_formula(int g);

// The degree-2 cover branched over 2g+2 points and its transposition
// witness; realizes the simple complexity.
std::pair<BranchDatum, PermutationTuple> hyperelliptic_witness(int g);

// Least degree d in [2, d_cap] whose simple datum (n = 2(d+g-1), all
// partitions (2,1,...,1)) is realizable; value 4*d*(d+g-2).
ComplexityReport simple_complexity_search(int g, int d_cap = 6,
                                          std::int64_t budget = kDefaultBudget);

// Minimum total length search: ascending k = d(n-2), enumerating every
// branching-partition multiset with m = k+2-2g, stopping at the first
// realizable datum. Terminates by k = 4g (the hyperelliptic datum).
// Value 2k = 2(m_min + 2g - 2).
ComplexityReport m_min_search(int g, std::int64_t budget = kDefaultBudget);

// Complexity of the genus-g surface, via m_min_search.
ComplexityReport surface_complexity(int g, std::int64_t budget = kDefaultBudget);

}  // namespace hurwitz
