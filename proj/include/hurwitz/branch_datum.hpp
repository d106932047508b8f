#pragma once

#include <optional>
#include <vector>

#include "hurwitz/partition.hpp"

namespace hurwitz {

// A branch datum (M, n, d, Pi): the source surface M is encoded by its
// genus, the target is always the sphere. Each of the n partitions of d
// records the ramification over one branch point.
struct BranchDatum {
    int genus = 0;
    int degree = 1;
    std::vector<Partition> partitions;

    int branch_points() const { return static_cast<int>(partitions.size()); }
};

// Throws std::invalid_argument when the datum is malformed: degree < 1,
// genus < 0, a partition not summing to the degree or not in canonical
// form, or an all-1s partition (a point that does not actually branch).
void validate_datum(const BranchDatum& datum);

BranchDatum make_branch_datum(int genus, int degree, std::vector<Partition> partitions);

// m = sum of the partition lengths.
int total_length(const BranchDatum& datum);

// Riemann-Hurwitz over the sphere: (2 - 2g) - m = d(2 - n).
bool is_compatible(const BranchDatum& datum);

// Simple cover datum: every fiber has at least d-1 points, so every
// partition has length >= d-1 (forcing (2,1,...,1) when d >= 2).
bool is_simple_datum(const BranchDatum& datum);

// The unique genus making (g, d, partitions) compatible, or nullopt when
// 2 - 2g = 2d - sum(d - m_i) has no non-negative integer solution.
std::optional<int> implied_genus(int degree, const std::vector<Partition>& partitions);

}  // namespace hurwitz
