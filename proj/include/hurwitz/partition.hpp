#pragma once

#include <functional>
#include <vector>

namespace hurwitz {

// A partition of d: weakly decreasing positive parts summing to d.
// Canonical form is weakly decreasing everywhere; equality is structural.
using Partition = std::vector<int>;

bool is_valid_partition(const Partition& p, int target);

// All partitions of d in reverse-lexicographic order: (d), ..., (1^d).
// Throws std::invalid_argument for d < 1.
std::vector<Partition> enumerate_partitions(int d);

inline int partition_length(const Partition& p) {
    return static_cast<int>(p.size());
}

// True iff some part is >= 2, i.e. the partition describes genuine branching.
inline bool is_branching_partition(const Partition& p) {
    return !p.empty() && p.front() >= 2;
}

// Streams every multiset of n branching partitions of d whose lengths sum
// to m, each multiset in non-increasing (reverse-lex) order. Used by the
// complexity search and the CLI enumerate command.
void for_each_branching_multiset(int d, int n, int m,
                                 const std::function<void(const std::vector<Partition>&)>& visit);

}  // namespace hurwitz
