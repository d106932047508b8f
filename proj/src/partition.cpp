#include "hurwitz/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace hurwitz {

bool is_valid_partition(const Partition& p, int target) {
    if (p.empty()) return target == 0;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return std::accumulate(p.begin(), p.end(), 0) == target;
}

std::vector<Partition> enumerate_partitions(int d) {
    if (d < 1) {
        throw std::invalid_argument("enumerate_partitions: d must be >= 1");
    }
    std::vector<Partition> out;
    Partition cur;
    // descending-first recursion yields reverse-lexicographic order
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            cur.push_back(part);
            self(self, remaining - part, part);
            cur.pop_back();
        }
    };
    rec(rec, d, d);
    return out;
}

void for_each_branching_multiset(int d, int n, int m,
                                 const std::function<void(const std::vector<Partition>&)>& visit) {
    if (d < 2 || n < 1) return;
    // branching partitions of d have between 1 and d-1 parts
    if (m < n || m > n * (d - 1)) return;
    std::vector<Partition> all;
    for (auto& p : enumerate_partitions(d)) {
        if (is_branching_partition(p)) all.push_back(std::move(p));
    }
    std::vector<Partition> chosen;
    auto rec = [&](auto&& self, size_t min_idx, int slots, int len_left) -> void {
        if (slots == 0) {
            if (len_left == 0) visit(chosen);
            return;
        }
        if (len_left < slots || len_left > slots * (d - 1)) return;
        for (size_t i = min_idx; i < all.size(); ++i) {
            chosen.push_back(all[i]);
            self(self, i, slots - 1, len_left - partition_length(all[i]));
            chosen.pop_back();
        }
    };
    rec(rec, 0, n, m);
}

}  // namespace hurwitz
