#include "hurwitz/realizability.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

namespace hurwitz {

namespace {

// Move the factor at position j+1 in front of the factor at j while
// preserving the tuple product: (u, v) -> (u^-1 v u, u) in the
// left-to-right convention.
void swap_factors(Permutation& u, Permutation& v) {
    Permutation moved = conjugate(v, u);
    v = u;
    u = std::move(moved);
}

struct SharedSearchState {
    std::atomic<std::int64_t> nodes{0};
    std::atomic<bool> budget_hit{false};
    std::atomic<bool> found{false};
    std::mutex mutex;
    std::vector<Permutation> witness;  // in search order
};

// Depth-first over free positions [pos, n-2]; position n-1 is forced to
// the inverse of the running product.
void search(const std::vector<std::vector<Permutation>>& classes,
            const std::vector<Partition>& types, std::int64_t budget,
            std::vector<Permutation>& stack, const Permutation& running, size_t pos,
            SharedSearchState& shared) {
    const size_t n = classes.size();
    if (shared.found.load(std::memory_order_relaxed)) return;
    if (pos == n - 1) {
        if (shared.nodes.fetch_add(1, std::memory_order_relaxed) >= budget) {
            shared.budget_hit.store(true, std::memory_order_relaxed);
            return;
        }
        Permutation last = inverse(running);
        if (cycle_type(last) != types[n - 1]) return;
        stack.push_back(std::move(last));
        PermutationTuple candidate{static_cast<int>(stack[0].degree()), stack};
        if (is_transitive(candidate)) {
            std::scoped_lock lock(shared.mutex);
            if (!shared.found.load()) {
                shared.witness = stack;
                shared.found.store(true);
            }
        }
        stack.pop_back();
        return;
    }
    for (const auto& p : classes[pos]) {
        if (shared.found.load(std::memory_order_relaxed)) return;
        if (shared.nodes.fetch_add(1, std::memory_order_relaxed) >= budget) {
            shared.budget_hit.store(true, std::memory_order_relaxed);
            return;
        }
        stack.push_back(p);
        search(classes, types, budget, stack, compose(running, p), pos + 1, shared);
        stack.pop_back();
    }
}

}  // namespace

RealizabilityResult find_monodromy(const BranchDatum& datum, std::int64_t budget, int workers) {
    const int d = datum.degree;
    const int n = datum.branch_points();

    // no (1,n)-branched cover: a degree-1 map cannot branch at all
    if (d == 1 && n >= 1) {
        return {Status::NotRealizable, std::nullopt, 0};
    }
    // compatibility is necessary for realizability
    if (!is_compatible(datum)) {
        return {Status::NotRealizable, std::nullopt, 0};
    }
    if (n == 0) {
        // unbranched cover of the sphere: only the identity on the sphere
        if (d == 1) {
            return {Status::Realizable, PermutationTuple{1, {}}, 0};
        }
        return {Status::NotRealizable, std::nullopt, 0};
    }
    if (n == 1) {
        // product condition forces the identity, which never branches
        return {Status::NotRealizable, std::nullopt, 0};
    }

    // sort positions by descending class size, first position pinned to a
    // canonical representative
    std::vector<std::vector<Permutation>> classes(n);
    std::vector<size_t> class_sizes(n);
    for (int i = 0; i < n; ++i) {
        classes[i] = conjugacy_class_elements(datum.partitions[i], d);
        class_sizes[i] = classes[i].size();
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return class_sizes[a] > class_sizes[b]; });

    std::vector<std::vector<Permutation>> search_classes(n);
    std::vector<Partition> search_types(n);
    for (int j = 0; j < n; ++j) {
        search_classes[j] = classes[order[j]];
        search_types[j] = datum.partitions[order[j]];
    }
    const Permutation first = canonical_class_representative(search_types[0], d);

    SharedSearchState shared;
    shared.nodes.fetch_add(1);  // the pinned first position

    auto run_chunk = [&](size_t worker_idx, size_t worker_count) {
        std::vector<Permutation> stack{first};
        if (n == 2) {
            if (worker_idx == 0) {
                search(search_classes, search_types, budget, stack, first, 1, shared);
            }
            return;
        }
        // fan out over the first free position
        for (size_t i = worker_idx; i < search_classes[1].size(); i += worker_count) {
            if (shared.found.load(std::memory_order_relaxed)) return;
            if (shared.nodes.fetch_add(1, std::memory_order_relaxed) >= budget) {
                shared.budget_hit.store(true, std::memory_order_relaxed);
                return;
            }
            const Permutation& p = search_classes[1][i];
            stack.push_back(p);
            search(search_classes, search_types, budget, stack, compose(first, p), 2, shared);
            stack.pop_back();
        }
    };

    if (workers <= 1) {
        run_chunk(0, 1);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) {
            threads.emplace_back(run_chunk, static_cast<size_t>(w),
                                 static_cast<size_t>(workers));
        }
        for (auto& t : threads) t.join();
    }

    RealizabilityResult result;
    result.nodes_explored = shared.nodes.load();
    if (shared.found.load()) {
        // restore the datum's partition order by adjacent factor swaps
        std::vector<Permutation> perms = shared.witness;
        std::vector<int> pos = order;
        for (size_t i = 0; i + 1 < pos.size(); ++i) {
            for (size_t j = 0; j + 1 < pos.size() - i; ++j) {
                if (pos[j] > pos[j + 1]) {
                    swap_factors(perms[j], perms[j + 1]);
                    std::swap(pos[j], pos[j + 1]);
                }
            }
        }
        result.status = Status::Realizable;
        result.witness = PermutationTuple{d, std::move(perms)};
        if (!verify_witness(*result.witness, datum)) {
            throw std::logic_error("find_monodromy: produced witness failed verification");
        }
    } else if (shared.budget_hit.load()) {
        result.status = Status::Unknown;
    } else {
        result.status = Status::NotRealizable;
    }
    return result;
}

RealizabilityResult brute_force_realizable(const BranchDatum& datum, int degree_cap) {
    const int d = datum.degree;
    const int n = datum.branch_points();
    if (d > degree_cap) {
        throw std::domain_error("brute_force_realizable: degree above oracle cap");
    }
    if (d == 1 && n >= 1) {
        return {Status::NotRealizable, std::nullopt, 0};
    }
    if (n == 0) {
        if (d == 1 && datum.genus == 0) {
            return {Status::Realizable, PermutationTuple{1, {}}, 0};
        }
        return {Status::NotRealizable, std::nullopt, 0};
    }

    std::vector<std::vector<Permutation>> classes(n);
    for (int i = 0; i < n; ++i) {
        classes[i] = conjugacy_class_elements(datum.partitions[i], d);
    }

    std::int64_t nodes = 0;
    std::vector<Permutation> chosen;
    std::optional<PermutationTuple> witness;
    auto rec = [&](auto&& self, int pos, const Permutation& running) -> bool {
        if (pos == n - 1) {
            ++nodes;
            Permutation last = inverse(running);
            if (cycle_type(last) != datum.partitions[n - 1]) return false;
            chosen.push_back(std::move(last));
            PermutationTuple candidate{d, chosen};
            // genus check: 2 - 2g = 2d - R_p
            bool ok = is_transitive(candidate) &&
                      2 - 2 * datum.genus == 2 * d - total_ramification(candidate);
            if (ok) witness = candidate;
            chosen.pop_back();
            return ok;
        }
        for (const auto& p : classes[pos]) {
            ++nodes;
            chosen.push_back(p);
            bool ok = self(self, pos + 1, compose(running, p));
            chosen.pop_back();
            if (ok) return true;
        }
        return false;
    };
    bool found = rec(rec, 0, Permutation::identity(d));
    if (found) {
        return {Status::Realizable, witness, nodes};
    }
    return {Status::NotRealizable, std::nullopt, nodes};
}

}  // namespace hurwitz
