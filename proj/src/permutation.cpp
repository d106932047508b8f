#include "hurwitz/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hurwitz {

Permutation Permutation::identity(int d) {
    Permutation p;
    p.images.resize(d);
    std::iota(p.images.begin(), p.images.end(), 0);
    return p;
}

bool is_valid_permutation(const Permutation& p) {
    const int d = p.degree();
    std::vector<bool> seen(d, false);
    for (int x : p.images) {
        if (x < 0 || x >= d || seen[x]) return false;
        seen[x] = true;
    }
    return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation out;
    out.images.resize(a.images.size());
    for (size_t i = 0; i < a.images.size(); ++i) {
        out.images[i] = b.images[a.images[i]];
    }
    return out;
}

Permutation inverse(const Permutation& p) {
    Permutation out;
    out.images.resize(p.images.size());
    for (size_t i = 0; i < p.images.size(); ++i) {
        out.images[p.images[i]] = static_cast<int>(i);
    }
    return out;
}

Permutation conjugate(const Permutation& p, const Permutation& s) {
    return compose(s, compose(p, inverse(s)));
}

Partition cycle_type(const Permutation& p) {
    const int d = p.degree();
    std::vector<bool> visited(d, false);
    Partition type;
    for (int i = 0; i < d; ++i) {
        if (visited[i]) continue;
        int len = 0;
        for (int j = i; !visited[j]; j = p.images[j]) {
            visited[j] = true;
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

Permutation canonical_class_representative(const Partition& type, int d) {
    Permutation p = Permutation::identity(d);
    int start = 0;
    for (int len : type) {
        for (int i = 0; i < len; ++i) {
            p.images[start + i] = start + (i + 1) % len;
        }
        start += len;
    }
    return p;
}

int total_ramification(const PermutationTuple& t) {
    int r = 0;
    for (const auto& p : t.perms) {
        r += t.degree - partition_length(cycle_type(p));
    }
    return r;
}

bool is_transitive(const PermutationTuple& t) {
    const int d = t.degree;
    if (d <= 1) return true;
    std::vector<bool> reached(d, false);
    std::vector<int> stack{0};
    reached[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        // forward images suffice: each generator has finite order
        for (const auto& p : t.perms) {
            int y = p.images[x];
            if (!reached[y]) {
                reached[y] = true;
                ++count;
                stack.push_back(y);
            }
        }
    }
    return count == d;
}

Permutation tuple_product(const PermutationTuple& t) {
    Permutation prod = Permutation::identity(t.degree);
    for (const auto& p : t.perms) prod = compose(prod, p);
    return prod;
}

bool verify_witness(const PermutationTuple& t, const BranchDatum& datum) {
    if (t.degree != datum.degree) {
        throw std::invalid_argument("verify_witness: tuple and datum degree mismatch");
    }
    if (t.perms.size() != datum.partitions.size()) return false;
    for (size_t i = 0; i < t.perms.size(); ++i) {
        if (t.perms[i].degree() != t.degree) return false;
        if (cycle_type(t.perms[i]) != datum.partitions[i]) return false;
    }
    if (tuple_product(t) != Permutation::identity(t.degree)) return false;
    return is_transitive(t);
}

std::vector<Permutation> conjugacy_class_elements(const Partition& type, int d) {
    std::vector<Permutation> out;
    Permutation p = Permutation::identity(d);
    do {
        if (cycle_type(p) == type) out.push_back(p);
    } while (std::next_permutation(p.images.begin(), p.images.end()));
    return out;
}

}  // namespace hurwitz
