#pragma once

#include <vector>

#include "hurwitz/branch_datum.hpp"
#include "hurwitz/partition.hpp"

namespace hurwitz {

// A permutation of {0,...,d-1}; images[i] is the image of point i.
struct Permutation {
    std::vector<int> images;

    int degree() const { return static_cast<int>(images.size()); }
    int operator()(int x) const { return images[x]; }

    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& other) const { return images < other.images; }

    static Permutation identity(int d);
};

bool is_valid_permutation(const Permutation& p);

// Left-to-right composition on points: compose(a, b) applies a first,
// then b. The tuple product perms[0] * ... * perms[n-1] uses this order.
Permutation compose(const Permutation& a, const Permutation& b);

Permutation inverse(const Permutation& p);

// s^-1 p s in the compose() convention: apply s, then p, then s^-1.
Permutation conjugate(const Permutation& p, const Permutation& s);

// Cycle lengths (fixed points included as 1s) in canonical form.
Partition cycle_type(const Permutation& p);

// The representative of the class with cycle type `type` whose cycles are
// (0 ... t1-1)(t1 ... t1+t2-1)..., each cycling consecutive points.
Permutation canonical_class_representative(const Partition& type, int d);

struct PermutationTuple {
    int degree = 1;
    std::vector<Permutation> perms;

    bool operator==(const PermutationTuple&) const = default;
};

// sum over all cycles of (length - 1); the R_p of the candidate cover.
int total_ramification(const PermutationTuple& t);

// Single orbit under the generated group, by flood fill.
bool is_transitive(const PermutationTuple& t);

Permutation tuple_product(const PermutationTuple& t);

// Monodromy criterion: cycle types match the datum's partitions in order,
// the product is the identity, and the tuple is transitive.
// Throws std::invalid_argument on degree mismatch.
bool verify_witness(const PermutationTuple& t, const BranchDatum& datum);

// All elements of S_d with the given cycle type, ascending by image array.
std::vector<Permutation> conjugacy_class_elements(const Partition& type, int d);

}  // namespace hurwitz
