#include <doctest.h>

#include <stdexcept>

#include <random>

#include "hurwitz/permutation.hpp"

using namespace hurwitz;

namespace {

Permutation random_perm(int d, std::mt19937& rng) {
    Permutation p = Permutation::identity(d);
    std::shuffle(p.images.begin(), p.images.end(), rng);
    return p;
}

}  // namespace

TEST_CASE("cycle_type") {
    CHECK(cycle_type(Permutation::identity(3)) == Partition{1, 1, 1});
    CHECK(cycle_type(Permutation{{1, 2, 0}}) == Partition{3});
    CHECK(cycle_type(Permutation{{1, 0, 3, 2}}) == Partition{2, 2});
}

TEST_CASE("compose is left-to-right on points") {
    Permutation a{{1, 0, 2}};  // swap 0,1
    Permutation b{{0, 2, 1}};  // swap 1,2
    CHECK(compose(a, b).images == std::vector<int>{2, 0, 1});  // 0 ->a 1 ->b 2
}

TEST_CASE("inverse and conjugate properties") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        int d = 2 + static_cast<int>(rng() % 5);
        Permutation p = random_perm(d, rng);
        Permutation s = random_perm(d, rng);
        CHECK(compose(p, inverse(p)) == Permutation::identity(d));
        CHECK(cycle_type(conjugate(p, s)) == cycle_type(p));
    }
}

TEST_CASE("canonical_class_representative has the requested type") {
    for (int d = 2; d <= 6; ++d) {
        for (const auto& type : enumerate_partitions(d)) {
            CHECK(cycle_type(canonical_class_representative(type, d)) == type);
        }
    }
}

TEST_CASE("conjugacy_class_elements sizes in S4") {
    CHECK(conjugacy_class_elements({1, 1, 1, 1}, 4).size() == 1);
    CHECK(conjugacy_class_elements({2, 1, 1}, 4).size() == 6);
    CHECK(conjugacy_class_elements({2, 2}, 4).size() == 3);
    CHECK(conjugacy_class_elements({3, 1}, 4).size() == 8);
    CHECK(conjugacy_class_elements({4}, 4).size() == 6);
}

TEST_CASE("total_ramification") {
    Permutation three_cycle{{1, 2, 0}};
    CHECK(total_ramification({3, {three_cycle, three_cycle, three_cycle}}) == 6);
    CHECK(total_ramification({3, {Permutation::identity(3), Permutation::identity(3)}}) == 0);
    Permutation swap{{1, 0}};
    CHECK(total_ramification({2, {swap, swap, swap, swap}}) == 4);
}

TEST_CASE("is_transitive") {
    Permutation three_cycle{{1, 2, 0}};
    CHECK(is_transitive({3, {three_cycle, three_cycle, three_cycle}}));
    CHECK_FALSE(is_transitive({2, {Permutation::identity(2), Permutation::identity(2)}}));
    CHECK(is_transitive({4, {Permutation{{1, 0, 3, 2}}, Permutation{{2, 3, 0, 1}}}}));
}

TEST_CASE("verify_witness") {
    Permutation three_cycle{{1, 2, 0}};
    BranchDatum torus = make_branch_datum(1, 3, {{3}, {3}, {3}});
    CHECK(verify_witness({3, {three_cycle, three_cycle, three_cycle}}, torus));
    // product not the identity
    Permutation inv_cycle = inverse(three_cycle);
    CHECK_FALSE(verify_witness({3, {three_cycle, three_cycle, inv_cycle}}, torus));
    // cycle types do not match
    BranchDatum two_points = make_branch_datum(1, 2, {{2}, {2}, {2}, {2}});
    PermutationTuple ids{2, {Permutation::identity(2), Permutation::identity(2),
                             Permutation::identity(2), Permutation::identity(2)}};
    CHECK_FALSE(verify_witness(ids, two_points));
    CHECK_THROWS_AS(verify_witness({3, {three_cycle}}, two_points), std::invalid_argument);
}
