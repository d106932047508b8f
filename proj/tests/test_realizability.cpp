#include <doctest.h>

#include <stdexcept>

#include <random>

#include "hurwitz/realizability.hpp"

using namespace hurwitz;

namespace {

const BranchDatum kTorusCyclic = make_branch_datum(1, 3, {{3}, {3}, {3}});
const BranchDatum kExceptional = make_branch_datum(0, 4, {{3, 1}, {2, 2}, {2, 2}});
const BranchDatum kHyperelliptic1 = make_branch_datum(1, 2, {{2}, {2}, {2}, {2}});

}  // namespace

TEST_CASE("find_monodromy realizable examples") {
    auto res = find_monodromy(kTorusCyclic);
    REQUIRE(res.status == Status::Realizable);
    REQUIRE(res.witness.has_value());
    CHECK(verify_witness(*res.witness, kTorusCyclic));
    for (const auto& p : res.witness->perms) {
        CHECK(cycle_type(p) == Partition{3});
    }

    auto res2 = find_monodromy(kHyperelliptic1);
    REQUIRE(res2.status == Status::Realizable);
    CHECK(verify_witness(*res2.witness, kHyperelliptic1));
}

TEST_CASE("compatible but not realizable") {
    CHECK(is_compatible(kExceptional));
    CHECK(find_monodromy(kExceptional).status == Status::NotRealizable);
    CHECK(brute_force_realizable(kExceptional).status == Status::NotRealizable);
}

TEST_CASE("incompatible data short-circuit without search") {
    BranchDatum bad = make_branch_datum(1, 3, {{3}, {3}});
    auto res = find_monodromy(bad);
    CHECK(res.status == Status::NotRealizable);
    CHECK(res.nodes_explored == 0);
}

TEST_CASE("degree-1 data with branch points are refuted without search") {
    for (int n = 3; n <= 5; ++n) {
        BranchDatum datum{0, 1, std::vector<Partition>(n, {1})};
        auto res = find_monodromy(datum);
        CHECK(res.status == Status::NotRealizable);
        CHECK(res.nodes_explored == 0);
        CHECK(brute_force_realizable(datum).status == Status::NotRealizable);
    }
}

TEST_CASE("budget exhaustion yields Unknown") {
    BranchDatum datum = make_branch_datum(2, 4, std::vector<Partition>(10, {2, 1, 1}));
    auto res = find_monodromy(datum, /*budget=*/3);
    CHECK(res.status == Status::Unknown);
}

TEST_CASE("brute force oracle examples") {
    CHECK(brute_force_realizable(kTorusCyclic).status == Status::Realizable);
    BranchDatum g2 = make_branch_datum(2, 5, {{5}, {5}, {5}});
    auto res = brute_force_realizable(g2);
    REQUIRE(res.status == Status::Realizable);
    CHECK(verify_witness(*res.witness, g2));
    CHECK_THROWS_AS(brute_force_realizable(make_branch_datum(0, 6, {{6}, {6}})),
                    std::domain_error);
}

TEST_CASE("oracle agrees with the search on a degree-3 n=4 sample") {
    auto parts = enumerate_partitions(3);
    std::vector<Partition> branching;
    for (const auto& p : parts) {
        if (is_branching_partition(p)) branching.push_back(p);
    }
    for (const auto& a : branching) {
        for (const auto& b : branching) {
            for (const auto& c : branching) {
                for (const auto& e : branching) {
                    auto g = implied_genus(3, {a, b, c, e});
                    if (!g) continue;
                    BranchDatum datum = make_branch_datum(*g, 3, {a, b, c, e});
                    auto fast = find_monodromy(datum);
                    auto slow = brute_force_realizable(datum);
                    CHECK(fast.status == slow.status);
                }
            }
        }
    }
}

TEST_CASE("witness is deterministic with one worker, status stable across workers") {
    auto r1 = find_monodromy(kTorusCyclic, kDefaultBudget, 1);
    auto r2 = find_monodromy(kTorusCyclic, kDefaultBudget, 1);
    CHECK(r1.witness == r2.witness);
    auto r4 = find_monodromy(kTorusCyclic, kDefaultBudget, 4);
    CHECK(r4.status == Status::Realizable);
    CHECK(verify_witness(*r4.witness, kTorusCyclic));
    CHECK(find_monodromy(kExceptional, kDefaultBudget, 4).status == Status::NotRealizable);
}

TEST_CASE("witness genus consistency and conjugation invariance") {
    std::mt19937 rng(23);
    for (const auto* datum : {&kTorusCyclic, &kHyperelliptic1}) {
        auto res = find_monodromy(*datum);
        REQUIRE(res.status == Status::Realizable);
        const auto& w = *res.witness;
        CHECK(2 - 2 * datum->genus == 2 * datum->degree - total_ramification(w));
        for (int trial = 0; trial < 20; ++trial) {
            Permutation s = Permutation::identity(datum->degree);
            std::shuffle(s.images.begin(), s.images.end(), rng);
            PermutationTuple conj{w.degree, {}};
            for (const auto& p : w.perms) conj.perms.push_back(conjugate(p, s));
            CHECK(verify_witness(conj, *datum));
        }
    }
}
