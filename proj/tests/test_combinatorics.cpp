#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "genus/counting.hpp"
#include "genus/errors.hpp"
#include "genus/permutations.hpp"

using namespace genus;

TEST_CASE("genus of small permutations") {
    CHECK(genus_of_permutation(Permutation::from_cycles(3, {{1, 2, 3}})) == 0);
    CHECK(genus_of_permutation(Permutation::from_cycles(3, {{1, 3, 2}})) == 1);
    for (int n = 1; n <= 8; ++n) CHECK(genus_of_permutation(Permutation::identity(n)) == 0);
    CHECK(genus_of_permutation(Permutation::circular(5)) == 0);
}

TEST_CASE("genus of small set partitions") {
    CHECK(genus_of_partition(SetPartition::from_blocks1(4, {{1, 2}, {3, 4}})) == 0);
    CHECK(genus_of_partition(SetPartition::from_blocks1(4, {{1, 3}, {2, 4}})) == 1);
    for (int n = 1; n <= 8; ++n) {
        std::vector<int> all(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
        CHECK(genus_of_partition(SetPartition::from_blocks1(n, {all})) == 0);
    }
}

TEST_CASE("genus of pairs") {
    SUBCASE("two-boundary example on 8 points") {
        const Permutation tau = Permutation::from_cycles(8, {{1, 2, 3, 4, 5}, {6, 7, 8}});
        const Permutation sigma = Permutation::from_cycles(8, {{1, 8}, {2, 3, 5, 6, 7}, {4}});
        CHECK(genus_of_pair(sigma, tau) == 0);
    }
    SUBCASE("n=2 with two fixed boundaries") {
        const Permutation tau = Permutation::identity(2);
        const Permutation sigma = Permutation::from_cycles(2, {{1, 2}});
        CHECK(genus_of_pair(sigma, tau) == 0);
    }
    SUBCASE("disconnected pairs are rejected") {
        const Permutation tau = Permutation::identity(2);
        CHECK_THROWS_AS(genus_of_pair(Permutation::identity(2), tau), Disconnected);
    }
    SUBCASE("one boundary reduces to the one-permutation genus") {
        std::mt19937_64 gen(7);
        for (int c = 0; c < 10000; ++c) {
            const int n = 1 + static_cast<int>(gen() % 9);
            std::vector<int> im(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = i;
            std::shuffle(im.begin(), im.end(), gen);
            const Permutation sigma(im);
            CHECK(genus_of_pair(sigma, Permutation::circular(n)) == genus_of_permutation(sigma));
        }
    }
}

TEST_CASE("permutation genus bound 2g <= n-1") {
    for (int n = 1; n <= 7; ++n) {
        const GenusTable t = enumerate_genus_table(n, Kind::permutation);
        CHECK(2 * t.max_genus() <= n - 1);
    }
}

TEST_CASE("enumeration oracle, small ground truth") {
    SUBCASE("S_3 by (genus, type)") {
        const GenusTable t = enumerate_genus_table(3, Kind::permutation);
        CHECK(t.count(0, IntegerPartition({1, 1, 1})) == 1);
        CHECK(t.count(0, IntegerPartition({1, 2})) == 3);
        CHECK(t.count(0, IntegerPartition({3})) == 1);
        CHECK(t.count(1, IntegerPartition({3})) == 1);
        CHECK(t.counts.size() == 4);
    }
    SUBCASE("P(4) has a single genus-1 partition, of type [2,2]") {
        const GenusTable t = enumerate_genus_table(4, Kind::partition);
        CHECK(t.count(1, IntegerPartition({2, 2})) == 1);
        for (const auto& [key, c] : t.counts)
            if (key.first == 1) CHECK(key.second == IntegerPartition({2, 2}));
        CHECK(t.max_genus() == 1);
    }
    SUBCASE("n=1 tables are trivial") {
        for (Kind kind : {Kind::permutation, Kind::partition}) {
            const GenusTable t = enumerate_genus_table(1, kind);
            CHECK(t.counts.size() == 1);
            CHECK(t.count(0, IntegerPartition({1})) == 1);
        }
    }
    SUBCASE("oracle limits are enforced") {
        OracleOptions opts;
        opts.permutation_limit = 4;
        CHECK_THROWS_AS(enumerate_genus_table(5, Kind::permutation, opts), OracleLimitExceeded);
    }
}

TEST_CASE("tables are independent of the worker count") {
    OracleOptions seq, par;
    par.jobs = 4;
    for (int n : {5, 7}) {
        const GenusTable a = enumerate_genus_table(n, Kind::permutation, seq);
        const GenusTable b = enumerate_genus_table(n, Kind::permutation, par);
        CHECK(a.counts == b.counts);
    }
}

TEST_CASE("closed counting formulas") {
    CHECK(count_cycle_type(3, IntegerPartition({3})) == 2);
    CHECK(count_cycle_type(4, IntegerPartition({2, 2})) == 3);
    CHECK(count_cycle_type(3, IntegerPartition({1, 2})) == 3);
    CHECK(count_block_type(4, IntegerPartition({2, 2})) == 3);
    CHECK(count_block_type(6, IntegerPartition({6})) == 1);
    CHECK(count_block_type(3, IntegerPartition({1, 2})) == 3);
    CHECK_THROWS_AS(count_cycle_type(5, IntegerPartition({2, 2})), BadPartition);
    CHECK_THROWS_AS(count_block_type(5, IntegerPartition({2, 2})), BadPartition);
}

TEST_CASE("closed counts agree with enumeration totals per type") {
    for (int n = 1; n <= 7; ++n) {
        const GenusTable perms = enumerate_genus_table(n, Kind::permutation);
        const GenusTable parts = enumerate_genus_table(n, Kind::partition);
        for (const auto& type : IntegerPartition::all_of(n)) {
            BigInt perm_total = 0, part_total = 0;
            for (const auto& [key, c] : perms.counts)
                if (key.second == type) perm_total += c;
            for (const auto& [key, c] : parts.counts)
                if (key.second == type) part_total += c;
            CHECK(perm_total == count_cycle_type(n, type));
            CHECK(part_total == count_block_type(n, type));
        }
    }
}

TEST_CASE("stirling and bell tables") {
    const StirlingTables t = stirling_and_bell(10);
    CHECK(t.bell == std::vector<BigInt>{1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975});

    SUBCASE("the two Stirling matrices are inverse") {
        for (int n = 0; n <= 8; ++n)
            for (int k = 0; k <= 8; ++k) {
                BigInt acc = 0;
                for (int q = 0; q <= 8; ++q)
                    acc += t.s2[static_cast<std::size_t>(n)][static_cast<std::size_t>(q)] *
                           t.s1[static_cast<std::size_t>(q)][static_cast<std::size_t>(k)];
                CHECK(acc == (n == k ? 1 : 0));
            }
    }
    SUBCASE("unsigned first kind sums to factorials") {
        for (int n = 0; n <= 10; ++n) {
            BigInt acc = 0;
            for (int k = 0; k <= n; ++k) {
                BigInt v = t.s1[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
                if ((n - k) % 2 == 1) v = -v;
                acc += v;
            }
            CHECK(acc == factorial(n));
        }
    }
    SUBCASE("tables refine the Stirling numbers by cycle/block count") {
        for (int n = 1; n <= 7; ++n) {
            const GenusTable perms = enumerate_genus_table(n, Kind::permutation);
            const GenusTable parts = enumerate_genus_table(n, Kind::partition);
            for (int k = 1; k <= n; ++k) {
                BigInt dsum = 0, csum = 0;
                for (const auto& [key, c] : perms.counts)
                    if (key.second.length() == k) dsum += c;
                for (const auto& [key, c] : parts.counts)
                    if (key.second.length() == k) csum += c;
                BigInt s1abs = t.s1[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
                if ((n - k) % 2 == 1) s1abs = -s1abs;
                CHECK(dsum == s1abs);
                CHECK(csum == t.s2[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]);
            }
        }
    }
}

TEST_CASE("totals and the planar coincidence") {
    for (int n = 1; n <= 8; ++n) {
        const GenusTable perms = enumerate_genus_table(n, Kind::permutation);
        const GenusTable parts = enumerate_genus_table(n, Kind::partition);
        CHECK(perms.total() == factorial(n));
        CHECK(parts.total() == stirling_and_bell(n).bell[static_cast<std::size_t>(n)]);
        // at genus 0 the two counting problems coincide
        for (const auto& type : IntegerPartition::all_of(n))
            CHECK(perms.count(0, type) == parts.count(0, type));
    }
}

TEST_CASE("moments from tables") {
    const GenusTable perm4 = enumerate_genus_table(4, Kind::permutation);
    CHECK(moments_from_table(perm4, 1) == KappaPolynomial::parse("4*k1*k3 + k2^2 + 5*k4"));
    const GenusTable part6 = enumerate_genus_table(6, Kind::partition);
    CHECK(moments_from_table(part6, 2) == KappaPolynomial::parse("k3^2"));
    CHECK(moments_from_table(part6, 5).is_zero());
}

TEST_CASE("integer partition helpers") {
    CHECK(IntegerPartition::all_of(5).size() == 7);
    CHECK(IntegerPartition({1, 1, 2}).symmetry_factor() == 2);
    CHECK(IntegerPartition({2, 2, 2}).symmetry_factor() == 6);
    CHECK_THROWS_AS(IntegerPartition({2, 1}), BadPartition);
    CHECK_THROWS_AS(IntegerPartition({0, 1}), BadPartition);
}
