#pragma once

#include <map>
#include <string>
#include <vector>

#include "genus/kappa.hpp"
#include "genus/permutations.hpp"
#include "genus/rational.hpp"

namespace genus {

// Partition of an integer: positive parts in nondecreasing order.
struct IntegerPartition {
    std::vector<int> parts;

    IntegerPartition() = default;
    explicit IntegerPartition(std::vector<int> p);

    int sum() const;
    int length() const { return static_cast<int>(parts.size()); }

    bool operator==(const IntegerPartition& o) const = default;
    bool operator<(const IntegerPartition& o) const { return parts < o.parts; }

    // All partitions of n in canonical (lexicographic) order.
    static std::vector<IntegerPartition> all_of(int n);

    // Product of k_j! over the multiplicities k_j of the parts.
    BigInt symmetry_factor() const;

    std::string str() const;  // "[1,2,2]"
};

enum class Kind { permutation, partition };
std::string kind_name(Kind k);
Kind kind_from_name(const std::string& s);

// Exact counts of genus-g objects by cycle type / block type.
struct GenusTable {
    int n = 0;
    Kind kind = Kind::permutation;
    std::map<std::pair<int, IntegerPartition>, BigInt> counts;

    BigInt total() const;
    int max_genus() const;
    BigInt count(int g, const IntegerPartition& type) const;
};

struct OracleOptions {
    int permutation_limit = 9;
    int partition_limit = 10;
    int jobs = 1;
};

// Exhaustively classifies S_n or P(n) by (genus, type). Throws
// OracleLimitExceeded above the configured limit. The result is an
// order-independent aggregate: identical for any job count.
GenusTable enumerate_genus_table(int n, Kind kind, const OracleOptions& opts = {});

// D_{n,[a]} = n! / (sym(a) * prod a_i): permutations with cycle type [a].
BigInt count_cycle_type(int n, const IntegerPartition& a);

// C_{n,[a]} = n! / (sym(a) * prod a_i!): set partitions with block type [a].
BigInt count_block_type(int n, const IntegerPartition& a);

// Signed Stirling numbers of the first kind, Stirling numbers of the second
// kind, and Bell numbers, all for 0 <= n <= n_max.
struct StirlingTables {
    std::vector<std::vector<BigInt>> s1;  // s1[n][k], signed
    std::vector<std::vector<BigInt>> s2;  // s2[n][k]
    std::vector<BigInt> bell;
};
StirlingTables stirling_and_bell(int n_max);

// The genus-g moment polynomial of a table: sum of count * prod kappa_{a_i}.
KappaPolynomial moments_from_table(const GenusTable& t, int g);

}  // namespace genus
