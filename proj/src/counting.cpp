#include "genus/counting.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "genus/errors.hpp"

namespace genus {

IntegerPartition::IntegerPartition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw BadPartition("integer partition with a nonpositive part");
        if (i > 0 && parts[i] < parts[i - 1]) throw BadPartition("integer partition parts must be nondecreasing");
    }
}

int IntegerPartition::sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::vector<IntegerPartition> IntegerPartition::all_of(int n) {
    std::vector<IntegerPartition> out;
    std::vector<int> cur;
    // parts chosen nonincreasing, then reversed into canonical order
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            std::vector<int> p(cur.rbegin(), cur.rend());
            out.emplace_back(std::move(p));
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            cur.push_back(part);
            self(self, remaining - part, part);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(rec, n, n == 0 ? 1 : n);
    std::sort(out.begin(), out.end());
    return out;
}

BigInt IntegerPartition::symmetry_factor() const {
    BigInt sym = 1;
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        sym *= factorial(static_cast<int>(j - i));
        i = j;
    }
    return sym;
}

std::string IntegerPartition::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ',';
        os << parts[i];
    }
    os << ']';
    return os.str();
}

std::string kind_name(Kind k) { return k == Kind::permutation ? "permutation" : "partition"; }

Kind kind_from_name(const std::string& s) {
    if (s == "permutation" || s == "perm") return Kind::permutation;
    if (s == "partition" || s == "part") return Kind::partition;
    throw std::invalid_argument("unknown kind: " + s);
}

BigInt GenusTable::total() const {
    BigInt t = 0;
    for (const auto& [key, c] : counts) t += c;
    return t;
}

int GenusTable::max_genus() const {
    int g = 0;
    for (const auto& [key, c] : counts) g = std::max(g, key.first);
    return g;
}

BigInt GenusTable::count(int g, const IntegerPartition& type) const {
    auto it = counts.find({g, type});
    return it == counts.end() ? BigInt(0) : it->second;
}

namespace {

using CountMap = std::map<std::pair<int, IntegerPartition>, BigInt>;

// Cycle count of sigma^{-1} zeta_n given the images of sigma, without
// materializing intermediate permutations.
int cycle_count_sigma_inv_zeta(const std::vector<int>& images, std::vector<int>& inv,
                               std::vector<bool>& seen) {
    const int n = static_cast<int>(images.size());
    for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(images[static_cast<std::size_t>(i)])] = i;
    std::fill(seen.begin(), seen.end(), false);
    int count = 0;
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        ++count;
        int j = i;
        while (!seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = true;
            j = inv[static_cast<std::size_t>((j + 1) % n)];
        }
    }
    return count;
}

// Classifies one permutation given its image array; type_buf receives the
// sorted cycle type.
std::pair<int, std::vector<int>> classify_permutation(const std::vector<int>& images,
                                                      std::vector<int>& inv,
                                                      std::vector<bool>& seen) {
    const int n = static_cast<int>(images.size());
    std::fill(seen.begin(), seen.end(), false);
    std::vector<int> type;
    int cycles = 0;
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        int len = 0;
        int j = i;
        while (!seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = true;
            j = images[static_cast<std::size_t>(j)];
            ++len;
        }
        type.push_back(len);
        ++cycles;
    }
    std::sort(type.begin(), type.end());
    const int lq = cycle_count_sigma_inv_zeta(images, inv, seen);
    const int twice_g = n + 1 - cycles - lq;
    if (twice_g < 0 || twice_g % 2 != 0)
        throw OddGenusDefect("enumeration hit 2g = " + std::to_string(twice_g));
    return {twice_g / 2, std::move(type)};
}

// Enumerates the permutations with images[0] == first, accumulating into acc.
void enumerate_shard(int n, int first, CountMap& acc) {
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (v != first) rest.push_back(v);
    std::vector<int> images(static_cast<std::size_t>(n));
    std::vector<int> inv(static_cast<std::size_t>(n));
    std::vector<bool> seen(static_cast<std::size_t>(n));
    images[0] = first;
    do {
        std::copy(rest.begin(), rest.end(), images.begin() + 1);
        auto [g, type] = classify_permutation(images, inv, seen);
        acc[{g, IntegerPartition(std::move(type))}] += 1;
    } while (std::next_permutation(rest.begin(), rest.end()));
}

CountMap enumerate_permutations(int n, int jobs) {
    if (n == 1) {
        CountMap m;
        m[{0, IntegerPartition({1})}] = 1;
        return m;
    }
    const int shards = n;
    std::vector<CountMap> partial(static_cast<std::size_t>(shards));
    if (jobs <= 1) {
        for (int s = 0; s < shards; ++s) enumerate_shard(n, s, partial[static_cast<std::size_t>(s)]);
    } else {
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        const int workers = std::min(jobs, shards);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (int s = next++; s < shards; s = next++)
                    enumerate_shard(n, s, partial[static_cast<std::size_t>(s)]);
            });
        for (auto& t : pool) t.join();
    }
    CountMap total;
    for (const auto& m : partial)
        for (const auto& [key, c] : m) total[key] += c;
    return total;
}

CountMap enumerate_partitions(int n) {
    CountMap acc;
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    // maxv[i] = 1 + max(rgs[0..i-1]), the largest value allowed at slot i
    std::vector<int> maxv(static_cast<std::size_t>(n), 1);
    maxv[0] = 0;
    std::vector<int> images(static_cast<std::size_t>(n));
    std::vector<int> inv(static_cast<std::size_t>(n));
    std::vector<bool> seen(static_cast<std::size_t>(n));
    std::vector<int> first_of(static_cast<std::size_t>(n)), last_of(static_cast<std::size_t>(n));
    std::vector<int> block_size(static_cast<std::size_t>(n));

    auto classify = [&]() {
        // Build the increasing-cycle permutation of the partition directly
        // from the restricted growth string.
        int nblocks = 0;
        for (int i = 0; i < n; ++i) {
            const int v = rgs[static_cast<std::size_t>(i)];
            if (v == nblocks) {
                first_of[static_cast<std::size_t>(v)] = i;
                block_size[static_cast<std::size_t>(v)] = 1;
                ++nblocks;
            } else {
                images[static_cast<std::size_t>(last_of[static_cast<std::size_t>(v)])] = i;
                ++block_size[static_cast<std::size_t>(v)];
            }
            last_of[static_cast<std::size_t>(v)] = i;
        }
        for (int v = 0; v < nblocks; ++v)
            images[static_cast<std::size_t>(last_of[static_cast<std::size_t>(v)])] =
                first_of[static_cast<std::size_t>(v)];
        auto [g, type] = classify_permutation(images, inv, seen);
        acc[{g, IntegerPartition(std::move(type))}] += 1;
    };

    // Iterative restricted-growth-string enumeration: rgs[i] may run up to
    // maxv[i] = 1 + max(rgs[0..i-1]), odometer-style.
    classify();
    while (true) {
        int d = n - 1;
        while (d > 0 && rgs[static_cast<std::size_t>(d)] == maxv[static_cast<std::size_t>(d)]) --d;
        if (d == 0) break;
        ++rgs[static_cast<std::size_t>(d)];
        for (int j = d + 1; j < n; ++j) {
            rgs[static_cast<std::size_t>(j)] = 0;
            maxv[static_cast<std::size_t>(j)] = std::max(maxv[static_cast<std::size_t>(j - 1)],
                                                         rgs[static_cast<std::size_t>(j - 1)] + 1);
        }
        classify();
    }
    return acc;
}

}  // namespace

GenusTable enumerate_genus_table(int n, Kind kind, const OracleOptions& opts) {
    if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
    const int limit = kind == Kind::permutation ? opts.permutation_limit : opts.partition_limit;
    if (n > limit)
        throw OracleLimitExceeded("n = " + std::to_string(n) + " exceeds the " + kind_name(kind) +
                                  " oracle limit " + std::to_string(limit));
    GenusTable t;
    t.n = n;
    t.kind = kind;
    t.counts = kind == Kind::permutation ? enumerate_permutations(n, opts.jobs)
                                         : enumerate_partitions(n);
    const BigInt expected =
        kind == Kind::permutation ? factorial(n) : stirling_and_bell(n).bell[static_cast<std::size_t>(n)];
    if (t.total() != expected)
        throw std::logic_error("enumeration lost elements: got " + t.total().get_str() +
                               ", expected " + expected.get_str());
    return t;
}

BigInt count_cycle_type(int n, const IntegerPartition& a) {
    if (a.sum() != n) throw BadPartition("type " + a.str() + " is not a partition of " + std::to_string(n));
    BigInt den = a.symmetry_factor();
    for (int part : a.parts) den *= part;
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), factorial(n).get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("cycle-type count was not an integer");
    return q;
}

BigInt count_block_type(int n, const IntegerPartition& a) {
    if (a.sum() != n) throw BadPartition("type " + a.str() + " is not a partition of " + std::to_string(n));
    BigInt den = a.symmetry_factor();
    for (int part : a.parts) den *= factorial(part);
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), factorial(n).get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("block-type count was not an integer");
    return q;
}

StirlingTables stirling_and_bell(int n_max) {
    StirlingTables t;
    const std::size_t m = static_cast<std::size_t>(n_max) + 1;
    t.s1.assign(m, std::vector<BigInt>(m, 0));
    t.s2.assign(m, std::vector<BigInt>(m, 0));
    t.bell.assign(m, 0);
    t.s1[0][0] = 1;
    t.s2[0][0] = 1;
    for (std::size_t n = 1; n < m; ++n) {
        for (std::size_t k = 1; k <= n; ++k) {
            // falling-factorial coefficients: s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k)
            t.s1[n][k] = t.s1[n - 1][k - 1] - BigInt(static_cast<long>(n - 1)) * t.s1[n - 1][k];
            t.s2[n][k] = t.s2[n - 1][k - 1] + BigInt(static_cast<long>(k)) * t.s2[n - 1][k];
        }
    }
    t.bell[0] = 1;
    for (std::size_t n = 0; n + 1 < m; ++n) {
        BigInt b = 0;
        for (std::size_t k = 0; k <= n; ++k)
            b += binomial(static_cast<int>(n), static_cast<int>(k)) * t.bell[k];
        t.bell[n + 1] = b;
    }
    return t;
}

KappaPolynomial moments_from_table(const GenusTable& t, int g) {
    KappaPolynomial p;
    for (const auto& [key, c] : t.counts) {
        if (key.first != g) continue;
        KappaMonomial m;
        for (int part : key.second.parts) m = m * KappaMonomial::first(part);
        p.add_term(m, Rational(c));
    }
    return p;
}

}  // namespace genus
