#pragma once

#include <string>
#include <vector>

namespace genus {

// Permutation of {1,...,n}, stored 0-based: images[i] = sigma(i).
class Permutation {
public:
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    // i -> i+1 mod n, the circular permutation.
    static Permutation circular(int n);
    // Cycles given 1-based, fixed points may be omitted.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    // Function composition: (*this before after)(i) = after(this(i)) reads
    // right-to-left as after o this; compose(a, b)(i) = a(b(i)).
    static Permutation compose(const Permutation& a, const Permutation& b);

    int cycle_count() const;
    std::vector<std::vector<int>> cycles() const;  // 0-based, each cycle starts at its minimum
    std::vector<int> cycle_type() const;           // nondecreasing lengths

    bool operator==(const Permutation& o) const = default;
    std::string str() const;  // 1-based cycle notation

private:
    std::vector<int> images_;
};

// Set partition of {1,...,n}: disjoint nonempty blocks covering the ground
// set, stored 0-based; each block sorted, blocks ordered by minimum element.
class SetPartition {
public:
    SetPartition(int n, std::vector<std::vector<int>> blocks_zero_based);

    static SetPartition from_blocks1(int n, const std::vector<std::vector<int>>& blocks_one_based);
    // Restricted growth string: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
    static SetPartition from_rgs(const std::vector<int>& rgs);

    int size() const { return n_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    std::vector<int> block_type() const;  // nondecreasing sizes

    // The permutation whose cycles traverse each block in increasing order.
    Permutation to_permutation() const;

    bool operator==(const SetPartition& o) const = default;
    std::string str() const;

private:
    int n_;
    std::vector<std::vector<int>> blocks_;
};

// Genus of a permutation: 2g = n + 1 - l(sigma) - l(sigma^{-1} zeta_n).
int genus_of_permutation(const Permutation& sigma);

// Genus of a set partition via its increasing-cycle permutation.
int genus_of_partition(const SetPartition& lambda);

// True when <sigma, tau> acts transitively on the ground set.
bool pair_connected(const Permutation& sigma, const Permutation& tau);

// Genus of a connected pair: 2g = n + 2 - l(tau) - l(sigma) - l(sigma^{-1} tau).
// Throws Disconnected when <sigma, tau> is not transitive.
int genus_of_pair(const Permutation& sigma, const Permutation& tau);

}  // namespace genus
