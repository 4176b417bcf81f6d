#include "genus/permutations.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "genus/errors.hpp"

namespace genus {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("permutation images are not a bijection");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
}

Permutation Permutation::circular(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = (i + 1) % n;
    return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 0);
    for (const auto& cyc : cycles) {
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            const int from = cyc[k] - 1;
            const int to = cyc[(k + 1) % cyc.size()] - 1;
            if (from < 0 || from >= n || to < 0 || to >= n)
                throw std::invalid_argument("cycle entry out of range");
            im[static_cast<std::size_t>(from)] = to;
        }
    }
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 0; i < size(); ++i) im[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
    return Permutation(std::move(im));
}

Permutation Permutation::compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("composing permutations of different sizes");
    std::vector<int> im(static_cast<std::size_t>(a.size()));
    for (int i = 0; i < a.size(); ++i) im[static_cast<std::size_t>(i)] = a(b(i));
    return Permutation(std::move(im));
}

int Permutation::cycle_count() const {
    int count = 0;
    std::vector<bool> seen(images_.size(), false);
    for (int i = 0; i < size(); ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        ++count;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = images_[static_cast<std::size_t>(j)])
            seen[static_cast<std::size_t>(j)] = true;
    }
    return count;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (int i = 0; i < size(); ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        std::vector<int> cyc;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = images_[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = true;
            cyc.push_back(j);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> type;
    for (const auto& c : cycles()) type.push_back(static_cast<int>(c.size()));
    std::sort(type.begin(), type.end());
    return type;
}

std::string Permutation::str() const {
    std::ostringstream os;
    for (const auto& cyc : cycles()) {
        os << '(';
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            if (k) os << ',';
            os << cyc[k] + 1;
        }
        os << ')';
    }
    return os.str();
}

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks) : n_(n), blocks_(std::move(blocks)) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    int covered = 0;
    for (auto& b : blocks_) {
        if (b.empty()) throw std::invalid_argument("set partition with an empty block");
        std::sort(b.begin(), b.end());
        for (int v : b) {
            if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("set partition blocks are not disjoint subsets of the ground set");
            seen[static_cast<std::size_t>(v)] = true;
            ++covered;
        }
    }
    if (covered != n) throw std::invalid_argument("set partition does not cover the ground set");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

SetPartition SetPartition::from_blocks1(int n, const std::vector<std::vector<int>>& blocks1) {
    std::vector<std::vector<int>> blocks0;
    blocks0.reserve(blocks1.size());
    for (const auto& b : blocks1) {
        std::vector<int> z;
        z.reserve(b.size());
        for (int v : b) z.push_back(v - 1);
        blocks0.push_back(std::move(z));
    }
    return SetPartition(n, std::move(blocks0));
}

SetPartition SetPartition::from_rgs(const std::vector<int>& rgs) {
    int nblocks = 0;
    for (std::size_t i = 0; i < rgs.size(); ++i) {
        if (rgs[i] < 0 || rgs[i] > nblocks) throw std::invalid_argument("invalid restricted growth string");
        nblocks = std::max(nblocks, rgs[i] + 1);
    }
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(nblocks));
    for (std::size_t i = 0; i < rgs.size(); ++i)
        blocks[static_cast<std::size_t>(rgs[i])].push_back(static_cast<int>(i));
    return SetPartition(static_cast<int>(rgs.size()), std::move(blocks));
}

std::vector<int> SetPartition::block_type() const {
    std::vector<int> type;
    for (const auto& b : blocks_) type.push_back(static_cast<int>(b.size()));
    std::sort(type.begin(), type.end());
    return type;
}

Permutation SetPartition::to_permutation() const {
    std::vector<int> im(static_cast<std::size_t>(n_));
    for (const auto& b : blocks_)
        for (std::size_t k = 0; k < b.size(); ++k)
            im[static_cast<std::size_t>(b[k])] = b[(k + 1) % b.size()];
    return Permutation(std::move(im));
}

std::string SetPartition::str() const {
    std::ostringstream os;
    for (const auto& b : blocks_) {
        os << '{';
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (k) os << ',';
            os << b[k] + 1;
        }
        os << '}';
    }
    return os.str();
}

namespace {

int genus_from_even(int twice_g, const std::string& what) {
    if (twice_g < 0 || twice_g % 2 != 0)
        throw OddGenusDefect(what + " produced 2g = " + std::to_string(twice_g));
    return twice_g / 2;
}

}  // namespace

int genus_of_permutation(const Permutation& sigma) {
    const int n = sigma.size();
    if (n < 1) throw std::invalid_argument("genus of an empty permutation");
    const Permutation q = Permutation::compose(sigma.inverse(), Permutation::circular(n));
    return genus_from_even(n + 1 - sigma.cycle_count() - q.cycle_count(), "genus formula");
}

int genus_of_partition(const SetPartition& lambda) {
    return genus_of_permutation(lambda.to_permutation());
}

bool pair_connected(const Permutation& sigma, const Permutation& tau) {
    const int n = sigma.size();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
    for (int i = 0; i < n; ++i) {
        unite(i, sigma(i));
        unite(i, tau(i));
    }
    for (int i = 1; i < n; ++i)
        if (find(i) != find(0)) return false;
    return true;
}

int genus_of_pair(const Permutation& sigma, const Permutation& tau) {
    const int n = sigma.size();
    if (tau.size() != n) throw std::invalid_argument("pair of permutations of different sizes");
    if (!pair_connected(sigma, tau))
        throw Disconnected("the pair does not act transitively on the ground set");
    const int b = tau.cycle_count();
    const Permutation q = Permutation::compose(sigma.inverse(), tau);
    return genus_from_even(n + 2 - b - sigma.cycle_count() - q.cycle_count(), "pair genus formula");
}

}  // namespace genus
