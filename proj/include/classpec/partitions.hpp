#pragma once

#include <string>
#include <vector>

#include "classpec/nat.hpp"

namespace classpec {

struct Partition {
    std::vector<unsigned> parts;  // non-increasing, all >= 1

    unsigned weight() const;
    std::size_t size() const { return parts.size(); }
    bool empty() const { return parts.empty(); }
    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;
};

// minus parts stand for factors q^a - 1, plus parts for q^b + 1
struct SignedPartitionPair {
    Partition minus;
    Partition plus;

    unsigned weight() const { return minus.weight() + plus.weight(); }
    std::size_t part_count() const { return minus.size() + plus.size(); }
    std::size_t plus_count() const { return plus.size(); }
    friend bool operator==(const SignedPartitionPair&, const SignedPartitionPair&) = default;
    friend auto operator<=>(const SignedPartitionPair&, const SignedPartitionPair&) = default;
};

enum class PlusParity { none, plus_even, plus_odd };

// reverse-lexicographic: (m), (m-1,1), ..., (1,...,1)
std::vector<Partition> enumerate_partitions(unsigned m);

std::vector<SignedPartitionPair> enumerate_signed_pairs(unsigned m, PlusParity parity,
                                                        unsigned min_total_parts);

// lcm of q^a - 1 over minus parts and q^b + 1 over plus parts; 1 for the empty pair
Nat signed_lcm(const SignedPartitionPair& pair, const Nat& q);

std::string to_string(const Partition& p);
// "(2,1|1)" with "." for an empty side
std::string to_string(const SignedPartitionPair& pair);

}  // namespace classpec
