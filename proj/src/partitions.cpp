#include "classpec/partitions.hpp"

#include <numeric>

namespace classpec {

unsigned Partition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0U); }

namespace {

void partitions_rec(unsigned rest, unsigned max_part, std::vector<unsigned>& cur,
                    std::vector<Partition>& out) {
    if (rest == 0) {
        out.push_back(Partition{cur});
        return;
    }
    for (unsigned part = std::min(rest, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_rec(rest - part, part, cur, out);
        cur.pop_back();
    }
}

bool parity_ok(std::size_t plus_parts, PlusParity parity) {
    switch (parity) {
        case PlusParity::none: return true;
        case PlusParity::plus_even: return plus_parts % 2 == 0;
        case PlusParity::plus_odd: return plus_parts % 2 == 1;
    }
    return false;
}

}  // namespace

std::vector<Partition> enumerate_partitions(unsigned m) {
    std::vector<Partition> out;
    std::vector<unsigned> cur;
    partitions_rec(m, m, cur, out);
    return out;
}

std::vector<SignedPartitionPair> enumerate_signed_pairs(unsigned m, PlusParity parity,
                                                        unsigned min_total_parts) {
    std::vector<SignedPartitionPair> out;
    for (unsigned wm = m + 1; wm-- > 0;) {
        auto minus_side = enumerate_partitions(wm);
        auto plus_side = enumerate_partitions(m - wm);
        for (const auto& a : minus_side)
            for (const auto& b : plus_side) {
                if (!parity_ok(b.size(), parity)) continue;
                if (a.size() + b.size() < min_total_parts) continue;
                out.push_back({a, b});
            }
    }
    return out;
}

Nat signed_lcm(const SignedPartitionPair& pair, const Nat& q) {
    Nat acc(1);
    for (unsigned a : pair.minus.parts) acc = lcm(acc, pow(q, a) - 1);
    for (unsigned b : pair.plus.parts) acc = lcm(acc, pow(q, b) + 1);
    return acc;
}

std::string to_string(const Partition& p) {
    if (p.empty()) return ".";
    std::string s;
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p.parts[i]);
    }
    return s;
}

std::string to_string(const SignedPartitionPair& pair) {
    return "(" + to_string(pair.minus) + "|" + to_string(pair.plus) + ")";
}

}  // namespace classpec
