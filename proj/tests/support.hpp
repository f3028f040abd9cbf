#pragma once
// Shorthands shared by the test binaries.

#include <set>
#include <vector>

#include "classpec/groups.hpp"
#include "classpec/nat.hpp"

namespace support {

inline classpec::GroupSpec spec(classpec::Family fam, unsigned n, std::uint64_t p, unsigned f = 1,
                                classpec::Eps eps = classpec::Eps::none) {
    classpec::GroupSpec s;
    s.family = fam;
    s.n = n;
    s.p = p;
    s.f = f;
    s.eps = eps;
    return s;
}

inline classpec::NormalizedSpec group(classpec::Family fam, unsigned n, std::uint64_t p, unsigned f = 1,
                                      classpec::Eps eps = classpec::Eps::none) {
    return classpec::normalize(spec(fam, n, p, f, eps));
}

inline std::vector<std::uint64_t> u64s(const std::vector<classpec::Nat>& v) {
    std::vector<std::uint64_t> out;
    for (const auto& x : v) out.push_back(x.to_u64());
    return out;
}

inline std::vector<classpec::Nat> nats(std::initializer_list<std::uint64_t> v) {
    return {v.begin(), v.end()};
}

inline std::set<std::uint64_t> as_set(const std::vector<classpec::Nat>& v) {
    auto u = u64s(v);
    return {u.begin(), u.end()};
}

}  // namespace support
