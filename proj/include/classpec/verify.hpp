#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "classpec/groups.hpp"
#include "classpec/matgrp.hpp"
#include "classpec/nat.hpp"

namespace classpec {

enum class VerifyMode { automatic, exhaustive, sample };

struct VerifyOptions {
    VerifyMode mode = VerifyMode::automatic;
    std::size_t samples = 10000;
    std::uint64_t seed = 1;
    std::size_t cap = 200000;
    unsigned threads = 0;
};

struct VerifyReport {
    VerifyMode mode = VerifyMode::exhaustive;  // never automatic
    Nat group_size;                            // enumerated (projective classes) or group_order
    Nat expected_size;                         // group_order of the queried group
    std::vector<Nat> formula_mu;
    std::vector<Nat> observed_max;             // exhaustive
    std::map<Nat, std::size_t> histogram;      // sample
    bool ok = false;                           // equal / contained
    std::vector<Nat> counterexamples;          // observed orders outside the formula spectrum
    std::vector<Nat> unobserved;               // formula maxima missing from the oracle (exhaustive)
    std::string verdict() const;
};

// order of the group the exhaustive oracle has to enumerate
Nat oracle_enumeration_size(const NormalizedSpec& spec);

// Enumerated elements of the queried matrix group. Omega in odd characteristic is
// cut out of the enumerated SO as its derived subgroup.
std::vector<Mat> oracle_elements(const NormalizedSpec& spec, std::size_t cap);

VerifyReport verify_exhaustive(const NormalizedSpec& spec, std::size_t cap, unsigned threads = 0);
VerifyReport verify_sample(const NormalizedSpec& spec, std::size_t samples, std::uint64_t seed, unsigned threads = 0);
VerifyReport verify(const NormalizedSpec& spec, const VerifyOptions& opt);

std::string mode_name(VerifyMode m);

}  // namespace classpec
