#pragma once

#include <string>
#include <vector>

#include "classpec/groups.hpp"
#include "classpec/matgrp.hpp"
#include "classpec/nat.hpp"
#include "classpec/recipe.hpp"

namespace classpec {

struct Generator {
    Nat value;
    std::string provenance;  // item tag, e.g. "unipotent p^k x torus"
    std::string detail;      // parameters, e.g. "k=1 (1|.)"
    WitnessRecipe recipe;
};

struct GeneratorList {
    std::vector<Generator> items;
    std::vector<Nat> values() const;
};

// divisibility antichain, ascending
using OrderAntichain = std::vector<Nat>;

struct NuSet {
    std::vector<Nat> values;
};

Nat max_unipotent_order(LieType type, unsigned rank, std::uint64_t p);

GeneratorList omega_generators(const NormalizedSpec& spec);
NuSet nu_composite(const NormalizedSpec& spec);

OrderAntichain mu(const std::vector<Nat>& values);
OrderAntichain mu(const GeneratorList& gens);

bool contains(const NormalizedSpec& spec, const Nat& m);
// all divisors of all generators, ascending; CapExceeded beyond cap
std::vector<Nat> omega_enumerate(const NormalizedSpec& spec, std::size_t cap);

}  // namespace classpec
