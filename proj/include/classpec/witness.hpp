#pragma once

#include <string>

#include "classpec/groups.hpp"
#include "classpec/matgrp.hpp"
#include "classpec/nat.hpp"
#include "classpec/recipe.hpp"

namespace classpec {

struct Witness {
    Mat matrix;
    FormData form;  // the standard form of the group, as in standard_generators
    Nat order;      // projective where the group is projective
    WitnessRecipe recipe;
    std::string provenance;
};

// Assembles the recipe's blocks, moves them onto the standard form and searches
// block powers and signs (-1) for an element of the group of order `claimed`.
// InfeasibleRecipe when the recipe cannot fit the group; OrderMismatch when no
// variant has the claimed order.
Witness construct_witness(const NormalizedSpec& spec, const WitnessRecipe& recipe, const Nat& claimed);

// element of order m, a power of the witness for the smallest generator divisible by m;
// InfeasibleRecipe if m divides no generator with a recipe
Witness witness_for_order(const NormalizedSpec& spec, const Nat& m);

}  // namespace classpec
