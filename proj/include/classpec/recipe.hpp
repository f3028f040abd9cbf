#pragma once

#include <string>
#include <vector>

namespace classpec {

// One orthogonal/symplectic summand of a witness element.
struct Block {
    enum class Kind {
        core_C,   // regular unipotent of Sp_{2r}
        core_B,   // regular unipotent of SO_{2r+1}
        core_D,   // regular unipotent of Omega^delta_{2r}, delta fixed at assembly
        torus,    // cyclic torus of order q^r - 1 (GL_1(q^r)) or q^r + 1 (GU_1(q^r))
        gl_unip,  // lambda J_m in GL_m(q^r), lambda of order q^r - 1
        gu_unip,  // mu u in GU_m(q^r), mu of order q^r + 1, u regular unipotent
        tensor,   // factors[0] (x) factors[1], both symplectic
        filler,   // 1-dimensional, Q = x^2
    };
    Kind kind = Kind::torus;
    unsigned rank = 0;  // core rank or field degree r
    unsigned size = 1;  // Jordan size m (gl_unip, gu_unip)
    bool plus = false;  // torus: q^r + 1 type
    std::vector<Block> factors;

    static Block core(Kind k, unsigned r) { return {k, r, 1, false, {}}; }
    static Block torus_minus(unsigned r) { return {Kind::torus, r, 1, false, {}}; }
    static Block torus_plus(unsigned r) { return {Kind::torus, r, 1, true, {}}; }
    static Block gl(unsigned r, unsigned m) { return {Kind::gl_unip, r, m, false, {}}; }
    static Block gu(unsigned r, unsigned m) { return {Kind::gu_unip, r, m, true, {}}; }
    static Block tensor_of(Block a, Block b) { return {Kind::tensor, 0, 1, false, {std::move(a), std::move(b)}}; }
    static Block fill() { return {Kind::filler, 0, 1, false, {}}; }
};

struct WitnessRecipe {
    std::vector<Block> blocks;
};

std::string to_string(const Block& b);
std::string to_string(const WitnessRecipe& r);

}  // namespace classpec
