#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "classpec/nat.hpp"

namespace classpec {

enum class Family { Sp, PSp, SO_odd_dim, Omega_odd_dim, SO_even_dim, Omega_even_dim, POmega_even_dim };
enum class Eps { none, plus, minus };

struct GroupSpec {
    Family family = Family::Sp;
    unsigned n = 0;
    std::uint64_t p = 2;
    unsigned f = 1;
    Eps eps = Eps::none;

    Nat q() const { return pow(Nat(p), f); }
    std::uint64_t q_u64() const { return q().to_u64(); }
    bool q_even() const { return p == 2; }
    int eps_sign() const { return eps == Eps::minus ? -1 : 1; }
    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

enum class Engine {
    Sp_q_odd,
    PSp_q_odd,
    Omega_odd_q_even,
    Omega_even_q_even,
    SO_odd_q_odd,
    Omega_odd_q_odd,
    SO_even_q_odd,
    Omega_even_q_odd,
    POmega_even_q_odd,
};

struct NormalizedSpec {
    Engine engine = Engine::Sp_q_odd;
    GroupSpec spec;      // after delegation
    GroupSpec original;  // as queried
    std::vector<std::string> notes;
};

// Sp, PSp and the odd-dimensional orthogonal families (no eps)
bool is_eps_free(Family f);
bool is_projective(Family f);

// throws InvalidArgument / InvalidEpsilon for malformed specs
void validate(const GroupSpec& spec);

NormalizedSpec normalize(const GroupSpec& spec);

Nat group_order(const GroupSpec& spec);
Nat center_order(const GroupSpec& spec);
// factors of group_order as small cyclotomic-style pieces (q^k, q^{2i}-1, q^n +- 1, ...)
std::vector<Nat> group_order_pieces(const GroupSpec& spec);

std::string family_name(Family f);
std::string engine_name(Engine e);
// "Sp_4(3)", "Omega^+_8(3)", "POmega^-_10(5)"
std::string describe(const GroupSpec& spec);

// command-line family names: sp, psp, so-odd, omega-odd, so-even, omega-even, pomega
Family parse_family(const std::string& name);
std::string cli_family_name(Family f);
// "9" or "3^2" -> (3, 2); InvalidArgument unless a prime power below 2^62
std::pair<std::uint64_t, unsigned> parse_prime_power(const std::string& text);
// "+", "-", "plus", "minus"
Eps parse_eps(const std::string& text);

}  // namespace classpec
