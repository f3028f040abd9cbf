#include "classpec/spectrum.hpp"

#include <algorithm>
#include <set>

#include "classpec/errors.hpp"
#include "classpec/partitions.hpp"

namespace classpec {

std::string to_string(const Block& b) {
    using K = Block::Kind;
    switch (b.kind) {
        case K::core_C: return "unip Sp_" + std::to_string(2 * b.rank);
        case K::core_B: return "unip SO_" + std::to_string(2 * b.rank + 1);
        case K::core_D: return "unip Omega_" + std::to_string(2 * b.rank);
        case K::torus: return std::string("torus q^") + std::to_string(b.rank) + (b.plus ? "+1" : "-1");
        case K::gl_unip: return "GL_" + std::to_string(b.size) + "(q^" + std::to_string(b.rank) + ") unip";
        case K::gu_unip: return "GU_" + std::to_string(b.size) + "(q^" + std::to_string(b.rank) + ") unip";
        case K::tensor: return "(" + to_string(b.factors.at(0)) + ") x (" + to_string(b.factors.at(1)) + ")";
        case K::filler: return "1-dim";
    }
    return "?";
}

std::string to_string(const WitnessRecipe& r) {
    std::string s;
    for (const auto& b : r.blocks) {
        if (!s.empty()) s += " + ";
        s += to_string(b);
    }
    return s.empty() ? "identity" : s;
}

std::vector<Nat> GeneratorList::values() const {
    std::vector<Nat> v;
    v.reserve(items.size());
    for (const auto& g : items) v.push_back(g.value);
    return v;
}

Nat max_unipotent_order(LieType type, unsigned rank, std::uint64_t p) {
    if (!is_prime(p)) throw InvalidArgument("not a prime: " + std::to_string(p));
    if (rank < 1) throw InvalidArgument("rank must be >= 1");
    if (type == LieType::D && rank < 2) throw InvalidArgument("type D needs rank >= 2");
    unsigned h = type == LieType::D ? 2 * rank - 3 : 2 * rank - 1;
    Nat pk(p);
    while (pk <= Nat(h)) pk *= Nat(p);
    return pk;
}

namespace {

using K = Block::Kind;

struct Ctx {
    const GroupSpec& s;
    Nat q;
    std::uint64_t p;
    unsigned n;
    bool odd_dim_orth;  // witnesses need a 1-dim summand when no odd core is present
    GeneratorList out;

    Ctx(const GroupSpec& spec, bool odd_orth) : s(spec), q(spec.q()), p(spec.p), n(spec.n), odd_dim_orth(odd_orth) {}

    Nat qpow(unsigned a) const { return pow(q, a); }
    Nat qm(unsigned a) const { return qpow(a) - 1; }
    Nat qp(unsigned a) const { return qpow(a) + 1; }
    Nat pk(unsigned k) const { return pow(Nat(p), k); }

    void emit(Nat v, std::string tag, std::string detail, std::vector<Block> blocks, bool has_odd_core = false) {
        if (odd_dim_orth && !has_odd_core) blocks.push_back(Block::fill());
        out.items.push_back({std::move(v), std::move(tag), std::move(detail), WitnessRecipe{std::move(blocks)}});
    }
};

std::vector<Block> tori(const SignedPartitionPair& pr) {
    std::vector<Block> b;
    for (unsigned a : pr.minus.parts) b.push_back(Block::torus_minus(a));
    for (unsigned a : pr.plus.parts) b.push_back(Block::torus_plus(a));
    return b;
}

std::vector<Block> with(Block first, const std::vector<Block>& rest) {
    std::vector<Block> b{std::move(first)};
    b.insert(b.end(), rest.begin(), rest.end());
    return b;
}

std::string kd(unsigned k, const SignedPartitionPair& pr) { return "k=" + std::to_string(k) + " " + to_string(pr); }

PlusParity parity_for(Eps e) { return e == Eps::plus ? PlusParity::plus_even : PlusParity::plus_odd; }
PlusParity opposite(PlusParity pp) { return pp == PlusParity::plus_even ? PlusParity::plus_odd : PlusParity::plus_even; }

Block torus_sign(bool plus, unsigned a) { return plus ? Block::torus_plus(a) : Block::torus_minus(a); }

// tensor of SL_2 unipotent with an SL_2 torus of order q-1 / q+1
Block gl2_unip(bool plus) { return Block::tensor_of(Block::core(K::core_C, 1), torus_sign(plus, 1)); }

// lcm of the pair's factors and extra values
Nat lcm_with(const SignedPartitionPair& pr, const Nat& q, std::initializer_list<Nat> extra) {
    Nat v = signed_lcm(pr, q);
    for (const Nat& x : extra) v = lcm(v, x);
    return v;
}

// ---- engines -------------------------------------------------------------

void sp_like(Ctx& c, bool projective) {
    const unsigned n = c.n;
    if (projective) {
        c.emit(c.qm(n) / 2, "half torus", "(q^n-1)/2", {Block::torus_minus(n)});
        c.emit(c.qp(n) / 2, "half torus", "(q^n+1)/2", {Block::torus_plus(n)});
    }
    for (const auto& pr : enumerate_signed_pairs(n, PlusParity::none, projective ? 2 : 1))
        c.emit(signed_lcm(pr, c.q), "torus", to_string(pr), tori(pr));
    for (unsigned k = 1;; ++k) {
        Nat t = c.pk(k - 1) + 1;
        if (t >= Nat(2 * n)) {
            if (t == Nat(2 * n) && k > 1) {
                if (projective)
                    c.emit(c.pk(k), "unipotent", "k=" + std::to_string(k), {Block::core(K::core_C, n)});
                else
                    c.emit(c.pk(k) * 2, "central x unipotent", "k=" + std::to_string(k), {Block::core(K::core_C, n)});
            }
            break;
        }
        unsigned n0 = unsigned(t.to_u64() / 2);
        for (const auto& pr : enumerate_signed_pairs(n - n0, PlusParity::none, 1))
            c.emit(c.pk(k) * signed_lcm(pr, c.q), "unipotent x torus", kd(k, pr),
                   with(Block::core(K::core_C, n0), tori(pr)));
    }
}

void omega_odd_q_even(Ctx& c) {
    const unsigned n = c.n;
    for (const auto& pr : enumerate_signed_pairs(n, PlusParity::none, 1))
        c.emit(signed_lcm(pr, c.q), "torus", to_string(pr), tori(pr));
    for (const auto& pr : enumerate_signed_pairs(n - 1, PlusParity::none, 1))
        c.emit(signed_lcm(pr, c.q) * 2, "unipotent x torus", kd(1, pr), with(Block::core(K::core_C, 1), tori(pr)));
    for (unsigned k = 2;; ++k) {
        unsigned t = unsigned(c.pk(k - 2).to_u64()) + 1;
        if (t >= n) {
            if (t == n) c.emit(c.pk(k), "unipotent", "k=" + std::to_string(k), {Block::core(K::core_C, n)});
            break;
        }
        for (const auto& pr : enumerate_signed_pairs(n - t, PlusParity::none, 1))
            c.emit(c.pk(k) * signed_lcm(pr, c.q), "unipotent x torus", kd(k, pr),
                   with(Block::core(K::core_C, t), tori(pr)));
    }
}

void omega_even_q_even(Ctx& c) {
    const unsigned n = c.n;
    PlusParity par = parity_for(c.s.eps);
    for (const auto& pr : enumerate_signed_pairs(n, par, 1))
        c.emit(signed_lcm(pr, c.q), "torus", to_string(pr), tori(pr));
    for (unsigned k = 2;; ++k) {
        unsigned t = unsigned(c.pk(k - 2).to_u64()) + 2;
        if (t >= n) {
            if (t == n && k > 2) c.emit(c.pk(k), "unipotent", "k=" + std::to_string(k), {Block::core(K::core_D, n)});
            break;
        }
        for (const auto& pr : enumerate_signed_pairs(n - t, PlusParity::none, 1))
            c.emit(c.pk(k) * signed_lcm(pr, c.q), "unipotent x torus", kd(k, pr),
                   with(Block::core(K::core_D, t), tori(pr)));
    }
    for (const auto& pr : enumerate_signed_pairs(n - 2, PlusParity::none, 1))
        c.emit(signed_lcm(pr, c.q) * 2, "unipotent Omega_4 x torus", to_string(pr),
               with(Block::core(K::core_D, 2), tori(pr)));
    for (bool plus : {false, true})
        for (const auto& pr : enumerate_signed_pairs(n - 2, par, 1))
            c.emit(lcm_with(pr, c.q, {plus ? c.qp(1) : c.qm(1)}) * 2, plus ? "GU_2 unipotent x torus" : "GL_2 unipotent x torus",
                   to_string(pr), with(gl2_unip(plus), tori(pr)));
    // mixed-sign reading; the all-plus reading is the subfamily with no minus parts
    for (const auto& pr : enumerate_signed_pairs(n - 3, par, 1))
        c.emit(lcm_with(pr, c.q, {c.qm(1)}) * 4, "GL_3 unipotent x torus", to_string(pr), with(Block::gl(1, 3), tori(pr)));
    for (const auto& pr : enumerate_signed_pairs(n - 3, opposite(par), 1))
        c.emit(lcm_with(pr, c.q, {c.qp(1)}) * 4, "GU_3 unipotent x torus", to_string(pr), with(Block::gu(1, 3), tori(pr)));
}

void so_odd_q_odd(Ctx& c) {
    const unsigned n = c.n;
    for (const auto& pr : enumerate_signed_pairs(n, PlusParity::none, 1))
        c.emit(signed_lcm(pr, c.q), "torus", to_string(pr), tori(pr));
    for (unsigned k = 1;; ++k) {
        Nat t = c.pk(k - 1) + 1;
        if (t >= Nat(2 * n)) {
            if (t == Nat(2 * n)) c.emit(c.pk(k), "unipotent", "k=" + std::to_string(k), {Block::core(K::core_B, n)}, true);
            break;
        }
        unsigned n0 = unsigned(t.to_u64() / 2);
        for (const auto& pr : enumerate_signed_pairs(n - n0, PlusParity::none, 1))
            c.emit(c.pk(k) * signed_lcm(pr, c.q), "unipotent x torus", kd(k, pr),
                   with(Block::core(K::core_B, n0), tori(pr)), true);
    }
}

void omega_odd_q_odd(Ctx& c) {
    const unsigned n = c.n;
    c.emit(c.qm(n) / 2, "half torus", "(q^n-1)/2", {Block::torus_minus(n)});
    c.emit(c.qp(n) / 2, "half torus", "(q^n+1)/2", {Block::torus_plus(n)});
    for (const auto& pr : enumerate_signed_pairs(n, PlusParity::none, 2))
        c.emit(signed_lcm(pr, c.q), "torus", to_string(pr), tori(pr));
    for (unsigned k = 1;; ++k) {
        Nat t = c.pk(k - 1) + 1;
        if (t >= Nat(2 * n)) {
            if (t == Nat(2 * n)) c.emit(c.pk(k), "unipotent", "k=" + std::to_string(k), {Block::core(K::core_B, n)}, true);
            break;
        }
        unsigned n0 = unsigned(t.to_u64() / 2);
        unsigned n1 = n - n0;
        std::string ks = "k=" + std::to_string(k);
        c.emit(c.pk(k) * (c.qm(n1) / 2), "unipotent x half torus", ks + " (q^" + std::to_string(n1) + "-1)/2",
               {Block::core(K::core_B, n0), Block::torus_minus(n1)}, true);
        c.emit(c.pk(k) * (c.qp(n1) / 2), "unipotent x half torus", ks + " (q^" + std::to_string(n1) + "+1)/2",
               {Block::core(K::core_B, n0), Block::torus_plus(n1)}, true);
        for (const auto& pr : enumerate_signed_pairs(n1, PlusParity::none, 2))
            c.emit(c.pk(k) * signed_lcm(pr, c.q), "unipotent x torus", kd(k, pr),
                   with(Block::core(K::core_B, n0), tori(pr)), true);
    }
}

void so_even_q_odd(Ctx& c) {
    const unsigned n = c.n;
    PlusParity par = parity_for(c.s.eps);
    for (const auto& pr : enumerate_signed_pairs(n, par, 1))
        c.emit(signed_lcm(pr, c.q), "torus", to_string(pr), tori(pr));
    for (unsigned k = 1;; ++k) {
        Nat t = c.pk(k - 1) + 3;
        if (t >= Nat(2 * n)) {
            if (t == Nat(2 * n))
                c.emit(c.pk(k) * 2, "central x unipotent", "k=" + std::to_string(k), {Block::core(K::core_D, n)});
            break;
        }
        unsigned n0 = unsigned(t.to_u64() / 2);
        for (const auto& pr : enumerate_signed_pairs(n - n0, PlusParity::none, 1))
            c.emit(c.pk(k) * signed_lcm(pr, c.q), "unipotent x torus", kd(k, pr),
                   with(Block::core(K::core_D, n0), tori(pr)));
    }
    for (bool plus : {false, true})
        for (const auto& pr : enumerate_signed_pairs(n - 2, par, 1))
            c.emit(lcm_with(pr, c.q, {plus ? c.qp(1) : c.qm(1)}) * c.p, plus ? "GU_2 unipotent x torus" : "GL_2 unipotent x torus",
                   to_string(pr), with(gl2_unip(plus), tori(pr)));
}

// n(k) = (p^{k-1} + 3) / 2
unsigned n_of_k(const Ctx& c, unsigned k) {
    Nat v = (c.pk(k - 1) + 3) / 2;
    return v.fits_u64() && v.to_u64() < (1u << 30) ? unsigned(v.to_u64()) : (1u << 30);
}

Nat eps_term(const Ctx& c, unsigned a) { return c.s.eps == Eps::plus ? c.qm(a) : c.qp(a); }

void omega_even_q_odd(Ctx& c, bool projective) {
    const unsigned n = c.n;
    const bool eplus = c.s.eps == Eps::plus;
    PlusParity par = parity_for(c.s.eps);
    Nat p(c.p);
    if (!projective) {
        c.emit(eps_term(c, n) / 2, "half torus", "(q^n-eps)/2", {torus_sign(!eplus, n)});
        for (const auto& pr : enumerate_signed_pairs(n, par, 2))
            c.emit(signed_lcm(pr, c.q), "torus", to_string(pr), tori(pr));
    } else {
        c.emit(eps_term(c, n) / 4, "quarter torus", "(q^n-eps)/4", {torus_sign(!eplus, n)});
        for (unsigned n1 = n - 1; n1 * 2 >= n; --n1) {
            unsigned n2 = n - n1;
            for (bool e1plus : {true, false}) {
                bool e2plus = e1plus == eplus;
                if (n1 == n2 && !e1plus && !eplus) continue;  // same unordered pair as e1 = +
                Nat a = e1plus ? c.qm(n1) : c.qp(n1);
                Nat b = e2plus ? c.qm(n2) : c.qp(n2);
                unsigned d = p_adic_valuation(a, 2).exponent == p_adic_valuation(b, 2).exponent ? 2 : 1;
                std::string det = std::string("[q^") + std::to_string(n1) + (e1plus ? "-1" : "+1") + ", q^" +
                                  std::to_string(n2) + (e2plus ? "-1" : "+1") + "]/" + std::to_string(d);
                c.emit(lcm(a, b) / Nat(d), "two-torus quotient", det,
                       {torus_sign(!e1plus, n1), torus_sign(!e2plus, n2)});
            }
        }
        for (const auto& pr : enumerate_signed_pairs(n, par, 3))
            c.emit(signed_lcm(pr, c.q), "torus", to_string(pr), tori(pr));
    }
    for (unsigned k = 1;; ++k) {
        unsigned nk = n_of_k(c, k);
        if (nk >= n) {
            if (nk == n) {
                if (projective) {
                    c.emit(c.pk(k), "unipotent", "k=" + std::to_string(k), {Block::core(K::core_D, n)});
                } else {
                    Nat d = gcd(Nat(4), eps_term(c, n)) / 2;
                    c.emit(d * c.pk(k), d == Nat(2) ? "central x unipotent" : "unipotent", "k=" + std::to_string(k),
                           {Block::core(K::core_D, n)});
                }
            }
            break;
        }
        unsigned n1 = n - nk;
        std::string ks = "k=" + std::to_string(k);
        for (bool plus : {false, true}) {
            Nat t = plus ? c.qp(n1) : c.qm(n1);
            std::string det = ks + " (q^" + std::to_string(n1) + (plus ? "+1)" : "-1)");
            if (projective) {
                c.emit(c.pk(k) * (t / 2), "unipotent x half torus", det + "/2",
                       {Block::core(K::core_D, nk), torus_sign(plus, n1)});
            } else {
                // the core has type eps for q^m - 1 and -eps for q^m + 1
                Nat core = plus ? (eplus ? c.qp(nk) : c.qm(nk)) : eps_term(c, nk);
                Nat dk = gcd(Nat(4), core) / 2;
                c.emit(c.pk(k) * lcm(dk, t / dk), "unipotent x torus / d_k", det + "/d_k, d_k=" + dk.str(),
                       {Block::core(K::core_D, nk), torus_sign(plus, n1)});
            }
        }
        for (const auto& pr : enumerate_signed_pairs(n1, PlusParity::none, 2))
            c.emit(c.pk(k) * signed_lcm(pr, c.q), "unipotent x torus", kd(k, pr),
                   with(Block::core(K::core_D, nk), tori(pr)));
    }
    for (bool plus : {false, true}) {
        Nat qpm = plus ? c.qp(1) : c.qm(1);
        const char* tag = plus ? "GU_2 unipotent x torus" : "GL_2 unipotent x torus";
        for (const auto& pr : enumerate_signed_pairs(n - 2, par, 2))
            c.emit(lcm_with(pr, c.q, {qpm}) * p, tag, to_string(pr), with(gl2_unip(plus), tori(pr)));
        c.emit(lcm(qpm, eps_term(c, n - 2) / 2) * p, plus ? "GU_2 unipotent x half torus" : "GL_2 unipotent x half torus",
               "(q^{n-2}-eps)/2", {gl2_unip(plus), torus_sign(!eplus, n - 2)});
    }
    if (!projective && n == 4 && eplus) {
        for (bool plus : {false, true})
            c.emit(p * (plus ? c.qp(2) : c.qm(2)), plus ? "GU_2(q^2) unipotent" : "GL_2(q^2) unipotent",
                   plus ? "p(q^2+1)" : "p(q^2-1)",
                   {Block::tensor_of(Block::core(K::core_C, 1), torus_sign(plus, 2))});
        if (c.p == 3)
            for (bool plus : {false, true})
                c.emit(Nat(9) * (plus ? c.qp(1) : c.qm(1)), plus ? "GU_4 unipotent" : "GL_4 unipotent",
                       plus ? "9(q+1)" : "9(q-1)",
                       {Block::tensor_of(torus_sign(plus, 1), Block::core(K::core_C, 2))});
    }
}

}  // namespace

GeneratorList omega_generators(const NormalizedSpec& ns) {
    const GroupSpec& s = ns.spec;
    bool odd_orth = ns.original.family == Family::SO_odd_dim || ns.original.family == Family::Omega_odd_dim;
    // q even odd-dimensional witnesses are built symplectically and lifted
    if (s.q_even()) odd_orth = false;
    Ctx c(s, odd_orth);
    switch (ns.engine) {
        case Engine::Sp_q_odd: sp_like(c, false); break;
        case Engine::PSp_q_odd: sp_like(c, true); break;
        case Engine::Omega_odd_q_even: omega_odd_q_even(c); break;
        case Engine::Omega_even_q_even: omega_even_q_even(c); break;
        case Engine::SO_odd_q_odd: so_odd_q_odd(c); break;
        case Engine::Omega_odd_q_odd: omega_odd_q_odd(c); break;
        case Engine::SO_even_q_odd: so_even_q_odd(c); break;
        case Engine::Omega_even_q_odd: omega_even_q_odd(c, false); break;
        case Engine::POmega_even_q_odd: omega_even_q_odd(c, true); break;
    }
    if (ns.engine == Engine::PSp_q_odd && ns.original.family == Family::Omega_odd_dim) {
        // Omega_5(q) realized orthogonally: recipes in SO_5 terms are not derived
        for (auto& g : c.out.items) g.recipe.blocks.clear();
    }
    return std::move(c.out);
}

// ---- nu sets -------------------------------------------------------------

NuSet nu_composite(const NormalizedSpec& ns) {
    const GroupSpec& s = ns.spec;
    const unsigned n = s.n;
    const Nat q = s.q();
    const std::uint64_t p = s.p;
    auto pk = [&](unsigned k) { return pow(Nat(p), k); };
    NuSet out;
    auto& v = out.values;
    auto add_pairs = [&](const Nat& factor, unsigned m, PlusParity par, unsigned min_parts) {
        for (const auto& pr : enumerate_signed_pairs(m, par, min_parts)) v.push_back(factor * signed_lcm(pr, q));
    };
    PlusParity par = s.eps == Eps::plus ? PlusParity::plus_even : PlusParity::plus_odd;
    Nat eps_n2 = s.eps == Eps::plus ? pow(q, n - 2) - 1 : pow(q, n - 2) + 1;

    switch (ns.engine) {
        case Engine::Sp_q_odd:
        case Engine::PSp_q_odd:
            for (unsigned k = 1;; ++k) {
                Nat t = pk(k - 1) + 1;
                if (t >= Nat(2 * n)) {
                    if (t == Nat(2 * n) && k > 1) v.push_back(ns.engine == Engine::Sp_q_odd ? pk(k) * 2 : pk(k));
                    break;
                }
                add_pairs(pk(k), n - unsigned(t.to_u64() / 2), PlusParity::none, 1);
            }
            break;
        case Engine::Omega_odd_q_even:
            for (unsigned k = 2;; ++k) {
                unsigned t = unsigned(pk(k - 2).to_u64()) + 1;
                if (t >= n) break;
                add_pairs(pk(k), n - t, PlusParity::none, 1);
            }
            add_pairs(Nat(2), n - 1, PlusParity::none, 1);
            break;
        case Engine::Omega_even_q_even:
            for (unsigned k = 2;; ++k) {
                unsigned t = unsigned(pk(k - 2).to_u64()) + 2;
                if (t >= n) break;
                add_pairs(pk(k), n - t, PlusParity::none, 1);
            }
            add_pairs(Nat(2), n - 2, PlusParity::none, 1);
            for (const auto& pr : enumerate_signed_pairs(n - 2, par, 1)) {
                v.push_back(lcm(signed_lcm(pr, q), q - 1) * 2);
                v.push_back(lcm(signed_lcm(pr, q), q + 1) * 2);
            }
            for (const auto& pr : enumerate_signed_pairs(n - 3, par, 1)) v.push_back(lcm(signed_lcm(pr, q), q - 1) * 4);
            for (const auto& pr : enumerate_signed_pairs(n - 3, par == PlusParity::plus_even ? PlusParity::plus_odd : PlusParity::plus_even, 1))
                v.push_back(lcm(signed_lcm(pr, q), q + 1) * 4);
            break;
        case Engine::SO_odd_q_odd:
            for (unsigned k = 1;; ++k) {
                Nat t = pk(k - 1) + 1;
                if (t >= Nat(2 * n)) break;
                add_pairs(pk(k), n - unsigned(t.to_u64() / 2), PlusParity::none, 1);
            }
            break;
        case Engine::Omega_odd_q_odd:
            for (unsigned k = 1;; ++k) {
                Nat t = pk(k - 1) + 1;
                if (t >= Nat(2 * n)) break;
                for (const auto& pr : enumerate_signed_pairs(n - unsigned(t.to_u64() / 2), PlusParity::none, 1)) {
                    if (pr.part_count() >= 2)
                        v.push_back(pk(k) * signed_lcm(pr, q));
                    else if (!pr.minus.empty())
                        v.push_back(pk(k) * ((pow(q, pr.minus.parts[0]) - 1) / 2));
                    else
                        v.push_back(pk(k) * ((pow(q, pr.plus.parts[0]) + 1) / 2));
                }
            }
            break;
        case Engine::SO_even_q_odd:
            for (unsigned k = 1;; ++k) {
                Nat t = pk(k - 1) + 3;
                if (t >= Nat(2 * n)) {
                    if (t == Nat(2 * n)) v.push_back(pk(k) * 2);
                    break;
                }
                add_pairs(pk(k), n - unsigned(t.to_u64() / 2), PlusParity::none, 1);
            }
            for (const auto& pr : enumerate_signed_pairs(n - 2, par, 0)) {
                v.push_back(lcm(signed_lcm(pr, q), q - 1) * p);
                v.push_back(lcm(signed_lcm(pr, q), q + 1) * p);
            }
            break;
        case Engine::Omega_even_q_odd:
        case Engine::POmega_even_q_odd: {
            bool proj = ns.engine == Engine::POmega_even_q_odd;
            Nat eps_n = s.eps == Eps::plus ? pow(q, n) - 1 : pow(q, n) + 1;
            for (unsigned k = 1;; ++k) {
                Nat nkv = (pk(k - 1) + 3) / 2;
                if (nkv >= Nat(n)) {
                    if (!proj && nkv == Nat(n) && gcd(Nat(4), eps_n) == Nat(4)) v.push_back(pk(k) * 2);
                    break;
                }
                unsigned nk = unsigned(nkv.to_u64());
                for (bool plus : {false, true}) {
                    Nat t = plus ? pow(q, n - nk) + 1 : pow(q, n - nk) - 1;
                    bool core_plus = (s.eps == Eps::plus) != plus;
                    Nat dk = gcd(Nat(4), core_plus ? pow(q, nk) - 1 : pow(q, nk) + 1) / 2;
                    v.push_back(proj ? pk(k) * (t / 2) : pk(k) * lcm(dk, t / dk));
                }
                add_pairs(pk(k), n - nk, PlusParity::none, 2);
            }
            for (const auto& pr : enumerate_signed_pairs(n - 2, par, 2)) {
                v.push_back(lcm(signed_lcm(pr, q), q - 1) * p);
                v.push_back(lcm(signed_lcm(pr, q), q + 1) * p);
            }
            v.push_back(lcm(q - 1, eps_n2 / 2) * p);
            v.push_back(lcm(q + 1, eps_n2 / 2) * p);
            if (!proj && n == 4 && s.eps == Eps::plus) {
                v.push_back(Nat(p) * (q * q - 1));
                v.push_back(Nat(p) * (q * q + 1));
                if (p == 3) {
                    v.push_back(Nat(9) * (q - 1));
                    v.push_back(Nat(9) * (q + 1));
                }
            }
            break;
        }
    }
    return out;
}

// ---- antichain and membership ------------------------------------------------

OrderAntichain mu(const std::vector<Nat>& values) {
    std::vector<Nat> u = values;
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    OrderAntichain out;
    for (std::size_t i = 0; i < u.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = i + 1; j < u.size() && maximal; ++j)
            if (u[i].divides(u[j])) maximal = false;
        if (maximal) out.push_back(u[i]);
    }
    return out;
}

OrderAntichain mu(const GeneratorList& gens) { return mu(gens.values()); }

bool contains(const NormalizedSpec& spec, const Nat& m) {
    if (m.is_zero()) throw InvalidArgument("order 0");
    for (const Nat& v : mu(omega_generators(spec)))
        if (m.divides(v)) return true;
    return false;
}

std::vector<Nat> omega_enumerate(const NormalizedSpec& spec, std::size_t cap) {
    if (cap < 1) throw InvalidArgument("cap must be >= 1");
    std::set<Nat> all;
    for (const Nat& v : mu(omega_generators(spec))) {
        for (Nat& d : divisors(factor(v), cap)) all.insert(std::move(d));
        if (all.size() > cap) throw CapExceeded("spectrum has more than " + std::to_string(cap) + " elements");
    }
    return {all.begin(), all.end()};
}

}  // namespace classpec
