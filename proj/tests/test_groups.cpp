#include <doctest.h>

#include "classpec/errors.hpp"
#include "classpec/groups.hpp"
#include "support.hpp"

using namespace classpec;
using support::spec;

namespace {

// textbook orders, written out independently of group_order
Nat textbook_order(const GroupSpec& s) {
    Nat q = pow(Nat(s.p), s.f);
    unsigned n = s.n;
    Nat two_odd = s.q_even() ? Nat(1) : Nat(2);
    auto prod = [&](unsigned upto) {
        Nat r = 1;
        for (unsigned i = 1; i <= upto; ++i) r *= pow(q, 2 * i) - 1;
        return r;
    };
    Nat sp = pow(q, n * n) * prod(n);
    Nat qn = pow(q, n);
    Nat so_even = pow(q, n * (n - 1)) * (s.eps == Eps::minus ? qn + 1 : qn - 1) * prod(n - 1);
    switch (s.family) {
        case Family::Sp: return sp;
        case Family::PSp: return sp / two_odd;
        case Family::SO_odd_dim: return sp;
        case Family::Omega_odd_dim: return sp / two_odd;
        case Family::SO_even_dim: return so_even;
        case Family::Omega_even_dim: return so_even / two_odd;
        case Family::POmega_even_dim: {
            Nat t = s.eps == Eps::minus ? qn + 1 : qn - 1;
            return so_even / two_odd / (s.q_even() ? Nat(1) : gcd(Nat(4), t) / 2);
        }
    }
    return 0;
}

}  // namespace

TEST_CASE("normalize delegations") {
    auto a = normalize(spec(Family::Sp, 3, 2));
    CHECK(a.engine == Engine::Omega_odd_q_even);
    CHECK(a.notes.size() == 1);
    CHECK(a.original == spec(Family::Sp, 3, 2));

    auto b = normalize(spec(Family::Omega_odd_dim, 2, 3));
    CHECK(b.engine == Engine::PSp_q_odd);
    CHECK(b.spec.family == Family::PSp);
    CHECK(b.spec.n == 2);

    auto c = normalize(spec(Family::POmega_even_dim, 5, 3, 1, Eps::plus));
    CHECK(gcd(Nat(4), Nat(242)) == Nat(2));
    CHECK(c.engine == Engine::Omega_even_q_odd);
    CHECK(c.spec.family == Family::Omega_even_dim);

    auto d = normalize(spec(Family::POmega_even_dim, 4, 3, 1, Eps::plus));
    CHECK(d.engine == Engine::POmega_even_q_odd);

    for (Family fam : {Family::Sp, Family::PSp, Family::SO_odd_dim, Family::Omega_odd_dim})
        CHECK(normalize(spec(fam, 3, 2, 2)).engine == Engine::Omega_odd_q_even);
}

TEST_CASE("normalize is idempotent") {
    for (Family fam : {Family::Sp, Family::PSp, Family::SO_odd_dim, Family::Omega_odd_dim})
        for (unsigned n = 2; n <= 5; ++n)
            for (std::uint64_t p : {2, 3, 5}) {
                GroupSpec s = spec(fam, n, p);
                if (fam == Family::Omega_odd_dim && p != 2 && n == 2) continue;
                auto a = normalize(s);
                CHECK(normalize(a.spec).engine == a.engine);
            }
    for (Family fam : {Family::Omega_even_dim, Family::POmega_even_dim})
        for (Eps e : {Eps::plus, Eps::minus})
            for (std::uint64_t p : {2, 3, 5}) {
                auto a = normalize(spec(fam, 4, p, 1, e));
                CHECK(normalize(a.spec).engine == a.engine);
            }
}

TEST_CASE("normalize rejects small ranks and bad eps") {
    CHECK_THROWS_AS(normalize(spec(Family::Sp, 1, 3)), UnsupportedGroup);
    CHECK_THROWS_AS(normalize(spec(Family::Omega_even_dim, 3, 3, 1, Eps::plus)), UnsupportedGroup);
    CHECK_THROWS_AS(normalize(spec(Family::SO_even_dim, 4, 2, 1, Eps::plus)), UnsupportedGroup);
    CHECK_THROWS_AS(validate(spec(Family::Sp, 2, 3, 1, Eps::plus)), InvalidEpsilon);
    CHECK_THROWS_AS(validate(spec(Family::Omega_even_dim, 4, 3)), InvalidEpsilon);
    CHECK_THROWS_AS(validate(spec(Family::Sp, 2, 4)), InvalidArgument);
}

TEST_CASE("group_order matches textbook formulas") {
    CHECK(group_order(spec(Family::Sp, 2, 3)) == Nat(51840));
    CHECK(group_order(spec(Family::Sp, 2, 2)) == Nat(720));
    CHECK(group_order(spec(Family::Omega_odd_dim, 2, 3)) == Nat(25920));
    CHECK(group_order(spec(Family::Omega_even_dim, 2, 3, 1, Eps::plus)) == Nat(288));
    for (Family fam : {Family::Sp, Family::PSp, Family::SO_odd_dim, Family::Omega_odd_dim})
        for (unsigned n = 1; n <= 6; ++n)
            for (auto [p, f] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}}) {
                GroupSpec s = spec(fam, n, p, f);
                CHECK(group_order(s) == textbook_order(s));
            }
    for (Family fam : {Family::SO_even_dim, Family::Omega_even_dim, Family::POmega_even_dim})
        for (unsigned n = 2; n <= 6; ++n)
            for (std::uint64_t p : {2, 3, 5, 7})
                for (Eps e : {Eps::plus, Eps::minus}) {
                    if (fam == Family::SO_even_dim && p == 2) continue;
                    GroupSpec s = spec(fam, n, p, 1, e);
                    CHECK(group_order(s) == textbook_order(s));
                }
}

TEST_CASE("center_order") {
    CHECK(center_order(spec(Family::Omega_even_dim, 4, 3, 1, Eps::plus)) == Nat(2));
    CHECK(center_order(spec(Family::Sp, 2, 3)) == Nat(2));
    CHECK(center_order(spec(Family::SO_odd_dim, 2, 3)) == Nat(1));
    CHECK(center_order(spec(Family::Sp, 2, 2)) == Nat(1));
    CHECK(center_order(spec(Family::PSp, 3, 5)) == Nat(1));
    for (unsigned n = 2; n <= 6; ++n)
        for (std::uint64_t p : {3, 5, 7})
            for (Eps e : {Eps::plus, Eps::minus}) {
                GroupSpec s = spec(Family::Omega_even_dim, n, p, 1, e);
                Nat qn = pow(Nat(p), n);
                Nat c = gcd(Nat(4), e == Eps::minus ? qn + 1 : qn - 1) / 2;
                CHECK(center_order(s) == c);
                CHECK(center_order(s).divides(group_order(s)));
            }
}

TEST_CASE("command-line names") {
    CHECK(parse_family("omega-even") == Family::Omega_even_dim);
    CHECK(cli_family_name(Family::SO_odd_dim) == "so-odd");
    CHECK_THROWS_AS(parse_family("gl"), InvalidArgument);
    CHECK(parse_prime_power("9") == std::pair<std::uint64_t, unsigned>{3, 2});
    CHECK(parse_prime_power("3^2") == std::pair<std::uint64_t, unsigned>{3, 2});
    CHECK_THROWS_AS(parse_prime_power("6"), InvalidArgument);
    CHECK(parse_eps("-") == Eps::minus);
    CHECK(parse_eps("plus") == Eps::plus);
    CHECK(describe(spec(Family::Omega_even_dim, 4, 3, 1, Eps::plus)) == "Omega^+_8(3)");
}
