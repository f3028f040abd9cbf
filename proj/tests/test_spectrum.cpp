#include <doctest.h>

#include "classpec/errors.hpp"
#include "classpec/spectrum.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace classpec;
using support::as_set;
using support::group;
using support::u64s;

namespace {

// least power of p above the height of the highest root
oracle::u64 unipotent_oracle(LieType t, unsigned r, oracle::u64 p) {
    unsigned h = t == LieType::D ? 2 * r - 3 : 2 * r - 1;
    oracle::u64 v = p;
    while (v <= h) v *= p;
    return v;
}

}  // namespace

TEST_CASE("max_unipotent_order") {
    CHECK(max_unipotent_order(LieType::C, 2, 3) == Nat(9));
    CHECK(max_unipotent_order(LieType::D, 4, 2) == Nat(8));
    CHECK(max_unipotent_order(LieType::B, 1, 5) == Nat(5));
    for (LieType t : {LieType::B, LieType::C, LieType::D})
        for (unsigned r = t == LieType::D ? 2 : 1; r <= 12; ++r)
            for (oracle::u64 p : {2, 3, 5, 7, 11})
                CHECK(max_unipotent_order(t, r, p) == Nat(unipotent_oracle(t, r, p)));
}

TEST_CASE("omega_generators Sp_4(3)") {
    auto g = omega_generators(group(Family::Sp, 2, 3));
    CHECK(as_set(g.values()) == std::set<std::uint64_t>{2, 4, 6, 8, 10, 12, 18});
    CHECK(u64s(mu(g)) == std::vector<std::uint64_t>{8, 10, 12, 18});
    for (const auto& item : g.items) {
        CHECK(!item.provenance.empty());
        CHECK(!item.recipe.blocks.empty());
    }
}

TEST_CASE("omega_generators Omega_7(3) and Omega_5(2)") {
    CHECK(u64s(mu(omega_generators(group(Family::Omega_odd_dim, 3, 3)))) ==
          std::vector<std::uint64_t>{8, 12, 13, 14, 15, 18, 20});
    CHECK(u64s(mu(omega_generators(group(Family::Omega_odd_dim, 2, 2)))) == std::vector<std::uint64_t>{4, 5, 6});
    CHECK(u64s(mu(omega_generators(group(Family::PSp, 2, 3)))) == std::vector<std::uint64_t>{5, 9, 12});
}

TEST_CASE("nu_composite") {
    CHECK(as_set(nu_composite(group(Family::Sp, 2, 3)).values) == std::set<std::uint64_t>{6, 12, 18});
    CHECK(as_set(nu_composite(group(Family::PSp, 2, 3)).values) == std::set<std::uint64_t>{6, 9, 12});
    CHECK(as_set(nu_composite(group(Family::Omega_odd_dim, 3, 3)).values).count(18) == 1);
    for (const auto& ns : {group(Family::Sp, 3, 5), group(Family::SO_odd_dim, 4, 3),
                           group(Family::Omega_even_dim, 5, 3, 1, Eps::minus),
                           group(Family::POmega_even_dim, 4, 5, 1, Eps::plus)}) {
        auto om = omega_generators(ns).values();
        for (const Nat& v : nu_composite(ns).values) {
            bool in = std::any_of(om.begin(), om.end(), [&](const Nat& w) { return v.divides(w); });
            CHECK(in);
            bool composite = false;
            for (std::uint64_t d = 2; d * d <= v.to_u64(); ++d) composite = composite || v.to_u64() % d == 0;
            CHECK(composite);
        }
    }
}

TEST_CASE("mu") {
    CHECK(u64s(mu(support::nats({8, 10, 2, 4, 4, 6, 12, 18}))) == std::vector<std::uint64_t>{8, 10, 12, 18});
    CHECK(u64s(mu(support::nats({1}))) == std::vector<std::uint64_t>{1});
    CHECK(u64s(mu(support::nats({6, 2, 3}))) == std::vector<std::uint64_t>{6});
    std::vector<oracle::u64> raw;
    for (oracle::u64 i = 0; i < 200; ++i) raw.push_back(1 + (i * 37) % 97);
    std::vector<Nat> nv(raw.begin(), raw.end());
    CHECK(u64s(mu(nv)) == oracle::maximal(raw));
}

TEST_CASE("contains") {
    auto sp = group(Family::Sp, 2, 3);
    CHECK(contains(sp, 18));
    CHECK(contains(sp, 1));
    CHECK(!contains(sp, 7));
    for (oracle::u64 m = 1; m <= 40; ++m) {
        bool ref = false;
        for (oracle::u64 g : {8, 10, 12, 18}) ref = ref || g % m == 0;
        CHECK(contains(sp, m) == ref);
    }
}

TEST_CASE("omega_enumerate") {
    CHECK(u64s(omega_enumerate(group(Family::PSp, 2, 3), 100)) ==
          std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 9, 12});
    CHECK(u64s(omega_enumerate(group(Family::Sp, 2, 3), 100)) ==
          std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 18});
    CHECK(u64s(omega_enumerate(group(Family::Omega_odd_dim, 3, 3), 100)) ==
          std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 14, 15, 18, 20});
    CHECK_THROWS_AS(omega_enumerate(group(Family::Sp, 2, 3), 5), CapExceeded);
}

TEST_CASE("large field values stay exact") {
    auto ns = group(Family::Sp, 6, 1021, 1);
    auto m = mu(omega_generators(ns));
    Nat big = pow(Nat(1021), 6) + 1;
    bool has = std::any_of(m.begin(), m.end(), [&](const Nat& v) { return big.divides(v); });
    CHECK(has);
    auto huge = group(Family::Sp, 4, 1099511627689ULL, 1);  // prime near 2^40
    auto mh = mu(omega_generators(huge));
    CHECK(std::any_of(mh.begin(), mh.end(), [](const Nat& v) { return !v.fits_u64(); }));
}
