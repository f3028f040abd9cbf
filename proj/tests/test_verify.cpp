#include <doctest.h>

#include "classpec/verify.hpp"
#include "support.hpp"

using namespace classpec;
using support::group;
using support::u64s;

TEST_CASE("verify_exhaustive small groups") {
    auto r = verify_exhaustive(group(Family::Sp, 2, 2), 100000);
    CHECK(r.verdict() == "equal");
    CHECK(r.group_size == Nat(720));
    CHECK(u64s(r.observed_max) == std::vector<std::uint64_t>{4, 5, 6});

    auto p = verify_exhaustive(group(Family::PSp, 2, 3), 100000);
    CHECK(p.verdict() == "equal");
    CHECK(p.group_size == Nat(25920));
    CHECK(p.counterexamples.empty());
    CHECK(p.unobserved.empty());
}

TEST_CASE("verify chooses the mode from the cap") {
    VerifyOptions o;
    o.cap = 1000;
    o.samples = 200;
    CHECK(verify(group(Family::Sp, 2, 2), o).mode == VerifyMode::exhaustive);
    auto r = verify(group(Family::Sp, 2, 3), o);
    CHECK(r.mode == VerifyMode::sample);
    CHECK(r.verdict() == "contained");
    std::size_t total = 0;
    for (const auto& [order, count] : r.histogram) total += count;
    CHECK(total == 200);
}

TEST_CASE("verify_sample is reproducible") {
    auto ns = group(Family::Omega_odd_dim, 3, 3);
    auto a = verify_sample(ns, 1000, 1, 1);
    auto b = verify_sample(ns, 1000, 1, 3);
    CHECK(a.histogram == b.histogram);
    CHECK(a.ok);
}

TEST_CASE("violation verdict") {
    VerifyReport r;
    r.mode = VerifyMode::sample;
    r.ok = false;
    r.counterexamples = {Nat(36)};
    CHECK(r.verdict() == "violation");
    CHECK(mode_name(VerifyMode::automatic) == "auto");
}
