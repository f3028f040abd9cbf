#include <doctest.h>

#include <algorithm>

#include "classpec/errors.hpp"
#include "classpec/matgrp.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace classpec;

namespace {

NormalizedSpec literal(Family fam, unsigned n, std::uint64_t p, unsigned f = 1, Eps eps = Eps::none) {
    NormalizedSpec ns;
    ns.original = support::spec(fam, n, p, f, eps);
    ns.spec = ns.original;
    return ns;
}

Mat diag(std::initializer_list<Elem> d) {
    Mat m(unsigned(d.size()));
    unsigned i = 0;
    for (Elem x : d) m.at(i, i) = x, ++i;
    return m;
}

}  // namespace

TEST_CASE("root_element matrices") {
    auto k3 = FieldCtx::make(3, 1);
    Mat c = root_element(k3, LieType::C, 2, RootSpec::two_e(1), 1);
    Mat expect = Mat::identity(4);
    expect.at(0, 2) = 1;
    CHECK(c == expect);

    for (auto r : simple_roots(LieType::B, 3))
        CHECK(root_element(k3, LieType::B, 3, r, 0) == Mat::identity(7));
    for (auto r : simple_roots(LieType::D, 4))
        CHECK(root_element(k3, LieType::D, 4, r, 0) == Mat::identity(8));

    // I + (2E_{1,0} - E_{0,-1}) - E_{1,-1}, coordinates 0,1,2,-1,-2
    Mat b = root_element(k3, LieType::B, 2, RootSpec::e(1), 1);
    Mat eb = Mat::identity(5);
    eb.at(1, 0) = 2;
    eb.at(0, 3) = 2;
    eb.at(1, 3) = 2;
    CHECK(b == eb);
    CHECK_THROWS_AS(root_element(k3, LieType::C, 2, RootSpec::e_minus(1, 3), 1), InvalidRoot);
}

TEST_CASE("root elements preserve their forms") {
    for (auto [p, f] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}}) {
        auto k = FieldCtx::make(p, f);
        MatOps ops(k);
        unsigned n = 3;
        auto all = [&](LieType t) {
            std::vector<RootSpec> rs = simple_roots(t, n);
            std::size_t m = rs.size();
            for (std::size_t i = 0; i < m; ++i) rs.push_back(negate(rs[i]));
            rs.push_back(RootSpec::e_plus(1, 2));
            rs.push_back(RootSpec::neg_e_plus(1, 3));
            return rs;
        };
        for (Elem t : {Elem(1), Elem(k.q() - 1)}) {
            for (auto r : all(LieType::C))
                CHECK(preserves_form(ops, root_element(k, LieType::C, n, r, t), symplectic_form(k, n)));
            for (auto r : all(LieType::B))
                CHECK(preserves_form(ops, root_element(k, LieType::B, n, r, t), odd_orthogonal_form(k, n)));
            for (auto r : all(LieType::D))
                CHECK(preserves_form(ops, root_element(k, LieType::D, n, r, t), even_orthogonal_form(k, n, Eps::plus)));
        }
    }
}

TEST_CASE("preserves_form") {
    auto k = FieldCtx::make(3, 1);
    MatOps ops(k);
    auto sf = symplectic_form(k, 2);
    CHECK(preserves_form(ops, Mat::identity(4), sf));
    CHECK(preserves_form(ops, root_element(k, LieType::C, 2, RootSpec::two_e(1), 1), sf));
    Mat bad = Mat::identity(4);
    bad.at(0, 1) = 1;
    CHECK(!preserves_form(ops, bad, sf));
}

TEST_CASE("element_order and projective_order") {
    auto k = FieldCtx::make(3, 1);
    MatOps ops(k);
    CHECK(element_order(ops, Mat::identity(4), Nat(51840)) == Nat(1));
    Mat inv = diag({1, 2, 2, 2, 2});
    CHECK(preserves_form(ops, inv, odd_orthogonal_form(k, 2)));
    CHECK(ops.det(inv) == 1);
    CHECK(element_order(ops, inv, Nat(51840)) == Nat(2));
    Mat minus = diag({2, 2, 2, 2});
    CHECK(projective_order(ops, minus, factor(Nat(51840)), {1, 2}) == Nat(1));
    CHECK_THROWS_AS(element_order(ops, diag({0, 1}), Nat(8)), NotPeriodic);

    auto r8 = element_of_order(k, 8);
    Mat c = companion(k, min_poly(*r8.ext, r8.lambda));
    CHECK(element_order(ops, c, Nat(8)) == Nat(8));
    CHECK(element_order(ops, c, Nat(8)) == Nat(oracle::naive_order(ops, c, {1})));
}

TEST_CASE("element orders agree with repeated multiplication") {
    auto ns = literal(Family::Sp, 2, 3);
    GroupGens g = standard_generators(ns);
    MatOps ops(FieldCtx::make(3, 1));
    auto elems = sample_elements(ops, g.gens, 300, 7);
    for (const Mat& m : elems) {
        CHECK(element_order(ops, m, g.exponent_bound) == Nat(oracle::naive_order(ops, m, {1})));
        CHECK(projective_order(ops, m, g.exponent_bound, {1, 2}) == Nat(oracle::naive_order(ops, m, {1, 2})));
    }
}

TEST_CASE("standard generators enumerate groups of the right size") {
    struct Case {
        NormalizedSpec ns;
        std::uint64_t size;
    };
    std::vector<Case> cases = {
        {literal(Family::Sp, 2, 2), 720},
        {literal(Family::Sp, 2, 3), 51840},
        {literal(Family::SO_odd_dim, 2, 3), 51840},
        {literal(Family::Omega_odd_dim, 2, 2), 720},
        {literal(Family::Omega_even_dim, 2, 3, 1, Eps::plus), 288},
        {literal(Family::Omega_even_dim, 2, 3, 1, Eps::minus), 360},
        {literal(Family::Omega_even_dim, 2, 2, 1, Eps::minus), 60},
        {literal(Family::Omega_even_dim, 3, 2, 1, Eps::plus), 20160},
        {literal(Family::Omega_even_dim, 3, 2, 1, Eps::minus), 25920},
    };
    for (const auto& c : cases) {
        GroupGens g = standard_generators(c.ns);
        MatOps ops(FieldCtx::make(c.ns.original.p, c.ns.original.f));
        for (const Mat& x : g.gens) {
            CHECK(preserves_form(ops, x, g.form));
            CHECK(ops.det(x) == 1);
        }
        auto elems = enumerate_group(ops, g.gens, 1000000);
        CHECK(elems.size() == c.size);
        CHECK(g.order == Nat(c.size));
    }
}

TEST_CASE("enumerate_group Sp_4(2)") {
    GroupGens g = standard_generators(literal(Family::Sp, 2, 2));
    MatOps ops(FieldCtx::make(2, 1));
    auto elems = enumerate_group(ops, g.gens, 1000000);
    REQUIRE(elems.size() == 720);
    std::vector<oracle::u64> orders;
    for (const Mat& m : elems) orders.push_back(oracle::naive_order(ops, m, {1}));
    CHECK(oracle::maximal(orders) == std::vector<oracle::u64>{4, 5, 6});
}

TEST_CASE("enumerate_group cap") {
    auto k = FieldCtx::make(2, 1);
    MatOps ops(k);
    Mat c = companion(k, {1, 1, 1, 1, 1});
    CHECK(oracle::naive_order(ops, c, {1}) == 5);
    CHECK_THROWS_AS(enumerate_group(ops, {c}, 4), CapExceeded);
    CHECK(enumerate_group(ops, {c}, 5).size() == 5);
}

TEST_CASE("derived_subgroup") {
    auto k = FieldCtx::make(3, 1);
    MatOps ops(k);
    GroupGens so = standard_generators(literal(Family::SO_odd_dim, 2, 3));
    CHECK(derived_subgroup(ops, so.gens, 1000000).size() == 25920);

    Mat t1 = diag({1, 2, 2, 1, 1}), t2 = diag({2, 1, 1, 2, 1});
    auto ab = derived_subgroup(ops, {t1, t2}, 1000);
    REQUIRE(ab.size() == 1);
    CHECK(ops.is_identity(ab[0]));

    GroupGens sp = standard_generators(literal(Family::Sp, 2, 3));
    CHECK(derived_subgroup(ops, sp.gens, 1000000).size() == 51840);
}

TEST_CASE("membership_invariant") {
    auto k = FieldCtx::make(3, 1);
    MatOps ops(k);
    GroupGens so = standard_generators(literal(Family::SO_odd_dim, 2, 3));
    const FormData& form = so.form;
    CHECK(membership_invariant(ops, Mat::identity(5), form) == 0);

    std::vector<std::vector<Elem>> square, nonsquare;
    for (unsigned code = 1; code < 243; ++code) {
        std::vector<Elem> v(5);
        unsigned x = code;
        for (auto& c : v) c = Elem(x % 3), x /= 3;
        Elem qv = quad_value(k, form, v);
        if (qv == 0) continue;
        (k.is_square(qv) ? square : nonsquare).push_back(v);
    }
    REQUIRE(!square.empty());
    REQUIRE(!nonsquare.empty());
    Mat rn = reflection(k, form, nonsquare[0]);
    CHECK(preserves_form(ops, rn, form));
    CHECK(membership_invariant(ops, rn, form) == 1);
    for (std::size_t i = 0; i + 1 < std::min<std::size_t>(nonsquare.size(), 12); ++i) {
        CHECK(membership_invariant(ops, ops.mul(reflection(k, form, nonsquare[i]), reflection(k, form, nonsquare[i + 1])),
                                   form) == 0);
        CHECK(membership_invariant(ops, ops.mul(reflection(k, form, square[i]), reflection(k, form, square[i + 1])),
                                   form) == 0);
        CHECK(membership_invariant(ops, ops.mul(reflection(k, form, square[i]), reflection(k, form, nonsquare[i])),
                                   form) == 1);
    }

    // kernel inside SO_5(3) is exactly the derived subgroup
    auto all = enumerate_group(ops, so.gens, 1000000);
    auto der = derived_subgroup(ops, so.gens, 1000000);
    MatSet inner(der.begin(), der.end());
    std::size_t mismatches = 0;
    for (const Mat& m : all) mismatches += (membership_invariant(ops, m, form) == 0) != inner.contains(m);
    CHECK(mismatches == 0);

    // homomorphism to Z/2
    for (std::size_t i = 0; i < 400; ++i) {
        const Mat& a = all[(i * 7919) % all.size()];
        const Mat& b = all[(i * 104729 + 13) % all.size()];
        CHECK(membership_invariant(ops, ops.mul(a, b), form) ==
              (membership_invariant(ops, a, form) ^ membership_invariant(ops, b, form)));
    }

    Mat moved = Mat::identity(5);
    moved.at(0, 1) = 1;
    CHECK_THROWS_AS(membership_invariant(ops, moved, form), NotOrthogonal);
}

TEST_CASE("Dickson invariant in characteristic 2") {
    auto k = FieldCtx::make(2, 1);
    MatOps ops(k);
    FormData form = even_orthogonal_form(k, 3, Eps::plus);
    std::vector<Elem> v(6, 0);
    v[0] = 1;
    v[3] = 1;  // Q(v) = x1 x_-1 = 1
    Mat r = reflection(k, form, v);
    CHECK(preserves_form(ops, r, form));
    CHECK(membership_invariant(ops, r, form) == 1);
    CHECK(membership_invariant(ops, ops.mul(r, r), form) == 0);
    GroupGens g = standard_generators(literal(Family::Omega_even_dim, 3, 2, 1, Eps::plus));
    for (const Mat& x : sample_elements(ops, g.gens, 200, 3)) CHECK(membership_invariant(ops, x, g.form) == 0);
}

TEST_CASE("sample_elements") {
    auto k = FieldCtx::make(3, 1);
    MatOps ops(k);
    GroupGens g = standard_generators(literal(Family::Sp, 2, 3));
    for (const Mat& m : sample_elements(ops, g.gens, 2000, 11)) {
        auto o = oracle::naive_order(ops, m, {1});
        bool divides = o != 0 && (8 % o == 0 || 10 % o == 0 || 12 % o == 0 || 18 % o == 0);
        CHECK(divides);
    }
    CHECK(sample_elements(ops, g.gens, 1, 42) == sample_elements(ops, g.gens, 1, 42));
    SampleOptions one, four;
    one.threads = 1;
    four.threads = 4;
    CHECK(sample_elements(ops, g.gens, 500, 5, one) == sample_elements(ops, g.gens, 500, 5, four));
    CHECK(sample_orders(support::group(Family::Sp, 2, 3), 200, 9, one) ==
          sample_orders(support::group(Family::Sp, 2, 3), 200, 9, four));
}

TEST_CASE("sampled Omega elements have det 1 and trivial invariant") {
    for (auto ns : {literal(Family::Omega_odd_dim, 3, 3), literal(Family::Omega_even_dim, 4, 3, 1, Eps::minus),
                    literal(Family::Omega_even_dim, 4, 2, 1, Eps::minus), literal(Family::Omega_even_dim, 4, 5, 1, Eps::plus)}) {
        GroupGens g = standard_generators(ns);
        MatOps ops(FieldCtx::make(ns.original.p, ns.original.f));
        for (const Mat& x : sample_elements(ops, g.gens, 300, 2)) {
            CHECK(ops.det(x) == 1);
            CHECK(preserves_form(ops, x, g.form));
            CHECK(membership_invariant(ops, x, g.form) == 0);
        }
    }
    // SO^- contains elements outside Omega
    auto so = literal(Family::SO_even_dim, 4, 3, 1, Eps::minus);
    GroupGens g = standard_generators(so);
    MatOps ops(FieldCtx::make(3, 1));
    auto xs = sample_elements(ops, g.gens, 300, 2);
    CHECK(std::any_of(xs.begin(), xs.end(), [&](const Mat& x) { return membership_invariant(ops, x, g.form) == 1; }));
}
