// Acceptance checks 1-9. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails. Usage: acceptance <path to classpec binary>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include <sys/wait.h>

#include "classpec/errors.hpp"
#include "classpec/spectrum.hpp"
#include "classpec/verify.hpp"
#include "classpec/witness.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace classpec;
using oracle::u64;
using support::group;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

std::string list(const std::vector<u64>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

std::string seconds(double s) {
    std::ostringstream o;
    o.precision(2);
    o << std::fixed << s << " s";
    return o.str();
}

bool divides_some(u64 m, const std::vector<u64>& vs) {
    for (u64 v : vs)
        if (v % m == 0) return true;
    return false;
}

bool omega_family(Family f) {
    return f == Family::Omega_odd_dim || f == Family::Omega_even_dim || f == Family::POmega_even_dim;
}

// maxima of naive (projective) orders over an enumerated element list
std::vector<u64> observed_maxima(const MatOps& ops, const std::vector<Mat>& elems, const std::vector<Elem>& central) {
    std::vector<u64> orders;
    orders.reserve(elems.size());
    for (const Mat& m : elems) orders.push_back(oracle::naive_order(ops, m, central));
    std::set<u64> distinct(orders.begin(), orders.end());
    return oracle::maximal({distinct.begin(), distinct.end()});
}

Outcome exhaustive(const NormalizedSpec& ns, const std::vector<u64>& expected_mu, u64 expected_size, bool projective,
                   bool derived, double limit) {
    auto t0 = std::chrono::steady_clock::now();
    const GroupSpec& s = ns.original;
    MatOps ops(FieldCtx::make(s.p, s.f));
    auto formula = support::u64s(mu(omega_generators(ns)));
    std::vector<Mat> elems;
    if (derived) {
        NormalizedSpec so = ns;
        so.original.family = Family::SO_odd_dim;
        elems = derived_subgroup(ops, standard_generators(so).gens, 1000000);
    } else {
        elems = enumerate_group(ops, standard_generators(ns).gens, 1000000);
    }
    std::vector<Elem> central = projective ? std::vector<Elem>{1, ops.field().neg(1)} : std::vector<Elem>{1};
    u64 size = elems.size() / central.size();
    auto seen = observed_maxima(ops, elems, central);
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Outcome o;
    o.ok = formula == expected_mu && seen == formula && size == expected_size && dt < limit;
    o.detail = describe(s) + ": formula " + list(formula) + ", oracle " + list(seen) + " over " +
               std::to_string(size) + (projective ? " classes, " : " elements, ") + seconds(dt);
    return o;
}

Outcome criterion1() { return exhaustive(group(Family::Sp, 2, 3), {8, 10, 12, 18}, 51840, false, false, 120); }

Outcome criterion2() { return exhaustive(group(Family::PSp, 2, 3), {5, 9, 12}, 25920, true, false, 120); }

Outcome criterion3() { return exhaustive(group(Family::Omega_odd_dim, 2, 2), {4, 5, 6}, 720, false, false, 10); }

Outcome criterion4() {
    auto ns = group(Family::Omega_odd_dim, 2, 3);
    Outcome o = exhaustive(ns, {5, 9, 12}, 25920, false, true, 180);
    bool delegated = ns.engine == Engine::PSp_q_odd && ns.spec.family == Family::PSp;
    o.ok = o.ok && delegated;
    o.detail += delegated ? ", answered by " + describe(ns.spec) : ", not delegated";
    return o;
}

Outcome criterion5() {
    std::vector<NormalizedSpec> groups = {
        group(Family::Sp, 3, 3),
        group(Family::SO_odd_dim, 3, 3),
        group(Family::Omega_odd_dim, 3, 3),
        group(Family::SO_even_dim, 4, 3, 1, Eps::plus),
        group(Family::SO_even_dim, 4, 3, 1, Eps::minus),
        group(Family::Omega_even_dim, 4, 3, 1, Eps::plus),
        group(Family::Omega_even_dim, 4, 3, 1, Eps::minus),
        group(Family::Omega_even_dim, 4, 2, 1, Eps::plus),
        group(Family::Omega_even_dim, 4, 2, 1, Eps::minus),
    };
    Outcome o{true, ""};
    double worst = 0;
    for (const auto& ns : groups) {
        auto t0 = std::chrono::steady_clock::now();
        const GroupSpec& s = ns.original;
        MatOps ops(FieldCtx::make(s.p, s.f));
        GroupGens g = standard_generators(ns);
        auto gens = support::u64s(omega_generators(ns).values());
        auto xs = sample_elements(ops, g.gens, 10000, 1);
        std::size_t bad = 0, outside = 0;
        std::set<u64> violations;
        for (const Mat& x : xs) {
            if (ops.det(x) != 1 || !preserves_form(ops, x, g.form)) ++outside;
            if (omega_family(s.family) && membership_invariant(ops, x, g.form) != 0) ++outside;
            u64 ord = oracle::naive_order(ops, x, {1});
            if (ord == 0 || !divides_some(ord, gens)) ++bad, violations.insert(ord);
        }
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        worst = std::max(worst, dt);
        bool ok = bad == 0 && outside == 0 && xs.size() == 10000 && dt < 300;
        if (!ok) {
            o.detail += describe(s) + " violations " + list({violations.begin(), violations.end()}) + " outside " +
                        std::to_string(outside) + "; ";
        }
        o.ok = o.ok && ok;
    }
    o.detail += std::to_string(groups.size()) + " groups x 10000 samples, seed 1, slowest " + seconds(worst);
    return o;
}

Outcome criterion6() {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o{true, ""};
    std::size_t count = 0;
    for (const auto& ns : {group(Family::Sp, 2, 3), group(Family::Sp, 3, 3), group(Family::Omega_odd_dim, 3, 3)}) {
        const GroupSpec& s = ns.original;
        MatOps ops(FieldCtx::make(s.p, s.f));
        GroupGens g = standard_generators(ns);
        auto gens = omega_generators(ns);
        for (const Nat& m : mu(gens)) {
            const Generator* item = nullptr;
            for (const auto& it : gens.items)
                if (it.value == m && !it.recipe.blocks.empty()) item = &it;
            bool ok = item != nullptr;
            if (ok) {
                try {
                    Witness w = construct_witness(ns, item->recipe, m);
                    ok = preserves_form(ops, w.matrix, g.form) && ops.det(w.matrix) == 1 &&
                         (!omega_family(s.family) || membership_invariant(ops, w.matrix, g.form) == 0) &&
                         element_order(ops, w.matrix, g.exponent_bound) == m &&
                         oracle::naive_order(ops, w.matrix, {1}) == m.to_u64();
                } catch (const Error&) {
                    ok = false;
                }
            }
            ++count;
            if (!ok) o.detail += describe(s) + " order " + m.str() + " not realized; ";
            o.ok = o.ok && ok;
        }
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.ok = o.ok && dt < 60;
    o.detail += std::to_string(count) + " maximal orders realized in Sp_4(3), Sp_6(3), Omega_7(3), " + seconds(dt);
    return o;
}

bool is_antichain(const std::vector<Nat>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (i != j && v[i].divides(v[j])) return false;
            if (i < j && !(v[i] < v[j])) return false;
        }
    return true;
}

// every value of `small` divides a value of `big`
bool spectrum_within(const std::vector<Nat>& small, const std::vector<Nat>& big) {
    for (const Nat& a : small) {
        bool in = false;
        for (const Nat& b : big) in = in || a.divides(b);
        if (!in) return false;
    }
    return true;
}

Outcome criterion7() {
    auto t0 = std::chrono::steady_clock::now();
    std::size_t checked = 0, skipped = 0, delegated = 0, inclusions = 0, failures = 0;
    std::string detail;
    auto fail = [&](const std::string& what) {
        ++failures;
        if (failures <= 5) detail += what + "; ";
    };
    std::vector<std::pair<u64, unsigned>> fields = {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {3, 2}};
    std::vector<Family> families = {Family::Sp,           Family::PSp,           Family::SO_odd_dim,
                                    Family::Omega_odd_dim, Family::SO_even_dim, Family::Omega_even_dim,
                                    Family::POmega_even_dim};
    for (auto [p, f] : fields)
        for (unsigned n = 1; n <= 6; ++n) {
            std::map<std::pair<Family, Eps>, std::vector<Nat>> spectra;
            for (Family fam : families)
                for (Eps e : is_eps_free(fam) ? std::vector<Eps>{Eps::none} : std::vector<Eps>{Eps::plus, Eps::minus}) {
                    GroupSpec s = support::spec(fam, n, p, f, e);
                    NormalizedSpec ns;
                    try {
                        ns = normalize(s);
                    } catch (const UnsupportedGroup&) {
                        ++skipped;
                        continue;
                    }
                    ++checked;
                    auto gens = omega_generators(ns);
                    auto m = mu(gens);
                    spectra[{fam, e}] = m;
                    if (!is_antichain(m)) fail(describe(s) + " mu not an antichain");
                    auto values = gens.values();
                    if (!spectrum_within(nu_composite(ns).values, values)) fail(describe(s) + " nu outside omega");
                    if (!(ns.spec == ns.original)) {
                        ++delegated;
                        NormalizedSpec direct = normalize(ns.spec);
                        if (!(direct.spec == ns.spec) || direct.engine != ns.engine ||
                            mu(omega_generators(direct)) != m)
                            fail(describe(s) + " differs from " + describe(ns.spec));
                    }
                }
            auto within = [&](std::pair<Family, Eps> a, std::pair<Family, Eps> b) {
                if (!spectra.count(a) || !spectra.count(b)) return;
                ++inclusions;
                if (!spectrum_within(spectra[a], spectra[b]))
                    fail(describe(support::spec(a.first, n, p, f, a.second)) + " not within " +
                         describe(support::spec(b.first, n, p, f, b.second)));
            };
            within({Family::PSp, Eps::none}, {Family::Sp, Eps::none});
            within({Family::Omega_odd_dim, Eps::none}, {Family::SO_odd_dim, Eps::none});
            for (Eps e : {Eps::plus, Eps::minus}) {
                within({Family::POmega_even_dim, e}, {Family::Omega_even_dim, e});
                within({Family::Omega_even_dim, e}, {Family::SO_even_dim, e});
            }
        }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Outcome o;
    o.ok = failures == 0 && dt < 60 && checked > 0;
    o.detail = detail + std::to_string(checked) + " queries (" + std::to_string(skipped) + " out of range), " +
               std::to_string(delegated) + " delegated, " + std::to_string(inclusions) + " inclusions, " +
               std::to_string(failures) + " violations, " + seconds(dt);
    return o;
}

Outcome criterion8() {
    struct Case {
        Family fam;
        LieType type;
        unsigned n;
        u64 p;
    };
    std::vector<Case> cases = {{Family::Sp, LieType::C, 2, 3},
                               {Family::Sp, LieType::C, 2, 2},
                               {Family::Omega_odd_dim, LieType::B, 2, 2},
                               {Family::SO_odd_dim, LieType::B, 2, 3}};
    Outcome o{true, ""};
    for (const auto& c : cases) {
        auto k = FieldCtx::make(c.p, 1);
        MatOps ops(k);
        unsigned dim = c.type == LieType::C ? 2 * c.n : 2 * c.n + 1;
        Mat u = Mat::identity(dim);
        for (const auto& r : simple_roots(c.type, c.n)) u = ops.mul(u, root_element(k, c.type, c.n, r, 1));
        NormalizedSpec ns;
        ns.original = support::spec(c.fam, c.n, c.p);
        GroupGens g = standard_generators(ns);
        u64 got = oracle::naive_order(ops, u, {1});
        u64 want = max_unipotent_order(c.type, c.n, c.p).to_u64();
        bool ok = got == want && preserves_form(ops, u, g.form);
        o.ok = o.ok && ok;
        o.detail += describe(ns.original) + " " + std::to_string(got) + (ok ? "" : " (want " + std::to_string(want) + ")") +
                    "; ";
    }
    o.detail += "product of simple root elements u_a(1)";
    return o;
}

std::pair<int, std::string> run(const std::string& cmd) {
    std::string out;
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    if (!pipe) return {-1, ""};
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome criterion9(const std::string& cli) {
    if (cli.empty()) return {false, "no classpec binary given"};
    std::vector<std::string> commands = {
        "--version",
        "spectrum sp 2 3",
        "spectrum sp 2 3 --json",
        "spectrum psp 2 3 --full --json",
        "spectrum omega-even 4 3 --eps - --json",
        "spectrum pomega 5 9 --eps + --full",
        "spectrum sp 1 3",
        "verify sp 2 2 --mode exhaustive --json",
        "verify psp 2 3",
        "verify omega-odd 3 3 --mode sample --samples 2000 --seed 1 --json",
        "verify omega-even 4 3 --eps - --mode sample --samples 1000 --seed 7",
        "verify sp 3 3 --mode exhaustive --cap 1000",
        "witness sp 2 3 --order 18",
        "witness sp 2 3 --order 1 --json",
        "witness omega-odd 2 3 --order 9 --json",
        "witness omega-even 4 3 --eps - --order 36",
        "witness sp 2 3 --order 7",
        "spectrum gl 2 3",
    };
    Outcome o{true, ""};
    for (const auto& c : commands) {
        auto a = run("CLASSPEC_THREADS=1 " + cli + " " + c);
        auto b = run("CLASSPEC_THREADS=4 " + cli + " " + c);
        auto d = run("CLASSPEC_THREADS=4 " + cli + " " + c);
        bool same = a == b && b == d && !a.second.empty();
        if (!same) o.detail += "'" + c + "' differs; ";
        o.ok = o.ok && same;
    }
    o.detail += std::to_string(commands.size()) + " commands, 3 runs each (1 and 4 threads), byte-identical";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "";
    std::vector<std::pair<int, std::function<Outcome()>>> checks = {
        {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
        {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, [&] { return criterion9(cli); }},
    };
    int failed = 0;
    for (auto& [id, check] : checks) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << o.detail << std::endl;
        failed += !o.ok;
    }
    return failed ? 1 : 0;
}
