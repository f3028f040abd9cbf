#include "classpec/verify.hpp"

#include <algorithm>

#include "classpec/errors.hpp"
#include "classpec/spectrum.hpp"

namespace classpec {

namespace {

bool derived_route(const GroupSpec& s) {
    return !s.q_even() && (s.family == Family::Omega_odd_dim || s.family == Family::Omega_even_dim ||
                           s.family == Family::POmega_even_dim);
}

NormalizedSpec ambient_so(const NormalizedSpec& ns) {
    NormalizedSpec a = ns;
    a.original.family = is_eps_free(ns.original.family) ? Family::SO_odd_dim : Family::SO_even_dim;
    return a;
}

bool divides_some(const Nat& m, const std::vector<Nat>& vs) {
    for (const Nat& v : vs)
        if (m.divides(v)) return true;
    return false;
}

}  // namespace

std::string VerifyReport::verdict() const {
    if (!ok) return "violation";
    return mode == VerifyMode::sample ? "contained" : "equal";
}

std::string mode_name(VerifyMode m) {
    switch (m) {
        case VerifyMode::automatic: return "auto";
        case VerifyMode::exhaustive: return "exhaustive";
        case VerifyMode::sample: return "sample";
    }
    return "?";
}

Nat oracle_enumeration_size(const NormalizedSpec& ns) {
    if (derived_route(ns.original)) return standard_generators(ambient_so(ns)).order;
    return standard_generators(ns).order;
}

std::vector<Mat> oracle_elements(const NormalizedSpec& ns, std::size_t cap) {
    const GroupSpec& s = ns.original;
    MatOps ops(FieldCtx::make(s.p, s.f));
    if (derived_route(s)) {
        GroupGens so = standard_generators(ambient_so(ns));
        return derived_subgroup(ops, so.gens, cap);
    }
    return enumerate_group(ops, standard_generators(ns).gens, cap);
}

VerifyReport verify_exhaustive(const NormalizedSpec& ns, std::size_t cap, unsigned threads) {
    const GroupSpec& s = ns.original;
    GroupGens g = standard_generators(ns);
    MatOps ops(FieldCtx::make(s.p, s.f));
    auto elems = oracle_elements(ns, cap);
    VerifyReport r;
    r.mode = VerifyMode::exhaustive;
    r.group_size = Nat(elems.size()) / Nat(g.projective ? g.central.size() : 1);
    r.expected_size = group_order(s);
    r.formula_mu = mu(omega_generators(ns));
    auto orders = element_orders(ops, g, elems, threads);
    r.observed_max = mu(orders);
    for (const Nat& o : r.observed_max)
        if (!divides_some(o, r.formula_mu)) r.counterexamples.push_back(o);
    for (const Nat& v : r.formula_mu)
        if (std::find(r.observed_max.begin(), r.observed_max.end(), v) == r.observed_max.end())
            r.unobserved.push_back(v);
    r.ok = r.group_size == r.expected_size && r.observed_max == r.formula_mu;
    return r;
}

VerifyReport verify_sample(const NormalizedSpec& ns, std::size_t samples, std::uint64_t seed, unsigned threads) {
    VerifyReport r;
    r.mode = VerifyMode::sample;
    r.group_size = group_order(ns.original);
    r.expected_size = r.group_size;
    r.formula_mu = mu(omega_generators(ns));
    SampleOptions opt;
    opt.threads = threads;
    for (const Nat& o : sample_orders(ns, samples, seed, opt)) ++r.histogram[o];
    for (const auto& [o, c] : r.histogram)
        if (!divides_some(o, r.formula_mu)) r.counterexamples.push_back(o);
    r.ok = r.counterexamples.empty();
    return r;
}

VerifyReport verify(const NormalizedSpec& ns, const VerifyOptions& opt) {
    VerifyMode m = opt.mode;
    if (m == VerifyMode::automatic)
        m = oracle_enumeration_size(ns) <= Nat(opt.cap) ? VerifyMode::exhaustive : VerifyMode::sample;
    if (m == VerifyMode::exhaustive) return verify_exhaustive(ns, opt.cap, opt.threads);
    return verify_sample(ns, opt.samples, opt.seed, opt.threads);
}

}  // namespace classpec
