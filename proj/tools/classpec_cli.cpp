// classpec: element-order spectra of finite symplectic and orthogonal groups.
//
//   classpec spectrum sp 2 3 --json
//   classpec verify omega-odd 3 3 --mode sample --samples 10000 --seed 1
//   classpec witness sp 2 3 --order 18
//
// Exit codes: 0 ok, 1 violation, 2 unsupported group, 3 parse error,
// 4 cap exceeded, 5 infeasible order.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

#include "classpec/errors.hpp"
#include "classpec/groups.hpp"
#include "classpec/spectrum.hpp"
#include "classpec/verify.hpp"
#include "classpec/witness.hpp"

using namespace classpec;
using Json = nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, violation = 1, unsupported = 2, parse_error = 3, cap_exceeded = 4, infeasible = 5 };

struct GroupArgs {
    std::string family, q, eps;
    unsigned n = 0;

    void add_to(CLI::App* cmd) {
        cmd->add_option("family", family, "sp, psp, so-odd, omega-odd, so-even, omega-even, pomega")->required();
        cmd->add_option("n", n, "rank")->required();
        cmd->add_option("q", q, "field size, e.g. 9 or 3^2")->required();
        cmd->add_option("--eps", eps, "+ or -, even-dimensional families only");
    }

    NormalizedSpec resolve() const {
        GroupSpec s;
        s.family = parse_family(family);
        s.n = n;
        std::tie(s.p, s.f) = parse_prime_power(q);
        if (!eps.empty()) s.eps = parse_eps(eps);
        validate(s);
        return normalize(s);
    }
};

Json strings(const std::vector<Nat>& v) {
    Json a = Json::array();
    for (const Nat& x : v) a.push_back(x.str());
    return a;
}

std::string joined(const std::vector<Nat>& v) {
    std::string s;
    for (const Nat& x : v) s += (s.empty() ? "" : " ") + x.str();
    return s.empty() ? "-" : s;
}

std::string group_line(const NormalizedSpec& ns) {
    std::string s = describe(ns.original);
    if (!(ns.spec == ns.original)) s += " via " + describe(ns.spec);
    return s;
}

int cmd_spectrum(const NormalizedSpec& ns, bool full, std::size_t cap, bool json) {
    GeneratorList gens = omega_generators(ns);
    OrderAntichain m = mu(gens);
    std::vector<Nat> omega;
    if (full) omega = omega_enumerate(ns, cap);
    if (json) {
        Json j;
        j["group"] = group_line(ns);
        j["mu"] = strings(m);
        if (full) j["omega"] = strings(omega);
        Json prov = Json::array();
        for (const auto& g : gens.items)
            prov.push_back(Json{{"value", g.value.str()}, {"item", g.provenance}, {"detail", g.detail}});
        j["provenance"] = prov;
        j["version"] = CLASSPEC_VERSION;
        std::cout << j.dump() << "\n";
        return ok;
    }
    std::cout << "group: " << group_line(ns) << "\n";
    std::cout << "engine: " << engine_name(ns.engine) << "\n";
    for (const auto& note : ns.notes) std::cout << "note: " << note << "\n";
    std::cout << "mu: " << joined(m) << "\n";
    if (full) std::cout << "omega: " << joined(omega) << "\n";
    std::cout << "generators:\n";
    for (const auto& g : gens.items)
        std::cout << "  " << g.value.str() << "\t" << g.provenance << "\t" << g.detail << "\n";
    return ok;
}

int cmd_verify(const NormalizedSpec& ns, const VerifyOptions& opt, bool json) {
    VerifyReport r = verify(ns, opt);
    if (json) {
        Json j;
        j["group"] = group_line(ns);
        j["mode"] = mode_name(r.mode);
        j["group_size"] = r.group_size.str();
        j["expected_size"] = r.expected_size.str();
        j["mu"] = strings(r.formula_mu);
        if (r.mode == VerifyMode::exhaustive) {
            j["observed_max_orders"] = strings(r.observed_max);
        } else {
            Json h = Json::array();
            for (const auto& [o, c] : r.histogram) h.push_back(Json::array({o.str(), std::to_string(c)}));
            j["sampled_order_histogram"] = h;
        }
        j["verdict"] = r.verdict();
        j["counterexamples"] = strings(r.counterexamples);
        if (r.mode == VerifyMode::exhaustive) j["unobserved"] = strings(r.unobserved);
        j["version"] = CLASSPEC_VERSION;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "group: " << group_line(ns) << "\n";
        std::cout << "mode: " << mode_name(r.mode) << "\n";
        std::cout << "group_size: " << r.group_size.str() << " (expected " << r.expected_size.str() << ")\n";
        std::cout << "mu: " << joined(r.formula_mu) << "\n";
        if (r.mode == VerifyMode::exhaustive) {
            std::cout << "observed_max_orders: " << joined(r.observed_max) << "\n";
        } else {
            std::cout << "sampled_order_histogram:";
            for (const auto& [o, c] : r.histogram) std::cout << " " << o.str() << ":" << c;
            std::cout << "\n";
        }
        std::cout << "verdict: " << r.verdict() << "\n";
        if (!r.counterexamples.empty()) std::cout << "counterexamples: " << joined(r.counterexamples) << "\n";
        if (!r.unobserved.empty()) std::cout << "unobserved: " << joined(r.unobserved) << "\n";
    }
    return r.ok ? ok : violation;
}

int cmd_witness(const NormalizedSpec& ns, const std::string& order, bool json) {
    Witness w = witness_for_order(ns, Nat::parse(order));
    if (json) {
        Json j;
        j["group"] = group_line(ns);
        j["order"] = w.order.str();
        j["recipe"] = w.provenance;
        Json rows = Json::array();
        for (unsigned i = 0; i < w.matrix.n; ++i) {
            Json row = Json::array();
            for (unsigned c = 0; c < w.matrix.n; ++c) row.push_back(std::to_string(w.matrix.at(i, c)));
            rows.push_back(row);
        }
        j["matrix"] = rows;
        j["version"] = CLASSPEC_VERSION;
        std::cout << j.dump() << "\n";
        return ok;
    }
    std::cout << "group: " << group_line(ns) << "\n";
    std::cout << "order: " << w.order.str() << "\n";
    std::cout << "recipe: " << w.provenance << "\n";
    if (ns.original.f > 1) std::cout << "entries: codes c0 + c1 p + ..., coefficients of the residue polynomial\n";
    for (unsigned i = 0; i < w.matrix.n; ++i) {
        for (unsigned c = 0; c < w.matrix.n; ++c) std::cout << (c ? " " : "") << w.matrix.at(i, c);
        std::cout << "\n";
    }
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"element orders of finite symplectic and orthogonal groups"};
    app.require_subcommand(1);
    app.set_version_flag("--version", CLASSPEC_VERSION);

    GroupArgs ga;
    bool json = false, full = false;
    std::size_t cap = 200000;
    std::string mode = "auto", order;
    VerifyOptions vo;

    auto* sp = app.add_subcommand("spectrum", "maximal element orders mu(G)");
    ga.add_to(sp);
    sp->add_flag("--full", full, "list every element order");
    sp->add_option("--cap", cap, "bound on the size of the full list");
    sp->add_flag("--json", json, "single-line JSON");

    auto* vf = app.add_subcommand("verify", "compare the formula with the matrix group");
    ga.add_to(vf);
    vf->add_option("--mode", mode, "auto, exhaustive or sample")
        ->check(CLI::IsMember({"auto", "exhaustive", "sample"}));
    vf->add_option("--samples", vo.samples, "number of sampled elements");
    vf->add_option("--seed", vo.seed, "sampling seed");
    vf->add_option("--cap", vo.cap, "largest group enumerated");
    vf->add_option("--threads", vo.threads, "worker threads (default CLASSPEC_THREADS or all cores)");
    vf->add_flag("--json", json, "single-line JSON");

    auto* wt = app.add_subcommand("witness", "matrix of a given order");
    ga.add_to(wt);
    wt->add_option("--order", order, "element order")->required();
    wt->add_flag("--json", json, "single-line JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? ok : parse_error;
    }

    try {
        NormalizedSpec ns = ga.resolve();
        if (*sp) return cmd_spectrum(ns, full, cap, json);
        if (*vf) {
            vo.mode = mode == "exhaustive" ? VerifyMode::exhaustive
                      : mode == "sample"   ? VerifyMode::sample
                                           : VerifyMode::automatic;
            return cmd_verify(ns, vo, json);
        }
        return cmd_witness(ns, order, json);
    } catch (const UnsupportedGroup& e) {
        std::cerr << e.what() << "\n";
        return unsupported;
    } catch (const CapExceeded& e) {
        std::cerr << e.what() << "\n";
        return cap_exceeded;
    } catch (const InfeasibleRecipe& e) {
        std::cerr << e.what() << "\n";
        return infeasible;
    } catch (const InfeasibleOrder& e) {
        std::cerr << e.what() << "\n";
        return infeasible;
    } catch (const InvalidArgument& e) {
        std::cerr << e.what() << "\n";
        return parse_error;
    } catch (const InvalidEpsilon& e) {
        std::cerr << e.what() << "\n";
        return parse_error;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return violation;
    }
}
