// Python module _classpec: thin wrappers over the library. Big integers cross
// the boundary as Python ints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "classpec/errors.hpp"
#include "classpec/groups.hpp"
#include "classpec/spectrum.hpp"
#include "classpec/verify.hpp"
#include "classpec/witness.hpp"

namespace py = pybind11;
using namespace classpec;

namespace {

py::int_ to_py(const Nat& v) { return py::int_(py::str(v.str())); }

Nat from_py(const py::int_& v) {
    std::string s = py::str(v);
    if (!s.empty() && s[0] == '-') throw InvalidArgument("negative value " + s);
    return Nat::parse(s);
}

py::list to_py(const std::vector<Nat>& vs) {
    py::list out;
    for (const Nat& v : vs) out.append(to_py(v));
    return out;
}

NormalizedSpec resolve(const std::string& family, unsigned n, const py::object& q, const std::optional<std::string>& eps) {
    GroupSpec s;
    s.family = parse_family(family);
    s.n = n;
    std::tie(s.p, s.f) = parse_prime_power(py::str(q));
    if (eps) s.eps = parse_eps(*eps);
    validate(s);
    return normalize(s);
}

py::dict group_info(const NormalizedSpec& ns) {
    py::dict d;
    d["group"] = describe(ns.original);
    d["engine"] = engine_name(ns.engine);
    d["answered_as"] = describe(ns.spec);
    d["notes"] = ns.notes;
    d["order"] = to_py(group_order(ns.original));
    d["center_order"] = to_py(center_order(ns.original));
    return d;
}

py::list generators(const NormalizedSpec& ns) {
    py::list out;
    for (const auto& g : omega_generators(ns).items) {
        py::dict d;
        d["value"] = to_py(g.value);
        d["item"] = g.provenance;
        d["detail"] = g.detail;
        d["recipe"] = to_string(g.recipe);
        out.append(d);
    }
    return out;
}

py::dict verify_report(const NormalizedSpec& ns, const std::string& mode, std::size_t samples, std::uint64_t seed,
                       std::size_t cap) {
    VerifyOptions o;
    o.mode = mode == "exhaustive" ? VerifyMode::exhaustive
             : mode == "sample"   ? VerifyMode::sample
             : mode == "auto"     ? VerifyMode::automatic
                                  : throw InvalidArgument("mode must be auto, exhaustive or sample");
    o.samples = samples;
    o.seed = seed;
    o.cap = cap;
    VerifyReport r;
    {
        py::gil_scoped_release release;
        r = verify(ns, o);
    }
    py::dict d;
    d["mode"] = mode_name(r.mode);
    d["group_size"] = to_py(r.group_size);
    d["expected_size"] = to_py(r.expected_size);
    d["mu"] = to_py(r.formula_mu);
    if (r.mode == VerifyMode::exhaustive) {
        d["observed_max_orders"] = to_py(r.observed_max);
    } else {
        py::dict h;
        for (const auto& [order, count] : r.histogram) h[to_py(order)] = count;
        d["sampled_order_histogram"] = h;
    }
    d["verdict"] = r.verdict();
    d["counterexamples"] = to_py(r.counterexamples);
    d["unobserved"] = to_py(r.unobserved);
    return d;
}

py::dict witness(const NormalizedSpec& ns, const py::int_& order) {
    Witness w = witness_for_order(ns, from_py(order));
    py::list rows;
    for (unsigned i = 0; i < w.matrix.n; ++i) {
        py::list row;
        for (unsigned c = 0; c < w.matrix.n; ++c) row.append(w.matrix.at(i, c));
        rows.append(row);
    }
    py::dict d;
    d["order"] = to_py(w.order);
    d["recipe"] = w.provenance;
    d["matrix"] = rows;
    return d;
}

}  // namespace

PYBIND11_MODULE(_classpec, m) {
    m.doc() = "Element orders of finite symplectic and orthogonal groups";
    m.attr("__version__") = CLASSPEC_VERSION;

    auto base = py::register_exception<Error>(m, "ClasspecError", PyExc_ValueError);
    py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
    py::register_exception<InvalidEpsilon>(m, "InvalidEpsilon", base.ptr());
    py::register_exception<UnsupportedGroup>(m, "UnsupportedGroup", base.ptr());
    py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());
    py::register_exception<InfeasibleRecipe>(m, "InfeasibleRecipe", base.ptr());
    py::register_exception<InfeasibleOrder>(m, "InfeasibleOrder", base.ptr());

    auto group = py::arg("family"), rank = py::arg("n"), field = py::arg("q");
    auto sign = py::arg("eps") = py::none();

    m.def("group_info", [](const std::string& f, unsigned n, const py::object& q,
                           const std::optional<std::string>& e) { return group_info(resolve(f, n, q, e)); },
          group, rank, field, sign, "Name, engine, order and center order of a group.");
    m.def("spectrum", [](const std::string& f, unsigned n, const py::object& q,
                         const std::optional<std::string>& e) { return to_py(mu(omega_generators(resolve(f, n, q, e)))); },
          group, rank, field, sign, "Maximal element orders mu(G), ascending.");
    m.def("generators", [](const std::string& f, unsigned n, const py::object& q,
                           const std::optional<std::string>& e) { return generators(resolve(f, n, q, e)); },
          group, rank, field, sign, "Every generator value with its item name and witness recipe.");
    m.def("element_orders",
          [](const std::string& f, unsigned n, const py::object& q, const std::optional<std::string>& e,
             std::size_t cap) { return to_py(omega_enumerate(resolve(f, n, q, e), cap)); },
          group, rank, field, sign, py::arg("cap") = 100000, "The full spectrum omega(G), ascending.");
    m.def("nu", [](const std::string& f, unsigned n, const py::object& q,
                   const std::optional<std::string>& e) { return to_py(nu_composite(resolve(f, n, q, e)).values); },
          group, rank, field, sign, "Composite element orders given by the nu sets.");
    m.def("contains",
          [](const std::string& f, unsigned n, const py::object& q, const py::int_& order,
             const std::optional<std::string>& e) { return contains(resolve(f, n, q, e), from_py(order)); },
          group, rank, field, py::arg("order"), sign, "Whether G has an element of the given order.");
    m.def("verify",
          [](const std::string& f, unsigned n, const py::object& q, const std::optional<std::string>& e,
             const std::string& mode, std::size_t samples, std::uint64_t seed,
             std::size_t cap) { return verify_report(resolve(f, n, q, e), mode, samples, seed, cap); },
          group, rank, field, sign, py::arg("mode") = "auto", py::arg("samples") = 10000, py::arg("seed") = 1,
          py::arg("cap") = 200000, "Compare the formula with the matrix group.");
    m.def("witness",
          [](const std::string& f, unsigned n, const py::object& q, const py::int_& order,
             const std::optional<std::string>& e) { return witness(resolve(f, n, q, e), order); },
          group, rank, field, py::arg("order"), sign, "A matrix of the given order, entries as field codes.");
}
