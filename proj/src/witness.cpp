#include "classpec/witness.hpp"

#include <optional>

#include "classpec/errors.hpp"
#include "classpec/spectrum.hpp"

namespace classpec {

namespace {

using Vec = std::vector<Elem>;
using X = ExtField::X;

struct Built {
    Mat m;
    Mat gram;
    Mat quad;  // upper triangular, zero in symplectic mode
    bool signable = false;
};

Elem bil(const FieldCtx& k, const Mat& g, const Vec& x, const Vec& y) {
    Elem s = 0;
    for (unsigned i = 0; i < g.n; ++i) {
        if (!x[i]) continue;
        Elem row = 0;
        for (unsigned j = 0; j < g.n; ++j)
            if (y[j] && g.at(i, j)) row = k.add(row, k.mul(g.at(i, j), y[j]));
        s = k.add(s, k.mul(x[i], row));
    }
    return s;
}

Elem qv(const FieldCtx& k, const Mat& u, const Vec& x) {
    Elem s = 0;
    for (unsigned i = 0; i < u.n; ++i) {
        if (!x[i]) continue;
        Elem row = 0;
        for (unsigned j = i; j < u.n; ++j)
            if (x[j] && u.at(i, j)) row = k.add(row, k.mul(u.at(i, j), x[j]));
        s = k.add(s, k.mul(x[i], row));
    }
    return s;
}

Vec axpy(const FieldCtx& k, Vec y, Elem a, const Vec& x) {
    if (a)
        for (std::size_t i = 0; i < y.size(); ++i) y[i] = k.add(y[i], k.mul(a, x[i]));
    return y;
}

Vec scaled(const FieldCtx& k, Elem a, Vec x) {
    for (auto& v : x) v = k.mul(a, v);
    return x;
}

Vec unit(unsigned d, unsigned i) {
    Vec v(d, 0);
    v[i] = 1;
    return v;
}

Mat symmetrize(const FieldCtx& k, const Mat& u) {
    Mat g(u.n);
    for (unsigned i = 0; i < u.n; ++i)
        for (unsigned j = 0; j < u.n; ++j) g.at(i, j) = k.add(u.at(i, j), u.at(j, i));
    return g;
}

Mat root_product(const FieldCtx& k, const MatOps& ops, LieType t, unsigned r) {
    unsigned d = t == LieType::B ? 2 * r + 1 : 2 * r;
    Mat m = Mat::identity(d);
    for (const auto& a : simple_roots(t, r)) m = ops.mul(m, root_element(k, t, r, a, 1));
    return m;
}

// GL_d(F) inside Sp_{2d} or O^+_{2d} as diag(Y, Y^{-T})
Built gl_type(const FieldCtx& k, const MatOps& ops, const Mat& y, bool symplectic) {
    unsigned d = y.n;
    Built b;
    b.m = ops.direct_sum(y, ops.transpose(ops.inv(y)));
    b.quad = Mat(2 * d);
    b.gram = Mat(2 * d);
    for (unsigned i = 0; i < d; ++i) {
        if (symplectic) {
            b.gram.at(i, d + i) = 1;
            b.gram.at(d + i, i) = k.neg(1);
        } else {
            b.quad.at(i, d + i) = 1;
        }
    }
    if (!symplectic) b.gram = symmetrize(k, b.quad);
    b.signable = k.p() != 2;
    return b;
}

// K-matrix (m x m, row-major) as an F-matrix in the basis e_i x^t
Mat embed(const ExtField& kx, const std::vector<X>& g, unsigned m) {
    unsigned e = kx.degree();
    Mat out(m * e);
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < m; ++j) {
            auto mm = kx.mult_matrix(g[i * m + j]);
            for (unsigned r = 0; r < e; ++r)
                for (unsigned c = 0; c < e; ++c) out.at(i * e + r, j * e + c) = mm[r * e + c];
        }
    return out;
}

Mat lambda_jordan(const ExtField& kx, const X& lambda, unsigned m) {
    std::vector<X> g(m * m, kx.zero());
    for (unsigned i = 0; i < m; ++i) {
        g[i * m + i] = lambda;
        if (i + 1 < m) g[i * m + i + 1] = kx.one();
    }
    return embed(kx, g, m);
}

// K = GF(q^{2a}) with x -> x^{q^a}; antidiagonal hermitian form h on K^m.
// quadratic: Q = Tr_{L/F} h(x,x); symplectic: Tr_{K/F}(c h(x,y)) with conj(c) = -c.
Built hermitian_type(const FieldCtx& k, const ExtField& kx, unsigned a, const std::vector<X>& g, unsigned m,
                     bool symplectic) {
    unsigned e = kx.degree();
    Nat qa = pow(Nat(k.q()), a);
    auto conj = [&](const X& x) { return kx.pow(x, qa); };
    auto tr_l = [&](const X& z) {
        X s = kx.zero(), c = z;
        for (unsigned i = 0; i < a; ++i) {
            s = kx.add(s, c);
            c = kx.frobenius(c);
        }
        for (unsigned t = 1; t < e; ++t)
            if (s[t]) throw OrderMismatch("hermitian norm left the base field");
        return s[0];
    };
    // h(b_s, b_t) for basis vectors b_s = x^{s%e} e_{s/e}
    auto h = [&](unsigned s, unsigned t) {
        if (s / e + t / e != m - 1) return kx.zero();
        return kx.mul(kx.monomial(s % e), conj(kx.monomial(t % e)));
    };
    unsigned d = m * e;
    Built b;
    b.m = embed(kx, g, m);
    b.quad = Mat(d);
    b.gram = Mat(d);
    if (symplectic) {
        X c = kx.one();
        if (k.p() != 2) {
            X z = kx.monomial(1);
            c = kx.sub(z, conj(z));
        }
        for (unsigned s = 0; s < d; ++s)
            for (unsigned t = 0; t < d; ++t) b.gram.at(s, t) = kx.trace(kx.mul(c, h(s, t)));
    } else {
        for (unsigned s = 0; s < d; ++s) {
            b.quad.at(s, s) = tr_l(h(s, s));
            for (unsigned t = s + 1; t < d; ++t) b.quad.at(s, t) = kx.trace(h(s, t));
        }
        b.gram = symmetrize(k, b.quad);
    }
    b.signable = k.p() != 2;
    return b;
}

// upper unitriangular u with u^* H u = H, H antidiagonal, nonzero superdiagonal
std::vector<X> unitary_unipotent(const ExtField& kx, unsigned a, unsigned m) {
    Nat qa = pow(Nat(kx.base().q()), a);
    auto conj = [&](const X& x) { return kx.pow(x, qa); };
    auto is_unitary = [&](const std::vector<X>& u) {
        for (unsigned i = 0; i < m; ++i)
            for (unsigned j = 0; j < m; ++j) {
                X s = kx.zero();
                for (unsigned r = 0; r < m; ++r) s = kx.add(s, kx.mul(conj(u[r * m + i]), u[(m - 1 - r) * m + j]));
                if (s != (i + j == m - 1 ? kx.one() : kx.zero())) return false;
            }
        return true;
    };
    std::vector<X> u(m * m, kx.zero());
    for (unsigned i = 0; i < m; ++i) u[i * m + i] = kx.one();
    if (m == 1) return u;
    Nat size = kx.size();
    if (m == 2) {
        for (std::uint64_t i = 1; Nat(i) < size; ++i) {
            u[1] = kx.from_index(i);
            if (is_unitary(u)) return u;
        }
    } else if (m == 3) {
        u[1] = kx.one();
        for (std::uint64_t i = 0; Nat(i) < size; ++i)
            for (std::uint64_t j = 1; Nat(j) < size; ++j) {
                u[2] = kx.from_index(i);
                u[5] = kx.from_index(j);
                if (is_unitary(u)) return u;
            }
    }
    throw InfeasibleRecipe("no unitary regular unipotent of size " + std::to_string(m));
}

Built build(const FieldCtx& k, const MatOps& ops, const Block& blk, bool symplectic, Eps delta) {
    using K = Block::Kind;
    switch (blk.kind) {
        case K::core_C: {
            if (!symplectic) throw InfeasibleRecipe("symplectic core in an orthogonal group");
            FormData f = symplectic_form(k, blk.rank);
            return {root_product(k, ops, LieType::C, blk.rank), f.gram, Mat(2 * blk.rank), k.p() != 2};
        }
        case K::core_B: {
            if (symplectic) throw InfeasibleRecipe("orthogonal core in a symplectic group");
            FormData f = odd_orthogonal_form(k, blk.rank);
            return {root_product(k, ops, LieType::B, blk.rank), f.gram, f.quad, false};
        }
        case K::core_D: {
            if (symplectic) throw InfeasibleRecipe("orthogonal core in a symplectic group");
            unsigned r = blk.rank;
            if (r < 2) throw InfeasibleRecipe("D core of rank < 2");
            FormData f = even_orthogonal_form(k, r, delta);
            Mat m;
            if (delta == Eps::plus) {
                m = root_product(k, ops, LieType::D, r);
            } else {
                m = Mat::identity(2 * r);
                for (unsigned i = 1; i + 1 < r; ++i)
                    m = ops.mul(m, root_element(k, LieType::D, r, RootSpec::e_minus(i, i + 1), 1));
                m = ops.mul(m, eichler(k, f, unit(2 * r, r - 2), unit(2 * r, r - 1)));
            }
            return {m, f.gram, f.quad, k.p() != 2};
        }
        case K::torus: {
            unsigned a = blk.rank;
            Nat qa = pow(Nat(k.q()), a);
            auto root = element_of_order(k, blk.plus ? qa + 1 : qa - 1);
            if (!blk.plus) {
                ExtField kx(k, a);
                X lam = root.e == a ? root.lambda : kx.one();
                return gl_type(k, ops, lambda_jordan(kx, lam, 1), symplectic);
            }
            return hermitian_type(k, *root.ext, a, {root.lambda}, 1, symplectic);
        }
        case K::gl_unip: {
            unsigned a = blk.rank;
            ExtField kx(k, a);
            auto root = element_of_order(k, pow(Nat(k.q()), a) - 1);
            X lam = root.e == a ? root.lambda : kx.one();
            return gl_type(k, ops, lambda_jordan(kx, lam, blk.size), symplectic);
        }
        case K::gu_unip: {
            unsigned a = blk.rank, m = blk.size;
            auto root = element_of_order(k, pow(Nat(k.q()), a) + 1);
            const ExtField& kx = *root.ext;
            auto u = unitary_unipotent(kx, a, m);
            for (auto& x : u) x = kx.mul(x, root.lambda);
            return hermitian_type(k, kx, a, u, m, symplectic);
        }
        case K::tensor: {
            if (symplectic) throw InfeasibleRecipe("tensor block in a symplectic group");
            Built x = build(k, ops, blk.factors.at(0), true, Eps::none);
            Built y = build(k, ops, blk.factors.at(1), true, Eps::none);
            unsigned d1 = x.m.n, d2 = y.m.n, d = d1 * d2;
            Built b;
            b.m = Mat(d);
            b.quad = Mat(d);
            for (unsigned i = 0; i < d1; ++i)
                for (unsigned j = 0; j < d2; ++j)
                    for (unsigned r = 0; r < d1; ++r)
                        for (unsigned c = 0; c < d2; ++c) {
                            unsigned s = i * d2 + j, t = r * d2 + c;
                            b.m.at(s, t) = k.mul(x.m.at(i, r), y.m.at(j, c));
                            if (s < t) b.quad.at(s, t) = k.mul(x.gram.at(i, r), y.gram.at(j, c));
                        }
            b.gram = symmetrize(k, b.quad);
            b.signable = k.p() != 2;
            return b;
        }
        case K::filler: {
            if (symplectic) throw InfeasibleRecipe("1-dimensional block in a symplectic group");
            Built b{Mat::identity(1), Mat(1), Mat(1), false};
            b.quad.at(0, 0) = 1;
            b.gram.at(0, 0) = k.add(1, 1);
            return b;
        }
    }
    throw InfeasibleRecipe("unknown block");
}

std::optional<Vec> singular_vector(const FieldCtx& k, const Mat& quad, const std::vector<Vec>& w) {
    for (const auto& v : w)
        if (qv(k, quad, v) == 0) return v;
    auto q = Elem(k.q());
    std::size_t s = std::min<std::size_t>(w.size(), 3);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i + 1; j < s; ++j)
            for (Elem t = 1; t < q; ++t) {
                Vec v = axpy(k, w[i], t, w[j]);
                if (qv(k, quad, v) == 0) return v;
            }
    if (s == 3)
        for (Elem t1 = 1; t1 < q; ++t1)
            for (Elem t2 = 1; t2 < q; ++t2) {
                Vec v = axpy(k, axpy(k, w[0], t1, w[1]), t2, w[2]);
                if (qv(k, quad, v) == 0) return v;
            }
    return std::nullopt;
}

// a basis of the span, keeping the given vectors where independent
std::vector<Vec> span_basis(const FieldCtx& k, const std::vector<Vec>& vs) {
    std::vector<Vec> ech, out;
    std::vector<unsigned> piv;
    for (const auto& v : vs) {
        Vec r = v;
        for (std::size_t i = 0; i < ech.size(); ++i)
            if (r[piv[i]]) r = axpy(k, r, k.neg(r[piv[i]]), ech[i]);
        auto it = std::find_if(r.begin(), r.end(), [](Elem x) { return x != 0; });
        if (it == r.end()) continue;
        unsigned p = unsigned(it - r.begin());
        r = scaled(k, k.inv(r[p]), r);
        for (std::size_t i = 0; i < ech.size(); ++i)
            if (ech[i][p]) ech[i] = axpy(k, ech[i], k.neg(ech[i][p]), r);
        ech.push_back(r);
        piv.push_back(p);
        out.push_back(v);
    }
    return out;
}

// Columns are the images of the standard basis of `target`; nullopt when the
// space has the other Witt type.
std::optional<Mat> standard_basis(const FieldCtx& k, const Built& v, bool symplectic, const FormData& target) {
    unsigned d = v.m.n;
    if (d != target.dim) throw InfeasibleRecipe("recipe dimension " + std::to_string(d) + " does not match " +
                                                std::to_string(target.dim));
    std::vector<Vec> w;
    for (unsigned i = 0; i < d; ++i) w.push_back(unit(d, i));
    std::vector<std::pair<Vec, Vec>> hyp;
    while (!w.empty()) {
        Vec e;
        if (symplectic) {
            e = w[0];
        } else {
            auto s = singular_vector(k, v.quad, w);
            if (!s) break;
            e = *s;
        }
        Vec y;
        for (const auto& x : w)
            if (bil(k, v.gram, e, x)) {
                y = scaled(k, k.inv(bil(k, v.gram, e, x)), x);
                break;
            }
        if (y.empty()) throw OrderMismatch("degenerate form in witness assembly");
        Vec f = symplectic ? y : axpy(k, y, k.neg(qv(k, v.quad, y)), e);
        std::vector<Vec> rest;
        for (const auto& x : w) {
            Vec r = axpy(k, x, k.neg(bil(k, v.gram, x, f)), e);
            r = axpy(k, r, symplectic ? bil(k, v.gram, x, e) : k.neg(bil(k, v.gram, x, e)), f);
            rest.push_back(r);
        }
        hyp.emplace_back(std::move(e), std::move(f));
        w = span_basis(k, rest);
    }
    unsigned n = unsigned(hyp.size());
    Mat c(d);
    auto set_col = [&](unsigned j, const Vec& x) {
        for (unsigned i = 0; i < d; ++i) c.at(i, j) = x[i];
    };
    if (symplectic || (target.dim % 2 == 0 && w.empty())) {
        if (!symplectic && target.eps != Eps::plus) return std::nullopt;
        for (unsigned i = 0; i < n; ++i) {
            set_col(i, hyp[i].first);
            set_col(n + i, hyp[i].second);
        }
        return c;
    }
    if (w.size() == 1) {
        Elem cv = qv(k, v.quad, w[0]);
        set_col(0, w[0]);
        for (unsigned i = 0; i < n; ++i) {
            set_col(1 + i, hyp[i].first);
            set_col(1 + n + i, scaled(k, cv, hyp[i].second));
        }
        return c;
    }
    if (w.size() != 2) throw OrderMismatch("unexpected anisotropic residue");
    if (target.eps != Eps::minus) return std::nullopt;
    unsigned N = n + 1;  // target rank
    Elem a = target.quad.at(N - 1, 2 * N - 1), b = target.quad.at(2 * N - 1, 2 * N - 1);
    auto q = Elem(k.q());
    std::vector<Vec> plane;
    for (Elem s = 0; s < q; ++s)
        for (Elem t = 0; t < q; ++t) plane.push_back(axpy(k, scaled(k, s, w[0]), t, w[1]));
    Vec u, x;
    for (const auto& p : plane)
        if (qv(k, v.quad, p) == 1) {
            u = p;
            break;
        }
    for (const auto& p : plane)
        if (!u.empty() && qv(k, v.quad, p) == b && bil(k, v.gram, u, p) == a) {
            x = p;
            break;
        }
    if (x.empty()) throw OrderMismatch("anisotropic plane not matched");
    for (unsigned i = 0; i < n; ++i) {
        set_col(i, hyp[i].first);
        set_col(N + i, hyp[i].second);
    }
    set_col(N - 1, u);
    set_col(2 * N - 1, x);
    return c;
}

Built assemble(const MatOps& ops, const std::vector<Built>& bs) {
    Built v{Mat(0), Mat(0), Mat(0), false};
    for (const auto& b : bs) {
        v.m = ops.direct_sum(v.m, b.m);
        v.gram = ops.direct_sum(v.gram, b.gram);
        v.quad = ops.direct_sum(v.quad, b.quad);
    }
    return v;
}

// Sp_{2n}(q) -> O_{2n+1}(q), q even: e_0 spans the radical
Mat lift_char2(const FieldCtx& k, const Mat& a) {
    unsigned d = a.n, n = d / 2;
    Mat m(d + 1);
    m.at(0, 0) = 1;
    for (unsigned j = 0; j < d; ++j) {
        Elem qvj = 0;
        for (unsigned i = 0; i < n; ++i) qvj = k.add(qvj, k.mul(a.at(i, j), a.at(n + i, j)));
        m.at(0, 1 + j) = k.sqrt_char2(qvj);
        for (unsigned i = 0; i < d; ++i) m.at(1 + i, 1 + j) = a.at(i, j);
    }
    return m;
}

bool is_orthogonal(Family f) { return f != Family::Sp && f != Family::PSp; }
bool is_omega(Family f) {
    return f == Family::Omega_odd_dim || f == Family::Omega_even_dim || f == Family::POmega_even_dim;
}

// random search for a multiple of m, for values without a recipe
Witness sampled_witness(const MatOps& ops, const GroupGens& gg, const Nat& m, const std::string& name) {
    constexpr std::size_t batch = 512, rounds = 40;
    for (std::size_t r = 0; r < rounds; ++r) {
        auto elems = sample_elements(ops, gg.gens, batch, 0x5EEDull + r);
        for (const Mat& x : elems) {
            Nat o = group_element_order(ops, gg, x);
            if (!m.divides(o)) continue;
            Witness w{ops.pow(x, o / m), gg.form, m, {}, "sampled element of order " + o.str() + ", power " + (o / m).str()};
            if (group_element_order(ops, gg, w.matrix) != m) throw OrderMismatch("power of a sampled element");
            return w;
        }
    }
    throw InfeasibleRecipe(name + ": no element of order divisible by " + m.str() + " found by sampling");
}

}  // namespace

Witness construct_witness(const NormalizedSpec& ns, const WitnessRecipe& recipe, const Nat& claimed) {
    const GroupSpec& s = ns.original;
    if (recipe.blocks.empty()) throw InfeasibleRecipe("no recipe for " + describe(s));
    if (s.q() > Nat(1024)) throw UnsupportedGroup(describe(s) + ": witnesses are limited to q <= 1024");
    GroupGens gg = standard_generators(ns);
    FieldCtx k = FieldCtx::make(s.p, s.f);
    MatOps ops(k);
    const bool lift = s.q_even() && is_eps_free(s.family) && is_orthogonal(s.family);
    const bool symplectic = !is_orthogonal(s.family) || lift;
    const FormData target = lift ? symplectic_form(k, s.n) : gg.form;
    const bool check_det = is_orthogonal(s.family) && !s.q_even();
    const bool check_omega = is_omega(s.family) && !(s.q_even() && is_eps_free(s.family));

    bool has_d = false;
    for (const auto& b : recipe.blocks) has_d |= b.kind == Block::Kind::core_D;
    std::vector<Eps> deltas = has_d ? std::vector<Eps>{Eps::plus, Eps::minus} : std::vector<Eps>{Eps::plus};

    std::size_t attempts = 0;
    for (Eps delta : deltas) {
        std::vector<Built> bs;
        for (const auto& b : recipe.blocks) bs.push_back(build(k, ops, b, symplectic, delta));
        Built v = assemble(ops, bs);
        auto c = standard_basis(k, v, symplectic, target);
        if (!c) continue;
        Mat cinv = ops.inv(*c);

        // per block: (exponent, sign) variants, the first one is the default
        std::vector<std::vector<Mat>> variants;
        for (const auto& b : bs) {
            Mat sq = ops.mul(b.m, b.m);
            std::vector<Mat> vs{b.m, sq};
            if (b.signable) {
                vs.push_back(ops.scale(b.m, k.neg(1)));
                vs.push_back(ops.scale(sq, k.neg(1)));
            }
            variants.push_back(std::move(vs));
        }
        std::vector<unsigned> pick(bs.size(), 0);
        std::optional<Witness> found;

        auto test = [&]() {
            ++attempts;
            Mat mv(0);
            for (std::size_t i = 0; i < bs.size(); ++i) mv = ops.direct_sum(mv, variants[i][pick[i]]);
            Mat m = ops.mul(cinv, ops.mul(mv, *c));
            if (lift) m = lift_char2(k, m);
            if (check_det && ops.det(m) != 1) return;
            if (check_omega && membership_invariant(ops, m, gg.form) != 0) return;
            Nat o = group_element_order(ops, gg, m);
            if (o != claimed) return;
            if (!preserves_form(ops, m, gg.form)) throw OrderMismatch("witness does not preserve the form");
            found = Witness{m, gg.form, o, recipe, to_string(recipe)};
        };
        // assignments with exactly `dev` non-default choices from position i on
        std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned dev) {
            if (found || attempts > 20000) return;
            if (i == bs.size()) {
                if (dev == 0) test();
                return;
            }
            if (bs.size() - i < dev) return;
            pick[i] = 0;
            rec(i + 1, dev);
            if (dev == 0) return;
            for (unsigned o = 1; o < variants[i].size() && !found; ++o) {
                pick[i] = o;
                rec(i + 1, dev - 1);
            }
            if (!found) pick[i] = 0;
        };
        for (unsigned dev = 0; dev <= bs.size() && !found; ++dev) rec(0, dev);
        if (found) return *found;
    }
    throw OrderMismatch(describe(s) + ": no variant of [" + to_string(recipe) + "] has order " + claimed.str());
}

Witness witness_for_order(const NormalizedSpec& ns, const Nat& m) {
    if (m.is_zero()) throw InvalidArgument("order 0");
    if (m.is_one()) {
        GroupGens gg = standard_generators(ns);
        return Witness{Mat::identity(gg.form.dim), gg.form, Nat(1), {}, "identity"};
    }
    const Generator* best = nullptr;
    bool divides_any = false;
    GeneratorList gens = omega_generators(ns);
    for (const auto& g : gens.items) {
        if (!m.divides(g.value)) continue;
        divides_any = true;
        if (g.recipe.blocks.empty()) continue;
        if (!best || g.value < best->value) best = &g;
    }
    if (!divides_any) throw InfeasibleRecipe(m.str() + " is not an element order of " + describe(ns.original));
    MatOps ops(FieldCtx::make(ns.original.p, ns.original.f));
    GroupGens gg = standard_generators(ns);
    if (!best) return sampled_witness(ops, gg, m, describe(ns.original));
    Witness w = construct_witness(ns, best->recipe, best->value);
    w.matrix = ops.pow(w.matrix, best->value / m);
    w.order = group_element_order(ops, gg, w.matrix);
    if (w.order != m) throw OrderMismatch("power of the witness has order " + w.order.str());
    w.provenance = best->provenance + " " + best->detail + ": " + to_string(best->recipe) + ", power " +
                   (best->value / m).str();
    return w;
}

}  // namespace classpec
