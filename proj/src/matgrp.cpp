#include "classpec/matgrp.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>
#include <thread>

#include "classpec/errors.hpp"

namespace classpec {

Mat Mat::identity(unsigned dim) {
    Mat m(dim);
    for (unsigned i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

std::size_t MatHash::operator()(const Mat& m) const noexcept {
    std::uint64_t h = 1469598103934665603ULL ^ m.n;
    for (Elem v : m.a) {
        h ^= v;
        h *= 1099511628211ULL;
    }
    return std::size_t(h ^ (h >> 29));
}

// arithmetic

Mat MatOps::mul(const Mat& x, const Mat& y) const {
    if (x.n != y.n) throw DimensionMismatch("matrix product of sizes " + std::to_string(x.n) + " and " + std::to_string(y.n));
    const unsigned n = x.n;
    Mat r(n);
    if (k_.is_prime_field() && k_.p() < (1u << 16)) {
        const std::uint64_t p = k_.p();
        std::vector<std::uint64_t> row(n);
        for (unsigned i = 0; i < n; ++i) {
            std::fill(row.begin(), row.end(), 0);
            for (unsigned l = 0; l < n; ++l) {
                std::uint64_t c = x.a[std::size_t(i) * n + l];
                if (!c) continue;
                const Elem* yr = &y.a[std::size_t(l) * n];
                for (unsigned j = 0; j < n; ++j) row[j] += c * yr[j];
            }
            for (unsigned j = 0; j < n; ++j) r.a[std::size_t(i) * n + j] = Elem(row[j] % p);
        }
        return r;
    }
    for (unsigned i = 0; i < n; ++i)
        for (unsigned l = 0; l < n; ++l) {
            Elem c = x.a[std::size_t(i) * n + l];
            if (!c) continue;
            for (unsigned j = 0; j < n; ++j) {
                Elem& dst = r.a[std::size_t(i) * n + j];
                dst = k_.add(dst, k_.mul(c, y.a[std::size_t(l) * n + j]));
            }
        }
    return r;
}

Mat MatOps::add(const Mat& x, const Mat& y) const {
    if (x.n != y.n) throw DimensionMismatch("matrix sum of different sizes");
    Mat r(x.n);
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = k_.add(x.a[i], y.a[i]);
    return r;
}

Mat MatOps::scale(const Mat& x, Elem c) const {
    Mat r(x.n);
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = k_.mul(x.a[i], c);
    return r;
}

Mat MatOps::transpose(const Mat& x) const {
    Mat r(x.n);
    for (unsigned i = 0; i < x.n; ++i)
        for (unsigned j = 0; j < x.n; ++j) r.at(j, i) = x.at(i, j);
    return r;
}

Mat MatOps::pow(const Mat& x, const Nat& e) const {
    Mat r = Mat::identity(x.n);
    for (unsigned i = e.bit_length(); i-- > 0;) {
        r = mul(r, r);
        if (e.bit(i)) r = mul(r, x);
    }
    return r;
}

Mat MatOps::inv(const Mat& x) const {
    const unsigned n = x.n;
    Mat a = x, r = Mat::identity(n);
    for (unsigned c = 0; c < n; ++c) {
        unsigned piv = c;
        while (piv < n && a.at(piv, c) == 0) ++piv;
        if (piv == n) throw InvalidArgument("singular matrix");
        if (piv != c)
            for (unsigned j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(c, j));
                std::swap(r.at(piv, j), r.at(c, j));
            }
        Elem s = k_.inv(a.at(c, c));
        for (unsigned j = 0; j < n; ++j) {
            a.at(c, j) = k_.mul(a.at(c, j), s);
            r.at(c, j) = k_.mul(r.at(c, j), s);
        }
        for (unsigned i = 0; i < n; ++i) {
            if (i == c || a.at(i, c) == 0) continue;
            Elem f = a.at(i, c);
            for (unsigned j = 0; j < n; ++j) {
                a.at(i, j) = k_.sub(a.at(i, j), k_.mul(f, a.at(c, j)));
                r.at(i, j) = k_.sub(r.at(i, j), k_.mul(f, r.at(c, j)));
            }
        }
    }
    return r;
}

Elem MatOps::det(const Mat& x) const {
    const unsigned n = x.n;
    Mat a = x;
    Elem d = 1;
    for (unsigned c = 0; c < n; ++c) {
        unsigned piv = c;
        while (piv < n && a.at(piv, c) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (unsigned j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(c, j));
            d = k_.neg(d);
        }
        d = k_.mul(d, a.at(c, c));
        Elem s = k_.inv(a.at(c, c));
        for (unsigned i = c + 1; i < n; ++i) {
            if (a.at(i, c) == 0) continue;
            Elem f = k_.mul(a.at(i, c), s);
            for (unsigned j = c; j < n; ++j) a.at(i, j) = k_.sub(a.at(i, j), k_.mul(f, a.at(c, j)));
        }
    }
    return d;
}

unsigned MatOps::rank(const Mat& x) const {
    const unsigned n = x.n;
    Mat a = x;
    unsigned rk = 0;
    for (unsigned c = 0; c < n && rk < n; ++c) {
        unsigned piv = rk;
        while (piv < n && a.at(piv, c) == 0) ++piv;
        if (piv == n) continue;
        for (unsigned j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(rk, j));
        Elem s = k_.inv(a.at(rk, c));
        for (unsigned i = rk + 1; i < n; ++i) {
            if (a.at(i, c) == 0) continue;
            Elem f = k_.mul(a.at(i, c), s);
            for (unsigned j = c; j < n; ++j) a.at(i, j) = k_.sub(a.at(i, j), k_.mul(f, a.at(rk, j)));
        }
        ++rk;
    }
    return rk;
}

bool MatOps::is_identity(const Mat& x) const { return is_scalar(x, 1); }

bool MatOps::is_scalar(const Mat& x, Elem c) const {
    for (unsigned i = 0; i < x.n; ++i)
        for (unsigned j = 0; j < x.n; ++j)
            if (x.at(i, j) != (i == j ? c : 0)) return false;
    return true;
}

std::vector<Elem> MatOps::apply(const Mat& x, const std::vector<Elem>& v) const {
    if (v.size() != x.n) throw DimensionMismatch("vector length does not match matrix");
    std::vector<Elem> r(x.n, 0);
    for (unsigned i = 0; i < x.n; ++i)
        for (unsigned j = 0; j < x.n; ++j) r[i] = k_.add(r[i], k_.mul(x.at(i, j), v[j]));
    return r;
}

Mat MatOps::direct_sum(const Mat& x, const Mat& y) const {
    Mat r(x.n + y.n);
    for (unsigned i = 0; i < x.n; ++i)
        for (unsigned j = 0; j < x.n; ++j) r.at(i, j) = x.at(i, j);
    for (unsigned i = 0; i < y.n; ++i)
        for (unsigned j = 0; j < y.n; ++j) r.at(x.n + i, x.n + j) = y.at(i, j);
    return r;
}

Mat companion(const FieldCtx& k, const Poly& monic) {
    Poly m = monic;
    poly_trim(m);
    if (m.size() < 2 || m.back() != 1) throw InvalidArgument("companion matrix needs a monic polynomial of degree >= 1");
    unsigned d = unsigned(m.size() - 1);
    Mat c(d);
    for (unsigned i = 0; i + 1 < d; ++i) c.at(i + 1, i) = 1;
    for (unsigned i = 0; i < d; ++i) c.at(i, d - 1) = k.neg(m[i]);
    return c;
}

// forms

Elem quad_value(const FieldCtx& k, const FormData& f, const std::vector<Elem>& x) {
    Elem s = 0;
    for (unsigned i = 0; i < f.dim; ++i) {
        if (!x[i]) continue;
        for (unsigned j = i; j < f.dim; ++j) {
            Elem c = f.quad.at(i, j);
            if (c && x[j]) s = k.add(s, k.mul(c, k.mul(x[i], x[j])));
        }
    }
    return s;
}

Elem bilinear(const FieldCtx& k, const FormData& f, const std::vector<Elem>& x, const std::vector<Elem>& y) {
    Elem s = 0;
    for (unsigned i = 0; i < f.dim; ++i) {
        if (!x[i]) continue;
        for (unsigned j = 0; j < f.dim; ++j) {
            Elem c = f.gram.at(i, j);
            if (c && y[j]) s = k.add(s, k.mul(c, k.mul(x[i], y[j])));
        }
    }
    return s;
}

FormData quadratic_form(const FieldCtx& k, Mat quad, Eps eps) {
    FormData f;
    f.kind = FormKind::quadratic;
    f.eps = eps;
    f.dim = quad.n;
    f.quad = std::move(quad);
    f.gram = Mat(f.dim);
    for (unsigned i = 0; i < f.dim; ++i)
        for (unsigned j = 0; j < f.dim; ++j) {
            if (j < i && f.quad.at(i, j) != 0) throw InvalidArgument("quadratic form matrix must be upper triangular");
            f.gram.at(i, j) = k.add(f.gram.at(i, j), f.quad.at(i, j));
            f.gram.at(j, i) = k.add(f.gram.at(j, i), f.quad.at(i, j));
        }
    return f;
}

FormData symplectic_form(const FieldCtx& k, unsigned n) {
    FormData f;
    f.kind = FormKind::symplectic;
    f.dim = 2 * n;
    f.gram = Mat(2 * n);
    for (unsigned i = 0; i < n; ++i) {
        f.gram.at(i, n + i) = 1;
        f.gram.at(n + i, i) = k.neg(1);
    }
    return f;
}

FormData odd_orthogonal_form(const FieldCtx& k, unsigned n) {
    Mat u(2 * n + 1);
    u.at(0, 0) = 1;
    for (unsigned i = 1; i <= n; ++i) u.at(i, n + i) = 1;
    return quadratic_form(k, std::move(u), Eps::none);
}

FormData even_orthogonal_form(const FieldCtx& k, unsigned n, Eps eps) {
    if (n < 1) throw InvalidArgument("even orthogonal form of rank 0");
    Mat u(2 * n);
    for (unsigned i = 0; i < n; ++i) u.at(i, n + i) = 1;
    if (eps == Eps::minus) {
        Poly irr = smallest_irreducible(k, 2);  // t^2 + a t + b
        unsigned i = n - 1;
        u.at(i, i) = 1;
        u.at(i, n + i) = irr[1];
        u.at(n + i, n + i) = irr[0];
    } else if (eps != Eps::plus) {
        throw InvalidEpsilon("even orthogonal form needs eps + or -");
    }
    return quadratic_form(k, std::move(u), eps);
}

// root elements

namespace {

struct Layout {
    unsigned rank;
    bool has_zero;
    // signed coordinate -> matrix index
    unsigned operator()(int c) const {
        if (c == 0) return 0;
        unsigned off = has_zero ? 1 : 0;
        return c > 0 ? unsigned(c) - 1 + off : rank + unsigned(-c) - 1 + off;
    }
};

void validate_root(LieType type, unsigned rank, const RootSpec& r) {
    using K = RootSpec::Kind;
    auto bad = [&](const std::string& why) { throw InvalidRoot(why); };
    if (type == LieType::D && rank < 2) bad("type D needs rank >= 2");
    if (rank < 1) bad("rank 0");
    if (r.i < 1 || r.i > rank) bad("root index out of range");
    switch (r.kind) {
        case K::diff:
            if (r.j < 1 || r.j > rank || r.j == r.i) bad("e_i - e_j needs distinct indices in range");
            break;
        case K::sum:
        case K::neg_sum:
            if (r.j < 1 || r.j > rank || r.j <= r.i) bad("+-(e_i + e_j) needs i < j in range");
            break;
        case K::long_pos:
        case K::long_neg:
            if (type != LieType::C) bad("+-2e_i is a root of type C only");
            break;
        case K::short_pos:
        case K::short_neg:
            if (type != LieType::B) bad("+-e_i is a root of type B only");
            break;
    }
}

// adds the root element's off-identity entries for the given layout
Mat build_root(const FieldCtx& k, LieType type, const Layout& L, unsigned dim, const RootSpec& r, Elem t) {
    using K = RootSpec::Kind;
    Mat m = Mat::identity(dim);
    int i = int(r.i), j = int(r.j);
    auto put = [&](int a, int b, Elem v) { m.at(L(a), L(b)) = k.add(m.at(L(a), L(b)), v); };
    Elem nt = k.neg(t);
    Elem t2 = k.mul(t, t);
    bool symp = type == LieType::C;
    switch (r.kind) {
        case K::diff:
            put(i, j, t);
            put(-j, -i, nt);
            break;
        case K::sum:
            put(i, -j, t);
            put(j, -i, symp ? t : nt);
            break;
        case K::neg_sum:
            if (symp) {
                put(-i, j, t);
                put(-j, i, t);
            } else {
                put(-j, i, t);
                put(-i, j, nt);
            }
            break;
        case K::long_pos: put(i, -i, t); break;
        case K::long_neg: put(-i, i, t); break;
        case K::short_pos:
            if (k.p() == 2) {
                put(0, -i, t);
                put(i, -i, t2);
            } else {
                put(i, 0, k.add(t, t));
                put(0, -i, nt);
                put(i, -i, k.neg(t2));
            }
            break;
        case K::short_neg:
            if (k.p() == 2) {
                put(0, i, t);
                put(-i, i, t2);
            } else {
                put(-i, 0, k.neg(k.add(t, t)));
                put(0, i, t);
                put(-i, i, k.neg(t2));
            }
            break;
    }
    return m;
}

}  // namespace

Mat root_element(const FieldCtx& k, LieType type, unsigned rank, const RootSpec& r, Elem t) {
    validate_root(type, rank, r);
    bool b = type == LieType::B;
    Layout L{rank, b};
    return build_root(k, type, L, 2 * rank + (b ? 1 : 0), r, t);
}

std::vector<RootSpec> simple_roots(LieType type, unsigned rank) {
    std::vector<RootSpec> out;
    if (type == LieType::D && rank < 2) throw InvalidRoot("type D needs rank >= 2");
    for (unsigned i = 1; i < rank; ++i) out.push_back(RootSpec::e_minus(i, i + 1));
    switch (type) {
        case LieType::B: out.push_back(RootSpec::e(rank)); break;
        case LieType::C: out.push_back(RootSpec::two_e(rank)); break;
        case LieType::D: out.push_back(RootSpec::e_plus(rank - 1, rank)); break;
    }
    return out;
}

RootSpec negate(const RootSpec& r) {
    using K = RootSpec::Kind;
    switch (r.kind) {
        case K::diff: return RootSpec::e_minus(r.j, r.i);
        case K::sum: return RootSpec::neg_e_plus(r.i, r.j);
        case K::neg_sum: return RootSpec::e_plus(r.i, r.j);
        case K::long_pos: return RootSpec::neg_two_e(r.i);
        case K::long_neg: return RootSpec::two_e(r.i);
        case K::short_pos: return RootSpec::neg_e(r.i);
        case K::short_neg: return RootSpec::e(r.i);
    }
    return r;
}

Mat eichler(const FieldCtx& k, const FormData& f, const std::vector<Elem>& u, const std::vector<Elem>& v) {
    if (quad_value(k, f, u) != 0 || bilinear(k, f, u, v) != 0)
        throw InvalidArgument("Eichler transformation needs u singular and orthogonal to v");
    Elem qv = quad_value(k, f, v);
    Mat m(f.dim);
    for (unsigned c = 0; c < f.dim; ++c) {
        std::vector<Elem> x(f.dim, 0);
        x[c] = 1;
        Elem bxu = bilinear(k, f, x, u), bxv = bilinear(k, f, x, v);
        for (unsigned r = 0; r < f.dim; ++r) {
            Elem val = x[r];
            val = k.add(val, k.mul(bxu, v[r]));
            val = k.sub(val, k.mul(bxv, u[r]));
            val = k.sub(val, k.mul(k.mul(qv, bxu), u[r]));
            m.at(r, c) = val;
        }
    }
    return m;
}

Mat reflection(const FieldCtx& k, const FormData& f, const std::vector<Elem>& v) {
    Elem qv = quad_value(k, f, v);
    if (qv == 0) throw InvalidArgument("reflection in a singular vector");
    Elem qi = k.inv(qv);
    Mat m(f.dim);
    for (unsigned c = 0; c < f.dim; ++c) {
        std::vector<Elem> x(f.dim, 0);
        x[c] = 1;
        Elem coef = k.mul(bilinear(k, f, x, v), qi);
        for (unsigned r = 0; r < f.dim; ++r) m.at(r, c) = k.sub(x[r], k.mul(coef, v[r]));
    }
    return m;
}

bool preserves_form(const MatOps& ops, const Mat& m, const FormData& f) {
    if (m.n != f.dim) throw DimensionMismatch("matrix size " + std::to_string(m.n) + " vs form dimension " + std::to_string(f.dim));
    if (ops.mul(ops.transpose(m), ops.mul(f.gram, m)) != f.gram) return false;
    if (f.kind == FormKind::symplectic) return true;
    const FieldCtx& k = ops.field();
    for (unsigned c = 0; c < f.dim; ++c) {
        std::vector<Elem> col(f.dim);
        for (unsigned r = 0; r < f.dim; ++r) col[r] = m.at(r, c);
        if (quad_value(k, f, col) != f.quad.at(c, c)) return false;
    }
    return true;
}

// generators

namespace {

std::vector<Elem> prime_basis(const FieldCtx& k) {
    std::vector<Elem> b;
    std::uint64_t c = 1;
    for (unsigned i = 0; i < k.f(); ++i, c *= k.p()) b.push_back(Elem(c));
    return b;
}

std::vector<Elem> unit(unsigned dim, unsigned idx, Elem c = 1) {
    std::vector<Elem> v(dim, 0);
    v[idx] = c;
    return v;
}

void add_root_gens(const FieldCtx& k, LieType type, const Layout& L, unsigned dim,
                   const std::vector<RootSpec>& roots, std::vector<Mat>& out) {
    for (const auto& r : roots)
        for (Elem b : prime_basis(k)) {
            out.push_back(build_root(k, type, L, dim, r, b));
            out.push_back(build_root(k, type, L, dim, negate(r), b));
        }
}

// diag(D, D^{-1}) with D = diag(nu, 1, ...), nu a generator of GF(q)^*
Mat torus_gen(const FieldCtx& k, unsigned n, bool odd_dim) {
    unsigned off = odd_dim ? 1 : 0;
    Mat m = Mat::identity(2 * n + off);
    Elem nu = k.generator();
    m.at(off, off) = nu;
    m.at(off + n, off + n) = k.inv(nu);
    return m;
}

}  // namespace

Factorization exponent_bound(const GroupSpec& s, unsigned dim) {
    Nat q = s.q();
    std::map<Nat, unsigned> gl;
    for (unsigned i = 1; i <= dim; ++i)
        for (const auto& [r, e] : factor(pow(q, i) - 1)) gl[r] = std::max(gl[r], e);
    unsigned pe = 0;
    for (Nat pk(1); pk < Nat(dim); pk *= Nat(s.p)) ++pe;
    gl[Nat(s.p)] = std::max(gl[Nat(s.p)], pe);
    auto pieces = group_order_pieces(s);
    Factorization out;
    for (const auto& [r, e] : factor_product(pieces)) {
        auto it = gl.find(r);
        if (it == gl.end()) continue;
        unsigned m = std::min(e, it->second);
        if (m) out.emplace_back(r, m);
    }
    return out;
}

GroupGens standard_generators(const NormalizedSpec& ns) {
    GroupSpec s = ns.original;
    validate(s);
    if (s.q().bit_length() > 16) throw UnsupportedGroup(describe(s) + ": matrix oracle limited to q < 2^16");
    FieldCtx k = FieldCtx::make(s.p, s.f);
    GroupGens g;
    bool odd_q = !s.q_even();
    unsigned n = s.n;
    GroupSpec matrix_group = s;
    Elem minus_one = k.neg(1);

    switch (s.family) {
        case Family::Sp:
        case Family::PSp: {
            if (n < 1) throw UnsupportedGroup("Sp_0");
            g.form = symplectic_form(k, n);
            add_root_gens(k, LieType::C, Layout{n, false}, 2 * n, simple_roots(LieType::C, n), g.gens);
            matrix_group.family = Family::Sp;
            g.projective = s.family == Family::PSp && odd_q;
            if (odd_q) g.central = {1, minus_one};
            break;
        }
        case Family::SO_odd_dim:
        case Family::Omega_odd_dim: {
            g.form = odd_orthogonal_form(k, n);
            add_root_gens(k, LieType::B, Layout{n, true}, 2 * n + 1, simple_roots(LieType::B, n), g.gens);
            if (s.family == Family::SO_odd_dim && odd_q) g.gens.push_back(torus_gen(k, n, true));
            break;
        }
        case Family::SO_even_dim:
        case Family::Omega_even_dim:
        case Family::POmega_even_dim: {
            if (n < 2) throw UnsupportedGroup(describe(s) + ": oracle needs n >= 2");
            if (s.family == Family::SO_even_dim && !odd_q)
                throw UnsupportedGroup(describe(s) + ": SO^eps_{2n}(q) is covered for odd q only");
            g.form = even_orthogonal_form(k, n, s.eps);
            unsigned dim = 2 * n;
            Layout L{n, false};
            if (s.eps == Eps::plus) {
                add_root_gens(k, LieType::D, L, dim, simple_roots(LieType::D, n), g.gens);
                if (s.family == Family::SO_even_dim) g.gens.push_back(torus_gen(k, n, false));
            } else {
                if (n >= 3) add_root_gens(k, LieType::D, L, dim, simple_roots(LieType::D, n - 1), g.gens);
                std::vector<std::vector<Elem>> us{unit(dim, L(int(n) - 1)), unit(dim, L(-int(n - 1)))};
                for (const auto& u : us)
                    for (Elem b : prime_basis(k)) {
                        g.gens.push_back(eichler(k, g.form, u, unit(dim, L(int(n)), b)));
                        g.gens.push_back(eichler(k, g.form, u, unit(dim, L(-int(n)), b)));
                    }
                if (s.family == Family::SO_even_dim) {
                    // r_a r_b, Q(a) = 1 square, Q(b) = nu non-square
                    auto a = unit(dim, L(1));
                    a[L(-1)] = 1;
                    auto bv = unit(dim, L(1));
                    bv[L(-1)] = k.generator();
                    MatOps ops(k);
                    g.gens.push_back(ops.mul(reflection(k, g.form, a), reflection(k, g.form, bv)));
                }
            }
            if (s.family == Family::POmega_even_dim) matrix_group.family = Family::Omega_even_dim;
            if (odd_q) {
                bool minus_in = s.family == Family::SO_even_dim;
                if (!minus_in) {
                    Nat qn = pow(s.q(), n);
                    Nat v = s.eps == Eps::plus ? qn - 1 : qn + 1;
                    minus_in = gcd(Nat(4), v) == Nat(4);
                }
                if (minus_in) g.central = {1, minus_one};
                g.projective = s.family == Family::POmega_even_dim && minus_in;
            }
            break;
        }
    }
    if (g.central.empty()) g.central = {1};
    g.order = group_order(matrix_group);
    g.exponent_bound = exponent_bound(matrix_group, g.form.dim);
    return g;
}

// orders

Nat element_order(const MatOps& ops, const Mat& m, const Factorization& bound) {
    Nat o = expand(bound);
    Nat result(1);
    for (const auto& [r, e] : bound) {
        Nat re = pow(r, e);
        Mat x = ops.pow(m, o / re);
        unsigned t = 0;
        while (!ops.is_identity(x)) {
            if (t == e) throw NotPeriodic("matrix power at the exponent bound is not the identity");
            x = ops.pow(x, r);
            ++t;
        }
        result *= pow(r, t);
    }
    return result;
}

Nat element_order(const MatOps& ops, const Mat& m, const Nat& bound) { return element_order(ops, m, factor(bound)); }

Nat projective_order(const MatOps& ops, const Mat& m, const Factorization& bound, const std::vector<Elem>& central) {
    Nat o = element_order(ops, m, bound);
    auto is_central = [&](const Mat& x) {
        return std::any_of(central.begin(), central.end(), [&](Elem c) { return ops.is_scalar(x, c); });
    };
    for (const auto& [r, e] : factor(o)) {
        for (unsigned i = 0; i < e; ++i) {
            if (!is_central(ops.pow(m, o / r))) break;
            o /= r;
        }
    }
    return o;
}

Nat group_element_order(const MatOps& ops, const GroupGens& g, const Mat& m) {
    if (g.projective) return projective_order(ops, m, g.exponent_bound, g.central);
    return element_order(ops, m, g.exponent_bound);
}

// enumeration

std::vector<Mat> enumerate_group(const MatOps& ops, const std::vector<Mat>& gens, std::size_t cap) {
    if (cap < 1) throw InvalidArgument("cap must be >= 1");
    if (gens.empty()) throw InvalidArgument("no generators");
    std::vector<Mat> out{Mat::identity(gens[0].n)};
    MatSet seen{out[0]};
    for (std::size_t h = 0; h < out.size(); ++h)
        for (const Mat& g : gens) {
            Mat x = ops.mul(out[h], g);
            if (seen.contains(x)) continue;
            if (out.size() >= cap) throw CapExceeded("group has more than " + std::to_string(cap) + " elements");
            seen.insert(x);
            out.push_back(std::move(x));
        }
    return out;
}

std::vector<Mat> derived_subgroup(const MatOps& ops, const std::vector<Mat>& gens, std::size_t cap) {
    if (gens.empty()) throw InvalidArgument("no generators");
    std::vector<Mat> inv;
    for (const Mat& g : gens) inv.push_back(ops.inv(g));
    std::vector<Mat> hgens;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            Mat c = ops.mul(ops.mul(inv[i], inv[j]), ops.mul(gens[i], gens[j]));
            if (!ops.is_identity(c)) hgens.push_back(std::move(c));
        }
    if (hgens.empty()) return {Mat::identity(gens[0].n)};
    auto elems = enumerate_group(ops, hgens, cap);
    MatSet h(elems.begin(), elems.end());
    for (std::size_t i = 0; i < hgens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j) {
            Mat c = ops.mul(ops.mul(inv[j], hgens[i]), gens[j]);
            if (h.contains(c)) continue;
            hgens.push_back(std::move(c));
            elems = enumerate_group(ops, hgens, cap);
            h = MatSet(elems.begin(), elems.end());
        }
    return elems;
}

// sampling

unsigned thread_count(unsigned requested) {
    if (requested) return requested;
    if (const char* env = std::getenv("CLASSPEC_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return unsigned(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

namespace {

template <class F>
void parallel_for(std::size_t n, unsigned threads, F&& body) {
    threads = unsigned(std::min<std::size_t>(threads, n));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < n; i += threads) body(i);
            } catch (...) {
                errs[t] = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

}  // namespace

std::vector<Mat> sample_elements(const MatOps& ops, const std::vector<Mat>& gens, std::size_t count,
                                 std::uint64_t seed, const SampleOptions& opt) {
    if (gens.empty()) throw InvalidArgument("no generators");
    if (opt.slots < 2) throw InvalidArgument("product replacement needs at least 2 slots");
    // every generator must enter the walk
    const unsigned slots = std::max<unsigned>(opt.slots, unsigned(gens.size()));
    unsigned streams = std::max(1u, opt.streams);
    std::vector<std::vector<Mat>> per(streams);
    parallel_for(streams, thread_count(opt.threads), [&](std::size_t s) {
        std::size_t want = count / streams + (s < count % streams ? 1 : 0);
        std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ULL * (s + 1));
        std::vector<Mat> slot;
        for (unsigned i = 0; i < slots; ++i) slot.push_back(gens[i % gens.size()]);
        Mat acc = Mat::identity(gens[0].n);
        auto step = [&] {
            unsigned i = unsigned(rng() % slots);
            unsigned j = unsigned(rng() % (slots - 1));
            if (j >= i) ++j;
            if (rng() & 1)
                slot[i] = ops.mul(slot[i], slot[j]);
            else
                slot[i] = ops.mul(slot[j], slot[i]);
            acc = ops.mul(acc, slot[i]);
        };
        for (unsigned b = 0; b < opt.burn_in; ++b) step();
        per[s].reserve(want);
        for (std::size_t c = 0; c < want; ++c) {
            step();
            per[s].push_back(acc);
        }
    });
    std::vector<Mat> out;
    out.reserve(count);
    for (auto& v : per)
        for (auto& m : v) out.push_back(std::move(m));
    return out;
}

std::vector<Nat> element_orders(const MatOps& ops, const GroupGens& g, const std::vector<Mat>& elems,
                                unsigned threads) {
    std::vector<Nat> out(elems.size());
    parallel_for(elems.size(), thread_count(threads),
                 [&](std::size_t i) { out[i] = group_element_order(ops, g, elems[i]); });
    return out;
}

std::vector<Nat> sample_orders(const NormalizedSpec& spec, std::size_t count, std::uint64_t seed,
                               const SampleOptions& opt) {
    if (count < 1) throw InvalidArgument("sample count must be >= 1");
    GroupGens g = standard_generators(spec);
    MatOps ops(FieldCtx::make(spec.original.p, spec.original.f));
    auto elems = sample_elements(ops, g.gens, count, seed, opt);
    std::vector<Nat> out(elems.size());
    parallel_for(elems.size(), thread_count(opt.threads),
                 [&](std::size_t i) { out[i] = group_element_order(ops, g, elems[i]); });
    return out;
}

// membership

int membership_invariant(const MatOps& ops, const Mat& m, const FormData& f) {
    if (f.kind != FormKind::quadratic) throw NotOrthogonal("membership invariant needs a quadratic form");
    if (!preserves_form(ops, m, f)) throw NotOrthogonal("matrix does not preserve the quadratic form");
    const FieldCtx& k = ops.field();
    const unsigned d = f.dim;
    if (k.p() == 2) return int(ops.rank(ops.add(m, Mat::identity(d))) % 2);

    // orthogonal basis of anisotropic vectors
    std::vector<std::vector<Elem>> rest, basis;
    for (unsigned i = 0; i < d; ++i) rest.push_back(unit(d, i));
    while (!rest.empty()) {
        std::size_t pick = rest.size();
        for (std::size_t i = 0; i < rest.size(); ++i)
            if (quad_value(k, f, rest[i]) != 0) {
                pick = i;
                break;
            }
        if (pick == rest.size()) {
            for (std::size_t i = 1; i < rest.size() && pick == rest.size(); ++i)
                if (bilinear(k, f, rest[0], rest[i]) != 0) {
                    for (unsigned c = 0; c < d; ++c) rest[0][c] = k.add(rest[0][c], rest[i][c]);
                    pick = 0;
                }
            if (pick == rest.size()) throw NotOrthogonal("degenerate quadratic form");
        }
        std::vector<Elem> x = rest[pick];
        rest.erase(rest.begin() + std::ptrdiff_t(pick));
        Elem bxx_inv = k.inv(bilinear(k, f, x, x));
        for (auto& w : rest) {
            Elem c = k.mul(bilinear(k, f, w, x), bxx_inv);
            for (unsigned i = 0; i < d; ++i) w[i] = k.sub(w[i], k.mul(c, x[i]));
        }
        basis.push_back(std::move(x));
    }

    Mat h = m;
    Elem norm = 1;
    for (const auto& x : basis) {
        auto y = ops.apply(h, x);
        if (y == x) continue;
        std::vector<Elem> v(d);
        for (unsigned i = 0; i < d; ++i) v[i] = k.sub(y[i], x[i]);
        if (quad_value(k, f, v) != 0) {
            h = ops.mul(reflection(k, f, v), h);
            norm = k.mul(norm, quad_value(k, f, v));
        } else {
            for (unsigned i = 0; i < d; ++i) v[i] = k.add(y[i], x[i]);
            h = ops.mul(reflection(k, f, x), ops.mul(reflection(k, f, v), h));
            norm = k.mul(norm, k.mul(quad_value(k, f, v), quad_value(k, f, x)));
        }
    }
    if (!ops.is_identity(h)) throw NotOrthogonal("reflection factorization did not terminate at the identity");
    return k.is_square(norm) ? 0 : 1;
}

}  // namespace classpec
