#include "classpec/gf.hpp"

#include <algorithm>

#include "classpec/errors.hpp"

namespace classpec {

namespace {

constexpr std::uint64_t kTableLimit = 1u << 20;
constexpr std::uint64_t kAddTableLimit = 256;

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = r * a % m;
        a = a * a % m;
        e >>= 1;
    }
    return r;
}

std::vector<Elem> to_digits(Elem a, std::uint64_t p, unsigned f) {
    std::vector<Elem> d(f);
    for (unsigned i = 0; i < f; ++i) {
        d[i] = Elem(a % p);
        a = Elem(a / p);
    }
    return d;
}

Elem from_digits_raw(const std::vector<Elem>& d, std::uint64_t p) {
    std::uint64_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return Elem(v);
}

// product of residues modulo a monic polynomial over GF(p)
Elem mul_digits(Elem a, Elem b, std::uint64_t p, const Poly& mod) {
    unsigned f = unsigned(mod.size() - 1);
    auto da = to_digits(a, p, f), db = to_digits(b, p, f);
    std::vector<std::uint64_t> prod(2 * f - 1, 0);
    for (unsigned i = 0; i < f; ++i)
        for (unsigned j = 0; j < f; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(da[i]) * db[j]) % p;
    // x^f = -(mod - x^f)
    for (unsigned i = 2 * f - 1; i-- > f;) {
        std::uint64_t c = prod[i];
        if (!c) continue;
        for (unsigned j = 0; j < f; ++j) prod[i - f + j] = (prod[i - f + j] + (p - c) * mod[j]) % p;
        prod[i] = 0;
    }
    std::vector<Elem> r(f);
    for (unsigned i = 0; i < f; ++i) r[i] = Elem(prod[i]);
    return from_digits_raw(r, p);
}

}  // namespace

FieldCtx FieldCtx::make(std::uint64_t p, unsigned f) {
    if (!is_prime(p)) throw InvalidArgument("field characteristic is not prime: " + std::to_string(p));
    if (f < 1) throw InvalidArgument("field degree must be >= 1");
    Nat qn = classpec::pow(Nat(p), f);
    if (qn.bit_length() > 32) throw InvalidArgument("field size " + qn.str() + " exceeds 2^32");

    auto d = std::make_shared<Data>();
    d->p = p;
    d->f = f;
    d->q = qn.to_u64();
    d->qm1 = factor(Nat(d->q - 1));

    if (f == 1) {
        d->modulus = {0, 1};
    } else {
        FieldCtx prime = make(p, 1);
        d->modulus = smallest_irreducible(prime, f);
    }

    FieldCtx k;
    k.d_ = d;
    // generator by trial over 1, 2, ...
    for (Elem c = 1; c < d->q; ++c) {
        bool ok = true;
        for (const auto& [r, e] : d->qm1) {
            (void)e;
            if (k.pow(c, (d->q - 1) / r.to_u64()) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            d->gen = c;
            break;
        }
    }
    if (f > 1 && d->q <= kTableLimit) {
        std::uint64_t n = d->q - 1;
        d->exp.resize(2 * n);
        d->log.assign(d->q, 0);
        Elem x = 1;
        for (std::uint64_t i = 0; i < n; ++i) {
            d->exp[i] = d->exp[i + n] = x;
            d->log[x] = std::uint32_t(i);
            x = mul_digits(x, d->gen, p, d->modulus);
        }
        if (p != 2) {
            d->neg_tab.resize(d->q);
            for (Elem a = 0; a < d->q; ++a) {
                auto ds = to_digits(a, p, f);
                for (auto& v : ds) v = v ? Elem(p - v) : 0;
                d->neg_tab[a] = from_digits_raw(ds, p);
            }
            if (d->q <= kAddTableLimit) {
                d->add_tab.resize(d->q * d->q);
                for (Elem a = 0; a < d->q; ++a)
                    for (Elem b = 0; b < d->q; ++b) d->add_tab[a * d->q + b] = k.add_slow(a, b);
            }
        }
    }
    return k;
}

Elem FieldCtx::from_int(std::int64_t v) const {
    std::int64_t p = std::int64_t(d_->p);
    return Elem(((v % p) + p) % p);
}

std::vector<Elem> FieldCtx::digits(Elem a) const { return to_digits(a, d_->p, d_->f); }

Elem FieldCtx::from_digits(const std::vector<Elem>& ds) const {
    if (ds.size() > d_->f) throw InvalidArgument("too many digits for field element");
    for (Elem v : ds)
        if (v >= d_->p) throw InvalidArgument("digit out of range");
    return from_digits_raw(ds, d_->p);
}

Elem FieldCtx::neg(Elem a) const {
    if (d_->p == 2 || a == 0) return a;
    if (d_->f == 1) return Elem(d_->p - a);
    if (!d_->neg_tab.empty()) return d_->neg_tab[a];
    auto ds = digits(a);
    for (auto& v : ds) v = v ? Elem(d_->p - v) : 0;
    return from_digits_raw(ds, d_->p);
}

Elem FieldCtx::add_slow(Elem a, Elem b) const {
    auto da = digits(a), db = digits(b);
    for (unsigned i = 0; i < d_->f; ++i) da[i] = Elem((std::uint64_t(da[i]) + db[i]) % d_->p);
    return from_digits_raw(da, d_->p);
}

Elem FieldCtx::mul_slow(Elem a, Elem b) const { return mul_digits(a, b, d_->p, d_->modulus); }

Elem FieldCtx::pow(Elem a, std::uint64_t e) const {
    if (d_->f == 1) return Elem(pow_mod(a, e, d_->p));
    if (a == 0) return e == 0 ? 1 : 0;
    if (!d_->log.empty()) return d_->exp[(std::uint64_t(d_->log[a]) * (e % (d_->q - 1))) % (d_->q - 1)];
    Elem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Elem FieldCtx::pow(Elem a, const Nat& e) const {
    if (a == 0) return e.is_zero() ? 1 : 0;
    return pow(a, (e % Nat(d_->q - 1)).to_u64());
}

Elem FieldCtx::inv(Elem a) const {
    if (a == 0) throw InvalidArgument("inverse of zero in GF(" + std::to_string(d_->q) + ")");
    return pow(a, d_->q - 2);
}

bool FieldCtx::is_square(Elem a) const {
    if (d_->p == 2 || a == 0) return true;
    return pow(a, (d_->q - 1) / 2) == 1;
}

Elem FieldCtx::sqrt_char2(Elem a) const {
    if (d_->p != 2) throw InvalidArgument("sqrt_char2 in odd characteristic");
    return pow(a, d_->q / 2);
}

std::uint64_t FieldCtx::order(Elem a) const {
    if (a == 0) throw InvalidArgument("order of zero");
    std::uint64_t o = d_->q - 1;
    for (const auto& [r, e] : d_->qm1) {
        std::uint64_t rr = r.to_u64();
        for (unsigned i = 0; i < e && o % rr == 0 && pow(a, o / rr) == 1; ++i) o /= rr;
    }
    return o;
}

// polynomials

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

unsigned poly_degree(const Poly& a) {
    Poly t = a;
    poly_trim(t);
    return t.empty() ? 0 : unsigned(t.size() - 1);
}

Poly poly_add(const FieldCtx& k, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = k.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    poly_trim(r);
    return r;
}

Poly poly_sub(const FieldCtx& k, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = k.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    poly_trim(r);
    return r;
}

Poly poly_mul(const FieldCtx& k, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = k.add(r[i + j], k.mul(a[i], b[j]));
    }
    poly_trim(r);
    return r;
}

Poly poly_mod(const FieldCtx& k, const Poly& a, const Poly& m) {
    Poly mm = m;
    poly_trim(mm);
    if (mm.empty()) throw InvalidArgument("polynomial division by zero");
    Poly r = a;
    poly_trim(r);
    std::size_t dm = mm.size() - 1;
    Elem lead_inv = k.inv(mm.back());
    while (r.size() > dm) {
        Elem c = k.mul(r.back(), lead_inv);
        std::size_t shift = r.size() - 1 - dm;
        for (std::size_t j = 0; j <= dm; ++j) r[shift + j] = k.sub(r[shift + j], k.mul(c, mm[j]));
        poly_trim(r);
    }
    return r;
}

Poly poly_gcd(const FieldCtx& k, Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(k, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Elem li = k.inv(a.back());
        for (auto& c : a) c = k.mul(c, li);
    }
    return a;
}

namespace {

Poly poly_pow_mod(const FieldCtx& k, Poly base, const Nat& e, const Poly& m) {
    Poly r = poly_mod(k, Poly{1}, m);
    base = poly_mod(k, base, m);
    for (unsigned i = e.bit_length(); i-- > 0;) {
        r = poly_mod(k, poly_mul(k, r, r), m);
        if (e.bit(i)) r = poly_mod(k, poly_mul(k, r, base), m);
    }
    return r;
}

}  // namespace

Poly poly_pow_x(const FieldCtx& k, const Nat& e, const Poly& m) { return poly_pow_mod(k, Poly{0, 1}, e, m); }

bool poly_is_irreducible(const FieldCtx& k, const Poly& m0) {
    Poly m = m0;
    poly_trim(m);
    if (m.size() < 2) return false;
    unsigned d = unsigned(m.size() - 1);
    if (d == 1) return true;
    if (m[0] == 0) return false;
    // Ben-Or: gcd(x^{q^i} - x, m) = 1 for i <= d/2
    Poly h{0, 1};
    Nat q(k.q());
    for (unsigned i = 1; i <= d / 2; ++i) {
        h = poly_pow_mod(k, h, q, m);
        Poly g = poly_gcd(k, m, poly_sub(k, h, Poly{0, 1}));
        if (g.size() != 1) return false;
    }
    return true;
}

Poly smallest_irreducible(const FieldCtx& k, unsigned degree) {
    if (degree < 1) throw InvalidArgument("irreducible polynomial of degree 0");
    std::uint64_t q = k.q();
    Nat total = pow(Nat(q), degree);
    if (!total.fits_u64()) throw InvalidArgument("irreducible search space too large");
    // counter with c0 as the most significant digit
    for (std::uint64_t idx = 0; idx < total.to_u64(); ++idx) {
        Poly m(degree + 1, 0);
        m[degree] = 1;
        std::uint64_t v = idx;
        for (unsigned j = degree; j-- > 0;) {
            m[j] = Elem(v % q);
            v /= q;
        }
        if (poly_is_irreducible(k, m)) return m;
    }
    throw InvalidArgument("no irreducible polynomial found");
}

// extension fields

ExtField::ExtField(FieldCtx base, unsigned e) : base_(std::move(base)), e_(e) {
    if (e < 1) throw InvalidArgument("extension degree must be >= 1");
    mod_ = smallest_irreducible(base_, e);
}

ExtField::X ExtField::one() const {
    X r(e_, 0);
    r[0] = 1;
    return r;
}

ExtField::X ExtField::from_base(Elem c) const {
    X r(e_, 0);
    r[0] = c;
    return r;
}

ExtField::X ExtField::monomial(unsigned i) const {
    Poly xi(i + 1, 0);
    xi[i] = 1;
    Poly r = poly_mod(base_, xi, mod_);
    X out(e_, 0);
    std::copy(r.begin(), r.end(), out.begin());
    return out;
}

bool ExtField::is_zero(const X& a) const {
    return std::all_of(a.begin(), a.end(), [](Elem c) { return c == 0; });
}

ExtField::X ExtField::add(const X& a, const X& b) const {
    X r(e_);
    for (unsigned i = 0; i < e_; ++i) r[i] = base_.add(a[i], b[i]);
    return r;
}

ExtField::X ExtField::sub(const X& a, const X& b) const {
    X r(e_);
    for (unsigned i = 0; i < e_; ++i) r[i] = base_.sub(a[i], b[i]);
    return r;
}

ExtField::X ExtField::mul(const X& a, const X& b) const {
    Poly r = poly_mod(base_, poly_mul(base_, a, b), mod_);
    X out(e_, 0);
    std::copy(r.begin(), r.end(), out.begin());
    return out;
}

ExtField::X ExtField::pow(const X& a, const Nat& e) const {
    X r = one();
    for (unsigned i = e.bit_length(); i-- > 0;) {
        r = mul(r, r);
        if (e.bit(i)) r = mul(r, a);
    }
    return r;
}

ExtField::X ExtField::inv(const X& a) const {
    if (is_zero(a)) throw InvalidArgument("inverse of zero in extension field");
    return pow(a, size() - 2);
}

Elem ExtField::trace(const X& a) const {
    X s = zero(), c = a;
    for (unsigned i = 0; i < e_; ++i) {
        s = add(s, c);
        c = frobenius(c);
    }
    for (unsigned i = 1; i < e_; ++i)
        if (s[i] != 0) throw InvalidArgument("trace left the base field");
    return s[0];
}

std::vector<Elem> ExtField::mult_matrix(const X& a) const {
    std::vector<Elem> m(std::size_t(e_) * e_);
    for (unsigned j = 0; j < e_; ++j) {
        X col = mul(a, monomial(j));
        for (unsigned i = 0; i < e_; ++i) m[std::size_t(i) * e_ + j] = col[i];
    }
    return m;
}

ExtField::X ExtField::from_index(std::uint64_t i) const {
    X r(e_, 0);
    for (unsigned j = 0; j < e_; ++j) {
        r[j] = Elem(i % base_.q());
        i /= base_.q();
    }
    return r;
}

bool has_exact_order(const ExtField& ext, const ExtField::X& a, const Nat& d) {
    if (!ext.is_one(ext.pow(a, d))) return false;
    for (const auto& [r, e] : factor(d)) {
        (void)e;
        if (ext.is_one(ext.pow(a, d / r))) return false;
    }
    return true;
}

RootOfUnity element_of_order(const FieldCtx& k, const Nat& d) {
    if (d.is_zero()) throw InvalidArgument("element order 0");
    if (Nat(k.p()).divides(d))
        throw InfeasibleOrder("order " + d.str() + " is divisible by the characteristic " + std::to_string(k.p()));
    RootOfUnity out;
    Nat q(k.q());
    Nat qe = q % d;
    out.e = 1;
    while (qe != Nat(1) % d) {
        qe = qe * q % d;
        ++out.e;
    }
    out.ext = std::make_shared<ExtField>(k, out.e);
    const ExtField& ext = *out.ext;
    if (d.is_one()) {
        out.lambda = ext.one();
        return out;
    }
    Nat cof = (ext.size() - 1) / d;
    Nat total = ext.size();
    for (std::uint64_t i = 1; Nat(i) < total; ++i) {
        auto x = ext.from_index(i);
        auto y = ext.pow(x, cof);
        if (has_exact_order(ext, y, d)) {
            out.lambda = y;
            return out;
        }
    }
    throw InfeasibleOrder("no element of order " + d.str());
}

Poly min_poly(const ExtField& ext, const ExtField::X& a) {
    if (ext.is_zero(a)) throw InvalidArgument("minimal polynomial of zero");
    std::vector<ExtField::X> conj{a};
    for (auto c = ext.frobenius(a); c != a; c = ext.frobenius(c)) conj.push_back(c);
    // product of (X - c) with coefficients in the extension
    std::vector<ExtField::X> poly{ext.one()};
    for (const auto& c : conj) {
        std::vector<ExtField::X> next(poly.size() + 1, ext.zero());
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = ext.add(next[i + 1], poly[i]);
            next[i] = ext.sub(next[i], ext.mul(poly[i], c));
        }
        poly = std::move(next);
    }
    Poly out(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) {
        for (unsigned j = 1; j < ext.degree(); ++j)
            if (poly[i][j] != 0) throw InvalidArgument("minimal polynomial left the base field");
        out[i] = poly[i][0];
    }
    return out;
}

}  // namespace classpec
