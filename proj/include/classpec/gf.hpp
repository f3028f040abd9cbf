#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "classpec/nat.hpp"

namespace classpec {

// Field elements are integer codes: the base-p digits of the code are the
// coefficients c0 + c1 a + ... of the residue polynomial.
using Elem = std::uint32_t;
// low-to-high coefficients
using Poly = std::vector<Elem>;

class FieldCtx {
  public:
    // lexicographically smallest monic irreducible modulus; q < 2^32
    static FieldCtx make(std::uint64_t p, unsigned f);

    std::uint64_t p() const { return d_->p; }
    unsigned f() const { return d_->f; }
    std::uint64_t q() const { return d_->q; }
    bool is_prime_field() const { return d_->f == 1; }
    // over GF(p), degree f, monic
    const Poly& modulus() const { return d_->modulus; }
    Elem generator() const { return d_->gen; }

    Elem from_int(std::int64_t v) const;
    std::vector<Elem> digits(Elem a) const;
    Elem from_digits(const std::vector<Elem>& ds) const;

    Elem add(Elem a, Elem b) const {
        if (d_->p == 2) return a ^ b;
        if (d_->f == 1) {
            std::uint64_t s = std::uint64_t(a) + b;
            return Elem(s >= d_->p ? s - d_->p : s);
        }
        if (!d_->add_tab.empty()) return d_->add_tab[std::size_t(a) * d_->q + b];
        return add_slow(a, b);
    }
    Elem neg(Elem a) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const {
        if (d_->f == 1) return Elem(std::uint64_t(a) * b % d_->p);
        if (a == 0 || b == 0) return 0;
        if (!d_->log.empty()) return d_->exp[std::size_t(d_->log[a]) + d_->log[b]];
        return mul_slow(a, b);
    }
    // InvalidArgument on 0
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;
    Elem pow(Elem a, const Nat& e) const;
    Elem frobenius(Elem a) const { return pow(a, d_->p); }
    bool is_square(Elem a) const;
    // characteristic 2 only: the unique square root
    Elem sqrt_char2(Elem a) const;
    // multiplicative order of a nonzero element
    std::uint64_t order(Elem a) const;

    friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
        return a.d_ == b.d_ || (a.d_->p == b.d_->p && a.d_->f == b.d_->f);
    }

  private:
    struct Data {
        std::uint64_t p = 2;
        unsigned f = 1;
        std::uint64_t q = 2;
        Poly modulus;
        Elem gen = 1;
        Factorization qm1;
        std::vector<Elem> add_tab;
        std::vector<Elem> neg_tab;
        std::vector<std::uint32_t> log;
        std::vector<Elem> exp;  // length 2(q-1)
    };
    std::shared_ptr<const Data> d_;

    Elem add_slow(Elem a, Elem b) const;
    Elem mul_slow(Elem a, Elem b) const;
};

// Polynomials over the field of a context. Results are trimmed (no trailing zeros).
void poly_trim(Poly& a);
unsigned poly_degree(const Poly& a);  // degree of 0 reported as 0
Poly poly_add(const FieldCtx& k, const Poly& a, const Poly& b);
Poly poly_sub(const FieldCtx& k, const Poly& a, const Poly& b);
Poly poly_mul(const FieldCtx& k, const Poly& a, const Poly& b);
// remainder of a modulo monic-or-not nonzero m
Poly poly_mod(const FieldCtx& k, const Poly& a, const Poly& m);
Poly poly_gcd(const FieldCtx& k, Poly a, Poly b);
// x^e mod m
Poly poly_pow_x(const FieldCtx& k, const Nat& e, const Poly& m);
bool poly_is_irreducible(const FieldCtx& k, const Poly& m);
// monic, coefficient tuple (c0..c_{d-1}) lexicographically smallest
Poly smallest_irreducible(const FieldCtx& k, unsigned degree);

// GF(q^e) as GF(q)[x]/(m), elements of length e.
class ExtField {
  public:
    using X = std::vector<Elem>;

    ExtField(FieldCtx base, unsigned e);

    const FieldCtx& base() const { return base_; }
    unsigned degree() const { return e_; }
    const Poly& modulus() const { return mod_; }
    Nat size() const { return classpec::pow(Nat(base_.q()), e_); }

    X zero() const { return X(e_, 0); }
    X one() const;
    X from_base(Elem c) const;
    // x^i
    X monomial(unsigned i) const;
    bool is_zero(const X& a) const;
    bool is_one(const X& a) const { return a == one(); }

    X add(const X& a, const X& b) const;
    X sub(const X& a, const X& b) const;
    X mul(const X& a, const X& b) const;
    X pow(const X& a, const Nat& e) const;
    X inv(const X& a) const;
    // a^q
    X frobenius(const X& a) const { return pow(a, Nat(base_.q())); }
    // sum of GF(q)-conjugates, lands in GF(q)
    Elem trace(const X& a) const;
    // multiplication by a in the basis 1, x, ..., x^{e-1}; row-major, column j = a x^j
    std::vector<Elem> mult_matrix(const X& a) const;
    // code of the element enumerated as base-q digits
    X from_index(std::uint64_t i) const;

  private:
    FieldCtx base_;
    unsigned e_;
    Poly mod_;
};

struct RootOfUnity {
    unsigned e = 1;
    std::shared_ptr<const ExtField> ext;
    ExtField::X lambda;
};

// least e with d | q^e - 1 and an element of order exactly d in GF(q^e);
// InfeasibleOrder if p | d
RootOfUnity element_of_order(const FieldCtx& k, const Nat& d);
bool has_exact_order(const ExtField& ext, const ExtField::X& a, const Nat& d);

// monic minimal polynomial over GF(q) of a nonzero element
Poly min_poly(const ExtField& ext, const ExtField::X& a);

}  // namespace classpec
