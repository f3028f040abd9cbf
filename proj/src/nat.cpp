#include "classpec/nat.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "classpec/errors.hpp"

namespace classpec {

Nat::Nat(BigInt v) : v_(std::move(v)) {
    if (v_.sign() < 0) throw InvalidArgument("negative value for Nat");
}

Nat Nat::parse(std::string_view text) {
    if (text.empty()) throw InvalidArgument("empty number");
    for (char c : text)
        if (c < '0' || c > '9') throw InvalidArgument("not a decimal natural: " + std::string(text));
    return Nat(BigInt(std::string(text)));
}

bool Nat::fits_u64() const { return v_ <= std::numeric_limits<std::uint64_t>::max(); }

std::uint64_t Nat::to_u64() const {
    if (!fits_u64()) throw InvalidArgument("value exceeds 64 bits: " + str());
    return static_cast<std::uint64_t>(v_);
}

unsigned Nat::bit_length() const {
    if (v_.is_zero()) return 0;
    return static_cast<unsigned>(boost::multiprecision::msb(v_)) + 1;
}

bool Nat::divides(const Nat& other) const {
    if (v_.is_zero()) return other.is_zero();
    return BigInt(other.v_ % v_).is_zero();
}

Nat& Nat::operator-=(const Nat& o) {
    if (o.v_ > v_) throw InvalidArgument("natural subtraction underflow");
    v_ -= o.v_;
    return *this;
}

Nat& Nat::operator/=(const Nat& o) {
    if (o.is_zero()) throw InvalidArgument("division by zero");
    v_ /= o.v_;
    return *this;
}

Nat& Nat::operator%=(const Nat& o) {
    if (o.is_zero()) throw InvalidArgument("division by zero");
    v_ %= o.v_;
    return *this;
}

Nat gcd(const Nat& a, const Nat& b) { return Nat(boost::multiprecision::gcd(a.big(), b.big())); }

Nat lcm(const Nat& a, const Nat& b) {
    if (a.is_zero() || b.is_zero()) return Nat(0);
    return Nat(a.big() / boost::multiprecision::gcd(a.big(), b.big()) * b.big());
}

Nat pow(const Nat& base, unsigned exp) { return Nat(BigInt(boost::multiprecision::pow(base.big(), exp))); }

Nat lcm_all(std::span<const Nat> values) {
    Nat acc(1);
    for (const Nat& v : values) {
        if (v.is_zero()) throw InvalidArgument("lcm of a list containing 0");
        acc = lcm(acc, v);
    }
    return acc;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL}) {
        if (n == d) return true;
        if (n % d == 0) return false;
    }
    for (std::uint64_t d = 11; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

Valuation p_adic_valuation(const Nat& k, std::uint64_t p) {
    if (k.is_zero()) throw InvalidArgument("valuation of 0");
    if (!is_prime(p)) throw InvalidArgument("valuation base is not prime: " + std::to_string(p));
    Valuation v;
    BigInt rest = k.big();
    BigInt part = 1;
    while (BigInt(rest % p).is_zero()) {
        rest /= p;
        part *= p;
        ++v.exponent;
    }
    v.p_part = Nat(part);
    return v;
}

namespace {

void factor_u64(std::uint64_t n, std::map<Nat, unsigned>& out) {
    for (std::uint64_t d = 2; d <= n / d; d += (d == 2 ? 1 : 2)) {
        while (n % d == 0) {
            ++out[Nat(d)];
            n /= d;
        }
    }
    if (n > 1) ++out[Nat(n)];
}

void factor_big(BigInt n, std::map<Nat, unsigned>& out) {
    if (n <= std::numeric_limits<std::uint64_t>::max()) {
        factor_u64(static_cast<std::uint64_t>(n), out);
        return;
    }
    for (std::uint64_t d = 2;; d += (d == 2 ? 1 : 2)) {
        if (BigInt(d) * d > n) break;
        while (BigInt(n % d).is_zero()) {
            ++out[Nat(d)];
            n /= d;
        }
        if (n <= std::numeric_limits<std::uint64_t>::max()) {
            factor_u64(static_cast<std::uint64_t>(n), out);
            return;
        }
    }
    if (n > 1) ++out[Nat(n)];
}

}  // namespace

Factorization factor(const Nat& n) {
    if (n.is_zero()) throw InvalidArgument("factor of 0");
    std::map<Nat, unsigned> m;
    factor_big(n.big(), m);
    return {m.begin(), m.end()};
}

Factorization factor_product(std::span<const Nat> factors) {
    std::map<Nat, unsigned> m;
    for (const Nat& f : factors) {
        if (f.is_zero()) throw InvalidArgument("factor of 0");
        factor_big(f.big(), m);
    }
    return {m.begin(), m.end()};
}

Nat expand(const Factorization& f) {
    Nat r(1);
    for (const auto& [p, e] : f) r *= pow(p, e);
    return r;
}

std::vector<Nat> divisors(const Factorization& f, std::size_t cap) {
    std::vector<Nat> out{Nat(1)};
    for (const auto& [p, e] : f) {
        std::size_t base = out.size();
        if (base * (e + 1) > cap) throw CapExceeded("divisor count exceeds cap " + std::to_string(cap));
        Nat pk(1);
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace classpec
