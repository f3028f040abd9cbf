#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace classpec {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision natural number.
class Nat {
  public:
    Nat() = default;
    Nat(std::uint64_t v) : v_(v) {}  // NOLINT: implicit from small literals is intended
    explicit Nat(BigInt v);

    static Nat parse(std::string_view text);

    const BigInt& big() const { return v_; }
    std::string str() const { return v_.str(); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == 1; }
    bool is_even() const { return !boost::multiprecision::bit_test(v_, 0); }
    bool fits_u64() const;
    std::uint64_t to_u64() const;
    unsigned bit_length() const;
    bool bit(unsigned i) const { return boost::multiprecision::bit_test(v_, i); }

    // true iff *this divides other (0 divides only 0)
    bool divides(const Nat& other) const;

    Nat& operator+=(const Nat& o) { v_ += o.v_; return *this; }
    Nat& operator-=(const Nat& o);
    Nat& operator*=(const Nat& o) { v_ *= o.v_; return *this; }
    Nat& operator/=(const Nat& o);
    Nat& operator%=(const Nat& o);

    friend Nat operator+(Nat a, const Nat& b) { return a += b; }
    friend Nat operator-(Nat a, const Nat& b) { return a -= b; }
    friend Nat operator*(Nat a, const Nat& b) { return a *= b; }
    friend Nat operator/(Nat a, const Nat& b) { return a /= b; }
    friend Nat operator%(Nat a, const Nat& b) { return a %= b; }

    friend bool operator==(const Nat& a, const Nat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Nat& a, const Nat& b) {
        int c = a.v_.compare(b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

  private:
    BigInt v_;
};

Nat gcd(const Nat& a, const Nat& b);
Nat lcm(const Nat& a, const Nat& b);
Nat pow(const Nat& base, unsigned exp);

// lcm of all values; empty -> 1; any zero -> InvalidArgument
Nat lcm_all(std::span<const Nat> values);

struct Valuation {
    unsigned exponent = 0;
    Nat p_part = 1;
};

Valuation p_adic_valuation(const Nat& k, std::uint64_t p);

bool is_prime(std::uint64_t n);

// (prime, multiplicity) pairs in ascending prime order; trial division, desk scale only
using Factorization = std::vector<std::pair<Nat, unsigned>>;
Factorization factor(const Nat& n);
// merges factorizations of the factors of a product
Factorization factor_product(std::span<const Nat> factors);
Nat expand(const Factorization& f);

// all divisors in ascending order; throws CapExceeded when more than cap
std::vector<Nat> divisors(const Factorization& f, std::size_t cap);

}  // namespace classpec

template <>
struct std::hash<classpec::Nat> {
    std::size_t operator()(const classpec::Nat& n) const noexcept {
        return boost::multiprecision::hash_value(n.big());
    }
};
