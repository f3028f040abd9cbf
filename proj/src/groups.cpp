#include "classpec/groups.hpp"

#include "classpec/errors.hpp"

namespace classpec {

bool is_eps_free(Family f) {
    return f == Family::Sp || f == Family::PSp || f == Family::SO_odd_dim || f == Family::Omega_odd_dim;
}

bool is_projective(Family f) { return f == Family::PSp || f == Family::POmega_even_dim; }

std::string family_name(Family f) {
    switch (f) {
        case Family::Sp: return "Sp";
        case Family::PSp: return "PSp";
        case Family::SO_odd_dim: return "SO_odd_dim";
        case Family::Omega_odd_dim: return "Omega_odd_dim";
        case Family::SO_even_dim: return "SO_even_dim";
        case Family::Omega_even_dim: return "Omega_even_dim";
        case Family::POmega_even_dim: return "POmega_even_dim";
    }
    return "?";
}

std::string engine_name(Engine e) {
    switch (e) {
        case Engine::Sp_q_odd: return "Sp_q_odd";
        case Engine::PSp_q_odd: return "PSp_q_odd";
        case Engine::Omega_odd_q_even: return "Omega_odd_q_even";
        case Engine::Omega_even_q_even: return "Omega_even_q_even";
        case Engine::SO_odd_q_odd: return "SO_odd_q_odd";
        case Engine::Omega_odd_q_odd: return "Omega_odd_q_odd";
        case Engine::SO_even_q_odd: return "SO_even_q_odd";
        case Engine::Omega_even_q_odd: return "Omega_even_q_odd";
        case Engine::POmega_even_q_odd: return "POmega_even_q_odd";
    }
    return "?";
}

std::string describe(const GroupSpec& s) {
    std::string name;
    switch (s.family) {
        case Family::Sp: name = "Sp"; break;
        case Family::PSp: name = "PSp"; break;
        case Family::SO_odd_dim:
        case Family::SO_even_dim: name = "SO"; break;
        case Family::Omega_odd_dim:
        case Family::Omega_even_dim: name = "Omega"; break;
        case Family::POmega_even_dim: name = "POmega"; break;
    }
    if (s.eps == Eps::plus) name += "^+";
    if (s.eps == Eps::minus) name += "^-";
    bool odd_dim = s.family == Family::SO_odd_dim || s.family == Family::Omega_odd_dim;
    unsigned dim = 2 * s.n + (odd_dim ? 1 : 0);
    return name + "_" + std::to_string(dim) + "(" + s.q().str() + ")";
}

namespace {

const std::pair<const char*, Family> kFamilies[] = {
    {"sp", Family::Sp},
    {"psp", Family::PSp},
    {"so-odd", Family::SO_odd_dim},
    {"omega-odd", Family::Omega_odd_dim},
    {"so-even", Family::SO_even_dim},
    {"omega-even", Family::Omega_even_dim},
    {"pomega", Family::POmega_even_dim},
};

}  // namespace

Family parse_family(const std::string& name) {
    for (const auto& [s, f] : kFamilies)
        if (name == s) return f;
    throw InvalidArgument("unknown family '" + name + "'");
}

std::string cli_family_name(Family f) {
    for (const auto& [s, g] : kFamilies)
        if (f == g) return s;
    return "?";
}

std::pair<std::uint64_t, unsigned> parse_prime_power(const std::string& text) {
    auto bad = [&] { return InvalidArgument("q must be a prime power, got '" + text + "'"); };
    auto num = [&](const std::string& t) {
        if (t.empty() || t.size() > 19 || t.find_first_not_of("0123456789") != std::string::npos) throw bad();
        return std::stoull(t);
    };
    std::uint64_t p;
    unsigned f;
    if (auto c = text.find('^'); c != std::string::npos) {
        p = num(text.substr(0, c));
        std::uint64_t e = num(text.substr(c + 1));
        if (e < 1 || e > 62) throw bad();
        f = unsigned(e);
        if (!is_prime(p)) throw bad();
    } else {
        std::uint64_t q = num(text);
        if (q < 2) throw bad();
        auto fac = factor(Nat(q));
        if (fac.size() != 1) throw bad();
        p = fac[0].first.to_u64();
        f = fac[0].second;
    }
    if (pow(Nat(p), f).bit_length() > 62) throw InvalidArgument("q too large: " + text);
    return {p, f};
}

Eps parse_eps(const std::string& text) {
    if (text == "+" || text == "plus" || text == "+1") return Eps::plus;
    if (text == "-" || text == "minus" || text == "-1") return Eps::minus;
    throw InvalidArgument("eps must be + or -, got '" + text + "'");
}

void validate(const GroupSpec& s) {
    if (!is_prime(s.p)) throw InvalidArgument("characteristic is not prime: " + std::to_string(s.p));
    if (s.f < 1) throw InvalidArgument("extension degree must be >= 1");
    if (s.q().bit_length() > 62) throw InvalidArgument("field size too large");
    if (s.n < 1) throw InvalidArgument("rank parameter n must be >= 1");
    bool even_dim = !is_eps_free(s.family);
    if (even_dim && s.eps == Eps::none)
        throw InvalidEpsilon(family_name(s.family) + " needs eps + or -");
    if (!even_dim && s.eps != Eps::none)
        throw InvalidEpsilon(family_name(s.family) + " takes no eps");
}

namespace {

Nat center_even_dim(const GroupSpec& s) {
    // (4, q^n - eps) / 2, q odd
    Nat qn = pow(s.q(), s.n);
    Nat v = s.eps == Eps::plus ? qn - 1 : qn + 1;
    return gcd(Nat(4), v) / 2;
}

void require_rank(const GroupSpec& s, unsigned min_n, const std::string& what) {
    if (s.n < min_n)
        throw UnsupportedGroup(describe(s) + ": formulas for " + what + " cover n >= " +
                               std::to_string(min_n));
}

}  // namespace

NormalizedSpec normalize(const GroupSpec& spec) {
    validate(spec);
    NormalizedSpec r;
    r.original = spec;
    r.spec = spec;
    GroupSpec& s = r.spec;

    if (s.q_even()) {
        switch (s.family) {
            case Family::Sp:
            case Family::PSp:
            case Family::SO_odd_dim:
            case Family::Omega_odd_dim:
                if (s.family != Family::Omega_odd_dim) r.notes.push_back("char-2 isomorphism");
                s.family = Family::Omega_odd_dim;
                require_rank(s, 2, "Omega_{2n+1}(q), q even");
                r.engine = Engine::Omega_odd_q_even;
                if (s.n == 2 && s.q_u64() == 2) r.notes.push_back("(n,q)=(2,2): group is not simple");
                return r;
            case Family::POmega_even_dim:
                r.notes.push_back("trivial center (q even)");
                s.family = Family::Omega_even_dim;
                [[fallthrough]];
            case Family::Omega_even_dim:
                require_rank(s, 4, "Omega^eps_{2n}(q), q even");
                r.engine = Engine::Omega_even_q_even;
                return r;
            case Family::SO_even_dim:
                throw UnsupportedGroup(describe(s) + ": SO^eps_{2n}(q) is covered for odd q only");
        }
    }

    if (s.family == Family::Omega_odd_dim && s.n == 2) {
        r.notes.push_back("Omega_5(q) = PSp_4(q)");
        s.family = Family::PSp;
    }
    if (s.family == Family::POmega_even_dim && center_even_dim(s) == Nat(1)) {
        r.notes.push_back("trivial center: (4, q^n - eps) = 2");
        s.family = Family::Omega_even_dim;
    }
    switch (s.family) {
        case Family::Sp:
            require_rank(s, 2, "Sp_{2n}(q)");
            r.engine = Engine::Sp_q_odd;
            break;
        case Family::PSp:
            require_rank(s, 2, "PSp_{2n}(q)");
            r.engine = Engine::PSp_q_odd;
            break;
        case Family::SO_odd_dim:
            require_rank(s, 2, "SO_{2n+1}(q)");
            r.engine = Engine::SO_odd_q_odd;
            break;
        case Family::Omega_odd_dim:
            require_rank(s, 3, "Omega_{2n+1}(q), q odd");
            r.engine = Engine::Omega_odd_q_odd;
            break;
        case Family::SO_even_dim:
            require_rank(s, 4, "SO^eps_{2n}(q)");
            r.engine = Engine::SO_even_q_odd;
            break;
        case Family::Omega_even_dim:
            require_rank(s, 4, "Omega^eps_{2n}(q)");
            r.engine = Engine::Omega_even_q_odd;
            break;
        case Family::POmega_even_dim:
            require_rank(s, 4, "POmega^eps_{2n}(q)");
            r.engine = Engine::POmega_even_q_odd;
            break;
    }
    if (s.n == 2 && s.q_u64() == 3 && (s.family == Family::PSp || s.family == Family::Sp))
        r.notes.push_back("(n,q)=(2,3)");
    return r;
}

std::vector<Nat> group_order_pieces(const GroupSpec& s) {
    validate(s);
    Nat q = s.q();
    std::vector<Nat> pieces;
    if (is_eps_free(s.family)) {
        pieces.push_back(pow(q, s.n * s.n));
        for (unsigned i = 1; i <= s.n; ++i) pieces.push_back(pow(q, 2 * i) - 1);
    } else {
        // |O^eps_{2n}(q)|
        pieces.push_back(2);
        pieces.push_back(pow(q, s.n * (s.n - 1)));
        pieces.push_back(s.eps == Eps::plus ? pow(q, s.n) - 1 : pow(q, s.n) + 1);
        for (unsigned i = 1; i + 1 <= s.n; ++i) pieces.push_back(pow(q, 2 * i) - 1);
    }
    return pieces;
}

Nat group_order(const GroupSpec& s) {
    auto pieces = group_order_pieces(s);
    Nat full(1);
    for (const Nat& x : pieces) full *= x;
    bool odd_q = !s.q_even();
    switch (s.family) {
        case Family::Sp: return full;
        case Family::PSp: return odd_q ? full / 2 : full;
        case Family::SO_odd_dim: return full;
        case Family::Omega_odd_dim: return odd_q ? full / 2 : full;
        case Family::SO_even_dim:
            if (!odd_q) throw UnsupportedGroup(describe(s) + ": SO^eps_{2n}(q) is covered for odd q only");
            return full / 2;
        case Family::Omega_even_dim: return odd_q ? full / 4 : full / 2;
        case Family::POmega_even_dim: return odd_q ? full / 4 / center_even_dim(s) : full / 2;
    }
    return full;
}

Nat center_order(const GroupSpec& s) {
    validate(s);
    if (s.q_even()) {
        if (s.family == Family::SO_even_dim)
            throw UnsupportedGroup(describe(s) + ": SO^eps_{2n}(q) is covered for odd q only");
        return 1;
    }
    switch (s.family) {
        case Family::Sp: return 2;
        case Family::PSp: return 1;
        case Family::SO_odd_dim:
        case Family::Omega_odd_dim: return 1;
        case Family::SO_even_dim: return 2;
        case Family::Omega_even_dim: return center_even_dim(s);
        case Family::POmega_even_dim: return 1;
    }
    return 1;
}

}  // namespace classpec
