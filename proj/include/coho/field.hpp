#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "coho/errors.hpp"

namespace coho {

// Runtime descriptor of the base field, shared by both engine instantiations.
struct FieldSpec {
    enum class Kind { Rationals, PrimeField };
    Kind kind = Kind::Rationals;
    std::uint64_t p = 0; // characteristic when kind == PrimeField

    bool operator==(const FieldSpec&) const = default;

    std::string str() const {
        if (kind == Kind::Rationals) return "Q";
        return "Fp:" + std::to_string(p);
    }
};

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, p);
        a = mulmod_u64(a, a, p);
        e >>= 1;
    }
    return r;
}

} // namespace detail

// Deterministic Miller-Rabin, valid for all 64-bit inputs with this base set.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = detail::powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = detail::mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

// Field of rationals backed by GMP. Stateless; every value is kept canonical
// (fully reduced, positive denominator), which mpq_class maintains after
// canonicalize().
struct Rationals {
    using Elem = mpq_class;

    bool same(const Rationals&) const { return true; }
    FieldSpec spec() const { return FieldSpec{FieldSpec::Kind::Rationals, 0}; }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_long(long v) const { return Elem(v); }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw Error(Errc::MalformedInput, "division by zero");
        return 1 / a;
    }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    std::string str(const Elem& a) const { return a.get_str(); }

    Elem parse(const std::string& s) const {
        try {
            Elem q(s);
            if (q.get_den() == 0) throw Error(Errc::MalformedInput, "zero denominator in '" + s + "'");
            q.canonicalize();
            return q;
        } catch (const std::invalid_argument&) {
            throw Error(Errc::MalformedInput, "bad rational '" + s + "'");
        }
    }
};

// Prime field F_p with residues in [0,p). p is validated by the constructor.
struct PrimeField {
    using Elem = std::uint64_t;

    std::uint64_t p = 2;

    PrimeField() = default;
    explicit PrimeField(std::uint64_t prime) : p(prime) {
        if (!is_prime_u64(p)) throw Error(Errc::MalformedInput, "not a prime: " + std::to_string(p));
        if (p >= (1ull << 62)) throw Error(Errc::MalformedInput, "prime too large");
    }

    bool same(const PrimeField& o) const { return p == o.p; }
    FieldSpec spec() const { return FieldSpec{FieldSpec::Kind::PrimeField, p}; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem from_long(long v) const {
        long long r = static_cast<long long>(v) % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        return static_cast<Elem>(r);
    }

    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p ? s - p : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem mul(Elem a, Elem b) const { return detail::mulmod_u64(a, b, p); }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw Error(Errc::MalformedInput, "division by zero");
        return detail::powmod_u64(a, p - 2, p);
    }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    std::string str(Elem a) const { return std::to_string(a); }

    Elem parse(long long v) const {
        long long r = v % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        return static_cast<Elem>(r);
    }
};

} // namespace coho
