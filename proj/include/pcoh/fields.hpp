#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace pcoh {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull}) {
        if (n == d) return true;
        if (n % d == 0) return false;
    }
    // trial division, step over multiples of 2/3; fine for the p < 2^31 range we accept
    for (std::uint64_t d = 7; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 4) == 0) return false;
    }
    return true;
}

/// Field of rationals. Elements are exact, kept in lowest terms by cpp_rational.
/// All ops are static but callable through an instance, like PrimeField's.
struct RationalField {
    using Element = Rational;

    static Element zero() { return Element(0); }
    static Element one() { return Element(1); }
    static Element from_int(long long n) { return Element(n); }
    static Element add(const Element& a, const Element& b) { return a + b; }
    static Element sub(const Element& a, const Element& b) { return a - b; }
    static Element mul(const Element& a, const Element& b) { return a * b; }
    static Element div(const Element& a, const Element& b) {
        if (b == 0) throw std::domain_error("division by zero");
        return a / b;
    }
    static Element neg(const Element& a) { return -a; }
    static bool is_zero(const Element& a) { return a == 0; }
    static bool is_one(const Element& a) { return a == 1; }
    static std::string str(const Element& a) { return a.str(); }

    friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// GF(p), p prime and < 2^31 so products of residues fit in uint64_t.
class PrimeField {
public:
    using Element = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p >= (1ull << 31)) throw std::invalid_argument("prime modulus too large (need p < 2^31)");
        if (!is_prime_u64(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    }

    std::uint64_t modulus() const { return p_; }

    Element zero() const { return 0; }
    Element one() const { return 1 % p_; }
    Element from_int(long long n) const {
        long long m = n % static_cast<long long>(p_);
        if (m < 0) m += static_cast<long long>(p_);
        return static_cast<Element>(m);
    }
    Element add(Element a, Element b) const {
        Element s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
    Element mul(Element a, Element b) const { return (a * b) % p_; }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    Element inv(Element a) const {
        if (a == 0) throw std::domain_error("division by zero");
        // extended Euclid on (a, p)
        std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p_), nr = static_cast<std::int64_t>(a);
        while (nr != 0) {
            std::int64_t q = r / nr;
            t = std::exchange(nt, t - q * nt);
            r = std::exchange(nr, r - q * nr);
        }
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return static_cast<Element>(t);
    }
    Element div(Element a, Element b) const { return mul(a, inv(b)); }
    bool is_zero(Element a) const { return a == 0; }
    bool is_one(Element a) const { return a == one(); }
    std::string str(Element a) const { return std::to_string(a); }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

private:
    std::uint64_t p_;
};

/// Runtime tag naming a field: the rationals ("q") or GF(p) ("gf:p").
struct FieldSpec {
    enum class Kind { rationals, prime };
    Kind kind = Kind::rationals;
    std::uint64_t p = 0;

    static FieldSpec rationals() { return {}; }
    static FieldSpec gf(std::uint64_t p) {
        PrimeField check(p);  // validates
        return {Kind::prime, check.modulus()};
    }

    static FieldSpec parse(std::string_view s) {
        if (s == "q" || s == "Q") return rationals();
        if (s.rfind("gf:", 0) == 0 || s.rfind("GF:", 0) == 0) {
            std::string digits(s.substr(3));
            if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("bad field spec '" + std::string(s) + "'");
            return gf(std::stoull(digits));
        }
        throw std::invalid_argument("bad field spec '" + std::string(s) + "' (want q or gf:p)");
    }

    std::string str() const {
        return kind == Kind::rationals ? "q" : "gf:" + std::to_string(p);
    }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Dispatch: call fn with a concrete field instance matching spec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
    if (spec.kind == FieldSpec::Kind::rationals) return std::forward<Fn>(fn)(RationalField{});
    return std::forward<Fn>(fn)(PrimeField(spec.p));
}

}  // namespace pcoh
