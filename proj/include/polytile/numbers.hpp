#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polytile {

using Int = long long;

/// Remainder in [0, m) for any sign of a.  m must be positive.
inline Int mod_floor(Int a, Int m) {
    Int r = a % m;
    return r < 0 ? r + m : r;
}

/// Floor division (rounds toward negative infinity).  m must be positive.
inline Int div_floor(Int a, Int m) {
    Int q = a / m;
    if (a % m != 0 && a < 0) --q;
    return q;
}

Int gcd_all(const std::vector<Int>& xs);

/// g = gcd(a, b) >= 0 with g = a*x + b*y.
struct Egcd {
    Int g, x, y;
};
Egcd extended_gcd(Int a, Int b);

/// Inverse of a modulo m (m >= 1).  Throws std::invalid_argument unless gcd(a, m) == 1.
Int mod_inverse(Int a, Int m);

/// Largest e with p^e dividing n.  Requires n != 0, p >= 2.
int padic_valuation(Int n, Int p);

struct PrimePower {
    Int prime;
    int exponent;
};

/// Decomposes n = p^e with p prime, e >= 1; nullopt when n is not of that form.
std::optional<PrimePower> as_prime_power(Int n);

/// Exact rational number, always in lowest terms with positive denominator.
struct Rational {
    Int num = 0;
    Int den = 1;

    Rational() = default;
    Rational(Int n, Int d);

    Rational operator+(const Rational& o) const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const;

    /// Printed as "<num>/<den>", e.g. "2/5"; integers keep an explicit /1.
    std::string str() const;
};

}  // namespace polytile
