#include "polytile/numbers.hpp"

#include <numeric>
#include <stdexcept>

namespace polytile {

Int gcd_all(const std::vector<Int>& xs) {
    Int g = 0;
    for (Int x : xs) g = std::gcd(g, x);
    return g;
}

Egcd extended_gcd(Int a, Int b) {
    // Iterative extended Euclid; returns g >= 0.
    Int old_r = a, r = b;
    Int old_x = 1, x = 0;
    Int old_y = 0, y = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int t;
        t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * x; old_x = x; x = t;
        t = old_y - q * y; old_y = y; y = t;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    return {old_r, old_x, old_y};
}

Int mod_inverse(Int a, Int m) {
    if (m < 1) throw std::invalid_argument("mod_inverse: modulus must be positive");
    Egcd e = extended_gcd(mod_floor(a, m), m);
    if (e.g != 1) throw std::invalid_argument("mod_inverse: argument not invertible");
    return mod_floor(e.x, m);
}

int padic_valuation(Int n, Int p) {
    if (n == 0) throw std::invalid_argument("padic_valuation: zero argument");
    if (p < 2) throw std::invalid_argument("padic_valuation: base must be >= 2");
    if (n < 0) n = -n;
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

std::optional<PrimePower> as_prime_power(Int n) {
    if (n < 2) return std::nullopt;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            if (n != 1) return std::nullopt;  // second prime factor
            return PrimePower{p, e};
        }
    }
    return PrimePower{n, 1};  // n itself prime
}

Rational::Rational(Int n, Int d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    Int g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
}

bool Rational::operator<(const Rational& o) const {
    return num * o.den < o.num * den;
}

bool Rational::operator<=(const Rational& o) const {
    return num * o.den <= o.num * den;
}

std::string Rational::str() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace polytile
