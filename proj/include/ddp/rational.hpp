#ifndef DDP_RATIONAL_HPP
#define DDP_RATIONAL_HPP

#include <numeric>
#include <string>

namespace ddp {

// Exact rational on long long, always normalized with positive denominator.
// Bounds arithmetic never needs more range than this.
struct Frac {
    long long num = 0;
    long long den = 1;

    Frac() = default;
    Frac(long long n, long long d = 1) : num(n), den(d) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend bool operator==(const Frac& a, const Frac& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }
    friend bool operator<(const Frac& a, const Frac& b) {
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator<=(const Frac& a, const Frac& b) {
        return a.num * b.den <= b.num * a.den;
    }
    friend bool operator>(const Frac& a, const Frac& b) { return b < a; }
    friend bool operator>=(const Frac& a, const Frac& b) { return b <= a; }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

}  // namespace ddp

#endif
