#ifndef GP_RATIONAL_HPP
#define GP_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "gp/errors.hpp"

namespace gp {

// Exact rational number on 64-bit numerator / denominator, always stored in
// lowest terms with a positive denominator.  Intermediate products run in
// 128-bit arithmetic; a result that does not fit back into 64 bits after
// reduction raises ArithmeticOverflow.  The quantities in this engine (edge
// lengths, chip coordinates, small integer multiples thereof) stay far below
// that limit.
class Rational {
  public:
    Rational() = default;
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d);

    // Parses "num/den" or a bare integer "num".
    static Rational parse(std::string_view text);

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    // Representative in [0, modulus) of *this mod modulus; modulus > 0.
    Rational mod(const Rational& modulus) const;

    // Largest integer <= *this.
    long long floor() const;

    // "num/den", or just "num" when the denominator is 1.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  private:
    static Rational make_reduced(__int128 n, __int128 d);

    long long num_{0};
    long long den_{1};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

} // namespace gp

#endif // GP_RATIONAL_HPP
