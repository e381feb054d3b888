#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pellfrieze {

using BigInt = boost::multiprecision::cpp_int;

struct NotAUnit : std::domain_error {
    using std::domain_error::domain_error;
};

struct NotPositive : std::domain_error {
    using std::domain_error::domain_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Element a + b*sqrt(2) of Z[sqrt(2)], with unbounded integer coefficients.
/// Values are immutable after construction; all operations are pure.
class QuadInt {
public:
    QuadInt() = default;
    QuadInt(long long a) : a_(a) {}  // NOLINT: implicit on purpose, rationals embed
    QuadInt(BigInt a) : a_(std::move(a)) {}
    QuadInt(BigInt a, BigInt b) : a_(std::move(a)), b_(std::move(b)) {}

    static QuadInt sqrt2() { return QuadInt(0, 1); }

    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    // Exact sign of a + b*sqrt(2) as a real number. When a and b disagree in
    // sign the result is decided integrally by comparing a^2 against 2 b^2.
    int sign() const;

    // Exact real-order comparison: sign of (*this - o). Never floating point.
    int compare(const QuadInt& o) const { return (*this - o).sign(); }

    friend QuadInt operator+(const QuadInt& x, const QuadInt& y) {
        return QuadInt(x.a_ + y.a_, x.b_ + y.b_);
    }
    friend QuadInt operator-(const QuadInt& x, const QuadInt& y) {
        return QuadInt(x.a_ - y.a_, x.b_ - y.b_);
    }
    friend QuadInt operator-(const QuadInt& x) { return QuadInt(-x.a_, -x.b_); }
    friend QuadInt operator*(const QuadInt& x, const QuadInt& y) {
        return QuadInt(x.a_ * y.a_ + 2 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
    }

    QuadInt& operator+=(const QuadInt& y) { return *this = *this + y; }
    QuadInt& operator-=(const QuadInt& y) { return *this = *this - y; }
    QuadInt& operator*=(const QuadInt& y) { return *this = *this * y; }

    friend bool operator==(const QuadInt& x, const QuadInt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadInt& x, const QuadInt& y) { return !(x == y); }

    // Real order, not componentwise.
    friend bool operator<(const QuadInt& x, const QuadInt& y) { return x.compare(y) < 0; }
    friend bool operator<=(const QuadInt& x, const QuadInt& y) { return x.compare(y) <= 0; }
    friend bool operator>(const QuadInt& x, const QuadInt& y) { return x.compare(y) > 0; }
    friend bool operator>=(const QuadInt& x, const QuadInt& y) { return x.compare(y) >= 0; }

    /// Canonical text form: "0", "1", "√2", "1+√2", "-3+3√2", "3-√2".
    std::string str() const;

    /// Inverse of str(); also accepts "sqrt(2)" as an ASCII alias for "√2"
    /// and ignores whitespace. Throws ParseError on anything else.
    static QuadInt parse(std::string_view text);

private:
    BigInt a_;
    BigInt b_;
};

std::ostream& operator<<(std::ostream& os, const QuadInt& x);

/// N(a + b*sqrt(2)) = |a^2 - 2 b^2|; multiplicative.
BigInt norm(const QuadInt& x);

/// Units of Z[sqrt(2)] are exactly the elements of norm 1.
bool is_unit(const QuadInt& x);

/// ell_m = (1 + sqrt(2))^m, for any integer m; (1+sqrt(2))^-1 = -1+sqrt(2).
QuadInt unit_power(long m);

/// The unique m with x = ell_m, for a positive unit x.
/// Throws NotAUnit when norm(x) != 1 and NotPositive when x <= 0.
long unit_log(const QuadInt& x);

/// Normalized Chebyshev polynomials of the second kind:
/// U_{-1} = 0, U_0 = 1, U_k = lambda*U_{k-1} - U_{k-2}.
QuadInt chebyshev_u(long k, const QuadInt& lambda);

}  // namespace pellfrieze
