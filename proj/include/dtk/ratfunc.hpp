#pragma once

#include "dtk/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dtk {

/// Dense univariate polynomial over Q; coefficient index = degree. The
/// coefficient vector never carries a trailing zero, so the zero polynomial
/// is the empty vector and has degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);

    static Poly constant(const Rational& c);
    /// a*t + b
    static Poly linear(const Rational& a, const Rational& b);
    static Poly variable() { return linear(1, 0); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(int k) const;
    /// Requires a nonzero polynomial.
    const Rational& leading() const;

    Rational eval(const Rational& t) const;
    /// Scaled to leading coefficient 1; the zero polynomial stays zero.
    Poly monic() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string(std::string_view var = "t") const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

struct PolyDivMod {
    Poly quotient;
    Poly remainder;
};

/// Euclidean division over Q. Throws DomainError for a zero divisor.
PolyDivMod divmod(const Poly& a, const Poly& b);

/// Quotient of a division known to be exact; throws ConsistencyError if a
/// remainder appears.
Poly exact_div(const Poly& a, const Poly& b);

/// Monic gcd computed with the primitive polynomial remainder sequence over Z.
/// gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// Element of Q(t) in canonical form: gcd(num, den) = 1, den monic, and zero
/// represented as 0/1. Equal functions have identical fields.
class RationalFunction {
public:
    RationalFunction() : den_(Poly::constant(1)) {}
    RationalFunction(const Rational& c) : num_(Poly::constant(c)), den_(Poly::constant(1)) {}
    RationalFunction(Poly p) : num_(std::move(p)), den_(Poly::constant(1)) {}
    /// Throws DomainError if `den` is zero.
    RationalFunction(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    /// Throws PoleError when den(t) = 0.
    Rational eval(const Rational& t) const;

    /// c when num = c*den, otherwise nullopt.
    std::optional<Rational> as_constant() const;

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    /// Throws DomainError when dividing by the zero function.
    RationalFunction& operator/=(const RationalFunction& o);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string(std::string_view var = "t") const;

private:
    struct Raw {};
    RationalFunction(Raw, Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    Poly num_;
    Poly den_;
};

} // namespace dtk
