#pragma once

#include "dtk/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dtk {

/// Truncated formal series in q with exponents on the grid (1/N)Z and exact
/// rational coefficients.
///
/// Coefficients are stored by exponent numerator (exponent = numerator / N).
/// The precision P, when present, is the largest numerator whose coefficient
/// is known: everything above it is unknown rather than zero. A series
/// without a precision is exact (a finite Laurent polynomial in q^(1/N)).
/// Zero coefficients are never stored.
class PuiseuxSeries {
public:
    /// The exact zero series on grid 1.
    PuiseuxSeries() = default;

    /// Builds from (exponent, coefficient) pairs. Throws DomainError if an
    /// exponent is not a multiple of 1/grid or lies above the precision.
    PuiseuxSeries(int grid, const std::vector<std::pair<Rational, Rational>>& terms,
                  std::optional<Rational> precision = std::nullopt);

    static PuiseuxSeries constant(const Rational& c, int grid = 1);
    static PuiseuxSeries monomial(const Rational& coeff, const Rational& exponent);

    int grid() const { return grid_; }
    const std::map<long, Rational>& terms() const { return coeffs_; }
    bool is_exact() const { return !precision_; }
    /// Largest exponent with a known coefficient; nullopt for exact series.
    std::optional<Rational> precision() const;
    std::optional<long> precision_numerator() const { return precision_; }

    /// Smallest exponent with a nonzero coefficient; nullopt if none is known.
    std::optional<Rational> valuation() const;

    /// Coefficient of q^e. Off-grid exponents have coefficient 0; exponents
    /// above the precision throw DomainError.
    Rational coefficient(const Rational& e) const;

    /// Same series on the finer grid `grid` (a multiple of the current one).
    PuiseuxSeries refined(int grid) const;

    /// Drops every term above `bound` and lowers the precision to it.
    PuiseuxSeries truncated(const Rational& bound) const;

    /// True when all coefficients are zero up to the precision.
    bool is_zero() const { return coeffs_.empty(); }

    PuiseuxSeries operator-() const;
    friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b);
    friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b);
    friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);
    friend PuiseuxSeries operator*(const Rational& c, const PuiseuxSeries& a);

    /// Structural equality: same grid, same precision, same coefficients.
    friend bool operator==(const PuiseuxSeries&, const PuiseuxSeries&) = default;

    /// Human-readable form, e.g. "q^(-1) + 24 + 324*q + O(q^(9/8))".
    std::string to_string() const;

    /// (exponent, coefficient) as exact fraction strings, increasing exponent.
    std::vector<std::pair<std::string, std::string>> serialize() const;

private:
    long numerator_of(const Rational& e) const; // throws when off-grid

    int grid_ = 1;
    std::map<long, Rational> coeffs_;
    std::optional<long> precision_;
};

/// a * q^e. The grid is refined when e is not on it.
PuiseuxSeries series_shift(const PuiseuxSeries& a, const Rational& e);

/// Multiplicative inverse. An inexact input determines the precision of the
/// output; an exact input that is not a monomial needs `precision`, the
/// largest exponent wanted. Throws DomainError for a series with no known
/// nonzero term.
PuiseuxSeries series_invert(const PuiseuxSeries& a, std::optional<Rational> precision = std::nullopt);

/// Coefficients 0..terms of prod_{n>=1} (1 - q^n)^(-e), i.e. the Euler
/// characteristics chi(Hilb^m) of a surface with Euler number e.
std::vector<Integer> goettsche_coefficients(int e, int terms);

/// The same as a series on grid 1, known up to q^terms.
PuiseuxSeries goettsche_series(int e, int terms);

/// q * prod_{n>=1} (1 - q^n)^e up to q^terms; eta(q)^e when e = 24.
PuiseuxSeries eta_product(int e, int terms);

/// eta(q)^24 = q * prod (1 - q^n)^24 up to q^terms.
PuiseuxSeries eta24(int terms);

/// chi(Hilb^m) for Euler number e, with Hilb^m empty (chi = 0) for m < 0.
Integer hilb_euler(long m, int e);

} // namespace dtk
