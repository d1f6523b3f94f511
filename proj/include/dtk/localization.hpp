#pragma once

#include "dtk/partitions.hpp"
#include "dtk/ratfunc.hpp"
#include "dtk/rational.hpp"

#include <cstdint>
#include <vector>

namespace dtk {

/// Exponent pair of a torus weight t1^i t2^j.
struct Weight {
    int i = 0;
    int j = 0;

    friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// Character of a representation of the two-dimensional torus: a finite
/// multiset of weights, kept sorted so that equal characters compare equal.
class Character {
public:
    Character() = default;
    explicit Character(std::vector<Weight> terms);

    const std::vector<Weight>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    friend bool operator==(const Character&, const Character&) = default;

private:
    std::vector<Weight> terms_;
};

/// Character of the tangent space of Hilb^n(P^2) at the fixed point indexed by
/// `triple`.
Character tangent_character(const PartitionTriple& triple);

/// Character of the fiber of the rank-2n obstruction bundle at the same fixed
/// point: the tangent character with the p2 block shifted by t1^-1 and the p3
/// block by t2^-1.
Character obstruction_character(const PartitionTriple& triple);

/// Localization contribution of a fixed point in the variable t = s1/s2
/// (s2 = 1). Only p2 and p3 produce factors; the empty triple gives 1.
RationalFunction fixed_point_contribution(const PartitionTriple& triple);

/// The same contribution evaluated directly at t. Throws PoleError when one of
/// the denominator factors vanishes at t.
Rational fixed_point_contribution_at(const PartitionTriple& triple, const Rational& t);

/// Independent route to the contribution: prod over obstruction weights of
/// (i t + j) divided by prod over tangent weights, after cancelling the
/// weights the two characters share.
RationalFunction weight_quotient(const Character& obstruction, const Character& tangent);

enum class IntegralMode { symbolic, sampled };

struct IntegralOptions {
    IntegralMode mode = IntegralMode::symbolic;
    /// Number of worker threads for the fixed-point sum.
    unsigned workers = 1;
    /// Seed for the sample points in sampled mode.
    std::uint64_t seed = 0x5eed;
    /// Distinct sample points drawn in sampled mode (at least 3).
    unsigned samples = 3;
};

/// Exact sum of fixed_point_contribution over all triples of total n, reduced
/// with `workers` threads. Each worker sums a contiguous slice of the
/// enumeration order.
RationalFunction symbolic_fixed_point_sum(int n, unsigned workers = 1);

/// Sum of the contributions evaluated at t. Throws PoleError if t is a pole of
/// any single contribution.
Rational sampled_fixed_point_sum(int n, const Rational& t, unsigned workers = 1);

struct IntegralResult {
    Rational value;
    std::size_t fixed_points = 0;
    /// Sample points used in sampled mode (empty in symbolic mode).
    std::vector<Rational> sample_points;
};

/// Integral of the top Chern class of the obstruction bundle over Hilb^n(P^2).
/// Symbolic mode extracts the constant from the exact sum; sampled mode
/// evaluates at `samples` random rationals (numerator and denominator bounded
/// by 10^6, poles resampled) and requires exact agreement. Either failure is
/// a ConsistencyError.
IntegralResult hilb_chern_integral(int n, const IntegralOptions& options = {});

/// n = s(s+3)/2 - d + 1. Throws DomainError when negative.
long p3_point_count(long s, long d);

/// DT(P^3; P; pi^*[pt]) for P(m) = m^2/2 + (s + 3/2)m + d.
Rational dt_p3(long s, long d, const IntegralOptions& options = {});

/// The moduli space of these sheaves on P^3 has virtual dimension 3
/// (chi(F,F) = -2) for every (s, d); the point insertion cuts it to 0.
inline constexpr int p3_virtual_dimension = 3;

} // namespace dtk
