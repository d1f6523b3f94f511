#include "dtk/random_tables.hpp"

namespace dtk {

namespace {

long max_h(long d, long ell)
{
    // floor(1 + d^2 / (2 ell))
    return to_long(floor(fraction(2 * ell + d * d, 2 * ell)));
}

Rational random_value(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(1, 40);
    std::uniform_int_distribution<long> den(1, 6);
    std::bernoulli_distribution negative(0.3);
    Rational v = fraction(num(rng), den(rng));
    return negative(rng) ? Rational(-v) : v;
}

} // namespace

FibrationSpec random_fibration(std::mt19937_64& rng, const RandomTableOptions& options)
{
    FibrationSpec spec;
    spec.ell = options.ell;
    spec.nl = NLTable(options.ell);
    spec.k = std::uniform_int_distribution<long>(-options.k_range, options.k_range)(rng);
    spec.nodal = std::bernoulli_distribution(0.5)(rng);

    const long d_lo = options.d_lo.value_or(0);
    const long d_hi = options.d_hi.value_or(options.ell - 1);
    std::uniform_int_distribution<long> pick_d(d_lo, d_hi);
    std::uniform_int_distribution<long> depth(0, options.h_depth);
    const int entries = std::uniform_int_distribution<int>(0, options.max_entries)(rng);
    for (int i = 0; i < entries; ++i) {
        const long d = pick_d(rng);
        const long h = max_h(d, options.ell) - depth(rng);
        if (spec.nl.entries().contains({h, d}))
            continue;
        spec.nl.insert(h, d, random_value(rng));
    }
    return spec;
}

FibrationSpec random_symmetric_fibration(std::mt19937_64& rng, long ell, int seeds, long h_lo)
{
    FibrationSpec spec;
    spec.ell = ell;
    spec.nl = NLTable(ell);
    std::uniform_int_distribution<long> depth(0, 6);
    // Seeds cycle through the rows d = 0..ell-1 so that every row is populated.
    for (long i = 0; std::ssize(spec.nl.entries()) < std::max<long>(seeds, 1); ++i) {
        const long d = i % ell;
        const long h = max_h(d, ell) - depth(rng);
        if (!spec.nl.entries().contains({h, d}))
            spec.nl.insert(h, d, random_value(rng));
    }
    spec.nl = nl_symmetry_extend(spec.nl, h_lo, -2 * ell, 3 * ell);
    return spec;
}

} // namespace dtk
