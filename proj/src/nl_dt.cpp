#include "dtk/nl_dt.hpp"

#include "dtk/errors.hpp"

#include <algorithm>

namespace dtk {

MukaiVector mukai_from_data(long r, long beta_sq, long tau)
{
    if (r < 1)
        throw DomainError("Mukai vector rank must be positive, got " + std::to_string(r));
    if (beta_sq % 2 != 0)
        throw DomainError("beta^2 must be even on a K3 surface, got " + std::to_string(beta_sq));
    if (beta_sq < -2)
        throw DomainError("beta^2 must be >= -2, got " + std::to_string(beta_sq));
    return MukaiVector(r, beta_sq, tau);
}

HilbertPolyK3 HilbertPolyK3::from_mukai(const MukaiVector& v, long ell, long d)
{
    return {v.r(), ell, d, v.omega() + 2 * v.r()};
}

Rational HilbertPolyK3::operator()(const Rational& m) const
{
    return fraction(r * ell, 2) * m * m + d * m + c;
}

long moduli_dim(const MukaiVector& v, long p0)
{
    return 2 + 2 * v.r() * v.r() + v.beta_sq() - 2 * v.r() * p0;
}

std::pair<Rational, Rational> hilb_index_forms(long r, long beta_sq, long tau)
{
    const Rational half_beta_sq = fraction(beta_sq, 2);
    const Rational from_mukai = Rational(r * tau) - (r - 1) * half_beta_sq - r * r + 1;
    const Rational h = half_beta_sq + 1;
    const Rational omega = half_beta_sq - tau;
    const Rational from_nl = h - r * omega - r * r;
    return {from_mukai, from_nl};
}

long hilb_index(const MukaiVector& v)
{
    auto [a, b] = hilb_index_forms(v.r(), v.beta_sq(), v.tau());
    const long via_h = v.h() - v.r() * v.omega() - v.r() * v.r();
    if (a != b || b != via_h || !is_integer(a))
        throw ConsistencyError("Hilbert scheme index formulas disagree: " + a.get_str() + " vs " + b.get_str());
    return via_h;
}

bool within_nl_bound(long h, long d, long ell)
{
    // h <= 1 + d^2/(2 ell)  <=>  2 ell (h - 1) <= d^2
    return 2 * ell * (h - 1) <= d * d;
}

NLTable::NLTable(long ell) : ell_(ell)
{
    if (ell < 1)
        throw DomainError("ell must be positive, got " + std::to_string(ell));
}

Rational NLTable::at(long h, long d) const
{
    auto it = entries_.find({h, d});
    return it == entries_.end() ? Rational(0) : it->second;
}

void NLTable::insert(long h, long d, const Rational& value)
{
    const std::string cell = "(h=" + std::to_string(h) + ", d=" + std::to_string(d) + ")";
    if (!within_nl_bound(h, d, ell_))
        throw ValidationError("NL entry " + cell + " violates the vanishing bound h <= 1 + d^2/(2*ell) = " +
                              fraction(2 * ell_ + d * d, 2 * ell_).get_str());
    if (entries_.contains({h, d}))
        throw ValidationError("duplicate NL entry " + cell);
    if (value != 0)
        entries_.emplace(Key{h, d}, value);
}

std::vector<std::pair<long, Rational>> NLTable::row(long d) const
{
    std::vector<std::pair<long, Rational>> out;
    for (const auto& [key, v] : entries_)
        if (key.second == d)
            out.emplace_back(key.first, v);
    return out;
}

NLTable nl_symmetry_extend(const NLTable& table, long h_lo, long d_lo, long d_hi)
{
    const long ell = table.ell();
    if (ell % 2 != 0)
        throw UnsupportedError("NL symmetry needs even ell (h + d + ell/2 must stay integral), got ell = " +
                               std::to_string(ell));

    std::map<NLTable::Key, Rational> derived;
    auto put = [&](long h, long d, const Rational& v) {
        if (d < d_lo || d > d_hi || h < h_lo)
            return;
        const NLTable::Key key{h, d};
        auto clash = [&](const Rational& other) {
            throw ConsistencyError("NL symmetry assigns two values to (h=" + std::to_string(h) +
                                   ", d=" + std::to_string(d) + "): " + other.get_str() + " and " + v.get_str());
        };
        if (auto it = table.entries().find(key); it != table.entries().end()) {
            if (it->second != v)
                clash(it->second);
            return;
        }
        auto [it, fresh] = derived.emplace(key, v);
        if (!fresh && it->second != v)
            clash(it->second);
    };

    for (const auto& [key, v] : table.entries()) {
        auto [h, d] = key;
        for (long hh = h, dd = d; dd + ell <= d_hi;) {
            hh += dd + ell / 2;
            dd += ell;
            put(hh, dd, v);
        }
        for (long hh = h, dd = d; dd - ell >= d_lo;) {
            hh += -dd + ell / 2;
            dd -= ell;
            put(hh, dd, v);
        }
    }

    NLTable out = table;
    for (const auto& [key, v] : derived)
        out.insert(key.first, key.second, v);
    return out;
}

Rational dt_from_nl(const FibrationSpec& spec, const HilbertPolyK3& p)
{
    if (p.ell != spec.ell)
        throw DomainError("Hilbert polynomial has ell = " + std::to_string(p.ell) + " but the fibration has ell = " +
                          std::to_string(spec.ell));

    const long r = p.r;
    const auto row = spec.nl.row(p.d);
    const bool delta = p.d == 0 && spec.k != 0;

    long top = -1;
    for (const auto& [h, v] : row)
        top = std::max(top, r * r + h - r * p.c);
    if (delta)
        top = std::max(top, r * r + 1 - r * p.c);
    if (top < 0)
        return 0;

    const auto chi = goettsche_coefficients(spec.euler, static_cast<int>(top));
    auto euler_of = [&](long m) { return m < 0 ? Rational(0) : Rational(chi[m]); };

    Rational sum = 0;
    for (const auto& [h, v] : row)
        sum += euler_of(r * r + h - r * p.c) * v;
    if (delta)
        sum -= spec.k * euler_of(r * r + 1 - r * p.c);
    return sum / 2;
}

namespace {

PuiseuxSeries phi_exact(const FibrationSpec& spec, long d)
{
    const long g = 2 * spec.ell;
    std::vector<std::pair<Rational, Rational>> terms;
    for (const auto& [h, v] : spec.nl.row(d))
        terms.emplace_back(fraction(g + d * d - g * h, g), v);
    return PuiseuxSeries(static_cast<int>(g), terms);
}

} // namespace

PuiseuxSeries phi_series(const FibrationSpec& spec, long d, int terms)
{
    return phi_exact(spec, d).truncated(terms);
}

PuiseuxSeries z_component_closed(const FibrationSpec& spec, long d, int terms)
{
    PuiseuxSeries numerator = phi_exact(spec, d);
    if (d == 0 && spec.k != 0)
        numerator = numerator - PuiseuxSeries::constant(spec.k, numerator.grid());
    // The denominator starts at q^1, so its inverse loses two orders.
    const PuiseuxSeries denominator = Rational(2) * eta_product(spec.euler, terms + 2);
    return (numerator * series_invert(denominator)).truncated(terms);
}

std::vector<PuiseuxSeries> z_series_closed(const FibrationSpec& spec, int terms)
{
    std::vector<PuiseuxSeries> out;
    for (long d = 0; d < spec.ell; ++d)
        out.push_back(z_component_closed(spec, d, terms));
    return out;
}

PuiseuxSeries z_component_direct(const FibrationSpec& spec, long d, int terms)
{
    const long g = 2 * spec.ell;
    // exponent of the c-th term: 1 + d^2/(2 ell) - c
    const Rational offset = fraction(g + d * d, g);
    const long c_min = to_long(ceil(offset - terms));

    // Above c_max every Hilbert scheme index is negative.
    long c_max = c_min - 1;
    for (const auto& [h, v] : spec.nl.row(d))
        c_max = std::max(c_max, 1 + h);
    if (d == 0 && spec.k != 0)
        c_max = std::max(c_max, 2L);

    std::vector<std::pair<Rational, Rational>> out;
    for (long c = c_min; c <= c_max; ++c)
        out.emplace_back(offset - c, dt_from_nl(spec, {1, spec.ell, d, c}));
    return PuiseuxSeries(static_cast<int>(g), out, Rational(terms));
}

std::vector<PuiseuxSeries> z_series_direct(const FibrationSpec& spec, int terms, long r)
{
    if (r != 1)
        throw UnsupportedError("the generating series is only defined for rank 1, got r = " + std::to_string(r));
    std::vector<PuiseuxSeries> out;
    for (long d = 0; d < spec.ell; ++d)
        out.push_back(z_component_direct(spec, d, terms));
    return out;
}

SymmetryPair dt_symmetry_pair(long r, long ell, long d, long c)
{
    if (r < 1)
        throw DomainError("rank must be positive");
    Rational shifted = c + fraction(2 * d + ell, 2 * r);
    shifted.canonicalize();
    return {d + ell, shifted, is_integer(shifted)};
}

} // namespace dtk
