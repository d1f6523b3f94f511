#include "dtk/qseries.hpp"

#include "dtk/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace dtk {

namespace {

constexpr long inf = std::numeric_limits<long>::max();

long value_or_inf(const std::optional<long>& p)
{
    return p ? *p : inf;
}

long add_sat(long a, long b)
{
    if (a == inf || b == inf)
        return inf;
    return a + b;
}

std::string exponent_string(const Rational& e)
{
    if (e == 1)
        return "q";
    if (is_integer(e) && e > 0)
        return "q^" + e.get_str();
    return "q^(" + e.get_str() + ")";
}

} // namespace

PuiseuxSeries::PuiseuxSeries(int grid, const std::vector<std::pair<Rational, Rational>>& terms,
                             std::optional<Rational> precision)
    : grid_(grid)
{
    if (grid < 1)
        throw DomainError("series grid must be positive");
    if (precision)
        precision_ = to_long(floor(*precision * grid_));
    for (const auto& [e, c] : terms) {
        const long k = numerator_of(e);
        if (precision_ && k > *precision_)
            throw DomainError("exponent " + e.get_str() + " lies above the series precision");
        coeffs_[k] += c;
    }
    std::erase_if(coeffs_, [](const auto& kv) { return kv.second == 0; });
}

PuiseuxSeries PuiseuxSeries::constant(const Rational& c, int grid)
{
    return PuiseuxSeries(grid, {{Rational(0), c}});
}

PuiseuxSeries PuiseuxSeries::monomial(const Rational& coeff, const Rational& exponent)
{
    Rational e = exponent;
    e.canonicalize();
    return PuiseuxSeries(static_cast<int>(to_long(e.get_den())), {{e, coeff}});
}

long PuiseuxSeries::numerator_of(const Rational& e) const
{
    Rational scaled = e * grid_;
    if (!is_integer(scaled))
        throw DomainError("exponent " + e.get_str() + " is not on the grid 1/" + std::to_string(grid_));
    return to_long(scaled.get_num());
}

std::optional<Rational> PuiseuxSeries::precision() const
{
    if (!precision_)
        return std::nullopt;
    return fraction(*precision_, grid_);
}

std::optional<Rational> PuiseuxSeries::valuation() const
{
    if (coeffs_.empty())
        return std::nullopt;
    return fraction(coeffs_.begin()->first, grid_);
}

Rational PuiseuxSeries::coefficient(const Rational& e) const
{
    Rational scaled = e * grid_;
    if (precision_ && scaled > *precision_)
        throw DomainError("coefficient of q^(" + e.get_str() + ") is beyond the series precision");
    if (!is_integer(scaled))
        return 0;
    auto it = coeffs_.find(to_long(scaled.get_num()));
    return it == coeffs_.end() ? Rational(0) : it->second;
}

PuiseuxSeries PuiseuxSeries::refined(int grid) const
{
    if (grid < 1 || grid % grid_ != 0)
        throw DomainError("grid 1/" + std::to_string(grid) + " does not refine 1/" + std::to_string(grid_));
    if (grid == grid_)
        return *this;
    const long f = grid / grid_;
    PuiseuxSeries out;
    out.grid_ = grid;
    for (const auto& [k, c] : coeffs_)
        out.coeffs_.emplace(k * f, c);
    if (precision_)
        out.precision_ = *precision_ * f;
    return out;
}

PuiseuxSeries PuiseuxSeries::truncated(const Rational& bound) const
{
    const long b = to_long(floor(bound * grid_));
    PuiseuxSeries out = *this;
    out.precision_ = std::min(value_or_inf(precision_), b);
    std::erase_if(out.coeffs_, [&](const auto& kv) { return kv.first > *out.precision_; });
    return out;
}

PuiseuxSeries PuiseuxSeries::operator-() const
{
    PuiseuxSeries out = *this;
    for (auto& [k, c] : out.coeffs_)
        c = -c;
    return out;
}

PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b)
{
    const int g = std::lcm(a.grid_, b.grid_);
    PuiseuxSeries out = a.refined(g);
    const PuiseuxSeries rb = b.refined(g);
    if (rb.precision_)
        out.precision_ = std::min(value_or_inf(out.precision_), *rb.precision_);
    for (const auto& [k, c] : rb.coeffs_)
        out.coeffs_[k] += c;
    std::erase_if(out.coeffs_, [&](const auto& kv) {
        return kv.second == 0 || (out.precision_ && kv.first > *out.precision_);
    });
    return out;
}

PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b)
{
    return a + (-b);
}

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b)
{
    const int g = std::lcm(a.grid_, b.grid_);
    const PuiseuxSeries ra = a.refined(g);
    const PuiseuxSeries rb = b.refined(g);

    PuiseuxSeries out;
    out.grid_ = g;
    if ((ra.is_exact() && ra.coeffs_.empty()) || (rb.is_exact() && rb.coeffs_.empty()))
        return out;

    // An unknown-only series O(q^(P+1)) starts no lower than P+1.
    auto low = [](const PuiseuxSeries& s) {
        return s.coeffs_.empty() ? *s.precision_ + 1 : s.coeffs_.begin()->first;
    };
    const long p = std::min(add_sat(low(ra), value_or_inf(rb.precision_)),
                            add_sat(low(rb), value_or_inf(ra.precision_)));
    if (p != inf)
        out.precision_ = p;

    Rational tmp;
    for (const auto& [i, x] : ra.coeffs_)
        for (const auto& [j, y] : rb.coeffs_) {
            if (out.precision_ && i + j > *out.precision_)
                break;
            mpq_mul(tmp.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
            out.coeffs_[i + j] += tmp;
        }
    std::erase_if(out.coeffs_, [](const auto& kv) { return kv.second == 0; });
    return out;
}

PuiseuxSeries operator*(const Rational& c, const PuiseuxSeries& a)
{
    if (c == 0) {
        PuiseuxSeries out;
        out.grid_ = a.grid_;
        out.precision_ = a.precision_;
        return out;
    }
    PuiseuxSeries out = a;
    for (auto& [k, v] : out.coeffs_)
        v *= c;
    return out;
}

std::string PuiseuxSeries::to_string() const
{
    std::string s;
    for (const auto& [k, c] : coeffs_) {
        const Rational e = fraction(k, grid_);
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        if (e == 0)
            s += mag.get_str();
        else if (mag == 1)
            s += exponent_string(e);
        else
            s += mag.get_str() + "*" + exponent_string(e);
    }
    if (precision_) {
        const Rational next = fraction(*precision_ + 1, grid_);
        s += (s.empty() ? "O(" : " + O(") + (next == 0 ? std::string("1") : exponent_string(next)) + ")";
    }
    return s.empty() ? "0" : s;
}

std::vector<std::pair<std::string, std::string>> PuiseuxSeries::serialize() const
{
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(coeffs_.size());
    for (const auto& [k, c] : coeffs_)
        out.emplace_back(fraction(k, grid_).get_str(), c.get_str());
    return out;
}

PuiseuxSeries series_shift(const PuiseuxSeries& a, const Rational& e)
{
    Rational ec = e;
    ec.canonicalize();
    const int g = std::lcm(a.grid(), static_cast<int>(to_long(ec.get_den())));
    const PuiseuxSeries r = a.refined(g);
    const long k = to_long(Rational(ec * g).get_num());

    std::vector<std::pair<Rational, Rational>> terms;
    for (const auto& [n, c] : r.terms())
        terms.emplace_back(fraction(n + k, g), c);
    std::optional<Rational> precision;
    if (r.precision_numerator())
        precision = fraction(*r.precision_numerator() + k, g);
    return PuiseuxSeries(g, terms, precision);
}

PuiseuxSeries series_invert(const PuiseuxSeries& a, std::optional<Rational> precision)
{
    if (a.terms().empty())
        throw DomainError("cannot invert a series with no known nonzero coefficient");

    const int g = a.grid();
    const long v = a.terms().begin()->first;
    const Rational lead = a.terms().begin()->second;

    if (a.is_exact() && a.terms().size() == 1 && !precision)
        return PuiseuxSeries(g, {{fraction(-v, g), 1 / lead}});

    long p_out = inf;
    if (auto pa = a.precision_numerator())
        p_out = *pa - 2 * v;
    if (precision)
        p_out = std::min(p_out, to_long(floor(*precision * g)));
    if (p_out == inf)
        throw DomainError("inverse of an exact non-monomial series needs an explicit precision");

    // a = lead * q^v * (1 + u); invert 1 + u term by term on relative numerators.
    const long length = p_out + v;
    std::vector<std::pair<long, Rational>> u;
    for (const auto& [k, c] : a.terms())
        if (k > v && k - v <= length)
            u.emplace_back(k - v, c / lead);

    std::vector<Rational> inv(length >= 0 ? length + 1 : 0);
    if (!inv.empty())
        inv[0] = 1;
    Rational tmp;
    for (long k = 1; k <= length; ++k) {
        Rational acc = 0;
        for (const auto& [j, b] : u) {
            if (j > k)
                break;
            if (inv[k - j] == 0)
                continue;
            mpq_mul(tmp.get_mpq_t(), b.get_mpq_t(), inv[k - j].get_mpq_t());
            acc -= tmp;
        }
        inv[k] = std::move(acc);
    }

    std::vector<std::pair<Rational, Rational>> terms;
    const Rational inv_lead = 1 / lead;
    for (long k = 0; k <= length; ++k)
        if (inv[k] != 0)
            terms.emplace_back(fraction(k - v, g), inv[k] * inv_lead);
    return PuiseuxSeries(g, terms, fraction(p_out, g));
}

std::vector<Integer> goettsche_coefficients(int e, int terms)
{
    if (terms < 0)
        throw DomainError("negative number of terms");
    // m a_m = e * sum_{k=1}^m sigma(k) a_{m-k}, from the logarithmic derivative
    // of prod (1 - q^n)^(-e).
    std::vector<Integer> sigma(terms + 1, 0);
    for (int d = 1; d <= terms; ++d)
        for (int m = d; m <= terms; m += d)
            sigma[m] += d;

    std::vector<Integer> a(terms + 1, 0);
    a[0] = 1;
    for (int m = 1; m <= terms; ++m) {
        Integer acc = 0;
        for (int k = 1; k <= m; ++k)
            acc += sigma[k] * a[m - k];
        acc *= e;
        if (!mpz_divisible_ui_p(acc.get_mpz_t(), static_cast<unsigned long>(m)))
            throw ConsistencyError("non-integral Goettsche coefficient");
        mpz_divexact_ui(a[m].get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(m));
    }
    return a;
}

PuiseuxSeries goettsche_series(int e, int terms)
{
    const auto coeffs = goettsche_coefficients(e, terms);
    std::vector<std::pair<Rational, Rational>> t;
    for (int m = 0; m <= terms; ++m)
        t.emplace_back(Rational(m), Rational(coeffs[m]));
    return PuiseuxSeries(1, t, Rational(terms));
}

PuiseuxSeries eta_product(int e, int terms)
{
    if (terms < 1)
        throw DomainError("eta product needs at least one term");
    const auto coeffs = goettsche_coefficients(-e, terms - 1);
    std::vector<std::pair<Rational, Rational>> t;
    for (int m = 0; m < terms; ++m)
        t.emplace_back(Rational(m + 1), Rational(coeffs[m]));
    return PuiseuxSeries(1, t, Rational(terms));
}

PuiseuxSeries eta24(int terms)
{
    return eta_product(24, terms);
}

Integer hilb_euler(long m, int e)
{
    if (m < 0)
        return 0;
    if (m > std::numeric_limits<int>::max())
        throw DomainError("Hilbert scheme index out of range");
    return goettsche_coefficients(e, static_cast<int>(m)).back();
}

} // namespace dtk
