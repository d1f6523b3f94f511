#include "dtk/ratfunc.hpp"

#include "dtk/errors.hpp"

#include <algorithm>
#include <utility>

namespace dtk {

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    for (auto& c : coeffs_)
        c.canonicalize();
    trim();
}

Poly Poly::constant(const Rational& c)
{
    return Poly(std::vector<Rational>{c});
}

Poly Poly::linear(const Rational& a, const Rational& b)
{
    return Poly(std::vector<Rational>{b, a});
}

void Poly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Rational Poly::coefficient(int k) const
{
    if (k < 0 || k > degree())
        return 0;
    return coeffs_[k];
}

const Rational& Poly::leading() const
{
    if (is_zero())
        throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rational Poly::eval(const Rational& t) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= t;
        acc += *it;
    }
    return acc;
}

Poly Poly::monic() const
{
    if (is_zero() || leading() == 1)
        return *this;
    Poly out = *this;
    const Rational inv = 1 / leading();
    for (auto& c : out.coeffs_)
        c *= inv;
    return out;
}

Poly Poly::operator-() const
{
    Poly out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

Poly& Poly::operator+=(const Poly& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    Rational tmp;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            mpq_mul(tmp.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
            out[i + j] += tmp;
        }
    }
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o)
{
    *this = *this * o;
    return *this;
}

Poly& Poly::operator*=(const Rational& c)
{
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_)
        x *= c;
    return *this;
}

std::string Poly::to_string(std::string_view var) const
{
    if (is_zero())
        return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[k];
        if (c == 0)
            continue;
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        std::string mono;
        if (k >= 1)
            mono = std::string(var) + (k > 1 ? "^" + std::to_string(k) : "");
        if (mono.empty())
            s += mag.get_str();
        else if (mag == 1)
            s += mono;
        else
            s += mag.get_str() + "*" + mono;
    }
    return s;
}

PolyDivMod divmod(const Poly& a, const Poly& b)
{
    if (b.is_zero())
        throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree())
        return {Poly{}, a};

    std::vector<Rational> rem = a.coefficients();
    std::vector<Rational> quot(a.degree() - b.degree() + 1);
    const auto& bc = b.coefficients();
    const Rational inv_lead = 1 / b.leading();
    const int db = b.degree();
    Rational tmp;
    for (int k = a.degree() - db; k >= 0; --k) {
        Rational q = rem[k + db] * inv_lead;
        if (q == 0)
            continue;
        for (int j = 0; j <= db; ++j) {
            mpq_mul(tmp.get_mpq_t(), q.get_mpq_t(), bc[j].get_mpq_t());
            rem[k + j] -= tmp;
        }
        quot[k] = std::move(q);
    }
    rem.resize(db);
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw ConsistencyError("inexact polynomial division: (" + a.to_string() + ") / (" + b.to_string() + ")");
    return q;
}

// ---------------------------------------------------------------------------
// gcd via the primitive PRS over Z

namespace {

using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

void make_primitive(ZPoly& p)
{
    Integer g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            return;
    }
    if (g == 0 || g == 1)
        return;
    for (auto& c : p)
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

ZPoly primitive_integer_part(const Poly& p)
{
    Integer l = 1;
    for (const auto& c : p.coefficients())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    ZPoly out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) {
        Integer z = l / c.get_den();
        z *= c.get_num();
        out.push_back(std::move(z));
    }
    make_primitive(out);
    return out;
}

// lc(b)^(deg a - deg b + 1) * a mod b, computed without division.
ZPoly pseudo_remainder(ZPoly a, const ZPoly& b)
{
    const std::size_t db = b.size() - 1;
    const Integer& lb = b.back();
    Integer tmp;
    while (!a.empty() && a.size() - 1 >= db) {
        const std::size_t shift = a.size() - 1 - db;
        const Integer la = a.back();
        for (auto& c : a)
            c *= lb;
        for (std::size_t j = 0; j <= db; ++j) {
            mpz_mul(tmp.get_mpz_t(), la.get_mpz_t(), b[j].get_mpz_t());
            a[shift + j] -= tmp;
        }
        ztrim(a);
    }
    return a;
}

} // namespace

Poly gcd(const Poly& a, const Poly& b)
{
    if (a.is_zero())
        return b.monic();
    if (b.is_zero())
        return a.monic();
    if (a.degree() == 0 || b.degree() == 0)
        return Poly::constant(1);

    ZPoly x = primitive_integer_part(a);
    ZPoly y = primitive_integer_part(b);
    if (x.size() < y.size())
        std::swap(x, y);
    while (!y.empty()) {
        if (y.size() == 1)
            return Poly::constant(1);
        ZPoly r = pseudo_remainder(std::move(x), y);
        make_primitive(r);
        x = std::move(y);
        y = std::move(r);
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(x.size());
    for (auto& c : x)
        coeffs.emplace_back(c);
    return Poly(std::move(coeffs)).monic();
}

// ---------------------------------------------------------------------------
// RationalFunction

namespace {

bool is_one(const Poly& p)
{
    return p.degree() == 0 && p.leading() == 1;
}

} // namespace

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero())
        throw DomainError("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize()
{
    if (num_.is_zero()) {
        den_ = Poly::constant(1);
        return;
    }
    Poly g = gcd(num_, den_);
    if (!is_one(g)) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    const Rational lead = den_.leading();
    if (lead != 1) {
        const Rational inv = 1 / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

Rational RationalFunction::eval(const Rational& t) const
{
    Rational d = den_.eval(t);
    if (d == 0)
        throw PoleError("pole of " + to_string() + " at t = " + t.get_str());
    return num_.eval(t) / d;
}

std::optional<Rational> RationalFunction::as_constant() const
{
    if (den_.degree() != 0 || num_.degree() > 0)
        return std::nullopt;
    Rational c = num_.coefficient(0) / den_.coefficient(0);
    if (num_ != den_ * c)
        return std::nullopt;
    return c;
}

RationalFunction RationalFunction::operator-() const
{
    return RationalFunction(Raw{}, -num_, den_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o)
{
    if (o.is_zero())
        return *this;
    if (is_zero())
        return *this = o;

    // Henrici: only gcd(numerator, g) can survive in the result.
    Poly g = gcd(den_, o.den_);
    if (is_one(g)) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
        if (num_.is_zero())
            den_ = Poly::constant(1);
        return *this;
    }
    Poly b1 = exact_div(den_, g);
    Poly d1 = exact_div(o.den_, g);
    num_ = num_ * d1 + o.num_ * b1;
    den_ = b1 * o.den_;
    if (num_.is_zero()) {
        den_ = Poly::constant(1);
        return *this;
    }
    Poly h = gcd(num_, g);
    if (!is_one(h)) {
        num_ = exact_div(num_, h);
        den_ = exact_div(den_, h);
    }
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o)
{
    return *this += -o;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o)
{
    if (is_zero() || o.is_zero())
        return *this = RationalFunction();
    Poly g1 = gcd(num_, o.den_);
    Poly g2 = gcd(o.num_, den_);
    Poly a = is_one(g1) ? num_ : exact_div(num_, g1);
    Poly d = is_one(g1) ? o.den_ : exact_div(o.den_, g1);
    Poly c = is_one(g2) ? o.num_ : exact_div(o.num_, g2);
    Poly b = is_one(g2) ? den_ : exact_div(den_, g2);
    num_ = a * c;
    den_ = b * d;
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o)
{
    if (o.is_zero())
        throw DomainError("division by the zero rational function");
    // o.num_ is nonzero; the reciprocal needs its own monic normalization.
    RationalFunction inv(Raw{}, o.den_ * (1 / o.num_.leading()), o.num_.monic());
    return *this *= inv;
}

std::string RationalFunction::to_string(std::string_view var) const
{
    if (is_one(den_))
        return num_.to_string(var);
    auto wrap = [&](const Poly& p) {
        std::string s = p.to_string(var);
        bool simple = p.degree() <= 0 || std::count(s.begin(), s.end(), ' ') == 0;
        return simple ? s : "(" + s + ")";
    };
    return wrap(num_) + "/" + wrap(den_);
}

} // namespace dtk
