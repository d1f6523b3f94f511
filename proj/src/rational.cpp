#include "dtk/rational.hpp"

#include "dtk/errors.hpp"

#include <cctype>

namespace dtk {

namespace {

bool is_signed_digits(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            return false;
    return true;
}

std::string strip_plus(std::string_view s)
{
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    return std::string(s);
}

} // namespace

Rational parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);

    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);

    if (!is_signed_digits(num) || den.empty() || !std::isdigit(static_cast<unsigned char>(den.front())) ||
        !is_signed_digits(den))
        throw ParseError("malformed rational '" + std::string(text) + "' (expected 'p' or 'p/q')");

    Integer n(strip_plus(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0)
        throw ParseError("zero denominator in rational '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

Integer floor(const Rational& q)
{
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil(const Rational& q)
{
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

long to_long(const Integer& z)
{
    if (!z.fits_slong_p())
        throw DomainError("integer " + z.get_str() + " out of machine range");
    return z.get_si();
}

} // namespace dtk
