#include "dtk/errors.hpp"
#include "dtk/nl_dt.hpp"
#include "dtk/random_tables.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>

using namespace dtk;

namespace {

const std::filesystem::path fixtures = DTK_FIXTURE_DIR;

FibrationSpec spec_with(long ell, long k, std::vector<std::tuple<long, long, Rational>> entries)
{
    FibrationSpec s;
    s.ell = ell;
    s.k = k;
    s.nl = NLTable(ell);
    for (const auto& [h, d, v] : entries)
        s.nl.insert(h, d, v);
    return s;
}

// chi(Hilb^m) of a K3 surface from the partition-count recurrence for
// prod (1-q^n)^(-24), done with plain integers.
Integer chi_k3(long m)
{
    if (m < 0)
        return 0;
    std::vector<Integer> c(m + 1);
    c[0] = 1;
    for (long n = 1; n <= m; ++n)
        for (int rep = 0; rep < 24; ++rep)
            for (long j = n; j <= m; ++j)
                c[j] += c[j - n];
    return c[m];
}

// DT for rank 1 straight from the formula, iterating over the table.
Rational dt_oracle(const FibrationSpec& s, long d, long c)
{
    Rational total = 0;
    for (const auto& [key, v] : s.nl.entries())
        if (key.second == d)
            total += Rational(chi_k3(1 + key.first - c)) * v;
    if (d == 0)
        total -= Rational(s.k) * Rational(chi_k3(2 - c));
    return total / 2;
}

} // namespace

TEST_CASE("Mukai vectors")
{
    const auto v = mukai_from_data(1, 0, 0);
    CHECK(v.s() == 1);
    CHECK(v.omega() == 0);
    CHECK(v.h() == 1);
    CHECK(mukai_from_data(1, 0, 7).omega() == -7);
    CHECK(mukai_from_data(1, 0, 7).h() == 1);
    const auto w = mukai_from_data(2, -2, 3);
    CHECK(w.s() == -2);
    CHECK(w.omega() == -4);
    CHECK(w.h() == 0);
    CHECK_THROWS_AS(mukai_from_data(1, 3, 0), DomainError);
    CHECK_THROWS_AS(mukai_from_data(1, -4, 0), DomainError);
    CHECK_THROWS_AS(mukai_from_data(0, 0, 0), DomainError);

    const auto p = HilbertPolyK3::from_mukai(w, 4, 3);
    CHECK(p.c == w.omega() + 2 * w.r());
    CHECK(p(0) == p.c);
    CHECK(p(2) == 4 * 4 + 3 * 2 + p.c);
}

TEST_CASE("moduli dimension and Hilbert scheme index")
{
    CHECK(moduli_dim(mukai_from_data(1, 0, 0), 2) == 0);
    for (long n = 0; n <= 6; ++n)
        CHECK(moduli_dim(mukai_from_data(1, 0, n), 2 - n) == 2 * n);
    CHECK(moduli_dim(mukai_from_data(2, -2, 3), 0) == 8);

    CHECK(hilb_index(mukai_from_data(1, 0, 0)) == 0);
    CHECK(hilb_index(mukai_from_data(1, 0, 5)) == 5);
    CHECK(hilb_index(mukai_from_data(2, -2, 3)) == 4);
    for (long r = 1; r <= 4; ++r)
        for (long b = -20; b <= 20; ++b)
            for (long tau = -20; tau <= 20; ++tau) {
                const auto [x, y] = hilb_index_forms(r, b, tau);
                CHECK(x == y);
            }
    // The index matches dim/2 of the moduli space.
    for (long r = 1; r <= 3; ++r)
        for (long b = -2; b <= 10; b += 2)
            for (long tau = -3; tau <= 3; ++tau) {
                const auto v = mukai_from_data(r, b, tau);
                CHECK(2 * hilb_index(v) == moduli_dim(v, v.omega() + 2 * r));
            }
}

TEST_CASE("NL table validation")
{
    NLTable t(4);
    CHECK(within_nl_bound(1, 0, 4));
    CHECK_FALSE(within_nl_bound(2, 1, 4));
    CHECK(within_nl_bound(2, 3, 4)); // 1 + 9/8
    t.insert(1, 0, 5);
    t.insert(0, 1, 0); // zeros are not stored
    CHECK(t.entries().size() == 1);
    CHECK(t.at(1, 0) == 5);
    CHECK(t.at(7, 7) == 0);
    CHECK_THROWS_WITH_AS(t.insert(2, 1, 1), doctest::Contains("(h=2, d=1)"), ValidationError);
    CHECK_THROWS_AS(t.insert(1, 0, 3), ValidationError);
}

TEST_CASE("NL document loading")
{
    const auto empty = nl_load(R"({"ell": 4, "k": 0, "nodal": false, "nl": []})");
    CHECK(empty.ell == 4);
    CHECK(empty.euler == 24);
    CHECK(empty.nl.empty());

    const auto s = nl_load(R"({"ell": 2, "k": -1, "euler": 12, "nodal": true,
        "nl": [{"h": 1, "d": 0, "value": "-3/6"}, {"h": 0, "d": 1, "value": 4}]})");
    CHECK(s.k == -1);
    CHECK(s.euler == 12);
    CHECK(s.nodal);
    CHECK(s.nl.at(1, 0) == fraction(-1, 2));
    CHECK(s.nl.at(0, 1) == 4);

    const std::string doc = "{\"ell\": 4, \"k\": 0, \"nl\": [\n"
                            "  {\"h\": 1, \"d\": 0, \"value\": \"1\"},\n"
                            "  {\"h\": 2, \"d\": 1, \"value\": \"1\"}\n"
                            "]}";
    CHECK_THROWS_WITH_AS(nl_load(doc, "t.json"), doctest::Contains("t.json:3: nl[1]"), ValidationError);
    CHECK_THROWS_WITH_AS(nl_load(doc, "t.json"), doctest::Contains("(h=2, d=1)"), ValidationError);

    CHECK_THROWS_AS(nl_load(R"({"ell": 4, "k": 0, "nl": [{"h": 1, "d": 0, "value": "0.5"}]})"), ParseError);
    CHECK_THROWS_AS(nl_load(R"({"ell": 4, "k": 0, "nl": [{"h": 1, "d": 0, "value": 0.5}]})"), ParseError);
    CHECK_THROWS_AS(nl_load(R"({"ell": 4, "k": 0, "nl": [{"h": 1, "d": 0, "value": "1/0"}]})"), ParseError);
    CHECK_THROWS_AS(nl_load(R"({"ell": 4, "k": 0, "nl": [)"), ParseError);
    CHECK_THROWS_AS(nl_load(R"({"ell": 4, "nl": []})"), ValidationError);
    CHECK_THROWS_AS(nl_load(R"({"ell": 4, "k": 0, "nl": [], "extra": 1})"), ValidationError);
    CHECK_THROWS_AS(nl_load(R"({"ell": 0, "k": 0, "nl": []})"), ValidationError);
    CHECK_THROWS_WITH_AS(nl_load(R"({"ell": 4, "k": 0, "nl": [{"h": 0, "d": 1, "value": "1"},
                                                              {"h": 0, "d": 1, "value": "2"}]})"),
                         doctest::Contains("duplicate"), ValidationError);

    CHECK_THROWS_AS(nl_load_file(fixtures / "invalid" / "bound_violation.json"), ValidationError);
    CHECK_THROWS_AS(nl_load_file(fixtures / "missing.json"), ParseError);

    const auto q = nl_load_file(fixtures / "quartic_pencil.json");
    const auto again = nl_load(nl_dump(q));
    CHECK(again.nl == q.nl);
    CHECK(again.k == q.k);
    CHECK(again.nodal == q.nodal);
}

TEST_CASE("NL symmetry extension")
{
    CHECK(nl_symmetry_extend(NLTable(4), -10, -8, 8).empty());

    NLTable t(4);
    t.insert(1, 0, 3);
    const auto ext = nl_symmetry_extend(t, -10, 0, 4);
    CHECK(ext.at(3, 4) == 3);
    CHECK(ext.at(1, 0) == 3);
    CHECK(ext.entries().size() == 2);

    const auto wide = nl_symmetry_extend(t, -10, -8, 8);
    CHECK(wide.at(3, -4) == 3);
    CHECK(wide.at(9, -8) == 3);
    CHECK(wide.at(9, 8) == 3);
    CHECK(wide.entries().size() == 5);
    CHECK(nl_symmetry_extend(wide, -10, -8, 8) == wide);

    NLTable clash(4);
    clash.insert(1, 0, 1);
    clash.insert(3, 4, 2);
    CHECK_THROWS_AS(nl_symmetry_extend(clash, -10, 0, 4), ConsistencyError);
    CHECK_THROWS_AS(nl_symmetry_extend(NLTable(3), -10, 0, 3), UnsupportedError);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        RandomTableOptions opts;
        opts.ell = 2 * (1 + i % 4);
        const auto spec = random_fibration(rng, opts);
        const auto e = nl_symmetry_extend(spec.nl, -40, -3 * opts.ell, 4 * opts.ell);
        for (const auto& [key, v] : spec.nl.entries())
            CHECK(e.at(key.first, key.second) == v);
        for (const auto& [key, v] : e.entries()) {
            CHECK(within_nl_bound(key.first, key.second, opts.ell));
            if (key.second + opts.ell <= 4 * opts.ell)
                CHECK(e.at(key.first + key.second + opts.ell / 2, key.second + opts.ell) == v);
        }
    }
}

TEST_CASE("DT from NL numbers")
{
    const auto empty = spec_with(4, 2, {});
    CHECK(dt_from_nl(empty, {1, 4, 1, 2}) == 0);
    CHECK(dt_from_nl(empty, {1, 4, 3, -7}) == 0);
    // Both the NL sum and the k term carry the same factor 1/2.
    CHECK(dt_from_nl(empty, {1, 4, 0, 2}) == -1);
    CHECK(dt_from_nl(empty, {1, 4, 0, 1}) == -24);

    const auto single = spec_with(4, 0, {{1, 1, 1}});
    CHECK(dt_from_nl(single, {1, 4, 1, 2}) == fraction(1, 2));
    CHECK(dt_from_nl(single, {1, 4, 1, 0}) == 162);
    CHECK(dt_from_nl(single, {1, 4, 1, 3}) == 0);
    CHECK_THROWS_AS(dt_from_nl(single, {1, 2, 1, 2}), DomainError);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        RandomTableOptions opts;
        opts.ell = 2 * (1 + i % 3);
        const auto s = random_fibration(rng, opts);
        for (long d = 0; d < opts.ell; ++d)
            for (long c = -6; c <= 3; ++c)
                CHECK(dt_from_nl(s, {1, opts.ell, d, c}) == dt_oracle(s, d, c));
    }
}

TEST_CASE("symmetry partners")
{
    auto p = dt_symmetry_pair(1, 4, 0, 0);
    CHECK(p.d == 4);
    CHECK(p.c == 2);
    CHECK(p.valid);
    p = dt_symmetry_pair(2, 4, 1, 0);
    CHECK(p.d == 5);
    CHECK(p.c == fraction(3, 2));
    CHECK_FALSE(p.valid);
    p = dt_symmetry_pair(1, 2, 0, 5);
    CHECK(p.d == 2);
    CHECK(p.c == 6);
    CHECK(p.valid);

    std::mt19937_64 rng(3);
    for (long ell : {2, 4, 6, 8}) {
        const auto s = random_symmetric_fibration(rng, ell, 6);
        for (long d = -ell; d < 2 * ell; ++d)
            for (long c = -5; c <= 5; ++c) {
                const auto q = dt_symmetry_pair(1, ell, d, c);
                REQUIRE(q.valid);
                CHECK(dt_from_nl(s, {1, ell, d, c}) == dt_from_nl(s, {1, ell, q.d, to_long(q.c.get_num())}));
            }
    }
}

TEST_CASE("Phi series")
{
    CHECK(phi_series(spec_with(4, 0, {}), 0, 5).is_zero());
    const auto c0 = phi_series(spec_with(4, 0, {{1, 0, 7}}), 0, 5);
    CHECK(c0.grid() == 8);
    CHECK(c0.coefficient(0) == 7);
    CHECK(c0.terms().size() == 1);

    const auto row1 = phi_series(spec_with(4, 0, {{1, 1, 2}, {0, 1, 3}, {-2, 1, 5}}), 1, 5);
    CHECK(row1.coefficient(fraction(1, 8)) == 2);
    CHECK(row1.coefficient(fraction(9, 8)) == 3);
    CHECK(row1.coefficient(fraction(25, 8)) == 5);
    CHECK(row1.valuation() >= 0);

    // Truncation drops the terms above q^terms.
    const auto low = phi_series(spec_with(4, 0, {{-5, 0, 1}}), 0, 3);
    CHECK(low.is_zero());
    CHECK(low.precision() == Rational(3));
}

TEST_CASE("Z series")
{
    const auto zero = z_series_closed(spec_with(4, 0, {}), 6);
    REQUIRE(zero.size() == 4);
    for (const auto& z : zero)
        CHECK(z.is_zero());

    const auto kterm = z_component_closed(spec_with(4, 2, {}), 0, 3);
    CHECK(kterm.coefficient(-1) == -1);
    CHECK(kterm.coefficient(0) == -24);
    CHECK(kterm.coefficient(1) == -324);

    const auto two = z_component_closed(spec_with(4, 0, {{1, 0, 2}}), 0, 3);
    CHECK(two.coefficient(-1) == 1);
    CHECK(two.coefficient(0) == 24);
    CHECK(two.coefficient(1) == 324);
    CHECK(two.coefficient(2) == 3200);

    const auto single = z_component_direct(spec_with(4, 0, {{1, 1, 1}}), 1, 3);
    // The c = 2 cell leads: exponent 1 + 1/8 - 2.
    CHECK(*single.valuation() == fraction(-7, 8));
    CHECK(single.coefficient(fraction(-7, 8)) == fraction(1, 2));
    CHECK(single.coefficient(fraction(1, 8)) == 12);

    CHECK_THROWS_AS(z_series_direct(spec_with(4, 0, {}), 3, 2), UnsupportedError);
}

TEST_CASE("closed and direct Z agree")
{
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 30; ++i) {
        RandomTableOptions opts;
        opts.ell = 2 * (1 + i % 3);
        const auto s = random_fibration(rng, opts);
        const auto a = z_series_closed(s, 10);
        const auto b = z_series_direct(s, 10);
        REQUIRE(a.size() == std::size_t(opts.ell));
        for (std::size_t d = 0; d < a.size(); ++d) {
            CHECK(a[d] == b[d]);
            CHECK(a[d].grid() == 2 * opts.ell);
            CHECK(a[d].precision() == Rational(10));
        }
    }
    // Non-K3 fibers route the Euler number through both paths.
    auto s = spec_with(2, 1, {{1, 0, 3}, {0, 1, fraction(1, 3)}});
    s.euler = 12;
    const auto a = z_series_closed(s, 6);
    const auto b = z_series_direct(s, 6);
    for (std::size_t d = 0; d < a.size(); ++d)
        CHECK(a[d] == b[d]);
}

TEST_CASE("Z is periodic in d on symmetric tables")
{
    std::mt19937_64 rng(8);
    for (long ell : {2, 4, 6}) {
        const auto s = random_symmetric_fibration(rng, ell, 5);
        for (long d = 0; d < ell; ++d) {
            CHECK(phi_series(s, d + ell, 8) == phi_series(s, d, 8));
            CHECK(z_component_closed(s, d + ell, 8) == z_component_closed(s, d, 8));
            CHECK(z_component_direct(s, d + ell, 8) == z_component_direct(s, d, 8));
        }
    }
}

TEST_CASE("bundled fixtures match frozen prefixes")
{
    int seen = 0;
    for (const auto& entry : std::filesystem::directory_iterator(fixtures)) {
        const auto path = entry.path();
        const auto name = path.filename().string();
        if (path.extension() != ".json" || name.ends_with(".expected.json"))
            continue;
        INFO(name);
        const auto spec = nl_load_file(path);
        auto expected_path = path;
        expected_path.replace_extension(".expected.json");
        std::ifstream in(expected_path);
        REQUIRE(in);
        const auto expected = nlohmann::json::parse(in);
        const int terms = expected.at("terms").get<int>();
        const auto closed = z_series_closed(spec, terms);
        const auto direct = z_series_direct(spec, terms);
        for (const auto& comp : expected.at("z")) {
            const long d = comp.at("d").get<long>();
            std::vector<std::pair<Rational, Rational>> pairs;
            for (const auto& p : comp.at("series"))
                pairs.emplace_back(parse_rational(p.at(0).get<std::string>()),
                                   parse_rational(p.at(1).get<std::string>()));
            const PuiseuxSeries want(static_cast<int>(2 * spec.ell), pairs, Rational(terms));
            CHECK(closed.at(d) == want);
            CHECK(direct.at(d) == want);
        }
        ++seen;
    }
    CHECK(seen == 4);
}
