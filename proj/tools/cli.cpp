#include "cli.hpp"

#include "dtk/errors.hpp"
#include "dtk/localization.hpp"
#include "dtk/nl_dt.hpp"
#include "dtk/qseries.hpp"
#include "dtk/random_tables.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#ifndef DTK_FIXTURE_DIR
#define DTK_FIXTURE_DIR "fixtures"
#endif

namespace dtk::cli {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

enum class Format { human, structured };

json series_json(const PuiseuxSeries& s)
{
    json pairs = json::array();
    for (const auto& [e, c] : s.serialize())
        pairs.push_back(json::array({e, c}));
    return pairs;
}

json component_json(long d, const PuiseuxSeries& s)
{
    json j;
    j["d"] = d;
    j["series"] = series_json(s);
    if (auto p = s.precision())
        j["precision"] = p->get_str();
    return j;
}

// ---------------------------------------------------------------------------
// check: the invariant suite

class CheckRun {
public:
    explicit CheckRun(std::ostream& out) : out_(out) {}

    void check(const std::string& name, const std::function<std::string()>& body)
    {
        try {
            const std::string detail = body();
            out_ << "[PASS] " << name << (detail.empty() ? "" : ": " + detail) << '\n';
        } catch (const std::exception& e) {
            ++failures_;
            out_ << "[FAIL] " << name << ": " << e.what() << '\n';
        }
    }

    int failures() const { return failures_; }

private:
    std::ostream& out_;
    int failures_ = 0;
};

void require(bool condition, const std::string& what)
{
    if (!condition)
        throw ConsistencyError(what);
}

bool series_match(const PuiseuxSeries& a, const PuiseuxSeries& b)
{
    return (a - b).is_zero() && a.precision() == b.precision();
}

std::vector<fs::path> fixture_files(const fs::path& dir)
{
    std::vector<fs::path> files;
    if (!fs::is_directory(dir))
        return files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        const auto name = entry.path().filename().string();
        if (entry.is_regular_file() && entry.path().extension() == ".json" && !name.ends_with(".expected.json"))
            files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    return files;
}

std::string compare_expected(const FibrationSpec& spec, const fs::path& expected_path)
{
    std::ifstream in(expected_path);
    const auto expected = nlohmann::json::parse(in);
    const int terms = expected.at("terms").get<int>();
    const auto closed = z_series_closed(spec, terms);
    for (const auto& comp : expected.at("z")) {
        const long d = comp.at("d").get<long>();
        std::vector<std::pair<Rational, Rational>> pairs;
        for (const auto& p : comp.at("series"))
            pairs.emplace_back(parse_rational(p.at(0).get<std::string>()), parse_rational(p.at(1).get<std::string>()));
        const PuiseuxSeries want(static_cast<int>(2 * spec.ell), pairs, Rational(terms));
        require(series_match(closed.at(d), want), "Z_" + std::to_string(d) + " differs from the frozen prefix");
    }
    return "matches frozen prefix to q^" + std::to_string(terms);
}

int run_check(std::uint64_t seed, const fs::path& fixtures, std::ostream& out)
{
    CheckRun run(out);
    out << "seed " << seed << '\n';

    run.check("localization constancy n<=4 (symbolic)", [] {
        std::string values;
        for (int n = 0; n <= 4; ++n) {
            const auto c = symbolic_fixed_point_sum(n).as_constant();
            require(c.has_value(), "fixed-point sum for n = " + std::to_string(n) + " is not constant");
            values += (n ? ", " : "") + c->get_str();
        }
        return values;
    });

    run.check("localization sampled n=5", [&] {
        IntegralOptions opts;
        opts.mode = IntegralMode::sampled;
        opts.seed = seed;
        const auto r = hilb_chern_integral(5, opts);
        std::string pts;
        for (const auto& t : r.sample_points)
            pts += (pts.empty() ? "" : ", ") + t.get_str();
        return r.value.get_str() + " at t = " + pts;
    });

    run.check("character cardinalities n<=6", [] {
        std::size_t count = 0;
        for (int n = 0; n <= 6; ++n)
            for (const auto& t : enumerate_triples(n)) {
                require(tangent_character(t).size() == std::size_t(2 * n) &&
                            obstruction_character(t).size() == std::size_t(2 * n),
                        "wrong character size at " + t.to_string());
                ++count;
            }
        return std::to_string(count) + " triples";
    });

    run.check("character quotient = direct contribution, total<=4", [] {
        std::size_t count = 0;
        for (int n = 0; n <= 4; ++n)
            for (const auto& t : enumerate_triples(n)) {
                require(weight_quotient(obstruction_character(t), tangent_character(t)) ==
                            fixed_point_contribution(t),
                        "routes differ at " + t.to_string());
                ++count;
            }
        return std::to_string(count) + " triples";
    });

    run.check("eta^24 * sum chi(Hilb^m) q^(m-1) = 1 to q^30", [] {
        const auto product = eta24(32) * series_shift(goettsche_series(24, 32), -1);
        require(series_match(product.truncated(30), PuiseuxSeries::constant(1).truncated(30)), "identity fails");
        require(hilb_euler(1, 24) == 24, "chi(Hilb^1) != 24");
        return std::string();
    });

    run.check("Hilbert scheme index forms agree", [] {
        for (long r = 1; r <= 4; ++r)
            for (long b = -20; b <= 20; ++b)
                for (long tau = -20; tau <= 20; ++tau) {
                    auto [x, y] = hilb_index_forms(r, b, tau);
                    require(x == y, "forms differ");
                }
        return std::string();
    });

    const auto files = fixture_files(fixtures);
    if (files.empty())
        run.check("bundled fixtures", [&]() -> std::string {
            throw ValidationError("no fixtures found in " + fixtures.string());
        });
    for (const auto& file : files) {
        const std::string name = "fixture " + file.filename().string();
        std::optional<FibrationSpec> spec;
        run.check(name + " loads", [&] {
            spec = nl_load_file(file);
            return std::to_string(spec->nl.entries().size()) + " entries";
        });
        if (!spec)
            continue;
        run.check(name + " closed = direct to q^10", [&] {
            const auto a = z_series_closed(*spec, 10);
            const auto b = z_series_direct(*spec, 10);
            for (std::size_t d = 0; d < a.size(); ++d)
                require(series_match(a[d], b[d]), "component d = " + std::to_string(d) + " differs");
            return std::string();
        });
        fs::path expected = file;
        expected.replace_extension(".expected.json");
        if (fs::exists(expected))
            run.check(name + " expected prefix", [&] { return compare_expected(*spec, expected); });
    }

    std::mt19937_64 rng(seed);
    run.check("closed = direct on 20 random fixtures", [&] {
        std::string ks;
        for (int i = 0; i < 20; ++i) {
            RandomTableOptions opts;
            opts.ell = 2 * (1 + i % 3);
            const auto spec = random_fibration(rng, opts);
            const auto a = z_series_closed(spec, 10);
            const auto b = z_series_direct(spec, 10);
            for (std::size_t d = 0; d < a.size(); ++d)
                require(series_match(a[d], b[d]), "fixture " + std::to_string(i) + " component " +
                                                      std::to_string(d) + " differs");
            ks += (i ? "," : "") + std::to_string(spec.k);
        }
        return "k = " + ks;
    });

    run.check("DT symmetry pairs on closed tables", [&] {
        std::size_t compared = 0;
        for (long ell : {2, 4, 6}) {
            const auto spec = random_symmetric_fibration(rng, ell, 6);
            for (long d = 0; d < ell; ++d)
                for (long c = -5; c <= 5; ++c) {
                    const auto partner = dt_symmetry_pair(1, ell, d, c);
                    if (!partner.valid)
                        continue;
                    const Rational lhs = dt_from_nl(spec, {1, ell, d, c});
                    const Rational rhs = dt_from_nl(spec, {1, ell, partner.d, to_long(partner.c.get_num())});
                    require(lhs == rhs, "DT(" + std::to_string(d) + "," + std::to_string(c) + ") = " +
                                            lhs.get_str() + " but partner gives " + rhs.get_str());
                    ++compared;
                }
        }
        return std::to_string(compared) + " cells";
    });

    run.check("symmetry extension keeps the vanishing bound", [&] {
        for (int i = 0; i < 50; ++i) {
            RandomTableOptions opts;
            opts.ell = 2 * (1 + i % 4);
            const auto spec = random_fibration(rng, opts);
            const auto ext = nl_symmetry_extend(spec.nl, -30, -3 * opts.ell, 4 * opts.ell);
            for (const auto& [key, v] : ext.entries())
                require(within_nl_bound(key.first, key.second, ext.ell()), "bound violated");
        }
        return std::string();
    });

    out << (run.failures() == 0 ? "all checks passed" : std::to_string(run.failures()) + " check(s) failed") << '\n';
    return run.failures() == 0 ? ok : consistency_failure;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact Donaldson-Thomas computations: localization on Hilb^n(P^2) and K3-fibration generating "
                 "series"};
    app.require_subcommand(1);

    std::string format_name = "human";
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"human", "structured"}))
        ->capture_default_str();

    // p3
    auto* p3 = app.add_subcommand("p3", "Integral of c_2n over Hilb^n(P^2) (DT invariant of P^3 with a point insertion)");
    std::optional<long> p3_n, p3_s, p3_d;
    std::string p3_mode = "symbolic";
    std::uint64_t p3_seed = 0x5eed;
    unsigned p3_workers = 1;
    bool p3_verbose = false;
    p3->add_option("--n", p3_n, "Number of points");
    p3->add_option("--s", p3_s, "Twist s of P(m) = m^2/2 + (s+3/2)m + d");
    p3->add_option("--d", p3_d, "Constant term d of P");
    p3->add_option("--mode", p3_mode)->check(CLI::IsMember({"symbolic", "sampled"}))->capture_default_str();
    p3->add_option("--seed", p3_seed, "Seed for sampled mode")->capture_default_str();
    p3->add_option("--workers", p3_workers)->check(CLI::Range(1u, 256u))->capture_default_str();
    p3->add_flag("--verbose", p3_verbose, "Print fixed points and their contributions");

    // goettsche
    auto* goe = app.add_subcommand("goettsche", "Euler characteristics of Hilbert schemes of points");
    int goe_euler = 24;
    int goe_terms = 10;
    goe->add_option("--euler", goe_euler, "Euler number of the surface")->capture_default_str();
    goe->add_option("--terms", goe_terms, "Highest power of q")->check(CLI::PositiveNumber)->capture_default_str();

    // phi, z, dt, nl-validate, nl-extend share --nl
    std::string nl_path;
    auto* phi = app.add_subcommand("phi", "Noether-Lefschetz generating series Phi_d");
    std::optional<long> phi_d;
    int phi_terms = 10;
    phi->add_option("--nl", nl_path, "NL table document")->required()->check(CLI::ExistingFile);
    phi->add_option("--d", phi_d, "Single component");
    phi->add_option("--terms", phi_terms, "Truncate at q^terms")->capture_default_str();

    auto* z = app.add_subcommand("z", "Generating series Z(X, q) = (Phi - k v_0) / (2 eta^24)");
    std::optional<long> z_d;
    int z_terms = 10;
    bool z_check = false;
    z->add_option("--nl", nl_path, "NL table document")->required()->check(CLI::ExistingFile);
    z->add_option("--d", z_d, "Single component");
    z->add_option("--terms", z_terms, "Truncate at q^terms")->check(CLI::NonNegativeNumber)->capture_default_str();
    z->add_flag("--check", z_check, "Also evaluate the defining sum and compare");

    auto* dt = app.add_subcommand("dt", "DT invariant of a K3 fibration for P(m) = (r ell/2)m^2 + dm + c");
    long dt_r = 1, dt_d = 0, dt_c = 0;
    dt->add_option("--nl", nl_path, "NL table document")->required()->check(CLI::ExistingFile);
    dt->add_option("--r", dt_r, "Rank")->check(CLI::PositiveNumber)->capture_default_str();
    dt->add_option("--d", dt_d, "Linear coefficient")->required();
    dt->add_option("--c", dt_c, "Constant term")->required();

    auto* validate = app.add_subcommand("nl-validate", "Validate an NL table document");
    validate->add_option("--nl", nl_path, "NL table document")->required()->check(CLI::ExistingFile);

    auto* extend = app.add_subcommand("nl-extend", "Close an NL table under the Noether-Lefschetz symmetry");
    long ext_h_lo = -20, ext_d_lo = 0, ext_d_hi = 0;
    extend->add_option("--nl", nl_path, "NL table document")->required()->check(CLI::ExistingFile);
    extend->add_option("--h-lo", ext_h_lo, "Smallest h written")->capture_default_str();
    extend->add_option("--d-lo", ext_d_lo, "Window start")->required();
    extend->add_option("--d-hi", ext_d_hi, "Window end")->required();

    auto* check = app.add_subcommand("check", "Run the invariant suite");
    std::uint64_t check_seed = 17;
    std::string check_fixtures = DTK_FIXTURE_DIR;
    check->add_option("--seed", check_seed, "Seed for randomized checks")->capture_default_str();
    check->add_option("--fixtures", check_fixtures, "Directory of NL fixtures")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }

    const Format format = format_name == "structured" ? Format::structured : Format::human;

    try {
        if (*p3) {
            long n = 0;
            if (p3_n && !p3_s && !p3_d) {
                n = *p3_n;
                if (n < 0)
                    throw DomainError("--n must be nonnegative");
            } else if (!p3_n && p3_s && p3_d) {
                n = p3_point_count(*p3_s, *p3_d);
            } else {
                err << "error: p3 needs either --n or both --s and --d\n";
                return usage_error;
            }
            IntegralOptions opts;
            opts.mode = p3_mode == "sampled" ? IntegralMode::sampled : IntegralMode::symbolic;
            opts.seed = p3_seed;
            opts.workers = p3_workers;
            const auto result = hilb_chern_integral(static_cast<int>(n), opts);

            if (format == Format::structured) {
                json j;
                j["n"] = n;
                j["mode"] = p3_mode;
                j["fixed_points"] = result.fixed_points;
                j["value"] = result.value.get_str();
                if (!result.sample_points.empty()) {
                    j["sample_points"] = json::array();
                    for (const auto& t : result.sample_points)
                        j["sample_points"].push_back(t.get_str());
                }
                out << j.dump() << '\n';
                return ok;
            }
            if (p3_verbose) {
                out << "n = " << n << '\n' << "fixed points: " << result.fixed_points << '\n';
                for (const auto& t : enumerate_triples(static_cast<int>(n)))
                    out << "  " << t.to_string() << "  " << fixed_point_contribution(t).to_string() << '\n';
                for (const auto& t : result.sample_points)
                    out << "sample t = " << t.get_str() << '\n';
            }
            out << result.value.get_str() << '\n';
            return ok;
        }

        if (*goe) {
            const auto s = goettsche_series(goe_euler, goe_terms);
            if (format == Format::structured) {
                out << series_json(s).dump() << '\n';
                return ok;
            }
            for (int m = 0; m <= goe_terms; ++m)
                out << (m ? ", " : "") << s.coefficient(m).get_str();
            out << '\n';
            return ok;
        }

        if (*phi || *z) {
            const auto spec = nl_load_file(nl_path);
            std::vector<long> ds;
            const auto& single = *phi ? phi_d : z_d;
            if (single)
                ds.push_back(*single);
            else
                for (long d = 0; d < spec.ell; ++d)
                    ds.push_back(d);

            json all = json::array();
            bool mismatch = false;
            for (long d : ds) {
                const PuiseuxSeries s = *phi ? phi_series(spec, d, phi_terms) : z_component_closed(spec, d, z_terms);
                if (*z && z_check && !series_match(s, z_component_direct(spec, d, z_terms))) {
                    mismatch = true;
                    err << "closed and direct series differ for d = " << d << '\n';
                }
                if (format == Format::structured)
                    all.push_back(component_json(d, s));
                else
                    out << (*phi ? "Phi_" : "Z_") << d << " = " << s.to_string() << '\n';
            }
            if (format == Format::structured)
                out << all.dump() << '\n';
            if (*z && z_check) {
                out << (mismatch ? "closed = direct: MISMATCH" : "closed = direct: OK") << '\n';
                if (mismatch)
                    return consistency_failure;
            }
            return ok;
        }

        if (*dt) {
            const auto spec = nl_load_file(nl_path);
            const Rational v = dt_from_nl(spec, {dt_r, spec.ell, dt_d, dt_c});
            if (format == Format::structured)
                out << json{{"r", dt_r}, {"d", dt_d}, {"c", dt_c}, {"dt", v.get_str()}}.dump() << '\n';
            else
                out << v.get_str() << '\n';
            return ok;
        }

        if (*validate) {
            const auto spec = nl_load_file(nl_path);
            out << "OK: ell=" << spec.ell << ", k=" << spec.k << ", euler=" << spec.euler
                << ", nodal=" << (spec.nodal ? "true" : "false") << ", entries=" << spec.nl.entries().size() << '\n';
            return ok;
        }

        if (*extend) {
            auto spec = nl_load_file(nl_path);
            spec.nl = nl_symmetry_extend(spec.nl, ext_h_lo, ext_d_lo, ext_d_hi);
            out << nl_dump(spec);
            return ok;
        }

        if (*check)
            return run_check(check_seed, check_fixtures, out);
    } catch (const ConsistencyError& e) {
        err << "internal consistency failure: " << e.what() << '\n';
        return consistency_failure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
    return usage_error;
}

} // namespace dtk::cli
