#include "dtk/localization.hpp"

#include "dtk/errors.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <random>
#include <set>

namespace dtk {

Character::Character(std::vector<Weight> terms) : terms_(std::move(terms))
{
    std::sort(terms_.begin(), terms_.end());
}

namespace {

struct ArmLeg {
    int a;
    int l;
};

std::vector<ArmLeg> arm_legs(const Partition& p)
{
    std::vector<ArmLeg> out;
    out.reserve(p.size());
    for (Box b : p.boxes())
        out.push_back({arm(p, b), leg(p, b)});
    return out;
}

// shift2 / shift3 are the extra t1 / t2 exponents applied to the p2 / p3 blocks.
Character fixed_point_character(const PartitionTriple& T, int shift2, int shift3)
{
    std::vector<Weight> w;
    w.reserve(2 * T.total);
    for (auto [a, l] : arm_legs(T.p1)) {
        w.push_back({l + 1, -a});
        w.push_back({-l, a + 1});
    }
    for (auto [a, l] : arm_legs(T.p2)) {
        w.push_back({a - l - 1 + shift2, -a});
        w.push_back({l - a - 1 + shift2, a + 1});
    }
    // Block three has the roles of t1 and t2 exchanged.
    for (auto [a, l] : arm_legs(T.p3)) {
        w.push_back({-a, a - l - 1 + shift3});
        w.push_back({a + 1, l - a - 1 + shift3});
    }
    return Character(std::move(w));
}

} // namespace

Character tangent_character(const PartitionTriple& triple)
{
    return fixed_point_character(triple, 0, 0);
}

Character obstruction_character(const PartitionTriple& triple)
{
    return fixed_point_character(triple, -1, -1);
}

RationalFunction fixed_point_contribution(const PartitionTriple& triple)
{
    Poly num = Poly::constant(1);
    Poly den = Poly::constant(1);
    // s1 = t, s2 = 1
    for (auto [a, l] : arm_legs(triple.p2)) {
        num *= Poly::linear(a - l - 2, -a) * Poly::linear(l - a - 2, a + 1);
        den *= Poly::linear(a - l - 1, -a) * Poly::linear(l - a - 1, a + 1);
    }
    for (auto [a, l] : arm_legs(triple.p3)) {
        num *= Poly::linear(-a, a - l - 2) * Poly::linear(a + 1, l - a - 2);
        den *= Poly::linear(-a, a - l - 1) * Poly::linear(a + 1, l - a - 1);
    }
    return RationalFunction(std::move(num), std::move(den));
}

Rational fixed_point_contribution_at(const PartitionTriple& triple, const Rational& t)
{
    Rational num = 1;
    Rational den = 1;
    auto factor = [&](const Rational& top, const Rational& bottom) {
        if (bottom == 0)
            throw PoleError("contribution of " + triple.to_string() + " has a pole at t = " + t.get_str());
        num *= top;
        den *= bottom;
    };
    for (auto [a, l] : arm_legs(triple.p2)) {
        factor((a - l - 2) * t - a, (a - l - 1) * t - a);
        factor((l - a - 2) * t + (a + 1), (l - a - 1) * t + (a + 1));
    }
    for (auto [a, l] : arm_legs(triple.p3)) {
        factor(Rational(a - l - 2) - a * t, Rational(a - l - 1) - a * t);
        factor(Rational(l - a - 2) + (a + 1) * t, Rational(l - a - 1) + (a + 1) * t);
    }
    return num / den;
}

RationalFunction weight_quotient(const Character& obstruction, const Character& tangent)
{
    // Both term lists are sorted, so the multiset difference is a merge.
    std::vector<Weight> top;
    std::vector<Weight> bottom;
    std::set_difference(obstruction.terms().begin(), obstruction.terms().end(), tangent.terms().begin(),
                        tangent.terms().end(), std::back_inserter(top));
    std::set_difference(tangent.terms().begin(), tangent.terms().end(), obstruction.terms().begin(),
                        obstruction.terms().end(), std::back_inserter(bottom));

    Poly num = Poly::constant(1);
    Poly den = Poly::constant(1);
    for (Weight w : top)
        num *= Poly::linear(w.i, w.j);
    for (Weight w : bottom) {
        if (w.i == 0 && w.j == 0)
            throw DomainError("tangent character has a zero weight; the fixed point is not isolated");
        den *= Poly::linear(w.i, w.j);
    }
    return RationalFunction(std::move(num), std::move(den));
}

namespace {

// Splits [0, items) into `workers` contiguous slices, reduces each slice on
// its own thread, then combines the partial sums in slice order.
template <class T, class Fn>
T parallel_sum(std::size_t items, unsigned workers, Fn slice_sum)
{
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(items, 1))));
    if (workers == 1)
        return slice_sum(std::size_t{0}, items);

    std::vector<std::future<T>> parts;
    parts.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t lo = items * w / workers;
        const std::size_t hi = items * (w + 1) / workers;
        parts.push_back(std::async(std::launch::async, slice_sum, lo, hi));
    }
    T total{};
    for (auto& f : parts)
        total += f.get();
    return total;
}

} // namespace

RationalFunction symbolic_fixed_point_sum(int n, unsigned workers)
{
    const auto triples = enumerate_triples(n);
    return parallel_sum<RationalFunction>(triples.size(), workers, [&](std::size_t lo, std::size_t hi) {
        RationalFunction acc;
        for (std::size_t k = lo; k < hi; ++k)
            acc += fixed_point_contribution(triples[k]);
        return acc;
    });
}

Rational sampled_fixed_point_sum(int n, const Rational& t, unsigned workers)
{
    const auto triples = enumerate_triples(n);
    return parallel_sum<Rational>(triples.size(), workers, [&](std::size_t lo, std::size_t hi) {
        Rational acc = 0;
        for (std::size_t k = lo; k < hi; ++k)
            acc += fixed_point_contribution_at(triples[k], t);
        return acc;
    });
}

IntegralResult hilb_chern_integral(int n, const IntegralOptions& options)
{
    if (n < 0)
        throw DomainError("Hilb^n needs n >= 0, got " + std::to_string(n));

    IntegralResult result;
    result.fixed_points = enumerate_triples(n).size();

    if (options.mode == IntegralMode::symbolic) {
        RationalFunction sum = symbolic_fixed_point_sum(n, options.workers);
        auto c = sum.as_constant();
        if (!c)
            throw ConsistencyError("fixed-point sum for n = " + std::to_string(n) +
                                   " is not constant: " + sum.to_string());
        result.value = *c;
        return result;
    }

    constexpr long bound = 1'000'000;
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<long> numerator(-bound, bound);
    std::uniform_int_distribution<long> denominator(1, bound);

    const unsigned wanted = std::max(3u, options.samples);
    std::vector<Rational> values;
    std::set<Rational> tried;
    while (result.sample_points.size() < wanted) {
        Rational t(numerator(rng), denominator(rng));
        t.canonicalize();
        if (!tried.insert(t).second)
            continue;
        try {
            values.push_back(sampled_fixed_point_sum(n, t, options.workers));
            result.sample_points.push_back(t);
        } catch (const PoleError&) {
            // resample
        }
    }
    for (const auto& v : values)
        if (v != values.front())
            throw ConsistencyError("sampled fixed-point sums for n = " + std::to_string(n) +
                                   " disagree: " + values.front().get_str() + " vs " + v.get_str());
    result.value = values.front();
    return result;
}

long p3_point_count(long s, long d)
{
    // s(s+3) is always even.
    const long n = s * (s + 3) / 2 - d + 1;
    if (n < 0)
        throw DomainError("s(s+3)/2 - d + 1 = " + std::to_string(n) + " is negative for s = " + std::to_string(s) +
                          ", d = " + std::to_string(d));
    return n;
}

Rational dt_p3(long s, long d, const IntegralOptions& options)
{
    const long n = p3_point_count(s, d);
    if (n > std::numeric_limits<int>::max())
        throw DomainError("point count " + std::to_string(n) + " out of range");
    return hilb_chern_integral(static_cast<int>(n), options).value;
}

} // namespace dtk
