#include "dtk/partitions.hpp"

#include "dtk/errors.hpp"

#include <numeric>
#include <stdexcept>

namespace dtk {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(Box b) const
{
    return b.row >= 0 && b.col >= 0 && b.row < length() && b.col < parts_[b.row];
}

std::vector<Box> Partition::boxes() const
{
    std::vector<Box> out;
    out.reserve(size_);
    for (int r = 0; r < length(); ++r)
        for (int c = 0; c < parts_[r]; ++c)
            out.push_back({r, c});
    return out;
}

std::string Partition::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

int arm(const Partition& p, Box b)
{
    if (!p.contains(b))
        throw DomainError("box (" + std::to_string(b.row) + "," + std::to_string(b.col) + ") is not in " +
                          p.to_string());
    // Parts are weakly decreasing, so the rows reaching column b.col are a prefix.
    int r = b.row + 1;
    auto parts = p.parts();
    while (r < p.length() && parts[r] > b.col)
        ++r;
    return r - b.row - 1;
}

int leg(const Partition& p, Box b)
{
    if (!p.contains(b))
        throw DomainError("box (" + std::to_string(b.row) + "," + std::to_string(b.col) + ") is not in " +
                          p.to_string());
    return p.parts()[b.row] - b.col - 1;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        prefix.push_back(k);
        partitions_rec(remaining - k, k, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n)
{
    std::vector<Partition> out;
    if (n < 0)
        return out;
    std::vector<int> prefix;
    partitions_rec(n, n, prefix, out);
    return out;
}

std::string PartitionTriple::to_string() const
{
    return "[" + p1.to_string() + "," + p2.to_string() + "," + p3.to_string() + "]";
}

std::vector<PartitionTriple> enumerate_triples(int n)
{
    std::vector<PartitionTriple> out;
    if (n < 0)
        return out;
    std::vector<std::vector<Partition>> by_size(n + 1);
    for (int m = 0; m <= n; ++m)
        by_size[m] = enumerate_partitions(m);

    for (int n1 = 0; n1 <= n; ++n1)
        for (int n2 = 0; n1 + n2 <= n; ++n2) {
            const int n3 = n - n1 - n2;
            for (const auto& a : by_size[n1])
                for (const auto& b : by_size[n2])
                    for (const auto& c : by_size[n3])
                        out.emplace_back(a, b, c);
        }
    return out;
}

} // namespace dtk
