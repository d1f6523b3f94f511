#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace dtk {

/// A cell of a Young diagram. Row `row` holds parts[row] boxes; rows are
/// stacked upwards, so "above" a box means a larger row index and "right"
/// means a larger column index.
struct Box {
    int row = 0;
    int col = 0;

    friend bool operator==(const Box&, const Box&) = default;
};

/// Integer partition stored as a weakly decreasing sequence of positive parts.
/// Immutable once constructed.
class Partition {
public:
    Partition() = default;

    /// Throws std::invalid_argument unless `parts` is weakly decreasing and
    /// strictly positive.
    explicit Partition(std::vector<int> parts);

    std::span<const int> parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    bool contains(Box b) const;

    /// Every box, row by row.
    std::vector<Box> boxes() const;

    /// Lexicographic comparison of the part sequences.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b)
    {
        return a.parts_ <=> b.parts_;
    }
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

    std::string to_string() const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Boxes strictly above `b` in its column. Throws DomainError if `b` is not
/// in `p`.
int arm(const Partition& p, Box b);

/// Boxes strictly to the right of `b` in its row. Throws DomainError if `b`
/// is not in `p`.
int leg(const Partition& p, Box b);

/// All partitions of n in lexicographically descending order of parts,
/// e.g. 4: (4), (3,1), (2,2), (2,1,1), (1,1,1,1). Empty for negative n.
std::vector<Partition> enumerate_partitions(int n);

struct PartitionTriple {
    Partition p1;
    Partition p2;
    Partition p3;
    int total = 0;

    PartitionTriple() = default;
    PartitionTriple(Partition a, Partition b, Partition c)
        : p1(std::move(a)), p2(std::move(b)), p3(std::move(c)), total(p1.size() + p2.size() + p3.size())
    {}

    friend bool operator==(const PartitionTriple&, const PartitionTriple&) = default;

    std::string to_string() const;
};

/// Every triple of partitions with total size n. Ordered by (|p1|, |p2|)
/// ascending, then by the partition order of p1, p2, p3.
std::vector<PartitionTriple> enumerate_triples(int n);

} // namespace dtk
