#pragma once

#include "dtk/qseries.hpp"
#include "dtk/rational.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dtk {

/// Mukai vector v = (r, beta, beta^2/2 - tau + r) of a rank-r sheaf on a K3
/// fiber with c1 = beta and c2 = tau. Only beta^2 enters the formulas.
class MukaiVector {
public:
    long r() const { return r_; }
    long beta_sq() const { return beta_sq_; }
    long tau() const { return tau_; }
    /// Third component beta^2/2 - tau + r.
    long s() const { return beta_sq_ / 2 - tau_ + r_; }
    /// ch_3 = beta^2/2 - tau.
    long omega() const { return beta_sq_ / 2 - tau_; }
    /// Noether-Lefschetz index with beta^2 = 2h - 2.
    long h() const { return beta_sq_ / 2 + 1; }

    friend MukaiVector mukai_from_data(long r, long beta_sq, long tau);

private:
    MukaiVector(long r, long beta_sq, long tau) : r_(r), beta_sq_(beta_sq), tau_(tau) {}

    long r_;
    long beta_sq_;
    long tau_;
};

/// Throws DomainError unless r >= 1 and beta_sq is even and >= -2.
MukaiVector mukai_from_data(long r, long beta_sq, long tau);

/// Hilbert polynomial P(m) = (r ell / 2) m^2 + d m + c of a sheaf supported on
/// a K3 fiber, where ell = F.L^2 and d = L.gamma.
struct HilbertPolyK3 {
    long r = 1;
    long ell = 1;
    long d = 0;
    long c = 0;

    /// The polynomial of a sheaf with Mukai vector v: c = omega + 2r.
    static HilbertPolyK3 from_mukai(const MukaiVector& v, long ell, long d);

    Rational operator()(const Rational& m) const;
};

/// Dimension 2 + 2r^2 + beta^2 - 2 r P(0) of the moduli space of sheaves with
/// Mukai vector v on a K3 surface.
long moduli_dim(const MukaiVector& v, long p0);

/// n with M(S; v) deformation equivalent to Hilb^n(S):
/// n = r tau - (r-1) beta^2/2 - r^2 + 1 = h - r omega - r^2.
/// Both expressions are evaluated; disagreement is a ConsistencyError.
long hilb_index(const MukaiVector& v);

/// The two closed forms of hilb_index for arbitrary integers (exact
/// rationals, so odd beta^2 is allowed).
std::pair<Rational, Rational> hilb_index_forms(long r, long beta_sq, long tau);

/// h <= 1 + d^2 / (2 ell), the range where NL_{h,d} may be nonzero.
bool within_nl_bound(long h, long d, long ell);

/// Finitely supported Noether-Lefschetz numbers NL_{h,d} of a fibration with
/// ell = F.L^2. Every stored entry is nonzero and satisfies the vanishing
/// bound.
class NLTable {
public:
    using Key = std::pair<long, long>; // (h, d)

    explicit NLTable(long ell = 1);

    long ell() const { return ell_; }
    const std::map<Key, Rational>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    Rational at(long h, long d) const;

    /// Adds an entry. Throws ValidationError naming (h, d) when the entry
    /// violates the vanishing bound or the cell is already set.
    void insert(long h, long d, const Rational& value);

    /// Entries with the given d, as (h, value).
    std::vector<std::pair<long, Rational>> row(long d) const;

    friend bool operator==(const NLTable&, const NLTable&) = default;

private:
    long ell_;
    std::map<Key, Rational> entries_;
};

/// Everything the DT formulas need about a K3 fibration. The table always
/// describes the nodal-resolution family; for a smooth fibration it is the
/// table of two disjoint copies, so one factor 1/2 applies to both cases.
struct FibrationSpec {
    long ell = 1;
    /// Degree of the invertible sheaf K on the base curve.
    long k = 0;
    /// Fiber Euler number (24 for K3).
    int euler = 24;
    NLTable nl{1};
    bool nodal = false;
};

/// Parses and validates an NL table document:
///   { "ell": int, "k": int, "euler": int (default 24), "nodal": bool,
///     "nl": [ { "h": int, "d": int, "value": "p/q" }, ... ] }
/// Malformed input throws ParseError; schema violations, duplicate cells and
/// bound violations throw ValidationError. Messages carry `source` and the
/// line of the offending entry.
FibrationSpec nl_load(std::string_view document, std::string_view source = "<input>");
FibrationSpec nl_load_file(const std::filesystem::path& path);

/// Serializes a spec back to the document format (values as exact strings).
std::string nl_dump(const FibrationSpec& spec);

/// Closes the table under NL_{h,d} = NL_{h+d+ell/2, d+ell} inside the window
/// d_lo <= d <= d_hi, h >= h_lo. Each entry's orbit is followed in both
/// directions; existing entries are left unchanged. Throws UnsupportedError
/// for odd ell and ConsistencyError when two routes give one cell different
/// values.
NLTable nl_symmetry_extend(const NLTable& table, long h_lo, long d_lo, long d_hi);

/// DT(X; P) = 1/2 [ sum_h chi(Hilb^{r^2+h-rc}) NL_{h,d} - [d=0] k chi(Hilb^{r^2+1-rc}) ]
/// with chi taken for the fiber Euler number. Throws DomainError when
/// P.ell differs from the spec.
Rational dt_from_nl(const FibrationSpec& spec, const HilbertPolyK3& p);

/// Phi_d(q) = q^{1 + d^2/(2 ell)} sum_h NL_{h,d} q^{-h} on grid 1/(2 ell),
/// truncated at q^terms.
PuiseuxSeries phi_series(const FibrationSpec& spec, long d, int terms);

/// Z_d from the closed form (Phi_d - k [d=0]) / (2 q prod (1-q^n)^euler),
/// components d = 0..ell-1, each truncated at q^terms.
std::vector<PuiseuxSeries> z_series_closed(const FibrationSpec& spec, int terms);
PuiseuxSeries z_component_closed(const FibrationSpec& spec, long d, int terms);

/// Z_d from its definition q^{1 + d^2/(2 ell)} sum_c DT(X; (ell/2)m^2 + dm + c) q^{-c}
/// with DT from dt_from_nl. Only rank 1 is defined; other r throw
/// UnsupportedError.
std::vector<PuiseuxSeries> z_series_direct(const FibrationSpec& spec, int terms, long r = 1);
PuiseuxSeries z_component_direct(const FibrationSpec& spec, long d, int terms);

struct SymmetryPair {
    long d;
    Rational c;
    bool valid; // c is an integer
};

/// Partner of (d, c) under DT((r ell/2)m^2 + dm + c) = DT((r ell/2)m^2 + (d+ell)m + c'),
/// c' = c + (2d + ell) / (2r).
SymmetryPair dt_symmetry_pair(long r, long ell, long d, long c);

} // namespace dtk
