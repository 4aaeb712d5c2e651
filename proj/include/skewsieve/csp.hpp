#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewsieve/crystal.hpp"
#include "skewsieve/qpoly.hpp"

namespace skewsieve {

/// A hypothesis of the verified statement requires gcd(|shape|, n) = 1; the
/// checker refuses rather than guessing what the non-coprime case means.
class GcdError : public std::runtime_error {
public:
    GcdError(long long m, int n)
        : std::runtime_error("gcd(" + std::to_string(m) + ", " + std::to_string(n) +
                             ") != 1: hypothesis violated"),
          m_(m), n_(n) {}
    long long m() const { return m_; }
    int n() const { return n_; }

private:
    long long m_;
    int n_;
};

/// The given tableau set is not closed under cyclic_action.
class NotClosedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An orbit size fails to divide the cyclic group's order.
class OrbitSizeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A mathematically guaranteed identity failed on concrete data; always an
/// implementation bug, never expected.
class IdentityViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class Scope { FullSet, RefinedUnion };
enum class Verdict { Holds, Fails };

const char* to_string(Scope s);
const char* to_string(Verdict v);

/// First disagreeing residue: coefficient of q^power in the reduced
/// candidate (actual) versus the orbit generating function (expected).
struct CongruenceWitness {
    long long power;
    BigInt expected;
    BigInt actual;
};

/// Outcome of one sieving check: the candidate polynomial f, its canonical
/// reduction mod q^n - 1, the orbit structure, and the verdict
/// reduced == orbit_gf (which is equivalent to f matching all fixed-point
/// counts at roots of unity).
struct CspReport {
    SkewShape shape;
    int n = 0;
    Scope scope = Scope::FullSet;
    std::optional<WeakComposition> content;
    StatisticConvention convention = StatisticConvention::ZeroBased;
    std::vector<long long> orbit_sizes;  // ascending
    QPolynomial candidate;
    QPolynomial reduced;
    QPolynomial orbit_gf;
    Verdict verdict = Verdict::Fails;
    std::optional<CongruenceWitness> witness;

    bool holds() const { return verdict == Verdict::Holds; }

    /// Elements fixed by the k-th power of the action, from the orbit sizes.
    long long fixed_points(int k) const;
};

/// JSON serialization with fields: shape_outer, shape_inner, n, scope,
/// content (refined only), statistic_convention, orbit_sizes,
/// f_coefficients, f_reduced, orbit_gf, verdict, witness (failures only).
std::string to_json(const CspReport& report);

/// One tab-separated row: outer, inner, n, content, scope, orbit_sizes,
/// verdict.  Orbit sizes are run-length encoded ("size^count" ascending).
std::string to_tsv_row(const CspReport& report);
extern const char* const kTsvHeader;

/// Sum over orbits of size d of (1 + q^{n/d} + q^{2n/d} + ...); the unique
/// polynomial of degree < n whose root-of-unity values are the fixed-point
/// counts of the action.
QPolynomial orbit_generating_function(const std::vector<long long>& orbit_sizes, int n);

/// Fills reduced, orbit_gf, verdict, and witness from the candidate, the
/// orbit sizes, and n, which must already be set.
void complete_report(CspReport& report);

/// Count of t in X with cyclic_action^k(t) = t for k = 1..n, by explicit
/// iteration; index k-1 holds the count for power k.
std::vector<long long> fixed_point_counts(const std::vector<Tableau>& X, int n);

/// Checks whether (X, cyclic action, f) exhibits cyclic sieving, via the
/// congruence f = orbit_gf mod q^n - 1.  Root-of-unity values are never
/// computed numerically; for n <= 4 an integer-arithmetic evaluation at
/// each root cross-checks the congruence verdict.
CspReport verify_csp(const std::vector<Tableau>& X, int n, const QPolynomial& f,
                     StatisticConvention convention = StatisticConvention::ZeroBased,
                     Scope scope = Scope::FullSet,
                     std::optional<WeakComposition> content = std::nullopt);

/// Refined check on one content class: X = union of SSYT(shape, cyc_r(a))
/// over r = 1..n, f = one-based statistic_gf of X.  Requires
/// gcd(|shape|, n) = 1; every orbit must then have size exactly n.
CspReport verify_refined_csp(const SkewShape& shape, const WeakComposition& a, int n);

/// Full-set check: X = SSYT(shape, n), f = principal specialization.  When
/// shift_to_zero is set and the shape is straight, f is divided by the
/// smallest power of q predicted for it (q^{weighted_size(outer)}).
/// Requires gcd(|shape|, n) = 1.
CspReport verify_full_csp(const SkewShape& shape, int n,
                          StatisticConvention convention = StatisticConvention::ZeroBased,
                          bool shift_to_zero = false);

/// One-based statistic_gf over the union of the cyclic content classes of a
/// reduces mod q^n - 1 to c * [n]_q; returns c and checks it equals
/// kostka(shape, a).  Requires gcd(|shape|, n) = 1.
BigInt orbit_sum_multiplier(const SkewShape& shape, const WeakComposition& a, int n);

}  // namespace skewsieve
