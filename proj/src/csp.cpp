#include "skewsieve/csp.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace skewsieve {

namespace {

long long to_longlong(const BigInt& value) {
    if (value > std::numeric_limits<long long>::max() ||
        value < std::numeric_limits<long long>::min()) {
        throw std::overflow_error("coefficient does not fit a 64-bit report field");
    }
    return value.convert_to<long long>();
}

std::vector<long long> dense_coefficients(const QPolynomial& p, long long min_length) {
    long long top = p.max_exponent().value_or(0);
    std::vector<long long> out;
    out.reserve(static_cast<std::size_t>(std::max(top + 1, min_length)));
    for (long long e = 0; e <= top || e < min_length; ++e) out.push_back(to_longlong(p.coeff(e)));
    return out;
}

/// Orbit sizes of the cyclic action on X, ascending; throws NotClosedError
/// if the action leaves X.
std::vector<long long> orbit_decomposition(const std::vector<Tableau>& X) {
    std::set<Tableau> pending(X.begin(), X.end());
    std::vector<long long> sizes;
    while (!pending.empty()) {
        Tableau start = *pending.begin();
        Tableau current = start;
        long long size = 0;
        do {
            pending.erase(current);
            current = cyclic_action(current);
            ++size;
            if (static_cast<std::size_t>(size) > X.size()) {
                throw NotClosedError("cyclic action does not return to " + start.str() +
                                     " within the given set");
            }
            if (!(current == start) && pending.find(current) == pending.end()) {
                // Either outside X or already consumed by another walk; both
                // mean the set is not a disjoint union of cycles through it.
                throw NotClosedError("cyclic action leaves the given set at " + current.str());
            }
        } while (!(current == start));
        sizes.push_back(size);
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

/// Exact evaluation of the reduced polynomial at each n-th root of unity for
/// n <= 4, where every value is forced rational-integer.  Returns false when
/// some value is non-integral or disagrees with the fixed-point count.
bool roots_match_fixed_points(const QPolynomial& reduced, int n,
                              const std::vector<long long>& fixed) {
    auto r = [&](long long e) { return reduced.coeff(e); };
    auto fix = [&](int k) { return BigInt(fixed[static_cast<std::size_t>(k - 1)]); };
    switch (n) {
        case 1:
            return r(0) == fix(1);
        case 2:
            return r(0) - r(1) == fix(1) && r(0) + r(1) == fix(2);
        case 3:
            // Value at a primitive cube root is integral iff r1 = r2.
            return r(1) == r(2) && r(0) - r(1) == fix(1) && r(0) - r(1) == fix(2) &&
                   r(0) + r(1) + r(2) == fix(3);
        case 4:
            // Value at +-i is integral iff r1 = r3.
            return r(1) == r(3) && r(0) - r(2) == fix(1) && r(0) - r(2) == fix(3) &&
                   r(0) - r(1) + r(2) - r(3) == fix(2) && r(0) + r(1) + r(2) + r(3) == fix(4);
        default:
            throw std::logic_error("direct root evaluation only implemented for n <= 4");
    }
}

std::vector<Tableau> cyclic_class_union(const SkewShape& shape, const WeakComposition& a,
                                        int n) {
    if (static_cast<int>(a.length()) != n) {
        throw std::invalid_argument("content length " + std::to_string(a.length()) +
                                    " does not match alphabet size " + std::to_string(n));
    }
    std::vector<Tableau> X;
    for (int r = 1; r <= n; ++r) {
        std::vector<Tableau> part = enumerate_content(shape, cyclic_shift(a, r));
        X.insert(X.end(), part.begin(), part.end());
    }
    return X;
}

void require_coprime(const SkewShape& shape, int n) {
    long long m = shape.num_cells();
    if (std::gcd(m, static_cast<long long>(n)) != 1) {
        throw GcdError(m, n);
    }
}

}  // namespace

const char* to_string(Scope s) {
    return s == Scope::FullSet ? "full-set" : "refined-union";
}

const char* to_string(Verdict v) { return v == Verdict::Holds ? "holds" : "fails"; }

long long CspReport::fixed_points(int k) const {
    long long total = 0;
    for (long long d : orbit_sizes) {
        if (k % d == 0) total += d;
    }
    return total;
}

QPolynomial orbit_generating_function(const std::vector<long long>& orbit_sizes, int n) {
    if (n < 1) throw std::domain_error("orbit_generating_function requires n >= 1");
    QPolynomial p;
    for (long long d : orbit_sizes) {
        if (d < 1 || n % d != 0) {
            throw OrbitSizeError("orbit size " + std::to_string(d) + " does not divide " +
                                 std::to_string(n));
        }
        for (long long i = 0; i < d; ++i) p.add_term(i * (n / d), 1);
    }
    return p;
}

std::vector<long long> fixed_point_counts(const std::vector<Tableau>& X, int n) {
    if (n < 1) throw std::domain_error("fixed_point_counts requires n >= 1");
    std::set<Tableau> members(X.begin(), X.end());
    for (const Tableau& t : X) {
        if (t.alphabet() != n) {
            throw std::invalid_argument("tableau alphabet " + std::to_string(t.alphabet()) +
                                        " does not match n = " + std::to_string(n));
        }
    }
    std::vector<long long> counts(static_cast<std::size_t>(n), 0);
    for (const Tableau& t : X) {
        Tableau current = t;
        for (int k = 1; k <= n; ++k) {
            current = cyclic_action(current);
            if (members.find(current) == members.end()) {
                throw NotClosedError("cyclic action leaves the given set at " + current.str());
            }
            if (current == t) ++counts[static_cast<std::size_t>(k - 1)];
        }
    }
    return counts;
}

void complete_report(CspReport& report) {
    const int n = report.n;
    if (n < 1) throw std::domain_error("report completion requires n >= 1");
    report.reduced = reduce_mod_cyclic(report.candidate, n);
    report.orbit_gf = orbit_generating_function(report.orbit_sizes, n);
    report.verdict = Verdict::Holds;
    report.witness.reset();
    for (long long e = 0; e < n; ++e) {
        BigInt expected = report.orbit_gf.coeff(e);
        BigInt actual = report.reduced.coeff(e);
        if (expected != actual) {
            report.verdict = Verdict::Fails;
            report.witness = CongruenceWitness{e, expected, actual};
            break;
        }
    }
}

CspReport verify_csp(const std::vector<Tableau>& X, int n, const QPolynomial& f,
                     StatisticConvention convention, Scope scope,
                     std::optional<WeakComposition> content) {
    if (n < 1) throw std::domain_error("verify_csp requires n >= 1");
    CspReport report;
    if (!X.empty()) report.shape = X.front().shape();
    report.n = n;
    report.scope = scope;
    report.content = std::move(content);
    report.convention = convention;
    report.orbit_sizes = orbit_decomposition(X);
    report.candidate = f;
    complete_report(report);

    if (n <= 4) {
        // Second witness: exact integer evaluation at each root of unity must
        // agree with the congruence verdict.
        std::vector<long long> fixed = fixed_point_counts(X, n);
        bool direct = roots_match_fixed_points(report.reduced, n, fixed);
        if (direct != report.holds()) {
            throw std::logic_error("congruence and direct fixed-point evaluation disagree for n=" +
                                   std::to_string(n));
        }
    }
    return report;
}

CspReport verify_refined_csp(const SkewShape& shape, const WeakComposition& a, int n) {
    require_coprime(shape, n);
    std::vector<Tableau> X = cyclic_class_union(shape, a, n);
    QPolynomial f = statistic_gf(X, StatisticConvention::OneBased);
    CspReport report = verify_csp(X, n, f, StatisticConvention::OneBased, Scope::RefinedUnion,
                                  a);
    report.shape = shape;
    for (long long d : report.orbit_sizes) {
        if (d != n) {
            throw CrystalTheoryViolation("orbit of size " + std::to_string(d) +
                                         " in the class union of " + shape.str() + ", content " +
                                         a.str() + ", n=" + std::to_string(n) +
                                         " (every orbit must have size n)");
        }
    }
    return report;
}

CspReport verify_full_csp(const SkewShape& shape, int n, StatisticConvention convention,
                          bool shift_to_zero) {
    require_coprime(shape, n);
    std::vector<Tableau> X = enumerate(shape, n);
    QPolynomial f = principal_specialization(shape, n, convention);
    if (shift_to_zero) {
        if (!shape.is_straight()) {
            throw std::invalid_argument("shift_to_zero requires a straight shape");
        }
        if (!f.is_zero()) {
            long long delta = weighted_size(shape.outer());
            if (f.min_exponent().value() < delta) {
                throw IdentityViolation("specialization of " + shape.str() +
                                         " has a term below q^" + std::to_string(delta));
            }
            f = f.shifted(-delta);
        }
    }
    CspReport report = verify_csp(X, n, f, convention, Scope::FullSet, std::nullopt);
    report.shape = shape;
    return report;
}

BigInt orbit_sum_multiplier(const SkewShape& shape, const WeakComposition& a, int n) {
    require_coprime(shape, n);
    std::vector<Tableau> X = cyclic_class_union(shape, a, n);
    QPolynomial f = statistic_gf(X, StatisticConvention::OneBased);
    std::optional<BigInt> multiplier = multiple_of_q_integer(f, n);
    if (!multiplier) {
        throw IdentityViolation("class-union statistic series is not a multiple of [" +
                                 std::to_string(n) + "]_q: reduced form " +
                                 reduce_mod_cyclic(f, n).str_dense());
    }
    BigInt expected = kostka(shape, a);
    if (*multiplier != expected) {
        throw IdentityViolation("multiplier " + multiplier->str() +
                                 " differs from the content count " + expected.str());
    }
    return *multiplier;
}

std::string to_json(const CspReport& report) {
    nlohmann::ordered_json j;
    j["shape_outer"] = report.shape.outer().str();
    j["shape_inner"] = report.shape.inner().str();
    j["n"] = report.n;
    j["scope"] = to_string(report.scope);
    if (report.content) j["content"] = report.content->str();
    j["statistic_convention"] = to_string(report.convention);
    j["orbit_sizes"] = report.orbit_sizes;
    j["f_coefficients"] = dense_coefficients(report.candidate, 1);
    j["f_reduced"] = dense_coefficients(report.reduced, report.n);
    j["orbit_gf"] = dense_coefficients(report.orbit_gf, report.n);
    j["verdict"] = to_string(report.verdict);
    if (report.witness) {
        j["witness"] = {{"k", report.witness->power},
                        {"expected", to_longlong(report.witness->expected)},
                        {"actual", to_longlong(report.witness->actual)}};
    }
    return j.dump(2);
}

const char* const kTsvHeader = "outer\tinner\tn\tcontent\tscope\torbit_sizes\tverdict";

std::string to_tsv_row(const CspReport& report) {
    std::ostringstream out;
    out << report.shape.outer().str() << '\t' << report.shape.inner().str() << '\t' << report.n
        << '\t' << (report.content ? report.content->str() : "") << '\t'
        << to_string(report.scope) << '\t';
    // Run-length form "size^count", ascending by size.
    std::size_t i = 0;
    bool first = true;
    while (i < report.orbit_sizes.size()) {
        std::size_t j = i;
        while (j < report.orbit_sizes.size() && report.orbit_sizes[j] == report.orbit_sizes[i]) {
            ++j;
        }
        if (!first) out << ',';
        out << report.orbit_sizes[i] << '^' << (j - i);
        first = false;
        i = j;
    }
    out << '\t' << to_string(report.verdict);
    return out.str();
}

}  // namespace skewsieve
