#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skewsieve/csp.hpp"

namespace skewsieve {

/// All skew shapes with the given cell count in reduced form: no empty rows
/// and no empty columns.  Deleting empty rows and empty columns of any skew
/// shape is a constraint-preserving bijection on its fillings, so this
/// finite family covers every skew shape of that size.  Sorted by outer,
/// then inner.  include_skew=false restricts to straight shapes.
std::vector<SkewShape> reduced_skew_shapes(int size, bool include_skew = true);

/// WCOMP(total, length) in lexicographic order.
std::vector<WeakComposition> weak_compositions(int total, int length);

/// Lexicographically least cyclic shift; constant on shift classes.
WeakComposition shift_class_representative(const WeakComposition& a);

struct SweepOptions {
    int max_size = 8;
    int max_n = 6;
    bool include_skew = true;
    bool coprime_only = true;
    StatisticConvention convention = StatisticConvention::ZeroBased;  // full-set reports
    int threads = 1;
    /// Per-tableau reflection/raising/lowering property checks (reflection
    /// twice is the identity, weights swap, lowering then raising returns).
    bool crystal_checks = false;
    /// Re-derive small instances through the Tableau-based checkers and
    /// compare against the engine scan.
    bool cross_checks = false;
};

/// Aggregates for one cyclic content class within an instance.
struct ClassOutcome {
    WeakComposition content;                   // class representative
    long long size = 0;                        // |union of the class's shifts|
    std::map<long long, long long> orbit_sizes;  // orbit size -> count
    std::vector<long long> gf_one;             // one-based statistic gf, dense
    long long kostka_value = 0;                // tableaux with content exactly the representative
    bool congruence_holds = false;             // reduced gf equals the orbit gf
    bool sizes_all_n = false;
    bool multiplier_matches_kostka = false;    // reduced gf = kostka * [n]_q
};

/// Everything one exhaustive scan of SSYT(shape, n) establishes.
struct InstanceOutcome {
    SkewShape shape;
    int n = 0;
    bool coprime = false;
    long long total = 0;
    std::map<long long, long long> orbit_sizes;
    std::vector<long long> gf_zero;   // dense statistic gfs over the full set
    std::vector<long long> gf_one;
    std::vector<ClassOutcome> classes;  // by representative, ascending

    bool orbits_divide_n = false;
    bool full_congruence_holds = false;   // convention from options
    bool shift_identity_ok = false;       // gf_one = q^size * gf_zero
    bool content_symmetry_ok = false;
    // Straight shapes only:
    bool is_straight = false;
    bool min_exponent_ok = false;         // min exponent of gf_zero = weighted_size(outer)
    bool shifted_congruence_holds = false;  // gf_zero / q^{weighted_size} still sieves
    // Crystal property checks (when enabled):
    long long crystal_checked = 0;
    long long crystal_failures = 0;
    std::string first_crystal_failure;
    // Engine vs Tableau-based cross-ties (when enabled, small instances):
    bool cross_checked = false;
    bool cross_check_ok = true;
    std::string cross_check_detail;
};

/// Scans one (shape, n) instance with the flat engine; never materializes
/// the tableau set.
InstanceOutcome scan_instance(const SkewShape& shape, int n, const SweepOptions& options);

/// Reports for the CLI: the full-set row followed by one refined row per
/// content class.
CspReport full_report(const InstanceOutcome& outcome, StatisticConvention convention);
CspReport class_report(const InstanceOutcome& outcome, const ClassOutcome& cls);

/// Runs scan_instance over every instance within the bounds, visiting
/// outcomes in deterministic order (size, shape, n) regardless of thread
/// completion order.
void run_sweep(const SweepOptions& options,
               const std::function<void(const InstanceOutcome&)>& visit);

struct PromotionContrast {
    SkewShape shape;
    int n = 0;
    long long cyclic_order = 0;
    long long promotion_order = 0;
};

/// First instance (ascending size, shape, n >= 2) where promotion's order on
/// SSYT(shape, n) differs from n while the cyclic action's order equals n.
std::optional<PromotionContrast> find_promotion_contrast(int max_size, int max_n);

}  // namespace skewsieve
