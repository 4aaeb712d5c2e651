#include "skewsieve/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "skewsieve/engine.hpp"

namespace skewsieve {

namespace {

void grow_shape(int target, int cells, std::vector<int>& outer, std::vector<int>& inner,
                std::vector<SkewShape>& out) {
    if (cells == target) {
        if (inner.back() == 0) {
            out.emplace_back(Partition(outer), Partition(inner));
        }
        return;
    }
    const int prev_outer = outer.empty() ? target : outer.back();
    const int prev_inner = outer.empty() ? target : inner.back();
    // Next row [i, o): o <= previous o, i <= previous i, i < o, and the
    // previous row must not start past this row's end (no empty column).
    for (int o = prev_outer; o >= 1; --o) {
        if (!outer.empty() && prev_inner > o) continue;
        for (int i = std::min(prev_inner, o - 1); i >= 0; --i) {
            if (cells + (o - i) > target) continue;
            outer.push_back(o);
            inner.push_back(i);
            grow_shape(target, cells + (o - i), outer, inner, out);
            outer.pop_back();
            inner.pop_back();
        }
    }
}

std::vector<long long> expand_sizes(const std::map<long long, long long>& sizes) {
    std::vector<long long> out;
    for (const auto& [d, count] : sizes) {
        for (long long i = 0; i < count; ++i) out.push_back(d);
    }
    return out;
}

QPolynomial poly_from_dense(const std::vector<long long>& dense) {
    QPolynomial p;
    for (std::size_t e = 0; e < dense.size(); ++e) {
        p.add_term(static_cast<long long>(e), dense[e]);
    }
    return p;
}

std::vector<long long> residues_of(const std::vector<long long>& dense, int n) {
    std::vector<long long> r(static_cast<std::size_t>(n), 0);
    for (std::size_t e = 0; e < dense.size(); ++e) {
        r[e % static_cast<std::size_t>(n)] += dense[e];
    }
    return r;
}

std::vector<long long> orbit_gf_dense(const std::map<long long, long long>& sizes, int n) {
    std::vector<long long> g(static_cast<std::size_t>(n), 0);
    for (const auto& [d, count] : sizes) {
        for (long long i = 0; i < d; ++i) {
            g[static_cast<std::size_t>(i * (n / d))] += count;
        }
    }
    return g;
}

long long count_fillings(const SkewShape& shape, int n) {
    engine::FlatShape flat = engine::FlatShape::build(shape);
    long long count = 0;
    engine::enumerate_fillings(flat, n, [&](const engine::Filling&) { ++count; });
    return count;
}

/// Ties a small instance's engine aggregates back to the Tableau-based
/// checkers; returns an empty string on agreement.
std::string cross_check_instance(const InstanceOutcome& o, const SweepOptions& options) {
    std::ostringstream why;
    std::vector<Tableau> X = enumerate(o.shape, o.n);
    if (static_cast<long long>(X.size()) != o.total) {
        why << "enumeration count " << X.size() << " vs engine " << o.total << "; ";
    }
    QPolynomial f0 = statistic_gf(X, StatisticConvention::ZeroBased);
    if (!(f0 == poly_from_dense(o.gf_zero))) why << "zero-based gf mismatch; ";
    QPolynomial f1 = statistic_gf(X, StatisticConvention::OneBased);
    if (!(f1 == poly_from_dense(o.gf_one))) why << "one-based gf mismatch; ";
    if (o.coprime) {
        CspReport full = verify_full_csp(o.shape, o.n, options.convention);
        if (full.holds() != o.full_congruence_holds) why << "full verdict mismatch; ";
        if (full.orbit_sizes != expand_sizes(o.orbit_sizes)) why << "orbit sizes mismatch; ";
        // First and last nonempty class, to bound the cost.
        const ClassOutcome* picks[2] = {nullptr, nullptr};
        for (const ClassOutcome& cls : o.classes) {
            if (cls.size == 0) continue;
            if (!picks[0]) picks[0] = &cls;
            picks[1] = &cls;
        }
        for (const ClassOutcome* cls : picks) {
            if (!cls) continue;
            CspReport refined = verify_refined_csp(o.shape, cls->content, o.n);
            if (refined.holds() != cls->congruence_holds) {
                why << "refined verdict mismatch for " << cls->content.str() << "; ";
            }
            if (refined.orbit_sizes != expand_sizes(cls->orbit_sizes)) {
                why << "refined orbit sizes mismatch for " << cls->content.str() << "; ";
            }
            BigInt mult = orbit_sum_multiplier(o.shape, cls->content, o.n);
            if (mult != cls->kostka_value || !cls->multiplier_matches_kostka) {
                why << "multiplier mismatch for " << cls->content.str() << "; ";
            }
        }
    }
    return why.str();
}

}  // namespace

std::vector<SkewShape> reduced_skew_shapes(int size, bool include_skew) {
    if (size < 1) throw std::domain_error("shape size must be >= 1");
    std::vector<SkewShape> out;
    std::vector<int> outer;
    std::vector<int> inner;
    grow_shape(size, 0, outer, inner, out);
    if (!include_skew) {
        std::erase_if(out, [](const SkewShape& s) { return !s.is_straight(); });
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<WeakComposition> weak_compositions(int total, int length) {
    if (length == 0) {
        if (total == 0) return {WeakComposition(std::vector<int>{})};
        return {};
    }
    std::vector<WeakComposition> out;
    std::vector<int> entries(static_cast<std::size_t>(length), 0);
    auto place = [&](auto&& self, int pos, int left) -> void {
        if (pos == length - 1) {
            entries[static_cast<std::size_t>(pos)] = left;
            out.emplace_back(entries);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            entries[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, left - v);
        }
    };
    place(place, 0, total);
    return out;
}

WeakComposition shift_class_representative(const WeakComposition& a) {
    WeakComposition best = a;
    for (std::size_t r = 1; r < a.length(); ++r) {
        WeakComposition shifted = cyclic_shift(a, static_cast<long long>(r));
        if (shifted.entries() < best.entries()) best = shifted;
    }
    return best;
}

InstanceOutcome scan_instance(const SkewShape& shape, int n, const SweepOptions& options) {
    if (n < 1) throw std::domain_error("scan_instance requires n >= 1");
    if (n > 127) throw std::invalid_argument("alphabet exceeds the flat engine entry range");
    InstanceOutcome out;
    out.shape = shape;
    out.n = n;
    const int m = static_cast<int>(shape.num_cells());
    out.coprime = std::gcd(static_cast<long long>(m), static_cast<long long>(n)) == 1;
    out.is_straight = shape.is_straight();

    const engine::FlatShape flat = engine::FlatShape::build(shape);

    // Weight lookup tables: a weight vector w maps to the mixed-radix code
    // sum_j w[j] * (m+1)^j, which indexes its count and its shift class.
    std::vector<long long> pw(static_cast<std::size_t>(n) + 1);
    pw[0] = 1;
    for (int j = 0; j < n; ++j) pw[static_cast<std::size_t>(j) + 1] = pw[static_cast<std::size_t>(j)] * (m + 1);
    const long long code_space = pw[static_cast<std::size_t>(n)];
    if (code_space > (1LL << 24)) {
        throw std::invalid_argument("instance too large for the scan weight tables");
    }
    auto code_of = [&](const std::vector<int>& w) {
        long long code = 0;
        for (std::size_t j = 0; j < w.size(); ++j) code += w[j] * pw[j];
        return code;
    };

    const std::vector<WeakComposition> comps = weak_compositions(m, n);
    std::map<std::vector<int>, int> class_ids;
    for (const WeakComposition& a : comps) {
        class_ids.emplace(shift_class_representative(a).entries(), 0);
    }
    {
        int next_id = 0;
        for (auto& [rep, id] : class_ids) id = next_id++;
    }
    out.classes.resize(class_ids.size());
    for (const auto& [rep, id] : class_ids) {
        out.classes[static_cast<std::size_t>(id)].content = WeakComposition(rep);
        out.classes[static_cast<std::size_t>(id)].gf_one.assign(
            static_cast<std::size_t>(n) * m + 1, 0);
    }
    std::vector<std::int32_t> class_of_code(static_cast<std::size_t>(code_space), -1);
    std::vector<long long> count_by_code(static_cast<std::size_t>(code_space), 0);
    for (const WeakComposition& a : comps) {
        class_of_code[static_cast<std::size_t>(code_of(a.entries()))] =
            class_ids.at(shift_class_representative(a).entries());
    }

    out.gf_zero.assign(static_cast<std::size_t>(n - 1) * m + 1, 0);
    out.gf_one.assign(static_cast<std::size_t>(n) * m + 1, 0);

    engine::MatchBuffers mb;
    engine::Filling scratch;
    const bool crystal = options.crystal_checks && out.coprime;

    engine::enumerate_fillings(flat, n, [&](const engine::Filling& f) {
        int w[128];
        engine::weight_of(flat, f, n, w);
        long long code = 0;
        int zstat = 0;
        for (int j = 0; j < n; ++j) {
            code += w[j] * pw[static_cast<std::size_t>(j)];
            zstat += j * w[j];
        }
        const int ostat = zstat + m;
        ++out.total;
        ++out.gf_zero[static_cast<std::size_t>(zstat)];
        ++out.gf_one[static_cast<std::size_t>(ostat)];
        ++count_by_code[static_cast<std::size_t>(code)];
        ClassOutcome& co = out.classes[static_cast<std::size_t>(
            class_of_code[static_cast<std::size_t>(code)])];
        ++co.size;
        ++co.gf_one[static_cast<std::size_t>(ostat)];
        const long long d = engine::rep_orbit_size(flat, f, n, mb, scratch);
        if (d > 0) {
            ++out.orbit_sizes[d];
            ++co.orbit_sizes[d];
        }
        if (crystal) {
            ++out.crystal_checked;
            {
                engine::Filling c = f;
                engine::cyclic(flat, c, n, mb);
                int wc[128];
                engine::weight_of(flat, c, n, wc);
                bool ok = true;
                for (int j = 0; j < n; ++j) ok = ok && wc[j] == w[(j + 1) % n];
                if (!ok) {
                    ++out.crystal_failures;
                    if (out.first_crystal_failure.empty()) {
                        out.first_crystal_failure =
                            engine::to_tableau(shape, f, n).str() + " weight shift";
                    }
                }
            }
            for (int i = 1; i < n; ++i) {
                engine::Filling u = f;
                engine::sigma(flat, u, i, mb);
                int wu[128];
                engine::weight_of(flat, u, n, wu);
                bool ok = wu[i - 1] == w[i] && wu[i] == w[i - 1];
                for (int j = 0; ok && j < n; ++j) {
                    if (j != i - 1 && j != i) ok = wu[j] == w[j];
                }
                engine::sigma(flat, u, i, mb);
                ok = ok && engine::compare(u, f, flat.cell_count) == 0;
                engine::Filling v = f;
                if (ok && engine::lower_step(flat, v, i, mb)) {
                    ok = engine::raise_step(flat, v, i, mb) &&
                         engine::compare(v, f, flat.cell_count) == 0;
                }
                if (!ok) {
                    ++out.crystal_failures;
                    if (out.first_crystal_failure.empty()) {
                        out.first_crystal_failure =
                            engine::to_tableau(shape, f, n).str() + " at index " +
                            std::to_string(i);
                    }
                }
            }
        }
    });

    long long orbit_total = 0;
    out.orbits_divide_n = true;
    for (const auto& [d, count] : out.orbit_sizes) {
        orbit_total += d * count;
        if (n % d != 0) out.orbits_divide_n = false;
    }
    if (orbit_total != out.total) {
        throw std::logic_error("orbit representatives do not account for every element");
    }

    if (out.orbits_divide_n) {
        const auto& gf = options.convention == StatisticConvention::ZeroBased ? out.gf_zero
                                                                              : out.gf_one;
        out.full_congruence_holds = residues_of(gf, n) == orbit_gf_dense(out.orbit_sizes, n);
    }

    out.shift_identity_ok = true;
    for (std::size_t e = 0; e < out.gf_one.size(); ++e) {
        long long zero_side =
            e >= static_cast<std::size_t>(m) && e - m < out.gf_zero.size()
                ? out.gf_zero[e - static_cast<std::size_t>(m)]
                : 0;
        if (out.gf_one[e] != zero_side) out.shift_identity_ok = false;
    }

    if (out.is_straight) {
        const long long expected_min = weighted_size(shape.outer());
        long long min_exp = -1;
        for (std::size_t e = 0; e < out.gf_zero.size(); ++e) {
            if (out.gf_zero[e] != 0) {
                min_exp = static_cast<long long>(e);
                break;
            }
        }
        out.min_exponent_ok = out.total == 0 || min_exp == expected_min;
        if (out.total == 0) {
            out.shifted_congruence_holds = true;
        } else if (out.orbits_divide_n && min_exp >= expected_min) {
            std::vector<long long> shifted(out.gf_zero.begin() + expected_min,
                                           out.gf_zero.end());
            out.shifted_congruence_holds =
                residues_of(shifted, n) == orbit_gf_dense(out.orbit_sizes, n);
        }
    }

    {
        std::map<std::vector<int>, long long> group_count;
        out.content_symmetry_ok = true;
        for (const WeakComposition& a : comps) {
            std::vector<int> key = a.entries();
            std::sort(key.begin(), key.end(), std::greater<int>());
            long long count = count_by_code[static_cast<std::size_t>(code_of(a.entries()))];
            auto [it, inserted] = group_count.emplace(std::move(key), count);
            if (!inserted && it->second != count) out.content_symmetry_ok = false;
        }
    }

    for (ClassOutcome& cls : out.classes) {
        cls.kostka_value = count_by_code[static_cast<std::size_t>(code_of(cls.content.entries()))];
        cls.sizes_all_n = true;
        long long class_total = 0;
        bool divide = true;
        for (const auto& [d, count] : cls.orbit_sizes) {
            class_total += d * count;
            if (d != n) cls.sizes_all_n = false;
            if (n % d != 0) divide = false;
        }
        if (class_total != cls.size) {
            throw std::logic_error("class orbits do not account for the class union");
        }
        std::vector<long long> rr = residues_of(cls.gf_one, n);
        cls.congruence_holds = divide && rr == orbit_gf_dense(cls.orbit_sizes, n);
        cls.multiplier_matches_kostka = true;
        for (long long r : rr) {
            if (r != cls.kostka_value) cls.multiplier_matches_kostka = false;
        }
    }

    if (options.cross_checks && out.total <= 3000 && m <= 6) {
        out.cross_checked = true;
        try {
            out.cross_check_detail = cross_check_instance(out, options);
        } catch (const std::exception& e) {
            out.cross_check_detail = std::string("exception: ") + e.what();
        }
        out.cross_check_ok = out.cross_check_detail.empty();
    }
    return out;
}

CspReport full_report(const InstanceOutcome& outcome, StatisticConvention convention) {
    CspReport report;
    report.shape = outcome.shape;
    report.n = outcome.n;
    report.scope = Scope::FullSet;
    report.convention = convention;
    report.orbit_sizes = expand_sizes(outcome.orbit_sizes);
    report.candidate = poly_from_dense(convention == StatisticConvention::ZeroBased
                                           ? outcome.gf_zero
                                           : outcome.gf_one);
    complete_report(report);
    return report;
}

CspReport class_report(const InstanceOutcome& outcome, const ClassOutcome& cls) {
    CspReport report;
    report.shape = outcome.shape;
    report.n = outcome.n;
    report.scope = Scope::RefinedUnion;
    report.content = cls.content;
    report.convention = StatisticConvention::OneBased;
    report.orbit_sizes = expand_sizes(cls.orbit_sizes);
    report.candidate = poly_from_dense(cls.gf_one);
    complete_report(report);
    return report;
}

void run_sweep(const SweepOptions& options,
               const std::function<void(const InstanceOutcome&)>& visit) {
    if (options.max_size < 1 || options.max_n < 1) {
        throw std::domain_error("sweep bounds must be >= 1");
    }
    std::vector<std::pair<SkewShape, int>> instances;
    for (int size = 1; size <= options.max_size; ++size) {
        for (const SkewShape& shape : reduced_skew_shapes(size, options.include_skew)) {
            for (int n = 1; n <= options.max_n; ++n) {
                if (options.coprime_only &&
                    std::gcd(static_cast<long long>(size), static_cast<long long>(n)) != 1) {
                    continue;
                }
                instances.emplace_back(shape, n);
            }
        }
    }

    int threads = options.threads;
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    threads = std::min<int>(threads, static_cast<int>(instances.size()) > 0
                                         ? static_cast<int>(instances.size())
                                         : 1);

    if (threads == 1) {
        for (const auto& [shape, n] : instances) visit(scan_instance(shape, n, options));
        return;
    }

    // Workers race through the queue; outcomes are visited in queue order.
    std::vector<std::optional<InstanceOutcome>> done(instances.size());
    std::vector<std::exception_ptr> errors(instances.size());
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::condition_variable cv;
    auto work = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= instances.size()) return;
            std::optional<InstanceOutcome> outcome;
            std::exception_ptr error;
            try {
                outcome = scan_instance(instances[i].first, instances[i].second, options);
            } catch (...) {
                error = std::current_exception();
            }
            {
                std::lock_guard<std::mutex> lock(mu);
                done[i] = std::move(outcome);
                errors[i] = error;
            }
            cv.notify_all();
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (std::size_t i = 0; i < instances.size(); ++i) {
        std::unique_lock<std::mutex> lock(mu);
        cv.wait(lock, [&] { return done[i].has_value() || errors[i]; });
        if (errors[i]) {
            lock.unlock();
            for (auto& t : pool) t.join();
            std::rethrow_exception(errors[i]);
        }
        InstanceOutcome outcome = std::move(*done[i]);
        done[i].reset();
        lock.unlock();
        visit(outcome);
    }
    for (auto& t : pool) t.join();
}

std::optional<PromotionContrast> find_promotion_contrast(int max_size, int max_n) {
    for (int size = 1; size <= max_size; ++size) {
        for (const SkewShape& shape : reduced_skew_shapes(size, true)) {
            for (int n = 2; n <= max_n; ++n) {
                long long count = count_fillings(shape, n);
                if (count == 0 || count > 100'000) continue;
                long long cyclic_order = action_order(shape, n);
                long long promo_order = promotion_order(shape, n);
                if (cyclic_order == n && promo_order != n) {
                    return PromotionContrast{shape, n, cyclic_order, promo_order};
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace skewsieve
