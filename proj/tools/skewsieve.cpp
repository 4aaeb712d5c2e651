// Command-line front end: enumeration, orbit display, sieving verification,
// and the desk-scale sweep harness.  Every command is deterministic; identical
// inputs give byte-identical output.
//
// Exit statuses: 0 success/holds, 1 verification failure, 2 hypothesis
// violation (coprimality), 3 input error.
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "skewsieve/sweep.hpp"

namespace sk = skewsieve;

namespace {

sk::SkewShape parse_shape(const std::string& outer, const std::string& inner) {
    return sk::SkewShape(sk::Partition::parse(outer), sk::Partition::parse(inner));
}

struct EnumerateArgs {
    std::string outer;
    std::string inner;
    int n = 0;
    std::string content;
};

int run_enumerate(const EnumerateArgs& args) {
    sk::SkewShape shape = parse_shape(args.outer, args.inner);
    long long count = 0;
    auto show = [&count](const sk::Tableau& t) {
        std::cout << t.str() << "\n";
        ++count;
    };
    if (args.content.empty()) {
        sk::for_each_tableau(shape, args.n, show);
    } else {
        sk::WeakComposition a = sk::WeakComposition::parse(args.content);
        if (static_cast<int>(a.length()) != args.n) {
            throw std::invalid_argument("content length " + std::to_string(a.length()) +
                                        " does not match n=" + std::to_string(args.n));
        }
        sk::for_each_tableau_content(shape, a, show);
    }
    std::cout << count << std::endl;
    return 0;
}

struct OrbitArgs {
    std::string outer;
    std::string inner;
    int n = 0;
    std::string tableau;
};

int run_orbit(const OrbitArgs& args) {
    sk::Tableau t = sk::Tableau::parse(args.tableau, args.n);
    if (!args.outer.empty()) {
        sk::SkewShape expected = parse_shape(args.outer, args.inner);
        if (t.shape() != expected) {
            throw std::invalid_argument("tableau has shape " + t.shape().str() +
                                        ", not " + expected.str());
        }
    }
    sk::CyclicOrbit orb = sk::orbit(t);
    for (const sk::Tableau& u : orb.elements) {
        std::cout << u.str() << "\t" << sk::weight(u).str() << "\n";
    }
    std::cout << orb.size() << std::endl;
    return 0;
}

struct VerifyArgs {
    std::string outer;
    std::string inner;
    int n = 0;
    std::string content;
    bool refined = false;
    bool full = false;
    std::string convention = "zero";
    bool convention_given = false;
    bool shift = false;
    bool explore = false;
    std::string output;
};

sk::CspReport explore_refined(const sk::SkewShape& shape, const sk::WeakComposition& a,
                              int n) {
    // The union of the distinct cyclic shifts of the content, checked
    // empirically without the coprimality hypothesis.
    std::set<sk::WeakComposition> shifts;
    for (int r = 0; r < n; ++r) shifts.insert(sk::cyclic_shift(a, r));
    std::vector<sk::Tableau> X;
    for (const sk::WeakComposition& b : shifts) {
        for (const sk::Tableau& t : sk::enumerate_content(shape, b)) X.push_back(t);
    }
    sk::QPolynomial f = sk::statistic_gf(X, sk::StatisticConvention::OneBased);
    return sk::verify_csp(X, n, f, sk::StatisticConvention::OneBased,
                          sk::Scope::RefinedUnion, a);
}

int run_verify(const VerifyArgs& args) {
    if (args.refined == args.full) {
        throw std::invalid_argument("pass exactly one of --refined or --full");
    }
    sk::SkewShape shape = parse_shape(args.outer, args.inner);

    sk::CspReport report;
    if (args.refined) {
        if (args.content.empty()) {
            throw std::invalid_argument("--refined requires --content");
        }
        if (args.convention_given) {
            throw std::invalid_argument(
                "--convention does not apply to --refined (statistic is one-based)");
        }
        if (args.shift) {
            throw std::invalid_argument("--shift does not apply to --refined");
        }
        sk::WeakComposition a = sk::WeakComposition::parse(args.content);
        if (static_cast<int>(a.length()) != args.n) {
            throw std::invalid_argument("content length " + std::to_string(a.length()) +
                                        " does not match n=" + std::to_string(args.n));
        }
        report = args.explore ? explore_refined(shape, a, args.n)
                              : sk::verify_refined_csp(shape, a, args.n);
    } else {
        sk::StatisticConvention convention =
            sk::parse_convention(args.convention.find('-') == std::string::npos
                                     ? args.convention + "-based"
                                     : args.convention);
        if (args.explore) {
            if (args.shift) {
                throw std::invalid_argument("--shift is not available with --explore");
            }
            std::vector<sk::Tableau> X = sk::enumerate(shape, args.n);
            sk::QPolynomial f = sk::principal_specialization(shape, args.n, convention);
            report = sk::verify_csp(X, args.n, f, convention);
        } else {
            report = sk::verify_full_csp(shape, args.n, convention, args.shift);
        }
    }

    std::string text = sk::to_json(report);
    if (args.output.empty()) {
        std::cout << text << std::endl;
    } else {
        std::ofstream out(args.output);
        if (!out) throw std::runtime_error("cannot open " + args.output);
        out << text << "\n";
    }
    return report.holds() ? 0 : 1;
}

struct SweepArgs {
    int max_size = 8;
    int max_n = 6;
    bool skew = true;
    bool coprime_only = true;
    bool explore = false;
    std::string format = "tsv";
    std::string output;
    int threads = 1;
};

int run_sweep_cmd(const SweepArgs& args) {
    if (!args.coprime_only && !args.explore) {
        throw std::invalid_argument("--coprime-only false requires --explore");
    }

    sk::SweepOptions opt;
    opt.max_size = args.max_size;
    opt.max_n = args.max_n;
    opt.include_skew = args.skew;
    opt.coprime_only = args.coprime_only;
    opt.threads = args.threads;

    std::vector<std::string> failures;
    std::ostringstream table;
    nlohmann::ordered_json reports = nlohmann::ordered_json::array();
    const bool tsv = args.format == "tsv";
    if (tsv) table << sk::kTsvHeader << "\n";

    auto emit = [&](const sk::CspReport& report) {
        if (tsv) {
            table << sk::to_tsv_row(report) << "\n";
        } else {
            reports.push_back(nlohmann::ordered_json::parse(sk::to_json(report)));
        }
    };
    auto fail = [&failures](const std::string& what, const sk::InstanceOutcome& o) {
        failures.push_back(what + " at " + o.shape.str() + " n=" + std::to_string(o.n));
    };

    sk::run_sweep(opt, [&](const sk::InstanceOutcome& o) {
        emit(sk::full_report(o, opt.convention));
        for (const sk::ClassOutcome& cls : o.classes) emit(sk::class_report(o, cls));
        if (!o.coprime) return;  // explore rows carry no assertion
        if (!o.full_congruence_holds) fail("full-set congruence", o);
        if (o.is_straight && !o.min_exponent_ok) fail("minimal exponent", o);
        if (o.is_straight && !o.shifted_congruence_holds) fail("shifted congruence", o);
        if (!o.shift_identity_ok) fail("specialization shift identity", o);
        if (!o.content_symmetry_ok) fail("content symmetry", o);
        if (!o.orbits_divide_n) fail("orbit size not dividing n", o);
        for (const sk::ClassOutcome& cls : o.classes) {
            if (!cls.congruence_holds || !cls.sizes_all_n || !cls.multiplier_matches_kostka) {
                fail("refined class " + cls.content.str(), o);
            }
        }
    });

    std::ostringstream summary;
    if (failures.empty()) {
        summary << "ALL HOLD\n";
    } else {
        for (const std::string& f : failures) summary << "FAIL: " << f << "\n";
    }

    std::string document;
    if (tsv) {
        document = table.str() + summary.str();
    } else {
        nlohmann::ordered_json doc;
        doc["reports"] = std::move(reports);
        doc["failures"] = failures;
        doc["all_hold"] = failures.empty();
        document = doc.dump(2) + "\n";
    }

    if (args.output.empty()) {
        std::cout << document;
    } else {
        std::ofstream out(args.output);
        if (!out) throw std::runtime_error("cannot open " + args.output);
        out << document;
        std::cout << summary.str();
    }
    return failures.empty() ? 0 : 1;
}

struct PromotionArgs {
    std::string outer;
    std::string inner;
    int n = 0;
    bool sweep = false;
    int max_size = 6;
    int max_n = 6;
};

int run_promotion_compare(const PromotionArgs& args) {
    if (args.sweep) {
        auto contrast = sk::find_promotion_contrast(args.max_size, args.max_n);
        if (!contrast) {
            std::cout << "no contrasting instance within bounds" << std::endl;
            return 1;
        }
        std::cout << "shape " << contrast->shape.str() << " n=" << contrast->n << "\n"
                  << "cyclic action order: " << contrast->cyclic_order << "\n"
                  << "promotion order: " << contrast->promotion_order << "\n"
                  << "orders differ" << std::endl;
        return 0;
    }
    if (args.outer.empty()) {
        throw std::invalid_argument("pass --outer and --n, or --sweep");
    }
    sk::SkewShape shape = parse_shape(args.outer, args.inner);
    long long action = sk::action_order(shape, args.n);
    long long promo = sk::promotion_order(shape, args.n);
    std::cout << "cyclic action order: " << action << "\n"
              << "promotion order: " << promo << "\n"
              << (action == promo ? "orders agree" : "orders differ") << std::endl;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration and cyclic sieving checks for skew tableaux"};
    app.require_subcommand(1);

    EnumerateArgs en;
    CLI::App* cmd_en = app.add_subcommand("enumerate", "List SSYT of a shape");
    cmd_en->add_option("--outer", en.outer, "Outer partition, e.g. 3,2,2")->required();
    cmd_en->add_option("--inner", en.inner, "Inner partition");
    cmd_en->add_option("--n", en.n, "Alphabet size")->required();
    cmd_en->add_option("--content", en.content, "Exact content, e.g. 2,1,2,1");

    OrbitArgs orb;
    CLI::App* cmd_orb = app.add_subcommand("orbit", "Walk a tableau's cyclic orbit");
    cmd_orb->add_option("--outer", orb.outer, "Outer partition (checked if given)");
    cmd_orb->add_option("--inner", orb.inner, "Inner partition");
    cmd_orb->add_option("--n", orb.n, "Alphabet size")->required();
    cmd_orb->add_option("tableau", orb.tableau, "Tableau text, e.g. .,1,3;1,3;2,4")
        ->required();

    VerifyArgs ver;
    CLI::App* cmd_ver = app.add_subcommand("verify", "Check a sieving triple");
    cmd_ver->add_option("--outer", ver.outer, "Outer partition")->required();
    cmd_ver->add_option("--inner", ver.inner, "Inner partition");
    cmd_ver->add_option("--n", ver.n, "Alphabet size")->required();
    cmd_ver->add_option("--content", ver.content, "Content for --refined");
    cmd_ver->add_flag("--refined", ver.refined, "Content-class union statement");
    cmd_ver->add_flag("--full", ver.full, "Whole-set statement");
    cmd_ver->add_option("--convention", ver.convention, "zero or one (full only)")
        ->check(CLI::IsMember({"zero", "one", "zero-based", "one-based"}));
    cmd_ver->add_flag("--shift", ver.shift,
                      "Divide by the minimal power of q (straight shapes)");
    cmd_ver->add_flag("--explore", ver.explore,
                      "Empirical check without the coprimality hypothesis");
    cmd_ver->add_option("--output", ver.output, "Write the report here instead of stdout");

    SweepArgs sw;
    CLI::App* cmd_sw = app.add_subcommand("sweep", "Exhaustive checks over small shapes");
    cmd_sw->add_option("--max-size", sw.max_size, "Cell-count bound")
        ->check(CLI::PositiveNumber);
    cmd_sw->add_option("--max-n", sw.max_n, "Alphabet bound")->check(CLI::PositiveNumber);
    cmd_sw->add_option("--skew", sw.skew, "Include nonempty inner shapes");
    cmd_sw->add_option("--coprime-only", sw.coprime_only,
                       "Restrict to gcd(cells, n) = 1");
    cmd_sw->add_flag("--explore", sw.explore,
                     "Allow non-coprime rows (no assertion on them)");
    cmd_sw->add_option("--format", sw.format, "tsv or json")
        ->check(CLI::IsMember({"tsv", "json"}));
    cmd_sw->add_option("--output", sw.output, "Write rows here; summary to stdout");
    cmd_sw->add_option("--threads", sw.threads, "Worker threads (0 = all cores)");

    PromotionArgs pr;
    CLI::App* cmd_pr = app.add_subcommand("promotion-compare",
                                          "Cyclic action order vs promotion order");
    cmd_pr->add_option("--outer", pr.outer, "Outer partition");
    cmd_pr->add_option("--inner", pr.inner, "Inner partition");
    cmd_pr->add_option("--n", pr.n, "Alphabet size");
    cmd_pr->add_flag("--sweep", pr.sweep, "Search for an instance where they differ");
    cmd_pr->add_option("--max-size", pr.max_size, "Search bound on cells (--sweep)");
    cmd_pr->add_option("--max-n", pr.max_n, "Search bound on n (--sweep)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }
    ver.convention_given = cmd_ver->count("--convention") > 0;

    try {
        if (cmd_en->parsed()) return run_enumerate(en);
        if (cmd_orb->parsed()) return run_orbit(orb);
        if (cmd_ver->parsed()) return run_verify(ver);
        if (cmd_sw->parsed()) return run_sweep_cmd(sw);
        if (cmd_pr->parsed()) return run_promotion_compare(pr);
        return 3;
    } catch (const sk::GcdError& e) {
        std::cerr << "hypothesis violation: " << e.what() << std::endl;
        return 2;
    } catch (const sk::ParseError& e) {
        std::cerr << "input error: " << e.what() << " (position " << e.position() << ")"
                  << std::endl;
        return 3;
    } catch (const sk::TableauError& e) {
        std::cerr << "input error: " << e.what() << std::endl;
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 3;
    }
}
