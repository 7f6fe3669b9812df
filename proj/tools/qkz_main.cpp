#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qkz/basis.hpp"
#include "qkz/ctengine.hpp"
#include "qkz/linkpattern.hpp"
#include "qkz/psivec.hpp"
#include "qkz/qkzoracle.hpp"
#include "qkz/resulttable.hpp"
#include "qkz/sumrules.hpp"
#include "qkz/tilings.hpp"
#include "qkz/verify.hpp"

namespace {

using namespace qkz;

std::string engine_slug() {
    std::string s = engine_version();
    for (auto& ch : s)
        if (ch == ' ') ch = '-';
    return s;
}

std::string format_table(const ResultTable& t, const std::string& format) {
    if (format == "json") return to_json(t);
    if (format == "csv") return to_csv(t);
    return to_pretty(t);
}

// Cache plumbing. Nothing is touched unless QKZ_CACHE_DIR is set; entries are
// keyed by command parameters and engine version and written atomically.
std::optional<std::string> cache_path(const std::string& key) {
    const char* dir = std::getenv("QKZ_CACHE_DIR");
    if (!dir || !*dir) return std::nullopt;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    return std::string(dir) + "/" + key + "-" + engine_slug() + ".json";
}

struct CacheOutcome {
    ResultTable table;
    bool mismatch = false;
    std::string path;
};

CacheOutcome cached_table(const std::string& key, bool audit,
                          const std::function<ResultTable()>& compute) {
    CacheOutcome out;
    auto path = cache_path(key);
    if (!path) {
        out.table = compute();
        return out;
    }
    out.path = *path;
    if (auto text = read_text_file(*path)) {
        try {
            ResultTable cached = from_json(*text);
            if (audit) {
                ResultTable fresh = compute();
                if (table_hash(cached) != table_hash(fresh)) {
                    out.mismatch = true;
                    out.table = std::move(fresh);
                    return out;
                }
            }
            out.table = std::move(cached);
            return out;
        } catch (const std::runtime_error&) {
            // an unreadable entry is recomputed and replaced below
        }
    }
    out.table = compute();
    write_text_atomic(*path, to_json(out.table));
    return out;
}

int emit_cached(const std::string& key, bool use_cache, bool audit,
                const std::string& format, const std::function<ResultTable()>& compute) {
    if (!use_cache) {
        std::cout << format_table(compute(), format);
        return 0;
    }
    CacheOutcome out = cached_table(key, audit, compute);
    if (out.mismatch) {
        std::cerr << "cache mismatch: " << out.path
                  << " disagrees with a fresh computation\n";
        return 1;
    }
    std::cout << format_table(out.table, format);
    return 0;
}

int run_lp_list(int N) {
    if (N < 1 || N > 12) {
        std::cerr << "size must lie between 1 and 12 sites\n";
        return 2;
    }
    auto pats = enumerate_patterns(N);
    std::cout << N << " sites, " << pats.size() << " patterns\n";
    auto joined = [](const std::vector<int>& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) s += " ";
            s += std::to_string(v[i]);
        }
        return s.empty() ? std::string("-") : s;
    };
    for (size_t i = 0; i < pats.size(); ++i)
        std::cout << (i + 1) << "  " << pats[i].str() << "  openings "
                  << joined(pats[i].openings()) << "  closings "
                  << joined(pats[i].closings()) << "  boxes " << pats[i].box_count()
                  << "\n";
    return 0;
}

int run_psi(int N, const std::string& tau_at, const std::string& format, int jobs,
            bool audit) {
    if (N < 2 || N > 9) {
        std::cerr << "size must lie between 2 and 9 sites\n";
        return 2;
    }
    if (!tau_at.empty()) {
        try {
            Int probe(tau_at);
        } catch (const std::exception&) {
            std::cerr << "--tau-at needs a decimal integer\n";
            return 2;
        }
    }
    auto compute = [&] {
        PsiVector v = (N % 2 == 0) ? psi_even(N / 2, jobs) : psi_odd((N - 1) / 2, jobs);
        return make_psi_table(v, tau_at);
    };
    // evaluated tables are cheap relative to the base run, so only the plain
    // vector participates in the cache
    bool use_cache = tau_at.empty();
    return emit_cached("psi-n" + std::to_string(N), use_cache, audit, format, compute);
}

int run_sumrule(int n, const std::string& parity, const std::string& t_spec,
                const std::string& format, bool audit) {
    if (n < 1 || n > 4) {
        std::cerr << "--n must lie between 1 and 4\n";
        return 2;
    }
    Parity p = parity == "even" ? Parity::Even : Parity::Odd;
    auto compute = [&] { return make_sumrule_table(sum_rule_report(n, p), t_spec); };
    bool use_cache = t_spec == "symbolic";
    return emit_cached("sumrule-" + parity + "-n" + std::to_string(n), use_cache, audit,
                       format, compute);
}

int run_verify(int max_n, const std::vector<std::string>& suites, int jobs,
               const std::string& format) {
    VerifyReport rep;
    try {
        rep = run_suites(suites, max_n, jobs);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    std::vector<std::string> shown;
    if (!suites.empty())
        for (const auto& [name, results] : rep.suites) shown.push_back(name);
    std::cout << format_table(make_verify_table(rep, max_n, shown), format);
    return rep.all_ok() ? 0 : 1;
}

int run_vsasm(int size) {
    try {
        std::cout << vsasm_count(size).get_str() << "\n";
    } catch (const std::domain_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}

int run_nilp(const std::vector<int>& b) {
    try {
        ClosingIndex ci(b);
        std::cout << count_nilp(ci).get_str() << "\n";
    } catch (const std::domain_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}

int run_arrays(int n, int variant) {
    if (n < 1 || n > 5 || (variant != 0 && variant != 1)) {
        std::cerr << "--n must lie between 1 and 5 and --variant must be 0 or 1\n";
        return 2;
    }
    TauPoly p = t_poly(n, variant);
    std::cout << p.str("x") << "\n";
    std::cout << "total " << p.eval(1).get_str() << "\n";
    return 0;
}

int run_qkz(int n, int jobs) {
    if (n < 1 || n > 3) {
        std::cerr << "--n must lie between 1 and 3\n";
        return 2;
    }
    bool all = true;
    auto show = [&](const CheckResult& r) {
        if (!r.ok) all = false;
        std::cout << (r.ok ? "pass  " : "FAIL  ") << r.name;
        if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
        std::cout << "\n";
    };
    auto v = solve_exchange(n);
    for (const auto& r : verify_qkz_system(v)) show(r);
    LaurentScalar c;
    auto m = homogeneous_match(v, psi_even(n, jobs), &c);
    m.name = "closing expansion match, " + std::to_string(2 * n) + " sites";
    if (m.ok) m.detail = "global factor " + c.str();
    show(m);
    if (n >= 2) {
        auto vo = odd_reduce(v);
        LaurentScalar co;
        auto mo = homogeneous_match(vo, psi_odd(n - 1, jobs), &co);
        mo.name = "closing expansion match, " + std::to_string(2 * n - 1) + " sites";
        if (mo.ok) mo.detail = "global factor " + co.str();
        show(mo);
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact ground-state components of boundary loop models"};
    app.require_subcommand(1);

    int rc = 0;

    auto* lp = app.add_subcommand("lp", "link pattern utilities");
    lp->require_subcommand(1);
    auto* lp_list = lp->add_subcommand("list", "list the patterns of one size");
    int lp_size = 0;
    lp_list->add_option("--size", lp_size, "number of boundary sites")->required();
    lp_list->callback([&] { rc = run_lp_list(lp_size); });

    auto* psi = app.add_subcommand("psi", "solution vector at one size");
    int psi_size = 0, psi_jobs = 1;
    std::string psi_tau, psi_format = "pretty";
    bool psi_audit = false;
    psi->add_option("--size", psi_size, "number of boundary sites (2..9)")->required();
    psi->add_option("--tau-at", psi_tau, "also evaluate every component at this integer");
    psi->add_option("--format", psi_format, "json, csv, or pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    psi->add_option("--jobs", psi_jobs, "worker threads")->check(CLI::Range(1, 64));
    psi->add_flag("--verify-cache", psi_audit,
                  "recompute despite a cache hit and fail on any hash mismatch");
    psi->callback([&] { rc = run_psi(psi_size, psi_tau, psi_format, psi_jobs, psi_audit); });

    auto* sum = app.add_subcommand("sumrule", "component totals by both routes");
    int sum_n = 0;
    std::string sum_parity, sum_t = "symbolic", sum_format = "pretty";
    bool sum_audit = false;
    sum->add_option("--n", sum_n, "half the number of paired sites (1..4)")->required();
    sum->add_option("--parity", sum_parity, "even or odd site count")
        ->required()
        ->check(CLI::IsMember({"even", "odd"}));
    sum->add_option("--t", sum_t, "t substitution")
        ->check(CLI::IsMember({"symbolic", "0", "1", "inf", "tau", "inv-tau"}));
    sum->add_option("--format", sum_format, "json, csv, or pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    sum->add_flag("--verify-cache", sum_audit,
                  "recompute despite a cache hit and fail on any hash mismatch");
    sum->callback([&] { rc = run_sumrule(sum_n, sum_parity, sum_t, sum_format, sum_audit); });

    auto* ver = app.add_subcommand("verify", "run structural check suites");
    int ver_max_n = 3, ver_jobs = 1;
    std::vector<std::string> ver_suites;
    std::string ver_format = "pretty";
    ver->add_option("--max-n", ver_max_n, "size bound handed to every suite")
        ->check(CLI::Range(1, 8));
    ver->add_option("--suite", ver_suites,
                    "suite name (repeatable); omit to run tl, basis, lemmas, limits, "
                    "sumrules, oracle, tilings");
    ver->add_option("--jobs", ver_jobs, "worker threads")->check(CLI::Range(1, 64));
    ver->add_option("--format", ver_format, "json, csv, or pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    ver->callback([&] { rc = run_verify(ver_max_n, ver_suites, ver_jobs, ver_format); });

    auto* oracle = app.add_subcommand("oracle", "independent reference computations");
    oracle->require_subcommand(1);

    auto* vs = oracle->add_subcommand("vsasm", "symmetric alternating sign matrix count");
    int vs_size = 0;
    vs->add_option("--size", vs_size, "matrix size (odd, at most 7)")->required();
    vs->callback([&] { rc = run_vsasm(vs_size); });

    auto* ni = oracle->add_subcommand("nilp", "non-intersecting path family count");
    std::vector<int> ni_b;
    ni->add_option("--b", ni_b, "closing positions, comma separated")
        ->required()
        ->delimiter(',');
    ni->callback([&] { rc = run_nilp(ni_b); });

    auto* ar = oracle->add_subcommand("arrays", "triangular array generating polynomial");
    int ar_n = 0, ar_variant = 1;
    ar->add_option("--n", ar_n, "array size (1..5)")->required();
    ar->add_option("--variant", ar_variant, "first-column bound variant, 0 or 1");
    ar->callback([&] { rc = run_arrays(ar_n, ar_variant); });

    auto* qk = oracle->add_subcommand("qkz", "exchange-equation solve and cross checks");
    int qk_n = 0, qk_jobs = 1;
    qk->add_option("--n", qk_n, "number of arches (1..3)")->required();
    qk->add_option("--jobs", qk_jobs, "worker threads")->check(CLI::Range(1, 64));
    qk->callback([&] { rc = run_qkz(qk_n, qk_jobs); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
