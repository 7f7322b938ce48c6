// Command-line surface: series expansion, dissection, identity verification,
// oracle queries, and the congruence suite. Exit codes: 0 all executed checks
// passed, 1 a check failed, 2 usage or parse error.

#include <chrono>
#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "etaq/congruence.hpp"
#include "etaq/errors.hpp"
#include "etaq/eta.hpp"
#include "etaq/expr.hpp"
#include "etaq/identities.hpp"
#include "etaq/oracle.hpp"
#include "etaq/quotient_grammar.hpp"
#include "etaq/report_io.hpp"
#include "etaq/theorems.hpp"

namespace {

constexpr long kMaxOrder = 200000;

int check_order(long order) {
    if (order < 1) {
        std::cerr << "error: --order must be >= 1\n";
        return 2;
    }
    if (order > kMaxOrder) {
        std::cerr << "error: --order " << order << " exceeds the limit of " << kMaxOrder
                  << " coefficients; refusing to allocate that much\n";
        return 2;
    }
    return 0;
}

void print_coefficients(const etaq::Series& series, long order) {
    std::string line;
    for (long n = 0; n < order; ++n) {
        line = std::to_string(n);
        line += '\t';
        line += series.coeff(n).get_str();
        line += '\n';
        std::fputs(line.c_str(), stdout);
    }
}

int run_expand(const std::string& spec, long order) {
    if (int rc = check_order(order)) return rc;
    const etaq::ExprPtr expr = etaq::parse_quotient_expr(spec);
    print_coefficients(etaq::eval_expr(expr, order), order);
    return 0;
}

int run_dissect(const std::string& spec, long step, long residue, long order) {
    if (int rc = check_order(order)) return rc;
    if (step < 1 || residue < 0 || residue >= step) {
        std::cerr << "error: need t >= 1 and 0 <= r < t\n";
        return 2;
    }
    const long full = step * (order - 1) + residue + 1;
    if (full > kMaxOrder) {
        std::cerr << "error: dissection needs " << full
                  << " coefficients, over the limit of " << kMaxOrder << "\n";
        return 2;
    }
    const etaq::ExprPtr expr = etaq::parse_quotient_expr(spec);
    const etaq::Series series = etaq::eval_expr(expr, full);
    print_coefficients(etaq::extract_progression(series, step, residue), order);
    return 0;
}

struct ModpkParams {
    long p, k, l;
};

// "MODPK_p_k_l" ids let `verify` reach the Euler-power congruence family.
std::optional<ModpkParams> parse_modpk_id(const std::string& id) {
    if (id.rfind("MODPK_", 0) != 0) return std::nullopt;
    long v[3] = {0, 0, 0};
    std::size_t pos = 6;
    for (int i = 0; i < 3; ++i) {
        std::size_t next = id.find('_', pos);
        if (i < 2 && next == std::string::npos) return std::nullopt;
        if (i == 2) next = id.size();
        try {
            v[i] = std::stol(id.substr(pos, next - pos));
        } catch (const std::exception&) {
            return std::nullopt;
        }
        pos = next + 1;
    }
    return ModpkParams{v[0], v[1], v[2]};
}

const std::vector<ModpkParams> kStandardModpkRows = {{3, 1, 1}, {2, 3, 1}, {2, 1, 3}, {3, 2, 1}};

etaq::CheckReport run_modpk_row(const ModpkParams& params, long order) {
    etaq::CheckReport report = etaq::verify_modpk_family(params.p, params.k, params.l, order);
    report.note = report.id;
    report.id = "MODPK_" + std::to_string(params.p) + "_" + std::to_string(params.k) + "_" +
                std::to_string(params.l);
    return report;
}

template <typename Fn>
etaq::CheckReport timed(Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    etaq::CheckReport report = fn();
    report.millis = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    return report;
}

int run_verify(const std::string& id, long order, bool structured) {
    if (int rc = check_order(order)) return rc;
    const auto& registry = etaq::IdentityRegistry::standard();

    std::vector<etaq::CheckReport> reports;
    std::vector<std::string> citations;
    if (id == "all") {
        for (const auto& row : registry.rows()) {
            reports.push_back(timed([&] { return etaq::verify_identity(registry, row.id, order); }));
            citations.push_back(row.citation);
        }
        for (const auto& params : kStandardModpkRows) {
            reports.push_back(timed([&] { return run_modpk_row(params, order); }));
            citations.emplace_back("da Silva, Sellers, Lemma 3");
        }
    } else if (auto params = parse_modpk_id(id)) {
        reports.push_back(timed([&] { return run_modpk_row(*params, order); }));
        citations.emplace_back("da Silva, Sellers, Lemma 3");
    } else {
        reports.push_back(timed([&] { return etaq::verify_identity(registry, id, order); }));
        citations.push_back(registry.find(id)->citation);
    }

    long failures = 0;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        if (!reports[i].passed) ++failures;
        std::cout << (structured ? etaq::report_json_line(reports[i], citations[i])
                                 : etaq::report_text_line(reports[i], citations[i]))
                  << "\n";
    }
    if (!structured)
        std::cout << reports.size() << " identities checked to order " << order << ", "
                  << failures << " failed\n";
    return failures == 0 ? 0 : 1;
}

int run_theorems(const std::string& profile_name, bool structured) {
    etaq::Profile profile = etaq::Profile::Default;
    if (profile_name == "fast") profile = etaq::Profile::Fast;
    else if (profile_name == "deep") profile = etaq::Profile::Deep;
    else if (profile_name != "default") {
        std::cerr << "error: unknown profile '" << profile_name << "'\n";
        return 2;
    }

    const auto& suite = etaq::TheoremSuite::standard();
    const auto reports = suite.run_all(profile);

    long passed = 0, xfailed = 0, failed = 0;
    for (const auto& report : reports) {
        const etaq::TheoremCheck* row = suite.find(report.id);
        std::cout << (structured
                          ? etaq::report_json_line(report, row->citation, row->expected_fail)
                          : etaq::report_text_line(report, row->citation, row->expected_fail))
                  << "\n";
        if (report.passed == row->expected_fail) ++failed;
        else if (row->expected_fail) ++xfailed;
        else ++passed;
    }
    const bool ok = etaq::suite_passed(suite, reports);
    if (!structured)
        std::cout << reports.size() << " checks (" << etaq::to_string(profile) << " profile): "
                  << passed << " passed, " << xfailed << " expected failures, " << failed
                  << " unexpected\n";
    return ok ? 0 : 1;
}

int run_oracle(const std::string& statistic, const std::vector<long>& args,
               const std::string& parts_name) {
    etaq::OracleConfig config;
    if (statistic == "overpartitions") {
        if (args.size() != 1) {
            std::cerr << "usage: oracle overpartitions <n> [--parts all|odd]\n";
            return 2;
        }
        etaq::PartsPredicate parts = etaq::PartsPredicate::all();
        if (parts_name == "odd") parts = etaq::PartsPredicate::odd();
        else if (parts_name != "all") {
            std::cerr << "error: unknown parts predicate '" << parts_name << "'\n";
            return 2;
        }
        std::cout << etaq::count_overpartitions(args[0], parts, config).get_str() << "\n";
        return 0;
    }
    if (statistic == "lmu") {
        if (args.size() != 3) {
            std::cerr << "usage: oracle lmu <ell> <mu> <n>\n";
            return 2;
        }
        std::cout << etaq::count_lmu_regular(args[0], args[1], args[2], config).get_str()
                  << "\n";
        return 0;
    }
    if (statistic == "ppo") {
        if (args.size() != 1) {
            std::cerr << "usage: oracle ppo <n>\n";
            return 2;
        }
        std::cout << etaq::count_ppo(args[0], config).get_str() << "\n";
        return 0;
    }
    std::cerr << "error: unknown statistic '" << statistic
              << "' (expected overpartitions, lmu or ppo)\n";
    return 2;
}

int run_catalog(bool structured) {
    const auto& registry = etaq::IdentityRegistry::standard();
    for (const auto& row : registry.rows()) {
        if (structured) {
            etaq::CheckReport stub;
            stub.id = row.id;
            stub.passed = true;
            stub.order = etaq::kDefaultIdentityOrder;
            stub.note = row.modulus ? "mod " + row.modulus->get_str() : "exact";
            std::cout << etaq::report_json_line(stub, row.citation) << "\n";
        } else {
            std::cout << row.id << "\t" << (row.modulus ? "mod " + row.modulus->get_str() : "exact")
                      << "\t" << row.citation << "\n";
        }
    }
    if (!structured)
        std::cout << registry.rows().size() << " identities (default order "
                  << etaq::kDefaultIdentityOrder << ")\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"truncated q-series engine: eta quotients, theta identities and "
                 "overpartition congruence families"};
    app.require_subcommand(1);

    std::string spec, id = "all", profile = "default", statistic, format = "text",
                parts = "all";
    long order = 32, step = 1, residue = 0;
    std::vector<long> oracle_args;

    auto* expand = app.add_subcommand("expand", "expand an eta quotient; one 'n<TAB>coefficient' per line");
    expand->add_option("spec", spec, "e.g. \"f2/f1^2\" or \"phi*f1^2/f2\"")->required();
    expand->add_option("--order", order, "number of coefficients (default 32)");

    auto* dissect = app.add_subcommand("dissect", "extract the progression t*n + r of an expansion");
    dissect->add_option("spec", spec)->required();
    dissect->add_option("t", step, "progression step")->required();
    dissect->add_option("r", residue, "progression residue")->required();
    dissect->add_option("--order", order, "number of progression terms (default 32)");

    long verify_order = etaq::kDefaultIdentityOrder;
    auto* verify = app.add_subcommand("verify", "verify registered identities");
    verify->add_option("id", id, "identity id, MODPK_p_k_l, or 'all'");
    verify->add_option("--order", verify_order, "verification order (default 400)");
    verify->add_option("--format", format, "text | structured");

    auto* theorems = app.add_subcommand("theorems", "run the congruence suite");
    theorems->add_option("--profile", profile, "fast | default | deep");
    theorems->add_option("--format", format, "text | structured");

    auto* oracle = app.add_subcommand("oracle", "brute-force overpartition counts");
    oracle->add_option("statistic", statistic, "overpartitions | lmu | ppo")->required();
    oracle->add_option("args", oracle_args, "statistic arguments");
    oracle->add_option("--parts", parts, "all | odd (overpartitions only)");

    auto* catalog = app.add_subcommand("catalog", "dump the identity registry");
    catalog->add_option("--format", format, "text | structured");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (format != "text" && format != "structured") {
        std::cerr << "error: unknown format '" << format << "'\n";
        return 2;
    }
    const bool structured = format == "structured";

    try {
        if (expand->parsed()) return run_expand(spec, order);
        if (dissect->parsed()) return run_dissect(spec, step, residue, order);
        if (verify->parsed()) return run_verify(id, verify_order, structured);
        if (theorems->parsed()) return run_theorems(profile, structured);
        if (oracle->parsed()) return run_oracle(statistic, oracle_args, parts);
        if (catalog->parsed()) return run_catalog(structured);
    } catch (const etaq::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const etaq::UnknownIdentity& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const etaq::TooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const etaq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
