#include "supclose/commands.hh"
#include "supclose/errors.hh"
#include "supclose/session.hh"
#include "supclose/verify.hh"
#include "supclose/version.hh"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

// Exit-code contract: 0 success (including "exists": false), 1 verification
// failure, 2 parse/reference error, 3 unsupported domain, 4 internal error.
enum ExitCode {
    exit_ok = 0,
    exit_verify_failed = 1,
    exit_parse = 2,
    exit_unsupported = 3,
    exit_internal = 4,
};

const std::map<std::string, std::string>& command_help()
{
    static const std::map<std::string, std::string> help = {
        {"ann", "annihilator of a module, or of an element (one representative per component)"},
        {"ass", "associated primes of a monomial cyclic-sum module"},
        {"conductor", "conductor exponent ideal of a semigroup extension"},
        {"critical", "critical ideal of a monomial module, if it exists"},
        {"crucial", "crucial ideal of a monomial module, if it exists"},
        {"denominator", "denominator exponent ideal d(n) of a semigroup extension"},
        {"intersect", "intersection of two named ideals"},
        {"nagata-conductor-member", "conductor membership for a rational function P/Q over a semigroup extension"},
        {"nagata-oda-member", "Oda-ideal membership for a rational function P/Q over a semigroup extension"},
        {"oda", "generators of the Oda ideal of a monomial module"},
        {"oda-member", "is the polynomial in the Oda ideal, i.e. does a power "
                       "of it annihilate every element of the module?"},
        {"quotient", "ideal quotient (I : J) or (I : f)"},
        {"radical-member", "is a polynomial in the radical of an ideal?"},
        {"saturate", "saturation of an ideal by a polynomial"},
        {"sg-analyze", "Oda/conductor/crucial/critical analysis of a semigroup extension"},
        {"support-closure", "Zariski closure of the support of a monomial module"},
        {"z-oda", "Oda ideal of a Z-module"},
        {"z-supp", "support of a Z-module and its closure"},
        {"zloc-analyze", "full analysis of Z inside Z[1/n]"},
    };
    return help;
}

int report_failure(const std::string& kind, const std::string& what, int code)
{
    std::cerr << "supclose: " << kind << ": " << what << "\n";
    return code;
}

} // namespace

int main(int argc, char** argv)
{
    using namespace supclose;

    CLI::App app{"exact closures of module supports: Oda ideals, conductors, "
                 "crucial and critical ideals over polynomial rings, numerical "
                 "semigroup rings, and Z"};
    app.set_version_flag("--version", std::string(kEngine));
    app.require_subcommand(1);

    std::string session_path;
    app.add_option("-f,--file", session_path,
                   "session file declaring named rings, ideals, modules, "
                   "semigroups and Z-side objects (JSON)");

    std::map<std::string, std::vector<std::string>> command_args;
    for (const std::string& name : command_names()) {
        const auto it = command_help().find(name);
        CLI::App* sub = app.add_subcommand(
            name, it == command_help().end() ? std::string() : it->second);
        // let "supclose oda E -f s.json" reach the app-level -f option
        sub->fallthrough();
        sub->add_option("args", command_args[name], "command arguments");
    }

    CLI::App* verify = app.add_subcommand(
        "verify", "run the randomized theorem-verification suites");
    std::vector<std::string> suites;
    uint64_t seed = 2026;
    long count = -1;
    verify
        ->add_option("--suite", suites,
                     "suite name, repeatable ('all' runs every suite)")
        ->check(CLI::IsMember([] {
            std::vector<std::string> ok = suite_names();
            ok.push_back("all");
            return ok;
        }()));
    verify->add_option("--seed", seed, "corpus seed");
    verify->add_option("--count", count,
                       "cases per suite (-1 keeps each suite's default, 0 is "
                       "a vacuous pass)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_parse;
    }

    try {
        const auto t0 = std::chrono::steady_clock::now();

        if (verify->parsed()) {
            std::vector<SuiteResult> results = run_suites(suites, seed, count);
            bool ok = true;
            nlohmann::json suites_json = nlohmann::json::array();
            for (const SuiteResult& r : results) {
                ok = ok && r.ok();
                suites_json.push_back({{"name", r.name},
                                       {"cases", r.cases},
                                       {"ok", r.ok()},
                                       {"vacuous", r.vacuous},
                                       {"failures", r.failures}});
                if (r.vacuous)
                    std::cerr << "supclose: warning: suite '" << r.name
                              << "' ran zero cases (vacuous pass)\n";
                for (const std::string& f : r.failures)
                    std::cerr << "supclose: " << r.name << ": " << f << "\n";
            }
            const double ms = std::chrono::duration<double, std::milli>(
                                  std::chrono::steady_clock::now() - t0)
                                  .count();
            std::vector<std::string> echo = suites;
            echo.push_back("seed=" + std::to_string(seed));
            echo.push_back("count=" + std::to_string(count));
            nlohmann::json report = make_report(
                "verify", echo, {{"ok", ok}, {"suites", suites_json}}, ms);
            std::cout << report.dump(2) << "\n";
            return ok ? exit_ok : exit_verify_failed;
        }

        Session session;
        if (!session_path.empty())
            session = parse_session(session_path);

        for (CLI::App* sub : app.get_subcommands()) {
            const std::string& name = sub->get_name();
            nlohmann::json result =
                run_command(session, name, command_args[name]);
            const double ms = std::chrono::duration<double, std::milli>(
                                  std::chrono::steady_clock::now() - t0)
                                  .count();
            nlohmann::json report =
                make_report(name, command_args[name], std::move(result), ms);
            std::cout << report.dump(2) << "\n";
        }
        return exit_ok;
    } catch (const parse_error& e) {
        return report_failure("parse error", e.what(), exit_parse);
    } catch (const lookup_error& e) {
        return report_failure("reference error", e.what(), exit_parse);
    } catch (const unsupported_domain& e) {
        return report_failure("unsupported domain", e.what(), exit_unsupported);
    } catch (const internal_error& e) {
        return report_failure("internal error", e.what(), exit_internal);
    } catch (const std::exception& e) {
        return report_failure("internal error", e.what(), exit_internal);
    }
}
