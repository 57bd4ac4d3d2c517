#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <superint/berezin.hpp>
#include <superint/errors.hpp>
#include <superint/io.hpp>
#include <superint/lie_super.hpp>
#include <superint/supermatrix.hpp>
#include <superint/verify.hpp>

using namespace superint;

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

IntegrationBackend parse_backend(const std::vector<std::string> &args, const SuperDomainShape &shape)
{
    if (args.empty()) {
        throw UsageError("--backend needs 'gaussian' or 'box a1 b1 ...'");
    }
    if (args[0] == "gaussian") {
        if (args.size() != 1) {
            throw UsageError("--backend gaussian takes no further values");
        }
        return IntegrationBackend::gaussian();
    }
    if (args[0] != "box") {
        throw UsageError("unknown backend '" + args[0] + "' (expected gaussian or box)");
    }
    const std::size_t want = 2 * shape.even_count();
    if (args.size() - 1 != want) {
        throw UsageError("--backend box needs " + std::to_string(want) + " endpoints, got "
                         + std::to_string(args.size() - 1));
    }
    Box box;
    for (std::size_t i = 1; i < args.size(); i += 2) {
        Rational a, b;
        try {
            a = parse_scalar(args[i]).rational();
            b = parse_scalar(args[i + 1]).rational();
        } catch (const ParseError &e) {
            throw UsageError("bad box endpoint: " + std::string(e.what()));
        }
        if (b < a) {
            throw UsageError("box interval [" + a.get_str() + ", " + b.get_str() + "] is empty");
        }
        box.push_back(Interval::closed(a, b));
    }
    return IntegrationBackend::over_box(std::move(box));
}

std::vector<unsigned> parse_index_list(const std::string &text)
{
    std::vector<unsigned> out;
    if (text.empty()) {
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 6) {
            throw UsageError("bad subalgebra index '" + item + "'");
        }
        out.push_back(static_cast<unsigned>(std::stoul(item)));
    }
    return out;
}

int print_report(const SuiteReport &r)
{
    std::cout << r.str();
    return r.pass() ? exit_ok : exit_failure;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact Berezin calculus on superdomains and small supergroups"};
    app.require_subcommand(1);

    std::string ber_file;
    auto *ber = app.add_subcommand("ber", "Berezinian of a supermatrix file");
    ber->add_option("file", ber_file, "header 'p q N', then (p+q)^2 entries row-major")->required();

    std::string int_file;
    std::vector<std::string> backend_spec{"gaussian"};
    auto *integ = app.add_subcommand("integrate", "Berezin integral of a density file");
    integ->add_option("file", int_file, "superfunction file: density rho in D(x, xi) rho")->required();
    integ->add_option("--backend", backend_spec, "gaussian | box a1 b1 a2 b2 ...")->expected(1, -1);

    std::string lie_file, subalgebra;
    auto *uni = app.add_subcommand("unimodular", "infinitesimal unimodularity of g/h");
    uni->add_option("file", lie_file, "structure-constant file")->required();
    uni->add_option("--subalgebra", subalgebra, "comma-separated basis indices spanning h");

    auto *ex = app.add_subcommand("examples", "built-in verifications");
    ex->require_subcommand(1);
    ex->add_subcommand("list", "list example names");
    std::string example_name;
    auto *ex_run = ex->add_subcommand("run", "run a named example");
    ex_run->add_option("name", example_name)->required();

    std::string suite = "all";
    std::uint64_t seed = default_seed;
    auto *ver = app.add_subcommand("verify", "run a property suite (or 'all')");
    ver->add_option("suite", suite, "suite name or 'all'");
    ver->add_option("--seed", seed, "seed for randomized suites")->capture_default_str();
    ver->add_flag_callback("--list", [] {
        for (const auto &n : suite_names()) {
            std::cout << n << '\n';
        }
        std::exit(exit_ok);
    }, "list suite names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    std::string current_file;
    try {
        if (ber->parsed()) {
            current_file = ber_file;
            const auto x = parse_supermatrix(read_text_file(ber_file));
            std::cout << berezinian(x).str() << '\n';
            return exit_ok;
        }
        if (integ->parsed()) {
            current_file = int_file;
            const auto f = parse_superfunction(read_text_file(int_file));
            current_file.clear();
            const auto backend = parse_backend(backend_spec, f.shape());
            const BerezinSection omega(f);
            if (f.shape().aux > 0) {
                std::cout << integrate_graded(omega, backend).str() << '\n';
            } else {
                std::cout << integrate(omega, backend).str() << '\n';
            }
            return exit_ok;
        }
        if (uni->parsed()) {
            current_file = lie_file;
            const auto g = parse_lie_algebra(read_text_file(lie_file));
            current_file.clear();
            const auto valid = validate(g);
            if (!valid.ok) {
                std::cerr << "error: not a Lie superalgebra: " << valid.failure << '\n';
                return exit_failure;
            }
            const SubalgebraSpec h{parse_index_list(subalgebra)};
            for (unsigned i : h.span) {
                if (i >= g.dim()) {
                    throw UsageError("subalgebra index " + std::to_string(i) + " out of range (dim "
                                     + std::to_string(g.dim()) + ")");
                }
            }
            const auto v = unimodularity_check(g, h);
            std::cout << v.str(g) << '\n';
            std::cout << "# infinitesimal criterion, decides the question for connected H\n";
            return exit_ok;
        }
        if (ex->parsed()) {
            if (ex_run->parsed()) {
                bool known = false;
                for (const auto &n : example_names()) {
                    known = known || n == example_name;
                }
                if (!known) {
                    throw UsageError("unknown example '" + example_name + "' (see 'examples list')");
                }
                return print_report(run_example(example_name));
            }
            for (const auto &n : example_names()) {
                std::cout << n << '\n';
            }
            return exit_ok;
        }
        if (ver->parsed()) {
            std::vector<std::string> names;
            if (suite == "all") {
                names = suite_names();
            } else {
                for (const auto &n : suite_names()) {
                    if (n == suite) {
                        names.push_back(n);
                    }
                }
                if (names.empty()) {
                    throw UsageError("unknown suite '" + suite + "' (see 'verify --list')");
                }
            }
            bool all = true;
            for (const auto &n : names) {
                all = print_report(run_suite(n, seed)) == exit_ok && all;
            }
            return all ? exit_ok : exit_failure;
        }
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << (current_file.empty() ? "" : current_file + ": ") << e.what() << '\n';
        return exit_usage;
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const IoError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_usage;
}
