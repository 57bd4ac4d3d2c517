// One line per acceptance criterion; exit status 0 iff every criterion holds.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <superint/berezin.hpp>
#include <superint/errors.hpp>
#include <superint/io.hpp>
#include <superint/lie_super.hpp>
#include <superint/supergroup.hpp>
#include <superint/supermatrix.hpp>
#include <superint/verify.hpp>

using namespace superint;

namespace
{

constexpr double time_budget_seconds = 60.0;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string &what)
    {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

// Suite must pass every check and have at least `min_checks` of them.
void suite(Outcome &o, const std::string &name, std::size_t min_checks)
{
    const auto r = run_suite(name);
    o.require(r.pass(), name + " " + std::to_string(r.passed()) + "/" + std::to_string(r.checks.size()));
    o.require(r.checks.size() >= min_checks, name + " has only " + std::to_string(r.checks.size()) + " checks");
    for (const auto &c : r.checks) {
        if (!c.pass) {
            o.require(false, c.str());
            break;
        }
    }
    if (o.pass) {
        o.detail += (o.detail.empty() ? "" : ", ") + name + " " + std::to_string(r.passed()) + "/"
                    + std::to_string(r.checks.size());
    }
}

Outcome berezinian_multiplicativity()
{
    Outcome o;
    suite(o, "berezinian-multiplicativity", 200);
    return o;
}

Outcome homological()
{
    Outcome o;
    struct Case {
        unsigned p, q;
    };
    for (const auto &c : {Case{1, 0}, Case{0, 1}, Case{1, 1}, Case{2, 1}, Case{1, 2}}) {
        const auto h = homological_berezinian(c.p, c.q, c.p + c.q + 2);
        const std::string tag = "(" + std::to_string(c.p) + "|" + std::to_string(c.q) + ")";
        o.require(h.total_dim == 1, tag + " dim " + std::to_string(h.total_dim));
        o.require(h.parity == parity_of(c.q), tag + " parity " + to_string(h.parity));
    }
    suite(o, "homological", 5);
    return o;
}

Outcome change_of_variables()
{
    Outcome o;
    suite(o, "change-of-variables", 50);
    return o;
}

Outcome fubini_signs()
{
    Outcome o;
    const auto r = run_suite("fubini-signs");
    o.require(r.checks.size() == 81, "expected 81 cases, got " + std::to_string(r.checks.size()));
    o.require(r.pass(), std::to_string(r.passed()) + "/81");
    // (m, n, p, q) = (1, 1, 1, 1) by hand: D(x,xi) xi x^2 and D(y,eta) eta (1 + y^2)
    const auto w1 = BerezinSection(parse_superfunction("1 1 0\nx1^2 : xi1"));
    const auto w2 = BerezinSection(parse_superfunction("1 1 0\nx1^2 + 1 : xi1"));
    const auto g = IntegrationBackend::gaussian();
    o.require(integrate(product_section(w1, w2), g) == Scalar(2, 2), "(1,1,1,1) product integral");
    if (o.pass) {
        o.detail = "81/81";
    }
    return o;
}

Outcome module_rule()
{
    Outcome o;
    suite(o, "module-rule", 100);
    return o;
}

Outcome fubini_formula()
{
    Outcome o;
    suite(o, "fubini", 6);
    struct Expect {
        FubiniSetup setup;
        int sign;
    };
    for (const auto &[setup, sign] : {Expect{fubini_r11(), -1}, Expect{fubini_heisenberg(), 1},
                                       Expect{fubini_ax_plus_b(), -1}}) {
        const auto r = fubini_check(setup);
        o.require(r.pass && r.lhs == r.rhs, setup.name + " lhs=" + r.lhs.str() + " rhs=" + r.rhs.str());
        o.require(r.sign == sign && r.fibre_sign == sign, setup.name + " sign");
    }
    // by hand: f . D(x, xi) = D(x, xi) (x^2 - (3 x^2 + 1) xi), so the integral is (-1) (-(3 s + s))
    o.require(fubini_check(fubini_r11()).lhs == Scalar(4, 1), "R^1|1 integral");
    return o;
}

Outcome product_of_subgroups()
{
    Outcome o;
    suite(o, "product", 4);
    for (bool odd_first : {true, false}) {
        const auto r = product_formula_check(product_ax_plus_b(odd_first));
        const std::string tag = odd_first ? "odd.even" : "even.odd";
        o.require(r.pass && r.lhs == r.rhs, tag + " lhs=" + r.lhs.str() + " rhs=" + r.rhs.str());
        const auto oracle = ax_plus_b_ratio_oracle(odd_first);
        o.require(r.ratio == oracle, tag + " ratio " + r.ratio.str() + " vs oracle " + oracle.str());
        const auto &hs = r.ratio.shape();
        const auto expected = odd_first ? SuperFunction::even_coordinate(hs, 0) : SuperFunction(hs, Rational(1));
        o.require(r.ratio == expected, tag + " ratio " + r.ratio.str());
    }
    return o;
}

Outcome unimodularity()
{
    Outcome o;
    suite(o, "unimodular", 100);
    const auto g = general_linear(1, 1);
    o.require(unimodularity_check(g, {{}}).str(g) == "UNIMODULAR", "gl(1|1), h = 0");
    const auto borel = unimodularity_check(g, {{0, 1, 2}});
    o.require(borel.str(g) == "NOT_UNIMODULAR witness=E11 str=1", "Borel: " + borel.str(g));
    const auto ab = abelian_algebra({{"a", Parity::even}, {"b", Parity::odd}, {"c", Parity::odd}});
    o.require(unimodularity_check(ab, {{1}}).unimodular, "abelian (1|2)");
    return o;
}

Outcome density_uniqueness()
{
    Outcome o;
    for (const auto &g : {translation_group(1, 1), translation_group(2, 2), super_heisenberg(), super_ax_plus_b(),
                          multiplicative_group(), gl11_chart()}) {
        const auto d = solve_invariant_density(g, Side::left).dimension();
        o.require(d == 1, g.name + " dim " + std::to_string(d));
    }
    suite(o, "invariant-density", 12);
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"berezinian-multiplicativity", berezinian_multiplicativity},
        {"homological-berezinian", homological},
        {"change-of-variables", change_of_variables},
        {"fibre-integration-sign", fubini_signs},
        {"module-rule-and-support", module_rule},
        {"fubini-formula", fubini_formula},
        {"product-of-subgroups", product_of_subgroups},
        {"unimodularity", unimodularity},
        {"invariant-density-uniqueness", density_uniqueness},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs >= time_budget_seconds) {
            o.require(false, "over time budget");
        }
        char time[32];
        std::snprintf(time, sizeof time, "%.2fs", secs);
        std::cout << (o.pass ? "PASS" : "FAIL") << ' ' << i + 1 << ' ' << criteria[i].first << " [" << time << "] "
                  << o.detail << '\n';
        failed += !o.pass;
    }
    std::cout << "acceptance: " << criteria.size() - failed << '/' << criteria.size() << " passed\n";
    return failed == 0 ? 0 : 1;
}
