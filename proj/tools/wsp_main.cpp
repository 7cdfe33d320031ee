#include "wsp/bounds.hpp"
#include "wsp/cotangent.hpp"
#include "wsp/enumerate.hpp"
#include "wsp/errors.hpp"
#include "wsp/families.hpp"
#include "wsp/family_ideal.hpp"
#include "wsp/report.hpp"
#include "wsp/semigroup.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::vector<long long> parse_comma_list(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) throw wsp::input_error("empty entry in list: " + text);
        std::size_t used = 0;
        long long value = std::stoll(token, &used);
        if (used != token.size()) throw wsp::input_error("bad integer in list: " + token);
        out.push_back(value);
    }
    if (out.empty()) throw wsp::input_error("empty list");
    return out;
}

int resolve_max_genus(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("WSP_MAX_GENUS")) {
        int value = std::atoi(env);
        if (value > 0) return value;
    }
    return wsp::kDefaultGenusCap;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical semigroup invariants, graded T^1 and moduli bounds"};
    app.require_subcommand(1);
    int max_genus_flag = 0;
    app.add_option("--max-genus", max_genus_flag, "genus cap for enumeration");

    std::vector<long long> gens;
    std::string gaps_list;

    auto* info = app.add_subcommand("info", "basic invariants of a semigroup");
    info->add_option("gens", gens, "generators");
    info->add_option("--gaps", gaps_list, "comma-separated gap list instead of generators");

    std::vector<long long> t1_gens;
    bool t1_json = false;
    auto* t1 = app.add_subcommand("t1", "graded dimensions of T^1");
    t1->add_option("gens", t1_gens, "generators")->required();
    t1->add_flag("--json", t1_json, "emit the full JSON report");

    std::vector<long long> bounds_gens;
    bool bounds_json = false;
    auto* bounds = app.add_subcommand("bounds", "moduli dimension bounds");
    bounds->add_option("gens", bounds_gens, "generators")->required();
    bounds->add_flag("--json", bounds_json, "emit the full JSON report");

    int genus = 0;
    bool only_positive = false;
    auto* enumerate = app.add_subcommand("enumerate", "all semigroups of a genus, as CSV");
    enumerate->add_option("--genus", genus, "genus")->required();
    enumerate->add_flag("--only-positive-t1", only_positive, "keep rows with t1_plus > 0");

    app.add_subcommand("table1", "genus 2..6 semigroups with positive T^{1,+}");

    int family_id = 0;
    long long tau = 0;
    bool verify = false;
    auto* family_cmd = app.add_subcommand("family", "a multiplicity-6 symmetric family member");
    family_cmd->add_option("--id", family_id, "family id (1 or 2)")->required();
    family_cmd->add_option("--tau", tau, "family parameter, >= 1")->required();
    family_cmd->add_flag("--verify", verify, "recompute and check every closed form");

    int eq_family_id = 0;
    long long eq_tau = 0;
    auto* equations = app.add_subcommand("family-equations", "the 5*tau base-space equations");
    equations->add_option("--id", eq_family_id, "family id (1 or 2)")->required();
    equations->add_option("--tau", eq_tau, "family parameter, >= 1")->required();

    long long syz_tau = 0;
    auto* syzygies = app.add_subcommand("family-syzygies", "check the eight family-1 syzygies");
    syzygies->add_option("--tau", syz_tau, "family parameter, >= 1")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (info->parsed()) {
            if (gens.empty() == gaps_list.empty())
                throw wsp::input_error("info takes either generators or --gaps");
            const auto s = gens.empty() ? wsp::from_gaps(parse_comma_list(gaps_list))
                                        : wsp::from_generators(gens);
            std::cout << wsp::info_text(s);
        } else if (t1->parsed()) {
            const auto s = wsp::from_generators(t1_gens);
            if (t1_json)
                std::cout << wsp::json_report(s).dump(2) << "\n";
            else
                std::cout << wsp::t1_text(s, wsp::t1_table(s));
        } else if (bounds->parsed()) {
            const auto s = wsp::from_generators(bounds_gens);
            if (bounds_json)
                std::cout << wsp::json_report(s).dump(2) << "\n";
            else
                std::cout << wsp::bounds_text(s, wsp::bounds_report(s));
        } else if (enumerate->parsed()) {
            std::cout << wsp::kCsvHeader << "\n";
            for (const auto& s : wsp::semigroups_of_genus(genus, resolve_max_genus(max_genus_flag))) {
                const auto report = wsp::bounds_report(s);
                if (only_positive && report.t1_plus <= 0) continue;
                std::cout << wsp::csv_row(s, report) << "\n";
            }
        } else if (app.get_subcommand("table1")->parsed()) {
            std::cout << wsp::table1_text(wsp::table1_report());
        } else if (family_cmd->parsed()) {
            const auto spec = wsp::family(family_id, tau);
            std::cout << "generators: " << wsp::join(spec.semigroup.min_gens()) << "\n";
            std::cout << "genus: " << spec.closed_genus << "\n";
            std::cout << "frobenius: " << spec.closed_frobenius << "\n";
            std::cout << "t1_minus: " << spec.closed_t1_minus << "\n";
            std::cout << "moduli_dim: " << spec.closed_moduli_dim << "\n";
            if (spec.closed_cone_dim)
                std::cout << "cone_dim: " << *spec.closed_cone_dim << "\n";
            if (verify) {
                const auto result = wsp::verify_family(spec);
                for (const auto& check : result.checks)
                    std::cout << check.name << " = " << check.value << " ✓\n";
            }
        } else if (equations->parsed()) {
            const auto eqs = wsp::fam::base_equations(eq_family_id, eq_tau);
            for (std::size_t i = 0; i < eqs.size(); ++i)
                std::cout << "eq" << i + 1 << ": " << eqs[i].to_string() << "\n";
        } else if (syzygies->parsed()) {
            wsp::fam::verify_syzygies_family1(syz_tau);
            std::cout << "all 8 syzygies hold for tau = " << syz_tau << "\n";
        }
    } catch (const wsp::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const wsp::formula_inconsistency& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const wsp::verification_failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
