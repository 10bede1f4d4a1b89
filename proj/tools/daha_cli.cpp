// daha: normal forms, Dunkl actions and verification suites from the shell.
//
//   daha nf  "y1*x1 - x1*y1" --family H --type B --rank 1
//   daha mul "eta1" "xi1" --family oH --type A --rank 2
//   daha apply --family oH --type B --rank 2 --op eta1 --input "xi1^2 xi2"
//   daha check jacobi --family H --type B --rank 2
//   daha list
//
// Exit codes: 0 success or all cases pass, 1 some case fails, 2 usage error.

#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "daha/checks.hpp"
#include "daha/dunkl.hpp"
#include "daha/parse.hpp"

using namespace daha;

namespace {

struct Selectors {
    std::string family, type, params, map;
    int rank = 0, degree = -1;
    std::uint64_t seed = 1;
    bool json = false, unsafe_rank = false, inject_fault = false, timing = false;
};

void add_selectors(CLI::App* cmd, Selectors& s, bool for_check) {
    cmd->add_option("--family", s.family, "H, sH or oH")->check(CLI::IsMember({"H", "sH", "oH"}));
    cmd->add_option("--type", s.type, "Weyl type A, B or D")->check(CLI::IsMember({"A", "B", "D"}));
    cmd->add_option("--rank", s.rank, "rank n")->check(CLI::Range(1, kMaxRank));
    cmd->add_option("--params", s.params, "specialization, e.g. t=1/2,u=3");
    cmd->add_flag("--json", s.json, "JSON output");
    if (!for_check) return;
    cmd->add_option("--degree", s.degree, "polynomial degree bound")->check(CLI::Range(0, 12));
    cmd->add_option("--seed", s.seed, "random seed");
    cmd->add_option("--map", s.map, "isomorphism for the iso suite")
        ->check(CLI::IsMember({"phidot", "phikw", "phiddot", "phiplus", "h2sh", "sh2oh"}));
    cmd->add_flag("--unsafe-rank", s.unsafe_rank, "allow ranks over the suite budget");
    cmd->add_flag("--inject-fault", s.inject_fault, "run the corrupted fixture (negative control)");
    cmd->add_flag("--timing", s.timing, "include the running time in the report");
}

// Algebra for nf, mul and apply; defaults H, A, rank 2.
std::shared_ptr<const PBWAlgebra> algebra_of(const Selectors& s) {
    const FamilyKind f = s.family.empty() ? FamilyKind::H : family_kind_from_name(s.family);
    const Family ty = s.type.empty() ? Family::A : family_from_char(s.type[0]);
    const int n = s.rank ? s.rank : 2;
    return std::make_shared<PBWAlgebra>(make_spec(f, WeylType(ty, n), ParamOverride::parse(s.params)));
}

void print(const Algebra& alg, const Element& e, bool json) {
    if (json)
        std::cout << alg.to_json(e).dump() << "\n";
    else
        std::cout << alg.str(e) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact normal forms and verification for double affine Hecke algebras of types A, B, D"};
    app.require_subcommand(1);

    Selectors sel;
    std::string expr, expr2, op, input, suite;

    auto* nf = app.add_subcommand("nf", "normal form of an expression");
    nf->add_option("expr", expr, "expression")->required();
    add_selectors(nf, sel, false);

    auto* mul = app.add_subcommand("mul", "normal form of a product a*b");
    mul->add_option("a", expr, "left factor")->required();
    mul->add_option("b", expr2, "right factor")->required();
    add_selectors(mul, sel, false);

    auto* apply = app.add_subcommand("apply", "act on the Dunkl module");
    apply->add_option("--op", op, "algebra element acting")->required();
    apply->add_option("--input", input, "module vector, as an element applied to the vacuum")->required();
    add_selectors(apply, sel, false);

    auto* check = app.add_subcommand("check", "run a verification suite");
    check->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
    add_selectors(check, sel, true);

    auto* list = app.add_subcommand("list", "list suites, maps and families");
    list->add_flag("--json", sel.json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*nf) {
            auto alg = algebra_of(sel);
            print(*alg, parse(*alg, expr), sel.json);
            return 0;
        }
        if (*mul) {
            auto alg = algebra_of(sel);
            print(*alg, alg->mul(parse(*alg, expr), parse(*alg, expr2)), sel.json);
            return 0;
        }
        if (*apply) {
            auto alg = algebra_of(sel);
            VermaModule mod(alg);
            const ModuleElement v = mod.act(to_free(*alg, parse(*alg, op)), mod.from_element(parse(*alg, input)));
            if (sel.json)
                std::cout << mod.to_json(v).dump() << "\n";
            else
                std::cout << mod.str(v) << "\n";
            return 0;
        }
        if (*list) {
            const std::vector<std::string> maps{"phidot", "phikw", "phiddot", "phiplus", "h2sh", "sh2oh"};
            if (sel.json) {
                std::cout << nlohmann::json{{"suites", suite_names()}, {"maps", maps}, {"families", {"H", "sH", "oH"}},
                                            {"types", {"A", "B", "D"}}}
                                 .dump()
                          << "\n";
            } else {
                std::cout << "suites:";
                for (const auto& s : suite_names()) std::cout << " " << s;
                std::cout << "\nmaps:";
                for (const auto& m : maps) std::cout << " " << m;
                std::cout << "\nfamilies: H sH oH\ntypes: A B D\n";
            }
            return 0;
        }
        CheckOptions opt;
        if (!sel.family.empty()) opt.family = family_kind_from_name(sel.family);
        if (!sel.type.empty()) opt.type = family_from_char(sel.type[0]);
        if (sel.rank) opt.rank = sel.rank;
        if (sel.degree >= 0) opt.degree = sel.degree;
        if (!sel.map.empty()) opt.map = map_kind_from_name(sel.map);
        opt.seed = sel.seed;
        opt.unsafe_rank = sel.unsafe_rank;
        opt.inject_fault = sel.inject_fault;
        opt.params = ParamOverride::parse(sel.params);
        const CheckReport rep = run_check(suite, opt);
        if (sel.json)
            std::cout << rep.to_json(sel.timing).dump(2) << "\n";
        else
            std::cout << rep.text(sel.timing);
        return rep.pass() ? 0 : 1;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
    } catch (const BudgetError& e) {
        std::cerr << "budget: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return 2;
}
