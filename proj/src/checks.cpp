#include "daha/checks.hpp"

#include <chrono>
#include <functional>
#include <memory>
#include <random>
#include <sstream>

#include "daha/dunkl.hpp"
#include "daha/parse.hpp"

namespace daha {

ParamOverride ParamOverride::parse(const std::string& text) {
    ParamOverride p;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("parameter '" + item + "' is not of the form name=value");
        std::string key = item.substr(0, eq);
        key.erase(0, key.find_first_not_of(' '));
        key.erase(key.find_last_not_of(' ') + 1);
        const Scalar value = parse_scalar(item.substr(eq + 1));
        if (key == "t") p.t = value;
        else if (key == "u") p.u = value;
        else if (key == "v") p.v = value;
        else throw std::invalid_argument("unknown parameter '" + key + "'");
    }
    return p;
}

AlgebraSpec make_spec(FamilyKind f, const WeylType& ty, const ParamOverride& p) {
    AlgebraSpec s = AlgebraSpec::formal(f, ty);
    if (p.t) s.t = *p.t;
    if (p.u) s.u = *p.u;
    if (p.v && ty.family == Family::B) s.v = *p.v;
    return s;
}

bool CheckReport::pass() const { return failures() == 0; }

std::size_t CheckReport::failures() const {
    std::size_t k = 0;
    for (const auto& c : cases)
        if (!c.pass) ++k;
    return k;
}

std::string CheckReport::text(bool timing) const {
    std::string out = "suite " + suite + " (seed " + std::to_string(seed) + (fault ? ", corrupted fixture" : "") + ")\n";
    for (const auto& c : cases) {
        out += std::string(c.pass ? "  PASS " : "  FAIL ") + c.name;
        if (!c.detail.empty()) out += ": " + c.detail;
        out += "\n";
    }
    out += "result: " + std::to_string(cases.size() - failures()) + "/" + std::to_string(cases.size()) + " cases passed";
    if (timing) {
        std::ostringstream t;
        t.precision(3);
        t << std::fixed << seconds;
        out += " in " + t.str() + " s";
    }
    return out + "\n";
}

nlohmann::json CheckReport::to_json(bool timing) const {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : cases) {
        nlohmann::json j{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) j["detail"] = c.detail;
        if (!c.counterexample.is_null()) j["counterexample"] = c.counterexample;
        cs.push_back(std::move(j));
    }
    nlohmann::json j{{"suite", suite}, {"seed", seed}, {"fault", fault}, {"pass", pass()}, {"cases", cs}};
    if (timing) j["seconds"] = seconds;
    return j;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"pbw",    "jacobi", "conj",  "dunkl",   "anticommute",
                                                "iso",    "center", "hecke", "cocycle", "closedform"};
    return names;
}

namespace {

using Cases = std::vector<CaseResult>;

std::vector<FamilyKind> families(const CheckOptions& o, std::vector<FamilyKind> allowed) {
    if (!o.family) return allowed;
    for (auto f : allowed)
        if (f == *o.family) return {f};
    return {};
}

std::vector<Family> types(const CheckOptions& o) {
    if (o.type) return {*o.type};
    return {Family::A, Family::B, Family::D};
}

std::vector<int> ranks(const CheckOptions& o, std::vector<int> defaults, int budget) {
    if (!o.rank) return defaults;
    const int n = *o.rank;
    if (n < 1 || n > kMaxRank) throw std::invalid_argument("rank must be between 1 and " + std::to_string(kMaxRank));
    if (n > budget && !o.unsafe_rank)
        throw BudgetError("rank " + std::to_string(n) + " exceeds the budget " + std::to_string(budget) +
                          " of this suite; pass --unsafe-rank to run it anyway");
    return {n};
}

bool valid_type(Family f, int n) { return f == Family::A ? n >= 2 : (f == Family::D ? n >= 2 : n >= 1); }

std::shared_ptr<const PBWAlgebra> algebra(FamilyKind f, const WeylType& ty, const CheckOptions& o, Faults faults = {},
                                          BracketMode mode = BracketMode::ClosedForm) {
    AlgebraSpec s = make_spec(f, ty, o.params);
    s.faults = faults;
    s.mode = mode;
    return std::make_shared<PBWAlgebra>(std::move(s));
}

Faults flipped() {
    Faults f;
    f.flip_bracket = true;
    return f;
}

std::string words_str(const std::vector<std::vector<Gen>>& ws) {
    std::string out;
    for (const auto& w : ws) {
        std::string s;
        for (const Gen& g : w) s += (s.empty() ? "" : "*") + gen_name(g);
        out += (out.empty() ? "" : " | ") + s;
    }
    return out;
}

// Even-graded bracket of the defining relation: [a,b] or [a,b]_+ (oH).
Element printed_bracket(const PBWAlgebra& alg, const Element& a, const Element& b) {
    return alg.family() == FamilyKind::oH ? alg.anticommutator(a, b) : alg.commutator(a, b);
}

// Operands (r, l) of the printed relation [r_i, l_j] = relation(i, j).
std::pair<Sym, Sym> relation_syms(const PBWAlgebra& alg) {
    switch (alg.family()) {
        case FamilyKind::H: return {Sym::y, Sym::x};
        case FamilyKind::sH: return {Sym::eta, Sym::x};
        case FamilyKind::oH: return {Sym::eta, Sym::xi};
    }
    return {Sym::y, Sym::x};
}

// Per-case seed derived from the run seed and the case label.
std::uint64_t case_seed(std::uint64_t seed, const std::string& label) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : label) h = (h ^ ch) * 1099511628211ull;
    return seed * 0x9E3779B97F4A7C15ull ^ h;
}

// ---------------------------------------------------------------------------

Cases suite_pbw(const CheckOptions& o) {
    Cases out;
    const int samples = 200;
    for (auto f : families(o, {FamilyKind::H, FamilyKind::sH, FamilyKind::oH}))
        for (auto tf : types(o))
            for (int n : ranks(o, {2, 3}, 3)) {
                if (!valid_type(tf, n)) continue;
                auto alg = algebra(f, WeylType(tf, n), o, o.inject_fault ? flipped() : Faults{});
                const std::string label = alg->name();
                const auto gens = alg->generators();
                std::mt19937_64 rng(case_seed(o.seed, label));
                std::uniform_int_distribution<int> len(1, 4);
                std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
                auto rand_word = [&] {
                    std::vector<Gen> w(len(rng));
                    for (auto& g : w) g = gens[pick(rng)];
                    return w;
                };
                CaseResult assoc{label + " associativity on " + std::to_string(samples) + " random word triples"};
                for (int s = 0; s < samples && assoc.pass; ++s) {
                    const auto wa = rand_word(), wb = rand_word(), wc = rand_word();
                    const Element a = alg->word(wa), b = alg->word(wb), c = alg->word(wc);
                    const Element d = alg->mul(alg->mul(a, b), c) - alg->mul(a, alg->mul(b, c));
                    if (!d.is_zero()) {
                        assoc.pass = false;
                        assoc.detail = "(ab)c - a(bc) = " + alg->str(d) + " for " + words_str({wa, wb, wc});
                        assoc.counterexample = {{"words", words_str({wa, wb, wc})}, {"residual", alg->to_json(d)}};
                    }
                }
                out.push_back(std::move(assoc));
                CaseResult rel{label + " bracket relations as printed"};
                for (int i = 1; i <= n && rel.pass; ++i)
                    for (int j = 1; j <= n && rel.pass; ++j) {
                        const auto [r, l] = relation_syms(*alg);
                        const Element br = printed_bracket(*alg, alg->gen({r, i}), alg->gen({l, j}));
                        const Element d = br - alg->relation(i, j);
                        if (!d.is_zero()) {
                            rel.pass = false;
                            rel.detail = "bracket (" + std::to_string(i) + "," + std::to_string(j) + ") differs by " + alg->str(d);
                            rel.counterexample = alg->to_json(d);
                        }
                    }
                out.push_back(std::move(rel));
            }
    return out;
}

Cases suite_jacobi(const CheckOptions& o) {
    Cases out;
    if (!families(o, {FamilyKind::H}).size()) return out;
    for (auto tf : types(o))
        for (int n : ranks(o, {2, 3}, 3)) {
            if (!valid_type(tf, n)) continue;
            auto alg = algebra(FamilyKind::H, WeylType(tf, n), o, o.inject_fault ? flipped() : Faults{});
            std::vector<Gen> gens;
            for (int k = 1; k <= n; ++k) gens.push_back({Sym::x, k});
            for (int k = 1; k <= n; ++k) gens.push_back({Sym::y, k});
            CaseResult c{alg->name() + " Jacobi identity on all triples of x's and y's"};
            for (const Gen& a : gens) {
                for (const Gen& b : gens) {
                    for (const Gen& g : gens) {
                        const Element A = alg->gen(a), B = alg->gen(b), C = alg->gen(g);
                        const Element j = alg->commutator(A, alg->commutator(B, C)) +
                                          alg->commutator(B, alg->commutator(C, A)) +
                                          alg->commutator(C, alg->commutator(A, B));
                        if (!j.is_zero()) {
                            c.pass = false;
                            c.detail = "J(" + gen_name(a) + "," + gen_name(b) + "," + gen_name(g) + ") = " + alg->str(j);
                            c.counterexample = alg->to_json(j);
                            break;
                        }
                    }
                    if (!c.pass) break;
                }
                if (!c.pass) break;
            }
            out.push_back(std::move(c));
        }
    return out;
}

// g a g for a self-inverse generator g, expected to be +-(single generator).
std::optional<std::pair<int, int>> signed_generator(const PBWAlgebra& alg, const Element& x, Sym sym) {
    if (x.size() != 1) return std::nullopt;
    const auto& [m, s] = *x.terms().begin();
    for (int k = 1; k <= alg.type().n; ++k) {
        const Element g = alg.gen({sym, k});
        if (g.terms().begin()->first != m) continue;
        if (s == Scalar(1)) return std::make_pair(1, k);
        if (s == Scalar(-1)) return std::make_pair(-1, k);
    }
    return std::nullopt;
}

Cases suite_conj(const CheckOptions& o) {
    Cases out;
    for (auto f : families(o, {FamilyKind::H, FamilyKind::sH, FamilyKind::oH}))
        for (auto tf : types(o))
            for (int n : ranks(o, {2, 3}, 3)) {
                if (!valid_type(tf, n)) continue;
                auto alg = algebra(f, WeylType(tf, n), o, o.inject_fault ? flipped() : Faults{});
                const auto [R, L] = relation_syms(*alg);
                std::vector<std::vector<Element>> br(n + 1, std::vector<Element>(n + 1));
                for (int i = 1; i <= n; ++i)
                    for (int j = 1; j <= n; ++j) br[i][j] = printed_bracket(*alg, alg->gen({R, i}), alg->gen({L, j}));
                for (const Gen& g : alg->generators()) {
                    if (g.sym == L || g.sym == R) continue;
                    const Element G = alg->gen(g);
                    auto conj = [&](const Element& a) { return alg->mul({G, a, G}); };
                    CaseResult c{alg->name() + " brackets conjugated by " + gen_name(g)};
                    for (int i = 1; i <= n && c.pass; ++i)
                        for (int j = 1; j <= n && c.pass; ++j) {
                            const auto ri = signed_generator(*alg, conj(alg->gen({R, i})), R);
                            const auto lj = signed_generator(*alg, conj(alg->gen({L, j})), L);
                            if (!ri || !lj) {
                                c.pass = false;
                                c.detail = "conjugate of a generator is not a signed generator";
                                break;
                            }
                            const Element predicted = Scalar(ri->first * lj->first) * br[ri->second][lj->second];
                            const Element d = conj(br[i][j]) - predicted;
                            if (!d.is_zero()) {
                                c.pass = false;
                                c.detail = "bracket (" + std::to_string(i) + "," + std::to_string(j) + ") maps to instance (" +
                                           std::to_string(ri->second) + "," + std::to_string(lj->second) + ") up to " +
                                           alg->str(d);
                                c.counterexample = alg->to_json(d);
                            }
                        }
                    out.push_back(std::move(c));
                }
            }
    return out;
}

Cases suite_closedform(const CheckOptions& o) {
    Cases out;
    const int lmax = o.degree.value_or(5);
    for (auto f : families(o, {FamilyKind::H, FamilyKind::oH}))
        for (auto tf : types(o))
            for (int n : ranks(o, {2, 3}, 3)) {
                if (!valid_type(tf, n)) continue;
                const WeylType ty(tf, n);
                Faults cf;
                cf.corrupt_closed_form = o.inject_fault;
                auto closed = algebra(f, ty, o, cf);
                auto step = algebra(f, ty, o, {}, BracketMode::Stepwise);
                VermaModule mod(step);
                const Sym L = step->left_sym(), R = step->right_sym();
                CaseResult c{closed->name() + " closed-form brackets with l_j^l, l <= " + std::to_string(lmax)};
                CaseResult m{closed->name() + " closed-form brackets on the module vacuum"};
                for (int i = 1; i <= n && c.pass; ++i)
                    for (int j = 1; j <= n && c.pass; ++j)
                        for (int l = 1; l <= lmax && c.pass; ++l) {
                            const Element pw = step->pow(step->gen({L, j}), l);
                            const Element r = step->gen({R, i});
                            Element rewritten = step->mul(r, pw);
                            rewritten.add_scaled(step->mul(pw, r), Scalar((f == FamilyKind::oH && (l & 1)) ? 1 : -1));
                            const Element cfv = closed->closed_form(i, j, l);
                            const Element d = cfv - rewritten;
                            if (!d.is_zero()) {
                                c.pass = false;
                                c.detail = "(i,j,l) = (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                           std::to_string(l) + ") differs by " + closed->str(d);
                                c.counterexample = closed->to_json(d);
                            }
                            if (m.pass) {
                                const ModuleElement lhs = mod.act(cfv, mod.vacuum());
                                const ModuleElement rhs = mod.dunkl(i, mod.from_element(pw));
                                if (!(lhs == rhs)) {
                                    m.pass = false;
                                    m.detail = "(i,j,l) = (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                               std::to_string(l) + "): " + mod.str(lhs) + " vs " + mod.str(rhs);
                                    m.counterexample = mod.to_json(lhs - rhs);
                                }
                            }
                        }
                out.push_back(std::move(c));
                out.push_back(std::move(m));
            }
    return out;
}

Cases suite_iso(const CheckOptions& o) {
    Cases out;
    std::vector<MapKind> kinds = o.map ? std::vector<MapKind>{*o.map} : all_map_kinds();
    auto hom_case = [](const std::string& name, const GeneratorMap& m) {
        CaseResult c{name};
        const HomReport rep = check_homomorphism(m);
        c.pass = rep.pass();
        if (!c.pass) {
            for (const auto& r : rep.relations)
                if (!r.pass) {
                    c.detail = "relation " + r.label + " maps to " + m.target->str(r.residual);
                    c.counterexample = {{"relation", r.label}, {"residual", m.target->to_json(r.residual)}};
                    break;
                }
            if (c.detail.empty()) c.detail = "image of " + gen_name(rep.parity_failures.front()) + " has the wrong parity";
        }
        return c;
    };
    for (auto tf : types(o))
        for (int n : ranks(o, {2, 3}, 3)) {
            if (!valid_type(tf, n)) continue;
            const WeylType ty(tf, n);
            if (o.inject_fault) {
                out.push_back(hom_case("corrupted phidot on " + ty.str(), corrupted_phidot(ty)));
                out.push_back(hom_case("H -> C(c,e) (x) oH with u -> 2i*u on " + ty.str(), morita_composite(ty, true)));
                continue;
            }
            for (MapKind k : kinds) {
                const MapPair maps = make_map(k, ty);
                const std::string base = map_kind_name(k) + " on " + ty.str();
                out.push_back(hom_case(base + " preserves the source relations", maps.forward));
                out.push_back(hom_case(base + " inverse preserves the target relations", maps.inverse));
                CaseResult rt{base + " round trips on generators"};
                auto bad = round_trip_failures(maps.forward, maps.inverse);
                auto bad2 = round_trip_failures(maps.inverse, maps.forward);
                bad.insert(bad.end(), bad2.begin(), bad2.end());
                if (!bad.empty()) {
                    rt.pass = false;
                    rt.detail = "generator " + gen_name(bad.front()) + " does not return";
                }
                out.push_back(std::move(rt));
                for (const auto& id : image_identities(k, maps)) {
                    CaseResult c{base + " identity " + id.label};
                    if (!id.pass()) {
                        c.pass = false;
                        c.detail = maps.forward.target->str(id.actual) + " vs " + maps.forward.target->str(id.expected);
                    }
                    out.push_back(std::move(c));
                }
                if ((k == MapKind::HtoSH || k == MapKind::SHtoOH) && n == 2) {
                    const RankReport rr = rank_check(maps.forward, 1);
                    CaseResult c{base + " images of the degree <= 1 PBW basis are independent"};
                    c.detail = std::to_string(rr.rank) + "/" + std::to_string(rr.basis_size);
                    c.pass = rr.full();
                    out.push_back(std::move(c));
                }
            }
            if (!o.map) out.push_back(hom_case("H -> C(c,e) (x) oH(t, -2i*u, -i*v) on " + ty.str(), morita_composite(ty)));
        }
    return out;
}

std::string key_str(const VermaModule& mod, const ModuleKey& k) { return mod.str(ModuleElement::basis(k.a, k.m)); }

Cases suite_dunkl(const CheckOptions& o) {
    Cases out;
    const int degree = o.degree.value_or(4);
    DunklFaults df;
    df.flip_reflection_sum = o.inject_fault;
    for (auto f : families(o, {FamilyKind::H, FamilyKind::sH, FamilyKind::oH}))
        for (auto tf : types(o))
            for (int n : ranks(o, {2, 3}, 3)) {
                if (!valid_type(tf, n)) continue;
                auto alg = algebra(f, WeylType(tf, n), o);
                VermaModule mod(alg, nullptr, df);
                const std::string base = alg->name() + " on " + mod.carrier().name();
                CaseResult c{base + ": defining relations as operators, degree <= " + std::to_string(degree)};
                std::size_t nrel = 0;
                for (const auto& r : relation_faithfulness(mod, degree)) {
                    ++nrel;
                    if (r.pass || !c.pass) continue;
                    c.pass = false;
                    c.detail = r.label + " fails on " + key_str(mod, *r.witness) + " by " + mod.str(r.residual);
                    c.counterexample = {{"relation", r.label},
                                        {"vector", mod.to_json(ModuleElement::basis(r.witness->a, r.witness->m))},
                                        {"residual", mod.to_json(r.residual)}};
                }
                if (c.pass) c.detail = std::to_string(nrel) + " relations";
                out.push_back(std::move(c));
                CaseResult e{base + ": explicit operators agree with the bracket recursion"};
                for (const ModuleKey& k : mod.basis(degree)) {
                    const ModuleElement v = ModuleElement::basis(k.a, k.m);
                    for (int i = 1; i <= n && e.pass; ++i) {
                        const ModuleElement d = mod.dunkl(i, v) - mod.dunkl_recursive(i, v);
                        if (!d.is_zero()) {
                            e.pass = false;
                            e.detail = "operator " + std::to_string(i) + " on " + key_str(mod, k) + " differs by " + mod.str(d);
                            e.counterexample = mod.to_json(d);
                        }
                    }
                    if (!e.pass) break;
                }
                out.push_back(std::move(e));
                if (f != FamilyKind::sH) continue;
                CaseResult k{base + ": carrier satisfies the relations among c's and t's"};
                std::size_t nk = 0;
                for (const auto& r : carrier_compatibility(mod)) {
                    ++nk;
                    if (r.pass || !k.pass) continue;
                    k.pass = false;
                    k.detail = r.label + " fails by " + mod.str(r.residual);
                }
                if (k.pass) k.detail = std::to_string(nk) + " relations";
                out.push_back(std::move(k));
            }
    return out;
}

Cases suite_anticommute(const CheckOptions& o) {
    Cases out;
    const int degree = o.degree.value_or(5);
    DunklFaults df;
    df.even_derivation = o.inject_fault;
    for (auto f : families(o, {FamilyKind::oH, FamilyKind::sH, FamilyKind::H})) {
        if (!o.family && f != FamilyKind::oH) continue;
        for (auto tf : types(o))
            for (int n : ranks(o, {3}, 3)) {
                if (!valid_type(tf, n)) continue;
                auto alg = algebra(f, WeylType(tf, n), o);
                VermaModule mod(alg, nullptr, df);
                const char* rel = f == FamilyKind::H ? "commute" : "anticommute";
                CaseResult c{alg->name() + " Dunkl operators " + rel + " on degree <= " + std::to_string(degree)};
                const auto fails = anticommute_failures(mod, degree);
                if (!fails.empty()) {
                    const auto& x = fails.front();
                    c.pass = false;
                    c.detail = std::to_string(fails.size()) + " failures; first (" + std::to_string(x.i) + "," +
                               std::to_string(x.j) + ") on " + key_str(mod, x.key) + ": " + mod.str(x.residual);
                    c.counterexample = {{"i", x.i}, {"j", x.j}, {"residual", mod.to_json(x.residual)}};
                }
                out.push_back(std::move(c));
            }
    }
    return out;
}

Cases suite_center(const CheckOptions& o) {
    Cases out;
    auto central_case = [](const std::string& name, const Algebra& alg, const Element& a) {
        CaseResult c{name};
        const CentralResult r = is_central(alg, a);
        if (!r.central) {
            c.pass = false;
            c.detail = "[a, " + gen_name(*r.witness) + "] = " + alg.str(r.commutator);
            c.counterexample = alg.to_json(r.commutator);
        }
        return c;
    };
    if (o.inject_fault) {
        auto alg = algebra(FamilyKind::oH, WeylType(Family::A, 2), o);
        const Element a = parse(*alg, "xi1^2 eta2^2 + xi2^2 eta1^2 + u s1 (xi1 - xi2)(eta1 - eta2)");
        out.push_back(central_case("oH(A2) example element with the sign of u flipped", *alg, a));
        auto flip = algebra(FamilyKind::H, WeylType(Family::B, 2), o, flipped());
        out.push_back(central_case("H(B2) with a flipped bracket: sum of y_i^2", *flip, elementary_in_squares(*flip, Sym::y, 1)));
        return out;
    }
    for (auto f : families(o, {FamilyKind::H, FamilyKind::sH, FamilyKind::oH}))
        for (auto tf : types(o))
            for (int n : ranks(o, {2, 3}, 3)) {
                if (!valid_type(tf, n)) continue;
                auto alg = algebra(f, WeylType(tf, n), o);
                for (Sym s : {alg->left_sym(), alg->right_sym()})
                    for (int k = 1; k <= n; ++k) {
                        const Element a = elementary_in_squares(*alg, s, k);
                        const std::string name = alg->name() + " e_" + std::to_string(k) + "(" + gen_name({s, 1}).substr(0, gen_name({s, 1}).size() - 1) + "^2)";
                        out.push_back(central_case(name + " is central", *alg, a));
                    }
            }
    if (families(o, {FamilyKind::oH}).size() && (!o.type || *o.type == Family::A) && (!o.rank || *o.rank == 2)) {
        auto alg = algebra(FamilyKind::oH, WeylType(Family::A, 2), o);
        const std::string printed = "xi1^2 eta2^2 + xi2^2 eta1^2 - u s1 (xi1 - xi2)(eta1 - eta2)";
        out.push_back(central_case("oH(A2) " + printed + " is central", *alg, parse(*alg, printed)));
        out.push_back(central_case("oH(A2) " + printed + " + t u s1 is central", *alg, parse(*alg, printed + " + t u s1")));
        ParamOverride t0 = o.params;
        t0.t = Scalar(0);
        auto alg0 = std::make_shared<PBWAlgebra>(make_spec(FamilyKind::oH, WeylType(Family::A, 2), t0));
        out.push_back(central_case("oH(A2) at t = 0: " + printed + " is central", *alg0, parse(*alg0, printed)));
    }
    return out;
}

Cases suite_hecke(const CheckOptions& o) {
    Cases out;
    if (!families(o, {FamilyKind::oH}).size() || (o.type && *o.type != Family::A)) return out;
    for (int n : ranks(o, {2, 3, 4}, 4)) {
        if (n < 2) continue;
        auto alg = algebra(FamilyKind::oH, WeylType(Family::A, n), o, o.inject_fault ? flipped() : Faults{});
        const Scalar u = alg->spec().u;
        std::vector<Element> z(n + 2), L(n + 2);
        for (int i = 1; i <= n; ++i) {
            z[i] = z_element(*alg, i);
            L[i] = jucys_murphy(*alg, i);
        }
        auto s = [&](int i) { return alg->gen({Sym::s, i}); };
        auto check = [&](const std::string& name, const Element& d) {
            CaseResult c{alg->name() + " " + name};
            if (!d.is_zero()) {
                c.pass = false;
                c.detail = "residual " + alg->str(d);
                c.counterexample = alg->to_json(d);
            }
            out.push_back(std::move(c));
        };
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                check("[z" + std::to_string(i) + ", z" + std::to_string(j) + "] = 0", alg->commutator(z[i], z[j]));
        for (int i = 1; i < n; ++i) {
            const std::string si = "s" + std::to_string(i);
            check(si + " z" + std::to_string(i) + " = z" + std::to_string(i + 1) + " " + si + " - u",
                  alg->mul(s(i), z[i]) - alg->mul(z[i + 1], s(i)) + alg->scalar(u));
            check(si + " L" + std::to_string(i) + " = L" + std::to_string(i + 1) + " " + si + " - 1",
                  alg->mul(s(i), L[i]) - alg->mul(L[i + 1], s(i)) + alg->one());
            for (int j = 1; j <= n; ++j) {
                if (j == i || j == i + 1) continue;
                check(si + " z" + std::to_string(j) + " = z" + std::to_string(j) + " " + si, alg->commutator(s(i), z[j]));
            }
        }
    }
    return out;
}

Cases suite_cocycle(const CheckOptions& o) {
    Cases out;
    const int samples = 500;
    for (auto tf : types(o))
        for (int n : ranks(o, {2, 3, 4}, 4)) {
            if (!valid_type(tf, n)) continue;
            const WeylType ty(tf, n);
            const SpinWeyl& sw = SpinWeyl::get(ty);
            // The corrupted cocycle is twisted by (-1)^{l(v)}, which is not a 2-cocycle.
            auto phi = [&](std::uint32_t u, std::uint32_t v) {
                int p = sw.cocycle(u, v);
                if (o.inject_fault && (sw.length(v) & 1)) p = -p;
                return p;
            };
            auto compose_codes = [&](std::uint32_t u, std::uint32_t v) {
                return compose(GroupElement::from_code_unchecked(ty, u), GroupElement::from_code_unchecked(ty, v)).code();
            };
            CaseResult rel{ty.str() + " (t_i t_j)^m_ij = (-1)^(m_ij + 1)"};
            const std::uint32_t id = GroupElement::identity_code(n);
            for (int i = 1; i <= ty.num_generators() && rel.pass; ++i)
                for (int j = i; j <= ty.num_generators() && rel.pass; ++j) {
                    const int m = ty.coxeter_m(i, j);
                    const std::uint32_t gi = generator(ty, i).code(), gj = generator(ty, j).code();
                    int sign = 1;
                    std::uint32_t x = id;
                    for (int k = 0; k < m; ++k)
                        for (std::uint32_t g : {gi, gj}) {
                            sign *= phi(x, g);
                            x = compose_codes(x, g);
                        }
                    const int expected = (m % 2) ? 1 : -1;
                    if (x != id || sign != expected) {
                        rel.pass = false;
                        rel.detail = "pair (" + std::to_string(i) + "," + std::to_string(j) + ") gives " + std::to_string(sign);
                    }
                }
            out.push_back(std::move(rel));
            const auto elems = enumerate(ty);
            std::mt19937_64 rng(case_seed(o.seed, ty.str()));
            std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
            CaseResult co{ty.str() + " cocycle identity on " + std::to_string(samples) + " random triples"};
            for (int s = 0; s < samples && co.pass; ++s) {
                const std::uint32_t u = elems[pick(rng)].code(), v = elems[pick(rng)].code(), w = elems[pick(rng)].code();
                const int lhs = phi(u, v) * phi(compose_codes(u, v), w);
                const int rhs = phi(v, w) * phi(u, compose_codes(v, w));
                if (lhs != rhs) {
                    co.pass = false;
                    co.detail = "u = " + GroupElement::from_code_unchecked(ty, u).str() +
                                ", v = " + GroupElement::from_code_unchecked(ty, v).str() +
                                ", w = " + GroupElement::from_code_unchecked(ty, w).str();
                }
            }
            out.push_back(std::move(co));
        }
    return out;
}

}  // namespace

CheckReport run_check(const std::string& suite, const CheckOptions& opt) {
    static const std::map<std::string, std::function<Cases(const CheckOptions&)>> table{
        {"pbw", suite_pbw},       {"jacobi", suite_jacobi},   {"conj", suite_conj},
        {"dunkl", suite_dunkl},   {"anticommute", suite_anticommute},
        {"iso", suite_iso},       {"center", suite_center},   {"hecke", suite_hecke},
        {"cocycle", suite_cocycle}, {"closedform", suite_closedform}};
    auto it = table.find(suite);
    if (it == table.end()) throw std::invalid_argument("unknown suite '" + suite + "'");
    CheckReport rep;
    rep.suite = suite;
    rep.seed = opt.seed;
    rep.fault = opt.inject_fault;
    const auto t0 = std::chrono::steady_clock::now();
    rep.cases = it->second(opt);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace daha
