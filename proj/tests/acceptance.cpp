// End-to-end acceptance suite: one pass/fail line per criterion, nonzero
// exit if anything fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "gobs/degen.hpp"
#include "gobs/report.hpp"
#include "fixtures.hpp"

using namespace gobs;

namespace {

struct Checker {
    std::ostringstream issues;
    int failures = 0;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            ++failures;
            if (failures <= 5) issues << "\n    " << what;
        }
    }
};

std::set<std::string> str_set(const std::vector<ModuleMonomial>& ms, const RingPtr& r) {
    std::set<std::string> out;
    for (auto& m : ms) out.insert(to_string(m, r));
    return out;
}

bool betti_rows_match(const nlohmann::json& steps, const std::vector<std::vector<int>>& rows) {
    if (steps.size() != rows.size()) return false;
    for (size_t i = 0; i < rows.size(); ++i)
        if (steps[i]["betti"].get<std::vector<int>>() != rows[i]) return false;
    return true;
}

// shared corpus state, computed once and reused across criteria
struct CorpusEntry {
    SystemFile sf;
    GroebnerBasisResult sba;
    std::vector<Polynomial> buch;
    std::vector<Polynomial> reduced_oracle;
};

std::vector<CorpusEntry> g_corpus;
std::vector<std::pair<std::vector<Polynomial>, ObstructionModule>> g_modules;

void build_corpus() {
    for (auto& sf : testing::random_corpus(200)) {
        CorpusEntry e{sf, run_sba(sf.polys), buchberger(sf.polys), {}};
        e.reduced_oracle = reduced_gb(e.buch);
        g_corpus.push_back(std::move(e));
    }
}

// ---- criterion 1: showcase golden trace under grlex ----
void criterion1(Checker& c) {
    SystemFile sf = testing::showcase("grlex");
    CommandResult res = cmd_sba(sf, {false, true});
    const auto& j = res.report;

    const char* gens[] = {"z^3 - 2*y^2",     "x^2*y - 1/2*z^2", "x*y - 1/2*y^2",
                          "y^2*z - 4*y",     "y^3 - 2*z^2",     "x*z^2 - 1/2*y*z^2",
                          "y*z^2 - 4*z",     "x*z - 1/2*y*z"};
    const char* sigs[] = {"z*e_3", "x^2*e_2", "z*e_5", "z*e_6",
                          "y*e_6", "x*e_8",   "x*e_5", "x*e_10"};
    c.require(j["final_tuple"].size() == 11, "final tuple has 11 generators");
    for (int i = 0; i < 8; ++i) {
        auto& step = j["steps"][i];
        c.require(step["appended"]["generator"] == gens[i],
                  std::string("appended generator ") + gens[i]);
        c.require(step["appended"]["signature"] == sigs[i],
                  std::string("signature ") + sigs[i]);
    }
    c.require(j["steps"][8]["appended"].is_null(), "terminating pass appends nothing");

    c.require(betti_rows_match(j["steps"], {{3, 6, 3},
                                            {2, 5, 3},
                                            {4, 8, 4},
                                            {5, 11, 7, 1},
                                            {4, 9, 6, 1},
                                            {2, 4, 2},
                                            {1, 2, 1},
                                            {1, 2, 1},
                                            {}}),
              "betti table sequence");
    auto final_lms = j["steps"][8]["lm_ideal"].get<std::vector<std::string>>();
    c.require(std::set<std::string>(final_lms.begin(), final_lms.end()) ==
                  std::set<std::string>{"x*y", "z^3", "y^2*z", "y^3", "y*z^2", "x*z"},
              "final leading-monomial ideal");
    g_modules.push_back({sf.polys, gobs::gobs(sf.polys)});
}

// ---- criterion 2: showcase under lex ----
void criterion2(Checker& c) {
    SystemFile sf = testing::showcase("lex");
    CommandResult res = cmd_sba(sf, {false, true});
    const auto& j = res.report;
    c.require(betti_rows_match(j["steps"], {{3, 6, 3},
                                            {3, 6, 3},
                                            {2, 5, 3},
                                            {4, 8, 4},
                                            {5, 11, 7, 1},
                                            {5, 12, 9, 2},
                                            {2, 4, 2},
                                            {2, 4, 2},
                                            {1, 2, 1},
                                            {1, 2, 1},
                                            {}}),
              "betti table sequence (11 rows)");
    auto final_lms = j["steps"].back()["lm_ideal"].get<std::vector<std::string>>();
    c.require(std::set<std::string>(final_lms.begin(), final_lms.end()) ==
                  std::set<std::string>{"y", "z^6", "x*z"},
              "final leading-monomial ideal <y, z^6, x*z>");
    g_modules.push_back({sf.polys, gobs::gobs(sf.polys)});
}

// ---- criterion 3: quadrics under lex and grevlex ----
void criterion3(Checker& c) {
    SystemFile lex = testing::quadrics("lex");
    ObstructionModule M = gobs::gobs(lex.polys);
    c.require(str_set(M.surviving_numerator(), lex.ring) == std::set<std::string>{"y*e_2"},
              "surviving numerator <y*e_2>");
    c.require(str_set(M.denominator, lex.ring) ==
                  std::set<std::string>{"x*y*e_2", "y*z*w*e_2", "x^2*e_3", "x*y*e_3"},
              "denominator <x*y*e_2, y*z*w*e_2, x^2*e_3, x*y*e_3>");
    g_modules.push_back({lex.polys, M});

    auto obs = minimum_obstruction(lex.polys);
    c.require(obs.has_value(), "minimum obstruction exists");
    if (obs) {
        c.require(to_string(obs->pair.left, lex.ring) == "x*e_1" &&
                      to_string(obs->pair.right, lex.ring) == "y*e_2",
                  "obstruction realized by the pair (x*e_1, y*e_2)");
        c.require(to_string(obs->remainder.leading_monomial(), lex.ring) == "x*w^2",
                  "remainder leading monomial x*w^2");
    }

    CommandResult res = cmd_sba(lex, {false, true});
    const auto& j = res.report;
    c.require(betti_rows_match(j["steps"], {{1, 2, 1}, {2, 4, 2}, {1, 2, 1}, {}}),
              "lex betti sequence");
    auto final_lms = j["steps"].back()["lm_ideal"].get<std::vector<std::string>>();
    c.require(std::set<std::string>(final_lms.begin(), final_lms.end()) ==
                  std::set<std::string>{"x^2", "x*y", "x*w^2", "y^4", "y^3*z", "z*w"},
              "final initial ideal <x^2, x*y, x*w^2, y^4, y^3*z, z*w>");

    SystemFile grev = testing::quadrics("grevlex");
    CommandResult res2 = cmd_sba(grev, {false, true});
    const auto& j2 = res2.report;
    c.require(betti_rows_match(j2["steps"], {{1, 2, 1}, {}}), "grevlex betti sequence");
    c.require(j2["final_tuple"].size() == 4, "grevlex appends exactly one generator");
    if (j2["final_tuple"].size() == 4) {
        Polynomial g = parse_polynomial(j2["final_tuple"][3].get<std::string>(), grev.ring);
        c.require(to_string(g.leading_monomial(), grev.ring) == "y^3",
                  "appended generator has leading monomial y^3");
    }
    g_modules.push_back({grev.polys, gobs::gobs(grev.polys)});
}

// ---- criterion 4: the GF(5) system under grlex ----
void criterion4(Checker& c) {
    SystemFile sf = testing::gf5_system();
    CommandResult res = cmd_sba(sf, {false, true});
    const auto& j = res.report;
    c.require(betti_rows_match(j["steps"], {{2, 4, 2},
                                            {2, 4, 2},
                                            {1, 3, 2},
                                            {2, 4, 2},
                                            {2, 5, 4, 1},
                                            {1, 2, 1},
                                            {}}),
              "betti table sequence");
    auto final_lms = j["steps"].back()["lm_ideal"].get<std::vector<std::string>>();
    c.require(std::set<std::string>(final_lms.begin(), final_lms.end()) ==
                  std::set<std::string>{"x*y", "y^2", "x*z", "z^3", "y*z^2", "x^2"},
              "final leading-monomial ideal");
    g_modules.push_back({sf.polys, gobs::gobs(sf.polys)});
}

// ---- criterion 5: signature-driven run equals classical completion ----
void criterion5(Checker& c) {
    for (size_t i = 0; i < g_corpus.size(); ++i) {
        auto& e = g_corpus[i];
        bool ok = reduced_gb(e.sba.final_tuple) == e.reduced_oracle;
        c.require(ok, "corpus system " + std::to_string(i) + ": reduced bases differ");
    }
}

// ---- criterion 6: the basis criteria agree ----
void criterion6(Checker& c) {
    for (size_t i = 0; i < g_corpus.size(); ++i) {
        auto& F = g_corpus[i].sf.polys;
        bool by_module = is_groebner(F).is_gb;

        // exhaustive standard-pair reduction
        bool by_pairs = true;
        for (auto& p : standard_spairs(F)) {
            Polynomial s = spolynomial(p, F);
            if (!divide(s, F).remainder.is_zero()) {
                by_pairs = false;
                break;
            }
        }

        // external oracle: leads of the reduced classical basis lie in <LM F>
        bool by_oracle = true;
        for (auto& g : g_corpus[i].reduced_oracle) {
            bool divisible = false;
            for (auto& f : F)
                if (f.leading_monomial().divides(g.leading_monomial())) {
                    divisible = true;
                    break;
                }
            if (!divisible) {
                by_oracle = false;
                break;
            }
        }

        c.require(by_module == by_pairs && by_pairs == by_oracle,
                  "corpus system " + std::to_string(i) + ": criteria disagree");
    }
}

// ---- criterion 7: remainder uniqueness across divisor strategies ----
void criterion7(Checker& c) {
    int hits = 0;
    auto probe = [&](std::span<const Polynomial> F) {
        auto a = minimum_obstruction(F, DivisorStrategy::LowestIndex);
        auto b = minimum_obstruction(F, DivisorStrategy::HighestIndex);
        auto d = minimum_obstruction(F, DivisorStrategy::Sparsest);
        c.require(a.has_value() == b.has_value() && b.has_value() == d.has_value(),
                  "strategies agree on whether an obstruction exists");
        if (!a || !b || !d) return;
        ++hits;
        auto lm = a->remainder.leading_monomial();
        c.require(lm == b->remainder.leading_monomial() && lm == d->remainder.leading_monomial(),
                  "identical remainder leading monomials");
        Polynomial m = a->remainder.monic();
        c.require(m == b->remainder.monic() && m == d->remainder.monic(),
                  "identical monic remainders under tail reduction");
    };

    SystemFile grlex = testing::showcase("grlex");
    GroebnerBasisResult run = run_sba(grlex.polys);
    for (size_t len = 3; len < run.final_tuple.size(); ++len)
        probe(std::span<const Polynomial>(run.final_tuple.data(), len));
    probe(testing::quadrics("lex").polys);
    for (auto& e : g_corpus) probe(e.sf.polys);
    c.require(hits > 0, "at least one obstruction probed");
}

// ---- criterion 8: every resolution report is a valid minimal resolution ----
void criterion8(Checker& c) {
    for (auto& e : g_corpus) g_modules.push_back({e.sf.polys, gobs::gobs(e.sf.polys)});
    int checked = 0;
    for (auto& [F, M] : g_modules) {
        ResolutionReport rep = minimal_resolution(M);
        ++checked;
        c.require(rep.minimal, "report flagged minimal");
        c.require(differentials_compose_to_zero(rep, M.ring), "d o d = 0");
        c.require(!has_constant_entry(rep), "no constant entries");
        c.require(euler_characteristic(rep, M.ring->nvars(), 10) == hilbert_series(M, 10),
                  "graded Euler characteristic matches the Hilbert series");

        // component-sum additivity
        std::vector<int> summed;
        for (auto& comp : M.components) {
            std::vector<ModuleMonomial> numer, denom;
            for (auto& m : comp.l_gens) numer.push_back({m, comp.index});
            for (auto& m : comp.k_gens) denom.push_back({m, comp.index});
            auto part = minimal_resolution(make_monomial_quotient(F, numer, denom));
            if (summed.size() < part.ranks.size()) summed.resize(part.ranks.size(), 0);
            for (size_t k = 0; k < part.ranks.size(); ++k) summed[k] += part.ranks[k];
        }
        c.require(summed == rep.ranks, "component ranks sum to the total");
    }
    c.require(checked >= 200, "a full set of reports was validated");
}

// ---- criterion 9: degeneration behaviour on bases and intermediates ----
void criterion9(Checker& c) {
    std::vector<std::vector<Polynomial>> bases;
    for (auto& order : {std::string("grlex"), std::string("lex")})
        bases.push_back(run_sba(testing::showcase(order).polys).reduced);
    bases.push_back(run_sba(testing::quadrics("lex").polys).reduced);
    bases.push_back(run_sba(testing::quadrics("grevlex").polys).reduced);
    bases.push_back(run_sba(testing::gf5_system().polys).reduced);
    for (auto& e : g_corpus) bases.push_back(e.reduced_oracle);

    for (size_t i = 0; i < bases.size(); ++i) {
        FlatnessReport rep = degeneration_check(bases[i]);
        c.require(rep.flat && rep.m_module.is_zero() && rep.n_module.is_zero() &&
                      rep.routes_agree,
                  "basis " + std::to_string(i) + " degenerates flatly with M = N = 0");
    }

    // non-basis intermediate tuples of the grlex showcase
    GroebnerBasisResult run = run_sba(testing::showcase("grlex").polys);
    for (size_t len = 3; len < run.final_tuple.size(); ++len) {
        std::span<const Polynomial> F(run.final_tuple.data(), len);
        FlatnessReport rep = degeneration_check(F);
        LeadingSets sets = leading_sets(F);
        c.require(rep.routes_agree,
                  "tuple of size " + std::to_string(len) + ": the two routes agree");
        c.require(monomial_module_subset(sets.ls_gens, rep.lims) &&
                      monomial_module_subset(rep.lims, sets.lsl_gens),
                  "tuple of size " + std::to_string(len) + ": <LS> in <LImS> in <LSL>");
    }
}

// ---- criterion 10: weight certification ----
void criterion10(Checker& c) {
    auto dot = [](const Monomial& m, const WeightVector& w) {
        long s = 0;
        for (size_t i = 0; i < w.size(); ++i) s += w[i] * m.exponent(static_cast<int>(i));
        return s;
    };
    auto certify = [&](std::span<const Monomial> A, const TermOrder& order,
                       const WeightVector& w) {
        for (size_t i = 0; i < A.size(); ++i)
            for (size_t j = 0; j < A.size(); ++j) {
                auto cmp = order.compare(A[i], A[j]);
                long di = dot(A[i], w), dj = dot(A[j], w);
                if (cmp == std::strong_ordering::greater && !(di > dj)) return false;
                if (cmp == std::strong_ordering::less && !(di < dj)) return false;
                if (cmp == std::strong_ordering::equal && di != dj) return false;
            }
        return true;
    };

    std::vector<SystemFile> systems = {testing::showcase("grlex"), testing::showcase("lex"),
                                       testing::quadrics("lex"), testing::gf5_system()};
    for (auto& e : g_corpus) systems.push_back(e.sf);
    for (size_t i = 0; i < systems.size(); ++i) {
        std::vector<Monomial> A;
        for (auto& f : systems[i].polys)
            for (auto& t : f.terms()) A.push_back(t.mono);
        WeightVector w = compatible_weight(A, systems[i].ring->order);
        bool pos = true;
        for (long wi : w) pos = pos && wi >= 1;
        c.require(pos && certify(A, systems[i].ring->order, w),
                  "system " + std::to_string(i) + ": derived weight certifies pairwise");
    }

    // adversarial rejection: the violating pair must be named
    RingPtr ring = make_ring(Field::rationals(), {"x", "y"}, TermOrder::lex());
    std::vector<Polynomial> F = {parse_polynomial("x + y^3", ring)};
    auto bad = verify_weight(F, {1, 1});
    c.require(bad.has_value() && bad->first == 0 && bad->second == Monomial({0, 3}),
              "incompatible weight rejected, naming polynomial 1 and monomial y^3");
    bool threw = false;
    std::string msg;
    try {
        cmd_degen({ring, F}, DegenFlags{WeightVector{1, 1}});
    } catch (const std::invalid_argument& e) {
        threw = true;
        msg = e.what();
    }
    c.require(threw && msg.find("y^3") != std::string::npos,
              "command-level rejection names the violating monomial");
}

struct Criterion {
    int number;
    const char* label;
    std::function<void(Checker&)> fn;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "grlex showcase golden trace (generators, signatures, betti, final ideal)",
         criterion1},
        {2, "lex showcase betti sequence and final ideal", criterion2},
        {3, "quadrics obstruction module, minimal obstruction, lex/grevlex runs", criterion3},
        {4, "GF(5) system betti sequence and final ideal", criterion4},
        {5, "signature-driven completion matches the classical oracle on 200 systems",
         criterion5},
        {6, "basis criteria agree (module, pairwise reduction, external oracle)", criterion6},
        {7, "minimal-obstruction remainders are strategy independent", criterion7},
        {8, "every resolution report is valid and minimal", criterion8},
        {9, "flat degeneration on bases; containment chain on intermediates", criterion9},
        {10, "weight certification and adversarial rejection", criterion10},
    };

    try {
        build_corpus();
    } catch (const std::exception& e) {
        std::cout << "FAIL corpus construction: " << e.what() << "\n";
        return 1;
    }

    bool all_ok = true;
    for (auto& crit : criteria) {
        Checker c;
        auto start = std::chrono::steady_clock::now();
        try {
            crit.fn(c);
        } catch (const std::exception& e) {
            c.require(false, std::string("unexpected exception: ") + e.what());
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        if (c.failures == 0) {
            std::cout << "PASS criterion " << crit.number << ": " << crit.label << " [" << ms
                      << " ms]\n";
        } else {
            all_ok = false;
            std::cout << "FAIL criterion " << crit.number << ": " << crit.label << " ("
                      << c.failures << " failed checks)" << c.issues.str() << "\n";
        }
    }
    return all_ok ? 0 : 1;
}
