#include "gobs/report.hpp"

#include <chrono>
#include <sstream>

#include "gobs/obstruct.hpp"

using nlohmann::json;

namespace gobs {

std::string betti_arrows(const std::vector<int>& ranks) {
    if (ranks.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < ranks.size(); ++i) {
        if (i) out += " <- ";
        out += "R^" + std::to_string(ranks[i]);
    }
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

json header_json(const char* command, const SystemFile& input) {
    json j;
    j["schema"] = 1;
    j["command"] = command;
    j["field"] = input.ring->field.kind == FieldKind::Rationals
                     ? std::string("QQ")
                     : "GF(" + std::to_string(input.ring->field.modulus) + ")";
    j["vars"] = input.ring->vars;
    j["order"] = input.ring->order.str();
    j["polys"] = json::array();
    for (auto& f : input.polys) j["polys"].push_back(to_string(f));
    return j;
}

void attach_timing(json& j, Clock::time_point start) {
    j["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::vector<std::string> monomial_strings(std::span<const ModuleMonomial> gens,
                                          const RingPtr& ring) {
    std::vector<std::string> out;
    for (auto& g : gens) out.push_back(to_string(g, ring));
    return out;
}

std::string angle_list(const std::vector<std::string>& items) {
    if (items.empty()) return "<0>";
    std::string out = "<";
    for (size_t i = 0; i < items.size(); ++i) {
        if (i) out += ", ";
        out += items[i];
    }
    return out + ">";
}

std::vector<std::string> lm_ideal_strings(std::span<const Polynomial> F) {
    std::vector<ModuleMonomial> lms;
    for (auto& f : F) lms.push_back({f.leading_monomial(), 0});
    lms = minimalize_monomials(std::move(lms));
    std::vector<std::string> out;
    for (auto& m : lms) out.push_back(to_string(m.mono, F.front().ring()));
    return out;
}

}  // namespace

CommandResult cmd_sba(const SystemFile& input, const SbaFlags& flags) {
    if (input.polys.empty()) throw std::invalid_argument("no polynomials in input");
    auto start = Clock::now();
    GroebnerBasisResult res = run_sba(input.polys);

    json j = header_json("sba", input);
    std::ostringstream hum;
    j["steps"] = json::array();
    for (auto& step : res.steps) {
        std::span<const Polynomial> prefix(res.final_tuple.data(), step.tuple_size);
        json js;
        js["tuple_size"] = step.tuple_size;
        js["lm_ideal"] = lm_ideal_strings(prefix);
        js["signatures"] = json::array();
        for (auto& s : step.sorted_signatures)
            js["signatures"].push_back(to_string(s, input.ring));
        js["reduced_to_zero"] = json::array();
        for (bool b : step.reduced_to_zero) js["reduced_to_zero"].push_back(b);
        if (step.appended) {
            js["appended"] = {{"generator", to_string(step.appended->generator)},
                              {"signature", to_string(step.appended->sig, input.ring)}};
        } else {
            js["appended"] = nullptr;
        }

        hum << "F_" << step.tuple_size << ": LM ideal "
            << angle_list(lm_ideal_strings(prefix)) << "\n";
        if (flags.betti) {
            auto ranks = minimal_resolution(gobs(prefix)).ranks;
            js["betti"] = ranks;
            hum << "  G_obs: " << betti_arrows(ranks) << "\n";
        }
        if (flags.trace) {
            for (size_t i = 0; i < step.reduced_to_zero.size(); ++i)
                hum << "  sig " << to_string(step.sorted_signatures[i], input.ring) << " -> "
                    << (step.reduced_to_zero[i] ? "0" : "new generator") << "\n";
        }
        if (step.appended)
            hum << "  appended " << to_string(step.appended->generator) << "  (signature "
                << to_string(step.appended->sig, input.ring) << ")\n";
        j["steps"].push_back(std::move(js));
    }

    j["final_tuple"] = json::array();
    for (auto& f : res.final_tuple) j["final_tuple"].push_back(to_string(f));
    j["reduced_gb"] = json::array();
    for (auto& f : res.reduced) j["reduced_gb"].push_back(to_string(f));

    hum << "reduced Groebner basis (" << res.reduced.size() << " elements):\n";
    for (auto& f : res.reduced) hum << "  " << to_string(f) << "\n";

    attach_timing(j, start);
    return {std::move(j), hum.str()};
}

CommandResult cmd_analyze(const SystemFile& input, const AnalyzeFlags& flags) {
    if (input.polys.empty()) throw std::invalid_argument("no polynomials in input");
    auto start = Clock::now();
    AnalyzeFlags f = flags;
    if (!f.gobs_module && !f.is_gb && !f.min_obstruction)
        f.gobs_module = f.is_gb = f.min_obstruction = true;

    json j = header_json("analyze", input);
    std::ostringstream hum;
    const RingPtr& ring = input.ring;
    LeadingSets sets;
    if (f.gobs_module || f.is_gb) sets = leading_sets(input.polys);

    if (f.gobs_module) {
        ObstructionModule M = gobs(input.polys, sets);
        auto numer = monomial_strings(M.surviving_numerator(), ring);
        auto denom = monomial_strings(M.denominator, ring);
        j["gobs"] = {{"numerator", numer},
                     {"denominator", denom},
                     {"is_zero", M.is_zero()},
                     {"betti", minimal_resolution(M).ranks}};
        hum << "G_obs: " << angle_list(numer) << " / " << angle_list(denom) << "\n";
        hum << "  betti: " << betti_arrows(j["gobs"]["betti"].get<std::vector<int>>()) << "\n";
    }
    if (f.is_gb) {
        GroebnerCheck check = is_groebner(input.polys, sets);
        j["is_gb"] = check.is_gb;
        if (check.witness)
            j["is_gb_witness"] = to_string(*check.witness, ring);
        hum << "Groebner basis: " << (check.is_gb ? "true" : "false");
        if (check.witness) hum << "  (witness " << to_string(*check.witness, ring) << ")";
        hum << "\n";
    }
    if (f.min_obstruction) {
        auto obs = minimum_obstruction(input.polys);
        if (obs) {
            j["min_obstruction"] = {{"signature", to_string(obs->sig, ring)},
                                    {"remainder", to_string(obs->remainder)}};
            hum << "minimum obstruction: signature " << to_string(obs->sig, ring)
                << ", remainder " << to_string(obs->remainder) << "\n";
        } else {
            j["min_obstruction"] = nullptr;
            hum << "minimum obstruction: none\n";
        }
    }

    attach_timing(j, start);
    return {std::move(j), hum.str()};
}

CommandResult cmd_degen(const SystemFile& input, const DegenFlags& flags) {
    if (input.polys.empty()) throw std::invalid_argument("no polynomials in input");
    auto start = Clock::now();
    const RingPtr& ring = input.ring;

    FlatnessReport rep;
    if (flags.weight) {
        if (flags.weight->size() != static_cast<size_t>(ring->nvars()))
            throw std::invalid_argument("weight vector length does not match the variable count");
        std::vector<Polynomial> monic;
        for (auto& f : input.polys) monic.push_back(f.monic());
        if (auto bad = verify_weight(monic, *flags.weight)) {
            throw std::invalid_argument(
                "weight not compatible: in polynomial " + std::to_string(bad->first + 1) +
                ", monomial " + to_string(bad->second, ring) + " is not w-below " +
                to_string(monic[bad->first].leading_monomial(), ring));
        }
        rep = degeneration_check(input.polys, *flags.weight);
    } else {
        rep = degeneration_check(input.polys);
    }

    json j = header_json("degen", input);
    j["weight"] = rep.weight;
    j["lims"] = monomial_strings(rep.lims, ring);
    j["routes_agree"] = rep.routes_agree;
    j["flat"] = rep.flat;
    auto betti_m = minimal_resolution(rep.m_module).ranks;
    auto betti_n = minimal_resolution(rep.n_module).ranks;
    j["m_module"] = {{"numerator", monomial_strings(rep.m_module.surviving_numerator(), ring)},
                     {"denominator", monomial_strings(rep.m_module.denominator, ring)},
                     {"betti", betti_m}};
    j["n_module"] = {{"numerator", monomial_strings(rep.n_module.surviving_numerator(), ring)},
                     {"denominator", monomial_strings(rep.n_module.denominator, ring)},
                     {"betti", betti_n}};

    std::ostringstream hum;
    hum << "weight: (";
    for (size_t i = 0; i < rep.weight.size(); ++i)
        hum << (i ? ", " : "") << rep.weight[i];
    hum << ")\n";
    hum << "LImS: " << angle_list(monomial_strings(rep.lims, ring)) << "\n";
    hum << "routes agree: " << (rep.routes_agree ? "true" : "false") << "\n";
    hum << "M(F) betti: " << betti_arrows(betti_m) << "\n";
    hum << "N(F) betti: " << betti_arrows(betti_n) << "\n";
    hum << "flat: " << (rep.flat ? "true" : "false") << "\n";

    attach_timing(j, start);
    return {std::move(j), hum.str()};
}

}  // namespace gobs
