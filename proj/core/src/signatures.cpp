#include "gobs/signatures.hpp"

#include <algorithm>

namespace gobs {

std::vector<SPair> standard_spairs(std::span<const Polynomial> F) {
    for (auto& f : F)
        if (f.is_zero()) throw std::invalid_argument("zero polynomial in tuple");
    auto ord = SchreyerOrder::of(F);
    std::vector<SPair> pairs;
    for (size_t k = 0; k < F.size(); ++k) {
        for (size_t l = k + 1; l < F.size(); ++l) {
            Monomial L = lcm(F[k].leading_monomial(), F[l].leading_monomial());
            pairs.push_back({{L / F[k].leading_monomial(), static_cast<int>(k)},
                             {L / F[l].leading_monomial(), static_cast<int>(l)},
                             true});
        }
    }
    std::sort(pairs.begin(), pairs.end(), [&](const SPair& a, const SPair& b) {
        auto c = ord->compare(a.right, b.right);
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
        if (a.left.index != b.left.index) return a.left.index < b.left.index;
        return a.right.index < b.right.index;
    });
    return pairs;
}

std::vector<SPair> dedupe_by_signature(std::vector<SPair> pairs) {
    // input sorted ascending with (k, l) tiebreak, so the first representative
    // of each signature is the one to keep
    std::vector<SPair> out;
    for (auto& p : pairs)
        if (out.empty() || !(out.back().right == p.right)) out.push_back(p);
    return out;
}

Polynomial spolynomial(const SPair& p, std::span<const Polynomial> F) {
    int k = p.left.index, l = p.right.index;
    if (k >= l || l >= static_cast<int>(F.size()))
        throw std::invalid_argument("invalid S-pair");
    if (!(p.left.mono * F[k].leading_monomial() == p.right.mono * F[l].leading_monomial()))
        throw std::invalid_argument("invalid S-pair: leading multiples differ");
    return F[k].mul_term(p.left.mono, F[k].leading_coeff().inverse()) -
           F[l].mul_term(p.right.mono, F[l].leading_coeff().inverse());
}

ModuleMonomial signature(const Polynomial& f, const ModuleElement& u, const SyzygyBasis& syz) {
    if (f.is_zero()) throw std::invalid_argument("signature of zero polynomial");
    if (!(image_of(u, syz.F) == f))
        throw std::invalid_argument("u is not a preimage of f");
    ModuleElement v = u;
    for (;;) {
        bool reduced = false;
        for (auto& s : syz.elements) {
            if (s.leading_monomial().divides(v.leading_monomial())) {
                Monomial q = v.leading_monomial().mono / s.leading_monomial().mono;
                v = v - s.mul_term(q, v.leading_coeff() / s.leading_coeff());
                reduced = true;
                break;
            }
        }
        if (!reduced) return v.leading_monomial();
    }
}

GroebnerCheck is_groebner(std::span<const Polynomial> F, const LeadingSets& sets) {
    GroebnerCheck out;
    out.is_gb = true;
    auto ord = SchreyerOrder::of(F);
    for (auto& g : sets.lsl_gens) {
        if (!monomial_module_contains(sets.ls_gens, g)) {
            out.is_gb = false;
            if (!out.witness ||
                ord->compare(g, *out.witness) == std::strong_ordering::less)
                out.witness = g;
        }
    }
    // cross-check criterion (d) against the standard-pair criterion (c)
    bool c = !minimum_obstruction(F).has_value();
    if (c != out.is_gb)
        throw InternalError("is_groebner: criteria (c) and (d) disagree");
    return out;
}

GroebnerCheck is_groebner(std::span<const Polynomial> F) {
    return is_groebner(F, leading_sets(F));
}

std::optional<Obstruction> minimum_obstruction(std::span<const Polynomial> F,
                                               DivisorStrategy strategy) {
    auto pairs = dedupe_by_signature(standard_spairs(F));
    for (auto& p : pairs) {
        Polynomial s = spolynomial(p, F);
        if (s.is_zero()) continue;
        Polynomial r = divide(s, F, /*tail_reduce=*/true, strategy).remainder;
        if (!r.is_zero()) return Obstruction{p.right, p, r};
    }
    return std::nullopt;
}

}  // namespace gobs
