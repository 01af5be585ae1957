#include "gobs/sba.hpp"

#include <algorithm>

namespace gobs {

GroebnerBasisResult run_sba(std::span<const Polynomial> F, DivisorStrategy strategy) {
    GroebnerBasisResult out;
    out.final_tuple.assign(F.begin(), F.end());
    for (auto& f : out.final_tuple)
        if (f.is_zero()) throw std::invalid_argument("zero polynomial in tuple");

    for (;;) {
        TraceStep step;
        step.tuple_size = out.final_tuple.size();
        auto pairs = dedupe_by_signature(standard_spairs(out.final_tuple));
        for (auto& p : pairs) step.sorted_signatures.push_back(p.right);

        bool appended = false;
        for (auto& p : pairs) {
            Polynomial s = spolynomial(p, out.final_tuple);
            Polynomial r = s.is_zero()
                               ? s
                               : divide(s, out.final_tuple, /*tail_reduce=*/true, strategy)
                                     .remainder;
            if (r.is_zero()) {
                step.reduced_to_zero.push_back(true);
                continue;
            }
            step.reduced_to_zero.push_back(false);
            Polynomial g = r.monic();
            // Prop 3.8: the guessed signature of p is the signature of r
            step.appended = AppendedGenerator{g, p.right, p};
            out.final_tuple.push_back(g);
            appended = true;
            break;
        }
        out.steps.push_back(std::move(step));
        if (!appended) break;
    }
    out.reduced = reduced_gb(out.final_tuple);
    return out;
}

std::vector<Polynomial> buchberger(std::span<const Polynomial> F) {
    std::vector<Polynomial> basis;
    for (auto& f : F) {
        if (f.is_zero()) throw std::invalid_argument("zero polynomial in tuple");
        basis.push_back(f);
    }
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    const TermOrder& ord = F.front().ring()->order;
    while (!pairs.empty()) {
        // normal strategy: smallest lcm first keeps intermediates small
        size_t best = 0;
        auto plcm = [&](const std::pair<size_t, size_t>& pr) {
            return lcm(basis[pr.first].leading_monomial(), basis[pr.second].leading_monomial());
        };
        Monomial best_lcm = plcm(pairs[0]);
        for (size_t t = 1; t < pairs.size(); ++t) {
            Monomial cand = plcm(pairs[t]);
            if (ord.compare(cand, best_lcm) == std::strong_ordering::less) {
                best = t;
                best_lcm = cand;
            }
        }
        auto [i, j] = pairs[best];
        pairs.erase(pairs.begin() + best);
        const Monomial& la = basis[i].leading_monomial();
        const Monomial& lb = basis[j].leading_monomial();
        Monomial L = lcm(la, lb);
        // product criterion: coprime leading monomials reduce to zero
        if (L == la * lb) continue;
        Polynomial s = basis[i].mul_term(L / la, basis[i].leading_coeff().inverse()) -
                       basis[j].mul_term(L / lb, basis[j].leading_coeff().inverse());
        if (s.is_zero()) continue;
        Polynomial r = divide(s, basis, /*tail_reduce=*/false).remainder;
        if (!r.is_zero()) {
            basis.push_back(r.monic());
            for (size_t t = 0; t + 1 < basis.size(); ++t) pairs.emplace_back(t, basis.size() - 1);
        }
    }
    return basis;
}

std::vector<Polynomial> reduced_gb(std::span<const Polynomial> G) {
    if (!is_groebner(G).is_gb)
        throw std::invalid_argument("reduced_gb: input is not a Groebner basis");
    const RingPtr& ring = G.front().ring();

    // minimalize: drop elements whose LM is a multiple of another's
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < G.size(); ++j) {
            if (i == j) continue;
            const Monomial& mi = G[i].leading_monomial();
            const Monomial& mj = G[j].leading_monomial();
            if (mj.divides(mi) && (!(mi == mj) || j < i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(G[i].monic());
    }

    // inter-reduce tails to the unique reduced basis
    for (;;) {
        bool changed = false;
        for (size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            for (size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            if (others.empty()) continue;
            Polynomial r = divide(minimal[i], others, /*tail_reduce=*/true).remainder;
            if (!(r == minimal[i])) {
                minimal[i] = r.monic();
                changed = true;
            }
        }
        if (!changed) break;
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ring->order.compare(a.leading_monomial(), b.leading_monomial()) ==
               std::strong_ordering::less;
    });
    return minimal;
}

}  // namespace gobs
