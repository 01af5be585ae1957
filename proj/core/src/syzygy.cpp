#include "gobs/syzygy.hpp"

namespace gobs {

std::vector<ModuleElement> lm_syzygy_generators(std::span<const Polynomial> F) {
    for (auto& f : F)
        if (f.is_zero()) throw std::invalid_argument("zero polynomial in tuple");
    auto ord = SchreyerOrder::of(F);
    const Field& K = F.front().ring()->field;
    std::vector<ModuleElement> gens;
    for (size_t i = 0; i < F.size(); ++i) {
        for (size_t j = i + 1; j < F.size(); ++j) {
            Monomial L = lcm(F[i].leading_monomial(), F[j].leading_monomial());
            Monomial mi = L / F[i].leading_monomial();
            Monomial mj = L / F[j].leading_monomial();
            gens.emplace_back(ord, std::vector<ModuleTerm>{
                                       {{mi, static_cast<int>(i)}, FieldElement::one(K)},
                                       {{mj, static_cast<int>(j)}, -FieldElement::one(K)}});
        }
    }
    return gens;
}

namespace {

// Order on R^(1+m) for the graph module generated by (f_i, e_i): position 0
// carries the polynomial and dominates; positions 1..m carry the syzygy part
// and compare by the Schreyer order of F. By elimination, the Groebner-basis
// elements with zero position-0 component form a Groebner basis of Syz(F)
// under the Schreyer order.
class GraphOrder final : public ModuleOrder {
public:
    GraphOrder(RingPtr ring, std::shared_ptr<const SchreyerOrder> tail)
        : ModuleOrder(std::move(ring)), tail_(std::move(tail)) {}

    std::strong_ordering compare(const ModuleMonomial& a,
                                 const ModuleMonomial& b) const override {
        if ((a.index == 0) != (b.index == 0)) return b.index <=> a.index;
        if (a.index == 0) return ring_->order.compare(a.mono, b.mono);
        return tail_->compare({a.mono, a.index - 1}, {b.mono, b.index - 1});
    }
    int rank() const override { return tail_->rank() + 1; }

private:
    std::shared_ptr<const SchreyerOrder> tail_;
};

}  // namespace

SyzygyBasis syzygy_basis(std::span<const Polynomial> F) {
    if (F.empty()) throw std::invalid_argument("empty tuple");
    const RingPtr& ring = F.front().ring();
    auto ord = SchreyerOrder::of(F);
    const Field& K = ring->field;
    auto graph = std::make_shared<GraphOrder>(ring, ord);

    std::vector<ModuleElement> gens;
    for (size_t i = 0; i < F.size(); ++i) {
        if (F[i].is_zero()) throw std::invalid_argument("zero polynomial in tuple");
        std::vector<ModuleTerm> terms;
        for (auto& t : F[i].terms()) terms.push_back({{t.mono, 0}, t.coeff});
        terms.push_back({{Monomial::one(ring->nvars()), static_cast<int>(i) + 1},
                         FieldElement::one(K)});
        gens.emplace_back(graph, std::move(terms));
    }

    SyzygyBasis out;
    out.F.assign(F.begin(), F.end());
    out.order = ord;
    for (auto& g : module_buchberger(gens)) {
        std::vector<ModuleTerm> terms;
        bool pure = true;
        for (auto& t : g.terms()) {
            if (t.mono.index == 0) {
                pure = false;
                break;
            }
            terms.push_back({{t.mono.mono, t.mono.index - 1}, t.coeff});
        }
        if (pure) out.elements.push_back(ModuleElement(ord, std::move(terms)).monic());
    }

    for (auto& u : out.elements)
        if (!image_of(u, F).is_zero())
            throw InternalError("syzygy_basis: element is not a syzygy");
    return out;
}

LeadingSets leading_sets(std::span<const Polynomial> F, const SyzygyBasis& syz) {
    LeadingSets out;
    std::vector<ModuleMonomial> ls;
    for (auto& u : syz.elements) ls.push_back(u.leading_monomial());
    out.ls_gens = minimalize_monomials(std::move(ls));

    std::vector<ModuleMonomial> lsl;
    for (auto& u : lm_syzygy_generators(F)) lsl.push_back(u.leading_monomial());
    out.lsl_gens = minimalize_monomials(std::move(lsl));

    if (!monomial_module_subset(out.ls_gens, out.lsl_gens))
        throw InternalError("leading_sets: <LS> is not contained in <LSL>");
    return out;
}

LeadingSets leading_sets(std::span<const Polynomial> F) {
    return leading_sets(F, syzygy_basis(F));
}

}  // namespace gobs
