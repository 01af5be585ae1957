#include "gobs/freemod.hpp"

#include <algorithm>
#include <map>

namespace gobs {

SchreyerOrder::SchreyerOrder(RingPtr ring, std::vector<Monomial> leads)
    : ModuleOrder(std::move(ring)), leads_(std::move(leads)) {}

std::shared_ptr<const SchreyerOrder> SchreyerOrder::of(std::span<const Polynomial> F) {
    if (F.empty()) throw std::invalid_argument("empty tuple");
    std::vector<Monomial> leads;
    leads.reserve(F.size());
    for (auto& f : F) {
        check_same_ring(F.front().ring(), f.ring());
        leads.push_back(f.leading_monomial());
    }
    return std::make_shared<SchreyerOrder>(F.front().ring(), std::move(leads));
}

std::strong_ordering SchreyerOrder::compare(const ModuleMonomial& a,
                                            const ModuleMonomial& b) const {
    if (a.index < 0 || a.index >= rank() || b.index < 0 || b.index >= rank())
        throw std::invalid_argument("module monomial index out of range");
    auto c = ring_->order.compare(a.mono * leads_[a.index], b.mono * leads_[b.index]);
    if (c != std::strong_ordering::equal) return c;
    // equal images: the smaller basis index is the smaller monomial
    return a.index <=> b.index;
}

SchreyerLiftOrder::SchreyerLiftOrder(ModuleOrderPtr base, std::vector<ModuleMonomial> leads)
    : ModuleOrder(base->ring()), base_(std::move(base)), leads_(std::move(leads)) {}

std::strong_ordering SchreyerLiftOrder::compare(const ModuleMonomial& a,
                                                const ModuleMonomial& b) const {
    if (a.index < 0 || a.index >= rank() || b.index < 0 || b.index >= rank())
        throw std::invalid_argument("module monomial index out of range");
    ModuleMonomial ia{a.mono * leads_[a.index].mono, leads_[a.index].index};
    ModuleMonomial ib{b.mono * leads_[b.index].mono, leads_[b.index].index};
    auto c = base_->compare(ia, ib);
    if (c != std::strong_ordering::equal) return c;
    return b.index <=> a.index;
}

std::strong_ordering PositionOverTermOrder::compare(const ModuleMonomial& a,
                                                    const ModuleMonomial& b) const {
    if (a.index != b.index) return b.index <=> a.index;  // lower index is larger
    return ring_->order.compare(a.mono, b.mono);
}

WeightedModuleOrder::WeightedModuleOrder(ModuleOrderPtr inner, std::vector<long> weights,
                                         std::vector<long> shifts)
    : ModuleOrder(inner->ring()),
      inner_(std::move(inner)),
      weights_(std::move(weights)),
      shifts_(std::move(shifts)) {}

std::strong_ordering WeightedModuleOrder::compare(const ModuleMonomial& a,
                                                  const ModuleMonomial& b) const {
    long da = a.mono.weighted_degree(weights_) + shifts_[a.index];
    long db = b.mono.weighted_degree(weights_) + shifts_[b.index];
    if (da != db) return da <=> db;
    return inner_->compare(a, b);
}

ModuleElement::ModuleElement(ModuleOrderPtr order, std::vector<ModuleTerm> terms)
    : order_(std::move(order)), terms_(std::move(terms)) {
    normalize();
}

void ModuleElement::normalize() {
    std::map<std::pair<int, Monomial>, FieldElement> acc;
    for (auto& t : terms_) {
        if (t.mono.index < 0 || t.mono.index >= order_->rank())
            throw std::invalid_argument("module monomial index out of range");
        auto key = std::make_pair(t.mono.index, t.mono.mono);
        auto it = acc.find(key);
        if (it == acc.end())
            acc.emplace(std::move(key), t.coeff);
        else
            it->second = it->second + t.coeff;
    }
    terms_.clear();
    for (auto& [k, c] : acc)
        if (!c.is_zero()) terms_.push_back({{k.second, k.first}, c});
    std::sort(terms_.begin(), terms_.end(), [&](const ModuleTerm& a, const ModuleTerm& b) {
        return order_->compare(a.mono, b.mono) == std::strong_ordering::greater;
    });
}

const ModuleMonomial& ModuleElement::leading_monomial() const {
    if (is_zero()) throw std::invalid_argument("LM of zero module element");
    return terms_.front().mono;
}

const FieldElement& ModuleElement::leading_coeff() const {
    if (is_zero()) throw std::invalid_argument("LC of zero module element");
    return terms_.front().coeff;
}

ModuleElement ModuleElement::operator+(const ModuleElement& o) const {
    std::vector<ModuleTerm> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        auto c = order_->compare(terms_[i].mono, o.terms_[j].mono);
        if (c == std::strong_ordering::greater) {
            out.push_back(terms_[i++]);
        } else if (c == std::strong_ordering::less) {
            out.push_back(o.terms_[j++]);
        } else {
            FieldElement s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero()) out.push_back({terms_[i].mono, s});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    ModuleElement r(order_);
    r.terms_ = std::move(out);
    return r;
}

ModuleElement ModuleElement::operator-() const {
    ModuleElement r(order_);
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
    return r;
}

ModuleElement ModuleElement::operator-(const ModuleElement& o) const { return *this + (-o); }

ModuleElement ModuleElement::scale(const FieldElement& c) const {
    if (c.is_zero()) return ModuleElement(order_);
    ModuleElement r(order_);
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
    return r;
}

ModuleElement ModuleElement::mul_term(const Monomial& m, const FieldElement& c) const {
    if (c.is_zero()) return ModuleElement(order_);
    ModuleElement r(order_);
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_)
        r.terms_.push_back({{t.mono.mono * m, t.mono.index}, t.coeff * c});
    return r;  // module orders are multiplicative
}

ModuleElement ModuleElement::mul_poly(const Polynomial& h) const {
    ModuleElement r(order_);
    for (auto& t : h.terms()) r = r + mul_term(t.mono, t.coeff);
    return r;
}

ModuleElement ModuleElement::monic() const {
    if (is_zero()) return *this;
    return scale(leading_coeff().inverse());
}

ModuleElement ModuleElement::with_order(ModuleOrderPtr order) const {
    if (order->rank() != order_->rank())
        throw std::invalid_argument("rank mismatch in order change");
    return ModuleElement(std::move(order), terms_);
}

bool ModuleElement::operator==(const ModuleElement& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

Polynomial image_of(const ModuleElement& u, std::span<const Polynomial> F) {
    if (u.order()->rank() != static_cast<int>(F.size()))
        throw std::invalid_argument("rank mismatch between element and tuple");
    if (F.empty()) throw std::invalid_argument("empty tuple");
    Polynomial r(F.front().ring());
    for (auto& t : u.terms())
        r = r + F[t.mono.index].mul_term(t.mono.mono, t.coeff);
    return r;
}

ModuleDivisionResult module_divide(const ModuleElement& u, std::span<const ModuleElement> V,
                                   bool tail_reduce) {
    if (V.empty()) throw std::invalid_argument("empty divisor list");
    const RingPtr& ring = u.order()->ring();
    ModuleDivisionResult res;
    res.quotients.assign(V.size(), Polynomial(ring));
    res.remainder = ModuleElement(u.order());

    ModuleElement p = u;
    while (!p.is_zero()) {
        const ModuleTerm lt = p.terms().front();
        // among the applicable divisors prefer the sparsest: less fill-in
        // and smaller coefficient growth
        int pick = -1;
        for (int i = 0; i < static_cast<int>(V.size()); ++i) {
            if (V[i].is_zero()) throw std::invalid_argument("zero divisor");
            if (V[i].leading_monomial().divides(lt.mono) &&
                (pick < 0 || V[i].terms().size() < V[pick].terms().size()))
                pick = i;
        }
        if (pick >= 0) {
            Monomial q = lt.mono.mono / V[pick].leading_monomial().mono;
            FieldElement c = lt.coeff / V[pick].leading_coeff();
            res.quotients[pick] = res.quotients[pick] + Polynomial(ring, {{q, c}});
            p = p - V[pick].mul_term(q, c);
        } else if (tail_reduce) {
            ModuleElement t(u.order(), {lt});
            res.remainder = res.remainder + t;
            p = p - t;
        } else {
            res.remainder = res.remainder + p;
            break;
        }
    }
    return res;
}

std::vector<ModuleElement> module_buchberger(std::span<const ModuleElement> V) {
    std::vector<ModuleElement> basis;
    for (auto& v : V)
        if (!v.is_zero()) basis.push_back(v);
    if (basis.empty()) return basis;

    std::vector<std::pair<size_t, size_t>> pairs;
    auto add_pairs = [&](size_t k) {
        for (size_t i = 0; i < k; ++i)
            if (basis[i].leading_monomial().index == basis[k].leading_monomial().index)
                pairs.emplace_back(i, k);
    };
    for (size_t k = 0; k < basis.size(); ++k) add_pairs(k);

    ModuleOrderPtr ord = basis.front().order();
    auto pair_lcm = [&](const std::pair<size_t, size_t>& pr) {
        return ModuleMonomial{lcm(basis[pr.first].leading_monomial().mono,
                                  basis[pr.second].leading_monomial().mono),
                              basis[pr.first].leading_monomial().index};
    };
    while (!pairs.empty()) {
        // normal strategy: smallest lcm first keeps intermediates small
        size_t best = 0;
        ModuleMonomial best_lcm = pair_lcm(pairs[0]);
        for (size_t t = 1; t < pairs.size(); ++t) {
            ModuleMonomial L = pair_lcm(pairs[t]);
            if (ord->compare(L, best_lcm) == std::strong_ordering::less) {
                best = t;
                best_lcm = L;
            }
        }
        auto [i, j] = pairs[best];
        pairs.erase(pairs.begin() + best);
        const ModuleMonomial& la = basis[i].leading_monomial();
        const ModuleMonomial& lb = basis[j].leading_monomial();
        Monomial L = lcm(la.mono, lb.mono);
        // chain criterion: if some other lead divides the lcm and both
        // subpairs were already treated, this pair is redundant
        auto pending = [&](size_t a, size_t b) {
            if (a > b) std::swap(a, b);
            for (auto& pr : pairs)
                if (pr.first == a && pr.second == b) return true;
            return false;
        };
        bool redundant = false;
        for (size_t k = 0; k < basis.size() && !redundant; ++k) {
            if (k == i || k == j) continue;
            const ModuleMonomial& lk = basis[k].leading_monomial();
            if (lk.index == la.index && lk.mono.divides(L) &&
                !pending(i, k) && !pending(j, k))
                redundant = true;
        }
        if (redundant) continue;
        ModuleElement s = basis[i].mul_term(L / la.mono, basis[i].leading_coeff().inverse()) -
                          basis[j].mul_term(L / lb.mono, basis[j].leading_coeff().inverse());
        if (s.is_zero()) continue;
        ModuleElement r = module_divide(s, basis, /*tail_reduce=*/true).remainder;
        if (!r.is_zero()) {
            basis.push_back(r.monic());
            add_pairs(basis.size() - 1);
        }
    }
    return basis;
}

std::vector<ModuleElement> schreyer_syzygies(std::span<const ModuleElement> W) {
    if (W.empty()) return {};
    std::vector<ModuleMonomial> leads;
    leads.reserve(W.size());
    for (auto& w : W) leads.push_back(w.leading_monomial());
    auto lifted = std::make_shared<SchreyerLiftOrder>(W.front().order(), leads);

    std::vector<ModuleElement> syz;
    for (size_t i = 0; i < W.size(); ++i) {
        for (size_t j = i + 1; j < W.size(); ++j) {
            if (leads[i].index != leads[j].index) continue;
            Monomial L = lcm(leads[i].mono, leads[j].mono);
            Monomial qi = L / leads[i].mono;
            Monomial qj = L / leads[j].mono;
            FieldElement ci = W[i].leading_coeff().inverse();
            FieldElement cj = W[j].leading_coeff().inverse();
            ModuleElement s = W[i].mul_term(qi, ci) - W[j].mul_term(qj, cj);
            std::vector<ModuleTerm> terms;
            terms.push_back({{qi, static_cast<int>(i)}, ci});
            terms.push_back({{qj, static_cast<int>(j)}, -cj});
            if (!s.is_zero()) {
                auto div = module_divide(s, W, /*tail_reduce=*/false);
                if (!div.remainder.is_zero())
                    throw InternalError("schreyer_syzygies: input is not a Groebner basis");
                for (size_t k = 0; k < W.size(); ++k)
                    for (auto& t : div.quotients[k].terms())
                        terms.push_back({{t.mono, static_cast<int>(k)}, -t.coeff});
            }
            syz.emplace_back(lifted, std::move(terms));
        }
    }
    return syz;
}

bool monomial_module_contains(std::span<const ModuleMonomial> gens, const ModuleMonomial& m) {
    for (auto& g : gens)
        if (g.divides(m)) return true;
    return false;
}

bool monomial_module_subset(std::span<const ModuleMonomial> a,
                            std::span<const ModuleMonomial> b) {
    for (auto& m : a)
        if (!monomial_module_contains(b, m)) return false;
    return true;
}

std::vector<ModuleMonomial> minimalize_monomials(std::vector<ModuleMonomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const ModuleMonomial& a, const ModuleMonomial& b) {
        if (a.index != b.index) return a.index < b.index;
        if (a.mono.degree() != b.mono.degree()) return a.mono.degree() < b.mono.degree();
        return a.mono < b.mono;
    });
    std::vector<ModuleMonomial> out;
    for (auto& m : gens) {
        bool redundant = false;
        for (auto& kept : out)
            if (kept.divides(m)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(m);
    }
    return out;
}

}  // namespace gobs
