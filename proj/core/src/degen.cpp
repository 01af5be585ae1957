#include "gobs/degen.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gobs/syzygy.hpp"

namespace gobs {

namespace {

// One linear inequality coeffs . w >= rhs with integer data.
struct Constraint {
    std::vector<mpz_class> coeffs;
    mpz_class rhs;

    bool operator<(const Constraint& o) const {
        if (coeffs != o.coeffs) return coeffs < o.coeffs;
        return rhs < o.rhs;
    }
};

void normalize(Constraint& c) {
    mpz_class g = abs(c.rhs);
    for (auto& a : c.coeffs) g = gcd(g, a);
    if (g > 1) {
        for (auto& a : c.coeffs) a /= g;
        c.rhs /= g;
    }
}

// Eliminate variable k, keeping only constraints in variables 0..k-1.
std::vector<Constraint> fm_eliminate(const std::vector<Constraint>& cs, int k) {
    std::vector<const Constraint*> pos, neg;
    std::set<Constraint> out;
    for (auto& c : cs) {
        if (c.coeffs[k] > 0)
            pos.push_back(&c);
        else if (c.coeffs[k] < 0)
            neg.push_back(&c);
        else {
            Constraint kept = c;
            normalize(kept);
            out.insert(std::move(kept));
        }
    }
    for (auto* p : pos) {
        for (auto* q : neg) {
            mpz_class cp = p->coeffs[k];
            mpz_class cq = -q->coeffs[k];
            Constraint c;
            c.coeffs.resize(p->coeffs.size(), 0);
            for (size_t i = 0; i < c.coeffs.size(); ++i)
                c.coeffs[i] = cq * p->coeffs[i] + cp * q->coeffs[i];
            c.rhs = cq * p->rhs + cp * q->rhs;
            normalize(c);
            out.insert(std::move(c));
        }
    }
    return {out.begin(), out.end()};
}

mpq_class partial_sum(const Constraint& c, std::span<const mpq_class> v, int k) {
    mpq_class s = 0;
    for (int i = 0; i < k; ++i) s += mpq_class(c.coeffs[i]) * v[i];
    return s;
}

}  // namespace

WeightVector compatible_weight(std::span<const Monomial> A, const TermOrder& order) {
    if (A.empty()) throw std::invalid_argument("empty monomial set");
    int n = A.front().nvars();

    std::vector<Constraint> cs;
    for (int i = 0; i < n; ++i) {
        Constraint c;
        c.coeffs.resize(n, 0);
        c.coeffs[i] = 1;
        c.rhs = 1;
        cs.push_back(std::move(c));
    }
    // sort descending; separating consecutive elements separates all pairs
    // by transitivity, keeping the Fourier-Motzkin input linear in |A|
    std::vector<Monomial> sorted(A.begin(), A.end());
    std::sort(sorted.begin(), sorted.end(), [&](const Monomial& a, const Monomial& b) {
        return order.compare(a, b) == std::strong_ordering::greater;
    });
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::set<Constraint> seen;
    for (size_t s = 0; s + 1 < sorted.size(); ++s) {
        const auto& beta = sorted[s].exponents();
        const auto& alpha = sorted[s + 1].exponents();
        Constraint c;
        c.coeffs.resize(n, 0);
        for (int i = 0; i < n; ++i) c.coeffs[i] = beta[i] - alpha[i];
        c.rhs = 1;
        normalize(c);
        if (seen.insert(c).second) cs.push_back(std::move(c));
    }

    // stages[k]: system in variables 0..k
    std::vector<std::vector<Constraint>> stages(n);
    stages[n - 1] = std::move(cs);
    for (int k = n - 1; k > 0; --k) stages[k - 1] = fm_eliminate(stages[k], k);

    std::vector<mpq_class> v(n);
    for (int k = 0; k < n; ++k) {
        bool has_upper = false;
        mpq_class lower = 1, upper = 0;
        for (auto& c : stages[k]) {
            if (c.coeffs[k] == 0) {
                // feasibility residue: 0 >= rhs must hold
                if (k == 0 && partial_sum(c, v, 0) < c.rhs)
                    throw InternalError("compatible_weight: infeasible system");
                continue;
            }
            mpq_class bound = (mpq_class(c.rhs) - partial_sum(c, v, k)) / mpq_class(c.coeffs[k]);
            bound.canonicalize();
            if (c.coeffs[k] > 0) {
                if (bound > lower) lower = bound;
            } else {
                if (!has_upper || bound < upper) upper = bound;
                has_upper = true;
            }
        }
        if (has_upper && lower > upper)
            throw InternalError("compatible_weight: empty interval during back-substitution");
        v[k] = lower;
    }

    mpz_class L = 1;
    for (auto& q : v) L = L * q.get_den() / gcd(L, mpz_class(q.get_den()));
    WeightVector w(n);
    for (int i = 0; i < n; ++i) {
        mpq_class scaled = v[i] * mpq_class(L);
        scaled.canonicalize();
        if (scaled.get_den() != 1 || !scaled.get_num().fits_slong_p())
            throw InternalError("compatible_weight: scaling failed");
        w[i] = scaled.get_num().get_si();
    }
    // certify: w realizes the order on A by exhaustive pairwise check
    for (size_t s = 0; s < A.size(); ++s)
        for (size_t t = 0; t < A.size(); ++t)
            if (order.compare(A[s], A[t]) == std::strong_ordering::greater &&
                A[s].weighted_degree(w) <= A[t].weighted_degree(w))
                throw InternalError("compatible_weight: certification failed");
    return w;
}

std::optional<std::pair<int, Monomial>> verify_weight(std::span<const Polynomial> F,
                                                      const WeightVector& w) {
    for (size_t i = 0; i < F.size(); ++i) {
        long d = F[i].leading_monomial().weighted_degree(w);
        for (size_t t = 1; t < F[i].terms().size(); ++t)
            if (F[i].terms()[t].mono.weighted_degree(w) >= d)
                return std::make_pair(static_cast<int>(i), F[i].terms()[t].mono);
    }
    return std::nullopt;
}

RingPtr extend_ring_with_t(const RingPtr& ring) {
    std::vector<std::string> vars = ring->vars;
    vars.push_back("t");
    return make_ring(ring->field, std::move(vars), TermOrder::block_t(ring->order));
}

Polynomial homogenize(const Polynomial& f, const WeightVector& w, const RingPtr& ext_ring) {
    if (f.is_zero()) return Polynomial(ext_ring);
    long d = f.terms().front().mono.weighted_degree(w);
    for (auto& t : f.terms()) d = std::max(d, t.mono.weighted_degree(w));
    std::vector<Term> terms;
    for (auto& t : f.terms()) {
        std::vector<int> e = t.mono.exponents();
        e.push_back(static_cast<int>(d - t.mono.weighted_degree(w)));
        terms.push_back({Monomial(std::move(e)), t.coeff});
    }
    return Polynomial(ext_ring, std::move(terms));
}

Polynomial dehomogenize_at_zero(const Polynomial& f, const RingPtr& base_ring) {
    int n = base_ring->nvars();
    std::vector<Term> terms;
    for (auto& t : f.terms()) {
        if (t.mono.exponent(n) != 0) continue;
        const auto& e = t.mono.exponents();
        terms.push_back({Monomial(std::vector<int>(e.begin(), e.begin() + n)), t.coeff});
    }
    return Polynomial(base_ring, std::move(terms));
}

Polynomial top_terms(const Polynomial& f, const WeightVector& w) {
    if (f.is_zero()) return f;
    long d = f.terms().front().mono.weighted_degree(w);
    for (auto& t : f.terms()) d = std::max(d, t.mono.weighted_degree(w));
    std::vector<Term> terms;
    for (auto& t : f.terms())
        if (t.mono.weighted_degree(w) == d) terms.push_back(t);
    return Polynomial(f.ring(), std::move(terms));
}

ModuleElement top_terms(const ModuleElement& u, const WeightVector& w,
                        std::span<const long> shifts) {
    if (u.is_zero()) return u;
    auto deg = [&](const ModuleMonomial& m) {
        return m.mono.weighted_degree(w) + shifts[m.index];
    };
    long d = deg(u.terms().front().mono);
    for (auto& t : u.terms()) d = std::max(d, deg(t.mono));
    std::vector<ModuleTerm> terms;
    for (auto& t : u.terms())
        if (deg(t.mono) == d) terms.push_back(t);
    return ModuleElement(u.order(), std::move(terms));
}

namespace {

std::vector<ModuleMonomial> canonical(std::vector<ModuleMonomial> gens) {
    gens = minimalize_monomials(std::move(gens));
    std::sort(gens.begin(), gens.end(), [](const ModuleMonomial& a, const ModuleMonomial& b) {
        if (a.index != b.index) return a.index < b.index;
        return a.mono < b.mono;
    });
    return gens;
}

}  // namespace

namespace {

FlatnessReport degeneration_impl(std::span<const Polynomial> F, const SyzygyBasis& syz,
                                 const WeightVector& w) {
    const RingPtr& ring = F.front().ring();
    LeadingSets sets = leading_sets(F, syz);
    auto sch = SchreyerOrder::of(F);

    std::vector<long> shifts;
    for (auto& f : F) shifts.push_back(f.leading_monomial().weighted_degree(w));

    // route 2: re-run Buchberger under the w-refined module order; the
    // leading monomials of the result are exactly LM(in_w(Syz F))
    auto word = std::make_shared<WeightedModuleOrder>(sch, w, shifts);
    std::vector<ModuleElement> V;
    for (auto& s : syz.elements) V.push_back(s.with_order(word));
    std::vector<ModuleMonomial> lims2;
    for (auto& g : module_buchberger(V)) lims2.push_back(g.leading_monomial());
    lims2 = canonical(std::move(lims2));

    // route 1: syzygies of the homogenized tuple over K[x][t], then t = 0
    RingPtr ext = extend_ring_with_t(ring);
    std::vector<Polynomial> Ft;
    for (auto& f : F) Ft.push_back(homogenize(f, w, ext));
    SyzygyBasis syzt = syzygy_basis(Ft);
    std::vector<ModuleElement> image;
    for (auto& s : syzt.elements) {
        std::vector<ModuleTerm> terms;
        for (auto& t : s.terms()) {
            if (t.mono.mono.exponent(ring->nvars()) != 0) continue;
            const auto& e = t.mono.mono.exponents();
            terms.push_back({{Monomial(std::vector<int>(e.begin(), e.begin() + ring->nvars())),
                              t.mono.index},
                             t.coeff});
        }
        if (!terms.empty()) image.emplace_back(sch, std::move(terms));
    }
    std::vector<ModuleMonomial> lims1;
    for (auto& g : module_buchberger(image)) lims1.push_back(g.leading_monomial());
    lims1 = canonical(std::move(lims1));

    FlatnessReport rep;
    rep.weight = w;
    rep.routes_agree = lims1 == lims2;
    rep.lims = lims2;
    rep.m_module = make_monomial_quotient(F, rep.lims, sets.ls_gens);
    rep.n_module = make_monomial_quotient(F, sets.lsl_gens, rep.lims);
    rep.flat = rep.n_module.is_zero();
    return rep;
}

}  // namespace

FlatnessReport degeneration_check(std::span<const Polynomial> F, const WeightVector& w) {
    if (F.empty()) throw std::invalid_argument("empty tuple");
    std::vector<Polynomial> monic;
    for (auto& f : F) monic.push_back(f.monic());
    if (auto bad = verify_weight(monic, w))
        throw std::invalid_argument("weight vector not compatible with the tuple");
    return degeneration_impl(monic, syzygy_basis(monic), w);
}

FlatnessReport degeneration_check(std::span<const Polynomial> F) {
    if (F.empty()) throw std::invalid_argument("empty tuple");
    std::vector<Polynomial> monic;
    for (auto& f : F) monic.push_back(f.monic());
    SyzygyBasis syz = syzygy_basis(monic);

    // the set A of monomials the weight must order like the term order:
    // all monomials of F plus x^a LM(f_i) over the syzygy basis terms
    std::set<Monomial> A;
    for (auto& f : monic)
        for (auto& t : f.terms()) A.insert(t.mono);
    for (auto& s : syz.elements)
        for (auto& t : s.terms())
            A.insert(t.mono.mono * monic[t.mono.index].leading_monomial());
    std::vector<Monomial> Av(A.begin(), A.end());
    WeightVector w = compatible_weight(Av, monic.front().ring()->order);
    return degeneration_impl(monic, syz, w);
}

}  // namespace gobs
