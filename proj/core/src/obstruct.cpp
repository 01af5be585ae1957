#include "gobs/obstruct.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <map>

namespace gobs {

bool ObstructionModule::is_zero() const {
    for (auto& g : numerator)
        if (!monomial_module_contains(denominator, g)) return false;
    return true;
}

std::vector<ModuleMonomial> ObstructionModule::surviving_numerator() const {
    std::vector<ModuleMonomial> out;
    for (auto& g : numerator)
        if (!monomial_module_contains(denominator, g)) out.push_back(g);
    return out;
}

ObstructionModule make_monomial_quotient(std::span<const Polynomial> F,
                                         std::vector<ModuleMonomial> numer,
                                         std::vector<ModuleMonomial> denom) {
    ObstructionModule M;
    M.ring = F.front().ring();
    M.numerator = minimalize_monomials(std::move(numer));
    M.denominator = minimalize_monomials(std::move(denom));
    for (auto& f : F) M.shifts.push_back(f.leading_monomial().degree());

    if (!monomial_module_subset(M.denominator, M.numerator))
        throw InternalError("monomial quotient: denominator not contained in numerator");

    std::map<int, ObstructionModule::Component> comps;
    for (auto& g : M.numerator) comps[g.index].l_gens.push_back(g.mono);
    for (auto& g : M.denominator) comps[g.index].k_gens.push_back(g.mono);
    for (auto& [idx, c] : comps) {
        c.index = idx;
        M.components.push_back(std::move(c));
    }
    return M;
}

ObstructionModule gobs(std::span<const Polynomial> F, const LeadingSets& sets) {
    return make_monomial_quotient(F, sets.lsl_gens, sets.ls_gens);
}

ObstructionModule gobs(std::span<const Polynomial> F) {
    return gobs(F, leading_sets(F));
}

namespace {

long element_degree(const ModuleElement& u, const std::vector<long>& target_degrees) {
    long d = u.terms().front().mono.mono.degree() + target_degrees[u.terms().front().mono.index];
    for (auto& t : u.terms())
        if (t.mono.mono.degree() + target_degrees[t.mono.index] != d)
            throw InternalError("resolution: non-homogeneous element");
    return d;
}

// Sort a Groebner basis for the iterated Schreyer construction: group by
// leading index, descending lex on the monomial part within a group.
void sort_for_schreyer(std::vector<ModuleElement>& W) {
    std::sort(W.begin(), W.end(), [](const ModuleElement& a, const ModuleElement& b) {
        const ModuleMonomial& la = a.leading_monomial();
        const ModuleMonomial& lb = b.leading_monomial();
        if (la.index != lb.index) return la.index < lb.index;
        return lb.mono < la.mono;  // descending lex
    });
}

struct ComponentResolution {
    std::vector<std::vector<long>> degrees;  // per homological level
    std::vector<PolyMatrix> differentials;
};

PolyMatrix matrix_from_elements(const std::vector<ModuleElement>& W, int rows,
                                const RingPtr& ring) {
    PolyMatrix A(rows, std::vector<Polynomial>(W.size(), Polynomial(ring)));
    for (size_t j = 0; j < W.size(); ++j)
        for (auto& t : W[j].terms())
            A[t.mono.index][j] =
                A[t.mono.index][j] + Polynomial(ring, {{t.mono.mono, t.coeff}});
    return A;
}

ComponentResolution schreyer_resolution(const ObstructionModule::Component& comp,
                                        const RingPtr& ring, long shift) {
    ComponentResolution res;
    const auto& gens = comp.l_gens;
    int p = static_cast<int>(gens.size());
    res.degrees.push_back({});
    for (auto& g : gens) res.degrees.back().push_back(g.degree() + shift);
    if (p == 0) return res;

    const Field& K = ring->field;
    auto pot = std::make_shared<PositionOverTermOrder>(ring, p);

    // presentation of the quotient: syzygies of the generators plus one
    // preimage column per denominator generator
    std::vector<ModuleElement> rels;
    for (int i = 0; i < p; ++i) {
        for (int j = i + 1; j < p; ++j) {
            Monomial L = lcm(gens[i], gens[j]);
            rels.emplace_back(pot, std::vector<ModuleTerm>{
                                       {{L / gens[i], i}, FieldElement::one(K)},
                                       {{L / gens[j], j}, -FieldElement::one(K)}});
        }
    }
    for (auto& k : comp.k_gens) {
        for (int i = 0; i < p; ++i) {
            if (gens[i].divides(k)) {
                rels.emplace_back(pot, std::vector<ModuleTerm>{
                                           {{k / gens[i], i}, FieldElement::one(K)}});
                break;
            }
        }
    }

    std::vector<ModuleElement> W = module_buchberger(rels);
    int guard = ring->nvars() + p + 16;
    while (!W.empty()) {
        sort_for_schreyer(W);
        int rows = static_cast<int>(res.degrees.back().size());
        res.differentials.push_back(matrix_from_elements(W, rows, ring));
        res.degrees.push_back({});
        for (auto& w : W)
            res.degrees.back().push_back(
                element_degree(w, res.degrees[res.degrees.size() - 2]));
        W = schreyer_syzygies(W);
        if (--guard < 0) throw InternalError("resolution: Schreyer iteration did not terminate");
    }
    return res;
}

bool is_nonzero_constant(const Polynomial& f) {
    return f.nterms() == 1 && f.terms().front().mono.is_one();
}

void minimize_resolution(ComponentResolution& res, const RingPtr& ring) {
    auto& d = res.differentials;
    for (;;) {
        int k = -1, r = -1, c = -1;
        for (int kk = 0; kk < static_cast<int>(d.size()) && k < 0; ++kk)
            for (int i = 0; i < static_cast<int>(d[kk].size()) && k < 0; ++i)
                for (int j = 0; j < static_cast<int>(d[kk][i].size()); ++j)
                    if (is_nonzero_constant(d[kk][i][j])) {
                        k = kk, r = i, c = j;
                        break;
                    }
        if (k < 0) break;

        FieldElement u = d[k][r][c].leading_coeff();
        PolyMatrix& A = d[k];
        int nrows = static_cast<int>(A.size());
        int ncols = static_cast<int>(A[0].size());
        for (int i = 0; i < nrows; ++i) {
            if (i == r) continue;
            if (A[i][c].is_zero()) continue;
            Polynomial factor = A[i][c].scale(u.inverse());
            for (int j = 0; j < ncols; ++j) {
                if (j == c || A[r][j].is_zero()) continue;
                A[i][j] = A[i][j] - factor * A[r][j];
            }
        }
        for (int i = 0; i < nrows; ++i) A[i].erase(A[i].begin() + c);
        A.erase(A.begin() + r);
        res.degrees[k].erase(res.degrees[k].begin() + r);
        res.degrees[k + 1].erase(res.degrees[k + 1].begin() + c);
        if (k + 1 < static_cast<int>(d.size())) d[k + 1].erase(d[k + 1].begin() + c);
        if (k > 0)
            for (auto& row : d[k - 1]) row.erase(row.begin() + r);

        // drop levels that became empty at the tail
        while (!res.degrees.empty() && res.degrees.back().empty()) {
            res.degrees.pop_back();
            if (!d.empty()) d.pop_back();
        }
        (void)ring;
    }
}

int env_thread_cap() {
    if (const char* s = std::getenv("GOBS_THREADS")) {
        int v = std::atoi(s);
        if (v >= 1) return v;
    }
    return 1;
}

}  // namespace

ResolutionReport minimal_resolution(const ObstructionModule& M) {
    const RingPtr& ring = M.ring;
    std::vector<ComponentResolution> parts(M.components.size());

    auto work = [&](size_t i) {
        parts[i] = schreyer_resolution(M.components[i], ring, M.shifts[M.components[i].index]);
        minimize_resolution(parts[i], ring);
    };
    int cap = env_thread_cap();
    if (cap > 1 && M.components.size() > 1) {
        std::vector<std::future<void>> futs;
        for (size_t i = 0; i < M.components.size(); ++i)
            futs.push_back(std::async(std::launch::async, work, i));
        for (auto& f : futs) f.get();
    } else {
        for (size_t i = 0; i < M.components.size(); ++i) work(i);
    }

    // direct sum, components in index order
    ResolutionReport out;
    out.minimal = true;
    size_t levels = 0;
    for (auto& p : parts) levels = std::max(levels, p.degrees.size());
    for (size_t k = 0; k < levels; ++k) {
        std::vector<long> degs;
        for (auto& p : parts)
            if (k < p.degrees.size())
                degs.insert(degs.end(), p.degrees[k].begin(), p.degrees[k].end());
        out.degrees.push_back(std::move(degs));
        out.ranks.push_back(static_cast<int>(out.degrees.back().size()));
    }
    while (!out.ranks.empty() && out.ranks.back() == 0) {
        out.ranks.pop_back();
        out.degrees.pop_back();
    }
    for (size_t k = 0; k + 1 < out.ranks.size(); ++k) {
        PolyMatrix block(out.ranks[k], std::vector<Polynomial>(out.ranks[k + 1], Polynomial(ring)));
        int roff = 0, coff = 0;
        for (auto& p : parts) {
            int pr = k < p.degrees.size() ? static_cast<int>(p.degrees[k].size()) : 0;
            int pc = k + 1 < p.degrees.size() ? static_cast<int>(p.degrees[k + 1].size()) : 0;
            if (pr > 0 && pc > 0 && k < p.differentials.size()) {
                for (int i = 0; i < pr; ++i)
                    for (int j = 0; j < pc; ++j)
                        block[roff + i][coff + j] = p.differentials[k][i][j];
            }
            roff += pr;
            coff += pc;
        }
        out.differentials.push_back(std::move(block));
    }
    return out;
}

std::vector<long> hilbert_series(const ObstructionModule& M, int truncation_degree) {
    std::vector<long> h(truncation_degree + 1, 0);
    int n = M.ring->nvars();

    // enumerate all exponent vectors of total degree exactly d
    auto count_live = [&](const ObstructionModule::Component& comp, int d) {
        long count = 0;
        std::vector<int> e(n, 0);
        auto rec = [&](auto&& self, int pos, int remaining) -> void {
            if (pos == n - 1) {
                e[pos] = remaining;
                Monomial m(e);
                bool in_l = false, in_k = false;
                for (auto& g : comp.l_gens)
                    if (g.divides(m)) {
                        in_l = true;
                        break;
                    }
                if (in_l)
                    for (auto& g : comp.k_gens)
                        if (g.divides(m)) {
                            in_k = true;
                            break;
                        }
                if (in_l && !in_k) ++count;
                return;
            }
            for (int v = 0; v <= remaining; ++v) {
                e[pos] = v;
                self(self, pos + 1, remaining - v);
            }
        };
        rec(rec, 0, d);
        return count;
    };

    for (auto& comp : M.components) {
        long shift = M.shifts[comp.index];
        for (int d = 0; d <= truncation_degree; ++d) {
            int dd = d - static_cast<int>(shift);
            if (dd < 0) continue;
            h[d] += count_live(comp, dd);
        }
    }
    return h;
}

bool differentials_compose_to_zero(const ResolutionReport& r, const RingPtr& ring) {
    for (size_t k = 0; k + 1 < r.differentials.size(); ++k) {
        const PolyMatrix& A = r.differentials[k];
        const PolyMatrix& B = r.differentials[k + 1];
        for (size_t i = 0; i < A.size(); ++i) {
            for (size_t j = 0; B.size() && j < B[0].size(); ++j) {
                Polynomial s(ring);
                for (size_t t = 0; t < B.size(); ++t) s = s + A[i][t] * B[t][j];
                if (!s.is_zero()) return false;
            }
        }
    }
    return true;
}

bool has_constant_entry(const ResolutionReport& r) {
    for (auto& d : r.differentials)
        for (auto& row : d)
            for (auto& e : row)
                if (is_nonzero_constant(e)) return true;
    return false;
}

namespace {

long monomial_count(long degree, int nvars) {
    if (degree < 0) return 0;
    // C(degree + nvars - 1, nvars - 1)
    long r = 1;
    for (int i = 1; i < nvars; ++i) r = r * (degree + i) / i;
    return r;
}

}  // namespace

std::vector<long> euler_characteristic(const ResolutionReport& r, int nvars,
                                       int truncation_degree) {
    std::vector<long> chi(truncation_degree + 1, 0);
    for (size_t k = 0; k < r.degrees.size(); ++k) {
        long sign = (k % 2 == 0) ? 1 : -1;
        for (long deg : r.degrees[k])
            for (int d = 0; d <= truncation_degree; ++d)
                chi[d] += sign * monomial_count(d - deg, nvars);
    }
    return chi;
}

}  // namespace gobs
