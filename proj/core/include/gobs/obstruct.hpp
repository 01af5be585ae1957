#ifndef GOBS_OBSTRUCT_HPP
#define GOBS_OBSTRUCT_HPP

#include "gobs/signatures.hpp"

namespace gobs {

// G_obs = <LSL>/<LS>, stored as minimal monomial generating sets and split
// per basis index into monomial-ideal quotients L_j/K_j.
struct ObstructionModule {
    RingPtr ring;
    std::vector<ModuleMonomial> numerator;    // minimal generators of <LSL>
    std::vector<ModuleMonomial> denominator;  // minimal generators of <LS>
    std::vector<long> shifts;                 // deg LM(f_j) per basis index, for grading

    struct Component {
        int index = 0;
        std::vector<Monomial> l_gens;  // minimal
        std::vector<Monomial> k_gens;  // minimal, contained in <l_gens>
    };
    std::vector<Component> components;

    bool is_zero() const;
    // numerator generators that survive in the quotient (not in <LS>);
    // mirrors the displayed form of the module
    std::vector<ModuleMonomial> surviving_numerator() const;
};

ObstructionModule gobs(std::span<const Polynomial> F);
ObstructionModule gobs(std::span<const Polynomial> F, const LeadingSets& sets);

// Quotient of arbitrary monomial submodules <numer>/<denom> over the same
// tuple (used for the M(F), N(F) summands as well).
ObstructionModule make_monomial_quotient(std::span<const Polynomial> F,
                                         std::vector<ModuleMonomial> numer,
                                         std::vector<ModuleMonomial> denom);

// d_k: F_k -> F_{k-1} as a dense polynomial matrix, rows indexed by the
// basis of F_{k-1}.
using PolyMatrix = std::vector<std::vector<Polynomial>>;

struct ResolutionReport {
    std::vector<int> ranks;                 // beta_0, beta_1, ...
    std::vector<PolyMatrix> differentials;  // differentials[k] is d_{k+1}
    std::vector<std::vector<long>> degrees; // graded degree of each basis element
    bool minimal = false;
};

// Schreyer resolution of each component quotient, minimized by cancelling
// constant entries; components are resolved independently and direct-summed.
ResolutionReport minimal_resolution(const ObstructionModule& M);

// Graded dimensions of the quotient up to truncation_degree, by direct
// monomial counting under the grading deg(x^a e_j) = |a| + deg LM(f_j).
std::vector<long> hilbert_series(const ObstructionModule& M, int truncation_degree);

// Validation helpers for reports.
bool differentials_compose_to_zero(const ResolutionReport& r, const RingPtr& ring);
bool has_constant_entry(const ResolutionReport& r);
// Alternating sum of graded free-module dimensions at each degree.
std::vector<long> euler_characteristic(const ResolutionReport& r, int nvars,
                                       int truncation_degree);

}  // namespace gobs

#endif
