#ifndef GOBS_SYZYGY_HPP
#define GOBS_SYZYGY_HPP

#include "gobs/freemod.hpp"

namespace gobs {

// A Groebner basis of Syz(F) under the Schreyer order of F; elements monic.
struct SyzygyBasis {
    std::vector<Polynomial> F;
    std::shared_ptr<const SchreyerOrder> order;
    std::vector<ModuleElement> elements;
};

struct LeadingSets {
    std::vector<ModuleMonomial> ls_gens;   // minimal generators of <LM(Syz F)>
    std::vector<ModuleMonomial> lsl_gens;  // minimal generators of <LM(Syz LM(F))>
};

// The Schreyer generators m_i^(i,j) e_i - m_j^(i,j) e_j (i < j); a Groebner
// basis of Syz(LM F) whose leading monomials are the m_j^(i,j) e_j.
std::vector<ModuleElement> lm_syzygy_generators(std::span<const Polynomial> F);

// Extended Buchberger with cofactor tracking, Schreyer lifting of the
// resulting basis, and a module Buchberger pass under the Schreyer order
// of F.
SyzygyBasis syzygy_basis(std::span<const Polynomial> F);

LeadingSets leading_sets(std::span<const Polynomial> F);
LeadingSets leading_sets(std::span<const Polynomial> F, const SyzygyBasis& syz);

}  // namespace gobs

#endif
