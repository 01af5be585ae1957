#ifndef GOBS_DEGEN_HPP
#define GOBS_DEGEN_HPP

#include "gobs/obstruct.hpp"

namespace gobs {

using WeightVector = std::vector<long>;

// An integral weight w with w_i >= 1 that realizes the given term order on
// the finite set A: for a, b in A, a > b iff w.a > w.b. Computed by
// Fourier-Motzkin elimination over the rationals.
WeightVector compatible_weight(std::span<const Monomial> A, const TermOrder& order);

// Empty if w is compatible with F; otherwise the first (poly index, monomial)
// whose w-degree is not strictly below the leading monomial's.
std::optional<std::pair<int, Monomial>> verify_weight(std::span<const Polynomial> F,
                                                      const WeightVector& w);

// K[x_1..x_n][t] with the block order making t strictly smallest.
RingPtr extend_ring_with_t(const RingPtr& ring);

// f^(t): every term x^a is multiplied by t^(deg_w f - w.a), so the result is
// w-homogeneous of degree deg_w f and specializes to f at t = 1.
Polynomial homogenize(const Polynomial& f, const WeightVector& w, const RingPtr& ext_ring);

// Substitute t = 0 and land back in the base ring.
Polynomial dehomogenize_at_zero(const Polynomial& f, const RingPtr& base_ring);

// in_w(f): the terms of maximal w-degree.
Polynomial top_terms(const Polynomial& f, const WeightVector& w);
// Module analogue with deg_w(x^a e_i) = w.a + shifts[i].
ModuleElement top_terms(const ModuleElement& u, const WeightVector& w,
                        std::span<const long> shifts);

struct FlatnessReport {
    WeightVector weight;
    std::vector<ModuleMonomial> lims;  // minimal generators of <LImS>
    ObstructionModule m_module;        // M(F) = <LImS>/<LS>
    ObstructionModule n_module;        // N(F) = <LSL>/<LImS>
    bool routes_agree = false;
    bool flat = false;  // N(F) = 0, i.e. <LImS> = <LSL>
};

// Computes <LImS> = <LM(in_w(Syz F))> along two independent routes and the
// resulting flatness certificate:
//   1. homogenize, take syzygies over K[x][t], substitute t = 0, re-basis;
//   2. Groebner basis of Syz(F) under the w-refined module order, top terms.
FlatnessReport degeneration_check(std::span<const Polynomial> F, const WeightVector& w);
FlatnessReport degeneration_check(std::span<const Polynomial> F);

}  // namespace gobs

#endif
