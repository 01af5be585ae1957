#ifndef GOBS_SIGNATURES_HPP
#define GOBS_SIGNATURES_HPP

#include <optional>

#include "gobs/syzygy.hpp"

namespace gobs {

// Pair (x^gamma e_k, x^delta e_l) with k < l and x^gamma LM(f_k) =
// x^delta LM(f_l); `right` is the guessed signature.
struct SPair {
    ModuleMonomial left;
    ModuleMonomial right;
    bool standard = false;
};

// All C(m,2) standard S-pairs, ascending by guessed signature under the
// Schreyer order of F; ties by (k, l).
std::vector<SPair> standard_spairs(std::span<const Polynomial> F);

// Deduplicate by guessed-signature monomial, keeping the pair with the
// lexicographically smallest (k, l).
std::vector<SPair> dedupe_by_signature(std::vector<SPair> pairs);

Polynomial spolynomial(const SPair& p, std::span<const Polynomial> F);

// The signature of f, computed by reducing the preimage u against a
// Groebner basis of Syz(F) until its leading monomial leaves <LM(Syz F)>.
ModuleMonomial signature(const Polynomial& f, const ModuleElement& u, const SyzygyBasis& syz);

struct GroebnerCheck {
    bool is_gb = false;
    std::optional<ModuleMonomial> witness;  // a minimal LSL generator outside <LS>
};

GroebnerCheck is_groebner(std::span<const Polynomial> F);
GroebnerCheck is_groebner(std::span<const Polynomial> F, const LeadingSets& sets);

struct Obstruction {
    ModuleMonomial sig;
    SPair pair;
    Polynomial remainder;
};

// Walk the sorted standard guessed signatures; the first nonzero S-polynomial
// remainder realizes the minimum of LSL \ LS. Returns nothing iff F is a
// Groebner basis.
std::optional<Obstruction> minimum_obstruction(
    std::span<const Polynomial> F, DivisorStrategy strategy = DivisorStrategy::LowestIndex);

}  // namespace gobs

#endif
