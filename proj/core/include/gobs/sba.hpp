#ifndef GOBS_SBA_HPP
#define GOBS_SBA_HPP

#include "gobs/signatures.hpp"

namespace gobs {

struct AppendedGenerator {
    Polynomial generator;   // monic
    ModuleMonomial sig;     // its signature w.r.t. the step's tuple
    SPair pair;
};

// One pass over the sorted standard guessed signatures of a tuple F_i.
struct TraceStep {
    size_t tuple_size = 0;  // |F_i|; F_i is the prefix of that length of the final tuple
    std::vector<ModuleMonomial> sorted_signatures;  // deduplicated, ascending
    std::vector<bool> reduced_to_zero;              // flag per processed signature
    std::optional<AppendedGenerator> appended;      // absent on the terminating pass
};

struct GroebnerBasisResult {
    std::vector<Polynomial> final_tuple;
    std::vector<Polynomial> reduced;
    std::vector<TraceStep> steps;
};

// The signature-based driver: process standard guessed signatures in
// ascending Schreyer order, restart on every nonzero remainder, stop when
// every standard pair reduces to zero.
GroebnerBasisResult run_sba(std::span<const Polynomial> F,
                            DivisorStrategy strategy = DivisorStrategy::LowestIndex);

// Classical Buchberger with the product criterion; the oracle the
// signature-based run is validated against.
std::vector<Polynomial> buchberger(std::span<const Polynomial> F);

// The unique reduced Groebner basis: monic, minimal, fully inter-reduced,
// sorted by leading monomial ascending. Throws if G is not a GB.
std::vector<Polynomial> reduced_gb(std::span<const Polynomial> G);

}  // namespace gobs

#endif
