#ifndef GOBS_POLYNOMIAL_HPP
#define GOBS_POLYNOMIAL_HPP

#include <span>
#include <vector>

#include "gobs/monomial.hpp"
#include "gobs/ring.hpp"

namespace gobs {

struct Term {
    Monomial mono;
    FieldElement coeff;
};

// Sparse polynomial; terms kept sorted descending under the ring's term
// order and free of zero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    Polynomial(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t nterms() const { return terms_.size(); }

    const Monomial& leading_monomial() const;
    const FieldElement& leading_coeff() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scale(const FieldElement& c) const;
    Polynomial mul_term(const Monomial& m, const FieldElement& c) const;
    Polynomial monic() const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    static Polynomial constant(const RingPtr& ring, const FieldElement& c);

private:
    RingPtr ring_;
    std::vector<Term> terms_;

    void normalize();
};

enum class DivisorStrategy { LowestIndex, HighestIndex, Sparsest };

struct DivisionResult {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

// Multivariate division of f by the tuple F. With tail_reduce the remainder
// is a full normal form: no monomial of r lies in <LM(F)>. Without it the
// division stops as soon as the leading term is irreducible. Divisor
// selection among applicable LMs follows `strategy` (default lowest index).
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors,
                      bool tail_reduce = true,
                      DivisorStrategy strategy = DivisorStrategy::LowestIndex);

}  // namespace gobs

#endif
