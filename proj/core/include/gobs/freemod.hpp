#ifndef GOBS_FREEMOD_HPP
#define GOBS_FREEMOD_HPP

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "gobs/polynomial.hpp"

namespace gobs {

// x^alpha e_i. Indices are 0-based internally; serialization prints e_{i+1}.
struct ModuleMonomial {
    Monomial mono;
    int index = 0;

    bool operator==(const ModuleMonomial& o) const {
        return index == o.index && mono == o.mono;
    }
    bool divides(const ModuleMonomial& o) const {
        return index == o.index && mono.divides(o.mono);
    }
};

// A monomial order on the free module R^rank.
class ModuleOrder {
public:
    virtual ~ModuleOrder() = default;
    virtual std::strong_ordering compare(const ModuleMonomial& a,
                                         const ModuleMonomial& b) const = 0;
    virtual int rank() const = 0;
    const RingPtr& ring() const { return ring_; }

protected:
    explicit ModuleOrder(RingPtr ring) : ring_(std::move(ring)) {}
    RingPtr ring_;
};

using ModuleOrderPtr = std::shared_ptr<const ModuleOrder>;

// The Schreyer order induced by a tuple F: x^a e_i < x^b e_j iff
// x^a LM(f_i) < x^b LM(f_j), ties broken by smaller index first.
class SchreyerOrder final : public ModuleOrder {
public:
    SchreyerOrder(RingPtr ring, std::vector<Monomial> leads);
    static std::shared_ptr<const SchreyerOrder> of(std::span<const Polynomial> F);

    std::strong_ordering compare(const ModuleMonomial& a,
                                 const ModuleMonomial& b) const override;
    int rank() const override { return static_cast<int>(leads_.size()); }
    const std::vector<Monomial>& leads() const { return leads_; }

private:
    std::vector<Monomial> leads_;
};

// Schreyer order one level up: induced by a Groebner basis W of a submodule,
// comparing x^a E_i via x^a LM(w_i) under W's own module order.
class SchreyerLiftOrder final : public ModuleOrder {
public:
    SchreyerLiftOrder(ModuleOrderPtr base, std::vector<ModuleMonomial> leads);

    std::strong_ordering compare(const ModuleMonomial& a,
                                 const ModuleMonomial& b) const override;
    int rank() const override { return static_cast<int>(leads_.size()); }

private:
    ModuleOrderPtr base_;
    std::vector<ModuleMonomial> leads_;
};

// Position over term: smaller basis index wins, ties by the ring order.
// Private workhorse for resolution internals.
class PositionOverTermOrder final : public ModuleOrder {
public:
    PositionOverTermOrder(RingPtr ring, int rank) : ModuleOrder(std::move(ring)), rank_(rank) {}

    std::strong_ordering compare(const ModuleMonomial& a,
                                 const ModuleMonomial& b) const override;
    int rank() const override { return rank_; }

private:
    int rank_;
};

// Compares by a weight degree deg_w(x^a e_i) = w.a + shift_i first, ties by
// an inner module order. Used for top-term (initial w.r.t. a weight) module
// computations.
class WeightedModuleOrder final : public ModuleOrder {
public:
    WeightedModuleOrder(ModuleOrderPtr inner, std::vector<long> weights,
                        std::vector<long> shifts);

    std::strong_ordering compare(const ModuleMonomial& a,
                                 const ModuleMonomial& b) const override;
    int rank() const override { return inner_->rank(); }

private:
    ModuleOrderPtr inner_;
    std::vector<long> weights_;
    std::vector<long> shifts_;
};

inline std::strong_ordering schreyer_compare(const ModuleMonomial& a, const ModuleMonomial& b,
                                             const SchreyerOrder& ord) {
    return ord.compare(a, b);
}

struct ModuleTerm {
    ModuleMonomial mono;
    FieldElement coeff;
};

// Element of R^rank; terms sorted descending under the attached module order.
class ModuleElement {
public:
    ModuleElement() = default;
    explicit ModuleElement(ModuleOrderPtr order) : order_(std::move(order)) {}
    ModuleElement(ModuleOrderPtr order, std::vector<ModuleTerm> terms);

    const ModuleOrderPtr& order() const { return order_; }
    const std::vector<ModuleTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    const ModuleMonomial& leading_monomial() const;
    const FieldElement& leading_coeff() const;

    ModuleElement operator+(const ModuleElement& o) const;
    ModuleElement operator-(const ModuleElement& o) const;
    ModuleElement operator-() const;
    ModuleElement scale(const FieldElement& c) const;
    ModuleElement mul_term(const Monomial& m, const FieldElement& c) const;
    // multiply by a polynomial
    ModuleElement mul_poly(const Polynomial& h) const;
    ModuleElement monic() const;
    // re-sort the same terms under a different order on the same free module
    ModuleElement with_order(ModuleOrderPtr order) const;

    bool operator==(const ModuleElement& o) const;

private:
    ModuleOrderPtr order_;
    std::vector<ModuleTerm> terms_;

    void normalize();
};

// The image of u under e_i -> f_i.
Polynomial image_of(const ModuleElement& u, std::span<const Polynomial> F);

struct ModuleDivisionResult {
    std::vector<Polynomial> quotients;
    ModuleElement remainder;
};

ModuleDivisionResult module_divide(const ModuleElement& u, std::span<const ModuleElement> V,
                                   bool tail_reduce = true);

// Buchberger for submodules of R^rank under the order carried by the inputs.
// S-pairs are formed only between elements with equal leading basis index.
std::vector<ModuleElement> module_buchberger(std::span<const ModuleElement> V);

// For a Groebner basis W, the lifted Schreyer syzygies: one generator per
// same-index leading pair, obtained from the S-pair reduction. The result is
// a Groebner basis of Syz(W) under the Schreyer order induced by W.
std::vector<ModuleElement> schreyer_syzygies(std::span<const ModuleElement> W);

// Monomial submodule helpers.
bool monomial_module_contains(std::span<const ModuleMonomial> gens, const ModuleMonomial& m);
bool monomial_module_subset(std::span<const ModuleMonomial> a, std::span<const ModuleMonomial> b);
std::vector<ModuleMonomial> minimalize_monomials(std::vector<ModuleMonomial> gens);

}  // namespace gobs

#endif
