#ifndef GOBS_ORDER_HPP
#define GOBS_ORDER_HPP

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "gobs/monomial.hpp"

namespace gobs {

enum class OrderKind { Lex, GrLex, GrevLex, Weighted, BlockT };

// A term order on the monomials of the ring. Weighted compares by the
// weight vector first and breaks ties lexicographically. BlockT is the
// internal block order on R[t] with t as the strictly smallest variable:
// the first n-1 exponents are compared by `inner`, ties by the t exponent.
struct TermOrder {
    OrderKind kind = OrderKind::GrevLex;
    std::vector<long> weights;                  // Weighted only
    std::shared_ptr<const TermOrder> inner;     // BlockT only

    static TermOrder lex() { return {OrderKind::Lex, {}, nullptr}; }
    static TermOrder grlex() { return {OrderKind::GrLex, {}, nullptr}; }
    static TermOrder grevlex() { return {OrderKind::GrevLex, {}, nullptr}; }
    static TermOrder weighted(std::vector<long> w);
    static TermOrder block_t(const TermOrder& base);

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

    std::string str() const;
    bool operator==(const TermOrder& o) const;
};

inline std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b,
                                              const TermOrder& order) {
    return order.compare(a, b);
}

}  // namespace gobs

#endif
