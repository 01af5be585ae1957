#ifndef GOBS_RING_HPP
#define GOBS_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "gobs/field.hpp"
#include "gobs/order.hpp"

namespace gobs {

// Ambient ring descriptor: K[x_1..x_n] with a fixed term order.
struct Ring {
    Field field;
    std::vector<std::string> vars;
    TermOrder order;

    int nvars() const { return static_cast<int>(vars.size()); }

    bool operator==(const Ring& o) const {
        return field == o.field && vars == o.vars && order == o.order;
    }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(Field f, std::vector<std::string> vars, TermOrder order) {
    return std::make_shared<Ring>(Ring{std::move(f), std::move(vars), std::move(order)});
}

inline void check_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a != b && !(*a == *b)) throw std::invalid_argument("ring mismatch");
}

}  // namespace gobs

#endif
