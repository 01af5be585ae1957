#ifndef GOBS_MONOMIAL_HPP
#define GOBS_MONOMIAL_HPP

#include <compare>
#include <span>
#include <stdexcept>
#include <vector>

namespace gobs {

// x^alpha as an exponent vector of fixed length (the ring's variable count).
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exps);
    static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

    int nvars() const { return static_cast<int>(exps_.size()); }
    int exponent(int i) const { return exps_[i]; }
    const std::vector<int>& exponents() const { return exps_; }
    long degree() const;
    long weighted_degree(std::span<const long> w) const;

    bool is_one() const;
    bool divides(const Monomial& o) const;
    Monomial operator*(const Monomial& o) const;
    // quotient this / o; requires o.divides(*this)
    Monomial operator/(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }
    // plain lexicographic comparison of exponent vectors, independent of any
    // term order; used for canonical container keys only
    std::strong_ordering operator<=>(const Monomial& o) const { return exps_ <=> o.exps_; }

private:
    std::vector<int> exps_;
};

Monomial lcm(const Monomial& a, const Monomial& b);

}  // namespace gobs

#endif
