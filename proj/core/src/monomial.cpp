#include "gobs/monomial.hpp"

namespace gobs {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_)
        if (e < 0) throw std::invalid_argument("negative exponent");
}

long Monomial::degree() const {
    long d = 0;
    for (int e : exps_) d += e;
    return d;
}

long Monomial::weighted_degree(std::span<const long> w) const {
    if (w.size() != exps_.size())
        throw std::invalid_argument("weight vector length mismatch");
    long d = 0;
    for (size_t i = 0; i < exps_.size(); ++i) d += w[i] * exps_[i];
    return d;
}

bool Monomial::is_one() const {
    for (int e : exps_)
        if (e != 0) return false;
    return true;
}

bool Monomial::divides(const Monomial& o) const {
    if (nvars() != o.nvars()) throw std::invalid_argument("monomial length mismatch");
    for (int i = 0; i < nvars(); ++i)
        if (exps_[i] > o.exps_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (nvars() != o.nvars()) throw std::invalid_argument("monomial length mismatch");
    std::vector<int> e(exps_);
    for (int i = 0; i < nvars(); ++i) e[i] += o.exps_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& o) const {
    if (!o.divides(*this)) throw std::invalid_argument("monomial quotient undefined");
    std::vector<int> e(exps_);
    for (int i = 0; i < nvars(); ++i) e[i] -= o.exps_[i];
    return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("monomial length mismatch");
    std::vector<int> e(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) e[i] = std::max(a.exponent(i), b.exponent(i));
    return Monomial(std::move(e));
}

}  // namespace gobs
