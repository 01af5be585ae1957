#include "gobs/polynomial.hpp"

#include <algorithm>
#include <map>

namespace gobs {

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
    normalize();
}

void Polynomial::normalize() {
    const TermOrder& ord = ring_->order;
    std::map<Monomial, FieldElement> acc;
    for (auto& t : terms_) {
        if (t.mono.nvars() != ring_->nvars())
            throw std::invalid_argument("monomial length mismatch with ring");
        auto it = acc.find(t.mono);
        if (it == acc.end())
            acc.emplace(t.mono, t.coeff);
        else
            it->second = it->second + t.coeff;
    }
    terms_.clear();
    for (auto& [m, c] : acc)
        if (!c.is_zero()) terms_.push_back({m, c});
    std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
        return ord.compare(a.mono, b.mono) == std::strong_ordering::greater;
    });
}

const Monomial& Polynomial::leading_monomial() const {
    if (is_zero()) throw std::invalid_argument("LM of zero polynomial");
    return terms_.front().mono;
}

const FieldElement& Polynomial::leading_coeff() const {
    if (is_zero()) throw std::invalid_argument("LC of zero polynomial");
    return terms_.front().coeff;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(ring_, o.ring_);
    const TermOrder& ord = ring_->order;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        auto c = ord.compare(terms_[i].mono, o.terms_[j].mono);
        if (c == std::strong_ordering::greater) {
            out.push_back(terms_[i++]);
        } else if (c == std::strong_ordering::less) {
            out.push_back(o.terms_[j++]);
        } else {
            FieldElement s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero()) out.push_back({terms_[i].mono, s});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    Polynomial r(ring_);
    r.terms_ = std::move(out);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::scale(const FieldElement& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
    return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const FieldElement& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;  // multiplying by a monomial preserves the term order
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(ring_, o.ring_);
    std::vector<Term> out;
    out.reserve(terms_.size() * o.terms_.size());
    for (auto& a : terms_)
        for (auto& b : o.terms_)
            out.push_back({a.mono * b.mono, a.coeff * b.coeff});
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scale(leading_coeff().inverse());
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

Polynomial Polynomial::constant(const RingPtr& ring, const FieldElement& c) {
    if (c.is_zero()) return Polynomial(ring);
    return Polynomial(ring, {{Monomial::one(ring->nvars()), c}});
}

namespace {

int pick_divisor(const Monomial& m, std::span<const Polynomial> divisors,
                 DivisorStrategy strategy) {
    int best = -1;
    for (int i = 0; i < static_cast<int>(divisors.size()); ++i) {
        if (!divisors[i].leading_monomial().divides(m)) continue;
        switch (strategy) {
            case DivisorStrategy::LowestIndex:
                return i;
            case DivisorStrategy::HighestIndex:
                best = i;
                break;
            case DivisorStrategy::Sparsest:
                if (best < 0 || divisors[i].nterms() < divisors[best].nterms()) best = i;
                break;
        }
    }
    return best;
}

}  // namespace

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors,
                      bool tail_reduce, DivisorStrategy strategy) {
    if (divisors.empty()) throw std::invalid_argument("empty divisor tuple");
    for (auto& d : divisors) {
        if (d.is_zero()) throw std::invalid_argument("zero divisor");
        check_same_ring(f.ring(), d.ring());
    }
    DivisionResult res;
    res.quotients.assign(divisors.size(), Polynomial(f.ring()));
    res.remainder = Polynomial(f.ring());

    Polynomial p = f;
    while (!p.is_zero()) {
        const Term lt = p.terms().front();
        int i = pick_divisor(lt.mono, divisors, strategy);
        if (i >= 0) {
            Monomial q = lt.mono / divisors[i].leading_monomial();
            FieldElement c = lt.coeff / divisors[i].leading_coeff();
            res.quotients[i] = res.quotients[i] + Polynomial(f.ring(), {{q, c}});
            p = p - divisors[i].mul_term(q, c);
        } else if (tail_reduce) {
            res.remainder = res.remainder + Polynomial(f.ring(), {{lt.mono, lt.coeff}});
            p = p - Polynomial(f.ring(), {{lt.mono, lt.coeff}});
        } else {
            res.remainder = res.remainder + p;
            break;
        }
    }
    return res;
}

}  // namespace gobs
