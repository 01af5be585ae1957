#include "gobs/field.hpp"

namespace gobs {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (p >= (1ull << 31) || !is_prime(p))
        throw std::invalid_argument("GF(p) modulus must be prime and < 2^31");
    return {FieldKind::Prime, p};
}

namespace {

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

}  // namespace

FieldElement FieldElement::zero(const Field& f) {
    FieldElement e;
    e.field_ = f;
    return e;
}

FieldElement FieldElement::one(const Field& f) { return from_int(1, f); }

FieldElement FieldElement::from_int(long v, const Field& f) {
    FieldElement e;
    e.field_ = f;
    if (f.kind == FieldKind::Rationals) {
        e.rat_ = v;
    } else {
        long m = static_cast<long>(f.modulus);
        long r = v % m;
        if (r < 0) r += m;
        e.res_ = static_cast<std::uint64_t>(r);
    }
    return e;
}

FieldElement FieldElement::from_rational(mpq_class q, const Field& f) {
    FieldElement e;
    e.field_ = f;
    if (f.kind == FieldKind::Rationals) {
        q.canonicalize();
        e.rat_ = std::move(q);
    } else {
        q.canonicalize();
        mpz_class num = q.get_num() % static_cast<long>(f.modulus);
        mpz_class den = q.get_den() % static_cast<long>(f.modulus);
        if (den == 0)
            throw std::invalid_argument("denominator is zero mod p");
        std::uint64_t n = mpz_class(num + static_cast<long>(f.modulus)).get_ui() % f.modulus;
        std::uint64_t d = mpz_class(den + static_cast<long>(f.modulus)).get_ui() % f.modulus;
        e.res_ = n * mod_pow(d, f.modulus - 2, f.modulus) % f.modulus;
    }
    return e;
}

void FieldElement::check_same_field(const FieldElement& o) const {
    if (!(field_ == o.field_))
        throw std::invalid_argument("mixed coefficient fields");
}

bool FieldElement::is_zero() const {
    return field_.kind == FieldKind::Rationals ? rat_ == 0 : res_ == 0;
}

bool FieldElement::is_one() const {
    return field_.kind == FieldKind::Rationals ? rat_ == 1 : res_ == 1;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_field(o);
    FieldElement r;
    r.field_ = field_;
    if (field_.kind == FieldKind::Rationals)
        r.rat_ = rat_ + o.rat_;
    else
        r.res_ = (res_ + o.res_) % field_.modulus;
    return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same_field(o);
    FieldElement r;
    r.field_ = field_;
    if (field_.kind == FieldKind::Rationals)
        r.rat_ = rat_ - o.rat_;
    else
        r.res_ = (res_ + field_.modulus - o.res_) % field_.modulus;
    return r;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_field(o);
    FieldElement r;
    r.field_ = field_;
    if (field_.kind == FieldKind::Rationals)
        r.rat_ = rat_ * o.rat_;
    else
        r.res_ = res_ * o.res_ % field_.modulus;
    return r;
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    return *this * o.inverse();
}

FieldElement FieldElement::operator-() const {
    FieldElement r;
    r.field_ = field_;
    if (field_.kind == FieldKind::Rationals)
        r.rat_ = -rat_;
    else
        r.res_ = res_ == 0 ? 0 : field_.modulus - res_;
    return r;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw std::invalid_argument("inverse of zero");
    FieldElement r;
    r.field_ = field_;
    if (field_.kind == FieldKind::Rationals)
        r.rat_ = 1 / rat_;
    else
        r.res_ = mod_pow(res_, field_.modulus - 2, field_.modulus);
    return r;
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (!(field_ == o.field_)) return false;
    return field_.kind == FieldKind::Rationals ? rat_ == o.rat_ : res_ == o.res_;
}

std::string FieldElement::str() const {
    if (field_.kind == FieldKind::Rationals) return rat_.get_str();
    return std::to_string(res_);
}

}  // namespace gobs
