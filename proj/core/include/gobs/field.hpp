#ifndef GOBS_FIELD_HPP
#define GOBS_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace gobs {

// Raised when an internal invariant is violated (a bug, never a valid state).
// The CLI maps this to exit code 2.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

enum class FieldKind { Rationals, Prime };

struct Field {
    FieldKind kind = FieldKind::Rationals;
    std::uint64_t modulus = 0;  // set iff kind == Prime

    static Field rationals() { return {FieldKind::Rationals, 0}; }
    static Field prime(std::uint64_t p);

    bool operator==(const Field&) const = default;
};

bool is_prime(std::uint64_t p);

// One exact field coefficient. Rationals are kept in lowest terms by
// mpq_class; prime-field residues are kept reduced in [0, p).
class FieldElement {
public:
    FieldElement() : field_(Field::rationals()) {}

    static FieldElement zero(const Field& f);
    static FieldElement one(const Field& f);
    static FieldElement from_int(long v, const Field& f);
    static FieldElement from_rational(mpq_class q, const Field& f);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    const mpq_class& rational() const { return rat_; }
    std::uint64_t residue() const { return res_; }

    std::string str() const;

private:
    Field field_;
    mpq_class rat_;
    std::uint64_t res_ = 0;

    void check_same_field(const FieldElement& o) const;
};

}  // namespace gobs

#endif
