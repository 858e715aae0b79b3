#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pmds/errors.hpp"

namespace pmds {

enum class FieldKind { Prime, BinaryExt };

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// A finite field GF(q), either GF(p) for prime p or GF(2^h) for
/// 2 <= h <= 16 with a fixed irreducible modulus polynomial.
///
/// Elements are canonical integer representatives 0..q-1; for binary
/// extensions the integer is the polynomial-basis bit packing, so the
/// element usually written "alpha" in GF(4) = GF(2)[x]/(x^2+x+1) is 2
/// and "alpha+1" is 3.
///
/// Field objects are immutable after creation and all operations are
/// pure, so they can be shared freely across threads.
class Field : public std::enable_shared_from_this<Field> {
public:
    /// GF(p) for prime p.
    static FieldPtr prime(std::uint32_t p);

    /// GF(2^h) with the default modulus for degree h (2 <= h <= 16).
    static FieldPtr binary_ext(unsigned h);

    /// GF(2^h) with an explicit irreducible modulus, given as the bit
    /// packing of the polynomial (degree-h term = bit h).
    static FieldPtr binary_ext(unsigned h, std::uint32_t modulus_bits);

    /// Generic constructor mirroring the prime/binary split; a modulus may
    /// only be supplied for binary extensions.
    static FieldPtr make(FieldKind kind, std::uint32_t p, unsigned h,
                         std::optional<std::uint32_t> modulus_bits = std::nullopt);

    /// Parses a field literal: `gf(7)`, `gf(2^3)`, or `gf(2^3;0b1011)`
    /// with explicit modulus bits, most-significant term first.
    static FieldPtr parse(std::string_view literal);

    /// Default irreducible modulus for GF(2^h), 2 <= h <= 16.
    static std::uint32_t default_modulus(unsigned h);

    FieldKind kind() const noexcept { return kind_; }
    std::uint32_t characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return h_; }
    std::uint32_t order() const noexcept { return q_; }
    /// Modulus bit packing; only meaningful for binary extensions.
    std::uint32_t modulus_bits() const noexcept { return modulus_; }

    bool same_as(const Field& other) const noexcept {
        return kind_ == other.kind_ && p_ == other.p_ && h_ == other.h_ &&
               modulus_ == other.modulus_;
    }

    // Arithmetic on canonical representatives (all arguments must be < q).
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;  // throws DivisionByZeroError on 0
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    /// All q elements in canonical order 0, 1, ..., q-1.
    std::vector<std::uint32_t> elements() const;

    /// Canonical literal (`gf(7)`, `gf(2^3;0b1011)`, ...).
    std::string literal() const;

    /// Checks that a value is a canonical representative.
    void check_value(std::uint32_t v) const;

private:
    Field(FieldKind kind, std::uint32_t p, unsigned h, std::uint32_t modulus);

    std::uint32_t raw_binary_mul(std::uint32_t a, std::uint32_t b) const;

    FieldKind kind_;
    std::uint32_t p_;
    unsigned h_;
    std::uint32_t modulus_;  // 0 for prime fields
    std::uint32_t q_;
    std::vector<std::uint32_t> inv_table_;  // index -> inverse; [0] unused
};

/// A field element paired with its field, for API-level arithmetic.
/// Elements from different fields never combine silently; any mixed-field
/// operation throws FieldMismatchError.
class Elem {
public:
    Elem(std::uint32_t value, FieldPtr field);

    std::uint32_t value() const noexcept { return value_; }
    const FieldPtr& field() const noexcept { return field_; }

    friend Elem operator+(const Elem& a, const Elem& b);
    friend Elem operator-(const Elem& a, const Elem& b);
    friend Elem operator*(const Elem& a, const Elem& b);
    friend Elem operator/(const Elem& a, const Elem& b);
    Elem operator-() const;
    Elem inverse() const;

    friend bool operator==(const Elem& a, const Elem& b);
    friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }

private:
    std::uint32_t value_;
    FieldPtr field_;
};

/// Throws FieldMismatchError unless both fields are the same.
void require_same_field(const Field& a, const Field& b);

}  // namespace pmds
