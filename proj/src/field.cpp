#include "pmds/field.hpp"

#include <array>
#include <charconv>
#include <sstream>

namespace pmds {

namespace {

constexpr std::uint32_t kMaxOrder = 1u << 16;

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

int poly_degree(std::uint32_t p) {
    int d = -1;
    while (p) {
        ++d;
        p >>= 1;
    }
    return d;
}

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t b) {
    const int db = poly_degree(b);
    while (a && poly_degree(a) >= db) {
        a ^= b << (poly_degree(a) - db);
    }
    return a;
}

bool poly_irreducible(std::uint32_t p) {
    const int d = poly_degree(p);
    if (d < 1) return false;
    for (std::uint32_t q = 2; q < (1u << (d / 2 + 1)); ++q) {
        if (poly_degree(q) < 1) continue;
        if (poly_mod(p, q) == 0) return false;
    }
    return true;
}

}  // namespace

std::uint32_t Field::default_modulus(unsigned h) {
    // One fixed irreducible polynomial per degree: x^2+x+1, x^3+x+1,
    // x^4+x+1, x^5+x^2+1, x^6+x+1, x^7+x+1, x^8+x^4+x^3+x+1, x^9+x^4+1,
    // x^10+x^3+1, x^11+x^2+1, x^12+x^6+x^4+x+1, x^13+x^4+x^3+x+1,
    // x^14+x^10+x^6+x+1, x^15+x+1, x^16+x^12+x^3+x+1.
    static constexpr std::array<std::uint32_t, 17> table = {
        0,       0,       0x7,    0xB,    0x13,   0x25,
        0x43,    0x83,    0x11B,  0x211,  0x409,  0x805,
        0x1053,  0x201B,  0x4443, 0x8003, 0x1100B};
    if (h < 2 || h > 16) {
        throw InvalidArgumentError("no default modulus for degree " + std::to_string(h));
    }
    return table[h];
}

Field::Field(FieldKind kind, std::uint32_t p, unsigned h, std::uint32_t modulus)
    : kind_(kind), p_(p), h_(h), modulus_(modulus) {
    q_ = 1;
    for (unsigned i = 0; i < h_; ++i) q_ *= p_;
    inv_table_.assign(q_, 0);
    for (std::uint32_t a = 1; a < q_; ++a) {
        if (inv_table_[a] != 0) continue;
        // Fermat: a^(q-2) is the inverse. Fills both directions at once.
        std::uint32_t b = pow(a, q_ - 2);
        inv_table_[a] = b;
        inv_table_[b] = a;
    }
}

FieldPtr Field::prime(std::uint32_t p) {
    if (!is_prime(p)) {
        throw InvalidArgumentError("field characteristic must be prime, got " + std::to_string(p));
    }
    if (p > kMaxOrder) {
        throw InvalidArgumentError("field order capped at 2^16");
    }
    return FieldPtr(new Field(FieldKind::Prime, p, 1, 0));
}

FieldPtr Field::binary_ext(unsigned h) { return binary_ext(h, default_modulus(h)); }

FieldPtr Field::binary_ext(unsigned h, std::uint32_t modulus_bits) {
    if (h < 2 || h > 16) {
        throw InvalidArgumentError("binary extension degree must be in [2,16], got " +
                                   std::to_string(h));
    }
    if (poly_degree(modulus_bits) != static_cast<int>(h)) {
        throw InvalidArgumentError("modulus degree does not match extension degree");
    }
    if (!poly_irreducible(modulus_bits)) {
        throw InvalidArgumentError("modulus polynomial is reducible");
    }
    return FieldPtr(new Field(FieldKind::BinaryExt, 2, h, modulus_bits));
}

FieldPtr Field::make(FieldKind kind, std::uint32_t p, unsigned h,
                     std::optional<std::uint32_t> modulus_bits) {
    if (kind == FieldKind::Prime) {
        if (h != 1) throw InvalidArgumentError("prime fields have extension degree 1");
        if (modulus_bits) throw InvalidArgumentError("prime fields take no modulus");
        return prime(p);
    }
    if (p != 2) {
        throw InvalidArgumentError("extension fields are supported for characteristic 2 only");
    }
    return modulus_bits ? binary_ext(h, *modulus_bits) : binary_ext(h);
}

FieldPtr Field::parse(std::string_view literal) {
    // Accepted forms: gf(7), gf(2^3), gf(2^3;0b1011)
    auto fail = [&]() -> FieldPtr {
        throw ParseError("bad field literal: '" + std::string(literal) + "'");
    };
    std::string_view s = literal;
    if (s.size() < 5 || s.substr(0, 3) != "gf(" || s.back() != ')') return fail();
    s = s.substr(3, s.size() - 4);

    auto parse_uint = [&](std::string_view t, unsigned base = 10) -> std::uint64_t {
        std::uint64_t v = 0;
        if (t.empty()) fail();
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v, base);
        if (ec != std::errc() || ptr != t.data() + t.size()) fail();
        return v;
    };

    std::string_view base_part = s;
    std::string_view mod_part;
    if (auto semi = s.find(';'); semi != std::string_view::npos) {
        base_part = s.substr(0, semi);
        mod_part = s.substr(semi + 1);
    }

    std::uint64_t p = 0, h = 1;
    if (auto caret = base_part.find('^'); caret != std::string_view::npos) {
        p = parse_uint(base_part.substr(0, caret));
        h = parse_uint(base_part.substr(caret + 1));
    } else {
        p = parse_uint(base_part);
    }
    if (p == 0 || h == 0 || h > 16) fail();

    if (h == 1) {
        if (!mod_part.empty()) fail();
        return prime(static_cast<std::uint32_t>(p));
    }
    if (p != 2) {
        throw InvalidArgumentError("extension fields are supported for characteristic 2 only");
    }
    if (mod_part.empty()) return binary_ext(static_cast<unsigned>(h));
    if (mod_part.size() < 3 || mod_part.substr(0, 2) != "0b") fail();
    std::uint64_t mod = parse_uint(mod_part.substr(2), 2);
    return binary_ext(static_cast<unsigned>(h), static_cast<std::uint32_t>(mod));
}

void Field::check_value(std::uint32_t v) const {
    if (v >= q_) {
        throw InvalidArgumentError("value " + std::to_string(v) + " out of range for " +
                                   literal());
    }
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
    if (kind_ == FieldKind::Prime) {
        std::uint32_t s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    return a ^ b;
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const {
    if (kind_ == FieldKind::Prime) {
        return a >= b ? a - b : a + q_ - b;
    }
    return a ^ b;
}

std::uint32_t Field::neg(std::uint32_t a) const {
    if (kind_ == FieldKind::Prime) {
        return a == 0 ? 0 : q_ - a;
    }
    return a;
}

std::uint32_t Field::raw_binary_mul(std::uint32_t a, std::uint32_t b) const {
    // Carry-less multiply followed by reduction modulo the modulus polynomial.
    std::uint64_t acc = 0;
    std::uint64_t aa = a;
    while (b) {
        if (b & 1) acc ^= aa;
        aa <<= 1;
        b >>= 1;
    }
    const int dm = poly_degree(modulus_);
    while (acc >> dm) {
        int d = 63;
        while (!(acc >> d)) --d;
        acc ^= static_cast<std::uint64_t>(modulus_) << (d - dm);
    }
    return static_cast<std::uint32_t>(acc);
}

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
    if (kind_ == FieldKind::Prime) {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % q_);
    }
    return raw_binary_mul(a, b);
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1, base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::uint32_t Field::inv(std::uint32_t a) const {
    if (a == 0) throw DivisionByZeroError("inverse of zero in " + literal());
    return inv_table_[a];
}

std::uint32_t Field::div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

std::vector<std::uint32_t> Field::elements() const {
    std::vector<std::uint32_t> out(q_);
    for (std::uint32_t i = 0; i < q_; ++i) out[i] = i;
    return out;
}

std::string Field::literal() const {
    std::ostringstream os;
    if (kind_ == FieldKind::Prime) {
        os << "gf(" << p_ << ")";
        return os.str();
    }
    os << "gf(2^" << h_;
    if (modulus_ != default_modulus(h_)) {
        os << ";0b";
        for (int bit = poly_degree(modulus_); bit >= 0; --bit) {
            os << ((modulus_ >> bit) & 1);
        }
    }
    os << ")";
    return os.str();
}

void require_same_field(const Field& a, const Field& b) {
    if (!a.same_as(b)) {
        throw FieldMismatchError("elements of " + a.literal() + " and " + b.literal() +
                                 " cannot be combined");
    }
}

Elem::Elem(std::uint32_t value, FieldPtr field) : value_(value), field_(std::move(field)) {
    if (!field_) throw InvalidArgumentError("element without a field");
    field_->check_value(value_);
}

Elem operator+(const Elem& a, const Elem& b) {
    require_same_field(*a.field_, *b.field_);
    return Elem(a.field_->add(a.value_, b.value_), a.field_);
}

Elem operator-(const Elem& a, const Elem& b) {
    require_same_field(*a.field_, *b.field_);
    return Elem(a.field_->sub(a.value_, b.value_), a.field_);
}

Elem operator*(const Elem& a, const Elem& b) {
    require_same_field(*a.field_, *b.field_);
    return Elem(a.field_->mul(a.value_, b.value_), a.field_);
}

Elem operator/(const Elem& a, const Elem& b) {
    require_same_field(*a.field_, *b.field_);
    return Elem(a.field_->div(a.value_, b.value_), a.field_);
}

Elem Elem::operator-() const { return Elem(field_->neg(value_), field_); }

Elem Elem::inverse() const { return Elem(field_->inv(value_), field_); }

bool operator==(const Elem& a, const Elem& b) {
    return a.field_->same_as(*b.field_) && a.value_ == b.value_;
}

}  // namespace pmds
