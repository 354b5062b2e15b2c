#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "mfx/errors.hpp"

namespace mfx {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

enum class FieldKind { Q, Fp };

struct Field {
    FieldKind kind = FieldKind::Q;
    std::uint32_t p = 0;  // prime modulus, Fp only

    bool operator==(const Field&) const = default;
};

Field field_q();
Field field_fp(std::uint32_t p);

// An element of the coefficient field: a reduced rational over Q, or a
// representative in [0,p) over Fp. The field is carried per element so
// mixed-field arithmetic can be rejected.
class Scalar {
public:
    Scalar() = default;  // zero of Q

    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar of_int(const Field& f, long long n);
    static Scalar of_rational(const Field& f, const Rational& q);
    // Accepts "a" or "a/b" with optional sign.
    static Scalar parse(const Field& f, const std::string& s);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inv() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

    // Fp representative (Fp fields only).
    std::uint32_t residue() const { return static_cast<std::uint32_t>(r_); }
    const Rational& rational() const { return q_; }

private:
    Field field_{};
    Rational q_{};       // Q
    std::uint64_t r_ = 0;  // Fp, in [0,p)

    void check_same(const Scalar& o) const;
};

}  // namespace mfx
