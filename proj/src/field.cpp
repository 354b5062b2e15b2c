#include "mfx/field.hpp"

namespace mfx {

namespace {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t fp_inv(std::uint64_t a, std::uint64_t p) {
    // extended Euclid
    long long t = 0, newt = 1;
    long long r = static_cast<long long>(p), newr = static_cast<long long>(a % p);
    while (newr != 0) {
        long long q = r / newr;
        long long tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw Error("fp_inv: element not invertible");
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<std::uint64_t>(t);
}

}  // namespace

Field field_q() { return Field{FieldKind::Q, 0}; }

Field field_fp(std::uint32_t p) {
    if (!is_prime_u32(p)) throw InputError("Fp modulus must be prime: " + std::to_string(p));
    return Field{FieldKind::Fp, p};
}

Scalar Scalar::zero(const Field& f) {
    Scalar s;
    s.field_ = f;
    return s;
}

Scalar Scalar::one(const Field& f) { return of_int(f, 1); }

Scalar Scalar::of_int(const Field& f, long long n) {
    Scalar s;
    s.field_ = f;
    if (f.kind == FieldKind::Q) {
        s.q_ = Rational(n);
    } else {
        long long m = n % static_cast<long long>(f.p);
        if (m < 0) m += f.p;
        s.r_ = static_cast<std::uint64_t>(m);
    }
    return s;
}

Scalar Scalar::of_rational(const Field& f, const Rational& q) {
    Scalar s;
    s.field_ = f;
    if (f.kind == FieldKind::Q) {
        s.q_ = q;
    } else {
        Integer num = boost::multiprecision::numerator(q);
        Integer den = boost::multiprecision::denominator(q);
        Integer p(f.p);
        Integer nm = num % p;
        if (nm < 0) nm += p;
        Integer dm = den % p;
        if (dm < 0) dm += p;
        if (dm == 0) throw InputError("denominator divisible by p in Fp coefficient");
        std::uint64_t n64 = nm.convert_to<std::uint64_t>();
        std::uint64_t d64 = dm.convert_to<std::uint64_t>();
        s.r_ = (n64 % f.p) * fp_inv(d64, f.p) % f.p;
    }
    return s;
}

Scalar Scalar::parse(const Field& f, const std::string& str) {
    try {
        Rational q(str);
        return of_rational(f, q);
    } catch (const std::exception&) {
        throw InputError("bad coefficient: \"" + str + "\"");
    }
}

bool Scalar::is_zero() const {
    return field_.kind == FieldKind::Q ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
    return field_.kind == FieldKind::Q ? q_ == 1 : r_ == 1;
}

void Scalar::check_same(const Scalar& o) const {
    if (!(field_ == o.field_)) throw RingMismatchError("scalar field mismatch");
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar s;
    s.field_ = field_;
    if (field_.kind == FieldKind::Q)
        s.q_ = q_ + o.q_;
    else
        s.r_ = (r_ + o.r_) % field_.p;
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar s;
    s.field_ = field_;
    if (field_.kind == FieldKind::Q)
        s.q_ = q_ * o.q_;
    else
        s.r_ = (r_ * o.r_) % field_.p;
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::operator-() const {
    Scalar s;
    s.field_ = field_;
    if (field_.kind == FieldKind::Q)
        s.q_ = -q_;
    else
        s.r_ = r_ == 0 ? 0 : field_.p - r_;
    return s;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw Error("division by zero scalar");
    Scalar s;
    s.field_ = field_;
    if (field_.kind == FieldKind::Q)
        s.q_ = 1 / q_;
    else
        s.r_ = fp_inv(r_, field_.p);
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(field_ == o.field_)) return false;
    return field_.kind == FieldKind::Q ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
    if (field_.kind == FieldKind::Q) return q_.str();
    return std::to_string(r_);
}

}  // namespace mfx
