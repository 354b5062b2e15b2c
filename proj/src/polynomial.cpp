#include "mfx/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "mfx/errors.hpp"

namespace mfx {

Polynomial Polynomial::constant(const RingPtr& ring, const Scalar& c) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back(Term{Monomial(ring->nvars(), 0), c});
    return p;
}

Polynomial Polynomial::constant(const RingPtr& ring, long long n) {
    return constant(ring, Scalar::of_int(ring->field, n));
}

Polynomial Polynomial::variable(const RingPtr& ring, std::size_t i) {
    if (i >= ring->nvars()) throw InputError("variable index out of range");
    Monomial m(ring->nvars(), 0);
    m[i] = 1;
    return monomial(ring, std::move(m), Scalar::one(ring->field));
}

Polynomial Polynomial::monomial(const RingPtr& ring, Monomial m, const Scalar& c) {
    if (m.size() != ring->nvars()) throw ShapeError("exponent vector length mismatch");
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back(Term{std::move(m), c});
    return p;
}

Polynomial Polynomial::from_terms(const RingPtr& ring, std::vector<Term> terms) {
    for (const auto& t : terms)
        if (t.m.size() != ring->nvars())
            throw ShapeError("exponent vector length mismatch");
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return mono_cmp(ring->order, a.m, b.m) > 0;
    });
    Polynomial p(ring);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().m == t.m)
            p.terms_.back().c = p.terms_.back().c + t.c;
        else
            p.terms_.push_back(std::move(t));
        if (!p.terms_.empty() && p.terms_.back().c.is_zero()) p.terms_.pop_back();
    }
    return p;
}

bool Polynomial::is_one() const {
    return terms_.size() == 1 && mono_is_one(terms_[0].m) && terms_[0].c.is_one();
}

const Term& Polynomial::lead() const {
    if (terms_.empty()) throw Error("lead() of zero polynomial");
    return terms_.front();
}

std::uint64_t Polynomial::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, mono_deg(t.m));
    return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(ring_, o.ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        int c;
        if (i == terms_.size())
            c = -1;
        else if (j == o.terms_.size())
            c = 1;
        else
            c = mono_cmp(ring_->order, terms_[i].m, o.terms_[j].m);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Scalar s = terms_[i].c + o.terms_[j].c;
            if (!s.is_zero()) r.terms_.push_back(Term{terms_[i].m, s});
            ++i;
            ++j;
        }
    }
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back(Term{t.m, -t.c});
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::scaled(const Scalar& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back(Term{t.m, t.c * c});
    return r;
}

Polynomial Polynomial::shifted(const Monomial& m, const Scalar& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back(Term{mono_mul(t.m, m), t.c * c});
    return r;  // order preserved: multiplying by a fixed monomial is monotone
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(ring_, o.ring_);
    if (is_zero() || o.is_zero()) return Polynomial(ring_);
    auto cmp = [this](const Monomial& a, const Monomial& b) {
        return mono_cmp(ring_->order, a, b) > 0;
    };
    std::map<Monomial, Scalar, decltype(cmp)> acc(cmp);
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Monomial m = mono_mul(a.m, b.m);
            Scalar c = a.c * b.c;
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(std::move(m), c);
            else
                it->second = it->second + c;
        }
    }
    Polynomial r(ring_);
    for (auto& [m, c] : acc)
        if (!c.is_zero()) r.terms_.push_back(Term{m, c});
    return r;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(lead().c.inv());
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        std::string cs = t.c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) os << "-", cs = cs.substr(1);
        } else {
            os << (neg ? " - " : " + ");
            if (neg) cs = cs.substr(1);
        }
        first = false;
        bool constant = mono_is_one(t.m);
        if (!constant && cs == "1") cs.clear();
        if (!cs.empty()) os << cs;
        bool star = !cs.empty();
        for (std::size_t i = 0; i < t.m.size(); ++i) {
            if (t.m[i] == 0) continue;
            if (star) os << "*";
            os << ring_->vars[i];
            if (t.m[i] > 1) os << "^" << t.m[i];
            star = true;
        }
        if (constant && cs.empty()) os << "1";
    }
    return os.str();
}

namespace {

// expr := term (('+'|'-') term)* ; term := factor ('*'? factor)* ;
// factor := base ('^' int)? ; base := number | var | '(' expr ')'
struct PolyParser {
    const RingPtr& ring;
    const std::string& s;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw InputError("polynomial parse error at position " + std::to_string(pos) +
                         ": " + what);
    }

    Polynomial expr() {
        skip();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Polynomial acc = term();
        if (neg) acc = -acc;
        while (true) {
            skip();
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                break;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (true) {
            skip();
            if (pos >= s.size()) break;
            char c = s[pos];
            if (c == '*') {
                ++pos;
                acc = acc * factor();
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '(' ||
                       std::isdigit(static_cast<unsigned char>(c))) {
                acc = acc * factor();  // implicit multiplication
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial b = base();
        skip();
        if (eat('^')) {
            skip();
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == start) fail("exponent expected");
            unsigned long e = std::stoul(s.substr(start, pos - start));
            Polynomial r = Polynomial::constant(ring, 1);
            for (unsigned long i = 0; i < e; ++i) r = r * b;
            return r;
        }
        return b;
    }

    Polynomial base() {
        skip();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Polynomial p = expr();
            if (!eat(')')) fail("')' expected");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < s.size() &&
                   (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
                ++pos;
            return Polynomial::constant(ring,
                                        Scalar::parse(ring->field, s.substr(start, pos - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                                      s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            for (std::size_t i = 0; i < ring->nvars(); ++i)
                if (ring->vars[i] == name) return Polynomial::variable(ring, i);
            fail("unknown variable \"" + name + "\"");
        }
        fail("unexpected character");
    }
};

}  // namespace

Polynomial parse_poly(const RingPtr& ring, const std::string& text) {
    PolyParser p{ring, text};
    Polynomial r = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

}  // namespace mfx
