#include "graphprod/field.hpp"

#include <boost/multiprecision/integer.hpp>

namespace graphprod {

namespace {

bool is_prime_u32(uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

// Inverse of a mod p via extended Euclid; a in [1, p).
uint64_t mod_inverse(uint64_t a, uint64_t p) {
    int64_t t = 0, new_t = 1;
    int64_t r = int64_t(p), new_r = int64_t(a);
    while (new_r != 0) {
        int64_t q = r / new_r;
        int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw ValidationError("element not invertible mod p");
    if (t < 0) t += int64_t(p);
    return uint64_t(t);
}

} // namespace

Field::Field(uint32_t p) : p_(p) {
    if (p != 0) {
        if (p >= (1u << 31) || !is_prime_u32(p))
            throw ValidationError("field characteristic must be 0 or a prime < 2^31, got " +
                                  std::to_string(p));
    }
}

std::string Field::name() const { return p_ == 0 ? "Q" : "GF(" + std::to_string(p_) + ")"; }

FieldElem Field::zero() const { return from_integer(0); }
FieldElem Field::one() const { return from_integer(1); }

FieldElem Field::from_integer(long long v) const {
    FieldElem e;
    e.p_ = p_;
    if (p_ == 0) {
        e.rat_ = Rational(v);
    } else {
        long long m = v % (long long)p_;
        if (m < 0) m += p_;
        e.res_ = uint64_t(m);
        e.rat_ = 0;
    }
    return e;
}

FieldElem Field::from_rational(const Rational& r) const {
    FieldElem e;
    e.p_ = p_;
    if (p_ == 0) {
        e.rat_ = r;
        return e;
    }
    // Reduce p/q mod p_: the denominator must not vanish in GF(p).
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    BigInt pb = p_;
    BigInt nm = num % pb;
    if (nm < 0) nm += pb;
    BigInt dm = den % pb;
    if (dm < 0) dm += pb;
    if (dm == 0)
        throw ValidationError("rational coefficient has denominator divisible by " +
                              std::to_string(p_));
    uint64_t n64 = nm.convert_to<uint64_t>();
    uint64_t d64 = dm.convert_to<uint64_t>();
    e.res_ = (n64 * mod_inverse(d64, p_)) % p_;
    e.rat_ = 0;
    return e;
}

FieldElem Field::parse(const std::string& s) const {
    if (s.empty()) throw ValidationError("empty coefficient string");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return from_rational(Rational(BigInt(s)));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw ValidationError("zero denominator in coefficient '" + s + "'");
        if (den < 0) { num = -num; den = -den; } // the constructor wants den > 0
        return from_rational(Rational(num, den));
    } catch (const ValidationError&) {
        throw;
    } catch (const std::exception&) {
        throw ValidationError("malformed coefficient '" + s + "'");
    }
}

void FieldElem::check_same(const FieldElem& o) const {
    if (p_ != o.p_)
        throw ValidationError("mixed-field operands: " + Field(p_).name() + " vs " +
                              Field(o.p_).name());
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_same(o);
    FieldElem r;
    r.p_ = p_;
    if (p_ == 0)
        r.rat_ = rat_ + o.rat_;
    else
        r.res_ = (res_ + o.res_) % p_;
    return r;
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    check_same(o);
    FieldElem r;
    r.p_ = p_;
    if (p_ == 0)
        r.rat_ = rat_ - o.rat_;
    else
        r.res_ = (res_ + p_ - o.res_) % p_;
    return r;
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_same(o);
    FieldElem r;
    r.p_ = p_;
    if (p_ == 0)
        r.rat_ = rat_ * o.rat_;
    else
        r.res_ = (res_ * o.res_) % p_; // residues < 2^31, product fits in 64 bits
    return r;
}

FieldElem FieldElem::operator-() const {
    FieldElem r;
    r.p_ = p_;
    if (p_ == 0)
        r.rat_ = -rat_;
    else
        r.res_ = res_ == 0 ? 0 : p_ - res_;
    return r;
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw ValidationError("inversion of zero in " + Field(p_).name());
    FieldElem r;
    r.p_ = p_;
    if (p_ == 0)
        r.rat_ = Rational(1) / rat_; // division normalizes the sign
    else
        r.res_ = mod_inverse(res_, p_);
    return r;
}

bool FieldElem::operator==(const FieldElem& o) const {
    check_same(o);
    return p_ == 0 ? rat_ == o.rat_ : res_ == o.res_;
}

bool FieldElem::is_zero() const { return p_ == 0 ? rat_ == 0 : res_ == 0; }
bool FieldElem::is_one() const { return p_ == 0 ? rat_ == 1 : res_ == 1; }

std::string FieldElem::str() const {
    if (p_ != 0) return std::to_string(res_);
    BigInt num = boost::multiprecision::numerator(rat_);
    BigInt den = boost::multiprecision::denominator(rat_);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

} // namespace graphprod
