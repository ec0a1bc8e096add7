// Exact scalars: GF(p) for a prime p < 2^31, and arbitrary-precision rationals.
//
// Invariants:
//   * GF(p) values are canonical residues in [0, p).
//   * Rational values are kept in lowest terms with positive denominator
//     (maintained by boost::multiprecision::cpp_rational).
// No floating point is used anywhere in the library.

#ifndef GRAPHPROD_FIELD_HPP
#define GRAPHPROD_FIELD_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "graphprod/errors.hpp"

namespace graphprod {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class FieldElem;

// Field descriptor: p == 0 means the rationals, otherwise GF(p) with p prime.
class Field {
  public:
    Field() : p_(0) {}
    explicit Field(uint32_t p);

    bool is_rational() const { return p_ == 0; }
    uint32_t prime() const { return p_; }
    std::string name() const;

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_integer(long long v) const;
    FieldElem from_rational(const Rational& r) const;
    // Parses "3", "-2", or "p/q". Throws ValidationError on malformed input
    // or when a denominator is divisible by the characteristic.
    FieldElem parse(const std::string& s) const;

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

  private:
    uint32_t p_;
};

// One exact scalar tagged with its field. Mixed-field arithmetic throws.
class FieldElem {
  public:
    FieldElem() : p_(0), res_(0), rat_(0) {} // rational zero

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator-() const;
    // Multiplicative inverse; throws ValidationError on zero.
    FieldElem inverse() const;
    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_one() const;
    Field field() const { return Field(p_); }

    // Canonical text form: the residue for GF(p); "n" or "n/d" for rationals.
    std::string str() const;

  private:
    friend class Field;
    void check_same(const FieldElem& o) const;

    uint32_t p_;   // 0 = rational, else GF(p)
    uint64_t res_; // canonical residue when p_ != 0
    Rational rat_; // value when p_ == 0
};

} // namespace graphprod

#endif
