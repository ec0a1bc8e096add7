// Truncated formal power series with rational coefficients, and rational
// functions expandable at t = 0.
//
// Truncation is a hard contract: no operation ever reports or fabricates a
// coefficient beyond the truncation degree. Products truncate at the minimum
// of the operand truncations.

#ifndef GRAPHPROD_SERIES_HPP
#define GRAPHPROD_SERIES_HPP

#include <vector>

#include "graphprod/field.hpp"

namespace graphprod {

class TruncatedSeries {
  public:
    // Zero series truncated at degree N >= 0.
    explicit TruncatedSeries(int trunc_degree);
    TruncatedSeries(int trunc_degree, std::vector<Rational> coeffs);

    static TruncatedSeries unit(int trunc_degree);

    int trunc_degree() const { return N_; }
    const Rational& coeff(int n) const;
    void set_coeff(int n, const Rational& v);
    const std::vector<Rational>& coeffs() const { return c_; }

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    // Cauchy product, truncated at min(N, o.N).
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    // Multiplicative inverse to the same truncation; requires coeff(0) != 0.
    TruncatedSeries invert() const;
    // Re-truncate to a lower degree.
    TruncatedSeries truncate(int n) const;

    bool operator==(const TruncatedSeries& o) const { return N_ == o.N_ && c_ == o.c_; }

    std::string str() const;

  private:
    int N_;
    std::vector<Rational> c_; // size N_ + 1
};

// num(t)/den(t) with den(0) != 0, expandable as a power series at t = 0.
class RationalFunction {
  public:
    RationalFunction(std::vector<Rational> num, std::vector<Rational> den);

    const std::vector<Rational>& num() const { return num_; }
    const std::vector<Rational>& den() const { return den_; }

    // Power-series expansion at 0 through degree N, by long division:
    // c_n = (num_n - sum_{k>=1} den_k * c_{n-k}) / den_0.
    TruncatedSeries expand(int N) const;

  private:
    std::vector<Rational> num_, den_;
};

} // namespace graphprod

#endif
