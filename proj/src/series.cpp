#include "graphprod/series.hpp"

#include <algorithm>
#include <sstream>

namespace graphprod {

TruncatedSeries::TruncatedSeries(int trunc_degree) : N_(trunc_degree) {
    if (trunc_degree < 0) throw ValidationError("series truncation degree must be >= 0");
    c_.assign(size_t(N_) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(int trunc_degree, std::vector<Rational> coeffs)
    : TruncatedSeries(trunc_degree) {
    if (coeffs.size() > c_.size())
        throw ValidationError("more coefficients than truncation degree allows");
    std::copy(coeffs.begin(), coeffs.end(), c_.begin());
}

TruncatedSeries TruncatedSeries::unit(int trunc_degree) {
    TruncatedSeries s(trunc_degree);
    s.c_[0] = 1;
    return s;
}

const Rational& TruncatedSeries::coeff(int n) const {
    if (n < 0 || n > N_)
        throw ValidationError("series coefficient index " + std::to_string(n) +
                              " outside truncation degree " + std::to_string(N_));
    return c_[size_t(n)];
}

void TruncatedSeries::set_coeff(int n, const Rational& v) {
    if (n < 0 || n > N_)
        throw ValidationError("series coefficient index out of range");
    c_[size_t(n)] = v;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    int N = std::min(N_, o.N_);
    TruncatedSeries r(N);
    for (int n = 0; n <= N; ++n) r.c_[size_t(n)] = c_[size_t(n)] + o.c_[size_t(n)];
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    int N = std::min(N_, o.N_);
    TruncatedSeries r(N);
    for (int n = 0; n <= N; ++n) r.c_[size_t(n)] = c_[size_t(n)] - o.c_[size_t(n)];
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    int N = std::min(N_, o.N_);
    TruncatedSeries r(N);
    for (int i = 0; i <= N; ++i) {
        if (c_[size_t(i)] == 0) continue;
        for (int j = 0; i + j <= N; ++j)
            r.c_[size_t(i + j)] += c_[size_t(i)] * o.c_[size_t(j)];
    }
    return r;
}

TruncatedSeries TruncatedSeries::invert() const {
    if (c_[0] == 0) throw ValidationError("series inversion requires nonzero constant term");
    TruncatedSeries r(N_);
    Rational inv0 = Rational(boost::multiprecision::denominator(c_[0]),
                             boost::multiprecision::numerator(c_[0]));
    r.c_[0] = inv0;
    // b_n = -(1/a_0) * sum_{k=1..n} a_k b_{n-k}
    for (int n = 1; n <= N_; ++n) {
        Rational acc = 0;
        for (int k = 1; k <= n; ++k) acc += c_[size_t(k)] * r.c_[size_t(n - k)];
        r.c_[size_t(n)] = -inv0 * acc;
    }
    return r;
}

TruncatedSeries TruncatedSeries::truncate(int n) const {
    if (n > N_) throw ValidationError("cannot extend a truncated series");
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i) r.c_[size_t(i)] = c_[size_t(i)];
    return r;
}

std::string TruncatedSeries::str() const {
    std::ostringstream os;
    for (int n = 0; n <= N_; ++n) {
        if (n) os << ",";
        os << Rational(c_[size_t(n)]).str();
    }
    return os.str();
}

RationalFunction::RationalFunction(std::vector<Rational> num, std::vector<Rational> den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.empty() || den_[0] == 0)
        throw ValidationError("rational function denominator must be nonzero at t=0");
    if (num_.empty()) num_.push_back(0);
}

TruncatedSeries RationalFunction::expand(int N) const {
    TruncatedSeries r(N);
    Rational inv0 = Rational(boost::multiprecision::denominator(den_[0]),
                             boost::multiprecision::numerator(den_[0]));
    for (int n = 0; n <= N; ++n) {
        Rational acc = n < int(num_.size()) ? num_[size_t(n)] : Rational(0);
        for (int k = 1; k <= n && k < int(den_.size()); ++k)
            acc -= den_[size_t(k)] * r.coeff(n - k);
        r.set_coeff(n, inv0 * acc);
    }
    return r;
}

} // namespace graphprod
