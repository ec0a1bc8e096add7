#include "graphprod/galg.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <sstream>
#include <utility>

#include "graphprod/errors.hpp"

namespace graphprod {

namespace {

// Sparse product expansion used by the load-time associativity check.
using SparseVec = std::map<int, Rational>;

void add_scaled(SparseVec& acc, int elem, const Rational& c) {
    Rational& slot = acc[elem];
    slot += c;
    if (slot == 0)
        acc.erase(elem);
}

} // namespace

// ----------------------------------------------------------- GradedAlgebraSpec

GradedAlgebraSpec::GradedAlgebraSpec(std::string name, int trunc_degree, bool complete,
                                     std::vector<std::vector<std::string>> basis_by_degree,
                                     std::vector<ProductRule> rules,
                                     std::optional<RationalFunction> hilbert)
    : name_(std::move(name)), trunc_degree_(trunc_degree), complete_(complete),
      hilbert_(std::move(hilbert)) {
    if (name_.empty())
        throw ValidationError("algebra name must be nonempty");
    if (trunc_degree_ < 0)
        throw ValidationError("truncation degree must be >= 0");
    if (static_cast<int>(basis_by_degree.size()) > trunc_degree_ + 1)
        throw ValidationError("algebra '" + name_ +
                              "' lists basis elements beyond its truncation degree");
    if (basis_by_degree.empty() || basis_by_degree[0].size() != 1 ||
        basis_by_degree[0][0] != "1")
        throw ValidationError("algebra '" + name_ +
                              "' must have degree-0 basis exactly {\"1\"}");

    // Flatten the basis, unit first, then by increasing degree.
    std::map<std::string, int> index;
    by_degree_.assign(static_cast<size_t>(trunc_degree_) + 1, {});
    for (size_t d = 0; d < basis_by_degree.size(); ++d)
        for (const std::string& nm : basis_by_degree[d]) {
            if (nm.empty())
                throw ValidationError("algebra '" + name_ + "' has an empty basis name");
            if (!index.emplace(nm, static_cast<int>(names_.size())).second)
                throw ValidationError("algebra '" + name_ + "' repeats basis name '" +
                                      nm + "'");
            by_degree_[d].push_back(static_cast<int>(names_.size()));
            names_.push_back(nm);
            degree_.push_back(static_cast<int>(d));
        }

    // Unit rules are synthesized; explicit rules may not contradict them.
    const int B = basis_size();
    for (int e = 0; e < B; ++e) {
        table_[{0, e}] = {{e, Rational(1)}};
        if (e != 0)
            table_[{e, 0}] = {{e, Rational(1)}};
    }
    for (const ProductRule& rule : rules) {
        const int l = find_elem(rule.left);
        const int r = find_elem(rule.right);
        const int target = degree_[static_cast<size_t>(l)] + degree_[static_cast<size_t>(r)];
        if (target > trunc_degree_)
            throw ValidationError("algebra '" + name_ + "' rule " + rule.left + " * " +
                                  rule.right + " lands beyond the truncation degree");
        SparseVec sum;
        for (const auto& [coeff, nm] : rule.result) {
            const int z = find_elem(nm);
            if (degree_[static_cast<size_t>(z)] != target)
                throw ValidationError("algebra '" + name_ + "' rule " + rule.left +
                                      " * " + rule.right + " breaks the grading at '" +
                                      nm + "'");
            add_scaled(sum, z, coeff);
        }
        std::vector<std::pair<int, Rational>> terms(sum.begin(), sum.end());
        if (l == 0 || r == 0) {
            if (terms != table_.at({l, r}))
                throw ValidationError("algebra '" + name_ +
                                      "' gives a unit rule that is not the identity");
            continue;
        }
        if (!table_.emplace(std::make_pair(l, r), std::move(terms)).second)
            throw ValidationError("algebra '" + name_ + "' repeats the rule " +
                                  rule.left + " * " + rule.right);
    }

    // Associativity on every checkable triple of non-unit elements. For an
    // incomplete algebra only triples with total degree within the truncation
    // bound are decidable; for a complete one every product is known.
    for (int x = 1; x < B; ++x)
        for (int y = 1; y < B; ++y)
            for (int z = 1; z < B; ++z) {
                if (!complete_ &&
                    degree_[static_cast<size_t>(x)] + degree_[static_cast<size_t>(y)] +
                            degree_[static_cast<size_t>(z)] >
                        trunc_degree_)
                    continue;
                SparseVec left, right;
                for (const auto& [w, c] : product(x, y))
                    for (const auto& [u, c2] : product(w, z))
                        add_scaled(left, u, c * c2);
                for (const auto& [w, c] : product(y, z))
                    for (const auto& [u, c2] : product(x, w))
                        add_scaled(right, u, c * c2);
                if (left != right)
                    throw ValidationError(
                        "algebra '" + name_ + "' is not associative on (" +
                        names_[static_cast<size_t>(x)] + ", " +
                        names_[static_cast<size_t>(y)] + ", " +
                        names_[static_cast<size_t>(z)] + ")");
            }

    if (hilbert_.has_value()) {
        const TruncatedSeries expanded = hilbert_->expand(trunc_degree_);
        for (int n = 0; n <= trunc_degree_; ++n)
            if (expanded.coeff(n) != Rational(dim(n)))
                throw ValidationError("algebra '" + name_ +
                                      "' Hilbert function disagrees with its basis at degree " +
                                      std::to_string(n));
    }
}

int GradedAlgebraSpec::find_elem(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return static_cast<int>(i);
    throw ValidationError("algebra '" + name_ + "' has no basis element '" + name + "'");
}

int GradedAlgebraSpec::dim(int d) const {
    if (d < 0)
        throw ValidationError("degree must be >= 0");
    if (d > trunc_degree_) {
        if (complete_)
            return 0;
        throw TruncationError("algebra '" + name_ + "' is truncated at degree " +
                              std::to_string(trunc_degree_) +
                              "; degree " + std::to_string(d) + " is unknown");
    }
    return static_cast<int>(by_degree_[static_cast<size_t>(d)].size());
}

int GradedAlgebraSpec::known_degree_limit() const {
    return complete_ ? INT_MAX : trunc_degree_;
}

const std::vector<std::pair<int, Rational>>& GradedAlgebraSpec::product(int left,
                                                                        int right) const {
    static const std::vector<std::pair<int, Rational>> kZero;
    if (left < 0 || left >= basis_size() || right < 0 || right >= basis_size())
        throw ValidationError("algebra '" + name_ + "' basis index out of range");
    const auto it = table_.find({left, right});
    if (it != table_.end())
        return it->second;
    if (!complete_ && degree_[static_cast<size_t>(left)] +
                              degree_[static_cast<size_t>(right)] >
                          trunc_degree_)
        throw TruncationError("algebra '" + name_ + "' product " +
                              names_[static_cast<size_t>(left)] + " * " +
                              names_[static_cast<size_t>(right)] +
                              " lands beyond the truncation degree " +
                              std::to_string(trunc_degree_));
    return kZero;
}

std::string GradedAlgebraSpec::describe() const {
    std::ostringstream os;
    os << name_ << " (truncated at " << trunc_degree_
       << (complete_ ? ", complete" : "") << "): dims";
    for (int d = 0; d <= trunc_degree_; ++d)
        os << " " << by_degree_[static_cast<size_t>(d)].size();
    return os.str();
}

// ------------------------------------------------------------------- builtins

namespace {

std::vector<Rational> unit_poly(int degree_of_t, const Rational& c0, const Rational& cd) {
    // c0 + cd * t^degree_of_t as a dense coefficient vector.
    std::vector<Rational> p(static_cast<size_t>(degree_of_t) + 1, Rational(0));
    p[0] = c0;
    p[static_cast<size_t>(degree_of_t)] += cd;
    return p;
}

void check_builtin_params(int d, int N) {
    if (d < 1)
        throw ValidationError("generator degree must be >= 1");
    if (N < d)
        throw ValidationError("truncation degree must be at least the generator degree");
}

std::string power_name(int k) { return k == 1 ? "x" : "x^" + std::to_string(k); }

} // namespace

GradedAlgebraSpec exterior_algebra(int d, int N) {
    check_builtin_params(d, N);
    std::vector<std::vector<std::string>> basis(static_cast<size_t>(N) + 1);
    basis[0] = {"1"};
    basis[static_cast<size_t>(d)] = {"x"};
    return GradedAlgebraSpec("exterior(" + std::to_string(d) + ")", N, true,
                             std::move(basis), {},
                             RationalFunction(unit_poly(d, 1, 1), {Rational(1)}));
}

GradedAlgebraSpec trunc_poly_algebra(int d, int r, int N) {
    check_builtin_params(d, N);
    if (r < 2)
        throw ValidationError("truncated polynomial order must be >= 2");
    std::vector<std::vector<std::string>> basis(static_cast<size_t>(N) + 1);
    basis[0] = {"1"};
    for (int k = 1; k <= r - 1 && k * d <= N; ++k)
        basis[static_cast<size_t>(k * d)] = {power_name(k)};
    std::vector<ProductRule> rules;
    for (int a = 1; a <= r - 1; ++a)
        for (int b = 1; b <= r - 1; ++b)
            if (a + b <= r - 1 && (a + b) * d <= N)
                rules.push_back({power_name(a), power_name(b),
                                 {{Rational(1), power_name(a + b)}}});
    const bool complete = (r - 1) * d <= N;
    return GradedAlgebraSpec("trunc_poly(" + std::to_string(d) + "," + std::to_string(r) +
                                 ")",
                             N, complete, std::move(basis), std::move(rules),
                             RationalFunction(unit_poly(r * d, 1, -1),
                                              unit_poly(d, 1, -1)));
}

GradedAlgebraSpec free_algebra(int d, int N) {
    check_builtin_params(d, N);
    std::vector<std::vector<std::string>> basis(static_cast<size_t>(N) + 1);
    basis[0] = {"1"};
    for (int k = 1; k * d <= N; ++k)
        basis[static_cast<size_t>(k * d)] = {power_name(k)};
    std::vector<ProductRule> rules;
    for (int a = 1; a * d <= N; ++a)
        for (int b = 1; (a + b) * d <= N; ++b)
            rules.push_back({power_name(a), power_name(b),
                             {{Rational(1), power_name(a + b)}}});
    return GradedAlgebraSpec("free(" + std::to_string(d) + ")", N, false,
                             std::move(basis), std::move(rules),
                             RationalFunction({Rational(1)}, unit_poly(d, 1, -1)));
}

// ------------------------------------------------------------- AlgebraProduct

AlgebraProduct::AlgebraProduct(FlagComplex complex, std::vector<GradedAlgebraSpec> algebras)
    : complex_(std::move(complex)), algebras_(std::move(algebras)) {
    if (static_cast<int>(algebras_.size()) != complex_.ambient_vertex_count())
        throw ValidationError("need exactly one algebra per ambient vertex");
}

int AlgebraProduct::known_degree_limit() const {
    int limit = INT_MAX;
    for (const GradedAlgebraSpec& a : algebras_)
        limit = std::min(limit, a.known_degree_limit());
    return limit;
}

// ------------------------------------------------------------------ monomials

namespace {

void validate_monomial(const AlgebraProduct& ap, const Monomial& mono) {
    for (const GLetter& l : mono) {
        if (l.vertex < 1 || l.vertex > ap.m())
            throw ValidationError("monomial letter vertex " + std::to_string(l.vertex) +
                                  " is out of range");
        if (l.elem < 0 || l.elem >= ap.algebra(l.vertex).basis_size())
            throw ValidationError("monomial letter at vertex " +
                                  std::to_string(l.vertex) +
                                  " names no basis element");
    }
}

int letter_degree(const AlgebraProduct& ap, const GLetter& l) {
    return ap.algebra(l.vertex).degree(l.elem);
}

} // namespace

int total_degree(const AlgebraProduct& ap, const Monomial& mono) {
    validate_monomial(ap, mono);
    int sum = 0;
    for (const GLetter& l : mono)
        sum += letter_degree(ap, l);
    return sum;
}

std::string monomial_str(const AlgebraProduct& ap, const Monomial& mono) {
    if (mono.empty())
        return "1";
    std::ostringstream os;
    for (const GLetter& l : mono)
        os << "(" << l.vertex << ":" << ap.algebra(l.vertex).elem_name(l.elem) << ")";
    return os.str();
}

void SignedMonomialSum::add_term(const Monomial& mono, const FieldElem& coeff) {
    if (coeff.is_zero())
        return;
    auto [it, inserted] = terms.emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms.erase(it);
    }
}

bool SignedMonomialSum::operator==(const SignedMonomialSum& o) const {
    return field == o.field && terms == o.terms;
}

std::string SignedMonomialSum::str(const AlgebraProduct& ap) const {
    if (terms.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, coeff] : terms) {
        if (!first)
            os << " + ";
        first = false;
        os << coeff.str() << "*" << monomial_str(ap, mono);
    }
    return os.str();
}

// ----------------------------------------------------------------- rewriting

SignedMonomialSum gp_normalize(const AlgebraProduct& ap, const FieldElem& coeff,
                               const Monomial& raw, bool koszul_signs) {
    validate_monomial(ap, raw);
    SignedMonomialSum out{coeff.field(), {}};
    if (coeff.is_zero())
        return out;

    Monomial start;
    start.reserve(raw.size());
    for (const GLetter& l : raw)
        if (l.elem != 0)
            start.push_back(l); // unit letters are deleted

    std::vector<std::pair<FieldElem, Monomial>> work;
    work.emplace_back(coeff, std::move(start));
    while (!work.empty()) {
        FieldElem c = std::move(work.back().first);
        Monomial m = std::move(work.back().second);
        work.pop_back();

        // Merge the leftmost pair of same-vertex letters separated only by
        // letters at commuting vertices: slide the right one down (a Koszul
        // sign per crossed letter), then apply the local structure constants,
        // branching into one term per result element.
        bool merged = false;
        for (size_t i = 0; i < m.size() && !merged; ++i)
            for (size_t j = i + 1; j < m.size(); ++j) {
                if (m[j].vertex == m[i].vertex) {
                    FieldElem c2 = c;
                    if (koszul_signs) {
                        long long cross = 0;
                        const int dj = letter_degree(ap, m[j]);
                        for (size_t t = i + 1; t < j; ++t)
                            cross += static_cast<long long>(dj) * letter_degree(ap, m[t]);
                        if (cross % 2 != 0)
                            c2 = -c2;
                    }
                    for (const auto& [z, q] :
                         ap.algebra(m[i].vertex).product(m[i].elem, m[j].elem)) {
                        const FieldElem cz = c2 * out.field.from_rational(q);
                        if (cz.is_zero())
                            continue;
                        Monomial nm;
                        nm.reserve(m.size() - 1);
                        nm.insert(nm.end(), m.begin(),
                                  m.begin() + static_cast<std::ptrdiff_t>(i));
                        nm.push_back(GLetter{m[i].vertex, z});
                        for (size_t t = i + 1; t < m.size(); ++t)
                            if (t != j)
                                nm.push_back(m[t]);
                        work.emplace_back(cz, std::move(nm));
                    }
                    merged = true;
                    break;
                }
                if (!ap.commute(m[i].vertex, m[j].vertex))
                    break; // blocked: letters past j are not visible from i
            }
        if (merged)
            continue;

        // The support is reduced; reorder to the canonical lexicographically
        // least linearization, greedily emitting the smallest-vertex letter
        // among those not preceded by a same-vertex or non-commuting letter
        // and accumulating a Koszul sign for each letter crossed.
        Monomial sorted;
        sorted.reserve(m.size());
        bool negate = false;
        Monomial rest = std::move(m);
        while (!rest.empty()) {
            size_t best = rest.size();
            for (size_t i = 0; i < rest.size(); ++i) {
                bool available = true;
                for (size_t j = 0; j < i && available; ++j)
                    available = rest[j].vertex != rest[i].vertex &&
                                ap.commute(rest[j].vertex, rest[i].vertex);
                if (available &&
                    (best == rest.size() || rest[i].vertex < rest[best].vertex))
                    best = i;
            }
            if (koszul_signs && best > 0) {
                long long cross = 0;
                const int db = letter_degree(ap, rest[best]);
                for (size_t t = 0; t < best; ++t)
                    cross += static_cast<long long>(db) * letter_degree(ap, rest[t]);
                if (cross % 2 != 0)
                    negate = !negate;
            }
            sorted.push_back(rest[best]);
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
        }
        out.add_term(sorted, negate ? -c : c);
    }
    return out;
}

SignedMonomialSum gp_multiply(const AlgebraProduct& ap, const SignedMonomialSum& a,
                              const SignedMonomialSum& b) {
    if (a.field != b.field)
        throw ValidationError("cannot multiply sums over different fields");
    SignedMonomialSum out{a.field, {}};
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            Monomial concat = ma;
            concat.insert(concat.end(), mb.begin(), mb.end());
            for (const auto& [mono, c] : gp_normalize(ap, ca * cb, concat).terms)
                out.add_term(mono, c);
        }
    return out;
}

// ------------------------------------------------------------ basis counting

namespace {

// A canonical vertex sequence stays canonical under appending v exactly when
// v cannot slide left across commuting letters onto its own vertex (a merge)
// or past a larger vertex (a lexicographic improvement).
bool support_extend_ok(const FlagComplex& complex, const std::vector<int>& seq, int v) {
    for (size_t j = seq.size(); j-- > 0;) {
        if (seq[j] == v)
            return false;
        if (!complex.has_edge(seq[j], v))
            break;
        if (v < seq[j])
            return false;
    }
    return true;
}

} // namespace

long long gp_basis_count(const AlgebraProduct& ap, int n, std::vector<Monomial>* listing) {
    if (n < 0)
        throw ValidationError("degree must be >= 0");
    if (n > ap.known_degree_limit())
        throw TruncationError("basis counting at degree " + std::to_string(n) +
                              " exceeds a vertex algebra's truncation degree");
    if (listing)
        listing->clear();

    long long count = 0;
    Monomial mono;
    std::vector<int> support;
    auto dfs = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            ++count;
            if (listing)
                listing->push_back(mono);
            return;
        }
        for (int v = 1; v <= ap.m(); ++v) {
            if (!support_extend_ok(ap.complex(), support, v))
                continue;
            const GradedAlgebraSpec& alg = ap.algebra(v);
            for (int e = 1; e < alg.basis_size(); ++e) {
                if (alg.degree(e) > remaining)
                    continue;
                mono.push_back(GLetter{v, e});
                support.push_back(v);
                self(self, remaining - alg.degree(e));
                mono.pop_back();
                support.pop_back();
            }
        }
    };
    dfs(dfs, n);
    return count;
}

TruncatedSeries hilbert_series(const GradedAlgebraSpec& spec, int N) {
    if (N < 0)
        throw ValidationError("truncation degree must be >= 0");
    if (N > spec.known_degree_limit())
        throw TruncationError("algebra '" + spec.name() +
                              "' has unknown dimensions beyond degree " +
                              std::to_string(spec.trunc_degree()));
    TruncatedSeries out(N);
    for (int d = 0; d <= N; ++d)
        out.set_coeff(d, Rational(spec.dim(d)));
    return out;
}

TruncatedSeries hilbert_series(const AlgebraProduct& ap, int N) {
    if (N < 0)
        throw ValidationError("truncation degree must be >= 0");
    TruncatedSeries out(N);
    for (int n = 0; n <= N; ++n)
        out.set_coeff(n, Rational(gp_basis_count(ap, n)));
    return out;
}

} // namespace graphprod
