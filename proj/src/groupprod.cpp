#include "graphprod/groupprod.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <deque>
#include <unordered_set>

namespace graphprod {

// ---------------------------------------------------------------- LocalGroup

LocalGroup LocalGroup::finite_table(std::vector<std::string> names, int identity,
                                    std::vector<std::vector<int>> table) {
    LocalGroup g;
    g.kind_ = Kind::Table;
    long long n = static_cast<long long>(names.size());
    if (n == 0)
        throw ValidationError("finite group needs at least one element");
    for (const auto& s : names)
        if (s.empty())
            throw ValidationError("empty element name");
    for (size_t i = 0; i < names.size(); ++i)
        for (size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j])
                throw ValidationError("duplicate element name '" + names[i] + "'");
    if (identity < 0 || identity >= n)
        throw ValidationError("identity index out of range");
    if (static_cast<long long>(table.size()) != n)
        throw ValidationError("multiplication table must have one row per element");
    for (const auto& row : table) {
        if (static_cast<long long>(row.size()) != n)
            throw ValidationError("multiplication table row has wrong length");
        for (int x : row)
            if (x < 0 || x >= n)
                throw ValidationError("multiplication table entry out of range");
    }
    for (long long a = 0; a < n; ++a) {
        if (table[static_cast<size_t>(identity)][static_cast<size_t>(a)] != a ||
            table[static_cast<size_t>(a)][static_cast<size_t>(identity)] != a)
            throw ValidationError("declared identity is not an identity");
    }
    g.inverse_.assign(static_cast<size_t>(n), -1);
    for (long long a = 0; a < n; ++a) {
        for (long long b = 0; b < n; ++b)
            if (table[static_cast<size_t>(a)][static_cast<size_t>(b)] == identity &&
                table[static_cast<size_t>(b)][static_cast<size_t>(a)] == identity) {
                g.inverse_[static_cast<size_t>(a)] = static_cast<int>(b);
                break;
            }
        if (g.inverse_[static_cast<size_t>(a)] < 0)
            throw ValidationError("element '" + names[static_cast<size_t>(a)] +
                                  "' has no inverse");
    }
    for (long long a = 0; a < n; ++a)
        for (long long b = 0; b < n; ++b)
            for (long long c = 0; c < n; ++c) {
                int ab_c = table[static_cast<size_t>(
                    table[static_cast<size_t>(a)][static_cast<size_t>(b)])][static_cast<size_t>(c)];
                int a_bc = table[static_cast<size_t>(a)][static_cast<size_t>(
                    table[static_cast<size_t>(b)][static_cast<size_t>(c)])];
                if (ab_c != a_bc)
                    throw ValidationError("multiplication table is not associative");
            }
    g.n_ = n;
    g.id_ = identity;
    g.names_ = std::move(names);
    g.table_ = std::move(table);
    return g;
}

LocalGroup LocalGroup::cyclic(long long n) {
    if (n < 1)
        throw ValidationError("cyclic group order must be >= 1");
    LocalGroup g;
    g.kind_ = Kind::Cyclic;
    g.n_ = n;
    g.id_ = 0;
    return g;
}

LocalGroup LocalGroup::infinite_cyclic() {
    LocalGroup g;
    g.kind_ = Kind::Integers;
    g.n_ = 0;
    g.id_ = 0;
    return g;
}

long long LocalGroup::order() const { return kind_ == Kind::Integers ? 0 : n_; }

bool LocalGroup::valid(long long x) const {
    return kind_ == Kind::Integers ? true : (x >= 0 && x < n_);
}

void LocalGroup::check(long long x) const {
    if (!valid(x))
        throw ValidationError("element code " + std::to_string(x) + " not in " + describe());
}

long long LocalGroup::mul(long long a, long long b) const {
    check(a);
    check(b);
    switch (kind_) {
        case Kind::Table:
            return table_[static_cast<size_t>(a)][static_cast<size_t>(b)];
        case Kind::Cyclic:
            return (a + b) % n_;
        case Kind::Integers: {
            long long r = 0;
            if (__builtin_add_overflow(a, b, &r))
                throw ValidationError("integer exponent overflow");
            return r;
        }
    }
    return 0;
}

long long LocalGroup::inv(long long a) const {
    check(a);
    switch (kind_) {
        case Kind::Table:
            return inverse_[static_cast<size_t>(a)];
        case Kind::Cyclic:
            return a == 0 ? 0 : n_ - a;
        case Kind::Integers:
            return -a;
    }
    return 0;
}

std::vector<long long> LocalGroup::nonidentity_elements() const {
    if (!is_finite())
        throw ValidationError("cannot enumerate the infinite cyclic group");
    std::vector<long long> out;
    out.reserve(static_cast<size_t>(n_) - 1);
    for (long long x = 0; x < n_; ++x)
        if (x != id_)
            out.push_back(x);
    return out;
}

std::string LocalGroup::elem_name(long long x) const {
    check(x);
    return kind_ == Kind::Table ? names_[static_cast<size_t>(x)] : std::to_string(x);
}

long long LocalGroup::parse_elem(const std::string& s) const {
    if (kind_ == Kind::Table) {
        for (size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == s)
                return static_cast<long long>(i);
        throw ValidationError("unknown element '" + s + "' in " + describe());
    }
    long long v = 0;
    try {
        size_t used = 0;
        v = std::stoll(s, &used);
        if (used != s.size())
            throw ValidationError("");
    } catch (const std::exception&) {
        throw ValidationError("malformed element '" + s + "' for " + describe());
    }
    if (kind_ == Kind::Cyclic) {
        v %= n_;
        if (v < 0)
            v += n_;
    }
    return v;
}

std::string LocalGroup::describe() const {
    switch (kind_) {
        case Kind::Table:
            return "table(" + std::to_string(n_) + ")";
        case Kind::Cyclic:
            return "Z/" + std::to_string(n_);
        case Kind::Integers:
            return "Z";
    }
    return "?";
}

// -------------------------------------------------------------- GraphProduct

GraphProduct::GraphProduct(FlagComplex complex, std::vector<LocalGroup> groups)
    : complex_(std::move(complex)), groups_(std::move(groups)) {
    if (static_cast<int>(groups_.size()) != complex_.ambient_vertex_count())
        throw ValidationError("need exactly one group per vertex");
    if (complex_.vertex_count() != complex_.ambient_vertex_count())
        throw ValidationError("the ambient complex must contain all its vertices");
}

const LocalGroup& GraphProduct::group(int v) const {
    if (v < 1 || v > m())
        throw ValidationError("vertex " + std::to_string(v) + " out of range");
    return groups_[static_cast<size_t>(v - 1)];
}

void GraphProduct::validate_word(const Word& w) const {
    for (const Letter& l : w) {
        if (l.vertex < 1 || l.vertex > m())
            throw ValidationError("letter vertex " + std::to_string(l.vertex) + " out of range");
        if (!groups_[static_cast<size_t>(l.vertex - 1)].valid(l.elem))
            throw ValidationError("letter element " + std::to_string(l.elem) +
                                  " not in the group at vertex " + std::to_string(l.vertex));
    }
}

// ----------------------------------------------------------------- rewriting

namespace {

// Insert one nonidentity letter at the end of a reduced word, sliding it left
// past commuting letters; merge into the first same-vertex letter reached.
// The result is again reduced: a deleted letter cannot unblock a same-vertex
// pair, because everything scanned past commutes with the deleted vertex.
void insert_letter(const GraphProduct& gp, Word& acc, const Letter& l) {
    for (size_t j = acc.size(); j-- > 0;) {
        if (acc[j].vertex == l.vertex) {
            const LocalGroup& g = gp.group(l.vertex);
            long long prod = g.mul(acc[j].elem, l.elem);
            if (g.is_identity(prod))
                acc.erase(acc.begin() + static_cast<std::ptrdiff_t>(j));
            else
                acc[j].elem = prod;
            return;
        }
        if (!gp.commute(acc[j].vertex, l.vertex))
            break;
    }
    acc.push_back(l);
}

std::string encode_word(const Word& w) {
    std::string s;
    s.reserve(w.size() * 12);
    for (const Letter& l : w) {
        char buf[12];
        std::memcpy(buf, &l.vertex, 4);
        std::memcpy(buf + 4, &l.elem, 8);
        s.append(buf, 12);
    }
    return s;
}

Word strip_identities(const GraphProduct& gp, const Word& w) {
    Word out;
    out.reserve(w.size());
    for (const Letter& l : w)
        if (!gp.group(l.vertex).is_identity(l.elem))
            out.push_back(l);
    return out;
}

} // namespace

Word normalize(const GraphProduct& gp, const Word& input) {
    gp.validate_word(input);
    Word acc;
    acc.reserve(input.size());
    for (const Letter& l : input) {
        if (gp.group(l.vertex).is_identity(l.elem))
            continue;
        insert_letter(gp, acc, l);
    }
    // Canonical linearization: repeatedly emit the letter with the smallest
    // vertex among those with no earlier unemitted letter they depend on
    // (same vertex, or vertices that do not commute). Adjacent descending
    // exchanges alone can get stuck at a non-canonical word — on the path
    // 1-2-3 both 2,3,1 and 3,1,2 admit no improving single exchange — whereas
    // the greedy choice lands on the unique lexicographically least word of
    // the element, which in particular admits no improving exchange.
    Word out;
    out.reserve(acc.size());
    std::vector<bool> used(acc.size(), false);
    for (size_t step = 0; step < acc.size(); ++step) {
        size_t best = acc.size();
        for (size_t i = 0; i < acc.size(); ++i) {
            if (used[i])
                continue;
            bool available = true;
            for (size_t j = 0; j < i && available; ++j)
                available = used[j] || (acc[j].vertex != acc[i].vertex &&
                                        gp.commute(acc[j].vertex, acc[i].vertex));
            if (available && (best == acc.size() || acc[i].vertex < acc[best].vertex))
                best = i;
        }
        out.push_back(acc[best]);
        used[best] = true;
    }
    return out;
}

Word multiply(const GraphProduct& gp, const Word& a, const Word& b) {
    Word c = a;
    c.insert(c.end(), b.begin(), b.end());
    return normalize(gp, c);
}

Word invert(const GraphProduct& gp, const Word& a) {
    gp.validate_word(a);
    Word r;
    r.reserve(a.size());
    for (size_t i = a.size(); i-- > 0;)
        r.push_back({a[i].vertex, gp.group(a[i].vertex).inv(a[i].elem)});
    return normalize(gp, r);
}

long long project(const GraphProduct& gp, const Word& a, int i) {
    gp.validate_word(a);
    const LocalGroup& g = gp.group(i);
    long long acc = g.identity();
    for (const Letter& l : a)
        if (l.vertex == i)
            acc = g.mul(acc, l.elem);
    return acc;
}

std::vector<long long> ab(const GraphProduct& gp, const Word& a) {
    std::vector<long long> out(static_cast<size_t>(gp.m()));
    for (int i = 1; i <= gp.m(); ++i)
        out[static_cast<size_t>(i - 1)] = project(gp, a, i);
    return out;
}

SplitForm split(const GraphProduct& gp, const Word& g) {
    SplitForm s;
    s.gammas = ab(gp, g);
    Word h = normalize(gp, g);
    for (int i = 1; i <= gp.m(); ++i) {
        long long gamma = s.gammas[static_cast<size_t>(i - 1)];
        if (!gp.group(i).is_identity(gamma))
            h = multiply(gp, h, Word{{i, gp.group(i).inv(gamma)}});
    }
    s.h = h;
    return s;
}

Word unsplit(const GraphProduct& gp, const SplitForm& s) {
    if (s.gammas.size() != static_cast<size_t>(gp.m()))
        throw ValidationError("split form needs one local element per vertex");
    Word g = s.h;
    for (int i = gp.m(); i >= 1; --i) {
        long long gamma = s.gammas[static_cast<size_t>(i - 1)];
        if (!gp.group(i).is_identity(gamma))
            g = multiply(gp, g, Word{{i, gamma}});
    }
    return g;
}

// --------------------------------------------------------- kernel generators

namespace {

std::vector<long long> resolved_subset(const GraphProduct& gp,
                                       const std::vector<std::vector<long long>>& gen_subsets,
                                       int v) {
    if (static_cast<size_t>(v - 1) < gen_subsets.size() &&
        !gen_subsets[static_cast<size_t>(v - 1)].empty()) {
        const auto& sub = gen_subsets[static_cast<size_t>(v - 1)];
        for (long long e : sub)
            if (!gp.group(v).valid(e) || gp.group(v).is_identity(e))
                throw ValidationError("generating subset at vertex " + std::to_string(v) +
                                      " must contain valid nonidentity elements");
        return sub;
    }
    if (!gp.group(v).is_finite())
        throw ValidationError("empty generating subset at needed vertex " + std::to_string(v));
    return gp.group(v).nonidentity_elements();
}

// L_g(h) = g^{-1} h^{-1} g h as words.
Word left_commutator(const GraphProduct& gp, const Word& g, const Word& h) {
    return multiply(gp, multiply(gp, invert(gp, g), invert(gp, h)), multiply(gp, g, h));
}

} // namespace

std::vector<Word> kernel_generators(const GraphProduct& gp,
                                    const std::vector<std::vector<long long>>& gen_subsets) {
    int m = gp.m();
    if (m > 20)
        throw ValidationError("kernel generator scan limited to 20 vertices");
    std::vector<Word> out;
    for (VertexMask I = 0; I < (VertexMask{1} << m); ++I) {
        if (std::popcount(I) < 2)
            continue;
        FlagComplex sub = gp.complex().full_subcomplex(I);
        auto comps = sub.components();
        if (comps.size() < 2)
            continue;
        std::vector<int> verts = mask_to_vertices(I);
        int last = verts.back();
        std::vector<std::vector<long long>> choices;
        choices.reserve(verts.size());
        for (int v : verts)
            choices.push_back(resolved_subset(gp, gen_subsets, v));
        for (const auto& comp : comps) {
            if (std::find(comp.begin(), comp.end(), last) != comp.end())
                continue;
            int t_vertex = comp.front(); // smallest vertex of the component
            size_t t = 0;
            while (verts[t] != t_vertex)
                ++t;
            // Odometer over element assignments, last position fastest.
            std::vector<size_t> pick(verts.size(), 0);
            bool done = false;
            while (!done) {
                Word x{{t_vertex, choices[t][pick[t]]}};
                for (size_t l = verts.size(); l-- > 0;) {
                    if (l == t)
                        continue;
                    x = left_commutator(gp, Word{{verts[l], choices[l][pick[l]]}}, x);
                }
                out.push_back(std::move(x));
                done = true;
                for (size_t pos = verts.size(); pos-- > 0;) {
                    if (++pick[pos] < choices[pos].size()) {
                        done = false;
                        break;
                    }
                    pick[pos] = 0;
                }
            }
        }
    }
    return out;
}

// -------------------------------------------------------------- equal_oracle

bool equal_oracle(const GraphProduct& gp, const Word& u, const Word& v,
                  const OracleConfig& config) {
    gp.validate_word(u);
    gp.validate_word(v);
    Word su = strip_identities(gp, u);
    Word sv = strip_identities(gp, v);
    if (su.size() > config.max_len || sv.size() > config.max_len)
        throw ValidationError("equality oracle length bound exceeded");
    size_t cap = std::max(su.size(), sv.size());

    // Elements available for splits and insertions, per vertex.
    std::vector<std::vector<long long>> enums(static_cast<size_t>(gp.m()));
    std::vector<std::unordered_set<long long>> enum_sets(static_cast<size_t>(gp.m()));
    for (int w = 1; w <= gp.m(); ++w) {
        size_t idx = static_cast<size_t>(w - 1);
        if (idx < config.split_elems.size() && !config.split_elems[idx].empty())
            enums[idx] = config.split_elems[idx];
        else if (gp.group(w).is_finite())
            enums[idx] = gp.group(w).nonidentity_elements();
        for (long long e : enums[idx]) {
            if (!gp.group(w).valid(e) || gp.group(w).is_identity(e))
                throw ValidationError("oracle split enumeration must hold nonidentity elements");
            enum_sets[idx].insert(e);
        }
    }

    std::string target = encode_word(sv);
    std::unordered_set<std::string> visited;
    std::deque<Word> queue;
    visited.insert(encode_word(su));
    if (visited.count(target))
        return true;
    queue.push_back(std::move(su));

    auto offer = [&](Word&& w) -> bool {
        std::string key = encode_word(w);
        if (key == target)
            return true;
        if (visited.insert(std::move(key)).second)
            queue.push_back(std::move(w));
        return false;
    };

    while (!queue.empty()) {
        Word w = std::move(queue.front());
        queue.pop_front();
        size_t n = w.size();
        for (size_t i = 0; i + 1 < n; ++i) {
            if (w[i].vertex == w[i + 1].vertex) {
                const LocalGroup& g = gp.group(w[i].vertex);
                long long prod = g.mul(w[i].elem, w[i + 1].elem);
                Word nw;
                nw.reserve(n - 1);
                nw.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
                if (!g.is_identity(prod))
                    nw.push_back({w[i].vertex, prod});
                nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
                if (offer(std::move(nw)))
                    return true;
            } else if (gp.commute(w[i].vertex, w[i + 1].vertex)) {
                Word nw = w;
                std::swap(nw[i], nw[i + 1]);
                if (offer(std::move(nw)))
                    return true;
            }
        }
        if (n + 1 <= cap) {
            for (size_t i = 0; i < n; ++i) {
                const LocalGroup& g = gp.group(w[i].vertex);
                size_t idx = static_cast<size_t>(w[i].vertex - 1);
                for (long long h : enums[idx]) {
                    long long h2 = g.mul(g.inv(h), w[i].elem);
                    if (g.is_identity(h2) || enum_sets[idx].count(h2) == 0)
                        continue;
                    Word nw;
                    nw.reserve(n + 1);
                    nw.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
                    nw.push_back({w[i].vertex, h});
                    nw.push_back({w[i].vertex, h2});
                    nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end());
                    if (offer(std::move(nw)))
                        return true;
                }
            }
        }
        if (n + 2 <= cap) {
            for (size_t pos = 0; pos <= n; ++pos)
                for (int vx = 1; vx <= gp.m(); ++vx) {
                    const LocalGroup& g = gp.group(vx);
                    size_t idx = static_cast<size_t>(vx - 1);
                    for (long long h : enums[idx]) {
                        if (enum_sets[idx].count(g.inv(h)) == 0)
                            continue;
                        Word nw;
                        nw.reserve(n + 2);
                        nw.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
                        nw.push_back({vx, h});
                        nw.push_back({vx, g.inv(h)});
                        nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(pos), w.end());
                        if (offer(std::move(nw)))
                            return true;
                    }
                }
        }
    }
    return false;
}

// ------------------------------------------------------------- length census

LengthCensus length_census(const GraphProduct& gp, int n_max) {
    if (n_max < 0)
        throw ValidationError("census horizon must be >= 0");
    for (int v = 1; v <= gp.m(); ++v)
        if (!gp.group(v).is_finite())
            throw ValidationError("length census requires finite vertex groups");

    LengthCensus out;
    out.enumerated.assign(static_cast<size_t>(n_max) + 1, 0);
    out.predicted.assign(static_cast<size_t>(n_max) + 1, 0);

    // Route 1: walk actual elements, multiplying normal forms by letters.
    std::unordered_set<std::string> seen;
    std::deque<Word> queue;
    seen.insert(encode_word(Word{}));
    out.enumerated[0] = 1;
    queue.push_back(Word{});
    while (!queue.empty()) {
        Word w = std::move(queue.front());
        queue.pop_front();
        if (static_cast<int>(w.size()) >= n_max)
            continue;
        for (int v = 1; v <= gp.m(); ++v)
            for (long long e : gp.group(v).nonidentity_elements()) {
                Word nw = multiply(gp, w, Word{{v, e}});
                if (static_cast<int>(nw.size()) > n_max)
                    continue;
                if (seen.insert(encode_word(nw)).second) {
                    ++out.enumerated[nw.size()];
                    queue.push_back(std::move(nw));
                }
            }
    }

    // Route 2: count canonical reduced vertex sequences, weighting each
    // position by the number of nonidentity elements at its vertex. A
    // sequence is canonical exactly when no letter can slide left across
    // commuting letters onto its own vertex (a merge) or past a larger
    // vertex (a lexicographic improvement); appending v only ever creates
    // violations that involve v itself, so checking the new letter against
    // the commuting suffix it can slide across keeps the set prefix-closed.
    std::vector<int> seq;
    std::vector<unsigned long long> weight(static_cast<size_t>(gp.m()) + 1);
    for (int v = 1; v <= gp.m(); ++v)
        weight[static_cast<size_t>(v)] =
            static_cast<unsigned long long>(gp.group(v).order() - 1);
    out.predicted[0] = 1;
    auto extend_ok = [&](int v) {
        for (size_t j = seq.size(); j-- > 0;) {
            if (seq[j] == v)
                return false; // a merge would apply after sliding left
            if (!gp.commute(seq[j], v))
                break;
            if (v < seq[j])
                return false; // sliding left past seq[j] would be smaller
        }
        return true;
    };
    auto dfs = [&](auto&& self, unsigned long long product) -> void {
        if (static_cast<int>(seq.size()) == n_max)
            return;
        for (int v = 1; v <= gp.m(); ++v) {
            if (weight[static_cast<size_t>(v)] == 0 || !extend_ok(v))
                continue;
            unsigned long long p = product * weight[static_cast<size_t>(v)];
            seq.push_back(v);
            out.predicted[seq.size()] += p;
            self(self, p);
            seq.pop_back();
        }
    };
    dfs(dfs, 1);
    return out;
}

std::vector<Word> enumerate_ball(const GraphProduct& gp, int n_max) {
    for (int v = 1; v <= gp.m(); ++v)
        if (!gp.group(v).is_finite())
            throw ValidationError("ball enumeration requires finite vertex groups");
    std::vector<Word> out;
    std::unordered_set<std::string> seen;
    seen.insert(encode_word(Word{}));
    out.push_back(Word{});
    for (size_t head = 0; head < out.size(); ++head) {
        Word w = out[head];
        if (static_cast<int>(w.size()) >= n_max)
            continue;
        for (int v = 1; v <= gp.m(); ++v)
            for (long long e : gp.group(v).nonidentity_elements()) {
                Word nw = multiply(gp, w, Word{{v, e}});
                if (static_cast<int>(nw.size()) > n_max)
                    continue;
                if (seen.insert(encode_word(nw)).second)
                    out.push_back(std::move(nw));
            }
    }
    return out;
}

std::string word_str(const GraphProduct& gp, const Word& w) {
    if (w.empty())
        return "e";
    std::string s;
    for (const Letter& l : w) {
        s += "(" + std::to_string(l.vertex) + ":" +
             gp.group(l.vertex).elem_name(l.elem) + ")";
    }
    return s;
}

} // namespace graphprod
