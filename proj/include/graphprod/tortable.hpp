// A bigraded table of homological dimensions dim Tor_{s,n} together with the
// exact query range on which the producing computation is complete. Two
// independent producers fill such tables — closed-form evaluation over the
// flag complex and elimination on truncated bar complexes — and the library's
// central cross-checks compare them entry by entry on the shared range.
//
// Conventions: the row s = 0 is implicit (dimension 1 at n = 0, zero
// elsewhere); stored entries cover s >= 1 and omit zeros. A table produced
// from a truncated chain complex does not know the dimensions near its
// homological ceiling: the value at (s, n) needs complete chain groups at
// both (s, n) and (s + 1, n), and the latter is only guaranteed when
// s + 1 <= s_max or when every word with s + 1 entries already exceeds
// degree n (each entry has degree >= d_min, so that means
// (s + 1) * d_min > n). Closed-form tables carry no such caveat.

#ifndef GRAPHPROD_TORTABLE_HPP
#define GRAPHPROD_TORTABLE_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "graphprod/errors.hpp"

namespace graphprod {

struct TorTable {
    int s_max = 0;
    int n_max = 0;
    // Minimal degree of a positive-degree generator; n_max + 1 when there is
    // no positive-degree generator at all (every bar group is then empty).
    int d_min = 1;
    // True when the producer was a truncated chain complex (see above).
    bool truncated = false;
    std::string provenance; // "closed-form" or "bar-oracle"
    // (s, n) -> dimension, for s >= 1 only; zero dimensions are omitted.
    std::map<std::pair<int, int>, int> entries;

    bool trusted(int s, int n) const {
        if (s < 0 || n < 0 || s > s_max || n > n_max)
            return false;
        if (!truncated)
            return true;
        return s + 1 <= s_max || static_cast<long long>(s + 1) * d_min > n;
    }

    // dim Tor_{s,n}; TruncationError outside the trusted range.
    int dim(int s, int n) const {
        if (!trusted(s, n))
            throw TruncationError("Tor dimension at (" + std::to_string(s) + ", " +
                                  std::to_string(n) + ") is outside the trusted range");
        if (s == 0)
            return n == 0 ? 1 : 0;
        auto it = entries.find({s, n});
        return it == entries.end() ? 0 : it->second;
    }

    void set(int s, int n, int d) {
        if (d != 0)
            entries[{s, n}] = d;
    }

    // True when the two tables agree at every bidegree both of them trust.
    bool agrees_with(const TorTable& o) const {
        const int S = std::min(s_max, o.s_max);
        const int N = std::min(n_max, o.n_max);
        for (int s = 0; s <= S; ++s)
            for (int n = 0; n <= N; ++n)
                if (trusted(s, n) && o.trusted(s, n) && dim(s, n) != o.dim(s, n))
                    return false;
        return true;
    }

    // "Tor[s,n] = d" lines for the nonzero entries, sorted by (s, n).
    std::string str() const {
        if (entries.empty())
            return "(no nonzero Tor dimensions with s >= 1)";
        std::string out;
        for (const auto& [key, d] : entries) {
            if (!out.empty())
                out += "\n";
            out += "Tor[" + std::to_string(key.first) + "," + std::to_string(key.second) +
                   "] = " + std::to_string(d);
        }
        return out;
    }
};

} // namespace graphprod

#endif
