#include "graphprod/jobspec.hpp"

#include <initializer_list>
#include <string>
#include <vector>

#include "json.hpp"

#include "graphprod/errors.hpp"

namespace graphprod {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) {
    throw ValidationError(msg);
}

// Strict schema: unknown keys are rejected so typos never silently change a
// job's meaning.
void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        bool ok = false;
        for (const char* a : allowed)
            if (key == a)
                ok = true;
        if (!ok)
            fail("unknown key '" + key + "' in " + where);
    }
}

const json& get_required(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end())
        fail("missing key '" + std::string(key) + "' in " + where);
    return *it;
}

long long get_int(const json& v, const std::string& where) {
    if (!v.is_number_integer())
        fail(where + " must be an integer");
    return v.get<long long>();
}

std::string get_str(const json& v, const std::string& where) {
    if (!v.is_string())
        fail(where + " must be a string");
    return v.get<std::string>();
}

Rational parse_rational(const json& v, const std::string& where) {
    if (v.is_number_integer())
        return Rational(v.get<long long>());
    if (v.is_string()) {
        try {
            Rational q(v.get<std::string>());
            return q;
        } catch (const std::exception&) {
            fail(where + ": '" + v.get<std::string>() + "' is not an integer or p/q fraction");
        }
    }
    fail(where + " must be an integer or a \"p/q\" string");
}

FlagComplex parse_complex(const json& c) {
    if (!c.is_object())
        fail("'complex' must be a map");
    check_keys(c, {"m", "edges"}, "'complex'");
    int m = static_cast<int>(get_int(get_required(c, "m", "'complex'"), "'complex.m'"));
    std::vector<std::pair<int, int>> edges;
    if (auto it = c.find("edges"); it != c.end()) {
        if (!it->is_array())
            fail("'complex.edges' must be a list of [u, v] pairs");
        for (const json& e : *it) {
            if (!e.is_array() || e.size() != 2)
                fail("'complex.edges' entries must be [u, v] pairs");
            edges.push_back({static_cast<int>(get_int(e[0], "edge endpoint")),
                             static_cast<int>(get_int(e[1], "edge endpoint"))});
        }
    }
    return FlagComplex(m, edges);
}

LocalGroup parse_group(const json& g, int vertex) {
    const std::string where = "group at vertex " + std::to_string(vertex);
    if (!g.is_object())
        fail(where + " must be a map");
    check_keys(g, {"kind", "order", "names", "identity", "table"}, where);
    const std::string kind = get_str(get_required(g, "kind", where), where + " 'kind'");
    if (kind == "cyclic")
        return LocalGroup::cyclic(get_int(get_required(g, "order", where), where + " 'order'"));
    if (kind == "integers")
        return LocalGroup::infinite_cyclic();
    if (kind == "table") {
        const json& names_j = get_required(g, "names", where);
        if (!names_j.is_array())
            fail(where + " 'names' must be a list");
        std::vector<std::string> names;
        for (const json& n : names_j)
            names.push_back(get_str(n, where + " name"));
        int identity = static_cast<int>(
            get_int(get_required(g, "identity", where), where + " 'identity'"));
        const json& table_j = get_required(g, "table", where);
        if (!table_j.is_array())
            fail(where + " 'table' must be a list of rows");
        std::vector<std::vector<int>> table;
        for (const json& row_j : table_j) {
            if (!row_j.is_array())
                fail(where + " 'table' rows must be lists");
            std::vector<int> row;
            for (const json& cell : row_j)
                row.push_back(static_cast<int>(get_int(cell, where + " table cell")));
            table.push_back(std::move(row));
        }
        return LocalGroup::finite_table(std::move(names), identity, std::move(table));
    }
    fail(where + ": unknown kind '" + kind + "' (expected cyclic, integers, or table)");
}

GradedAlgebraSpec parse_algebra(const json& a, int vertex, int default_limit) {
    const std::string where = "algebra at vertex " + std::to_string(vertex);
    if (!a.is_object())
        fail(where + " must be a map");
    if (a.contains("builtin")) {
        check_keys(a, {"builtin", "degree", "order", "limit"}, where);
        const std::string builtin = get_str(a["builtin"], where + " 'builtin'");
        int d = static_cast<int>(get_int(get_required(a, "degree", where), where + " 'degree'"));
        // Builtins size their basis tables to the job's degree window unless
        // an explicit 'limit' asks for more.
        int N = a.contains("limit")
                    ? static_cast<int>(get_int(a["limit"], where + " 'limit'"))
                    : default_limit;
        if (builtin == "exterior") {
            if (a.contains("order"))
                fail(where + ": 'order' applies only to trunc_poly");
            return exterior_algebra(d, N);
        }
        if (builtin == "trunc_poly")
            return trunc_poly_algebra(
                d, static_cast<int>(get_int(get_required(a, "order", where), where + " 'order'")),
                N);
        if (builtin == "free") {
            if (a.contains("order"))
                fail(where + ": 'order' applies only to trunc_poly");
            return free_algebra(d, N);
        }
        fail(where + ": unknown builtin '" + builtin +
             "' (expected exterior, trunc_poly, or free)");
    }
    check_keys(a, {"name", "limit", "complete", "basis", "rules", "hilbert"}, where);
    const std::string name = get_str(get_required(a, "name", where), where + " 'name'");
    int N = static_cast<int>(get_int(get_required(a, "limit", where), where + " 'limit'"));
    const json& complete_j = get_required(a, "complete", where);
    if (!complete_j.is_boolean())
        fail(where + " 'complete' must be true or false");
    const json& basis_j = get_required(a, "basis", where);
    if (!basis_j.is_array())
        fail(where + " 'basis' must be a list of per-degree name lists");
    std::vector<std::vector<std::string>> basis;
    for (const json& level : basis_j) {
        if (!level.is_array())
            fail(where + " 'basis' entries must be lists of names");
        std::vector<std::string> names;
        for (const json& n : level)
            names.push_back(get_str(n, where + " basis name"));
        basis.push_back(std::move(names));
    }
    std::vector<ProductRule> rules;
    if (auto it = a.find("rules"); it != a.end()) {
        if (!it->is_array())
            fail(where + " 'rules' must be a list");
        for (const json& r : *it) {
            if (!r.is_object())
                fail(where + " rules must be maps");
            check_keys(r, {"left", "right", "result"}, where + " rule");
            ProductRule rule;
            rule.left = get_str(get_required(r, "left", where), where + " rule 'left'");
            rule.right = get_str(get_required(r, "right", where), where + " rule 'right'");
            const json& result = get_required(r, "result", where);
            if (!result.is_array())
                fail(where + " rule 'result' must be a list of [coeff, name] pairs");
            for (const json& term : result) {
                if (!term.is_array() || term.size() != 2)
                    fail(where + " rule terms must be [coeff, name] pairs");
                rule.result.push_back({parse_rational(term[0], where + " rule coefficient"),
                                       get_str(term[1], where + " rule term name")});
            }
            rules.push_back(std::move(rule));
        }
    }
    std::optional<RationalFunction> hilbert;
    if (auto it = a.find("hilbert"); it != a.end()) {
        if (!it->is_object())
            fail(where + " 'hilbert' must be a map with 'num' and 'den'");
        check_keys(*it, {"num", "den"}, where + " 'hilbert'");
        const json& num_j = get_required(*it, "num", where);
        const json& den_j = get_required(*it, "den", where);
        if (!num_j.is_array() || !den_j.is_array())
            fail(where + " 'hilbert' num/den must be coefficient lists");
        std::vector<Rational> num, den;
        for (const json& q : num_j)
            num.push_back(parse_rational(q, where + " hilbert numerator"));
        for (const json& q : den_j)
            den.push_back(parse_rational(q, where + " hilbert denominator"));
        hilbert = RationalFunction(std::move(num), std::move(den));
    }
    return GradedAlgebraSpec(name, N, complete_j.get<bool>(), std::move(basis),
                             std::move(rules), std::move(hilbert));
}

// One word letter or monomial letter: [vertex, element], the element given
// by numeric code or by name.
template <typename Elem, typename Resolve>
std::vector<Elem> parse_letter_list(const json& list, int m, const std::string& where,
                                    const Resolve& resolve) {
    if (!list.is_array())
        fail(where + " must be a list of [vertex, element] letters");
    std::vector<Elem> out;
    for (const json& l : list) {
        if (!l.is_array() || l.size() != 2)
            fail(where + " letters must be [vertex, element] pairs");
        int v = static_cast<int>(get_int(l[0], where + " letter vertex"));
        if (v < 1 || v > m)
            fail(where + ": vertex " + std::to_string(v) + " out of range 1.." +
                 std::to_string(m));
        out.push_back(resolve(v, l[1]));
    }
    return out;
}

} // namespace

Field parse_field_name(const std::string& name) {
    if (name == "q" || name == "rational")
        return Field(0);
    if (name.size() > 2 && name.compare(0, 2, "gf") == 0 &&
        name.find_first_not_of("0123456789", 2) == std::string::npos) {
        try {
            return Field(static_cast<uint32_t>(std::stoul(name.substr(2))));
        } catch (const std::out_of_range&) {
            fail("field characteristic out of range in '" + name + "'");
        }
    }
    fail("unknown field '" + name + "' (expected q, gf2, gf3, or gf<p>)");
}

JobSpec parse_jobspec(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded())
        fail("job document is not a valid structured-text tree");
    if (!doc.is_object())
        fail("job document must be a map");
    check_keys(doc,
               {"complex", "groups", "algebras", "gens", "field", "n_max", "s_max", "command",
                "words", "monomials", "variant", "vertex", "list"},
               "the job document");

    JobSpec job;
    job.complex = parse_complex(get_required(doc, "complex", "the job document"));
    const int m = job.complex.ambient_vertex_count();

    if (auto it = doc.find("n_max"); it != doc.end()) {
        job.n_max = static_cast<int>(get_int(*it, "'n_max'"));
        if (job.n_max < 0)
            fail("'n_max' must be nonnegative");
    }
    if (auto it = doc.find("s_max"); it != doc.end()) {
        job.s_max = static_cast<int>(get_int(*it, "'s_max'"));
        if (*job.s_max < 0)
            fail("'s_max' must be nonnegative");
    }

    if (auto it = doc.find("groups"); it != doc.end()) {
        if (!it->is_array())
            fail("'groups' must be a list with one entry per vertex");
        int v = 1;
        for (const json& g : *it)
            job.groups.push_back(parse_group(g, v++));
        if (static_cast<int>(job.groups.size()) != m)
            fail("'groups' lists " + std::to_string(job.groups.size()) + " entries for " +
                 std::to_string(m) + " vertices");
    }
    if (auto it = doc.find("algebras"); it != doc.end()) {
        if (!it->is_array())
            fail("'algebras' must be a list with one entry per vertex");
        int v = 1;
        for (const json& a : *it)
            job.algebras.push_back(parse_algebra(a, v++, job.n_max));
        if (static_cast<int>(job.algebras.size()) != m)
            fail("'algebras' lists " + std::to_string(job.algebras.size()) + " entries for " +
                 std::to_string(m) + " vertices");
    }
    if (!job.has_groups() && !job.has_algebras())
        fail("the job document needs a 'groups' or 'algebras' payload");

    if (auto it = doc.find("gens"); it != doc.end()) {
        if (!job.has_groups())
            fail("'gens' requires a group payload");
        if (!it->is_array() || static_cast<int>(it->size()) != m)
            fail("'gens' must list one element subset per vertex");
        for (int v = 1; v <= m; ++v) {
            const json& sub = (*it)[static_cast<size_t>(v - 1)];
            if (!sub.is_array())
                fail("'gens' entries must be lists of elements");
            std::vector<long long> elems;
            for (const json& e : sub) {
                long long code = e.is_string()
                                     ? job.groups[static_cast<size_t>(v - 1)].parse_elem(
                                           e.get<std::string>())
                                     : get_int(e, "'gens' element");
                if (!job.groups[static_cast<size_t>(v - 1)].valid(code))
                    fail("'gens' element " + std::to_string(code) + " invalid at vertex " +
                         std::to_string(v));
                elems.push_back(code);
            }
            job.gen_subsets.push_back(std::move(elems));
        }
    }

    if (auto it = doc.find("field"); it != doc.end())
        job.field = parse_field_name(get_str(*it, "'field'"));
    if (auto it = doc.find("command"); it != doc.end())
        job.command = get_str(*it, "'command'");
    if (auto it = doc.find("variant"); it != doc.end())
        job.variant = get_str(*it, "'variant'");
    if (auto it = doc.find("vertex"); it != doc.end())
        job.vertex = static_cast<int>(get_int(*it, "'vertex'"));
    if (auto it = doc.find("list"); it != doc.end()) {
        if (!it->is_boolean())
            fail("'list' must be true or false");
        job.list_basis = it->get<bool>();
    }

    if (auto it = doc.find("words"); it != doc.end()) {
        if (!job.has_groups())
            fail("'words' requires a group payload");
        if (!it->is_array())
            fail("'words' must be a list of words");
        int k = 1;
        for (const json& w : *it) {
            const std::string where = "word " + std::to_string(k++);
            job.words.push_back(parse_letter_list<Letter>(
                w, m, where, [&](int v, const json& e) -> Letter {
                    const LocalGroup& g = job.groups[static_cast<size_t>(v - 1)];
                    long long code = e.is_string() ? g.parse_elem(e.get<std::string>())
                                                   : get_int(e, where + " letter element");
                    if (!g.valid(code))
                        fail(where + ": element " + std::to_string(code) +
                             " invalid at vertex " + std::to_string(v));
                    return Letter{v, code};
                }));
        }
    }
    if (auto it = doc.find("monomials"); it != doc.end()) {
        if (!job.has_algebras())
            fail("'monomials' requires an algebra payload");
        if (!it->is_array())
            fail("'monomials' must be a list of monomials");
        int k = 1;
        for (const json& w : *it) {
            const std::string where = "monomial " + std::to_string(k++);
            job.monomials.push_back(parse_letter_list<GLetter>(
                w, m, where, [&](int v, const json& e) -> GLetter {
                    const GradedAlgebraSpec& a = job.algebras[static_cast<size_t>(v - 1)];
                    int elem = e.is_string()
                                   ? a.find_elem(e.get<std::string>())
                                   : static_cast<int>(get_int(e, where + " letter element"));
                    if (elem < 0 || elem >= a.basis_size())
                        fail(where + ": element index " + std::to_string(elem) +
                             " out of range at vertex " + std::to_string(v));
                    return GLetter{v, elem};
                }));
        }
    }
    return job;
}

} // namespace graphprod
