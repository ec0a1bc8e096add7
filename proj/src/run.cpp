#include "graphprod/run.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "graphprod/barcomplex.hpp"
#include "graphprod/errors.hpp"
#include "graphprod/homology.hpp"
#include "graphprod/torform.hpp"

namespace graphprod {

namespace {

using nlohmann::json;

// Deterministic caps for the sampled verify-all cross-checks.
constexpr size_t kMaxOracleWords = 60;
constexpr size_t kMaxOraclePairs = 1500;
constexpr size_t kMaxRoundTripWords = 200;

std::string field_label(const Field& f) {
    return f.prime() == 0 ? "q" : "gf" + std::to_string(f.prime());
}

std::string rational_label(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

// Writes a pre-rendered block, guaranteeing it ends in exactly one newline.
void append_block(std::ostream& hs, const std::string& block) {
    hs << block;
    if (block.empty() || block.back() != '\n')
        hs << "\n";
}

// ------------------------------------------------------------ payload access

void require_groups(const JobSpec& job, const std::string& command) {
    if (!job.has_groups())
        throw ValidationError("command '" + command + "' requires a group payload");
}

void require_algebras(const JobSpec& job, const std::string& command) {
    if (!job.has_algebras())
        throw ValidationError("command '" + command + "' requires an algebra payload");
}

void require_words(const JobSpec& job, const std::string& command, size_t at_least) {
    if (job.words.size() < at_least)
        throw ValidationError("command '" + command + "' needs at least " +
                              std::to_string(at_least) + " entries under 'words'");
}

GraphProduct make_gp(const JobSpec& job) {
    return GraphProduct(job.complex, job.groups);
}

AlgebraProduct make_ap(const JobSpec& job) {
    return AlgebraProduct(job.complex, job.algebras);
}

std::vector<std::vector<long long>> effective_gens(const JobSpec& job) {
    if (!job.gen_subsets.empty())
        return job.gen_subsets;
    return std::vector<std::vector<long long>>(
        static_cast<size_t>(job.complex.ambient_vertex_count()));
}

// Homological bound: the supplied s_max, or the smallest window that settles
// every bidegree with n <= n_max (derived from the minimal positive
// generator degree over the vertex algebras).
int homological_bound(const JobSpec& job) {
    if (job.s_max)
        return *job.s_max;
    int d = job.n_max + 1;
    for (int v : job.complex.vertices()) {
        const GradedAlgebraSpec& a = job.algebras[static_cast<size_t>(v) - 1];
        if (a.basis_size() > 1)
            d = std::min(d, a.degree(1));
    }
    return job.n_max / std::max(d, 1) + 1;
}

// --------------------------------------------------------------- serializers

json word_json(const Word& w) {
    json arr = json::array();
    for (const Letter& l : w)
        arr.push_back({l.vertex, l.elem});
    return arr;
}

json monomial_json(const Monomial& mono) {
    json arr = json::array();
    for (const GLetter& l : mono)
        arr.push_back({l.vertex, l.elem});
    return arr;
}

json series_json(const TruncatedSeries& s) {
    json arr = json::array();
    for (int n = 0; n <= s.trunc_degree(); ++n)
        arr.push_back(rational_label(s.coeff(n)));
    return arr;
}

std::string series_label(const TruncatedSeries& s) {
    std::ostringstream os;
    for (int n = 0; n <= s.trunc_degree(); ++n)
        os << (n ? " " : "") << rational_label(s.coeff(n));
    return os.str();
}

json table_json(const TorTable& t) {
    json entries = json::array();
    for (const auto& [sn, d] : t.entries)
        entries.push_back({sn.first, sn.second, d});
    return json{{"s_max", t.s_max},         {"n_max", t.n_max},
                {"d_min", t.d_min},         {"truncated", t.truncated},
                {"provenance", t.provenance}, {"entries", entries}};
}

std::string table_label(const TorTable& t) {
    std::ostringstream os;
    os << "window: s <= " << t.s_max << ", n <= " << t.n_max << "\n"
       << "d_min: " << t.d_min << "\n"
       << "truncated: "
       << (t.truncated ? "yes (bidegrees outside the trusted range refuse queries)"
                       : "no (exact on the whole window)")
       << "\n"
       << "provenance: " << t.provenance << "\n"
       << t.str();
    return os.str();
}

// ----------------------------------------------------------- group commands

void cmd_normalize(const JobSpec& job, const GraphProduct& gp, json& out, std::ostream& hs) {
    json words = json::array(), strings = json::array();
    int k = 1;
    for (const Word& w : job.words) {
        const Word nf = normalize(gp, w);
        hs << "word " << k++ << ": " << word_str(gp, nf) << "\n";
        words.push_back(word_json(nf));
        strings.push_back(word_str(gp, nf));
    }
    out["words"] = words;
    out["strings"] = strings;
}

void cmd_multiply(const JobSpec& job, const GraphProduct& gp, json& out, std::ostream& hs) {
    Word acc = normalize(gp, job.words.front());
    for (size_t i = 1; i < job.words.size(); ++i)
        acc = multiply(gp, acc, job.words[i]);
    hs << "product: " << word_str(gp, acc) << "\n";
    out["word"] = word_json(acc);
    out["string"] = word_str(gp, acc);
}

void cmd_invert(const JobSpec& job, const GraphProduct& gp, json& out, std::ostream& hs) {
    json words = json::array(), strings = json::array();
    int k = 1;
    for (const Word& w : job.words) {
        const Word inv = invert(gp, w);
        hs << "word " << k++ << ": " << word_str(gp, inv) << "\n";
        words.push_back(word_json(inv));
        strings.push_back(word_str(gp, inv));
    }
    out["words"] = words;
    out["strings"] = strings;
}

void cmd_project(const JobSpec& job, const GraphProduct& gp, json& out, std::ostream& hs) {
    if (job.vertex < 1 || job.vertex > gp.m())
        throw ValidationError("command 'project' needs 'vertex' in 1.." +
                              std::to_string(gp.m()));
    json codes = json::array(), names = json::array();
    int k = 1;
    for (const Word& w : job.words) {
        const long long c = project(gp, w, job.vertex);
        hs << "word " << k++ << ": " << gp.group(job.vertex).elem_name(c) << " (code " << c
           << ")\n";
        codes.push_back(c);
        names.push_back(gp.group(job.vertex).elem_name(c));
    }
    out["vertex"] = job.vertex;
    out["codes"] = codes;
    out["names"] = names;
}

void cmd_split(const JobSpec& job, const GraphProduct& gp, json& out, std::ostream& hs) {
    json parts = json::array();
    int k = 1;
    for (const Word& w : job.words) {
        const SplitForm s = split(gp, w);
        if (normalize(gp, unsplit(gp, s)) != normalize(gp, w))
            throw InternalCheckError("split reconstruction failed for word " +
                                     std::to_string(k));
        hs << "word " << k++ << ": h = " << word_str(gp, s.h) << "; gamma =";
        json gammas = json::array();
        for (int v = 1; v <= gp.m(); ++v) {
            hs << " " << gp.group(v).elem_name(s.gammas[static_cast<size_t>(v) - 1]);
            gammas.push_back(s.gammas[static_cast<size_t>(v) - 1]);
        }
        hs << "\n";
        parts.push_back(json{{"h", word_json(s.h)},
                             {"h_string", word_str(gp, s.h)},
                             {"gammas", gammas}});
    }
    out["parts"] = parts;
}

void cmd_kernel_gens(const JobSpec& job, const GraphProduct& gp, json& out, std::ostream& hs) {
    const std::vector<Word> gens = kernel_generators(gp, effective_gens(job));
    hs << "count: " << gens.size() << "\n";
    json words = json::array(), strings = json::array();
    int k = 1;
    for (const Word& g : gens) {
        hs << "gen " << k++ << ": " << word_str(gp, g) << "\n";
        words.push_back(word_json(g));
        strings.push_back(word_str(gp, g));
    }
    out["count"] = gens.size();
    out["words"] = words;
    out["strings"] = strings;
}

void cmd_equal_oracle(const JobSpec& job, const GraphProduct& gp, json& out, std::ostream& hs) {
    if (job.words.size() % 2 != 0)
        throw ValidationError("command 'equal-oracle' compares consecutive pairs; 'words' "
                              "must have even length");
    OracleConfig cfg;
    cfg.split_elems = effective_gens(job);
    json results = json::array();
    for (size_t i = 0; i + 1 < job.words.size(); i += 2) {
        const bool eq = equal_oracle(gp, job.words[i], job.words[i + 1], cfg);
        hs << "pair " << (i / 2 + 1) << ": " << (eq ? "equal" : "different") << "\n";
        results.push_back(eq);
    }
    out["equal"] = results;
}

void cmd_length_census(const JobSpec& job, const GraphProduct& gp, json& out,
                       std::ostream& hs) {
    const LengthCensus census = length_census(gp, job.n_max);
    json enumerated = json::array(), predicted = json::array();
    for (size_t n = 0; n < census.enumerated.size(); ++n) {
        hs << "n=" << n << ": enumerated=" << census.enumerated[n]
           << " predicted=" << census.predicted[n] << "\n";
        enumerated.push_back(census.enumerated[n]);
        predicted.push_back(census.predicted[n]);
        if (census.enumerated[n] != census.predicted[n])
            throw InternalCheckError("length census mismatch at n=" + std::to_string(n));
    }
    hs << "agree: yes\n";
    out["enumerated"] = enumerated;
    out["predicted"] = predicted;
    out["agree"] = true;
}

// ---------------------------------------------------------- algebra commands

void cmd_lex_order(const JobSpec& job, const AlgebraProduct& ap, json& out, std::ostream& hs) {
    if (job.monomials.empty())
        throw ValidationError("command 'lex-order' needs entries under 'monomials'");
    json results = json::array();
    int k = 1;
    for (const Monomial& mono : job.monomials) {
        const SignedMonomialSum s = gp_normalize(ap, job.field.one(), mono);
        hs << "monomial " << k++ << ": " << s.str(ap) << "\n";
        json terms = json::array();
        for (const auto& [m, c] : s.terms)
            terms.push_back({c.str(), monomial_json(m)});
        results.push_back(json{{"string", s.str(ap)}, {"terms", terms}});
    }
    out["results"] = results;
}

void cmd_gp_basis(const JobSpec& job, const AlgebraProduct& ap, json& out, std::ostream& hs) {
    json counts = json::array(), listing = json::array();
    for (int n = 0; n <= job.n_max; ++n) {
        std::vector<Monomial> monos;
        const long long count = gp_basis_count(ap, n, job.list_basis ? &monos : nullptr);
        hs << "n=" << n << ": " << count << "\n";
        counts.push_back(count);
        if (job.list_basis) {
            json level = json::array();
            for (const Monomial& m : monos) {
                hs << "  " << monomial_str(ap, m) << "\n";
                level.push_back(json{{"string", monomial_str(ap, m)},
                                     {"letters", monomial_json(m)}});
            }
            listing.push_back(level);
        }
    }
    out["counts"] = counts;
    if (job.list_basis)
        out["basis"] = listing;
}

void cmd_hilbert(const JobSpec& job, const AlgebraProduct& ap, json& out, std::ostream& hs) {
    const TruncatedSeries s = hilbert_series(ap, job.n_max);
    hs << "coefficients: " << series_label(s) << "\n";
    out["coefficients"] = series_json(s);
}

void cmd_tor(const JobSpec& job, const std::string& command, json& out, std::ostream& hs) {
    const int S = homological_bound(job);
    TorTable t = [&] {
        if (job.variant == "aprime")
            return command == "tor-closed"
                       ? tor_Aprime_closed(job.complex, job.algebras, S, job.n_max, job.field)
                       : polyhedral_bar(job.complex, job.algebras, S, job.n_max, job.field,
                                        BarVariant::APrime)
                             .homology_table();
        if (job.variant == "ak")
            return command == "tor-closed"
                       ? tor_AK_closed(job.complex, job.algebras, S, job.n_max, job.field)
                       : polyhedral_bar(job.complex, job.algebras, S, job.n_max, job.field,
                                        BarVariant::AK)
                             .homology_table();
        throw ValidationError("command '" + command +
                              "' needs 'variant' set to \"aprime\" or \"ak\"");
    }();
    hs << "variant: " << job.variant << "\n";
    append_block(hs, table_label(t));
    out["variant"] = job.variant;
    out["table"] = table_json(t);
}

void cmd_ep_series(const JobSpec& job, json& out, std::ostream& hs) {
    const EpSeriesPair pair =
        ep_series_Aprime(job.complex, job.algebras, job.n_max, job.field);
    const TruncatedSeries ak = ep_series_AK(job.complex, job.algebras, job.n_max, job.field);
    hs << "1/P(A'): " << series_label(pair.inverse) << "\n"
       << "P(A'): " << series_label(pair.series) << "\n"
       << "P(A^K): " << series_label(ak) << "\n";
    out["inverse_aprime"] = series_json(pair.inverse);
    out["aprime"] = series_json(pair.series);
    out["ak"] = series_json(ak);
}

void cmd_min_generators(const JobSpec& job, json& out, std::ostream& hs) {
    const GeneratorList gl = min_generators_Aprime(job.complex, job.algebras, job.n_max);
    hs << "count: " << gl.entries.size() << "\n";
    for (const auto& [deg, count] : gl.count_by_degree())
        hs << "degree " << deg << ": " << count << "\n";
    append_block(hs, gl.str());
    json entries = json::array();
    for (const BracketGenerator& g : gl.entries)
        entries.push_back(json{{"subset", g.subset},
                               {"pivot", g.pivot},
                               {"elems", g.elems},
                               {"degree", g.degree},
                               {"expr", g.expr}});
    out["count"] = gl.entries.size();
    out["entries"] = entries;
}

void cmd_check_acyclic(const JobSpec& job, json& out, std::ostream& hs) {
    const AcyclicityReport rep = check_acyclic_full(job.complex, job.algebras,
                                                    homological_bound(job), job.n_max,
                                                    job.field);
    if (!rep.passed)
        throw InternalCheckError("full-coefficient acyclicity failed:\n" + rep.str());
    append_block(hs, rep.str());
    out["passed"] = rep.passed;
    out["blocks_checked"] = rep.blocks_checked;
}

// ---------------------------------------------------------- shared commands

void cmd_chordal(const JobSpec& job, json& out, std::ostream& hs) {
    const bool c = job.complex.is_chordal();
    hs << "chordal: " << (c ? "yes" : "no") << "\n";
    out["chordal"] = c;
}

void cmd_homology(const JobSpec& job, json& out, std::ostream& hs) {
    const HomologyProfile prof = reduced_homology(job.complex, job.field);
    hs << "field: " << field_label(job.field) << "\n";
    append_block(hs, prof.str());
    json dims = json::array();
    for (const auto& [d, h] : prof.dims)
        dims.push_back({d, h});
    out["field"] = field_label(job.field);
    out["dims"] = dims;
    out["empty_complex"] = prof.empty_complex;
}

void cmd_is_free(const JobSpec& job, json& out, std::ostream& hs) {
    bool free = false;
    std::string criterion;
    if (job.variant == "algebra") {
        free = is_free_Aprime(job.complex, job.field);
        criterion = "vanishing first reduced homology of every full subcomplex over " +
                    field_label(job.field);
    } else if (job.variant == "group") {
        free = is_free_H_groups(job.complex);
        criterion = "chordal 1-skeleton";
    } else {
        throw ValidationError(
            "command 'is-free' needs 'variant' set to \"algebra\" or \"group\"");
    }
    hs << "free: " << (free ? "yes" : "no") << "\ncriterion: " << criterion << "\n";
    out["free"] = free;
    out["criterion"] = criterion;
}

// -------------------------------------------------------------- verify-all

struct CheckRow {
    std::string name;
    bool ran = false;       // false = skipped
    bool passed = false;    // meaningful when ran
    long long comparisons = 0;
    std::string note;       // skip reason or failure detail

    explicit CheckRow(std::string n, bool r = false) : name(std::move(n)), ran(r) {}
};

// Number of bidegrees two tables can both answer for; used to report how
// much ground an agreement check actually covered.
long long overlap_cells(const TorTable& a, const TorTable& b) {
    long long cells = 0;
    for (int s = 0; s <= std::min(a.s_max, b.s_max); ++s)
        for (int n = 0; n <= std::min(a.n_max, b.n_max); ++n)
            if (a.trusted(s, n) && b.trusted(s, n))
                ++cells;
    return cells;
}

std::vector<CheckRow> algebra_checks(const JobSpec& job) {
    std::vector<CheckRow> rows;
    const int N = job.n_max;
    const int S = homological_bound(job);
    const AlgebraProduct ap = make_ap(job);

    {
        CheckRow r("hilbert-vs-ep-series", true);
        r.passed = ep_series_AK(job.complex, job.algebras, N, job.field) ==
                   hilbert_series(ap, N);
        r.comparisons = N + 1;
        rows.push_back(std::move(r));
    }
    {
        CheckRow r("tor-aprime-closed-vs-oracle", true);
        const TorTable closed =
            tor_Aprime_closed(job.complex, job.algebras, S, N, job.field);
        const TorTable oracle = polyhedral_bar(job.complex, job.algebras, S, N, job.field,
                                               BarVariant::APrime)
                                    .homology_table();
        r.passed = closed.agrees_with(oracle);
        r.comparisons = overlap_cells(closed, oracle);
        rows.push_back(std::move(r));
    }
    {
        CheckRow r("tor-ak-closed-vs-oracle", true);
        const TorTable closed = tor_AK_closed(job.complex, job.algebras, S, N, job.field);
        const TorTable oracle =
            polyhedral_bar(job.complex, job.algebras, S, N, job.field, BarVariant::AK)
                .homology_table();
        r.passed = closed.agrees_with(oracle);
        r.comparisons = overlap_cells(closed, oracle);
        rows.push_back(std::move(r));
    }
    {
        CheckRow r("alternating-tor-vs-census", true);
        // The alternating sum needs every homological row with s * d_min <= N,
        // so the table is built with the full-coverage bound rather than S.
        int d = N + 1;
        for (int v : job.complex.vertices()) {
            const GradedAlgebraSpec& a = job.algebras[static_cast<size_t>(v) - 1];
            if (a.basis_size() > 1)
                d = std::min(d, a.degree(1));
        }
        const TorTable t = tor_AK_closed(job.complex, job.algebras,
                                         N / std::max(d, 1) + 1, N, job.field);
        r.passed = tor_alternating_series(t, N) == hilbert_series(ap, N).invert();
        r.comparisons = N + 1;
        rows.push_back(std::move(r));
    }
    {
        CheckRow r("acyclic-full-coefficients", true);
        const AcyclicityReport rep =
            check_acyclic_full(job.complex, job.algebras, S, N, job.field);
        r.passed = rep.passed;
        r.comparisons = rep.blocks_checked;
        if (!rep.passed)
            r.note = rep.str();
        rows.push_back(std::move(r));
    }
    {
        CheckRow r("generator-count-vs-tor-row", true);
        const TorTable t = tor_Aprime_closed(job.complex, job.algebras, 1, N, job.field);
        std::map<int, int> row;
        for (const auto& [sn, dcount] : t.entries)
            if (sn.first == 1)
                row[sn.second] = dcount;
        r.passed =
            min_generators_Aprime(job.complex, job.algebras, N).count_by_degree() == row;
        r.comparisons = N;
        rows.push_back(std::move(r));
    }
    {
        CheckRow r("freeness-criteria-agree", true);
        r.passed = is_free_Aprime(job.complex, job.field) == is_free_H_groups(job.complex);
        r.comparisons = 1;
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<CheckRow> group_checks(const JobSpec& job) {
    std::vector<CheckRow> rows;
    const GraphProduct gp = make_gp(job);
    bool all_finite = true;
    for (int v = 1; v <= gp.m(); ++v)
        if (!gp.group(v).is_finite())
            all_finite = false;
    const int ball_len = std::min(job.n_max, 3);

    {
        CheckRow r("census-enumerated-vs-predicted");
        if (!all_finite) {
            r.note = "infinite vertex group";
        } else {
            r.ran = true;
            const LengthCensus census = length_census(gp, std::min(job.n_max, 6));
            r.passed = census.enumerated == census.predicted;
            r.comparisons = static_cast<long long>(census.enumerated.size());
        }
        rows.push_back(std::move(r));
    }
    {
        CheckRow r("kernel-gens-in-kernel");
        if (!all_finite && job.gen_subsets.empty()) {
            r.note = "infinite vertex group without 'gens'";
        } else {
            r.ran = true;
            r.passed = true;
            for (const Word& g : kernel_generators(gp, effective_gens(job))) {
                const std::vector<long long> image = ab(gp, g);
                for (int v = 1; v <= gp.m(); ++v) {
                    ++r.comparisons;
                    if (image[static_cast<size_t>(v) - 1] != gp.group(v).identity())
                        r.passed = false;
                }
            }
        }
        rows.push_back(std::move(r));
    }
    {
        CheckRow r("normalize-vs-equal-oracle");
        if (!all_finite) {
            r.note = "infinite vertex group";
        } else {
            r.ran = true;
            r.passed = true;
            std::vector<Word> ball = enumerate_ball(gp, ball_len);
            if (ball.size() > kMaxOracleWords)
                ball.resize(kMaxOracleWords);
            OracleConfig cfg;
            cfg.split_elems = effective_gens(job);
            for (size_t i = 0; i < ball.size() && r.comparisons < (long long)kMaxOraclePairs;
                 ++i)
                for (size_t j = i;
                     j < ball.size() && r.comparisons < (long long)kMaxOraclePairs; ++j) {
                    ++r.comparisons;
                    // Ball entries are canonical, so word equality is normal-form
                    // equality; the oracle must agree by rewriting alone.
                    if (equal_oracle(gp, ball[i], ball[j], cfg) != (ball[i] == ball[j]))
                        r.passed = false;
                }
        }
        rows.push_back(std::move(r));
    }
    {
        CheckRow r("split-round-trip");
        if (!all_finite) {
            r.note = "infinite vertex group";
        } else {
            r.ran = true;
            r.passed = true;
            std::vector<Word> ball = enumerate_ball(gp, ball_len);
            if (ball.size() > kMaxRoundTripWords)
                ball.resize(kMaxRoundTripWords);
            for (const Word& g : ball) {
                const SplitForm s = split(gp, g);
                ++r.comparisons;
                if (normalize(gp, unsplit(gp, s)) != g)
                    r.passed = false;
                ++r.comparisons;
                const std::vector<long long> image = ab(gp, s.h);
                for (int v = 1; v <= gp.m(); ++v)
                    if (image[static_cast<size_t>(v) - 1] != gp.group(v).identity())
                        r.passed = false;
            }
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

void cmd_verify_all(const JobSpec& job, json& out, std::ostream& hs) {
    std::vector<CheckRow> rows;
    if (job.has_algebras())
        for (CheckRow& r : algebra_checks(job))
            rows.push_back(std::move(r));
    if (job.has_groups())
        for (CheckRow& r : group_checks(job))
            rows.push_back(std::move(r));

    json checks = json::array();
    std::vector<std::string> failures;
    for (const CheckRow& r : rows) {
        if (!r.ran)
            hs << "check " << r.name << ": skipped (" << r.note << ")\n";
        else if (r.passed)
            hs << "check " << r.name << ": ok (" << r.comparisons << " comparisons)\n";
        else
            failures.push_back(r.name + (r.note.empty() ? "" : ":\n" + r.note));
        checks.push_back(json{{"name", r.name},
                              {"status", r.ran ? (r.passed ? "ok" : "failed") : "skipped"},
                              {"comparisons", r.comparisons},
                              {"note", r.note}});
    }
    if (!failures.empty()) {
        std::string msg = "cross-check failed:";
        for (const std::string& f : failures)
            msg += " " + f;
        throw InternalCheckError(msg);
    }
    hs << "all checks passed\n";
    out["checks"] = checks;
    out["all_passed"] = true;
}

} // namespace

int thread_cap() {
    const char* env = std::getenv("GRAPHPROD_THREADS");
    if (env == nullptr || *env == '\0')
        return 1;
    const std::string s(env);
    if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 6 ||
        std::stol(s) < 1)
        throw ValidationError("GRAPHPROD_THREADS must be a positive integer, got '" + s +
                              "'");
    return static_cast<int>(std::stol(s));
}

ResultReport run(const JobSpec& job, const std::string& command) {
    thread_cap(); // validate the environment cap up front
    // verify-all re-validates any document, so it ignores the recorded command.
    if (!job.command.empty() && job.command != command && command != "verify-all")
        throw ValidationError("the job document names command '" + job.command +
                              "' but '" + command + "' was requested");
    if (command != "verify-all" && job.has_groups() && job.has_algebras())
        throw ValidationError("only verify-all accepts both group and algebra payloads");

    json out;
    out["command"] = command;
    std::ostringstream hs;
    hs << "command: " << command << "\n";

    if (command == "normalize" || command == "invert" || command == "split" ||
        command == "project") {
        require_groups(job, command);
        require_words(job, command, 1);
        const GraphProduct gp = make_gp(job);
        if (command == "normalize")
            cmd_normalize(job, gp, out, hs);
        else if (command == "invert")
            cmd_invert(job, gp, out, hs);
        else if (command == "split")
            cmd_split(job, gp, out, hs);
        else
            cmd_project(job, gp, out, hs);
    } else if (command == "multiply") {
        require_groups(job, command);
        require_words(job, command, 2);
        cmd_multiply(job, make_gp(job), out, hs);
    } else if (command == "equal-oracle") {
        require_groups(job, command);
        require_words(job, command, 2);
        cmd_equal_oracle(job, make_gp(job), out, hs);
    } else if (command == "kernel-gens") {
        require_groups(job, command);
        cmd_kernel_gens(job, make_gp(job), out, hs);
    } else if (command == "length-census") {
        require_groups(job, command);
        cmd_length_census(job, make_gp(job), out, hs);
    } else if (command == "chordal") {
        cmd_chordal(job, out, hs);
    } else if (command == "homology") {
        cmd_homology(job, out, hs);
    } else if (command == "is-free") {
        cmd_is_free(job, out, hs);
    } else if (command == "lex-order") {
        require_algebras(job, command);
        cmd_lex_order(job, make_ap(job), out, hs);
    } else if (command == "gp-basis") {
        require_algebras(job, command);
        cmd_gp_basis(job, make_ap(job), out, hs);
    } else if (command == "hilbert") {
        require_algebras(job, command);
        cmd_hilbert(job, make_ap(job), out, hs);
    } else if (command == "tor-closed" || command == "tor-oracle") {
        require_algebras(job, command);
        cmd_tor(job, command, out, hs);
    } else if (command == "ep-series") {
        require_algebras(job, command);
        cmd_ep_series(job, out, hs);
    } else if (command == "min-generators") {
        require_algebras(job, command);
        cmd_min_generators(job, out, hs);
    } else if (command == "check-acyclic") {
        require_algebras(job, command);
        cmd_check_acyclic(job, out, hs);
    } else if (command == "verify-all") {
        if (!job.has_groups() && !job.has_algebras())
            throw ValidationError("verify-all needs a group or algebra payload");
        cmd_verify_all(job, out, hs);
    } else {
        throw ValidationError("unknown command '" + command + "'");
    }

    ResultReport rep;
    rep.command = command;
    rep.human = hs.str();
    rep.machine = out.dump(2) + "\n";
    return rep;
}

} // namespace graphprod
