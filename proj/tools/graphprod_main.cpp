// graphprod: exact computations for graph products of groups and of graded
// algebras over a flag complex.
//
// Usage:
//   graphprod <command> --spec <file> [--field q|gf2|gf<p>] [--nmax N]
//             [--smax S] [--machine]
//
// The report goes to stdout and is byte-for-byte deterministic for a given
// job; timing goes to stderr. Exit codes: 0 success, 2 invalid input,
// 3 result not settled within the truncation window, 4 failed internal
// cross-check.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "graphprod/errors.hpp"
#include "graphprod/jobspec.hpp"
#include "graphprod/run.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact computations for graph products of groups and graded "
                 "algebras over a flag complex"};
    app.name("graphprod");
    std::string command, spec_path, field_name;
    int nmax = 0, smax = 0;
    bool machine = false;
    app.add_option("command", command, "operation to run")->required();
    app.add_option("--spec", spec_path, "path to the job document")->required();
    app.add_option("--field", field_name,
                   "coefficient field override: q, gf2, gf3, or gf<p>");
    app.add_option("--nmax", nmax, "internal-degree truncation override");
    app.add_option("--smax", smax, "homological-degree truncation override");
    app.add_flag("--machine", machine, "emit the machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        std::ifstream in(spec_path);
        if (!in)
            throw graphprod::ValidationError("cannot open job document '" + spec_path +
                                             "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        graphprod::JobSpec job = graphprod::parse_jobspec(buf.str());

        if (!field_name.empty())
            job.field = graphprod::parse_field_name(field_name);
        if (app.count("--nmax") > 0) {
            if (nmax < 0)
                throw graphprod::ValidationError("--nmax must be nonnegative");
            job.n_max = nmax;
        }
        if (app.count("--smax") > 0) {
            if (smax < 0)
                throw graphprod::ValidationError("--smax must be nonnegative");
            job.s_max = smax;
        }

        const auto t0 = std::chrono::steady_clock::now();
        const graphprod::ResultReport rep = graphprod::run(job, command);
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - t0)
                                 .count();
        std::cout << (machine ? rep.machine : rep.human);
        std::cerr << "timing: " << elapsed << " ms\n";
        return 0;
    } catch (const graphprod::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const graphprod::TruncationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const graphprod::InternalCheckError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
