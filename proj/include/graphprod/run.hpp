// Batch dispatch: one JobSpec in, one deterministic report out.
//
// Commands (grouped by payload):
//   group payload:   normalize, multiply, invert, project, split, kernel-gens,
//                    equal-oracle, length-census
//   algebra payload: lex-order, gp-basis, hilbert, tor-closed, tor-oracle,
//                    ep-series, min-generators, check-acyclic
//   complex only:    chordal, homology, is-free
//   either or both:  verify-all (runs every applicable cross-check pair)
//
// Reports are deterministic byte for byte for identical jobs: fixed
// orderings everywhere, no timestamps, no machine-dependent content.  Timing
// is the front end's business and goes to the diagnostic stream only.

#ifndef GRAPHPROD_RUN_HPP
#define GRAPHPROD_RUN_HPP

#include <string>

#include "graphprod/jobspec.hpp"

namespace graphprod {

struct ResultReport {
    std::string command;
    std::string human;   // rendered text, newline-terminated
    std::string machine; // the same content as a serialized tree, newline-terminated
};

// Validates command/payload compatibility and dispatches. ValidationError
// for bad requests, TruncationError when a bound exceeds knowable degrees,
// InternalCheckError when a structural check or cross-check pair fails.
ResultReport run(const JobSpec& job, const std::string& command);

// Parallelism cap from GRAPHPROD_THREADS (>= 1; 1 when unset). A malformed
// value is a ValidationError. Computations are currently single-threaded,
// which satisfies any cap.
int thread_cap();

} // namespace graphprod

#endif
