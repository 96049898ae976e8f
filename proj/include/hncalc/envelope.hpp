#ifndef HNCALC_ENVELOPE_HPP
#define HNCALC_ENVELOPE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "hncalc/acyclic_pushforward.hpp"
#include "hncalc/ci_splitting.hpp"
#include "hncalc/ruled_surface.hpp"
#include "hncalc/two_hypersurfaces.hpp"

namespace hncalc {

// Insertion-ordered JSON so serialized field order is canonical and byte
// round-trips hold.
using Json = nlohmann::ordered_json;

struct Check {
    std::string name;
    bool pass = false;

    bool operator==(const Check&) const = default;
};

// Uniform output record for every command:
// {"command": ..., "inputs": {...}, "result": {...}, "checks": [...]}.
struct OutputEnvelope {
    std::string command;
    Json inputs;
    Json result;
    std::vector<Check> checks;

    bool all_checks_pass() const;

    Json to_json() const;
    // Compact canonical byte form (what the CLI prints in JSON mode).
    std::string to_json_line() const;
    std::string to_table() const;
    std::string to_ascii_polygon() const;
};

// Checked conversion; throws DomainError if the value does not fit a signed
// 64-bit integer. JSON numbers stay exact, never floating point.
std::int64_t json_int(const Integer& x);

// {"pieces": [{rank, degree, slope_numerator, slope_denominator, label}...],
//  "vertices": [[rank, degree]...]} with each slope a reduced fraction whose
// denominator is positive.
Json polygon_to_json(const HNPolygon& polygon);

OutputEnvelope splitting_envelope(const CompleteIntersectionSpec& spec);
OutputEnvelope hn_sym_envelope(int m, long long s, long long t);
OutputEnvelope ruled_envelope(const RuledSurfaceSpec& spec);
OutputEnvelope two_hyp_envelope(const TwoHypersurfaceSpec& spec);
OutputEnvelope acyclic_envelope(const AcyclicSpec& spec);

// Rectangular grid for batch splitting runs: n ranges over n_lo..n_hi and
// each of the r degree coordinates independently over d_lo..d_hi. A range
// with lo > hi is empty and yields zero grid points.
struct SweepConfig {
    long long n_lo = 0;
    long long n_hi = -1;
    long long r = 1;
    long long d_lo = 0;
    long long d_hi = -1;
    unsigned threads = 0; // 0 = one per hardware thread
};

struct SweepOutcome {
    std::vector<OutputEnvelope> envelopes;
    std::size_t pass_count = 0; // envelopes whose checks all passed
    std::size_t fail_count = 0;
};

// Evaluates the grid points concurrently (no shared mutable state between
// points) and returns envelopes in grid order: n ascending, degree tuples in
// odometer order with the last coordinate fastest. Each envelope is byte
// identical to the one the single splitting command would produce.
SweepOutcome run_sweep(const SweepConfig& config);

} // namespace hncalc

#endif
