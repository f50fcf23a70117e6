#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polylab {

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ExperimentKind { mean_roots, irreducibility_curve, fekete };

struct QPolicy {
    bool fixed = true;
    uint64_t q = 0;        // fixed prime
    double window_X = 0;   // else sample window primes per draw
};

struct ExperimentConfig {
    std::string name;
    ExperimentKind kind = ExperimentKind::mean_roots;
    std::string model;  // descriptor; unused for the fekete kind
    std::vector<int> degrees;
    QPolicy q_policy;                   // mean-roots only
    uint64_t samples = 1;
    uint64_t verdict_samples = 1000;    // Monte Carlo draws inside each verdict
    std::vector<uint64_t> primes;       // fekete kind
    // Optional equidistribution parameters (mean-roots).  With l set and a
    // fixed q, each cell records the exceptional-residue count at (l, q).
    // With all three set, each cell first checks that [d/2, d] holds
    // ceil(q^(5/(l+1))) disjoint prime progressions of length L and step at
    // most K, and aborts with a parameter report otherwise.
    std::optional<int> l;
    std::optional<uint64_t> K;
    std::optional<uint64_t> L;
    uint64_t seed = 0;
    uint64_t config_hash = 0;           // over the canonical JSON text
};

// Parses and validates a schema-1 JSON config.  All violations are collected
// and reported together, each prefixed with its field path; throws
// config_error.
ExperimentConfig parse_experiment_config(const std::string& json_text);

struct CellResult {
    int degree = 0;
    uint64_t q = 0;   // fixed q, sampled-window marker 0, or the Fekete prime
    double X = 0;     // window X or verdict X where applicable
    uint64_t samples = 0;
    bool skipped = false;
    double mean_rootcount = 0, se_rootcount = 0;
    double mean_doubleroot = 0, se_doubleroot = 0;
    // Catalog size at (l, q); -1 when no l was configured, q is sampled, or
    // the catalog enumeration exceeds its budget (informational field only).
    int64_t exceptional_residues = -1;
    double frac_not_single = -1;  // -1 when not applicable
    int64_t root_at_one = -1;     // samples with R(1) = 0; -1 when not applicable
    std::array<uint64_t, 6> verdict_counts{};  // Verdict enum order
};

struct ExperimentReport {
    std::string name;
    ExperimentKind kind = ExperimentKind::mean_roots;
    std::string model;
    uint64_t seed = 0;
    uint64_t config_hash = 0;
    std::string version;
    std::vector<CellResult> cells;
};

// Cells run in a deterministic order; sample i of cell c derives its entire
// randomness from (seed, c, i), so reports are byte-identical across thread
// counts.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

std::string to_string(ExperimentKind k);

// Fixed column set, cell parameters first, then statistics, then provenance;
// the JSON form mirrors the CSV fields exactly (null for blank).
std::string report_csv(const ExperimentReport& rep);
std::string report_json(const ExperimentReport& rep);

}  // namespace polylab
