#pragma once

#include <cstdint>
#include <json.hpp>
#include <vector>

#include "corrineq/functional.hpp"
#include "corrineq/series.hpp"
#include "corrineq/spaces.hpp"

namespace corrineq {

/// Batch configuration. Per-instance seeds are derived as
/// derive_seed(master_seed, index); identical configs produce identical
/// instance streams regardless of evaluation order.
struct SearchConfig {
    uint64_t master_seed = 1;
    int instance_count = 100;
    int n_min = 2, n_max = 5;
    int N_min = 2, N_max = 5;              // chain lengths
    int ground_min = 2, ground_max = 3;    // lattice ground-set sizes
    long max_denominator = 64;
    int series_T = 6;
    // fraction of lattice functions drawn from the Mobius-weight
    // generator; the rest use monotone repair
    double mobius_fraction = 0.5;
};

/// Self-contained reproducible record of one evaluated quantity.
/// Re-running the evaluation on the embedded instance reproduces the
/// value bit-exactly.
struct Certificate {
    nlohmann::json instance;  // full instance JSON (schema of json_io)
    std::string quantity;     // "E_n"
    int n = 0;
    Rational value;
    uint64_t master_seed = 0;
    uint64_t instance_index = 0;
    bool fkg_ok = false;  // lattice instances only

    nlohmann::json to_json() const;
    /// Re-evaluates the referenced quantity from the embedded instance.
    Rational reevaluate() const;
};

struct LemmaBatchReport {
    int instances = 0;
    int violations = 0;  // chain E_n < 0: implementation bug
    Certificate minimum;
    nlohmann::json to_json() const;
};

/// Random chain instances, exact E_n evaluation, nonnegativity check.
LemmaBatchReport verify_lemma_batch(const SearchConfig& cfg);

struct FkgSearchReport {
    int instances = 0;
    bool violation_found = false;
    std::vector<Certificate> smallest;  // five smallest E_n values
    nlohmann::json to_json() const;
};

/// Samples FKG measures and monotone functions on 2^X and looks for a
/// negative E_n. A found violation is a successful search outcome.
FkgSearchReport search_fkg(const SearchConfig& cfg);

struct CorollaryBatchReport {
    int chain_instances = 0;
    int lattice_instances = 0;
    int route_mismatches = 0;        // implementation bug if nonzero
    int chain_negatives = 0;         // implementation bug if nonzero
    int lattice_negatives = 0;       // reported, not asserted
    nlohmann::json to_json() const;
};

/// Runs both corollary routes per instance and compares exactly.
CorollaryBatchReport corollary_batch(const SearchConfig& cfg);

}  // namespace corrineq
