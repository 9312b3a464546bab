#include "corrineq/explorer.hpp"

#include <algorithm>

#include "corrineq/json_io.hpp"
#include "corrineq/rng.hpp"

namespace corrineq {

nlohmann::json Certificate::to_json() const {
    nlohmann::json out;
    out["instance"] = instance;
    out["quantity"] = quantity;
    out["n"] = n;
    out["value"] = value.str();
    out["value_approx"] = value.to_double();
    out["master_seed"] = master_seed;
    out["instance_index"] = instance_index;
    if (instance.contains("space") && instance["space"]["type"] == "lattice")
        out["fkg_ok"] = fkg_ok;
    return out;
}

Rational Certificate::reevaluate() const {
    return e_n(instance_from_json(instance));
}

nlohmann::json LemmaBatchReport::to_json() const {
    nlohmann::json out;
    out["instances"] = instances;
    out["violations"] = violations;
    out["minimum"] = minimum.to_json();
    return out;
}

nlohmann::json FkgSearchReport::to_json() const {
    nlohmann::json out;
    out["instances"] = instances;
    out["violation_found"] = violation_found;
    out["smallest"] = nlohmann::json::array();
    for (const auto& c : smallest) out["smallest"].push_back(c.to_json());
    out["note"] =
        "generator emphasis on boundary configurations is a heuristic; "
        "no claim about the conjecture is made either way";
    return out;
}

nlohmann::json CorollaryBatchReport::to_json() const {
    nlohmann::json out;
    out["chain_instances"] = chain_instances;
    out["lattice_instances"] = lattice_instances;
    out["route_mismatches"] = route_mismatches;
    out["chain_negatives"] = chain_negatives;
    out["lattice_negatives"] = lattice_negatives;
    return out;
}

namespace {

Certificate make_certificate(const FunctionalInstance& inst, const Rational& value,
                             const SearchConfig& cfg, uint64_t index, bool fkg_ok) {
    Certificate cert;
    cert.instance = instance_to_json(inst.space, inst.functions);
    cert.quantity = "E_n";
    cert.n = inst.n();
    cert.value = value;
    cert.master_seed = cfg.master_seed;
    cert.instance_index = index;
    cert.fkg_ok = fkg_ok;
    return cert;
}

FunctionalInstance random_chain_instance(const SearchConfig& cfg, uint64_t index) {
    uint64_t seed = derive_seed(cfg.master_seed, index);
    Rng meta(seed);
    int n = (int)meta.uniform_int(cfg.n_min, cfg.n_max);
    int N = (int)meta.uniform_int(cfg.N_min, cfg.N_max);
    Space space = random_chain_space(N, derive_seed(seed, 1), cfg.max_denominator);
    std::vector<MonotoneFn> fns;
    for (int i = 0; i < n; ++i)
        fns.push_back(random_monotone_fn(space, derive_seed(seed, 2 + (uint64_t)i),
                                         cfg.max_denominator));
    return FunctionalInstance(std::move(space), std::move(fns));
}

FunctionalInstance random_lattice_instance(const SearchConfig& cfg, uint64_t index) {
    uint64_t seed = derive_seed(cfg.master_seed, index);
    Rng meta(seed);
    int n = (int)meta.uniform_int(cfg.n_min, cfg.n_max);
    int gs = (int)meta.uniform_int(cfg.ground_min, cfg.ground_max);
    Space space = random_fkg_measure(gs, derive_seed(seed, 1), cfg.max_denominator);
    std::vector<MonotoneFn> fns;
    for (int i = 0; i < n; ++i) {
        uint64_t fseed = derive_seed(seed, 2 + (uint64_t)i);
        auto style = (double)(mix64(fseed) % 1000) / 1000.0 < cfg.mobius_fraction
                         ? LatticeFnStyle::Mobius
                         : LatticeFnStyle::Repair;
        fns.push_back(random_monotone_fn(space, fseed, cfg.max_denominator, style));
    }
    return FunctionalInstance(std::move(space), std::move(fns));
}

}  // namespace

LemmaBatchReport verify_lemma_batch(const SearchConfig& cfg) {
    LemmaBatchReport report;
    bool have_min = false;
    Rational min_value;
    for (uint64_t i = 0; i < (uint64_t)cfg.instance_count; ++i) {
        FunctionalInstance inst = random_chain_instance(cfg, i);
        Rational value = e_n(inst);
        if (value.sign() < 0) report.violations++;
        if (!have_min || value < min_value) {
            have_min = true;
            min_value = value;
            report.minimum = make_certificate(inst, value, cfg, i, false);
        }
        report.instances++;
    }
    return report;
}

FkgSearchReport search_fkg(const SearchConfig& cfg) {
    FkgSearchReport report;
    // keep the five smallest values; ties broken by instance index so the
    // report is independent of evaluation order
    std::vector<std::pair<Rational, Certificate>> best;
    for (uint64_t i = 0; i < (uint64_t)cfg.instance_count; ++i) {
        FunctionalInstance inst = random_lattice_instance(cfg, i);
        Rational value = e_n(inst);
        if (value.sign() < 0) report.violation_found = true;
        Certificate cert = make_certificate(inst, value, cfg, i, true);
        best.emplace_back(value, std::move(cert));
        std::sort(best.begin(), best.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first < b.first;
            return a.second.instance_index < b.second.instance_index;
        });
        if (best.size() > 5) best.pop_back();
        report.instances++;
    }
    for (auto& [v, c] : best) report.smallest.push_back(std::move(c));
    return report;
}

CorollaryBatchReport corollary_batch(const SearchConfig& cfg) {
    CorollaryBatchReport report;
    for (uint64_t i = 0; i < (uint64_t)cfg.instance_count; ++i) {
        uint64_t seed = derive_seed(cfg.master_seed, i);
        Rng meta(seed);
        bool chain = (i % 2 == 0);
        Space space;
        if (chain) {
            int N = (int)meta.uniform_int(cfg.N_min, cfg.N_max);
            space = random_chain_space(N, derive_seed(seed, 1), cfg.max_denominator);
        } else {
            int gs = (int)meta.uniform_int(cfg.ground_min, cfg.ground_max);
            space = random_fkg_measure(gs, derive_seed(seed, 1), cfg.max_denominator);
        }
        std::vector<MonotoneFn> coeffs;
        for (int k = 0; k < cfg.series_T; ++k)
            coeffs.push_back(random_monotone_fn(space, derive_seed(seed, 2 + (uint64_t)k),
                                                cfg.max_denominator));
        FunctionSeries p(space, cfg.series_T, std::move(coeffs));
        ScalarSeries direct = corollary_direct(space, p);
        ScalarSeries via_en = corollary_via_en(space, p);
        if (!(direct == via_en)) report.route_mismatches++;
        auto nn = check_nonnegativity(direct);
        if (chain) {
            report.chain_instances++;
            if (!nn.ok) report.chain_negatives++;
        } else {
            report.lattice_instances++;
            if (!nn.ok) report.lattice_negatives++;
        }
    }
    return report;
}

}  // namespace corrineq
