#include "corrineq/json_io.hpp"

#include <stdexcept>

namespace corrineq {

nlohmann::json rationals_to_json(const std::vector<Rational>& v) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : v) out.push_back(r.str());
    return out;
}

std::vector<Rational> rationals_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of rational strings");
    std::vector<Rational> out;
    for (const auto& item : j) out.push_back(Rational::from_string(item.get<std::string>()));
    return out;
}

nlohmann::json space_to_json(const Space& s) {
    nlohmann::json out;
    if (is_chain(s)) {
        const auto& chain = std::get<ChainSpace>(s);
        out["type"] = "chain";
        out["N"] = chain.N;
        out["mu"] = rationals_to_json(chain.mu);
    } else {
        const auto& lattice = std::get<SubsetLattice>(s);
        out["type"] = "lattice";
        out["ground_size"] = lattice.ground_size;
        out["mu"] = rationals_to_json(lattice.mu);
    }
    return out;
}

Space space_from_json(const nlohmann::json& j) {
    std::string type = j.at("type").get<std::string>();
    auto mu = rationals_from_json(j.at("mu"));
    if (type == "chain") return ChainSpace(j.at("N").get<int>(), std::move(mu));
    if (type == "lattice")
        return SubsetLattice(j.at("ground_size").get<int>(), std::move(mu));
    throw std::invalid_argument("unknown space type '" + type + "'");
}

nlohmann::json instance_to_json(const Space& space, const std::vector<MonotoneFn>& fns) {
    nlohmann::json out;
    out["space"] = space_to_json(space);
    out["functions"] = nlohmann::json::array();
    for (const auto& f : fns) out["functions"].push_back(rationals_to_json(f.values));
    return out;
}

FunctionalInstance instance_from_json(const nlohmann::json& j) {
    Space space = space_from_json(j.at("space"));
    std::vector<MonotoneFn> fns;
    for (const auto& fj : j.at("functions")) fns.push_back({rationals_from_json(fj)});
    return FunctionalInstance(std::move(space), std::move(fns));
}

FunctionSeries function_series_from_json(const Space& space, const nlohmann::json& j) {
    const auto& sj = j.at("series");
    std::vector<MonotoneFn> coeffs;
    for (const auto& fj : sj) coeffs.push_back({rationals_from_json(fj)});
    int T = (int)coeffs.size();
    return FunctionSeries(space, T, std::move(coeffs));
}

}  // namespace corrineq
