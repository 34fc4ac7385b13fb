#pragma once

#include "diffop/check.hpp"
#include "diffop/groebner.hpp"
#include "diffop/poly_matrix.hpp"
#include "diffop/resolution.hpp"
#include "diffop/weyl.hpp"

// vendored single-header nlohmann/json
#include "json.hpp"

namespace diffop {

nlohmann::json to_json(const PolyMatrix& m);
nlohmann::json to_json(const DiffOp& op);
nlohmann::json to_json(const CheckResult& check, bool verbose);
nlohmann::json to_json(const std::vector<CheckResult>& checks, bool verbose);
nlohmann::json to_json(const GroebnerBasis& basis);
nlohmann::json to_json(const BettiTable& table);
nlohmann::json to_json(const PeriodicComplex& cplx);

}  // namespace diffop
