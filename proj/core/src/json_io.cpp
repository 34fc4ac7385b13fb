#include "diffop/json_io.hpp"

#include "diffop/parser.hpp"

namespace diffop {

using nlohmann::json;

json to_json(const PolyMatrix& m) {
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(render_poly(m.at(i, j)));
    entries.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

json to_json(const DiffOp& op) {
  json terms = json::array();
  for (const auto& [m, p] : op.coeffs())
    terms.push_back(json{{"coeff", render_poly(p)}, {"dx", m.x}, {"dy", m.y}, {"dz", m.z}});
  return terms;
}

json to_json(const CheckResult& check, bool verbose) {
  json out{{"id", check.id},
           {"arena", std::string(1, check.arena)},
           {"passed", check.passed},
           {"informational", check.informational}};
  if (check.q_holds_only_mod_f) out["q_holds_only_mod_f"] = true;
  if (verbose && !check.residual.empty()) out["residual"] = check.residual;
  return out;
}

json to_json(const std::vector<CheckResult>& checks, bool verbose) {
  json out = json::array();
  for (const auto& c : checks) out.push_back(to_json(c, verbose));
  return out;
}

json to_json(const GroebnerBasis& basis) {
  json gens = json::array();
  for (const auto& g : basis.generators) gens.push_back(render_poly(g));
  return json{{"generators", std::move(gens)}};
}

json to_json(const BettiTable& table) {
  json out = json::array();
  for (const auto& [key, count] : table.entries)
    out.push_back(json{{"i", key.first}, {"j", key.second}, {"beta", count}});
  return out;
}

json to_json(const PeriodicComplex& cplx) {
  json head = json::array();
  for (const auto& m : cplx.head) head.push_back(to_json(m));
  json frames = json::array();
  for (const auto& f : cplx.frames) frames.push_back(f);
  return json{{"name", cplx.name},
              {"labels", cplx.labels},
              {"ambient_degrees", cplx.ambient_degrees},
              {"augmentation", to_json(cplx.augmentation)},
              {"augmentation_caption", cplx.aug_caption},
              {"head", std::move(head)},
              {"head_captions", cplx.head_captions},
              {"tail_pair", json::array({to_json(cplx.tail_a), to_json(cplx.tail_b)})},
              {"tail_captions", json::array({cplx.tail_a_caption, cplx.tail_b_caption})},
              {"frames", std::move(frames)},
              {"period_shift", cplx.period_shift}};
}

}  // namespace diffop
