#include "ck/jsonio.hpp"

namespace ck {

namespace {

Json root_coeffs(const RootSystem& rs, int idx) {
  return Json(rs.root(idx).coeffs);
}

}  // namespace

Json cascade_json(const RootSystem& rs, const Cascade& c) {
  Json nodes = Json::array();
  for (const CascadeNode& node : c.nodes) {
    Json layer = Json::array();
    for (const int phi : node.layer) layer.push_back(root_coeffs(rs, phi));
    nodes.push_back({{"beta", root_coeffs(rs, node.beta)},
                     {"support", node.support},
                     {"parent", node.parent},
                     {"children", node.children},
                     {"h_dual", node.h_dual},
                     {"layer_size", node.layer.size()},
                     {"layer", std::move(layer)}});
  }
  return Json{{"type", rs.type().str()},
              {"rank", rs.rank()},
              {"num_positive_roots", rs.num_positive()},
              {"m", c.m()},
              {"nodes", std::move(nodes)}};
}

Json report_json(const VerificationReport& rep) {
  Json checks = Json::array();
  for (const CheckResult& r : rep.checks) {
    Json row{{"check", r.check},
             {"type", r.type},
             {"kind", r.kind},
             {"seed", r.seed},
             {"samples", r.samples},
             {"status", r.pass ? "pass" : "fail"}};
    if (!r.pass) row["witness"] = r.witness;
    checks.push_back(std::move(row));
  }
  return Json{{"all_pass", rep.all_pass()}, {"checks", std::move(checks)}};
}

Json generators_json(const RootSystem& rs, const Cascade& c, const GeneratorSet& g) {
  Json cascade = Json::array();
  for (const CascadeNode& node : c.nodes) cascade.push_back(root_coeffs(rs, node.beta));
  Json gens = Json::array();
  for (const CascadeLatticePoint& mu : g.mus) {
    const Weight w = lattice_weight(rs, c, mu);
    Json simple_coords = Json::array();
    for (const Rat& v : w) simple_coords.push_back(to_string(v));
    gens.push_back({{"mu_coords_over_B", mu.coords},
                    {"mu_coords_over_simples", std::move(simple_coords)},
                    {"degree", to_int(r_total(rs, c, w))}});
  }
  RatMat t(g.mus.size(), RatVec(g.mus.size(), 0));
  for (size_t i = 0; i < g.mus.size(); ++i)
    for (size_t j = 0; j < g.mus.size(); ++j) t[i][j] = to_rat(g.transition[i][j]);
  return Json{{"type", rs.type().str()},
              {"m", c.m()},
              {"cascade", std::move(cascade)},
              {"generators", std::move(gens)},
              {"transition_matrix", g.transition},
              {"det", to_int(det(t))}};
}

Json invariant_json(const RootSystem& rs, const PolyInvariant& inv) {
  Json terms = Json::array();
  for (const auto& [g, s] : inv.terms) {
    Json exps = Json::array();
    for (const auto& [idx, e] : g)
      exps.push_back({{"root", rs.root(idx).coeffs}, {"exponent", e}});
    terms.push_back({{"exponents", std::move(exps)}, {"coefficient", to_string(s)}});
  }
  return Json{{"weight", inv.weight.coords}, {"degree", inv.degree}, {"terms", std::move(terms)}};
}

}  // namespace ck
