#include "que/jsonio.hpp"

#include <json.hpp>

namespace que {

using ordered_json = nlohmann::ordered_json;

std::string eigenform_json(const Eigenform& f) {
  ordered_json j;
  j["weight"] = f.weight();
  j["truncation"] = f.truncation();
  ordered_json coeffs = ordered_json::array();
  for (long n = 1; n <= f.truncation(); ++n) {
    coeffs.push_back({n, f.a(n).get_str()});
  }
  j["coefficients"] = std::move(coeffs);
  return j.dump();
}

std::string dirichlet_json(const DirichletCoeffTable& t, int digits) {
  ordered_json j;
  j["kind"] = table_kind_name(t.kind);
  j["precision"] = static_cast<long>(t.precision);
  j["truncation"] = t.truncation;
  ordered_json lam = ordered_json::array();
  for (long n = 1; n <= t.truncation; ++n) {
    lam.push_back({n, t.lam(n).re().str(digits), t.lam(n).im().str(digits)});
  }
  j["lambda"] = std::move(lam);
  ordered_json vm = ordered_json::array();
  for (const auto& [pk, v] : t.von_mangoldt) {
    vm.push_back({pk, v.re().str(digits), v.im().str(digits)});
  }
  j["vonmangoldt"] = std::move(vm);
  return j.dump();
}

std::string identity_report_json(const IdentityReport& rep, const LocalParams& params,
                                 const std::string& which) {
  ordered_json j;
  j["identity"] = which;
  j["params"] = {
      {"p", params.p},
      {"alpha_re", params.alpha.re().str(30)},
      {"alpha_im", params.alpha.im().str(30)},
      {"beta_re", params.beta.re().str(30)},
      {"beta_im", params.beta.im().str(30)},
  };
  j["order"] = rep.order;
  j["max_residual"] = rep.max_residual.str(20);
  j["pass"] = rep.pass;
  j["witness"] = rep.witness;
  return j.dump();
}

std::string scan_result_json(const ScanResult& res) {
  ordered_json j;
  j["min"] = res.minimum.str(20);
  j["argmin"] = {
      {"p", res.argmin_p},
      {"sigma", res.argmin_sigma},
      {"t_phase", res.argmin_theta},
      {"lam_phi", res.argmin_lam_phi},
      {"lam_f2", res.argmin_lam_f2},
  };
  j["grid"] = {
      {"n_sigma", res.grid.n_sigma},
      {"n_theta", res.grid.n_theta},
      {"n_lam_phi", res.grid.n_lam_phi},
      {"n_lam_f2", res.grid.n_lam_f2},
      {"sigma_min", res.grid.sigma_min},
      {"sigma_max", res.grid.sigma_max},
  };
  j["sigma_tail_dominated"] = res.sigma_tail_dominated;
  return j.dump();
}

std::string real_cell(const Real& x, int digits) { return x.str(digits); }

}  // namespace que
