#include "rookchar/json_io.hpp"

namespace rookchar {

nlohmann::ordered_json quasicycle_to_json(const Quasicycle& q) {
  nlohmann::ordered_json j;
  j["kind"] = q.kind == Quasicycle::Kind::PureCycle ? "cycle" : "chain";
  j["points"] = q.points;
  return j;
}

Quasicycle quasicycle_from_json(const nlohmann::json& j) {
  Quasicycle q;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "cycle") {
    q.kind = Quasicycle::Kind::PureCycle;
  } else if (kind == "chain") {
    q.kind = Quasicycle::Kind::Chain;
  } else {
    throw Error(Errc::InvalidArgument, "quasicycle kind must be cycle|chain");
  }
  q.points = j.at("points").get<std::vector<int>>();
  return q;
}

ThomaParams params_from_json(const nlohmann::json& j, bool allow_unchecked) {
  auto alpha = j.value("alpha", std::vector<double>{});
  auto beta = j.value("beta", std::vector<double>{});
  if (j.contains("unchecked_rho")) {
    if (!allow_unchecked) {
      throw Error(Errc::InvalidArgument,
                  "unchecked_rho is only accepted by gram/witness entry points");
    }
    return ThomaParams::with_unchecked_rho(alpha, beta,
                                           j.at("unchecked_rho").get<double>());
  }
  std::optional<int> rho_index;
  if (j.contains("rho") && !j.at("rho").is_null()) {
    const auto& rho = j.at("rho");
    if (rho.is_string()) {
      if (rho.get<std::string>() != "zero") {
        throw Error(Errc::InvalidArgument,
                    "rho must be \"zero\" or {\"alpha_index\": i}");
      }
    } else {
      rho_index = rho.at("alpha_index").get<int>();
    }
  }
  return ThomaParams::validate(alpha, beta, rho_index);
}

SpectralModel model_from_json(const nlohmann::json& j) {
  auto diag = j.at("diag").get<std::vector<double>>();
  std::optional<int> q_index;
  if (j.contains("q_index") && !j.at("q_index").is_null()) {
    q_index = j.at("q_index").get<int>();
  }
  return SpectralModel::validate(diag, q_index, j.at("n_factors").get<int>());
}

}  // namespace rookchar
