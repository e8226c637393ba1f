#ifndef ROOKCHAR_JSON_IO_HPP_
#define ROOKCHAR_JSON_IO_HPP_

#include <json.hpp>

#include "rookchar/quasicycle.hpp"
#include "rookchar/tensor_oracle.hpp"
#include "rookchar/thoma.hpp"

namespace rookchar {

// {"kind":"cycle"|"chain","points":[...]}
nlohmann::ordered_json quasicycle_to_json(const Quasicycle& q);
Quasicycle quasicycle_from_json(const nlohmann::json& j);

// {"alpha":[...],"beta":[...],"rho":"zero"|{"alpha_index":i}}, with the
// {"unchecked_rho":x} variant accepted only when allow_unchecked is set
// (gram_lab entry points).
ThomaParams params_from_json(const nlohmann::json& j,
                             bool allow_unchecked = false);

// {"diag":[...],"q_index":int|null,"n_factors":int}
SpectralModel model_from_json(const nlohmann::json& j);

}  // namespace rookchar

#endif  // ROOKCHAR_JSON_IO_HPP_
