#pragma once

#include <json.hpp>

#include "tribo/certify.hpp"
#include "tribo/derive.hpp"

namespace tribo {

inline constexpr const char* kCertificateSchema = "tribo.certificate/1";
inline constexpr const char* kTemplateSchema = "tribo.template/1";

/// Everything needed to re-check a certificate independently.
nlohmann::json to_json(const Certificate& cert);

nlohmann::json to_json(const FormulaTemplate& t);

nlohmann::json to_json(const Counterexample& c);

}  // namespace tribo
