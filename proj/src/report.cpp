#include "tribo/report.hpp"

namespace tribo {

nlohmann::json to_json(const Counterexample& c) {
  return {{"seed", {c.seed.w0.get_str(), c.seed.w1.get_str(), c.seed.w2.get_str()}},
          {"r", c.r},
          {"s", c.s},
          {"lhs", c.lhs.get_str()},
          {"rhs", c.rhs.get_str()}};
}

nlohmann::json to_json(const Certificate& cert) {
  nlohmann::json j;
  j["schema"] = kCertificateSchema;
  j["identity"] = cert.identity;
  j["verdict"] = verdict_name(cert.verdict);
  nlohmann::json windows = nlohmann::json::object();
  for (const auto& [v, w] : cert.windows) {
    windows[std::string(1, var_char(v))] = {
        {"degrees", std::vector<unsigned>(w.degrees.begin(), w.degrees.end())},
        {"size", w.size},
        {"base", w.base}};
  }
  j["windows"] = windows;
  j["w_degree"] = cert.w_degree;
  j["seed_grid"] = {{"min", 0}, {"max", cert.seed_grid_max}, {"dimension", 3}};
  j["evaluations"] = cert.evaluations;
  j["counterexample"] = cert.counterexample ? to_json(*cert.counterexample) : nlohmann::json(nullptr);
  if (cert.verdict == Verdict::Unsupported) j["unsupported_reason"] = cert.unsupported_reason;
  return j;
}

nlohmann::json to_json(const FormulaTemplate& t) {
  nlohmann::json j;
  j["schema"] = kTemplateSchema;
  j["basis"] = t.basis == Basis::Tribonacci ? "T" : "K";
  j["offsets"] = t.offsets;
  j["base_shift"] = t.base_shift;
  j["denominator"] = t.denominator.get_str();
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t m = 0; m < 3; ++m) row.push_back(t.coeffs[i][m].get_str());
    rows.push_back(row);
  }
  j["coefficients"] = rows;
  j["text"] = t.text();
  return j;
}

}  // namespace tribo
