#include "cyclo/emit.hpp"

#include <json.hpp>

namespace cyclo {

namespace {

using Json = nlohmann::ordered_json;

Json q_json(const FieldContext& ctx) {
  if (ctx.is_prime_field()) return ctx.q();
  return q_label(ctx);
}

Json modulus_json(const FieldContext& ctx) {
  if (ctx.is_prime_field()) return nullptr;
  return ctx.modulus();
}

Json coeffs_json(const Poly& f) { return f.coeffs(); }

}  // namespace

std::string q_label(const FieldContext& ctx) {
  if (ctx.is_prime_field()) return std::to_string(ctx.q());
  return std::to_string(ctx.p()) + "^" + std::to_string(ctx.m());
}

std::string coeff_tuple(const Poly& f) {
  std::string s = "(";
  const auto& c = f.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(c[i]);
  }
  return s + ")";
}

std::string emit(const ExplicitFactorization& ef, Format format) {
  const auto& F = *ef.ctx;
  if (format == Format::Json) {
    Json j;
    j["q"] = q_json(F);
    j["n"] = ef.n;
    j["r"] = ef.r;
    j["modulus"] = modulus_json(F);
    j["degree"] = ef.meta.degree;
    j["order"] = ef.meta.order;
    Json factors = Json::array();
    for (const auto& f : ef.factors) factors.push_back(coeffs_json(f));
    j["factors"] = std::move(factors);
    return j.dump() + "\n";
  }
  std::string out = "q=" + q_label(F) + " n=" + std::to_string(ef.n) + " r=" + std::to_string(ef.r) +
                    " count=" + std::to_string(ef.factors.size()) + " degree=" + std::to_string(ef.meta.degree) + "\n";
  for (const auto& f : ef.factors) out += coeff_tuple(f) + "\n";
  return out;
}

std::string emit(const FactorizationReport& report, Format format) {
  const auto& F = report.input.field();
  if (format == Format::Json) {
    Json j;
    j["q"] = q_json(F);
    j["modulus"] = modulus_json(F);
    j["input"] = coeffs_json(report.input);
    j["leading"] = report.leading;
    Json factors = Json::array();
    for (const auto& [f, e] : report.factors) {
      Json item;
      item["factor"] = coeffs_json(f);
      item["multiplicity"] = e;
      factors.push_back(std::move(item));
    }
    j["factors"] = std::move(factors);
    return j.dump() + "\n";
  }
  std::string out = "q=" + q_label(F) + " degree=" + std::to_string(report.input.degree()) +
                    " leading=" + std::to_string(report.leading) + " count=" + std::to_string(report.factors.size()) +
                    "\n";
  for (const auto& [f, e] : report.factors) {
    out += coeff_tuple(f);
    if (e > 1) out += "^" + std::to_string(e);
    out += "\n";
  }
  return out;
}

std::string emit(const SparseFamily& family, Format format) {
  const auto& F = family.members.front().field();
  const auto degree = family.members.front().degree();
  if (format == Format::Json) {
    Json j;
    j["q"] = q_json(F);
    j["n"] = family.n;
    j["family"] = family.id;
    j["pattern"] = family.pattern;
    j["modulus"] = modulus_json(F);
    j["degree"] = degree;
    Json members = Json::array();
    for (const auto& f : family.members) {
      Json item;
      item["poly"] = coeffs_json(f);
      item["weight"] = f.weight();
      members.push_back(std::move(item));
    }
    j["members"] = std::move(members);
    return j.dump() + "\n";
  }
  std::string out = "q=" + q_label(F) + " n=" + std::to_string(family.n) + " family=" + family.id +
                    " count=" + std::to_string(family.members.size()) + " degree=" + std::to_string(degree) + "\n";
  out += "pattern: " + family.pattern + "\n";
  for (const auto& f : family.members) out += f.to_string() + "  weight=" + std::to_string(f.weight()) + "\n";
  return out;
}

}  // namespace cyclo
