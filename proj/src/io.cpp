#include "cliff/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "cliff/errors.hpp"

namespace cliff::io {

namespace {

std::string rational_text(const mpq_class& v) { return v.get_str(); }

mpq_class parse_rational(const std::string& text) {
  mpq_class v;
  try {
    v = mpq_class(text);
  } catch (const std::invalid_argument&) {
    throw ParseError("invalid rational '" + text + "'");
  }
  if (v.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
  v.canonicalize();
  return v;
}

std::string double_text(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_double(const std::string& text) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0' || !std::isfinite(v)) {
    throw ParseError("invalid float '" + text + "'");
  }
  return v;
}

double number_or_text(const json& j, const char* what) {
  if (j.is_number()) {
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw ParseError(std::string("non-finite ") + what);
    return v;
  }
  if (j.is_string()) return parse_double(j.get<std::string>());
  throw ParseError(std::string("expected number or string for ") + what);
}

}  // namespace

std::string field_name(Field tag) {
  switch (tag) {
    case Field::RealExact: return "real-exact";
    case Field::ComplexExact: return "complex-exact";
    case Field::ComplexFloat: return "complex-float";
  }
  throw Error("unreachable");
}

Field parse_field(const std::string& name) {
  if (name == "real-exact") return Field::RealExact;
  if (name == "complex-exact") return Field::ComplexExact;
  if (name == "complex-float") return Field::ComplexFloat;
  throw ParseError("unknown field '" + name + "'");
}

BladeMask parse_blade_key(const std::string& key, const Signature& sig) {
  if (key.empty()) return 0;
  BladeMask mask = 0;
  int previous = 0;
  std::size_t pos = 0;
  while (pos < key.size()) {
    std::size_t comma = key.find(',', pos);
    if (comma == std::string::npos) comma = key.size();
    const std::string piece = key.substr(pos, comma - pos);
    if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("invalid blade key '" + key + "'");
    }
    const int idx = std::atoi(piece.c_str());
    if (idx < 1 || idx > sig.n()) {
      throw ParseError("blade key '" + key + "' has index outside 1.." +
                       std::to_string(sig.n()));
    }
    if (idx <= previous) {
      throw ParseError("blade key '" + key + "' is not strictly ascending");
    }
    previous = idx;
    mask |= BladeMask{1} << (idx - 1);
    pos = comma + 1;
  }
  return mask;
}

json scalar_to_json(const Scalar& s, const FieldKind& kind) {
  switch (kind.tag) {
    case Field::RealExact:
      return rational_text(s.exact_re());
    case Field::ComplexExact:
      return json{{"re", rational_text(s.exact_re())}, {"im", rational_text(s.exact_im())}};
    case Field::ComplexFloat:
      return json{{"re", double_text(s.float_re())}, {"im", double_text(s.float_im())}};
  }
  throw Error("unreachable");
}

Scalar scalar_from_json(const json& j, const FieldKind& kind) {
  switch (kind.tag) {
    case Field::RealExact:
      if (!j.is_string()) throw ParseError("real-exact coefficient must be a string");
      return Scalar::rational(parse_rational(j.get<std::string>()));
    case Field::ComplexExact: {
      if (!j.is_object()) throw ParseError("complex-exact coefficient must be an object");
      if (!j.at("re").is_string() || !j.at("im").is_string()) {
        throw ParseError("complex-exact components must be strings");
      }
      return Scalar::gaussian(parse_rational(j.at("re").get<std::string>()),
                              parse_rational(j.at("im").get<std::string>()));
    }
    case Field::ComplexFloat: {
      if (!j.is_object()) throw ParseError("complex-float coefficient must be an object");
      return Scalar::complex_float(number_or_text(j.at("re"), "re"),
                                   number_or_text(j.at("im"), "im"));
    }
  }
  throw Error("unreachable");
}

json mv_to_json(const Multivector& u) {
  json out = json::object();
  for (BladeMask mask : canonical_masks(u.sig().n())) {
    auto it = u.coeffs().find(mask);
    if (it == u.coeffs().end()) continue;
    out[blade_key(mask)] = scalar_to_json(it->second, u.kind());
  }
  return out;
}

Multivector mv_from_json(const json& j, const Signature& sig, const FieldKind& kind) {
  if (!j.is_object()) throw ParseError("multivector must be an object");
  Multivector u(sig, kind);
  for (const auto& [key, value] : j.items()) {
    u.set_coeff(parse_blade_key(key, sig), scalar_from_json(value, kind));
  }
  return u;
}

json generator_set_to_json(const GeneratorSet& s) {
  json out;
  out["p"] = s.sig().p;
  out["q"] = s.sig().q;
  out["field"] = field_name(s.kind().tag);
  json gens = json::array();
  for (const auto& g : s.generators()) gens.push_back(mv_to_json(g));
  out["generators"] = std::move(gens);
  return out;
}

namespace {

Signature signature_from_json(const json& j) {
  if (!j.at("p").is_number_integer() || !j.at("q").is_number_integer()) {
    throw ParseError("p and q must be integers");
  }
  const int p = j.at("p").get<int>();
  const int q = j.at("q").get<int>();
  if (p < 0 || q < 0 || p + q < 1 || p + q > kMaxDimension) {
    throw ParseError("signature out of range: need 1 <= p+q <= " +
                     std::to_string(kMaxDimension));
  }
  return Signature(p, q);
}

FieldKind kind_from_json(const json& j, double tolerance) {
  if (!j.at("field").is_string()) throw ParseError("field must be a string");
  return FieldKind{parse_field(j.at("field").get<std::string>()), tolerance};
}

std::vector<Multivector> mv_list_from_json(const json& j, const Signature& sig,
                                           const FieldKind& kind) {
  if (!j.is_array()) throw ParseError("generator list must be an array");
  std::vector<Multivector> out;
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(mv_from_json(item, sig, kind));
  return out;
}

}  // namespace

GeneratorSet generator_set_from_json(const json& j, double tolerance) {
  try {
    const Signature sig = signature_from_json(j);
    const FieldKind kind = kind_from_json(j, tolerance);
    return GeneratorSet::validate(sig, kind,
                                  mv_list_from_json(j.at("generators"), sig, kind));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed generator set: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("malformed generator set: ") + e.what());
  }
}

json instance_to_json(const InstanceFile& inst) {
  json out;
  out["p"] = inst.gamma.sig().p;
  out["q"] = inst.gamma.sig().q;
  out["field"] = field_name(inst.gamma.kind().tag);
  json gamma = json::array();
  for (const auto& g : inst.gamma.generators()) gamma.push_back(mv_to_json(g));
  json beta = json::array();
  for (const auto& g : inst.beta.generators()) beta.push_back(mv_to_json(g));
  out["gamma"] = std::move(gamma);
  out["beta"] = std::move(beta);
  return out;
}

InstanceFile instance_from_json(const json& j, double tolerance) {
  try {
    const Signature sig = signature_from_json(j);
    const FieldKind kind = kind_from_json(j, tolerance);
    GeneratorSet gamma =
        GeneratorSet::validate(sig, kind, mv_list_from_json(j.at("gamma"), sig, kind));
    GeneratorSet beta =
        GeneratorSet::validate(sig, kind, mv_list_from_json(j.at("beta"), sig, kind));
    return {std::move(gamma), std::move(beta)};
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed instance: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("malformed instance: ") + e.what());
  }
}

json solve_result_to_json(const SolveResult& result) {
  json out;
  if (result.case_id == kEvenCase) {
    out["case"] = "even";
  } else {
    out["case"] = result.case_id;
  }
  out["central_factor"] = mv_to_json(result.central);
  out["T"] = mv_to_json(result.t);
  out["residual"] = result.residual;
  if (result.candidate.size() == 1) {
    out["candidate"] = blade_key(result.candidate[0]);
  } else {
    json pair = json::array();
    for (BladeMask mask : result.candidate) pair.push_back(blade_key(mask));
    out["candidate"] = std::move(pair);
  }
  return out;
}

SolutionFile solution_from_json(const json& j, const Signature& sig, const FieldKind& kind) {
  try {
    int case_id = kEvenCase;
    if (j.at("case").is_string()) {
      if (j.at("case").get<std::string>() != "even") {
        throw ParseError("case must be \"even\" or an integer 1..6");
      }
    } else {
      case_id = j.at("case").get<int>();
      if (case_id < 1 || case_id > 6) throw ParseError("case out of range");
    }
    Multivector central = mv_from_json(j.at("central_factor"), sig, kind);
    Multivector t = mv_from_json(j.at("T"), sig, kind);
    const double residual = j.contains("residual") ? j.at("residual").get<double>() : 0.0;
    return {case_id, std::move(central), std::move(t), residual};
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed solution: ") + e.what());
  }
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("cannot parse '" + path + "': " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

}  // namespace cliff::io
