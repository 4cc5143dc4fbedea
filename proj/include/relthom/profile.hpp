#ifndef RELTHOM_PROFILE_HPP
#define RELTHOM_PROFILE_HPP

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>

#include <json.hpp>

#include "relthom/catalog.hpp"

namespace relthom {

using json = nlohmann::ordered_json;

namespace detail {

/// Fail-closed field access: every key of the object must be consumed by
/// the caller via take()/finish().
class JsonReader {
 public:
  explicit JsonReader(const json& j, std::string where)
      : j_(j), where_(std::move(where)) {
    if (!j.is_object())
      throw input_error(where_ + ": expected a JSON object");
  }

  const json* take(const std::string& key) {
    seen_.insert(key);
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  const json& require(const std::string& key) {
    const json* v = take(key);
    if (!v) throw input_error(where_ + ": missing required key '" + key + "'");
    return *v;
  }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it)
      if (!seen_.count(it.key()))
        throw input_error(where_ + ": unknown key '" + it.key() + "'");
  }

 private:
  const json& j_;
  std::string where_;
  std::set<std::string> seen_;
};

inline std::int64_t as_int(const json& j, const std::string& what) {
  if (!j.is_number_integer())
    throw input_error(what + " must be an integer");
  return j.get<std::int64_t>();
}

}  // namespace detail

/// Is this a boundary-invariant name some correction formula can consume?
/// The difference-class family is keyed by degree: d_1, d_2, ...
inline bool is_reserved_invariant(const std::string& name) {
  static const std::set<std::string> named = {
      "Omega", "Omega_C", "Omega_j", "delta", "mu",
      "tau",   "i_a",     "T",       "rot_boundary"};
  if (named.count(name)) return true;
  if (name.size() > 2 && name.compare(0, 2, "d_") == 0) {
    for (std::size_t i = 2; i < name.size(); ++i)
      if (!std::isdigit(name[i])) return false;
    return name[2] != '0';
  }
  return false;
}

struct BoundaryInfo {
  std::string name;
  BoundaryKind kind = BoundaryKind::General;
  std::int64_t euler = 0;
};

/// The boundary data a prediction is conditioned on: dimensions, category,
/// the boundary manifold, and the named invariants the correction-term
/// table consumes.
struct PrescribedProfile {
  int m = 0, n = 0;
  Category category = Category::RealUnoriented;
  BoundaryInfo boundary;
  std::int64_t tau = 0;
  std::map<std::string, std::int64_t> invariants;

  /// Invariant by name; "tau" resolves to the dedicated field.
  std::int64_t invariant(const std::string& name) const {
    if (name == "tau") return tau;
    auto it = invariants.find(name);
    if (it == invariants.end())
      throw input_error("profile is missing invariant '" + name + "'");
    return it->second;
  }

  bool has_invariant(const std::string& name) const {
    return name == "tau" || invariants.count(name) > 0;
  }

  void validate() const {
    if (m < 1 || n < 1)
      throw input_error("profile dimensions must be positive");
    if (tau < 0) throw input_error("tau must be non-negative");
    for (auto& [name, value] : invariants) {
      if (!is_reserved_invariant(name))
        throw input_error("unknown invariant name '" + name + "'");
      if (name == "mu" && (value < 0 || value >= 16))
        throw input_error("mu must lie in [0, 16)");
      if (name == "T" && (value < 0 || value >= 24))
        throw input_error("T must lie in [0, 24)");
    }
  }

  static PrescribedProfile from_json(const json& j) {
    detail::JsonReader r(j, "prescribed profile");
    PrescribedProfile p;
    p.m = static_cast<int>(detail::as_int(r.require("m"), "m"));
    p.n = static_cast<int>(detail::as_int(r.require("n"), "n"));
    p.category = parse_category(r.require("category").get<std::string>());
    {
      detail::JsonReader b(r.require("boundary"), "boundary");
      p.boundary.name = b.require("name").get<std::string>();
      p.boundary.kind = parse_boundary_kind(b.require("kind").get<std::string>());
      if (const json* e = b.take("euler"))
        p.boundary.euler = detail::as_int(*e, "boundary euler");
      b.finish();
    }
    const json* tau_field = r.take("tau");
    if (tau_field) p.tau = detail::as_int(*tau_field, "tau");
    if (const json* inv = r.take("invariants")) {
      if (!inv->is_object())
        throw input_error("invariants must be an object");
      for (auto it = inv->begin(); it != inv->end(); ++it) {
        std::int64_t v = detail::as_int(it.value(), "invariant " + it.key());
        if (it.key() == "tau") {
          if (tau_field && p.tau != v)
            throw input_error("tau given twice with different values");
          p.tau = v;
        } else {
          p.invariants[it.key()] = v;
        }
      }
    }
    r.finish();
    p.validate();
    return p;
  }

  json to_json() const {
    json b;
    b["name"] = boundary.name;
    b["kind"] = render_boundary_kind(boundary.kind);
    b["euler"] = boundary.euler;
    json inv = json::object();
    for (auto& [k, v] : invariants) inv[k] = v;
    json j;
    j["m"] = m;
    j["n"] = n;
    j["category"] = render_category(category);
    j["boundary"] = b;
    j["tau"] = tau;
    j["invariants"] = inv;
    return j;
  }
};

/// Topology of a candidate extension: global invariants plus the relative
/// characteristic numbers the absolute class is paired against.  The
/// numbers are inputs; nothing here is computed from geometry.
struct ExtensionProfile {
  std::int64_t euler = 0;
  std::int64_t signature = 0;
  std::map<std::string, std::int64_t> rel_numbers;  // canonical monomial -> value
  std::optional<std::int64_t> degree_of_map;
  bool vanishing_defaults = false;

  /// Parse rel_number keys into monomials.  euler_degree fixes the degree
  /// of a bare "e" generator (the source dimension in practice).
  std::map<Monomial, Coeff> numbers(const Ring& ring, int euler_degree,
                                    int required_degree) const {
    std::map<Monomial, Coeff> out;
    for (auto& [key, value] : rel_numbers) {
      Monomial mono = parse_monomial(key, euler_degree);
      if (mono.degree() != required_degree)
        throw input_error("rel_number '" + key + "' has degree " +
                          std::to_string(mono.degree()) + ", expected " +
                          std::to_string(required_degree));
      out.emplace(mono, Coeff::of(ring, value));
    }
    return out;
  }

  static ExtensionProfile from_json(const json& j, int euler_degree) {
    detail::JsonReader r(j, "extension profile");
    ExtensionProfile p;
    if (const json* e = r.take("euler"))
      p.euler = detail::as_int(*e, "euler");
    if (const json* s = r.take("signature"))
      p.signature = detail::as_int(*s, "signature");
    if (const json* rn = r.take("rel_numbers")) {
      if (!rn->is_object())
        throw input_error("rel_numbers must be an object");
      for (auto it = rn->begin(); it != rn->end(); ++it) {
        parse_monomial(it.key(), euler_degree);  // syntax check, fail closed
        p.rel_numbers[it.key()] =
            detail::as_int(it.value(), "rel_number " + it.key());
      }
    }
    if (const json* d = r.take("degree_of_map")) {
      p.degree_of_map = detail::as_int(*d, "degree_of_map");
      if (*p.degree_of_map < 1)
        throw input_error("degree_of_map must be positive");
    }
    if (const json* v = r.take("vanishing_defaults")) {
      if (!v->is_boolean())
        throw input_error("vanishing_defaults must be a boolean");
      p.vanishing_defaults = v->get<bool>();
    }
    r.finish();
    return p;
  }

  json to_json() const {
    json rn = json::object();
    for (auto& [k, v] : rel_numbers) rn[k] = v;
    json j;
    j["euler"] = euler;
    j["signature"] = signature;
    j["rel_numbers"] = rn;
    if (degree_of_map) j["degree_of_map"] = *degree_of_map;
    j["vanishing_defaults"] = vanishing_defaults;
    return j;
  }
};

/// A full prediction scenario as stored in a profile file.
struct PredictionRequest {
  SingName type = SingName::A1;
  PrescribedProfile prescribed;
  ExtensionProfile extension;
  std::optional<std::int64_t> smale_override;

  SingTypeId id() const { return {type, prescribed.category}; }

  static PredictionRequest from_json(const json& j) {
    detail::JsonReader r(j, "prediction request");
    PredictionRequest q;
    q.type = parse_sing_name(r.require("type").get<std::string>());
    q.prescribed = PrescribedProfile::from_json(r.require("prescribed"));
    q.extension =
        ExtensionProfile::from_json(r.require("extension"), q.prescribed.m);
    if (const json* a = r.take("smale_coefficient_override"))
      q.smale_override = detail::as_int(*a, "smale_coefficient_override");
    r.finish();
    return q;
  }

  json to_json() const {
    json j;
    j["type"] = render_sing_name(type);
    j["prescribed"] = prescribed.to_json();
    j["extension"] = extension.to_json();
    if (smale_override) j["smale_coefficient_override"] = *smale_override;
    return j;
  }
};

}  // namespace relthom

#endif  // RELTHOM_PROFILE_HPP
