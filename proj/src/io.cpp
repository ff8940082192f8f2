#include "pricing/io.hpp"

#include <algorithm>
#include <fstream>

#include "pricing/errors.hpp"

namespace pricing {

using nlohmann::json;

namespace {

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  throw ParseError("expected a rational as \"p/q\" string or integer");
}

}  // namespace

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON in " + path);
  return j;
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw ParseError("invalid integer literal: " + j.get<std::string>());
    }
  }
  throw ParseError("expected an integer as number or string");
}

json integer_to_json(const Integer& value) {
  if (value.fits_slong_p()) return json(value.get_si());
  return json(value.get_str());
}

ProductDistribution instance_from_json(const json& j) {
  if (!j.is_object() || !j.contains("items") || !j["items"].is_array()) {
    throw ParseError("instance file needs an \"items\" array");
  }
  ProductDistribution dist;
  for (const auto& item : j["items"]) {
    if (!item.is_object() || !item.contains("support") || !item["support"].is_array()) {
      throw ParseError("each item needs a \"support\" array");
    }
    ItemDistribution id;
    for (const auto& point : item["support"]) {
      if (!point.is_object() || !point.contains("value") || !point.contains("prob")) {
        throw ParseError("each support point needs \"value\" and \"prob\"");
      }
      id.support.emplace_back(rational_from_json(point["value"]),
                              rational_from_json(point["prob"]));
    }
    dist.items.push_back(std::move(id));
  }
  dist.validate();
  return dist;
}

json instance_to_json(const ProductDistribution& dist) {
  json items = json::array();
  for (const auto& item : dist.items) {
    json support = json::array();
    for (const auto& [value, prob] : item.support) {
      support.push_back({{"value", to_string(value)}, {"prob", to_string(prob)}});
    }
    items.push_back({{"support", std::move(support)}});
  }
  return {{"items", std::move(items)}};
}

json bundle_to_json(Bundle bundle) {
  json out = json::array();
  for (std::size_t i = 0; i < 32; ++i) {
    if (bundle & (Bundle{1} << i)) out.push_back(i + 1);
  }
  return out;
}

Bundle bundle_from_json(const json& j, std::size_t max_items) {
  if (!j.is_array()) throw ParseError("a bundle must be an array of 1-based item indices");
  Bundle mask = 0;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw ParseError("bundle entries must be integers");
    const long long idx = e.get<long long>();
    if (idx < 1 || static_cast<std::size_t>(idx) > max_items) {
      throw ParseError("bundle item index out of range");
    }
    const Bundle bit = Bundle{1} << (idx - 1);
    if (mask & bit) throw ParseError("duplicate item in bundle");
    mask |= bit;
  }
  return mask;
}

Menu menu_from_json(const json& j) {
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array()) {
    throw ParseError("menu file needs an \"entries\" array");
  }
  std::vector<MenuEntry> entries;
  for (const auto& e : j["entries"]) {
    if (!e.is_object() || !e.contains("bundle") || !e.contains("price")) {
      throw ParseError("each menu entry needs \"bundle\" and \"price\"");
    }
    entries.push_back({bundle_from_json(e["bundle"]), rational_from_json(e["price"])});
  }
  return Menu(std::move(entries));
}

json menu_to_json(const Menu& menu) {
  json entries = json::array();
  for (const auto& e : menu.entries()) {
    entries.push_back({{"bundle", bundle_to_json(e.bundle)}, {"price", to_string(e.price)}});
  }
  return {{"entries", std::move(entries)}};
}

CompInstance comp_from_json(const json& j) {
  if (!j.is_object() || !j.contains("B") || !j.contains("W") || !j.contains("t")) {
    throw ParseError("COMP file needs \"B\", \"W\" and \"t\"");
  }
  CompInstance inst;
  if (!j["B"].is_array() || !j["W"].is_array()) throw ParseError("B and W must be arrays");
  for (const auto& e : j["B"]) inst.b.push_back(integer_from_json(e));
  for (const auto& e : j["W"]) {
    if (!e.is_number_integer()) throw ParseError("W entries must be 1-based integers");
    const long long idx = e.get<long long>();
    if (idx < 1 || static_cast<std::size_t>(idx) > inst.b.size()) {
      throw ParseError("W index out of range");
    }
    inst.w_indices.push_back(static_cast<std::size_t>(idx - 1));
  }
  inst.t = integer_from_json(j["t"]);
  inst.validate();
  return inst;
}

json comp_to_json(const CompInstance& inst) {
  json b = json::array();
  for (const auto& x : inst.b) b.push_back(integer_to_json(x));
  json w = json::array();
  std::vector<std::size_t> sorted = inst.w_indices;
  std::sort(sorted.begin(), sorted.end());
  for (auto i : sorted) w.push_back(i + 1);
  return {{"B", std::move(b)}, {"W", std::move(w)}, {"t", integer_to_json(inst.t)}};
}

HardInstance hard_from_json(const json& j) {
  if (!j.is_object() || !j.contains("compstar") || !j.contains("t")) {
    throw ParseError("hard-instance file needs \"compstar\" and \"t\"");
  }
  json comp = j["compstar"];
  if (!comp.contains("t")) comp["t"] = 0;  // the pricing t lives at the top level
  CompStarInstance star{comp_from_json(comp)};
  HardInstance hi = build_hard_instance(star, integer_from_json(j["t"]));
  if (j.contains("parameters")) {
    const auto& params = j["parameters"];
    if (params.contains("sigma") && rational_from_json(params["sigma"]) != hi.sigma) {
      throw ParseError("stored sigma disagrees with the recomputed construction");
    }
    if (params.contains("epsilon") && rational_from_json(params["epsilon"]) != hi.eps) {
      throw ParseError("stored epsilon disagrees with the recomputed construction");
    }
  }
  return hi;
}

json hard_to_json(const HardInstance& hi) {
  json compstar = comp_to_json(hi.source);
  compstar.erase("t");
  json params = {
      {"h", to_string(hi.h)},       {"p", to_string(hi.p)},
      {"delta", to_string(hi.delta)}, {"c", to_string(hi.c)},
      {"alpha", to_string(hi.alpha)}, {"sigma", to_string(hi.sigma)},
      {"tau", to_string(hi.tau)},   {"epsilon", to_string(hi.eps)},
  };
  return {{"schema_version", 1},
          {"compstar", std::move(compstar)},
          {"t", integer_to_json(hi.t)},
          {"parameters", std::move(params)},
          {"distribution", instance_to_json(hi.dist)}};
}

}  // namespace pricing
