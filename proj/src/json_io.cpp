#include "bipglue/json_io.hpp"

#include "bipglue/ai.hpp"
#include "bipglue/error.hpp"

namespace bipglue {

using nlohmann::json;

namespace {

PortSet ports_from(const json& j, const char* what) {
  if (!j.is_array())
    throw SemanticError(std::string("expected an array of ports for ") + what);
  PortSet out;
  for (const auto& p : j) {
    if (!p.is_string())
      throw SemanticError(std::string("port names in ") + what +
                          " must be strings");
    out.insert(Port(p.get<std::string>()));
  }
  return out;
}

json to_json(const PortSet& s) {
  json out = json::array();
  for (const auto& p : s) out.push_back(p.name());
  return out;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw SemanticError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string string_field(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_string())
    throw SemanticError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
}

Interaction interaction_from_json(const json& j) {
  if (j.is_string()) {
    auto a = parse_interaction(j.get<std::string>(), PortLexing::Words);
    if (!a) throw SemanticError("contradictory interaction in glue");
    return *a;
  }
  if (!j.is_object()) throw SemanticError("interaction must be an object");
  auto get = [&](const char* key) {
    return j.contains(key) ? ports_from(j.at(key), key) : PortSet{};
  };
  auto a = Interaction::make(get("fire"), get("act"), get("neg"));
  if (!a) throw SemanticError("contradictory interaction in glue");
  return *a;
}

json to_json(const Interaction& a) {
  return {{"fire", to_json(a.fire())},
          {"act", to_json(a.act())},
          {"neg", to_json(a.neg())}};
}

InteractionSet glue_from_json(const json& j) {
  const json& items = j.is_object() ? field(j, "interactions") : j;
  if (!items.is_array()) throw SemanticError("glue must be an array");
  InteractionSet out;
  for (const auto& a : items) out.insert(interaction_from_json(a));
  return out;
}

json to_json(const InteractionSet& s) {
  json items = json::array();
  for (const auto& a : s) items.push_back(to_json(a));
  return {{"interactions", items}, {"universe", to_json(s.universe())}};
}

PriorityModel priority_from_json(const json& j) {
  const auto& pairs = field(j, "pairs");
  if (!pairs.is_array()) throw SemanticError("'pairs' must be an array");
  std::vector<PriorityModel::Pair> out;
  for (const auto& p : pairs)
    out.emplace_back(ports_from(field(p, "lower"), "lower"),
                     ports_from(field(p, "higher"), "higher"));
  return PriorityModel(std::move(out));
}

json to_json(const PriorityModel& prec) {
  json pairs = json::array();
  for (const auto& [lo, hi] : prec.pairs())
    pairs.push_back({{"lower", to_json(lo)}, {"higher", to_json(hi)}});
  return {{"pairs", pairs}};
}

Behaviour behaviour_from_json(const json& j) {
  std::vector<std::string> states;
  const auto& js = field(j, "states");
  if (!js.is_array()) throw SemanticError("'states' must be an array");
  for (const auto& s : js) {
    if (!s.is_string()) throw SemanticError("state ids must be strings");
    states.push_back(s.get<std::string>());
  }
  std::vector<Transition> transitions;
  if (j.contains("transitions")) {
    for (const auto& t : j.at("transitions"))
      transitions.push_back({string_field(t, "from"),
                             ports_from(field(t, "label"), "label"),
                             string_field(t, "to")});
  }
  Lts lts(std::move(states), string_field(j, "initial"),
          ports_from(field(j, "ports"), "ports"), std::move(transitions));
  OfferPairs extra;
  if (j.contains("offers")) {
    for (const auto& o : j.at("offers"))
      extra.emplace(string_field(o, "state"), Port(string_field(o, "port")));
  }
  return offer_closure(lts, extra);
}

json to_json(const Behaviour& b) {
  json transitions = json::array();
  for (const auto& t : b.lts().transitions())
    transitions.push_back(
        {{"from", t.from}, {"label", to_json(t.label)}, {"to", t.to}});
  json offers = json::array();
  for (const auto& [q, p] : extra_offers(b))
    offers.push_back({{"state", q}, {"port", p.name()}});
  return {{"states", b.lts().states()},
          {"initial", b.initial()},
          {"ports", to_json(b.ports())},
          {"transitions", transitions},
          {"offers", offers}};
}

}  // namespace bipglue
