#include "bipglue/port.hpp"

#include <algorithm>
#include <cctype>

#include "bipglue/error.hpp"

namespace bipglue {

bool Port::valid_name(std::string_view name) {
  if (name.empty()) return false;
  if (name == "tt" || name == "ff") return false;
  const auto c0 = static_cast<unsigned char>(name.front());
  if (!std::isalpha(c0) && c0 != '_') return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    const auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

Port::Port(std::string name) : name_(std::move(name)) {
  if (!valid_name(name_))
    throw SemanticError("invalid port name '" + name_ + "'");
}

std::string to_string(const TypedPort& tp) {
  switch (tp.typing) {
    case Typing::Firing:
      return tp.port.name() + "!";
    case Typing::Negative:
      return "-" + tp.port.name();
    case Typing::Activation:
      break;
  }
  return tp.port.name();
}

PortSet port_union(const PortSet& a, const PortSet& b) {
  PortSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

bool is_subset(const PortSet& sub, const PortSet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

}  // namespace bipglue
