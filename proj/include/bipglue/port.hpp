#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>

namespace bipglue {

class Port {
 public:
  // Throws SemanticError unless name is a valid, non-reserved identifier.
  explicit Port(std::string name);

  const std::string& name() const noexcept { return name_; }

  friend bool operator==(const Port&, const Port&) = default;
  friend std::strong_ordering operator<=>(const Port& a, const Port& b) {
    return a.name_.compare(b.name_) <=> 0;
  }

  static bool valid_name(std::string_view name);

 private:
  std::string name_;
};

using PortSet = std::set<Port>;

enum class Typing : std::uint8_t { Activation, Firing, Negative };

struct TypedPort {
  Port port;
  Typing typing;

  friend bool operator==(const TypedPort&, const TypedPort&) = default;
  friend std::strong_ordering operator<=>(const TypedPort&,
                                          const TypedPort&) = default;
};

inline TypedPort act(const Port& p) { return {p, Typing::Activation}; }
inline TypedPort fire(const Port& p) { return {p, Typing::Firing}; }
inline TypedPort neg(const Port& p) { return {p, Typing::Negative}; }

// `p`, `p!` or `-p`.
std::string to_string(const TypedPort& tp);

PortSet port_union(const PortSet& a, const PortSet& b);
bool is_subset(const PortSet& sub, const PortSet& super);

}  // namespace bipglue
