#include "bipglue/interaction.hpp"

#include <algorithm>
#include <iterator>

namespace bipglue {

namespace {

PortSet set_minus(const PortSet& a, const PortSet& b) {
  PortSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(out, out.end()));
  return out;
}

bool intersects(const PortSet& a, const PortSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

std::vector<Port> as_list(const PortSet& s) { return {s.begin(), s.end()}; }

}  // namespace

std::optional<Interaction> Interaction::make(PortSet fire, PortSet act,
                                             PortSet neg) {
  if (intersects(neg, fire) || intersects(neg, act)) return std::nullopt;
  Interaction out;
  out.act_ = set_minus(act, fire);
  out.fire_ = std::move(fire);
  out.neg_ = std::move(neg);
  return out;
}

std::optional<Interaction> Interaction::make(std::span<const TypedPort> raw) {
  PortSet f, a, n;
  for (const auto& tp : raw) {
    switch (tp.typing) {
      case Typing::Firing:
        f.insert(tp.port);
        break;
      case Typing::Activation:
        a.insert(tp.port);
        break;
      case Typing::Negative:
        n.insert(tp.port);
        break;
    }
  }
  return make(std::move(f), std::move(a), std::move(n));
}

std::optional<Interaction> Interaction::make(
    std::initializer_list<TypedPort> raw) {
  return make(std::span<const TypedPort>(raw.begin(), raw.size()));
}

Interaction Interaction::firing(const PortSet& ports) {
  Interaction out;
  out.fire_ = ports;
  return out;
}

PortSet Interaction::support() const {
  PortSet out = fire_;
  out.insert(act_.begin(), act_.end());
  out.insert(neg_.begin(), neg_.end());
  return out;
}

std::vector<TypedPort> Interaction::typed_ports() const {
  std::vector<TypedPort> out;
  out.reserve(size());
  for (const auto& p : fire_) out.push_back(bipglue::fire(p));
  for (const auto& p : act_) out.push_back(bipglue::act(p));
  for (const auto& p : neg_) out.push_back(bipglue::neg(p));
  std::sort(out.begin(), out.end());
  return out;
}

bool Interaction::contains(const TypedPort& tp) const {
  switch (tp.typing) {
    case Typing::Firing:
      return fire_.contains(tp.port);
    case Typing::Activation:
      return act_.contains(tp.port);
    case Typing::Negative:
      return neg_.contains(tp.port);
  }
  return false;
}

bool Interaction::subset_of(const Interaction& o) const {
  return is_subset(fire_, o.fire_) && is_subset(act_, o.act_) &&
         is_subset(neg_, o.neg_);
}

bool Interaction::below(const Interaction& o) const {
  if (!is_subset(fire_, o.fire_) || !is_subset(neg_, o.neg_)) return false;
  return std::all_of(act_.begin(), act_.end(), [&](const Port& p) {
    return o.act_.contains(p) || o.fire_.contains(p);
  });
}

std::strong_ordering operator<=>(const Interaction& a, const Interaction& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (auto c = as_list(a.fire_) <=> as_list(b.fire_); c != 0) return c;
  if (auto c = as_list(a.act_) <=> as_list(b.act_); c != 0) return c;
  return as_list(a.neg_) <=> as_list(b.neg_);
}

std::optional<Interaction> merge(const Interaction& a, const Interaction& b) {
  return Interaction::make(port_union(a.fire(), b.fire()),
                           port_union(a.act(), b.act()),
                           port_union(a.neg(), b.neg()));
}

Interaction difference(const Interaction& a, const Interaction& b) {
  // Components of a subset of a canonical interaction never contradict.
  return *Interaction::make(set_minus(a.fire(), b.fire()),
                            set_minus(a.act(), b.act()),
                            set_minus(a.neg(), b.neg()));
}

bool compact_printable(const Interaction& a) {
  return a.fire().empty() && a.neg().empty() &&
         std::all_of(a.act().begin(), a.act().end(),
                     [](const Port& p) { return p.name().size() == 1; });
}

std::string to_string(const Interaction& a, bool compact) {
  if (a.empty()) return "1";
  std::string out;
  for (const auto& tp : a.typed_ports()) {
    if (!out.empty() && !compact) out += ' ';
    out += to_string(tp);
  }
  return out;
}

}  // namespace bipglue
