#include <algorithm>
#include <functional>

#include "bipglue/error.hpp"
#include "bipglue/tree.hpp"

namespace bipglue {

namespace {

struct RuleInfo {
  Rule rule;
  const char* name;
};

constexpr RuleInfo kRules[] = {
    {Rule::Axiom1a, "1a"},
    {Rule::Axiom1b, "1b"},
    {Rule::Axiom1c, "1c"},
    {Rule::Axiom1d, "1d"},
    {Rule::Axiom2, "2"},
    {Rule::Axiom3, "3"},
    {Rule::Axiom4, "4"},
    {Rule::Axiom5, "5"},
    {Rule::Axiom6, "6"},
    {Rule::Axiom7, "7"},
    {Rule::NoFiringLeaf, "nofiring-leaf"},
    {Rule::OneNode, "one-node"},
    {Rule::PushdownNode, "pushdown-node"},
};

std::vector<Node>& forest_at(CausalTree& t, const Position& parent) {
  std::vector<Node>* f = &t.roots;
  for (auto i : parent) {
    if (i >= f->size()) throw SemanticError("position out of range");
    f = &(*f)[i].children;
  }
  return *f;
}

Position parent_of(const Position& p) { return {p.begin(), p.end() - 1}; }

bool bare_zero(const Node& n) {
  return n.children.empty() && n.label == Label::constant_zero();
}

Label merged(const Label& a, const Label& b) {
  Label out = a;
  out.ports.insert(b.ports.begin(), b.ports.end());
  out.zero = a.zero || b.zero;
  out.one = a.one || b.one;
  // A merged label with ports no longer needs an explicit 1.
  if (!out.ports.empty()) out.one = false;
  return out;
}

std::vector<Node> tidy_forest(const std::vector<Node>& f) {
  std::vector<Node> out;
  for (const auto& n : f)
    if (!bare_zero(n)) out.push_back(n);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Applies the step in place; false when it does not apply.
bool apply(CausalTree& t, const RewriteStep& s) {
  if (s.rule == Rule::Axiom2) {
    auto& f = forest_at(t, s.position);
    auto next = tidy_forest(f);
    if (next == f) return false;
    f = std::move(next);
    return true;
  }
  if (s.position.empty()) return false;
  auto& siblings = forest_at(t, parent_of(s.position));
  const auto idx = s.position.back();
  if (idx >= siblings.size()) return false;
  Node& n = siblings[idx];
  Label& l = n.label;
  const bool nonroot = s.position.size() >= 2;

  switch (s.rule) {
    case Rule::Axiom1a:
      if (!l.zero || (l.ports.empty() && !l.one)) return false;
      l = Label::constant_zero();
      return true;
    case Rule::Axiom1b:
      if (!l.one || (l.ports.empty() && !l.zero)) return false;
      l.one = false;
      return true;
    case Rule::Axiom1c: {
      if (!s.port) return false;
      const auto& p = s.port->port;
      if (!l.ports.contains(fire(p)) || !l.ports.contains(act(p))) return false;
      l.ports.erase(act(p));
      return true;
    }
    case Rule::Axiom1d: {
      if (!s.port) return false;
      const auto& p = s.port->port;
      if (!l.ports.contains(neg(p))) return false;
      if (!l.ports.contains(act(p)) && !l.ports.contains(fire(p))) return false;
      l.ports.erase(neg(p));
      l.ports.erase(act(p));
      l.ports.erase(fire(p));
      l.zero = true;
      return true;
    }
    case Rule::Axiom3:
      if (n.children.size() != 1 || !bare_zero(n.children.front())) return false;
      n.children.clear();
      return true;
    case Rule::Axiom4:
      if (!l.zero || n.children.empty()) return false;
      n.children.clear();
      return true;
    case Rule::Axiom5: {
      if (!nonroot || !l.empty_firing() || n.children.size() != 1) return false;
      Node child = std::move(n.children.front());
      n.label = merged(l, child.label);
      n.children = std::move(child.children);
      return true;
    }
    case Rule::Axiom6: {
      if (!nonroot || !s.port) return false;
      const auto& parent = forest_at(t, parent_of(parent_of(s.position)))
          [s.position[s.position.size() - 2]];
      if (!parent.label.ports.contains(*s.port)) return false;
      if (s.reverse) return l.ports.erase(*s.port) > 0;
      return l.ports.insert(*s.port).second;
    }
    case Rule::Axiom7: {
      if (!s.reverse) {
        if (n.children.size() < 2) return false;
        Node copy = std::move(n);
        std::vector<Node> split;
        for (auto& c : copy.children) split.push_back({copy.label, {std::move(c)}});
        siblings.erase(siblings.begin() + static_cast<long>(idx));
        siblings.insert(siblings.begin() + static_cast<long>(idx),
                        std::make_move_iterator(split.begin()),
                        std::make_move_iterator(split.end()));
        return true;
      }
      bool merged_any = false;
      for (std::size_t j = siblings.size(); j-- > idx + 1;) {
        if (siblings[j].label != siblings[idx].label) continue;
        auto kids = std::move(siblings[j].children);
        siblings.erase(siblings.begin() + static_cast<long>(j));
        auto& target = siblings[idx].children;
        target.insert(target.end(), std::make_move_iterator(kids.begin()),
                      std::make_move_iterator(kids.end()));
        merged_any = true;
      }
      return merged_any;
    }
    case Rule::NoFiringLeaf:
      if (!nonroot || !n.children.empty() || !l.empty_firing()) return false;
      siblings.erase(siblings.begin() + static_cast<long>(idx));
      return true;
    case Rule::OneNode: {
      if (!nonroot || l.zero || !l.ports.empty()) return false;
      auto kids = std::move(n.children);
      siblings.erase(siblings.begin() + static_cast<long>(idx));
      siblings.insert(siblings.begin() + static_cast<long>(idx),
                      std::make_move_iterator(kids.begin()),
                      std::make_move_iterator(kids.end()));
      return true;
    }
    case Rule::PushdownNode: {
      if (!nonroot || !l.empty_firing() || n.children.empty()) return false;
      const Label up = l;
      auto kids = std::move(n.children);
      for (auto& k : kids) k.label = merged(up, k.label);
      siblings.erase(siblings.begin() + static_cast<long>(idx));
      siblings.insert(siblings.begin() + static_cast<long>(idx),
                      std::make_move_iterator(kids.begin()),
                      std::make_move_iterator(kids.end()));
      return true;
    }
    case Rule::Axiom2:
      break;
  }
  return false;
}

void visit(const std::vector<Node>& f, Position& path,
           const std::function<void(const Node&, const Position&)>& fn) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    path.push_back(i);
    fn(f[i], path);
    visit(f[i].children, path, fn);
    path.pop_back();
  }
}

}  // namespace

std::string rule_name(Rule r) {
  for (const auto& info : kRules)
    if (info.rule == r) return info.name;
  return "?";
}

std::optional<Rule> rule_from_name(std::string_view name) {
  for (const auto& info : kRules)
    if (name == info.name) return info.rule;
  return std::nullopt;
}

const std::vector<Rule>& all_rules() {
  static const std::vector<Rule> rules = [] {
    std::vector<Rule> out;
    for (const auto& info : kRules) out.push_back(info.rule);
    return out;
  }();
  return rules;
}

std::string to_string(const RewriteStep& s) {
  std::string out = rule_name(s.rule);
  if (s.reverse) out += " (reverse)";
  out += " at [";
  for (std::size_t i = 0; i < s.position.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s.position[i]);
  }
  out += "]";
  if (s.port) out += " on " + to_string(*s.port);
  return out;
}

CausalTree rewrite_axiom(const CausalTree& t, const RewriteStep& step) {
  CausalTree out = t;
  if (!apply(out, step))
    throw SemanticError("rule " + to_string(step) + " does not apply");
  return out;
}

std::vector<RewriteStep> applicable_steps(const CausalTree& t) {
  std::vector<RewriteStep> out;
  auto try_step = [&](RewriteStep s) {
    CausalTree copy = t;
    if (apply(copy, s)) out.push_back(std::move(s));
  };
  try_step({Rule::Axiom2, {}, {}, false});
  Position path;
  visit(t.roots, path, [&](const Node& n, const Position& p) {
    for (Rule r : {Rule::Axiom1a, Rule::Axiom1b, Rule::Axiom3, Rule::Axiom4,
                   Rule::Axiom5, Rule::NoFiringLeaf, Rule::OneNode,
                   Rule::PushdownNode})
      try_step({r, p, {}, false});
    try_step({Rule::Axiom2, p, {}, false});
    try_step({Rule::Axiom7, p, {}, false});
    try_step({Rule::Axiom7, p, {}, true});
    for (const auto& tp : n.label.ports) {
      try_step({Rule::Axiom1c, p, tp, false});
      try_step({Rule::Axiom1d, p, tp, false});
    }
    if (p.size() >= 2) {
      // Parent ports can be pushed into this node or removed from it.
      CausalTree copy = t;
      const auto& parent =
          forest_at(copy, parent_of(parent_of(p)))[p[p.size() - 2]];
      for (const auto& tp : parent.label.ports) {
        try_step({Rule::Axiom6, p, tp, false});
        try_step({Rule::Axiom6, p, tp, true});
      }
    }
  });
  return out;
}

}  // namespace bipglue
