#include <algorithm>
#include <map>

#include "bipglue/tree.hpp"

namespace bipglue {

namespace {

using Ancestry = std::map<Port, std::set<Typing>>;

// Canonical labels; subtrees under a 0 label vanish (0 -> t = 0 and 0 is the
// identity of ⊕).
std::vector<Node> canonical_labels(const std::vector<Node>& f) {
  std::vector<Node> out;
  for (const auto& n : f) {
    auto a = n.label.interaction();
    if (!a) continue;
    out.push_back({Label::of(*a), canonical_labels(n.children)});
  }
  return out;
}

// Innermost first: a non-root empty-firing leaf is dropped, an empty-firing
// node with children is pushed into them. Roots with empty firing support
// are pushed down as well unless they are leaves.
std::vector<Node> eliminate_empty_firing(const std::vector<Node>& f,
                                         bool roots, bool& changed) {
  std::vector<Node> out;
  for (const auto& n0 : f) {
    Node n{n0.label, eliminate_empty_firing(n0.children, false, changed)};
    if (!n.label.empty_firing()) {
      out.push_back(std::move(n));
      continue;
    }
    if (n.children.empty()) {
      if (roots) {
        out.push_back(std::move(n));
      } else {
        changed = true;
      }
      continue;
    }
    changed = true;
    const auto up = *n.label.interaction();
    for (auto& c : n.children) {
      auto m = merge(up, *c.label.interaction());
      if (m) out.push_back({Label::of(*m), std::move(c.children)});
    }
  }
  return out;
}

// Removes repeated typed ports along root-to-leaf paths. Same typing, or
// activation below firing: drop the lower occurrence. Negative against any
// other typing: the lower node becomes 0 and its subtree disappears.
std::vector<Node> resolve_repeats(const std::vector<Node>& f, Ancestry& anc,
                                  bool& changed) {
  std::vector<Node> out;
  for (const auto& n : f) {
    std::vector<TypedPort> kept;
    bool dead = false;
    for (const auto& tp : n.label.ports) {
      auto it = anc.find(tp.port);
      if (it == anc.end() || it->second.empty()) {
        kept.push_back(tp);
        continue;
      }
      const auto& above = it->second;
      const bool above_neg = above.contains(Typing::Negative);
      if (tp.typing == Typing::Negative ? above.size() > 1 || !above_neg
                                        : above_neg) {
        dead = true;
        break;
      }
      if (above.contains(tp.typing) ||
          (tp.typing == Typing::Activation && above.contains(Typing::Firing))) {
        changed = true;
        continue;
      }
      kept.push_back(tp);
    }
    if (dead) {
      changed = true;
      continue;
    }
    Node m{Label::of(*Interaction::make(kept)), {}};
    std::vector<std::pair<Port, Typing>> pushed;
    for (const auto& tp : m.label.ports)
      if (anc[tp.port].insert(tp.typing).second)
        pushed.emplace_back(tp.port, tp.typing);
    m.children = resolve_repeats(n.children, anc, changed);
    for (const auto& [p, ty] : pushed) anc[p].erase(ty);
    out.push_back(std::move(m));
  }
  return out;
}

bool normal_forest(const std::vector<Node>& f, Ancestry& anc, bool roots) {
  for (const auto& n : f) {
    const auto a = n.label.interaction();
    if (!a) return false;
    if (!roots && a->fire().empty()) return false;
    const auto typed = a->typed_ports();
    for (const auto& tp : typed) {
      auto it = anc.find(tp.port);
      if (it == anc.end()) continue;
      for (auto above : it->second) {
        if (above == tp.typing) return false;
        if (!(above == Typing::Activation && tp.typing == Typing::Firing))
          return false;
      }
    }
    std::vector<std::pair<Port, Typing>> pushed;
    for (const auto& tp : typed)
      if (anc[tp.port].insert(tp.typing).second)
        pushed.emplace_back(tp.port, tp.typing);
    const bool ok = normal_forest(n.children, anc, false);
    for (const auto& [p, ty] : pushed) anc[p].erase(ty);
    if (!ok) return false;
  }
  return true;
}

}  // namespace

CausalTree normalize_tree(const CausalTree& t, const NormalizeOptions& opts) {
  std::vector<Node> f = canonical_labels(t.roots);
  for (bool changed = true; changed;) {
    changed = false;
    f = eliminate_empty_firing(f, true, changed);
    Ancestry anc;
    f = resolve_repeats(f, anc, changed);
  }
  if (opts.strict) {
    std::erase_if(f, [](const Node& n) {
      return n.children.empty() && n.label.empty_firing();
    });
  }
  return canonical_order({std::move(f)});
}

bool is_normal_tree(const CausalTree& t) {
  Ancestry anc;
  return normal_forest(t.roots, anc, true);
}

}  // namespace bipglue
