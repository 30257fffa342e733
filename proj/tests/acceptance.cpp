// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "bipglue/ai.hpp"
#include "bipglue/behavior.hpp"
#include "bipglue/connector.hpp"
#include "bipglue/equivalence.hpp"
#include "bipglue/rules.hpp"
#include "bipglue/synthesis.hpp"
#include "bipglue/tree.hpp"
#include "support/priority_fixture.hpp"
#include "support/generators.hpp"
#include "support/tree_gen.hpp"

using namespace bipglue;

namespace {

// Outcome of one criterion: ok plus a short detail for the report.
struct Outcome {
  bool ok = true;
  std::string detail;

  void check(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

InteractionSet S(const char* text) { return parse_interaction_set(text); }
CausalTree T(const char* text) { return parse_tree(text); }

bool offer(const InteractionSet& a, const InteractionSet& b,
           const OfferOptions& o = {}) {
  const PortSet u = port_union(a.universe(), b.universe());
  return equiv_offer(a.widened(u), b.widened(u), o);
}

bool strong(const InteractionSet& a, const InteractionSet& b) {
  const PortSet u = port_union(a.universe(), b.universe());
  return equiv_strong(a.widened(u), b.widened(u));
}

Outcome basic_shapes() {
  Outcome o;
  const std::pair<const char*, const char*> cases[] = {
      {"pqr", "{pqr}"},
      {"p'qr", "{p, pq, pr, pqr}"},
      {"p'[qr]", "{p, pqr}"},
      {"p'[q'r]", "{p, pq, pqr}"},
  };
  for (const auto& [conn, set] : cases)
    o.check(eval_connector(parse_connector(conn)) == S(set), conn);
  return o;
}

Outcome refinement() {
  Outcome o;
  o.check(eval_tree(T("-p -> q!")) == S("{-p, -p q!}"), "-p -> q!");
  const auto c = T("p! -> -q -> (r! (+) s!)");
  o.check(eval_tree(c) == S("{p!, p! -q, p! -q r!, p! -q s!, p! -q r! s!}"),
          "five-element set");
  const auto d = T("p! -> (-q r! (+) -q s!)");
  o.check(structurally_equal(normalize_tree(T("-p -> q!")), T("-p q!")), "3a to 3b");
  o.check(structurally_equal(normalize_tree(c), d), "3c to 3d");
  o.check(eval_tree(d) == S("{p!, p! -q r!, p! -q s!, p! -q r! s!}"), "3d set");
  o.check(equiv_tree(T("-p -> q!"), T("-p q!"), EquivMode::Offer), "3a ~ 3b");
  o.check(!equiv_tree(T("-p -> q!"), T("-p q!"), EquivMode::Strong), "3a = 3b");
  o.check(equiv_tree(c, d, EquivMode::Offer), "3c ~ 3d");
  o.check(!equiv_tree(c, d, EquivMode::Strong), "3c = 3d");
  return o;
}

Outcome axioms() {
  Outcome o;
  gen::Rng rng(1001);
  std::size_t total = 0;
  for (Rule r : all_rules()) {
    for (int i = 0; i < 1000; ++i) {
      const auto t = gen::plant(rng, r);
      const auto s = gen::step_for(rng, t, r);
      o.check(s.has_value(), rule_name(r) + " not applicable in " + to_string(t));
      if (!s) continue;
      const auto u = rewrite_axiom(t, *s);
      o.check(equiv_tree(t, u, EquivMode::Offer),
              to_string(*s) + ": " + to_string(t) + " => " + to_string(u));
      ++total;
    }
  }
  if (o.ok) o.detail = std::to_string(total) + " instances, " +
                       std::to_string(all_rules().size()) + " rules";
  return o;
}

Outcome normal_trees() {
  Outcome o;
  gen::Rng rng(1002);
  for (int i = 0; i < 500; ++i) {
    const auto t = gen::tree(rng);
    const auto n = normalize_tree(t);
    o.check(is_normal_tree(n), "not normal: " + to_string(t));
    o.check(structurally_equal(normalize_tree(n), n), "not idempotent: " + to_string(t));
    o.check(equiv_tree(t, n, EquivMode::Offer), "not equivalent: " + to_string(t));
  }
  return o;
}

Outcome normal_rules() {
  Outcome o;
  gen::Rng rng(1003);
  for (int i = 0; i < 500; ++i) {
    const auto t = gen::tree(rng);
    const PortSet u = ports_of(t);
    const auto full = eval_rules(rules_of_tree(t, RuleMode::Full, u)).widened(u);
    const auto firing = eval_rules(rules_of_tree(t, RuleMode::FiringOnly, u)).widened(u);
    o.check(offer(firing, full), "R~ vs R: " + to_string(t));
    o.check(offer(firing, eval_tree(t)), "R~ vs tree: " + to_string(t));
  }
  return o;
}

InteractionSet without_empty_firing(const InteractionSet& s) {
  InteractionSet out(s.universe());
  for (const auto& a : s)
    if (!a.fire().empty()) out.insert(a);
  return out;
}

Outcome lemmas() {
  Outcome o;
  gen::Rng rng(1004);
  int changed = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + gen::pick(rng, 6);
    const auto ps = gen::ports(n);
    auto gamma = gen::interaction_set(rng, n, 5);
    // Plant redundant interactions: one without firing ports and one that
    // extends an existing interaction by an offer literal.
    if (gen::coin(rng)) {
      auto a = gen::interaction(rng, ps);
      gamma.insert(*Interaction::make(PortSet{}, port_union(a.act(), a.fire()), a.neg()));
    }
    if (!gamma.empty() && gen::coin(rng)) {
      const auto& base = *std::next(gamma.begin(), gen::pick(rng, gamma.size()));
      auto extra = gen::typed_port(rng, ps);
      if (extra.typing == Typing::Firing) extra = act(extra.port);
      auto tps = base.typed_ports();
      tps.push_back(extra);
      if (auto b = Interaction::make(tps)) gamma.insert(*b);
    }
    const auto comps = gen::system(rng, ps, 3, 3);
    const auto ref = compose_extended(gamma, comps);
    const auto nofiring = without_empty_firing(gamma);
    const auto minimal = normalize_interaction_set(gamma);
    changed += (nofiring != gamma) + (minimal != gamma);
    o.check(behaviour_equal(ref, compose_extended(nofiring, comps)),
            "no-firing lemma: " + to_string(gamma));
    o.check(behaviour_equal(ref, compose_extended(minimal, comps)),
            "minimality lemma: " + to_string(gamma));
  }
  o.check(changed > 100, "too few transformed glues");
  if (o.ok) o.detail = std::to_string(changed) + " transformed glues";
  return o;
}

bool enables(const Behaviour& b, const std::string& state, const PortSet& label) {
  for (const auto& t : b.lts().transitions())
    if (t.from == state && t.label == label) return true;
  return false;
}

Outcome hierarchical_priority() {
  Outcome o;
  const auto h = fixture::hierarchical();
  const auto flat = compose_extended(S("{p! -r, q!, s!, r! t!}"),
                                     {fixture::b1(), fixture::b2(), fixture::b3()});
  o.check(behaviour_equal(h, flat), "(a) hierarchical != offer flat");
  const auto naive = fixture::naive_flat();
  const PortSet p{Port("p")};
  o.check(enables(naive, "1,3,6", p), "(b) naive flat does not enable p");
  o.check(!enables(h, "1,3,6", p), "(b) hierarchical enables p");
  o.check(!behaviour_equal(naive, h), "(b) difference not detected");
  return o;
}

const char* const kBackup =
    "a! <=> al!\n"
    "b! <=> bl!\n"
    "on! <=> onc!\n"
    "offc! => off!\n"
    "b! => ~offc!\n"
    "test! => a!\n"
    "a! => -b | off!\n"
    "off! => -b | offc!\n"
    "hint: on => -b -off\n";

const char* const kExpectedSystems[] = {
    "tt => a! -b -off | on!\n"
    "a! => al! -b\nal! => a!\non! => onc!\nonc! => on!\ntest! => a!\n",
    "tt => a! -on | off!\n"
    "a! => al! -b | al! off!\nal! => a!\noff! => -b | offc!\n"
    "offc! => off!\ntest! => a!\n",
    "tt => b! bl!\nb! => tt\nbl! => tt\n",
};

const char* const kTrees[] = {
    "a! al! -b -off -> test! (+) on! onc!",
    "off! offc! -> a! al! -> test! (+) a! al! -b -on -> test! (+) off! -b",
    "b! bl!",
};

// Each result matches a distinct expectation.
bool matches_all(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& eq) {
  if (n != 3) return false;
  std::vector<bool> used(3, false);
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (std::size_t k = 0; k < 3 && !found; ++k)
      if (!used[k] && eq(i, k)) used[k] = found = true;
    if (!found) return false;
  }
  return true;
}

Outcome synthesis() {
  Outcome o;
  const auto c = parse_constraints(kBackup);
  o.check(c.formulas.size() == 8 && c.hints.size() == 1, "constraint file");
  const auto s = synthesize(c, true);
  const PortSet u = ports_of(c);
  o.check(s.systems.size() == 3, std::to_string(s.systems.size()) + " systems");
  o.check(matches_all(s.systems.size(),
                      [&](std::size_t i, std::size_t k) {
                        return eval_rules(s.systems[i]) ==
                               eval_rules(parse_rules(kExpectedSystems[k], PortLexing::Words, u));
                      }),
          "rule systems differ from the expected systems");
  OfferOptions restricted;
  restricted.admissible = hint_filter(c.hints, u);
  o.check(matches_all(s.trees.size(),
                      [&](std::size_t i, std::size_t k) {
                        return offer(eval_tree(s.trees[i]).widened(u), eval_tree(T(kTrees[k])).widened(u),
                                     restricted);
                      }),
          "trees differ from the golden trees");
  InteractionSet all(u);
  for (const auto& x : s.connectors) {
    o.check(is_normal_connector(x), "connector not normal: " + to_string(x));
    all = set_union(all, eval_connector(x).widened(u));
  }
  std::vector<BoolFormula> fs = c.formulas;
  fs.push_back(progress_formula(u));
  const auto models = satisfying_set(BoolFormula::conj(fs), u);
  o.check(offer(all, normalize_interaction_set(models), restricted),
          "connector union differs from the satisfying set");
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;  // 0: no limit
  Outcome (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "basic connector shapes", 1, basic_shapes},
      {2, "refinement trees and normal forms", 1, refinement},
      {3, "axiom and lemma soundness", 60, axioms},
      {4, "tree normal form", 0, normal_trees},
      {5, "rule normal form", 0, normal_rules},
      {6, "no-firing and minimality lemmas on behaviours", 120, lemmas},
      {7, "hierarchical vs flat differential", 1, hierarchical_priority},
      {8, "synthesis end to end", 10, synthesis},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs > c.limit_s) {
      o.ok = false;
      o.detail = "time limit " + std::to_string(c.limit_s) + " s exceeded";
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name
              << " (" << timing << (c.limit_s > 0 ? ", limit " + std::to_string(int(c.limit_s)) + " s" : "")
              << ")" << (o.detail.empty() ? "" : " - " + o.detail) << "\n";
    failed += !o.ok;
  }
  std::cout << "INFO criterion 9: no reference performance numbers to reproduce; set-valued "
               "checks use exact expected sets and criterion 7 a reconstructed fixture\n";
  return failed == 0 ? 0 : 1;
}
