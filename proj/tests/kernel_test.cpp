#include <gtest/gtest.h>

#include "bipglue/ai.hpp"
#include "bipglue/equivalence.hpp"
#include "bipglue/error.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace bipglue;

namespace {

InteractionSet S(const char* text) { return parse_interaction_set(text); }
InteractionSet ai(const char* text) { return eval_ai(parse_ai(text)); }

oracle::RawSet oracle_eval(const AiTerm& x) {
  switch (x.kind()) {
    case AiTerm::Kind::Zero:
      return {};
    case AiTerm::Kind::One:
      return {oracle::Raw{}};
    case AiTerm::Kind::Port: {
      oracle::Raw r;
      const char c = x.port().typing == Typing::Firing     ? '!'
                     : x.port().typing == Typing::Negative ? '-'
                                                           : 'a';
      r[x.port().port.name()].insert(c);
      return {r};
    }
    case AiTerm::Kind::Union:
      return oracle::sum(oracle_eval(x.lhs()), oracle_eval(x.rhs()));
    case AiTerm::Kind::Sync:
      return oracle::product(oracle_eval(x.lhs()), oracle_eval(x.rhs()));
  }
  return {};
}

// ---------------------------------------------------------------------------
// Ports and canonical interactions
// ---------------------------------------------------------------------------

TEST(Port, RejectsReservedAndMalformedNames) {
  EXPECT_THROW(Port("0"), SemanticError);
  EXPECT_THROW(Port("1"), SemanticError);
  EXPECT_THROW(Port("tt"), SemanticError);
  EXPECT_THROW(Port("ff"), SemanticError);
  EXPECT_THROW(Port(""), SemanticError);
  EXPECT_THROW(Port("a-b"), SemanticError);
  EXPECT_EQ(Port("off_c").name(), "off_c");
}

TEST(Canonicalize, FiringAbsorbsActivation) {
  const Port p("p");
  auto a = Interaction::make({fire(p), act(p)});
  ASSERT_TRUE(a);
  EXPECT_EQ(a->fire(), PortSet{p});
  EXPECT_TRUE(a->act().empty());
  EXPECT_TRUE(a->neg().empty());
}

TEST(Canonicalize, NegativeWithFiringIsContradiction) {
  const Port p("p");
  EXPECT_FALSE(Interaction::make({fire(p), neg(p)}));
  EXPECT_FALSE(Interaction::make({act(p), neg(p)}));
}

TEST(Canonicalize, EmptyIsTheUnit) {
  auto a = Interaction::make(std::vector<TypedPort>{});
  ASSERT_TRUE(a);
  EXPECT_TRUE(a->empty());
  EXPECT_EQ(to_string(*a), "1");
}

TEST(Canonicalize, IdempotentAndOrderIndependent) {
  gen::Rng rng(11);
  const auto ps = gen::ports(4);
  for (int i = 0; i < 500; ++i) {
    auto raw = gen::raw_label(rng, ps, 5);
    auto a = Interaction::make(raw);
    std::reverse(raw.begin(), raw.end());
    auto b = Interaction::make(raw);
    ASSERT_EQ(a.has_value(), b.has_value());
    if (!a) continue;
    EXPECT_EQ(*a, *b);
    auto again = Interaction::make(a->typed_ports());
    ASSERT_TRUE(again);
    EXPECT_EQ(*again, *a);
  }
}

// ---------------------------------------------------------------------------
// AI evaluation
// ---------------------------------------------------------------------------

TEST(EvalAi, Constants) {
  EXPECT_EQ(to_string(ai("1")), "{1}");
  EXPECT_EQ(to_string(ai("0")), "{}");
}

TEST(EvalAi, UnionAndSync) { EXPECT_EQ(to_string(ai("p + q.r")), "{p, qr}"); }

TEST(EvalAi, ContradictionsDropped) {
  // (p! + q)(-q) = p!·-q + q·-q; the second summand is 0.
  EXPECT_EQ(to_string(ai("(p!+q)*(-q)")), "{p! -q}");
}

TEST(EvalAi, MatchesIndependentExpansion) {
  gen::Rng rng(5);
  const auto ps = gen::ports(4);
  for (int i = 0; i < 400; ++i) {
    const auto x = gen::ai_term(rng, ps, 4);
    EXPECT_EQ(oracle::to_raw(eval_ai(x)), oracle_eval(x)) << to_string(x);
  }
}

TEST(EvalAi, SemiringLaws) {
  gen::Rng rng(6);
  const auto ps = gen::ports(3);
  for (int i = 0; i < 300; ++i) {
    const auto x = gen::ai_term(rng, ps, 3);
    const auto y = gen::ai_term(rng, ps, 3);
    const auto ex = eval_ai(x).interactions();
    EXPECT_EQ(eval_ai(AiTerm::sync(x, y)).interactions(),
              eval_ai(AiTerm::sync(y, x)).interactions());
    EXPECT_EQ(eval_ai(AiTerm::sync(x, AiTerm::one())).interactions(), ex);
    EXPECT_TRUE(eval_ai(AiTerm::sync(x, AiTerm::zero())).empty());
    EXPECT_EQ(eval_ai(AiTerm::sum(x, y)).interactions(),
              set_union(eval_ai(x), eval_ai(y)).interactions());
  }
}

TEST(EvalAi, PrintRoundTrip) {
  gen::Rng rng(8);
  const auto ps = gen::ports(4);
  for (int i = 0; i < 200; ++i) {
    const auto x = gen::ai_term(rng, ps, 3);
    const auto y = parse_ai(to_string(x), PortLexing::Words);
    EXPECT_EQ(eval_ai(x).interactions(), eval_ai(y).interactions());
  }
}

TEST(Parse, CompactAndWordModes) {
  EXPECT_EQ(to_string(ai("pqr")), "{pqr}");
  EXPECT_EQ(to_string(eval_ai(parse_ai("al offc", PortLexing::Auto))),
            "{al offc}");
  EXPECT_EQ(to_string(eval_ai(parse_ai("al", PortLexing::Words))), "{al}");
  EXPECT_EQ(to_string(eval_ai(parse_ai("al", PortLexing::Letters))), "{al}");
}

TEST(Parse, ErrorsCarryPositions) {
  try {
    parse_ai("p + + q");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse_ai("-p!"), ParseError);
  EXPECT_THROW(parse_ai("(p"), ParseError);
  EXPECT_THROW(parse_interaction_set("{p,,q}"), ParseError);
}

TEST(Parse, SetLiteral) {
  auto s = S("{p, pq, p! -q, 1}");
  EXPECT_EQ(s.size(), 4u);
  EXPECT_EQ(to_string(s), "{1, p, p q, p! -q}");
}

// ---------------------------------------------------------------------------
// Equivalences
// ---------------------------------------------------------------------------

TEST(EquivStrong, SetSemantics) {
  EXPECT_TRUE(equiv_strong(S("{p,pq}"), S("{pq,p}")));
  EXPECT_FALSE(equiv_strong(S("{p}").widened(PortSet{Port("q")}), S("{p,pq}")));
}

TEST(EquivStrong, UniverseMismatchThrows) {
  EXPECT_THROW(equiv_strong(S("{p}"), S("{q}")), SemanticError);
}

TEST(EquivOffer, NegativeRootRefinement) {
  EXPECT_TRUE(equiv_offer(S("{-p, -p q!}"), S("{-p q!}")));
}

TEST(EquivOffer, FiringDiffersOnSilentPort) {
  const auto a = S("{p!}").widened(PortSet{Port("q")});
  const auto b = S("{p! q}");
  EXPECT_FALSE(equiv_offer(a, b));
  auto w = offer_counterexample(a, b);
  ASSERT_TRUE(w);
  // Smallest witness: p fires, q silent.
  EXPECT_EQ(w->fired, PortSet{Port("p")});
  EXPECT_TRUE(w->offered.empty());
  EXPECT_EQ(w->left, (std::set<PortSet>{PortSet{Port("p")}}));
  EXPECT_TRUE(w->right.empty());
}

TEST(EquivOffer, SymmetricCausalityCollapses) {
  // p→q ⊕ q→p evaluates to {p!, q!, p! q!}, the same set as p ⊕ q.
  EXPECT_TRUE(equiv_offer(S("{p!, q!, p! q!}"), S("{p!, q!, p! q!}")));
}

TEST(EquivOffer, CapIsEnforced) {
  PortSet big;
  for (int i = 0; i < 17; ++i) big.insert(Port("x" + std::to_string(i)));
  InteractionSet a(big), b(big);
  EXPECT_THROW(equiv_offer(a, b), SemanticError);
  OfferOptions o;
  o.max_ports = 17;
  o.execution = Execution::Serial;
  EXPECT_TRUE(equiv_offer(a, b, o));
}

TEST(EquivOffer, MatchesDefinitionOracle) {
  gen::Rng rng(21);
  int disagreements = 0, equal = 0;
  for (int i = 0; i < 600; ++i) {
    const std::size_t n = 1 + gen::pick(rng, 4);
    auto a = gen::interaction_set(rng, n, 4);
    // Bias towards equivalent pairs by perturbing a.
    auto b = gen::coin(rng) ? normalize_interaction_set(a)
                            : gen::interaction_set(rng, n, 4);
    if (gen::coin(rng, 0.3)) b.insert(gen::interaction(rng, gen::ports(n)));
    const bool want = oracle::offer_equivalent(
        oracle::to_raw(a), oracle::to_raw(b), oracle::names(a.universe()));
    equal += want;
    if (equiv_offer(a, b) != want) ++disagreements;
  }
  EXPECT_EQ(disagreements, 0);
  EXPECT_GT(equal, 50);
}

TEST(EquivOffer, StrongImpliesOffer) {
  gen::Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    auto a = gen::interaction_set(rng, 3);
    auto b = InteractionSet(a.interactions(), a.universe());
    ASSERT_TRUE(equiv_strong(a, b));
    EXPECT_TRUE(equiv_offer(a, b));
  }
}

TEST(Kernels, SerialAndParallelAgree) {
  gen::Rng rng(99);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + gen::pick(rng, 8);
    auto a = gen::interaction_set(rng, n, 8);
    auto b = gen::interaction_set(rng, n, 8);
    if (gen::coin(rng)) b = a;
    const PortIndex idx(a.universe());
    const auto ca = compile(a, idx), cb = compile(b, idx);
    EXPECT_EQ(kernels::first_offer_difference_serial(ca, cb, n),
              kernels::first_offer_difference_parallel(ca, cb, n));
  }
}

// ---------------------------------------------------------------------------
// Normalization
// ---------------------------------------------------------------------------

TEST(NormalizeSet, Examples) {
  EXPECT_EQ(to_string(normalize_interaction_set(S("{-p, -p q!}"))),
            "{-p q!}");
  EXPECT_EQ(
      to_string(normalize_interaction_set(
          S("{p!, p! -q, p! -q r!, p! -q s!, p! -q r! s!}"))),
      "{p!, p! -q r!, p! -q s!, p! -q r! s!}");
  EXPECT_TRUE(normalize_interaction_set(S("{}")).empty());
}

TEST(NormalizeSet, PreservesOfferEquivalence) {
  gen::Rng rng(17);
  for (int i = 0; i < 500; ++i) {
    auto s = gen::interaction_set(rng, 1 + gen::pick(rng, 4), 8);
    const auto n = normalize_interaction_set(s);
    EXPECT_TRUE(equiv_offer(s, n));
    EXPECT_EQ(normalize_interaction_set(n), n);
  }
}

TEST(NormalizeSet, CommutesWithOfferEquivalence) {
  gen::Rng rng(18);
  for (int i = 0; i < 500; ++i) {
    const std::size_t k = 1 + gen::pick(rng, 4);
    auto a = gen::interaction_set(rng, k, 5);
    auto b = gen::interaction_set(rng, k, 5);
    const auto na = normalize_interaction_set(a);
    const auto nb = normalize_interaction_set(b);
    EXPECT_EQ(equiv_offer(na, nb), equiv_offer(a, b));
    if (na == nb) {
      EXPECT_TRUE(equiv_offer(a, b));
    }
  }
}

TEST(NormalizeSet, EqualityDoesNotDecideOfferEquivalence) {
  // Both sets are normal and different, yet p fires alone under every
  // configuration in which it fires at all.
  const auto a = S("{p! q, p! -q}");
  const auto b = S("{p!}").widened(PortSet{Port("q")});
  EXPECT_NE(normalize_interaction_set(a), normalize_interaction_set(b));
  EXPECT_TRUE(equiv_offer(a, b));
}

// ---------------------------------------------------------------------------
// Priority translation
// ---------------------------------------------------------------------------

PortSet ports(std::initializer_list<const char*> names) {
  PortSet out;
  for (auto n : names) out.insert(Port(n));
  return out;
}

TEST(TranslatePriority, HierarchicalPriorityGlue) {
  PlainGlue gamma{ports({"p"}), ports({"q"}), ports({"s"}), ports({"r", "t"})};
  PriorityModel prec({{ports({"p"}), ports({"r"})}});
  EXPECT_EQ(to_string(translate_priority(gamma, prec)),
            "{q!, s!, p! -r, r! t!}");
}

TEST(TranslatePriority, EmptyOrderIsFiringLift) {
  PlainGlue gamma{ports({"p", "q"}), ports({"r"})};
  EXPECT_EQ(translate_priority(gamma, PriorityModel{}).interactions(),
            firing_lift(gamma).interactions());
}

TEST(TranslatePriority, CrossProductOverDominators) {
  PlainGlue gamma{ports({"a"})};
  PriorityModel prec({{ports({"a"}), ports({"p", "q"})},
                      {ports({"a"}), ports({"r"})}});
  EXPECT_EQ(to_string(translate_priority(gamma, prec)),
            "{a! -p -r, a! -q -r}");
}

TEST(TranslatePriority, UsesTransitiveClosure) {
  PlainGlue gamma{ports({"a"})};
  PriorityModel prec({{ports({"a"}), ports({"b"})},
                      {ports({"b"}), ports({"c"})}});
  EXPECT_EQ(to_string(translate_priority(gamma, prec)), "{a! -b -c}");
}

TEST(PriorityModel, RejectsCycles) {
  EXPECT_THROW(PriorityModel({{ports({"a"}), ports({"b"})},
                              {ports({"b"}), ports({"a"})}}),
               SemanticError);
  EXPECT_THROW(PriorityModel({{ports({"a"}), ports({"a"})}}), SemanticError);
}

}  // namespace
