#include <gtest/gtest.h>

#include "bipglue/ai.hpp"
#include "bipglue/connector.hpp"
#include "bipglue/dot.hpp"
#include "bipglue/error.hpp"
#include "support/connector_gen.hpp"
#include "support/tree_gen.hpp"

using namespace bipglue;

namespace {

ConnectorTerm C(const char* text) { return parse_connector(text); }
std::string eval(const char* text) { return to_string(eval_connector(C(text))); }

const char* const kControllerTrees[] = {
    "a! al! -b -off -> test! (+) on! onc!",
    "off! offc! -> a! al! -> test! (+) a! al! -b -on -> test! (+) off! -b",
    "b! bl!",
};

bool same_sem(const InteractionSet& a, const InteractionSet& b) {
  const auto u = port_union(a.universe(), b.universe());
  return a.widened(u) == b.widened(u);
}

ConnectorTerm conn_of(const AiTerm& t) {
  switch (t.kind()) {
    case AiTerm::Kind::Zero:
      return ConnectorTerm::zero();
    case AiTerm::Kind::One:
      return ConnectorTerm::one();
    case AiTerm::Kind::Port:
      return ConnectorTerm::port(t.port());
    case AiTerm::Kind::Union:
      return ConnectorTerm::sum(conn_of(t.lhs()), conn_of(t.rhs()));
    case AiTerm::Kind::Sync:
      return ConnectorTerm::fusion(
          {ConnectorTerm::typed(conn_of(t.lhs()), Role::Synchron),
           ConnectorTerm::typed(conn_of(t.rhs()), Role::Synchron)});
  }
  return ConnectorTerm::zero();
}

}  // namespace

TEST(ConnectorParse, BroadcastShape) {
  const auto x = C("p'qr");
  ASSERT_EQ(x.kind(), ConnectorTerm::Kind::Fusion);
  ASSERT_EQ(x.operands().size(), 3u);
  EXPECT_EQ(x.operands()[0].role(), Role::Trigger);
  EXPECT_EQ(x.operands()[1].role(), Role::Synchron);
  EXPECT_EQ(x.operands()[2].role(), Role::Synchron);
  EXPECT_EQ(x.operands()[0].inner(), ConnectorTerm::port(act(Port("p"))));
  EXPECT_EQ(x.operands()[2].inner(), ConnectorTerm::port(act(Port("r"))));
}

TEST(ConnectorParse, CausalChainShape) {
  const auto x = C("p'[q'r]");
  ASSERT_EQ(x.kind(), ConnectorTerm::Kind::Fusion);
  ASSERT_EQ(x.operands().size(), 2u);
  EXPECT_EQ(x.operands()[0].role(), Role::Trigger);
  const auto& s = x.operands()[1];
  EXPECT_EQ(s.role(), Role::Synchron);
  ASSERT_EQ(s.inner().kind(), ConnectorTerm::Kind::Fusion);
  EXPECT_EQ(s.inner().operands()[0].role(), Role::Trigger);
  EXPECT_EQ(s.inner().operands()[1].role(), Role::Synchron);
}

TEST(ConnectorParse, ConstantsAndErrors) {
  const auto z = C("[0]");
  ASSERT_EQ(z.kind(), ConnectorTerm::Kind::Typed);
  EXPECT_EQ(z.role(), Role::Synchron);
  EXPECT_EQ(z.inner().kind(), ConnectorTerm::Kind::Zero);
  EXPECT_EQ(to_string(z), "[0]");

  try {
    C("(p + q) r");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 0u);
  }
  try {
    C("p' [q r");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 7u);
  }
  EXPECT_THROW(C("p ]"), ParseError);
  EXPECT_EQ(to_string(C("[p + q]' r")), "[p + q]' r");
}

TEST(ConnectorEval, BasicShapes) {
  EXPECT_EQ(eval("pqr"), "{pqr}");
  EXPECT_EQ(eval("p'qr"), "{p, pq, pr, pqr}");
  EXPECT_EQ(eval("p'[qr]"), "{p, pqr}");
  EXPECT_EQ(eval("p'[q'r]"), "{p, pq, pqr}");
}

TEST(ConnectorEval, Degenerate) {
  EXPECT_EQ(eval("[0]' [p]"), "{}");
  EXPECT_EQ(eval("[0]' p'"), "{p}");
  EXPECT_EQ(eval("1' p"), "{1, p}");
  EXPECT_EQ(eval("p! -p"), "{}");
  EXPECT_EQ(eval("p!' q'"), "{q, p!, p! q}");
}

TEST(ConnectorEval, MatchesSubsetOracle) {
  gen::Rng rng(11);
  const auto ps = gen::ports(4);
  for (int i = 0; i < 500; ++i) {
    auto x = gen::connector(rng, ps, 4);
    if (gen::coin(rng, 0.3)) x = ConnectorTerm::sum(x, gen::connector(rng, ps, 3));
    ASSERT_EQ(oracle::to_raw(eval_connector(x)), oracle::connector(x))
        << to_string(x);
  }
}

TEST(ConnectorEval, UnionAgreesWithAi) {
  gen::Rng rng(12);
  const auto ps = gen::ports(4);
  for (int i = 0; i < 300; ++i) {
    const auto a = gen::ai_term(rng, ps, 3);
    const auto b = gen::ai_term(rng, ps, 3);
    const auto x = ConnectorTerm::sum(conn_of(a), conn_of(b));
    const auto expected = eval_ai(AiTerm::sum(a, b));
    ASSERT_TRUE(same_sem(eval_connector(x), expected)) << to_string(x);
    ASSERT_EQ(eval_connector(x),
              set_union(eval_connector(x.lhs()), eval_connector(x.rhs())));
  }
}

TEST(ConnectorPrint, RoundTrip) {
  gen::Rng rng(13);
  const auto ps = gen::ports(4);
  for (int i = 0; i < 300; ++i) {
    auto x = gen::connector(rng, ps, 4);
    if (gen::coin(rng, 0.2)) x = ConnectorTerm::sum(x, gen::connector(rng, ps, 3));
    ASSERT_EQ(parse_connector(to_string(x)), x) << to_string(x);
  }
}

TEST(Sigma, Examples) {
  EXPECT_EQ(to_string(sigma(parse_tree("b! bl!"))), "[b! bl!]");
  EXPECT_EQ(to_string(sigma(parse_tree("p -> q"))), "p' q");
  EXPECT_EQ(to_string(sigma(parse_tree("p -> q r"))), "p' [q r]");
  EXPECT_EQ(to_string(sigma(parse_tree(kControllerTrees[0]))),
            "[[a! al! -b -off]' test!]' [on! onc!]'");
  EXPECT_EQ(to_string(sigma(CausalTree{})), "[0]");
}

TEST(Sigma, CoherentWithTrees) {
  gen::Rng rng(14);
  for (int i = 0; i < 400; ++i) {
    const auto t = gen::tree(rng, 4, 4);
    ASSERT_TRUE(same_sem(eval_connector(sigma(t)), eval_tree(t))) << to_string(t);
  }
}

TEST(Tau, Examples) {
  EXPECT_TRUE(structurally_equal(tau(C("p'[q'r]")), parse_tree("p -> q -> r")));
  EXPECT_EQ(to_string(eval_tree(tau(C("p'[q'r]")))), "{p, pq, pqr}");
  EXPECT_TRUE(structurally_equal(tau(C("p'qr")), parse_tree("p -> (q (+) r)")));
  EXPECT_TRUE(structurally_equal(tau(C("[a! b]")), parse_tree("a! b")));
  EXPECT_TRUE(tau(C("[0]")).roots.empty());
}

TEST(Tau, BasicShapesRoundTrip) {
  for (const char* s : {"pqr", "p'qr", "p'[qr]", "p'[q'r]"}) {
    const auto x = C(s);
    EXPECT_EQ(eval_connector(sigma(tau(x))), eval_connector(x)) << s;
    EXPECT_EQ(eval_tree(tau(x)), eval_connector(x)) << s;
  }
}

TEST(Tau, RandomRoundTrip) {
  gen::Rng rng(15);
  const auto ps = gen::ports(4);
  for (int i = 0; i < 500; ++i) {
    const auto x = gen::connector(rng, ps, 3);
    const auto t = tau(x);
    ASSERT_TRUE(same_sem(eval_tree(t), eval_connector(x))) << to_string(x);
    ASSERT_TRUE(same_sem(eval_connector(sigma(t)), eval_connector(x)))
        << to_string(x);
  }
}

TEST(Tau, Unions) {
  EXPECT_THROW(tau(C("p + q")), SemanticError);
  EXPECT_EQ(to_string(eval_tree(tau(C("p + q + p q")))), "{p, q, pq}");
}

TEST(ConnectorNormal, Examples) {
  EXPECT_EQ(to_string(normalize_connector(sigma(parse_tree("-p -> q!")))),
            "[-p q!]");
  EXPECT_TRUE(is_normal_connector(C("[-p q!]")));
  EXPECT_TRUE(is_normal_connector(C("[p q]")));
  EXPECT_TRUE(is_normal_connector(C("p! q!")));
  EXPECT_TRUE(is_normal_connector(C("[p!]' [q! r!]")));
  EXPECT_TRUE(is_normal_connector(C("-p' [q!]'")));
  EXPECT_FALSE(is_normal_connector(C("p' q")));
  EXPECT_FALSE(is_normal_connector(C("[p! p]")));
  EXPECT_FALSE(is_normal_connector(C("[p! q!'] r!")));
  EXPECT_FALSE(is_normal_connector(C("[p! q!] + r!")));
  EXPECT_FALSE(is_normal_connector(C("p!' [-q' r!]")));
}

TEST(ConnectorNormal, SigmaOfNormalTrees) {
  gen::Rng rng(16);
  for (int i = 0; i < 400; ++i) {
    const auto t = normalize_tree(gen::tree(rng, 4, 4));
    ASSERT_TRUE(is_normal_connector(sigma(t))) << to_string(t);
  }
}

TEST(ConnectorNormal, ControllerConnectorsIdempotent) {
  for (const char* s : kControllerTrees) {
    const auto x = normalize_connector(sigma(parse_tree(s)));
    EXPECT_TRUE(is_normal_connector(x)) << s;
    EXPECT_EQ(normalize_connector(x), x) << s;
  }
}

TEST(ConnectorNormal, RandomConnectors) {
  gen::Rng rng(17);
  const auto ps = gen::ports(4);
  for (int i = 0; i < 300; ++i) {
    const auto x = gen::connector(rng, ps, 3);
    const auto n = normalize_connector(x);
    ASSERT_TRUE(is_normal_connector(n)) << to_string(x);
    const auto u = port_union(ports_of(x), ports_of(n));
    ASSERT_TRUE(equiv_offer(eval_connector(x).widened(u),
                            eval_connector(n).widened(u)))
        << to_string(x) << " vs " << to_string(n);
    ASSERT_EQ(normalize_connector(n), n) << to_string(x);
  }
}

TEST(Dot, Glyphs) {
  const auto d = to_dot(C("p'[q'r]"));
  EXPECT_NE(d.find("shape=triangle"), std::string::npos);
  EXPECT_NE(d.find("shape=point"), std::string::npos);
  EXPECT_NE(d.find("label=\"r\""), std::string::npos);
  const auto t = to_dot(parse_tree("p! -> q"));
  EXPECT_NE(t.find("label=\"p!\""), std::string::npos);
  EXPECT_NE(t.find("n0 -> n1"), std::string::npos);
}
