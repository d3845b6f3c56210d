#include <gtest/gtest.h>

#include <set>

#include "../support/expect.hpp"
#include "../support/gen.hpp"
#include "npnas/oracle.hpp"

namespace npnas {
namespace {

Term v(const char* x) { return Term::var(Var(x)); }
Term ab(const char* x, Term t) { return Term::abs(Var(x), std::move(t)); }

TEST(Enumerate, Examples) {
  Signature sig = testing::lam_signature();
  EXPECT_EQ(enumerate_atrees(sig, Type::name("N"), {7, 2}).size(), 2u);
  auto abs = enumerate_atrees(sig, Type::abs("N", Type::name("N")), {3, 2});
  EXPECT_EQ(abs.size(), 3u);
  EXPECT_EQ(enumerate_atrees(sig, Type::unit(), {7, 2}),
            std::vector<AlphaTree>{AlphaTree::unit()});
}

// Independent count: enumerate ground trees over a pool wide enough for every
// binder, canonicalize, keep classes whose free names lie in the small pool.
TEST(Enumerate, MatchesCanonicalizedGroundTrees) {
  Signature sig = testing::lam_signature();
  const std::size_t pool = 2, max_size = 6;
  std::function<std::vector<GroundTree>(const Type&, std::size_t)> ground =
      [&](const Type& t, std::size_t size) {
        std::vector<GroundTree> out;
        if (size == 0) return out;
        switch (t.kind()) {
          case Type::Kind::kName:
            if (size == 1)
              for (std::size_t i = 0; i < pool + 3; ++i) out.push_back(GroundTree::name(Name{t.sort(), i}));
            break;
          case Type::Kind::kUnit:
            if (size == 1) out.push_back(GroundTree::unit());
            break;
          case Type::Kind::kData:
            for (const ConstructorDecl* c : sig.constructors_of(t.sort()))
              for (GroundTree& g : ground(c->arg, size - 1)) out.push_back(GroundTree::app(c->name, g));
            break;
          case Type::Kind::kAbs:
            if (size >= 3)
              for (std::size_t i = 0; i < pool + 3; ++i)
                for (GroundTree& g : ground(t.body(), size - 2))
                  out.push_back(GroundTree::abs(Name{t.sort(), i}, g));
            break;
          case Type::Kind::kTuple:
            break;
        }
        return out;
      };
  std::set<AlphaTree> expected;
  for (std::size_t s = 1; s <= max_size; ++s) {
    for (const GroundTree& g : ground(Type::data("D"), s)) {
      AlphaTree a = canonicalize(g);
      bool small = true;
      for (const Name& n : free_names(a)) small = small && n.index < pool;
      if (small) expected.insert(a);
    }
  }
  auto got = enumerate_atrees(sig, Type::data("D"), {max_size, pool});
  EXPECT_EQ(std::set<AlphaTree>(got.begin(), got.end()), expected);
  EXPECT_EQ(got.size(), expected.size());
}

TEST(BruteSat, PaperPair) {
  Signature sig = testing::lam_signature();
  TypeEnv env{{Var("x"), Type::name("N")}, {Var("y"), Type::name("N")}};
  Problem p{env, {AtomicConstraint::eq(ab("x", v("y")), ab("y", v("x")))}};
  OracleResult r = brute_sat(sig, p, {7, 2});
  ASSERT_TRUE(r.sat);
  EXPECT_EQ(r.witness->at(Var("x")), r.witness->at(Var("y")));
  p.constraints.push_back(AtomicConstraint::fresh(Var("x"), v("y")));
  OracleResult u = brute_sat(sig, p, {7, 2});
  EXPECT_FALSE(u.sat);
  EXPECT_TRUE(u.exact);
}

TEST(BruteSat, EmptyProblemAndGuard) {
  Signature sig = testing::lam_signature();
  OracleResult r = brute_sat(sig, Problem{{{Var("x"), Type::name("N")}}, {}}, {7, 2});
  ASSERT_TRUE(r.sat);
  EXPECT_EQ(r.witness->at(Var("x")), AlphaTree::free(Name{"N", 0}));
  TypeEnv many;
  for (const char* x : {"a", "b", "c", "d", "e"}) many.emplace(Var(x), Type::data("D"));
  EXPECT_NPNAS_ERROR(brute_sat(sig, Problem{many, {}}, {12, 3}, 1e6), ErrorKind::kSearchSpaceTooLarge);
  // Data variables make unsat answers bounded only.
  EXPECT_FALSE(brute_sat(sig, Problem{{{Var("d"), Type::data("D")}}, {}}, {3, 1}).exact);
}

}  // namespace
}  // namespace npnas
