#include <gtest/gtest.h>

#include <algorithm>

#include "../support/expect.hpp"
#include "../support/gen.hpp"
#include "npnas/decider.hpp"
#include "npnas/rewrite.hpp"

namespace npnas {
namespace {

Term v(const char* x) { return Term::var(Var(x)); }
Term ab(const char* x, Term t) { return Term::abs(Var(x), std::move(t)); }
AtomicConstraint eq(Term a, Term b) { return AtomicConstraint::eq(std::move(a), std::move(b)); }
AtomicConstraint fr(const char* x, Term t) { return AtomicConstraint::fresh(Var(x), std::move(t)); }

TypeEnv names(std::initializer_list<const char*> xs) {
  TypeEnv env;
  for (const char* x : xs) env.emplace(Var(x), Type::name("N"));
  return env;
}

std::vector<RuleId> rules(const std::vector<Selection>& sels) {
  std::vector<RuleId> out;
  for (const Selection& s : sels) out.push_back(s.rule);
  return out;
}

TEST(Decompose, Prefixes) {
  Term t = ab("x", ab("y", Term::app("V", v("z"))));
  auto [prefix, body] = decompose(t);
  EXPECT_EQ(prefix, (std::vector<Var>{Var("x"), Var("y")}));
  EXPECT_EQ(body, Term::app("V", v("z")));
  EXPECT_EQ(rebuild(prefix, body), t);
  EXPECT_TRUE(decompose(v("x")).first.empty());
  EXPECT_EQ(decompose(ab("x", v("y"))).second, v("y"));
}

TEST(Narrow, Patterns) {
  Signature sig = testing::lam_signature();
  TypeEnv env{{Var("x"), Type::name("N")}, {Var("_0"), Type::data("D")}};
  NarrowResult k = narrow(sig, env, Term::app("V", v("x")));
  EXPECT_EQ(k.pattern, Term::app("V", v("_1")));
  EXPECT_EQ(k.fresh_env, (TypeEnv{{Var("_1"), Type::name("N")}}));
  NarrowResult l = narrow(sig, env, Term::app("L", ab("x", Term::app("Z", Term::unit()))));
  EXPECT_EQ(l.pattern, Term::app("L", v("_1")));
  EXPECT_EQ(l.fresh_env.at(Var("_1")), Type::abs("N", Type::data("D")));
  TypeEnv with_l = env;
  with_l.emplace(Var("l"), Type::abs("N", Type::data("D")));
  NarrowResult a = narrow(sig, with_l, ab("x", Term::app("Z", Term::unit())));
  EXPECT_EQ(a.pattern, ab("_1", v("_2")));
  EXPECT_EQ(a.fresh_env.at(Var("_1")), Type::name("N"));
  EXPECT_EQ(a.fresh_env.at(Var("_2")), Type::data("D"));
  EXPECT_TRUE(narrow(sig, env, Term::unit()).fresh_env.empty());
  EXPECT_NPNAS_ERROR(narrow(sig, env, v("x")), ErrorKind::kNarrowOnVariable);
}

TEST(Selections, BranchCounts) {
  Problem e4{names({"x1", "y1", "x", "y"}), {eq(ab("x1", v("x")), ab("y1", v("y")))}};
  auto s = selections_for(e4, 0);
  EXPECT_EQ(std::count_if(s.begin(), s.end(), [](const Selection& x) { return x.rule == RuleId::kE4; }), 2);

  Problem f4{names({"x", "y1", "y2", "y"}), {fr("x", ab("y1", ab("y2", v("y"))))}};
  EXPECT_EQ(rules(selections_for(f4, 0)), std::vector<RuleId>(3, RuleId::kF4));

  Problem e5{names({"x"}), {eq(v("x"), v("x"))}};
  EXPECT_EQ(rules(selections_for(e5, 0)), std::vector<RuleId>{RuleId::kE5});
}

TEST(Selections, SortGatesPruneBranches) {
  TypeEnv env = names({"x", "y"});
  env.emplace(Var("m"), Type::name("M"));
  // Branch 0 would equate x with m, which has another sort.
  Problem p{env, {fr("x", ab("m", v("y")))}};
  auto sels = selections_for(p, 0);
  ASSERT_EQ(sels.size(), 1u);
  EXPECT_EQ(sels[0].branch, 1u);

  Problem f5{env, {fr("x", v("m"))}};
  EXPECT_EQ(rules(selections_for(f5, 0)), std::vector<RuleId>{RuleId::kF5});
}

TEST(Step, Examples) {
  Signature sig = testing::lam_signature();
  Problem e1{names({"x1", "y1"}), {eq(ab("x1", Term::unit()), ab("y1", Term::unit()))}};
  EXPECT_TRUE(step(sig, e1, {0, RuleId::kE1, 0, Orientation::kNone}).constraints.empty());

  TypeEnv env = names({"y", "z"});
  env.emplace(Var("x"), Type::data("D"));
  Term vy = Term::app("V", v("y"));
  Problem e6{env, {eq(v("x"), vy), fr("z", v("x"))}};
  Problem after = step(sig, e6, {0, RuleId::kE6, 0, Orientation::kLeft});
  EXPECT_EQ(after.constraints, (std::vector<AtomicConstraint>{eq(v("x"), vy), fr("z", vy)}));
  EXPECT_EQ(after.env, e6.env);

  TypeEnv env7 = names({"x1", "y1"});
  env7.emplace(Var("w"), Type::data("D"));
  Problem e7{env7, {eq(ab("x1", v("w")), ab("y1", Term::app("V", v("y1"))))}};
  Problem n7 = step(sig, e7, {0, RuleId::kE7, 0, Orientation::kLeft});
  EXPECT_EQ(n7.env.at(Var("_0")), Type::name("N"));
  EXPECT_EQ(n7.constraints,
            (std::vector<AtomicConstraint>{
                eq(v("w"), Term::app("V", v("_0"))),
                eq(ab("x1", Term::app("V", v("_0"))), ab("y1", Term::app("V", v("y1"))))}));

  EXPECT_NPNAS_ERROR(step(sig, e7, {0, RuleId::kE1, 0, Orientation::kNone}),
                     ErrorKind::kInvalidSelection);
}

TEST(Step, E4Branches) {
  Signature sig = testing::lam_signature();
  Problem p{names({"x1", "y1", "x", "y"}), {eq(ab("x1", v("x")), ab("y1", v("y")))}};
  EXPECT_EQ(step(sig, p, {0, RuleId::kE4, 0, Orientation::kNone}).constraints,
            (std::vector<AtomicConstraint>{eq(v("x"), v("x1")), eq(v("y"), v("y1"))}));
  EXPECT_EQ(step(sig, p, {0, RuleId::kE4, 1, Orientation::kNone}).constraints,
            (std::vector<AtomicConstraint>{fr("x", v("x1")), fr("y", v("y1")), eq(v("x"), v("y"))}));
}

TEST(Successors, SmallProblems) {
  Signature sig = testing::lam_signature();
  Problem e5{names({"x"}), {eq(v("x"), v("x"))}};
  EXPECT_EQ(successors(sig, e5), (std::vector<Problem>{Problem{e5.env, {}}}));
  TypeEnv env = names({"x"});
  env.emplace(Var("m"), Type::name("M"));
  Problem f5{env, {fr("x", v("m"))}};
  EXPECT_EQ(successors(sig, f5), (std::vector<Problem>{Problem{env, {}}}));
}

// Successors stay well-typed, extend the environment, and clashes have none.
TEST(RewriteProperties, PreservesWellFormedness) {
  Signature sig = testing::lam_signature();
  testing::Rng rng(5);
  for (int i = 0; i < 400; ++i) {
    Problem p = testing::random_problem(rng, sig, {});
    for (const Selection& s : enumerate_selections(sig, p)) {
      Problem q = step(sig, p, s);
      ASSERT_NO_THROW(typecheck(sig, q)) << to_string(p) << " via " << s.to_string();
      for (const auto& [x, t] : p.env) EXPECT_EQ(q.env.at(x), t);
    }
    for (std::size_t c = 0; c < p.constraints.size(); ++c) {
      if (is_clash_class(classify(p, c))) EXPECT_TRUE(selections_for(p, c).empty());
    }
  }
}

}  // namespace
}  // namespace npnas
