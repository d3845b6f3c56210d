#include <gtest/gtest.h>

#include "../support/expect.hpp"
#include "../support/gen.hpp"
#include "npnas/foreduce.hpp"
#include "npnas/rewrite.hpp"

namespace npnas {
namespace {

Term v(const char* x) { return Term::var(Var(x)); }
Term ab(const char* x, Term t) { return Term::abs(Var(x), std::move(t)); }
AtomicConstraint eq(Term a, Term b) { return AtomicConstraint::eq(std::move(a), std::move(b)); }

Signature nat() {
  Signature sig;
  sig.add_name_sort("N");
  sig.add_data_sort("nat");
  sig.add_constructor("Z", Type::unit(), "nat");
  sig.add_constructor("S", Type::data("nat"), "nat");
  sig.validate();
  return sig;
}

TEST(FlReduce, SwapPair) {
  Problem p{{{Var("x"), Type::name("N")}, {Var("y"), Type::name("N")}},
            {eq(ab("x", v("y")), ab("y", v("x")))}};
  ReducedProblem rp = fl_reduce(nat(), p);
  EXPECT_TRUE(rp.problem.env.empty());
  Term uu = Term::tuple({Term::unit(), Term::unit()});
  EXPECT_EQ(rp.problem.constraints, std::vector<AtomicConstraint>{eq(uu, uu)});
  EXPECT_TRUE(rp.signature.name_sorts().empty());
}

TEST(FlReduce, DivergencePair) {
  TypeEnv env{{Var("x1"), Type::name("N")},
              {Var("y1"), Type::name("N")},
              {Var("x"), Type::data("nat")},
              {Var("y"), Type::data("nat")}};
  Problem p{env,
            {eq(ab("x1", v("x")), ab("y1", Term::app("S", v("y")))),
             eq(ab("y1", v("y")), ab("x1", Term::app("S", v("x"))))}};
  ReducedProblem rp = fl_reduce(nat(), p);
  auto pair = [](Term t) { return Term::tuple({Term::unit(), std::move(t)}); };
  EXPECT_EQ(rp.problem.constraints,
            (std::vector<AtomicConstraint>{eq(pair(v("x")), pair(Term::app("S", v("y")))),
                                           eq(pair(v("y")), pair(Term::app("S", v("x"))))}));
  EXPECT_FALSE(fo_unify(rp).sat);
}

TEST(FlReduce, DropsFreshness) {
  Problem p{{{Var("x"), Type::name("N")}}, {AtomicConstraint::fresh(Var("x"), v("x"))}};
  ReducedProblem rp = fl_reduce(nat(), p);
  EXPECT_TRUE(rp.problem.env.empty());
  EXPECT_TRUE(rp.problem.constraints.empty());
}

TEST(FoUnify, Examples) {
  TypeEnv env{{Var("x"), Type::data("nat")}, {Var("y"), Type::data("nat")}};
  auto s = [](Term t) { return Term::app("S", std::move(t)); };
  EXPECT_FALSE(fo_unify(Problem{env, {eq(v("x"), s(s(v("x"))))}}).sat);
  FOUnifier u = fo_unify(Problem{env, {eq(v("x"), Term::app("Z", Term::unit()))}});
  EXPECT_TRUE(u.sat);
  EXPECT_EQ(u.bindings.at(Var("x")), Term::app("Z", Term::unit()));
  EXPECT_FALSE(fo_unify(Problem{env, {eq(s(v("x")), Term::app("Z", v("y")))}}).sat);
}

TEST(FoSolve, GroundsAndRespectsFixedValues) {
  ReducedProblem rp{fl_signature(nat()),
                    {{{Var("x"), Type::data("nat")}, {Var("y"), Type::data("nat")}},
                     {eq(v("x"), Term::app("S", v("y")))}}};
  auto w = fo_solve(rp);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->at(Var("y")), AlphaTree::app("Z", AlphaTree::unit()));
  EXPECT_EQ(w->at(Var("x")), AlphaTree::app("S", w->at(Var("y"))));
  AlphaTree z = AlphaTree::app("Z", AlphaTree::unit());
  EXPECT_FALSE(fo_solve(rp, {{Var("x"), z}}));
  auto fixed = fo_solve(rp, {{Var("y"), AlphaTree::app("S", z)}});
  ASSERT_TRUE(fixed);
  EXPECT_EQ(fixed->at(Var("x")), AlphaTree::app("S", AlphaTree::app("S", z)));
}

TEST(Measure, Examples) {
  EXPECT_EQ(measure({}, Problem{}), Measure{});
  Problem p{{{Var("x"), Type::name("N")}}, {eq(v("x"), v("x"))}};
  Measure m = measure({}, p);
  EXPECT_EQ(m.unsolved_sizes, std::vector<std::size_t>{1});
  EXPECT_EQ(m.constraint_sizes, std::vector<std::size_t>{2});
  Problem solved{{{Var("x"), Type::name("N")}, {Var("y"), Type::name("N")}},
                 {eq(v("x"), v("y"))}};
  EXPECT_TRUE(is_solved_var(Var("x"), solved));
  EXPECT_TRUE(measure({}, solved).unsolved_sizes.empty());
}

TEST(Measure, MultisetOrder) {
  EXPECT_TRUE(measure_less({{1}, {}}, {{3}, {}}));
  EXPECT_FALSE(measure_less({{2}, {9}}, {{2}, {5, 5}}));
  EXPECT_TRUE(measure_less({{2}, {5, 5}}, {{2}, {9}}));
  Measure m{{1, 2}, {3}};
  EXPECT_FALSE(measure_less(m, m));
  EXPECT_TRUE(multiset_less({}, {1}));
  EXPECT_FALSE(multiset_less({1}, {}));
  EXPECT_TRUE(multiset_less({3, 3, 3, 2}, {4}));
  EXPECT_FALSE(multiset_less({4, 1}, {4}));
}

TEST(Measure, E2StepDecreases) {
  Signature sig = testing::lam_signature();
  TypeEnv env{{Var("x"), Type::name("N")}, {Var("y"), Type::name("N")}};
  Problem p{env, {eq(Term::app("V", v("x")), Term::app("V", v("y")))}};
  Problem q = step(sig, p, {0, RuleId::kE2, 0, Orientation::kNone});
  EXPECT_TRUE(measure_less(measure({}, q), measure({}, p)));
}

// Reduction commutes with valuations: if V satisfies p then fl(V) satisfies
// fl(p).
TEST(FoProperties, ReductionIsSound) {
  Signature sig = testing::lam_signature();
  testing::Rng rng(17);
  int checked = 0;
  for (int i = 0; i < 2000 && checked < 200; ++i) {
    Problem p = testing::random_problem(rng, sig, {3, 2, 2, 50});
    Valuation val;
    for (const auto& [x, t] : p.env) val.emplace(x, canonicalize(testing::random_ground(rng, sig, t, 2, 1)));
    if (!satisfies(val, p)) continue;
    ++checked;
    ReducedProblem rp = fl_reduce(sig, p);
    EXPECT_TRUE(fo_unify(rp).sat) << to_string(p);
    FOValuation w = fl_valuation(p.env, val);
    EXPECT_TRUE(satisfies(w, rp.problem)) << to_string(p);
  }
  EXPECT_GT(checked, 50);
}

}  // namespace
}  // namespace npnas
