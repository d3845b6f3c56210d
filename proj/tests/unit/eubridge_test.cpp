#include <gtest/gtest.h>

#include "../support/expect.hpp"
#include "../support/gen.hpp"
#include "npnas/decider.hpp"
#include "npnas/eubridge.hpp"

namespace npnas {
namespace {

Vertex nv(const char* a) { return {Vertex::Kind::kNameVar, a}; }
Vertex cn(const char* a) { return {Vertex::Kind::kName, a}; }
NameTerm id(Vertex v) { return NameTerm::identity(std::move(v)); }
Name n(std::size_t i) { return Name{kEUSort, i}; }

EUConstraint eq(NameTerm a, NameTerm b) { return {EUConstraint::Kind::kEq, std::move(a), std::move(b)}; }
EUConstraint fr(NameTerm a, NameTerm b) { return {EUConstraint::Kind::kFresh, std::move(a), std::move(b)}; }

EUProblem paper_example() {
  EUProblem s;
  s.name_vars = {"A", "B"};
  s.perm_vars = {"Q", "Q2"};
  NameTerm qa = NameTerm::perm("Q", nv("A"));
  NameTerm qb = NameTerm::perm("Q", nv("B"));
  s.constraints = {eq(qa, NameTerm::swap(qa, qb, qa)),
                   fr(NameTerm::perm("Q2", nv("A")), NameTerm::perm("Q2", nv("B")))};
  return s;
}

TEST(EUSemantics, Examples) {
  EUProblem s;
  s.names = {"n1", "n2"};
  s.name_vars = {"A", "B"};
  s.perm_vars = {"Q"};
  EUValuation theta;
  theta.name_vars = {{"A", eu_name(s, "n1")}, {"B", eu_name(s, "n2")}};
  theta.perms = {{"Q", Permutation::swap(eu_name(s, "n1"), eu_name(s, "n2"))}};
  EXPECT_TRUE(eu_satisfies(s, theta, eq(NameTerm::perm("Q", nv("A")), id(cn("n2")))));
  EXPECT_TRUE(eu_satisfies(s, theta, fr(id(cn("n1")), id(cn("n2")))));
  EXPECT_TRUE(eu_satisfies(s, theta, eq(NameTerm::swap(id(nv("A")), id(nv("B")), id(nv("A"))), id(nv("B")))));
  EXPECT_NPNAS_ERROR(eu_validate(EUProblem{{}, {}, {}, {eq(id(nv("A")), id(nv("A")))}}),
                     ErrorKind::kUndeclaredSymbol);
}

TEST(EUOracle, Examples) {
  EUProblem s;
  s.name_vars = {"A"};
  s.perm_vars = {"Q"};
  s.constraints = {eq(NameTerm::perm("Q", nv("A")), id(nv("A")))};
  EXPECT_TRUE(eu_brute_sat(s).sat);
  s.constraints = {fr(id(nv("A")), id(nv("A")))};
  EXPECT_FALSE(eu_brute_sat(s).sat);
  EXPECT_FALSE(eu_brute_sat(paper_example()).sat);
  EUProblem big;
  big.name_vars = {"A", "B", "C", "D", "E", "F", "G"};
  EXPECT_NPNAS_ERROR(eu_brute_sat(big), ErrorKind::kPoolTooLarge);
}

// A permutation may map a name variable onto a name outside every finite
// pool of concrete names; Q.n1 # n1 is satisfiable.
TEST(EUOracle, PermutationsReachOutsideThePool) {
  EUProblem s;
  s.names = {"n1"};
  s.perm_vars = {"Q"};
  s.name_vars = {"A"};
  s.constraints = {fr(NameTerm::perm("Q", cn("n1")), id(cn("n1")))};
  EXPECT_TRUE(eu_brute_sat(s).sat);
}

TEST(Encoding, SwapconAndBijcon) {
  Var x("x"), y("y"), u("u"), w("w");
  AtomicConstraint sc = mk_swapcon(x, y, u, w);
  AtomicConstraint bc = mk_bijcon(x, y, u, w);
  auto val = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    return Valuation{{x, AlphaTree::free(n(a))}, {y, AlphaTree::free(n(b))},
                     {u, AlphaTree::free(n(c))}, {w, AlphaTree::free(n(d))}};
  };
  EXPECT_TRUE(satisfies(val(1, 2, 2, 1), sc));
  EXPECT_FALSE(satisfies(val(1, 2, 1, 1), sc));
  EXPECT_TRUE(satisfies(val(1, 2, 0, 0), sc));
  EXPECT_TRUE(satisfies(val(1, 1, 0, 0), sc));
  EXPECT_FALSE(satisfies(val(1, 1, 0, 2), bc));
  EXPECT_TRUE(satisfies(val(1, 1, 2, 2), bc));
  EXPECT_TRUE(satisfies(val(0, 1, 2, 0), bc));
}

TEST(Translate, PaperExample) {
  EUTranslation t = translate_problem(paper_example());
  EXPECT_EQ(t.problem.constraints.size(), 5u);
  EXPECT_EQ(t.problem.env.size(), 7u);
  ASSERT_EQ(t.registry.temporaries.size(), 1u);
  const Var& z = t.registry.temporaries.front().first;
  const Var qa = t.registry.pvvar("Q", "A");
  const Var qb = t.registry.pvvar("Q", "B");
  EXPECT_EQ(t.problem.constraints[0], mk_swapcon(qa, qb, z, qa));
  EXPECT_EQ(t.problem.constraints[1], AtomicConstraint::eq(Term::var(qa), Term::var(z)));
  EXPECT_FALSE(t.problem.constraints[2].is_eq());
  EXPECT_EQ(t.problem.constraints[3],
            mk_bijcon(t.registry.vvar("A"), t.registry.vvar("B"), qa, qb));
  Signature sig = eu_signature();
  EXPECT_EQ(decide(sig, t.problem).status, Verdict::Status::kUnsat);
}

TEST(Translate, SmallCases) {
  EUProblem s;
  s.name_vars = {"A", "B"};
  s.constraints = {eq(id(nv("A")), id(nv("B")))};
  EUTranslation t = translate_problem(s);
  ASSERT_EQ(t.problem.constraints.size(), 1u);
  EXPECT_EQ(t.problem.constraints[0],
            AtomicConstraint::eq(Term::var(t.registry.vvar("A")), Term::var(t.registry.vvar("B"))));

  EUProblem names;
  names.names = {"a", "b", "c"};
  names.name_vars = {"A"};
  EXPECT_EQ(translate_problem(names).problem.constraints.size(), 3u);  // pairwise distinct
}

TEST(Translate, Valuations) {
  EUProblem s;
  s.names = {"a"};
  s.name_vars = {"A"};
  s.perm_vars = {"Q"};
  EUTranslation t = translate_problem(s);
  EUValuation theta;
  theta.name_vars = {{"A", n(1)}};
  theta.perms = {{"Q", Permutation()}};
  Valuation v = translate_valuation(s, t.registry, theta);
  EXPECT_EQ(v.at(t.registry.vvar("A")), AlphaTree::free(n(1)));
  EXPECT_EQ(v.at(t.registry.vvar("a")), AlphaTree::free(eu_name(s, "a")));
  EXPECT_EQ(v.at(t.registry.pvvar("Q", "A")), AlphaTree::free(n(1)));
}

// A ground EU solution translates to a solution of the encoding.
TEST(EncodingProperties, SolutionsTranslate) {
  testing::Rng rng(31);
  int sat = 0;
  for (int i = 0; i < 200; ++i) {
    EUProblem s = testing::random_eu(rng, {});
    EUOracleResult r = eu_brute_sat(s);
    if (!r.sat) continue;
    ++sat;
    EUTranslation t = translate_problem(s);
    Valuation v = extend_temporaries(s, t.registry, *r.witness,
                                     translate_valuation(s, t.registry, *r.witness));
    EXPECT_TRUE(satisfies(v, t.problem)) << to_string(t.problem);
  }
  EXPECT_GT(sat, 30);
}

}  // namespace
}  // namespace npnas
