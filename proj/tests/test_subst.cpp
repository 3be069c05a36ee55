#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sct/subst.hpp"
#include "support/gen.hpp"

using namespace sct;

static Substitution sub1(const char *x, Term img) {
  return Substitution{{x}, {std::move(img)}};
}

static Term dseq(std::vector<Step> steps, const char *v) {
  Clashes cl;
  return t_dseq(steps, t_var(v), cl);
}

static const Step A_ = Step::dtor("A");

TEST_CASE("apply") {
  Clashes cl;
  Substitution s = sub1("x", t_ctor("S", t_var("y")));
  CHECK(apply(t_var("x"), s, cl) == t_ctor("S", t_var("y")));
  CHECK(apply(t_var("z"), s, cl) == t_var("z"));  // outside the domain
  CHECK(apply(dseq({Step::dtor("S")}, "x"), s, cl) == t_var("y"));
  CHECK(!cl.ctor_clash);
  // <w>d x picks up the image under the approximation
  CHECK(apply(t_approx(Weight(0), t_var("x")), s, cl) ==
        t_approx(Weight(1), t_var("y")));
  // a destructor meeting the wrong constructor kills the summand
  Clashes cl2;
  CHECK(apply(dseq({Step::dtor("Z")}, "x"), s, cl2).is_zero());
  CHECK(cl2.ctor_clash);
}

// Associativity of plain composition holds on the zero-free fragment.  Once
// a summand dies (a clash, or a 0 substituted into a tuple component), the
// two groupings can disagree: distributing an approximation over a tuple
// before a component collapses to 0 keeps the sibling components alive.
TEST_CASE("compose is associative (no collapsing, zero-free)") {
  gen::Rng rng(7);
  std::vector<std::string> xs = {"x", "y", "z"};
  auto mk = [&] {
    return Substitution{xs,
                        {gen::nonzero_term(rng, 3), gen::nonzero_term(rng, 3),
                         gen::nonzero_term(rng, 3)}};
  };
  auto has_zero = [](const Substitution &s) {
    for (const Term &img : s.images)
      if (img.is_zero()) return true;
    return false;
  };
  int checked = 0;
  for (int i = 0; i < 20000 && checked < 1000; ++i) {
    Substitution a = mk(), b = mk(), c = mk();
    Clashes cl;
    Substitution ab = compose(a, b, cl);
    Substitution bc = compose(b, c, cl);
    Substitution left = compose(ab, c, cl);
    Substitution right = compose(a, bc, cl);
    if (cl.ctor_clash || cl.shape_clash) continue;
    if (has_zero(ab) || has_zero(bc) || has_zero(left) || has_zero(right))
      continue;
    ++checked;
    REQUIRE(left == right);
  }
  CHECK(checked >= 500);
}

TEST_CASE("collapsed composition") {
  Bounds b{2, 1};
  // [x := A- A- x] with itself: A- A- A- A- x folds to <-2>A- A- x,
  // clamped to <-1>A- A- x
  Substitution tau = sub1("x", dseq({A_, A_}, "x"));
  auto r = ccomp(tau, tau, b);
  REQUIRE(r.has_value());
  CHECK(r->images[0] == t_approx(Weight(-1), dseq({A_, A_}, "x")));

  // crossing an impossible constructor test discards the arc
  Substitution to_b = sub1("x", t_ctor("B", t_var("x")));
  Substitution takes_a = sub1("x", dseq({A_}, "x"));
  CHECK(!ccomp(takes_a, to_b, b).has_value());

  // shape errors are hard failures
  Substitution to_pair = sub1("x", t_tuple({t_var("x"), t_var("x")}));
  CHECK_THROWS_AS(ccomp(takes_a, to_pair, b), AnalysisError);
}

TEST_CASE("composition order is not associative") {
  // weight chain at B=2
  Bounds b2{2, 2};
  Substitution s1 = sub1("r", t_approx(Weight(-1), t_var("x")));
  Substitution s2 = sub1("x", t_approx(Weight(1), t_var("y")));
  Substitution s3 = sub1("y", t_approx(Weight(1), t_var("z")));
  auto left = ccomp(*ccomp(s1, s2, b2), s3, b2);
  auto right = ccomp(s1, *ccomp(s2, s3, b2), b2);
  REQUIRE(left);
  REQUIRE(right);
  CHECK(left->images[0] == t_approx(Weight(1), t_var("z")));
  CHECK(right->images[0] == t_approx(Weight::infinity(), t_var("z")));

  // constructor chain at D=1 (B=2 keeps the <1> visible)
  Bounds b1{1, 2};
  Substitution c1 = sub1("r", dseq({Step::dtor("C")}, "x"));
  Substitution c2 = sub1("x", t_ctor("C", t_var("y")));
  Substitution c3 = sub1("y", t_ctor("D", t_var("z")));
  auto cleft = ccomp(*ccomp(c1, c2, b1), c3, b1);
  auto cright = ccomp(c1, *ccomp(c2, c3, b1), b1);
  REQUIRE(cleft);
  REQUIRE(cright);
  CHECK(cleft->images[0] == t_ctor("D", t_var("z")));
  CHECK(cright->images[0] == t_approx(Weight(1), t_var("z")));
}

TEST_CASE("the f1/g1 trace compositions") {
  Bounds b{1, 1};
  Substitution s1 = sub1("x", t_ctor("A", t_var("x")));
  Substitution s2 = sub1("x", dseq({A_, A_}, "x"));
  auto s3 = ccomp(s2, s1, b);
  REQUIRE(s3);
  CHECK(s3->images[0] == dseq({A_}, "x"));
  auto s4 = ccomp(s1, s2, b);
  REQUIRE(s4);
  CHECK(s4->images[0] == t_ctor("A", t_approx(Weight(-1), dseq({A_}, "x"))));
  auto s5 = ccomp(s1, *s3, b);
  REQUIRE(s5);
  CHECK(s5->images[0] == t_ctor("A", t_approx(Weight(-1), t_var("x"))));
  auto s6 = ccomp(s2, *s4, b);
  REQUIRE(s6);
  CHECK(s6->images[0] == t_approx(Weight(-1), dseq({A_}, "x")));
  auto s7 = ccomp(s2, *s5, b);
  REQUIRE(s7);
  CHECK(s7->images[0] == t_approx(Weight(-1), t_var("x")));
}

TEST_CASE("ccomp lands in the bounded domain") {
  gen::Rng rng(99);
  std::vector<std::string> xs = {"x", "y", "z"};
  for (int i = 0; i < 1500; ++i) {
    Substitution a{xs, {gen::term(rng, 3), gen::term(rng, 3), gen::term(rng, 3)}};
    Substitution b{xs, {gen::term(rng, 3), gen::term(rng, 3), gen::term(rng, 3)}};
    Bounds bb{rng.range(0, 3), rng.range(1, 3)};
    try {
      auto r = ccomp(a, b, bb);
      if (!r) continue;
      for (const Term &img : r->images) {
        REQUIRE(depth_ctor(img) <= bb.D);
        REQUIRE(depth_dtor(img) <= bb.D);
        for (const Simple &s : img.sum) REQUIRE(!t_simple(s).is_zero());
      }
      // and every weight is in Z_B
      Clashes cl;
      for (const Term &img : r->images)
        REQUIRE(collapse_weight(img, bb.B) == img);
    } catch (const AnalysisError &) {
      // random images may be ill-shaped; that is a legitimate outcome
    }
  }
}

TEST_CASE("chain groupings stay compatible") {
  gen::Rng rng(100);
  std::vector<std::string> xs = {"x", "y", "z"};
  int checked = 0;
  for (int i = 0; i < 60000 && checked < 1000; ++i) {
    auto mk = [&] {
      return Substitution{
          xs, {gen::term(rng, 2), gen::term(rng, 2), gen::term(rng, 2)}};
    };
    Substitution a = mk(), b = mk(), c = mk();
    Bounds bb{rng.range(0, 2), rng.range(1, 2)};
    try {
      auto ab = ccomp(a, b, bb);
      auto bc = ccomp(b, c, bb);
      if (!ab || !bc) continue;
      auto left = ccomp(*ab, c, bb);
      auto right = ccomp(a, *bc, bb);
      if (!left || !right) continue;
      ++checked;
      REQUIRE(subst_compatible(*left, *right));
    } catch (const AnalysisError &) {
    }
  }
  CHECK(checked >= 500);
}

TEST_CASE("pointwise preorder and rendering") {
  Substitution a{{"x", "y"}, {t_var("x"), dseq({A_}, "y")}};
  Substitution b{{"x", "y"},
                 {t_approx(Weight(0), t_var("x")),
                  t_approx(Weight(-1), t_var("y"))}};
  CHECK(subst_leq(a, b));
  CHECK(!subst_leq(b, a));
  CHECK(subst_compatible(a, a));
  CHECK(show(a) == "[x := x; y := A- y]");
}
