#include <doctest.h>
#include <provlog/formula.hpp>

#include <map>
#include <set>

#include "testutil.hpp"

using namespace provlog;

namespace {

Formula P() { return Formula::atom("p"); }
Formula Q() { return Formula::atom("q"); }
Formula R() { return Formula::atom("r"); }

// Truth-functional evaluation treating the formulas in `lits` (atoms and
// maximal boxed subformulas) as opaque literals. Used to check that
// impl_normal_form preserves the boolean abstraction.
bool boolean_eval(Formula f, const std::map<Formula, bool>& lits) {
  auto it = lits.find(f);
  if (it != lits.end()) return it->second;
  switch (f.kind()) {
    case Kind::Bot: return false;
    case Kind::Top: return true;
    case Kind::And: return boolean_eval(f.left(), lits) && boolean_eval(f.right(), lits);
    case Kind::Or: return boolean_eval(f.left(), lits) || boolean_eval(f.right(), lits);
    case Kind::Imp: return !boolean_eval(f.left(), lits) || boolean_eval(f.right(), lits);
    default: FAIL("unexpected literal ", print(f)); return false;
  }
}

}  // namespace

TEST_CASE("parser handles the full grammar") {
  CHECK(parse("p") == P());
  CHECK(parse("foo_9") == Formula::atom("foo_9"));
  CHECK(parse("false") == Formula::bot());
  CHECK(parse("true") == Formula::top());
  CHECK(parse("~p") == Formula::imp(P(), Formula::bot()));
  CHECK(parse("[]p") == Formula::box(P()));
  CHECK(parse("boxdot p") == Formula::conj(P(), Formula::box(P())));

  SUBCASE("precedence and associativity") {
    CHECK(parse("p /\\ q \\/ r") == Formula::disj(Formula::conj(P(), Q()), R()));
    CHECK(parse("p \\/ q /\\ r") == Formula::disj(P(), Formula::conj(Q(), R())));
    CHECK(parse("p -> q -> r") == Formula::imp(P(), Formula::imp(Q(), R())));
    CHECK(parse("~p /\\ q") == Formula::conj(Formula::neg(P()), Q()));
    CHECK(parse("[]p -> p") == Formula::imp(Formula::box(P()), P()));
    CHECK(parse("~[]p") == Formula::neg(Formula::box(P())));
    CHECK(parse("boxdot p -> q") == Formula::imp(Formula::boxdot(P()), Q()));
    CHECK(parse("(p -> q) -> r") == Formula::imp(Formula::imp(P(), Q()), R()));
  }

  SUBCASE("unicode aliases") {
    CHECK(parse("□(p→q)") == parse("[](p -> q)"));
    CHECK(parse("⊡p∧¬q") == parse("boxdot p /\\ ~q"));
    CHECK(parse("⊥∨⊤") == parse("false \\/ true"));
  }

  SUBCASE("errors carry the offending position") {
    CHECK_THROWS_AS(parse("p ->"), ParseError);
    CHECK_THROWS_AS(parse("(p -> q"), ParseError);
    CHECK_THROWS_AS(parse("p q"), ParseError);
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("P"), ParseError);
    try {
      parse("p /\\ (q \\/ )");
    } catch (const ParseError& e) {
      CHECK(e.position == 11);
    }
  }
}

TEST_CASE("printer is minimal and reparses to the same formula") {
  CHECK(print(parse("p /\\ q \\/ r")) == "p /\\ q \\/ r");
  CHECK(print(parse("p /\\ (q \\/ r)")) == "p /\\ (q \\/ r)");
  CHECK(print(parse("p -> q -> r")) == "p -> q -> r");
  CHECK(print(parse("(p -> q) -> r")) == "(p -> q) -> r");
  CHECK(print(parse("[](p -> q)")) == "[](p -> q)");
  CHECK(print(parse("[]p /\\ p")) == "[]p /\\ p");
  CHECK(print(Formula::neg(P())) == "~p");
  CHECK(print(Formula::neg(Formula::conj(P(), Q()))) == "~(p /\\ q)");
  CHECK(print(Formula::boxdot(P())) == "p /\\ []p");
  CHECK(print(Formula::bot()) == "false");

  // conjunction/disjunction associate left, so only right nesting needs parens
  CHECK(print(Formula::conj(Formula::conj(P(), Q()), R())) == "p /\\ q /\\ r");
  CHECK(print(Formula::conj(P(), Formula::conj(Q(), R()))) == "p /\\ (q /\\ r)");

  testutil::FormulaGen gen(20260821, {"p", "q", "r"});
  for (int i = 0; i < 500; ++i) {
    Formula f = gen.gen(gen.pick(10));
    CAPTURE(print(f));
    CHECK(parse(print(f)) == f);
  }
}

TEST_CASE("subformulas returns Sub(A) in first-occurrence order") {
  auto names = [](Formula f) {
    std::vector<std::string> out;
    for (Formula s : subformulas(f)) out.push_back(print(s));
    return out;
  };
  CHECK(names(parse("p")) == std::vector<std::string>{"p"});
  CHECK(names(parse("[](p -> q)")) ==
        std::vector<std::string>{"[](p -> q)", "p -> q", "p", "q"});
  CHECK(names(parse("[]p /\\ p")) == std::vector<std::string>{"[]p /\\ p", "[]p", "p"});

  SUBCASE("closed under subformulas and bounded by size") {
    testutil::FormulaGen gen(7, {"p", "q"});
    for (int i = 0; i < 200; ++i) {
      Formula f = gen.gen(gen.pick(12));
      auto sub = subformulas(f);
      std::set<Formula> set(sub.begin(), sub.end());
      CHECK(set.size() == sub.size());
      CHECK(set.count(f) == 1);
      CHECK(sub.size() <= 2 * static_cast<size_t>(f.size()) + 1);
      for (Formula s : sub) {
        switch (s.kind()) {
          case Kind::And:
          case Kind::Or:
          case Kind::Imp:
            CHECK(set.count(s.left()) == 1);
            CHECK(set.count(s.right()) == 1);
            break;
          case Kind::Box: CHECK(set.count(s.body()) == 1); break;
          default: break;
        }
      }
    }
  }
}

TEST_CASE("substitution is homomorphic") {
  Substitution sigma{{"p", Formula::box(Q())}};
  CHECK(apply(sigma, parse("p /\\ p")) == parse("[]q /\\ []q"));
  CHECK(apply(Substitution{}, parse("[](p -> q)")) == parse("[](p -> q)"));
  Substitution swap{{"p", Q()}, {"q", P()}};
  CHECK(apply(swap, parse("p -> q")) == parse("q -> p"));

  testutil::FormulaGen gen(99, {"p", "q", "r"});
  Substitution rnd{{"p", parse("[]r \\/ q")}, {"q", Formula::bot()}};
  for (int i = 0; i < 200; ++i) {
    Formula a = gen.gen(gen.pick(8)), b = gen.gen(gen.pick(8));
    CHECK(apply(rnd, Formula::conj(a, b)) ==
          Formula::conj(apply(rnd, a), apply(rnd, b)));
    CHECK(apply(rnd, Formula::imp(a, b)) ==
          Formula::imp(apply(rnd, a), apply(rnd, b)));
    CHECK(apply(rnd, Formula::box(a)) == Formula::box(apply(rnd, a)));
  }
}

TEST_CASE("rho counts nested implications outside boxes") {
  CHECK(rho(parse("[]((p -> q) -> r)")) == 0);
  CHECK(rho(parse("(p -> q) -> r")) == 2);
  CHECK(rho(parse("p \\/ (q -> r)")) == 1);
  CHECK(rho(parse("p")) == 0);
  CHECK(rho(parse("false")) == 0);
  CHECK(rho(parse("~p")) == 1);
  CHECK(rho(parse("~~p")) == 2);
  CHECK(rho(parse("(p -> q) /\\ (q -> r)")) == 1);
}

TEST_CASE("classify computes each class from its own definition") {
  auto c1 = classify(parse("[](p -> q)"));
  CHECK(c1.noi);
  CHECK(c1.nnil);
  CHECK(c1.tnnil);
  CHECK(c1.tnnil_box);

  auto c2 = classify(parse("(p -> q) -> r"));
  CHECK_FALSE(c2.noi);
  CHECK_FALSE(c2.nnil);
  CHECK_FALSE(c2.tnnil);
  CHECK(c2.tnnil_box);

  auto c3 = classify(parse("p \\/ q"));
  CHECK(c3.noi);
  CHECK(c3.nnil);
  CHECK(c3.tnnil);
  CHECK(c3.tnnil_box);

  // an implication whose antecedent has a bare arrow is not TNNIL
  auto c4 = classify(parse("(p -> q) -> []r"));
  CHECK_FALSE(c4.tnnil);
  // but boxing the antecedent's arrow repairs it
  auto c5 = classify(parse("[](p -> q) -> []r"));
  CHECK(c5.tnnil);

  SUBCASE("NNIL membership coincides with rho <= 1") {
    testutil::FormulaGen gen(4242, {"p", "q"});
    for (int i = 0; i < 2000; ++i) {
      Formula f = gen.gen(gen.pick(12));
      CAPTURE(print(f));
      CHECK(classify(f).nnil == (rho(f) <= 1));
    }
  }
}

TEST_CASE("boxed_decomposition abstracts maximal boxed subformulas") {
  auto d1 = boxed_decomposition(parse("[]p /\\ []p"));
  REQUIRE(d1.boxed_parts.size() == 1);
  CHECK(d1.boxed_parts[0] == P());
  CHECK(d1.skeleton == Formula::conj(Formula::atom("@0"), Formula::atom("@0")));

  auto d2 = boxed_decomposition(parse("p -> q"));
  CHECK(d2.boxed_parts.empty());
  CHECK(d2.skeleton == parse("p -> q"));

  auto d3 = boxed_decomposition(parse("[](p /\\ []q)"));
  REQUIRE(d3.boxed_parts.size() == 1);
  CHECK(d3.boxed_parts[0] == parse("p /\\ []q"));
  CHECK(d3.skeleton == Formula::atom("@0"));

  SUBCASE("re-substitution reproduces the input") {
    testutil::FormulaGen gen(11, {"p", "q", "r"});
    for (int i = 0; i < 300; ++i) {
      Formula f = gen.gen(gen.pick(12));
      auto d = boxed_decomposition(f);
      Substitution back;
      for (size_t k = 0; k < d.boxed_parts.size(); ++k)
        back.set("@" + std::to_string(k), Formula::box(d.boxed_parts[k]));
      CHECK(apply(back, d.skeleton) == f);
      CHECK(boxed_decomposition(d.skeleton).boxed_parts.empty());
    }
  }
}

TEST_CASE("impl_normal_form produces the canonical implication conjunction") {
  CHECK(impl_normal_form(parse("p \\/ []q")) == parse("true -> p \\/ []q"));
  CHECK(impl_normal_form(parse("p -> q /\\ r")) == parse("(p -> q) /\\ (p -> r)"));
  CHECK(impl_normal_form(parse("false")) == parse("true -> false"));
  CHECK(impl_normal_form(parse("p -> p")) == Formula::top());
  CHECK(impl_normal_form(parse("p")) == parse("true -> p"));

  SUBCASE("boolean-equivalent over the literal abstraction, and idempotent") {
    testutil::FormulaGen gen(555, {"p", "q", "r"});
    for (int i = 0; i < 300; ++i) {
      Formula f = gen.gen(gen.pick(9));
      CAPTURE(print(f));
      Formula nf = impl_normal_form(f);
      CHECK(impl_normal_form(nf) == nf);

      auto d = boxed_decomposition(f);
      std::vector<Formula> lits;
      for (Formula a : subformulas(d.skeleton))
        if (a.kind() == Kind::Atom && a.name()[0] != '@') lits.push_back(a);
      for (Formula b : d.boxed_parts) lits.push_back(Formula::box(b));
      REQUIRE(lits.size() <= 12);
      for (uint32_t mask = 0; mask < (1u << lits.size()); ++mask) {
        std::map<Formula, bool> env;
        for (size_t k = 0; k < lits.size(); ++k) env[lits[k]] = (mask >> k) & 1;
        CHECK(boolean_eval(f, env) == boolean_eval(nf, env));
      }
    }
  }

  SUBCASE("literal budget is enforced") {
    Formula wide = Formula::bot();
    for (char c = 'a'; c <= 'r'; ++c)
      wide = Formula::disj(wide, Formula::atom(std::string(1, c)));
    CHECK_THROWS_AS(impl_normal_form(wide), ResourceError);
  }
}

TEST_CASE("structural identity is interning identity") {
  Formula a = parse("[](p -> q) /\\ boxdot r");
  Formula b = parse("[](p -> q) /\\ (r /\\ []r)");
  CHECK(a == b);
  CHECK(a.id() == b.id());
  CHECK(a.size() == 5);
  CHECK(parse("p").size() == 0);
  CHECK(parse("~p").size() == 1);
}
