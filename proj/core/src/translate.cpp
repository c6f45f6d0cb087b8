#include <provlog/translate.hpp>

#include <algorithm>
#include <cassert>
#include <optional>

namespace provlog {

Formula leivant(Formula a) {
  switch (a.kind()) {
    case Kind::And: return Formula::conj(leivant(a.left()), leivant(a.right()));
    case Kind::Or:
      return Formula::disj(Formula::boxdot(leivant(a.left())),
                           Formula::boxdot(leivant(a.right())));
    case Kind::Imp:
      if (classify(a.left()).noi)
        return Formula::imp(a.left(), leivant(a.right()));
      return a;
    default: return a;
  }
}

Formula box_translate(Formula a, TranslationKind which) {
  assert(which == TranslationKind::BoxFull || which == TranslationKind::BoxUp ||
         which == TranslationKind::BoxDown);
  switch (a.kind()) {
    case Kind::Bot:
    case Kind::Top:
    case Kind::Atom:
      return which == TranslationKind::BoxDown ? a : Formula::boxdot(a);
    case Kind::Box:
      if (which == TranslationKind::BoxUp) return a;
      return Formula::box(box_translate(a.body(), TranslationKind::BoxFull));
    case Kind::And:
      return Formula::conj(box_translate(a.left(), which),
                           box_translate(a.right(), which));
    case Kind::Or:
      return Formula::disj(box_translate(a.left(), which),
                           box_translate(a.right(), which));
    case Kind::Imp: {
      Formula body = Formula::imp(box_translate(a.left(), which),
                                  box_translate(a.right(), which));
      return which == TranslationKind::BoxDown ? body : Formula::boxdot(body);
    }
  }
  return a;
}

Formula neg_translate(Formula a, TranslationKind which) {
  assert(which == TranslationKind::NegFull || which == TranslationKind::NegUp ||
         which == TranslationKind::NegDown);
  bool down = which == TranslationKind::NegDown;
  auto wrap = [down](Formula f) { return down ? f : Formula::neg(Formula::neg(f)); };
  switch (a.kind()) {
    case Kind::Bot:
    case Kind::Top: return a;
    case Kind::Atom: return wrap(a);
    case Kind::Box: {
      Formula inner = which == TranslationKind::NegUp
                          ? a.body()
                          : neg_translate(a.body(), TranslationKind::NegFull);
      return wrap(Formula::box(inner));
    }
    case Kind::Imp:
      if (a.is_neg()) return Formula::neg(neg_translate(a.left(), which));
      [[fallthrough]];
    case Kind::And:
    case Kind::Or: {
      Formula l = neg_translate(a.left(), which);
      Formula r = neg_translate(a.right(), which);
      Formula body = a.kind() == Kind::And  ? Formula::conj(l, r)
                     : a.kind() == Kind::Or ? Formula::disj(l, r)
                                            : Formula::imp(l, r);
      return wrap(body);
    }
  }
  return a;
}

namespace {

// A with every occurrence of `target` outside all boxes replaced by `by`.
Formula replace_outer(Formula a, Formula target, Formula by) {
  if (a == target) return by;
  switch (a.kind()) {
    case Kind::And:
      return Formula::conj(replace_outer(a.left(), target, by),
                           replace_outer(a.right(), target, by));
    case Kind::Or:
      return Formula::disj(replace_outer(a.left(), target, by),
                           replace_outer(a.right(), target, by));
    case Kind::Imp:
      return Formula::imp(replace_outer(a.left(), target, by),
                          replace_outer(a.right(), target, by));
    default: return a;  // boxes shield their contents
  }
}

}  // namespace

Formula bracket(Formula a, Formula b) {
  switch (b.kind()) {
    case Kind::And: return Formula::conj(bracket(a, b.left()), bracket(a, b.right()));
    case Kind::Or: return Formula::disj(bracket(a, b.left()), bracket(a, b.right()));
    case Kind::Imp: {
      Formula guard = replace_outer(a, b, b.right());
      return Formula::imp(guard, b);
    }
    default: return b;
  }
}

namespace {

Formula fold_conj(const std::vector<Formula>& xs) {
  if (xs.empty()) return Formula::top();
  Formula out = xs[0];
  for (size_t i = 1; i < xs.size(); ++i) out = Formula::conj(out, xs[i]);
  return out;
}

Formula fold_disj(const std::vector<Formula>& xs) {
  if (xs.empty()) return Formula::bot();
  Formula out = xs[0];
  for (size_t i = 1; i < xs.size(); ++i) out = Formula::disj(out, xs[i]);
  return out;
}

void push_unique(std::vector<Formula>& xs, Formula f) {
  if (std::find(xs.begin(), xs.end(), f) == xs.end()) xs.push_back(f);
}

// Splits the topmost-leftmost occurrence of `splitter` that is under neither
// an implication nor a box, returning the two formulas with that occurrence
// replaced by its halves.
std::optional<std::pair<Formula, Formula>> split_outer(Formula c, Kind splitter) {
  if (c.kind() == splitter) return std::make_pair(c.left(), c.right());
  if (c.kind() != Kind::And && c.kind() != Kind::Or) return std::nullopt;
  auto rebuild = [&](Formula l, Formula r) {
    return c.kind() == Kind::And ? Formula::conj(l, r) : Formula::disj(l, r);
  };
  if (auto s = split_outer(c.left(), splitter))
    return std::make_pair(rebuild(s->first, c.right()), rebuild(s->second, c.right()));
  if (auto s = split_outer(c.right(), splitter))
    return std::make_pair(rebuild(c.left(), s->first), rebuild(c.left(), s->second));
  return std::nullopt;
}

void outer_conjuncts(Formula b, std::vector<Formula>& xs) {
  if (b.kind() == Kind::And) {
    outer_conjuncts(b.left(), xs);
    outer_conjuncts(b.right(), xs);
  } else {
    push_unique(xs, b);
  }
}

struct StarCtx {
  long fuel = 2'000'000;
};

Formula star(Formula a, StarCtx& ctx);

Formula star_imp(Formula b, Formula c, StarCtx& ctx) {
  return star(Formula::imp(b, c), ctx);
}

Formula star(Formula a, StarCtx& ctx) {
  if (--ctx.fuel <= 0)
    throw ResourceError("nnil approximation exhausted its step budget");
  switch (a.kind()) {
    case Kind::Bot:
    case Kind::Top:
    case Kind::Atom:
    case Kind::Box: return a;
    case Kind::And: return Formula::conj(star(a.left(), ctx), star(a.right(), ctx));
    case Kind::Or: return Formula::disj(star(a.left(), ctx), star(a.right(), ctx));
    case Kind::Imp: break;
  }

  Formula b = a.left(), c = a.right();

  // consequent with an outer conjunction: split it
  if (auto s = split_outer(c, Kind::And))
    return Formula::conj(star_imp(b, s->first, ctx), star_imp(b, s->second, ctx));

  // antecedent with an outer disjunction: split it
  if (auto s = split_outer(b, Kind::Or))
    return Formula::conj(star_imp(s->first, c, ctx), star_imp(s->second, c, ctx));

  std::vector<Formula> x;
  outer_conjuncts(b, x);

  // falsum absorbs the whole implication
  if (std::find(x.begin(), x.end(), Formula::bot()) != x.end()) return Formula::top();

  // drop verum conjuncts; an empty antecedent just approximates the consequent
  x.erase(std::remove(x.begin(), x.end(), Formula::top()), x.end());
  if (x.empty()) return star(c, ctx);

  // peel the leftmost atomic or boxed conjunct
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i].kind() == Kind::Imp) continue;
    Formula e = x[i];
    std::vector<Formula> rest = x;
    rest.erase(rest.begin() + static_cast<long>(i));
    Formula inner = rest.empty() ? star(c, ctx) : star_imp(fold_conj(rest), c, ctx);
    return Formula::imp(e, inner);
  }

  // every conjunct is an implication
  std::vector<Formula> conjuncts;
  for (size_t i = 0; i < x.size(); ++i) {
    std::vector<Formula> down;
    for (size_t j = 0; j < x.size(); ++j)
      if (j != i) push_unique(down, x[j]);
    push_unique(down, x[i].right());
    conjuncts.push_back(star_imp(fold_conj(down), c, ctx));
  }
  std::vector<Formula> z;
  for (Formula d : x) push_unique(z, d.left());
  push_unique(z, c);
  std::vector<Formula> disjuncts;
  for (Formula e : z) {
    Formula br = bracket(b, e);
    // The disjunct for the consequent reproduces this very call when the
    // consequent is an implication with no outer occurrence in the
    // antecedent; the expansion's weakest solution resolves it to `true`.
    // Every other recursive call strictly shrinks the antecedent.
    if (br == a) disjuncts.push_back(Formula::top());
    else disjuncts.push_back(star(br, ctx));
  }
  return Formula::conj(fold_conj(conjuncts), fold_disj(disjuncts));
}

}  // namespace

Formula nnil_star(Formula a) {
  StarCtx ctx;
  return star(a, ctx);
}

Formula tnnil_plus(Formula a) {
  auto d = boxed_decomposition(a);
  Substitution back;
  for (size_t k = 0; k < d.boxed_parts.size(); ++k)
    back.set("@" + std::to_string(k), Formula::box(tnnil_plus(d.boxed_parts[k])));
  return apply(back, nnil_star(d.skeleton));
}

Formula tnnil_minus(Formula a) {
  auto d = boxed_decomposition(a);
  Substitution back;
  for (size_t k = 0; k < d.boxed_parts.size(); ++k)
    back.set("@" + std::to_string(k), Formula::box(tnnil_plus(d.boxed_parts[k])));
  return apply(back, d.skeleton);
}

Formula dagger(Formula a) {
  switch (a.kind()) {
    case Kind::Box: return Formula::box(ddagger(a.body()));
    case Kind::And: return Formula::conj(dagger(a.left()), dagger(a.right()));
    case Kind::Or: return Formula::disj(dagger(a.left()), dagger(a.right()));
    case Kind::Imp: return Formula::imp(dagger(a.left()), dagger(a.right()));
    default: return a;
  }
}

Formula ddagger(Formula a) { return impl_normal_form(dagger(a)); }

Formula translate(TranslationKind kind, Formula a) {
  switch (kind) {
    case TranslationKind::Leivant: return leivant(a);
    case TranslationKind::BoxFull:
    case TranslationKind::BoxUp:
    case TranslationKind::BoxDown: return box_translate(a, kind);
    case TranslationKind::NegFull:
    case TranslationKind::NegUp:
    case TranslationKind::NegDown: return neg_translate(a, kind);
    case TranslationKind::NnilStar: return nnil_star(a);
    case TranslationKind::TnnilPlus: return tnnil_plus(a);
    case TranslationKind::TnnilMinus: return tnnil_minus(a);
    case TranslationKind::Dagger: return dagger(a);
    case TranslationKind::DDagger: return ddagger(a);
  }
  return a;
}

const char* translation_kind_name(TranslationKind kind) {
  switch (kind) {
    case TranslationKind::Leivant: return "leivant";
    case TranslationKind::BoxFull: return "box-full";
    case TranslationKind::BoxUp: return "box-up";
    case TranslationKind::BoxDown: return "box-down";
    case TranslationKind::NegFull: return "neg-full";
    case TranslationKind::NegUp: return "neg-up";
    case TranslationKind::NegDown: return "neg-down";
    case TranslationKind::NnilStar: return "nnil-star";
    case TranslationKind::TnnilPlus: return "tnnil-plus";
    case TranslationKind::TnnilMinus: return "tnnil-minus";
    case TranslationKind::Dagger: return "dagger";
    case TranslationKind::DDagger: return "ddagger";
  }
  return "";
}

std::optional<TranslationKind> translation_kind_from_name(std::string_view name) {
  for (TranslationKind k :
       {TranslationKind::Leivant, TranslationKind::BoxFull, TranslationKind::BoxUp,
        TranslationKind::BoxDown, TranslationKind::NegFull, TranslationKind::NegUp,
        TranslationKind::NegDown, TranslationKind::NnilStar, TranslationKind::TnnilPlus,
        TranslationKind::TnnilMinus, TranslationKind::Dagger, TranslationKind::DDagger})
    if (name == translation_kind_name(k)) return k;
  return std::nullopt;
}

}  // namespace provlog
