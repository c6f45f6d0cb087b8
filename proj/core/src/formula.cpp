#include <provlog/formula.hpp>

#include <algorithm>
#include <cassert>
#include <deque>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

namespace provlog {

struct Formula::Node {
  Kind kind;
  uint32_t id;
  uint32_t size;
  const Node* a;  // left operand or box body
  const Node* b;  // right operand
  std::string name;
};

namespace {

using Node = Formula::Node;

class Interner {
 public:
  const Node* get_leaf(Kind k, std::string_view name) {
    std::lock_guard lock(mu_);
    auto key = std::string(name);
    if (k == Kind::Bot) key = "\x01";
    if (k == Kind::Top) key = "\x02";
    auto it = leaves_.find(key);
    if (it != leaves_.end()) return it->second;
    const Node* n = alloc({k, next_id_++, 0, nullptr, nullptr, std::string(name)});
    leaves_.emplace(std::move(key), n);
    return n;
  }

  const Node* get(Kind k, const Node* a, const Node* b) {
    std::lock_guard lock(mu_);
    CompositeKey key{k, a, b};
    auto it = composites_.find(key);
    if (it != composites_.end()) return it->second;
    uint32_t size = 1 + a->size + (b ? b->size : 0);
    const Node* n = alloc({k, next_id_++, size, a, b, {}});
    composites_.emplace(key, n);
    return n;
  }

  static Interner& instance() {
    static Interner* i = new Interner;
    return *i;
  }

 private:
  struct CompositeKey {
    Kind k;
    const Node* a;
    const Node* b;
    bool operator==(const CompositeKey&) const = default;
  };
  struct CompositeHash {
    size_t operator()(const CompositeKey& c) const {
      size_t h = static_cast<size_t>(c.k);
      h = h * 1000003u ^ c.a->id;
      h = h * 1000003u ^ (c.b ? c.b->id + 1 : 0);
      return h;
    }
  };

  const Node* alloc(Node n) {
    nodes_.push_back(std::move(n));
    return &nodes_.back();
  }

  std::mutex mu_;
  std::deque<Node> nodes_;
  std::unordered_map<std::string, const Node*> leaves_;
  std::unordered_map<CompositeKey, const Node*, CompositeHash> composites_;
  uint32_t next_id_ = 0;
};

}  // namespace

Kind Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const {
  assert(node_->kind == Kind::Atom);
  return node_->name;
}
Formula Formula::left() const { return Formula(node_->a); }
Formula Formula::right() const { return Formula(node_->b); }
Formula Formula::body() const {
  assert(node_->kind == Kind::Box);
  return Formula(node_->a);
}
uint32_t Formula::id() const { return node_->id; }
int Formula::size() const { return static_cast<int>(node_->size); }

Formula Formula::bot() { return Formula(Interner::instance().get_leaf(Kind::Bot, {})); }
Formula Formula::top() { return Formula(Interner::instance().get_leaf(Kind::Top, {})); }
Formula Formula::atom(std::string_view name) {
  return Formula(Interner::instance().get_leaf(Kind::Atom, name));
}
Formula Formula::conj(Formula l, Formula r) {
  return Formula(Interner::instance().get(Kind::And, l.node_, r.node_));
}
Formula Formula::disj(Formula l, Formula r) {
  return Formula(Interner::instance().get(Kind::Or, l.node_, r.node_));
}
Formula Formula::imp(Formula l, Formula r) {
  return Formula(Interner::instance().get(Kind::Imp, l.node_, r.node_));
}
Formula Formula::box(Formula b) {
  return Formula(Interner::instance().get(Kind::Box, b.node_, nullptr));
}
Formula Formula::neg(Formula a) { return imp(a, bot()); }
Formula Formula::boxdot(Formula a) { return conj(a, box(a)); }
bool Formula::is_neg() const {
  return node_->kind == Kind::Imp && Formula(node_->b) == bot();
}

namespace {

// Lexer over the ASCII grammar plus unicode aliases.
enum class Tok { End, Atom, False, True, Not, Box, Boxdot, And, Or, Imp, LParen, RParen };

struct Lexer {
  explicit Lexer(std::string_view t) : text(t) {}

  std::string_view text;
  size_t pos = 0;
  Tok tok = Tok::End;
  std::string atom;
  size_t tok_pos = 0;

  [[noreturn]] void fail(const std::string& msg, size_t at) const {
    throw ParseError(msg, std::string(text), at);
  }

  bool eat(std::string_view s) {
    if (text.substr(pos, s.size()) == s) {
      pos += s.size();
      return true;
    }
    return false;
  }

  void next() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
                                 text[pos] == '\r'))
      ++pos;
    tok_pos = pos;
    if (pos == text.size()) {
      tok = Tok::End;
      return;
    }
    char c = text[pos];
    if (c >= 'a' && c <= 'z') {
      size_t start = pos;
      while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                   text[pos] == '_'))
        ++pos;
      atom = std::string(text.substr(start, pos - start));
      if (atom == "false") tok = Tok::False;
      else if (atom == "true") tok = Tok::True;
      else if (atom == "boxdot") tok = Tok::Boxdot;
      else tok = Tok::Atom;
      return;
    }
    if (eat("~") || eat("\xC2\xAC")) { tok = Tok::Not; return; }
    if (eat("[]") || eat("\xE2\x96\xA1")) { tok = Tok::Box; return; }
    if (eat("\xE2\x8A\xA1")) { tok = Tok::Boxdot; return; }
    if (eat("/\\") || eat("\xE2\x88\xA7")) { tok = Tok::And; return; }
    if (eat("\\/") || eat("\xE2\x88\xA8")) { tok = Tok::Or; return; }
    if (eat("->") || eat("\xE2\x86\x92")) { tok = Tok::Imp; return; }
    if (eat("\xE2\x8A\xA5")) { tok = Tok::False; return; }
    if (eat("\xE2\x8A\xA4")) { tok = Tok::True; return; }
    if (eat("(")) { tok = Tok::LParen; return; }
    if (eat(")")) { tok = Tok::RParen; return; }
    fail("unexpected character", pos);
  }
};

struct Parser {
  Lexer lx;

  Formula implication() {
    Formula l = disjunction();
    if (lx.tok == Tok::Imp) {
      lx.next();
      return Formula::imp(l, implication());
    }
    return l;
  }

  Formula disjunction() {
    Formula l = conjunction();
    while (lx.tok == Tok::Or) {
      lx.next();
      l = Formula::disj(l, conjunction());
    }
    return l;
  }

  Formula conjunction() {
    Formula l = unary();
    while (lx.tok == Tok::And) {
      lx.next();
      l = Formula::conj(l, unary());
    }
    return l;
  }

  Formula unary() {
    switch (lx.tok) {
      case Tok::Not: lx.next(); return Formula::neg(unary());
      case Tok::Box: lx.next(); return Formula::box(unary());
      case Tok::Boxdot: lx.next(); return Formula::boxdot(unary());
      default: return primary();
    }
  }

  Formula primary() {
    switch (lx.tok) {
      case Tok::Atom: {
        Formula f = Formula::atom(lx.atom);
        lx.next();
        return f;
      }
      case Tok::False: lx.next(); return Formula::bot();
      case Tok::True: lx.next(); return Formula::top();
      case Tok::LParen: {
        lx.next();
        Formula f = implication();
        if (lx.tok != Tok::RParen) lx.fail("expected ')'", lx.tok_pos);
        lx.next();
        return f;
      }
      default: lx.fail("expected a formula", lx.tok_pos);
    }
  }
};

}  // namespace

Formula parse(std::string_view text) {
  Parser p{Lexer{text}};
  p.lx.next();
  Formula f = p.implication();
  if (p.lx.tok != Tok::End) p.lx.fail("expected end of input", p.lx.tok_pos);
  return f;
}

namespace {

// Precedence levels for printing: 0 implication, 1 disjunction,
// 2 conjunction, 3 unary.
void pr(Formula f, int level, std::string& out) {
  switch (f.kind()) {
    case Kind::Bot: out += "false"; return;
    case Kind::Top: out += "true"; return;
    case Kind::Atom: out += f.name(); return;
    case Kind::Box:
      out += "[]";
      pr(f.body(), 3, out);
      return;
    case Kind::Imp:
      if (f.right() == Formula::bot()) {
        out += '~';
        pr(f.left(), 3, out);
        return;
      }
      if (level > 0) out += '(';
      pr(f.left(), 1, out);
      out += " -> ";
      pr(f.right(), 0, out);
      if (level > 0) out += ')';
      return;
    case Kind::Or:
      if (level > 1) out += '(';
      pr(f.left(), 1, out);
      out += " \\/ ";
      pr(f.right(), 2, out);
      if (level > 1) out += ')';
      return;
    case Kind::And:
      if (level > 2) out += '(';
      pr(f.left(), 2, out);
      out += " /\\ ";
      pr(f.right(), 3, out);
      if (level > 2) out += ')';
      return;
  }
}

}  // namespace

std::string print(Formula f) {
  std::string out;
  pr(f, 0, out);
  return out;
}

std::vector<Formula> subformulas(Formula f) {
  std::vector<Formula> out;
  std::unordered_set<Formula> seen;
  std::vector<Formula> stack{f};
  while (!stack.empty()) {
    Formula g = stack.back();
    stack.pop_back();
    if (!seen.insert(g).second) continue;
    out.push_back(g);
    switch (g.kind()) {
      case Kind::And:
      case Kind::Or:
      case Kind::Imp:
        stack.push_back(g.right());
        stack.push_back(g.left());
        break;
      case Kind::Box: stack.push_back(g.body()); break;
      default: break;
    }
  }
  return out;
}

std::vector<std::string> atoms(Formula f) {
  std::vector<std::string> out;
  for (Formula s : subformulas(f))
    if (s.kind() == Kind::Atom) out.push_back(s.name());
  return out;
}

namespace {

Formula apply_memo(const Substitution& sigma, Formula f,
                   std::unordered_map<Formula, Formula>& memo) {
  auto it = memo.find(f);
  if (it != memo.end()) return it->second;
  Formula out = f;
  switch (f.kind()) {
    case Kind::Atom: {
      if (const Formula* s = sigma.find(f.name())) out = *s;
      break;
    }
    case Kind::And:
      out = Formula::conj(apply_memo(sigma, f.left(), memo),
                          apply_memo(sigma, f.right(), memo));
      break;
    case Kind::Or:
      out = Formula::disj(apply_memo(sigma, f.left(), memo),
                          apply_memo(sigma, f.right(), memo));
      break;
    case Kind::Imp:
      out = Formula::imp(apply_memo(sigma, f.left(), memo),
                         apply_memo(sigma, f.right(), memo));
      break;
    case Kind::Box: out = Formula::box(apply_memo(sigma, f.body(), memo)); break;
    default: break;
  }
  memo.emplace(f, out);
  return out;
}

}  // namespace

Formula apply(const Substitution& sigma, Formula f) {
  std::unordered_map<Formula, Formula> memo;
  return apply_memo(sigma, f, memo);
}

int rho(Formula f) {
  switch (f.kind()) {
    case Kind::And:
    case Kind::Or: return std::max(rho(f.left()), rho(f.right()));
    case Kind::Imp: return std::max(rho(f.left()) + 1, rho(f.right()));
    default: return 0;
  }
}

namespace {

bool is_noi(Formula f) {
  switch (f.kind()) {
    case Kind::Imp: return false;
    case Kind::And:
    case Kind::Or: return is_noi(f.left()) && is_noi(f.right());
    default: return true;
  }
}

// Defined by its own recursion rather than through rho, so the two
// characterizations of the class stay independently testable.
bool is_nnil(Formula f) {
  switch (f.kind()) {
    case Kind::And:
    case Kind::Or: return is_nnil(f.left()) && is_nnil(f.right());
    case Kind::Imp: return is_noi(f.left()) && is_nnil(f.right());
    default: return true;
  }
}

bool is_tnnil(Formula f) {
  switch (f.kind()) {
    case Kind::And:
    case Kind::Or: return is_tnnil(f.left()) && is_tnnil(f.right());
    case Kind::Imp:
      return is_noi(f.left()) && is_tnnil(f.left()) && is_tnnil(f.right());
    case Kind::Box: return is_tnnil(f.body());
    default: return true;
  }
}

}  // namespace

Classification classify(Formula f) {
  Classification c;
  c.noi = is_noi(f);
  c.nnil = is_nnil(f);
  c.tnnil = is_tnnil(f);
  c.tnnil_box = true;
  for (Formula part : boxed_decomposition(f).boxed_parts)
    c.tnnil_box = c.tnnil_box && is_tnnil(part);
  return c;
}

namespace {

Formula decompose(Formula f, std::unordered_map<Formula, size_t>& index,
                  std::vector<Formula>& parts) {
  switch (f.kind()) {
    case Kind::Box: {
      auto [it, fresh] = index.emplace(f, parts.size());
      if (fresh) parts.push_back(f.body());
      return Formula::atom("@" + std::to_string(it->second));
    }
    case Kind::And:
      return Formula::conj(decompose(f.left(), index, parts),
                           decompose(f.right(), index, parts));
    case Kind::Or:
      return Formula::disj(decompose(f.left(), index, parts),
                           decompose(f.right(), index, parts));
    case Kind::Imp:
      return Formula::imp(decompose(f.left(), index, parts),
                          decompose(f.right(), index, parts));
    default: return f;
  }
}

}  // namespace

BoxedDecomposition boxed_decomposition(Formula f) {
  std::unordered_map<Formula, size_t> index;
  std::vector<Formula> parts;
  Formula skeleton = decompose(f, index, parts);
  return {skeleton, std::move(parts)};
}

namespace {

bool table_eval(Formula f, const std::unordered_map<Formula, int>& lit_index,
                uint32_t row) {
  auto it = lit_index.find(f);
  if (it != lit_index.end()) return (row >> it->second) & 1;
  switch (f.kind()) {
    case Kind::Bot: return false;
    case Kind::Top: return true;
    case Kind::And: return table_eval(f.left(), lit_index, row) &&
                           table_eval(f.right(), lit_index, row);
    case Kind::Or: return table_eval(f.left(), lit_index, row) ||
                          table_eval(f.right(), lit_index, row);
    case Kind::Imp: return !table_eval(f.left(), lit_index, row) ||
                           table_eval(f.right(), lit_index, row);
    default: assert(false); return false;
  }
}

struct Term {
  uint32_t care;
  uint32_t val;
  bool operator==(const Term&) const = default;
};
struct TermHash {
  size_t operator()(const Term& t) const {
    return t.care * 2654435761u ^ t.val;
  }
};

// All prime implicants of the set of rows, by iterated adjacent merging.
std::vector<Term> prime_implicants(const std::vector<uint32_t>& rows, int k) {
  uint32_t full = k == 32 ? ~0u : (1u << k) - 1;
  std::unordered_set<Term, TermHash> current;
  for (uint32_t r : rows) current.insert({full, r});
  std::vector<Term> primes;
  while (!current.empty()) {
    std::unordered_set<Term, TermHash> next;
    std::unordered_set<Term, TermHash> merged;
    std::vector<Term> terms(current.begin(), current.end());
    for (const Term& t : terms) {
      for (int bit = 0; bit < k; ++bit) {
        uint32_t m = 1u << bit;
        if (!(t.care & m)) continue;
        Term partner{t.care, t.val ^ m};
        if (current.count(partner)) {
          next.insert({t.care & ~m, t.val & ~m});
          merged.insert(t);
        }
      }
    }
    for (const Term& t : terms)
      if (!merged.count(t)) primes.push_back(t);
    current = std::move(next);
  }
  return primes;
}

}  // namespace

Formula impl_normal_form(Formula f, int max_literals) {
  // Literals: atoms first (sorted by name), then maximal boxed subformulas
  // (sorted by printed form); the rank order is also the output order.
  auto deco = boxed_decomposition(f);
  std::vector<std::string> names = atoms(deco.skeleton);
  std::sort(names.begin(), names.end());
  std::vector<Formula> lits;
  for (const std::string& n : names)
    if (n[0] != '@') lits.push_back(Formula::atom(n));
  std::vector<Formula> boxed;
  for (Formula part : deco.boxed_parts) boxed.push_back(Formula::box(part));
  std::sort(boxed.begin(), boxed.end(),
            [](Formula a, Formula b) { return print(a) < print(b); });
  lits.insert(lits.end(), boxed.begin(), boxed.end());

  int k = static_cast<int>(lits.size());
  if (k > max_literals)
    throw ResourceError("implication normal form over " + std::to_string(k) +
                        " literals exceeds the cap of " + std::to_string(max_literals));

  std::unordered_map<Formula, int> lit_index;
  for (int i = 0; i < k; ++i) lit_index.emplace(lits[i], i);

  std::vector<uint32_t> falsifying;
  for (uint32_t row = 0; row < (1u << k); ++row)
    if (!table_eval(f, lit_index, row)) falsifying.push_back(row);
  if (falsifying.empty()) return Formula::top();

  std::vector<Term> primes = prime_implicants(falsifying, k);

  // A prime implicant of the complement with positive part E and negative
  // part F yields the implicate E -> F.
  std::vector<std::pair<std::vector<int>, std::vector<int>>> clauses;
  for (const Term& t : primes) {
    std::vector<int> e, ff;
    for (int i = 0; i < k; ++i) {
      if (!(t.care & (1u << i))) continue;
      if (t.val & (1u << i)) e.push_back(i);
      else ff.push_back(i);
    }
    clauses.emplace_back(std::move(e), std::move(ff));
  }
  std::sort(clauses.begin(), clauses.end());

  Formula out = Formula::top();
  bool first = true;
  for (const auto& [e, ff] : clauses) {
    Formula ante = Formula::top();
    for (size_t i = 0; i < e.size(); ++i)
      ante = i == 0 ? lits[e[i]] : Formula::conj(ante, lits[e[i]]);
    Formula cons = Formula::bot();
    for (size_t i = 0; i < ff.size(); ++i)
      cons = i == 0 ? lits[ff[i]] : Formula::disj(cons, lits[ff[i]]);
    Formula clause = Formula::imp(ante, cons);
    out = first ? clause : Formula::conj(out, clause);
    first = false;
  }
  return out;
}

}  // namespace provlog
