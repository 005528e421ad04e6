#include "esakia/terms.hpp"

#include <algorithm>
#include <cctype>
#include <thread>

#include "esakia/poset.hpp"

namespace esakia {

Term Term::var(int index) {
  if (index < 0) throw validation_error("negative variable index");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->var = index;
  return Term(std::move(n));
}

Term Term::zero() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Zero;
  return Term(std::move(n));
}

Term Term::one() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::One;
  return Term(std::move(n));
}

Term Term::meet(Term l, Term r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Meet;
  n->l = l.node_;
  n->r = r.node_;
  return Term(std::move(n));
}

Term Term::join(Term l, Term r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Join;
  n->l = l.node_;
  n->r = r.node_;
  return Term(std::move(n));
}

Term Term::imp(Term l, Term r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Imp;
  n->l = l.node_;
  n->r = r.node_;
  return Term(std::move(n));
}

Term Term::left() const {
  if (!node_->l) throw validation_error("term has no left child");
  return Term(node_->l);
}

Term Term::right() const {
  if (!node_->r) throw validation_error("term has no right child");
  return Term(node_->r);
}

Term Term::join_all(const std::vector<Term>& ts) {
  if (ts.empty()) return zero();
  Term acc = ts[0];
  for (size_t i = 1; i < ts.size(); ++i) acc = join(acc, ts[i]);
  return acc;
}

Term Term::meet_all(const std::vector<Term>& ts) {
  if (ts.empty()) return one();
  Term acc = ts[0];
  for (size_t i = 1; i < ts.size(); ++i) acc = meet(acc, ts[i]);
  return acc;
}

int Term::num_vars() const {
  switch (kind()) {
    case Kind::Var:
      return var_index() + 1;
    case Kind::Zero:
    case Kind::One:
      return 0;
    default:
      return std::max(left().num_vars(), right().num_vars());
  }
}

namespace {

int precedence(Term::Kind k) {
  switch (k) {
    case Term::Kind::Imp:
      return 1;
    case Term::Kind::Join:
      return 2;
    case Term::Kind::Meet:
      return 3;
    default:
      return 4;
  }
}

void print(const Term& t, int min_prec, std::string& out) {
  int prec = precedence(t.kind());
  switch (t.kind()) {
    case Term::Kind::Var:
      out += "x" + std::to_string(t.var_index());
      return;
    case Term::Kind::Zero:
      out += "0";
      return;
    case Term::Kind::One:
      out += "1";
      return;
    default:
      break;
  }
  bool parens = prec < min_prec;
  if (parens) out += "(";
  const char* op =
      t.kind() == Term::Kind::Imp ? " -> " : (t.kind() == Term::Kind::Join ? " | " : " & ");
  // -> is right-associative; & and | associate freely
  int left_min = t.kind() == Term::Kind::Imp ? prec + 1 : prec;
  print(t.left(), left_min, out);
  out += op;
  print(t.right(), prec, out);
  if (parens) out += ")";
}

}  // namespace

std::string Term::str() const {
  std::string out;
  print(*this, 0, out);
  return out;
}

int eval(const Term& t, const HeytingAlgebra& a, const std::vector<int>& assignment) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      int v = t.var_index();
      if (v >= (int)assignment.size())
        throw validation_error("assignment misses variable x" + std::to_string(v));
      int e = assignment[v];
      if (e < 0 || e >= a.size()) throw validation_error("assignment value out of range");
      return e;
    }
    case Term::Kind::Zero:
      return a.bottom();
    case Term::Kind::One:
      return a.top();
    case Term::Kind::Meet:
      return a.meet(eval(t.left(), a, assignment), eval(t.right(), a, assignment));
    case Term::Kind::Join:
      return a.join(eval(t.left(), a, assignment), eval(t.right(), a, assignment));
    case Term::Kind::Imp:
      return a.imp(eval(t.left(), a, assignment), eval(t.right(), a, assignment));
  }
  throw validation_error("corrupt term");
}

namespace {

// Postfix program for fast repeated evaluation of one term.
struct TermProgram {
  enum Op : std::uint8_t { kPushVar, kPushConst, kMeet, kJoin, kImp };
  struct Instr {
    Op op;
    int arg = 0;
  };
  std::vector<Instr> code;
  int stack_need = 0;

  TermProgram(const Term& t, const HeytingAlgebra& a) {
    int depth = 0, max_depth = 0;
    compile(t, a, depth, max_depth);
    stack_need = max_depth;
  }

  void compile(const Term& t, const HeytingAlgebra& a, int& depth, int& max_depth) {
    switch (t.kind()) {
      case Term::Kind::Var:
        code.push_back({kPushVar, t.var_index()});
        max_depth = std::max(max_depth, ++depth);
        return;
      case Term::Kind::Zero:
        code.push_back({kPushConst, a.bottom()});
        max_depth = std::max(max_depth, ++depth);
        return;
      case Term::Kind::One:
        code.push_back({kPushConst, a.top()});
        max_depth = std::max(max_depth, ++depth);
        return;
      default:
        compile(t.left(), a, depth, max_depth);
        compile(t.right(), a, depth, max_depth);
        Op op = t.kind() == Term::Kind::Meet ? kMeet : (t.kind() == Term::Kind::Join ? kJoin : kImp);
        code.push_back({op, 0});
        --depth;
        return;
    }
  }

  int run(const HeytingAlgebra& a, const int* assignment, int* stack) const {
    int sp = 0;
    for (const Instr& ins : code) {
      switch (ins.op) {
        case kPushVar:
          stack[sp++] = assignment[ins.arg];
          break;
        case kPushConst:
          stack[sp++] = ins.arg;
          break;
        case kMeet:
          --sp;
          stack[sp - 1] = a.meet(stack[sp - 1], stack[sp]);
          break;
        case kJoin:
          --sp;
          stack[sp - 1] = a.join(stack[sp - 1], stack[sp]);
          break;
        case kImp:
          --sp;
          stack[sp - 1] = a.imp(stack[sp - 1], stack[sp]);
          break;
      }
    }
    return stack[0];
  }
};

// scans [begin, end) of the mixed-radix assignment space; returns the least
// falsifying index, or -1
long long scan_range(const HeytingAlgebra& a, const TermProgram& lp, const TermProgram& rp,
                     int vars, long long begin, long long end) {
  int m = a.size();
  std::vector<int> assignment(std::max(vars, 1), 0);
  {
    long long ix = begin;
    for (int v = 0; v < vars; ++v) {
      assignment[v] = (int)(ix % m);
      ix /= m;
    }
  }
  std::vector<int> stack(lp.stack_need + rp.stack_need + 2);
  for (long long ix = begin; ix < end; ++ix) {
    int lv = lp.run(a, assignment.data(), stack.data());
    int rv = rp.run(a, assignment.data(), stack.data());
    if (lv != rv) return ix;
    // odometer step, variable 0 fastest
    for (int v = 0; v < vars; ++v) {
      if (++assignment[v] < m) break;
      assignment[v] = 0;
    }
  }
  return -1;
}

}  // namespace

ValidityVerdict validates(const HeytingAlgebra& a, const Equation& eq, long long cap,
                          int threads) {
  int vars = std::max(eq.lhs.num_vars(), eq.rhs.num_vars());
  long long total = 1;
  for (int v = 0; v < vars; ++v) {
    total *= a.size();
    if (total > cap)
      throw cap_error("assignment space |A|^" + std::to_string(vars) + " exceeds the cap of " +
                      std::to_string(cap));
  }
  TermProgram lp(eq.lhs, a), rp(eq.rhs, a);

  long long found = -1;
  if (threads <= 1 || total < 1 << 16) {
    found = scan_range(a, lp, rp, vars, 0, total);
  } else {
    int t = std::min<long long>(threads, 64);
    std::vector<std::thread> pool;
    std::vector<long long> results(t, -1);
    long long chunk = (total + t - 1) / t;
    for (int i = 0; i < t; ++i) {
      long long b = i * chunk, e = std::min(total, b + chunk);
      if (b >= e) break;
      pool.emplace_back([&, i, b, e] { results[i] = scan_range(a, lp, rp, vars, b, e); });
    }
    for (auto& th : pool) th.join();
    for (long long r : results)
      if (r >= 0 && (found < 0 || r < found)) found = r;
  }

  ValidityVerdict v;
  if (found < 0) return v;
  v.valid = false;
  v.falsifier.resize(vars);
  long long ix = found;
  for (int i = 0; i < vars; ++i) {
    v.falsifier[i] = (int)(ix % a.size());
    ix /= a.size();
  }
  v.lhs_value = eval(eq.lhs, a, v.falsifier);
  v.rhs_value = eval(eq.rhs, a, v.falsifier);
  return v;
}

Term depth_term(int n) {
  if (n < 1) throw validation_error("depth terms start at n = 1");
  Term d = Term::join(Term::var(0), Term::imp(Term::var(0), Term::zero()));
  for (int k = 2; k <= n; ++k) {
    Term x = Term::var(k - 1);
    d = Term::join(x, Term::imp(x, d));
  }
  return d;
}

Term width_term(int n) {
  if (n < 1) throw validation_error("width terms start at n = 1");
  std::vector<Term> disjuncts;
  for (int i = 0; i <= n; ++i) {
    std::vector<Term> others;
    for (int j = 0; j <= n; ++j)
      if (j != i) others.push_back(Term::var(j));
    disjuncts.push_back(Term::imp(Term::var(i), Term::join_all(others)));
  }
  return Term::join_all(disjuncts);
}

Term psi_term(int n, const FinitePoset& z) {
  if (z.size() != n + 1) throw validation_error("labeled poset must have n+1 points");
  std::vector<Term> disjuncts;
  for (int i = 1; i <= n + 1; ++i) {
    std::vector<Term> ys;
    for (int j = 1; j <= n + 1; ++j)
      if (!z.leq(i - 1, j - 1)) ys.push_back(Term::var(j));
    disjuncts.push_back(
        Term::imp(Term::var(i), Term::join(Term::var(0), Term::join_all(ys))));
  }
  return Term::join_all(disjuncts);
}

Term delta_term(int n, const FinitePoset& z) {
  std::vector<Term> ys;
  for (int i = 1; i <= n + 1; ++i) ys.push_back(Term::var(i));
  return Term::join(psi_term(n, z), Term::imp(Term::var(0), Term::join_all(ys)));
}

std::vector<Equation> sigma_axioms(int n) {
  if (n < 0 || n > 3) throw cap_error("sigma axiom families capped at n = 3");
  std::vector<Equation> out;
  for (const FinitePoset& z : enumerate_labeled_posets(n + 1))
    out.push_back({delta_term(n, z), Term::one()});
  return out;
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool eat_arrow() {
    skip();
    if (pos + 1 < s.size() && s[pos] == '-' && s[pos + 1] == '>') {
      pos += 2;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw validation_error("term syntax error at position " + std::to_string(pos) + ": " + what);
  }

  Term parse_imp() {
    Term l = parse_join();
    if (eat_arrow()) return Term::imp(l, parse_imp());
    return l;
  }
  Term parse_join() {
    Term l = parse_meet();
    while (eat('|')) l = Term::join(l, parse_meet());
    return l;
  }
  Term parse_meet() {
    Term l = parse_atom();
    while (eat('&')) l = Term::meet(l, parse_atom());
    return l;
  }
  Term parse_atom() {
    skip();
    if (pos >= s.size()) fail("unexpected end of input");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      Term t = parse_imp();
      if (!eat(')')) fail("expected ')'");
      return t;
    }
    if (c == '0') {
      ++pos;
      return Term::zero();
    }
    if (c == '1') {
      ++pos;
      return Term::one();
    }
    if (c == 'x') {
      ++pos;
      size_t start = pos;
      while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
      if (pos == start) fail("expected variable index after 'x'");
      return Term::var(std::stoi(s.substr(start, pos - start)));
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

Term parse_term(const std::string& text) {
  Parser p(text);
  Term t = p.parse_imp();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return t;
}

Equation parse_equation(const std::string& text) {
  size_t eq = text.find('=');
  if (eq == std::string::npos) throw validation_error("equation needs a '='");
  return {parse_term(text.substr(0, eq)), parse_term(text.substr(eq + 1))};
}

}  // namespace esakia
