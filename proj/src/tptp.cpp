#include "delsup/tptp.hpp"

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace delsup {

ParseError::ParseError(const std::string& message, std::string file, std::size_t line,
                       std::size_t column)
    : std::runtime_error(file + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " +
                         message),
      file_(std::move(file)),
      line_(line),
      column_(column) {}

std::string to_string(const Diagnostic& d) {
  std::ostringstream os;
  os << d.span.file << ':' << d.span.line << ':' << d.span.column << ": "
     << (d.level == Diagnostic::Level::Error ? "error" : "warning") << ": " << d.message;
  return os.str();
}

std::vector<ClausePtr> Problem::clauses() const {
  std::vector<ClausePtr> out;
  out.reserve(inputs.size());
  for (const InputClause& in : inputs) out.push_back(in.clause);
  return out;
}

namespace {

// --- lexer -----------------------------------------------------------------

enum class Tok { Lower, Upper, Dollar, Quoted, Number, Distinct, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool is_lower_word(std::string_view s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!is_alnum(c)) return false;
  }
  return true;
}

class Lexer {
 public:
  Lexer(std::string_view text, std::string file) : text_(text), file_(std::move(file)) {}

  const Token& peek() {
    if (!has_peek_) {
      peeked_ = next_token();
      has_peek_ = true;
    }
    return peeked_;
  }

  Token take() {
    Token t = peek();
    has_peek_ = false;
    return t;
  }

  bool accept(std::string_view punct) {
    if (peek().kind == Tok::Punct && peek().text == punct) {
      take();
      return true;
    }
    return false;
  }

  void expect(std::string_view punct) {
    if (!accept(punct)) fail(peek(), "expected '" + std::string(punct) + "'");
  }

  [[noreturn]] void fail(const Token& t, const std::string& message) const {
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(message + ", found " + found, file_, t.line, t.column);
  }

  const std::string& file() const { return file_; }

 private:
  char cur() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char at(std::size_t k) const { return pos_ + k < text_.size() ? text_[pos_ + k] : '\0'; }

  void advance() {
    if (cur() == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    for (;;) {
      while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(cur()))) advance();
      if (cur() == '%') {
        while (pos_ < text_.size() && cur() != '\n') advance();
      } else if (cur() == '/' && at(1) == '*') {
        std::size_t line = line_, column = column_;
        advance();
        advance();
        while (pos_ < text_.size() && !(cur() == '*' && at(1) == '/')) advance();
        if (pos_ >= text_.size()) throw ParseError("unterminated comment", file_, line, column);
        advance();
        advance();
      } else {
        return;
      }
    }
  }

  Token next_token() {
    skip_space();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= text_.size()) return t;
    char c = cur();
    auto word = [&] {
      std::size_t start = pos_;
      while (is_alnum(cur())) advance();
      return std::string(text_.substr(start, pos_ - start));
    };
    if (std::islower(static_cast<unsigned char>(c))) {
      t.kind = Tok::Lower;
      t.text = word();
    } else if (std::isupper(static_cast<unsigned char>(c))) {
      t.kind = Tok::Upper;
      t.text = word();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Tok::Number;
      t.text = word();
    } else if (c == '$') {
      advance();
      if (cur() == '$') advance();
      t.kind = Tok::Dollar;
      t.text = "$" + word();
    } else if (c == '\'' || c == '"') {
      char quote = c;
      std::string body;
      advance();
      while (pos_ < text_.size() && cur() != quote) {
        if (cur() == '\\') advance();
        body += cur();
        advance();
      }
      if (pos_ >= text_.size()) throw ParseError("unterminated quoted name", file_, t.line, t.column);
      advance();
      t.kind = quote == '\'' ? Tok::Quoted : Tok::Distinct;
      t.text = body;
    } else {
      t.kind = Tok::Punct;
      if (c == '!' && at(1) == '=') {
        t.text = "!=";
        advance();
      } else {
        t.text = std::string(1, c);
      }
      advance();
    }
    return t;
  }

  std::string_view text_;
  std::string file_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  Token peeked_;
  bool has_peek_ = false;
};

// --- raw syntax ------------------------------------------------------------

struct RawTerm {
  std::string name;
  bool variable = false;
  std::vector<RawTerm> args;
  SourceSpan span;
};

struct RawLiteral {
  bool positive = true;
  bool equation = false;
  RawTerm lhs;  // the atom when !equation
  RawTerm rhs;
  SourceSpan span;
};

struct RawClause {
  std::string name;
  std::string role;
  std::vector<RawLiteral> literals;
  bool tautology = false;  // contains $true or ~$false
  SourceSpan span;
};

// Symbol names are kept unquoted when they are plain lower words.
std::string symbol_name(const Token& t) {
  if (t.kind == Tok::Quoted && !is_lower_word(t.text)) return "'" + t.text + "'";
  if (t.kind == Tok::Distinct) return "\"" + t.text + "\"";
  return t.text;
}

bool is_true_name(const std::string& s) { return s == "$true" || s == "tTop"; }

class Reader {
 public:
  Reader(const ParseOptions& options) : options_(options) {}

  void read(std::string_view text, const std::string& file, const std::set<std::string>* only,
            int depth) {
    Lexer lex(text, file);
    while (lex.peek().kind != Tok::End) {
      Token head = lex.take();
      if (head.kind != Tok::Lower) lex.fail(head, "expected an annotated formula");
      SourceSpan span{file, head.line, head.column};
      if (head.text == "include") {
        read_include(lex, span, depth);
      } else if (head.text == "cnf") {
        RawClause c = read_cnf(lex, span);
        if (!only || only->count(c.name)) clauses.push_back(std::move(c));
      } else if (head.text == "fof" || head.text == "tff" || head.text == "thf" ||
                 head.text == "tcf" || head.text == "tpi") {
        throw UnsupportedInput(head.text + " formulas are not supported, only cnf", file,
                               head.line, head.column);
      } else {
        lex.fail(head, "unknown annotated formula kind");
      }
    }
  }

  std::vector<RawClause> clauses;

 private:
  std::string read_name(Lexer& lex) {
    Token t = lex.take();
    if (t.kind == Tok::Lower || t.kind == Tok::Upper || t.kind == Tok::Number ||
        t.kind == Tok::Quoted) {
      return symbol_name(t);
    }
    lex.fail(t, "expected a name");
  }

  void read_include(Lexer& lex, const SourceSpan& span, int depth) {
    lex.expect("(");
    Token path = lex.take();
    if (path.kind != Tok::Quoted) lex.fail(path, "expected a quoted file name");
    std::set<std::string> names;
    bool filtered = false;
    if (lex.accept(",")) {
      filtered = true;
      lex.expect("[");
      if (!lex.accept("]")) {
        do names.insert(read_name(lex));
        while (lex.accept(","));
        lex.expect("]");
      }
    }
    lex.expect(")");
    lex.expect(".");
    if (depth > 16) throw ParseError("includes nested too deeply", span.file, span.line, span.column);
    std::string resolved = resolve(path.text, span.file);
    if (resolved.empty()) {
      throw ParseError("cannot find included file '" + path.text + "'", span.file, span.line,
                       span.column);
    }
    std::ifstream in(resolved);
    std::stringstream buf;
    buf << in.rdbuf();
    read(buf.str(), resolved, filtered ? &names : nullptr, depth + 1);
  }

  std::string resolve(const std::string& rel, const std::string& from) const {
    namespace fs = std::filesystem;
    std::vector<fs::path> roots;
    for (const std::string& d : options_.include_dirs) roots.emplace_back(d);
    if (const char* tptp = std::getenv("TPTP")) roots.emplace_back(tptp);
    roots.push_back(fs::path(from).parent_path());
    for (const fs::path& root : roots) {
      fs::path p = root / rel;
      std::error_code ec;
      if (fs::is_regular_file(p, ec)) return p.string();
    }
    return {};
  }

  RawClause read_cnf(Lexer& lex, const SourceSpan& span) {
    RawClause c;
    c.span = span;
    lex.expect("(");
    c.name = read_name(lex);
    lex.expect(",");
    Token role = lex.take();
    if (role.kind != Tok::Lower) lex.fail(role, "expected a formula role");
    c.role = role.text;
    lex.expect(",");
    read_disjunction(lex, c);
    if (lex.accept(",")) skip_annotations(lex);
    lex.expect(")");
    lex.expect(".");
    return c;
  }

  void skip_annotations(Lexer& lex) {
    int depth = 0;
    for (;;) {
      const Token& t = lex.peek();
      if (t.kind == Tok::End) lex.fail(t, "unterminated annotations");
      if (t.kind == Tok::Punct) {
        if (t.text == "(" || t.text == "[") ++depth;
        if (t.text == ")" || t.text == "]") {
          if (depth == 0) return;
          --depth;
        }
      }
      lex.take();
    }
  }

  void read_disjunction(Lexer& lex, RawClause& c) {
    if (lex.accept("(")) {
      read_disjunction(lex, c);
      lex.expect(")");
    } else {
      read_literal(lex, c);
    }
    while (lex.accept("|")) {
      if (lex.accept("(")) {
        read_disjunction(lex, c);
        lex.expect(")");
      } else {
        read_literal(lex, c);
      }
    }
    const Token& t = lex.peek();
    if (t.kind == Tok::Punct && t.text == "&") lex.fail(t, "conjunction is not allowed in cnf");
  }

  void read_literal(Lexer& lex, RawClause& c) {
    const Token& first = lex.peek();
    SourceSpan span{lex.file(), first.line, first.column};
    bool positive = true;
    while (lex.accept("~")) positive = !positive;
    RawTerm lhs = read_term(lex);
    RawLiteral lit;
    lit.span = span;
    if (lex.accept("=")) {
      lit.equation = true;
    } else if (lex.accept("!=")) {
      lit.equation = true;
      positive = !positive;
    }
    if (lit.equation) {
      lit.rhs = read_term(lex);
    } else {
      if (lhs.variable) {
        throw ParseError("a variable cannot stand as an atom", span.file, span.line, span.column);
      }
      if (lhs.args.empty() && lhs.name == "$false") {
        if (!positive) c.tautology = true;
        return;
      }
      if (lhs.args.empty() && is_true_name(lhs.name)) {
        if (positive) c.tautology = true;
        return;
      }
    }
    lit.positive = positive;
    lit.lhs = std::move(lhs);
    c.literals.push_back(std::move(lit));
  }

  RawTerm read_term(Lexer& lex) {
    Token t = lex.take();
    RawTerm r;
    r.span = SourceSpan{lex.file(), t.line, t.column};
    if (t.kind == Tok::Upper) {
      r.variable = true;
      r.name = t.text;
      return r;
    }
    if (t.kind != Tok::Lower && t.kind != Tok::Quoted && t.kind != Tok::Dollar &&
        t.kind != Tok::Number && t.kind != Tok::Distinct) {
      lex.fail(t, "expected a term");
    }
    r.name = symbol_name(t);
    if (lex.accept("(")) {
      do r.args.push_back(read_term(lex));
      while (lex.accept(","));
      lex.expect(")");
    }
    return r;
  }

  const ParseOptions& options_;
};

// --- elaboration -----------------------------------------------------------

using Key = std::pair<std::string, std::size_t>;

class Elaborator {
 public:
  Elaborator(Problem& problem, const ParseOptions& options)
      : problem_(problem), options_(options) {}

  void run(std::vector<RawClause>& raw) {
    for (RawClause& c : raw) {
      for (RawLiteral& l : c.literals) {
        if (!l.equation) mark_predicate(l.lhs);
      }
    }
    for (RawClause& c : raw) elaborate(c);
  }

 private:
  bool is_predicate(const RawTerm& t) const {
    if (t.variable) return false;
    if (t.args.empty() && is_true_name(t.name)) return true;
    return predicates_.count({t.name, t.args.size()}) > 0;
  }

  void mark_predicate(const RawTerm& t) {
    if (t.args.empty() && is_true_name(t.name)) return;
    predicates_.insert({t.name, t.args.size()});
  }

  void report(const SourceSpan& span, const std::string& message) {
    if (options_.strict) throw ParseError(message, span.file, span.line, span.column);
    problem_.diagnostics.push_back(Diagnostic{Diagnostic::Level::Error, message, span});
  }

  SymbolId symbol(const RawTerm& t, SortId result) {
    if (result == kBoolSort && t.args.empty() && is_true_name(t.name)) return kTopSymbol;
    Key key{t.name, t.args.size()};
    auto [it, fresh] = first_use_.try_emplace(t.name, std::make_pair(key, result));
    if (!fresh) {
      auto [first_key, first_sort] = it->second;
      if (first_key.second != key.second && reported_.insert(t.name + "/arity").second) {
        report(t.span, "symbol '" + t.name + "' used with arity " + std::to_string(key.second) +
                           " and arity " + std::to_string(first_key.second));
      }
      if (first_sort != result && reported_.insert(t.name + "/kind").second) {
        report(t.span, "symbol '" + t.name + "' used both as predicate and as function");
      }
    }
    return problem_.signature.add_symbol(
        t.name, std::vector<SortId>(t.args.size(), kIndividualSort), result);
  }

  Term build(const RawTerm& t, SortId sort, std::map<std::string, VarId>& vars,
             std::map<VarId, SortId>& var_sorts) {
    if (t.variable) {
      auto [it, fresh] = vars.try_emplace(t.name, static_cast<VarId>(vars.size()));
      auto [sit, sfresh] = var_sorts.try_emplace(it->second, sort);
      if (!sfresh && sit->second != sort) {
        throw ParseError("variable " + t.name + " used at two different sorts", t.span.file,
                         t.span.line, t.span.column);
      }
      return Term::var(it->second, sort);
    }
    SymbolId f = symbol(t, sort);
    std::vector<Term> args;
    for (const RawTerm& a : t.args) args.push_back(build(a, kIndividualSort, vars, var_sorts));
    return problem_.signature.app(f, std::move(args));
  }

  // Sort of an equation: $o when either side is a predicate atom or a
  // variable already known to be Boolean in this clause.
  SortId equation_sort(const RawLiteral& l, const std::set<std::string>& bool_vars) const {
    for (const RawTerm* s : {&l.lhs, &l.rhs}) {
      if (is_predicate(*s)) return kBoolSort;
      if (s->variable && bool_vars.count(s->name)) return kBoolSort;
    }
    return kIndividualSort;
  }

  void elaborate(RawClause& c) {
    // Variables equated with predicate atoms are Boolean; propagate
    // through variable-variable equations.
    std::set<std::string> bool_vars;
    for (bool changed = true; changed;) {
      changed = false;
      for (const RawLiteral& l : c.literals) {
        if (!l.equation || equation_sort(l, bool_vars) != kBoolSort) continue;
        for (const RawTerm* s : {&l.lhs, &l.rhs}) {
          if (s->variable && bool_vars.insert(s->name).second) changed = true;
        }
      }
    }
    std::map<std::string, VarId> vars;
    std::map<VarId, SortId> var_sorts;
    std::vector<Literal> lits;
    for (const RawLiteral& l : c.literals) {
      if (l.equation) {
        SortId sort = equation_sort(l, bool_vars);
        Term lhs = build(l.lhs, sort, vars, var_sorts);
        Term rhs = build(l.rhs, sort, vars, var_sorts);
        lits.push_back(Literal{l.positive, lhs, rhs});
      } else {
        Term atom = build(l.lhs, kBoolSort, vars, var_sorts);
        lits.push_back(Literal{l.positive, atom, problem_.signature.top()});
      }
    }
    if (c.tautology) {
      Term top = problem_.signature.top();
      lits.push_back(Literal{true, top, top});
    }
    problem_.inputs.push_back(InputClause{c.name, c.role, Clause::input(std::move(lits), c.name), c.span});
  }

  Problem& problem_;
  const ParseOptions& options_;
  std::set<Key> predicates_;
  std::map<std::string, std::pair<Key, SortId>> first_use_;
  std::set<std::string> reported_;
};

std::string problem_name(std::string_view file) {
  std::filesystem::path p{std::string(file)};
  return p.stem().string();
}

}  // namespace

Problem parse_cnf(std::string_view text, const ParseOptions& options, std::string_view file) {
  Reader reader(options);
  reader.read(text, std::string(file), nullptr, 0);
  Problem problem;
  problem.name = problem_name(file);
  Elaborator(problem, options).run(reader.clauses);
  return problem;
}

Problem parse_file(const std::string& path, const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file", path, 0, 0);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_cnf(buf.str(), options, path);
}

std::vector<Diagnostic> validate(const Problem& problem) {
  std::vector<Diagnostic> out = problem.diagnostics;
  if (problem.inputs.empty()) {
    out.push_back(Diagnostic{Diagnostic::Level::Error, "problem contains no clauses",
                             SourceSpan{problem.name, 0, 0}});
  }
  std::set<std::string> seen;
  for (const InputClause& in : problem.inputs) {
    if (in.role != "axiom" && in.role != "hypothesis" && in.role != "negated_conjecture") {
      out.push_back(Diagnostic{Diagnostic::Level::Warning,
                               "clause '" + in.name + "' has role '" + in.role +
                                   "'; it is used as an axiom",
                               in.span});
    }
    if (!seen.insert(in.name).second) {
      out.push_back(Diagnostic{Diagnostic::Level::Warning,
                               "duplicate clause name '" + in.name + "'", in.span});
    }
  }
  return out;
}

std::string print_clause(const std::string& name, const std::string& role,
                         std::span<const Literal> lits, const Signature& sig) {
  return "cnf(" + name + ", " + role + ", (" + to_string(lits, sig) + ")).";
}

std::string print_cnf(const Problem& problem) {
  std::string out;
  for (const InputClause& in : problem.inputs) {
    out += print_clause(in.name, in.role, in.clause->literals(), problem.signature);
    out += '\n';
  }
  return out;
}

Term parse_term(std::string_view text, Signature& sig, std::map<std::string, VarId>& vars) {
  Lexer lex(text, "<term>");
  std::function<Term()> term = [&]() -> Term {
    Token t = lex.take();
    if (t.kind == Tok::Upper) {
      auto [it, fresh] = vars.try_emplace(t.text, static_cast<VarId>(vars.size()));
      return Term::var(it->second);
    }
    if (t.kind != Tok::Lower && t.kind != Tok::Quoted && t.kind != Tok::Number) {
      lex.fail(t, "expected a term");
    }
    std::vector<Term> args;
    if (lex.accept("(")) {
      do args.push_back(term());
      while (lex.accept(","));
      lex.expect(")");
    }
    return sig.fn(symbol_name(t), std::move(args));
  };
  Term result = term();
  if (lex.peek().kind != Tok::End) lex.fail(lex.peek(), "trailing input after term");
  return result;
}

}  // namespace delsup
