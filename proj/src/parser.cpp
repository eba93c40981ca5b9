/*
 * Copyright 2026 the asymnet authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Lexer, recursive-descent parser and reference resolver for .acpt files.
// The parser builds raw declaration records with source locations; the
// resolver turns them into a ModelDocument in a second pass, so declaration
// order in the file does not matter.  The first problem found is thrown as a
// ParseError with a 1-based line/column diagnostic.

#include <charconv>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "asymnet/model.hpp"

namespace asymnet {

const char* category_name(DiagnosticCategory category) {
  switch (category) {
    case DiagnosticCategory::lexical: return "lexical error";
    case DiagnosticCategory::syntax: return "syntax error";
    case DiagnosticCategory::unresolved_reference: return "unresolved reference";
    case DiagnosticCategory::duplicate_name: return "duplicate name";
    case DiagnosticCategory::semantic: return "semantic error";
  }
  return "error";
}

std::string Diagnostic::format(std::string_view filename) const {
  std::string out;
  if (!filename.empty()) {
    out += filename;
    out += ':';
  }
  out += std::to_string(line);
  out += ':';
  out += std::to_string(column);
  out += ": ";
  out += category_name(category);
  out += ": ";
  out += message;
  if (!expected.empty()) {
    out += " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i != 0) out += (i + 1 == expected.size()) ? " or " : ", ";
      out += expected[i];
    }
    out += ')';
  }
  return out;
}

ParseError::ParseError(Diagnostic diagnostic)
    : Error(ErrorCode::parse_failed, diagnostic.format()),
      diagnostic_(std::move(diagnostic)) {}

namespace {

struct Location {
  std::size_t line = 1;
  std::size_t column = 1;
};

[[noreturn]] void fail(DiagnosticCategory category, Location loc,
                       std::string message,
                       std::vector<std::string> expected = {}) {
  Diagnostic d;
  d.category = category;
  d.line = loc.line;
  d.column = loc.column;
  d.message = std::move(message);
  d.expected = std::move(expected);
  throw ParseError(std::move(d));
}

// ---------------------------------------------------------------------------
// Lexer

enum class Tok {
  ident,
  number,
  lbrace,
  rbrace,
  lparen,
  rparen,
  comma,
  colon,
  equals,
  plus,
  cross_op,
  arrow,
  end,
};

const char* token_name(Tok kind) {
  switch (kind) {
    case Tok::ident: return "identifier";
    case Tok::number: return "number";
    case Tok::lbrace: return "'{'";
    case Tok::rbrace: return "'}'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::comma: return "','";
    case Tok::colon: return "':'";
    case Tok::equals: return "'='";
    case Tok::plus: return "'+'";
    case Tok::cross_op: return "'x'";
    case Tok::arrow: return "'->'";
    case Tok::end: return "end of input";
  }
  return "token";
}

struct Token {
  Tok kind = Tok::end;
  std::string text;
  double number = 0.0;
  Location loc;
};

bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool is_ident_char(char c) {
  return is_ident_start(c) || (c >= '0' && c <= '9');
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> tokens;
  Location loc;
  std::size_t i = 0;
  auto bump = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++loc.line;
        loc.column = 1;
      } else {
        ++loc.column;
      }
      ++i;
    }
  };
  auto push = [&](Tok kind, Location at, std::string lexeme) {
    Token t;
    t.kind = kind;
    t.text = std::move(lexeme);
    t.loc = at;
    tokens.push_back(std::move(t));
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      bump(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') bump(1);
      continue;
    }
    Location at = loc;
    if (is_ident_start(c)) {
      std::size_t start = i;
      while (i < text.size() && is_ident_char(text[i])) bump(1);
      push(Tok::ident, at, std::string(text.substr(start, i - start)));
      continue;
    }
    if (is_digit(c) || (c == '-' && i + 1 < text.size() && is_digit(text[i + 1]))) {
      std::size_t start = i;
      if (text[i] == '-') bump(1);
      while (i < text.size() && is_digit(text[i])) bump(1);
      if (i < text.size() && text[i] == '.') {
        bump(1);
        if (i >= text.size() || !is_digit(text[i])) {
          fail(DiagnosticCategory::lexical, at,
               "malformed number: digits must follow the decimal point");
        }
        while (i < text.size() && is_digit(text[i])) bump(1);
      }
      if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        bump(1);
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) bump(1);
        if (i >= text.size() || !is_digit(text[i])) {
          fail(DiagnosticCategory::lexical, at,
               "malformed number: digits must follow the exponent");
        }
        while (i < text.size() && is_digit(text[i])) bump(1);
      }
      std::string lexeme(text.substr(start, i - start));
      double value = 0.0;
      auto [ptr, ec] = std::from_chars(lexeme.data(),
                                       lexeme.data() + lexeme.size(), value);
      if (ec != std::errc() || ptr != lexeme.data() + lexeme.size()) {
        fail(DiagnosticCategory::lexical, at, "malformed number '" + lexeme + "'");
      }
      Token t;
      t.kind = Tok::number;
      t.text = std::move(lexeme);
      t.number = value;
      t.loc = at;
      tokens.push_back(std::move(t));
      continue;
    }
    switch (c) {
      case '{': push(Tok::lbrace, at, "{"); bump(1); continue;
      case '}': push(Tok::rbrace, at, "}"); bump(1); continue;
      case '(': push(Tok::lparen, at, "("); bump(1); continue;
      case ')': push(Tok::rparen, at, ")"); bump(1); continue;
      case ',': push(Tok::comma, at, ","); bump(1); continue;
      case ':': push(Tok::colon, at, ":"); bump(1); continue;
      case '=': push(Tok::equals, at, "="); bump(1); continue;
      case '+': push(Tok::plus, at, "+"); bump(1); continue;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          push(Tok::arrow, at, "->");
          bump(2);
          continue;
        }
        fail(DiagnosticCategory::lexical, at, "stray '-'");
      default:
        break;
    }
    // Unicode operator aliases for collect and cross.
    if (static_cast<unsigned char>(c) == 0xE2 && i + 2 < text.size() &&
        static_cast<unsigned char>(text[i + 1]) == 0x8A) {
      unsigned char third = static_cast<unsigned char>(text[i + 2]);
      if (third == 0x95) {
        push(Tok::plus, at, "+");
        bump(3);
        continue;
      }
      if (third == 0x97) {
        push(Tok::cross_op, at, "x");
        bump(3);
        continue;
      }
    }
    fail(DiagnosticCategory::lexical, at,
         std::string("unexpected character '") + c + "'");
  }
  Token eof;
  eof.kind = Tok::end;
  eof.loc = loc;
  tokens.push_back(std::move(eof));
  return tokens;
}

// ---------------------------------------------------------------------------
// Raw declaration records

struct VarRefAst {
  std::string name;
  AttributeBindings attrs;
  Location loc;
};

struct BraceAst {
  enum class Op { atom, collect, cross };
  Op op = Op::atom;
  VarRefAst var;      // atom
  std::string state;  // atom
  std::unique_ptr<BraceAst> lhs;
  std::unique_ptr<BraceAst> rhs;
  Location loc;
};

using BraceAstPtr = std::unique_ptr<BraceAst>;

struct VariableDecl {
  VarRefAst var;
  std::vector<std::pair<std::string, Location>> states;
};

struct ContextDecl {
  std::string name;
  BraceAstPtr brace;
  Location loc;
};

struct DistributionEntry {
  std::string state;
  double weight = 0.0;
  Location loc;
};

struct DistributionDecl {
  std::string name;
  VarRefAst target;
  std::vector<DistributionEntry> entries;
  Location loc;
};

struct ElementDecl {
  std::string name;
  BraceAstPtr brace;
  std::string dist_name;
  Location loc;
  Location dist_loc;
};

struct NetworkDecl {
  bool is_factored = false;
  std::string name;
  VarRefAst dependent;
  std::vector<VarRefAst> parents;
  BraceAstPtr context;  // networks only, optional
  std::vector<ElementDecl> elements;
  Location loc;
};

struct RawDocument {
  std::vector<VariableDecl> variables;
  std::vector<ContextDecl> contexts;
  std::vector<DistributionDecl> distributions;
  std::vector<NetworkDecl> networks;  // factored decls carry is_factored
};

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  RawDocument run() {
    RawDocument doc;
    while (peek().kind != Tok::end) {
      const Token& t = peek();
      if (t.kind != Tok::ident) {
        fail(DiagnosticCategory::syntax, t.loc,
             "expected a declaration, found " + describe_token(t),
             {"'variable'", "'context'", "'distribution'", "'network'",
              "'factored'"});
      }
      if (t.text == "variable") {
        doc.variables.push_back(parse_variable());
      } else if (t.text == "context") {
        doc.contexts.push_back(parse_context());
      } else if (t.text == "distribution") {
        doc.distributions.push_back(parse_distribution());
      } else if (t.text == "network") {
        doc.networks.push_back(parse_network(/*is_factored=*/false));
      } else if (t.text == "factored") {
        doc.networks.push_back(parse_network(/*is_factored=*/true));
      } else {
        fail(DiagnosticCategory::syntax, t.loc,
             "unknown declaration '" + t.text + "'",
             {"'variable'", "'context'", "'distribution'", "'network'",
              "'factored'"});
      }
    }
    return doc;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t at = pos_ + ahead;
    return at < tokens_.size() ? tokens_[at] : tokens_.back();
  }

  const Token& advance() { return tokens_[pos_++]; }

  bool check(Tok kind) const { return peek().kind == kind; }

  bool match(Tok kind) {
    if (!check(kind)) return false;
    ++pos_;
    return true;
  }

  static std::string describe_token(const Token& t) {
    if (t.kind == Tok::end) return "end of input";
    if (t.kind == Tok::ident) return "'" + t.text + "'";
    if (t.kind == Tok::number) return "number '" + t.text + "'";
    return std::string("'") + t.text + "'";
  }

  const Token& expect(Tok kind, const char* what = nullptr) {
    if (!check(kind)) {
      const Token& t = peek();
      fail(DiagnosticCategory::syntax, t.loc,
           "unexpected " + describe_token(t),
           {what != nullptr ? what : token_name(kind)});
    }
    return advance();
  }

  std::string expect_name() {
    const Token& t = expect(Tok::ident, "identifier");
    return t.text;
  }

  bool peek_keyword(const char* word) const {
    return check(Tok::ident) && peek().text == word;
  }

  void expect_keyword(const char* word) {
    if (!peek_keyword(word)) {
      const Token& t = peek();
      fail(DiagnosticCategory::syntax, t.loc,
           "unexpected " + describe_token(t),
           {std::string("'") + word + "'"});
    }
    ++pos_;
  }

  VarRefAst parse_varref() {
    const Token& name = expect(Tok::ident, "variable name");
    VarRefAst ref;
    ref.name = name.text;
    ref.loc = name.loc;
    if (match(Tok::lparen)) {
      while (true) {
        const Token& attr = expect(Tok::ident, "attribute name");
        std::optional<std::string> value;
        if (match(Tok::equals)) {
          value = expect(Tok::ident, "attribute value").text;
        }
        for (const auto& [existing, _] : ref.attrs) {
          if (existing == attr.text) {
            fail(DiagnosticCategory::duplicate_name, attr.loc,
                 "attribute '" + attr.text + "' bound twice on " + ref.name);
          }
        }
        ref.attrs.emplace_back(attr.text, std::move(value));
        if (!match(Tok::comma)) break;
      }
      expect(Tok::rparen);
    }
    return ref;
  }

  VariableDecl parse_variable() {
    expect_keyword("variable");
    VariableDecl decl;
    decl.var = parse_varref();
    expect(Tok::lbrace);
    while (true) {
      const Token& state = expect(Tok::ident, "state name");
      decl.states.emplace_back(state.text, state.loc);
      if (!match(Tok::comma)) break;
    }
    expect(Tok::rbrace);
    return decl;
  }

  ContextDecl parse_context() {
    expect_keyword("context");
    ContextDecl decl;
    const Token& name = expect(Tok::ident, "context name");
    decl.name = name.text;
    decl.loc = name.loc;
    expect(Tok::equals);
    decl.brace = parse_brace();
    return decl;
  }

  DistributionDecl parse_distribution() {
    expect_keyword("distribution");
    DistributionDecl decl;
    const Token& name = expect(Tok::ident, "distribution name");
    decl.name = name.text;
    decl.loc = name.loc;
    expect_keyword("for");
    decl.target = parse_varref();
    expect(Tok::lbrace);
    while (true) {
      const Token& state = expect(Tok::ident, "state name");
      expect(Tok::colon);
      const Token& weight = expect(Tok::number, "weight");
      decl.entries.push_back(
          DistributionEntry{state.text, weight.number, state.loc});
      if (!match(Tok::comma)) break;
    }
    expect(Tok::rbrace);
    return decl;
  }

  NetworkDecl parse_network(bool is_factored) {
    expect_keyword(is_factored ? "factored" : "network");
    NetworkDecl decl;
    decl.is_factored = is_factored;
    const Token& name = expect(Tok::ident, "declaration name");
    decl.name = name.text;
    decl.loc = name.loc;
    expect_keyword("for");
    decl.dependent = parse_varref();
    expect_keyword("given");
    decl.parents.push_back(parse_varref());
    while (match(Tok::comma)) {
      decl.parents.push_back(parse_varref());
    }
    if (!is_factored && peek_keyword("context")) {
      ++pos_;
      decl.context = parse_brace();
    }
    expect(Tok::lbrace);
    while (!check(Tok::rbrace)) {
      decl.elements.push_back(parse_element());
    }
    expect(Tok::rbrace);
    return decl;
  }

  ElementDecl parse_element() {
    if (!peek_keyword("element")) {
      const Token& t = peek();
      fail(DiagnosticCategory::syntax, t.loc,
           "unexpected " + describe_token(t), {"'element'", "'}'"});
    }
    ++pos_;
    ElementDecl decl;
    const Token& name = expect(Tok::ident, "element name");
    decl.name = name.text;
    decl.loc = name.loc;
    expect(Tok::equals);
    decl.brace = parse_brace();
    expect(Tok::arrow);
    const Token& dist = expect(Tok::ident, "distribution name");
    decl.dist_name = dist.text;
    decl.dist_loc = dist.loc;
    return decl;
  }

  bool at_cross_operator() const {
    return check(Tok::cross_op) || (check(Tok::ident) && peek().text == "x" &&
                                    peek(1).kind != Tok::equals);
  }

  BraceAstPtr parse_brace() {
    BraceAstPtr node = parse_term();
    while (check(Tok::plus)) {
      Location at = peek().loc;
      ++pos_;
      auto parent = std::make_unique<BraceAst>();
      parent->op = BraceAst::Op::collect;
      parent->loc = at;
      parent->lhs = std::move(node);
      parent->rhs = parse_term();
      node = std::move(parent);
    }
    return node;
  }

  BraceAstPtr parse_term() {
    BraceAstPtr node = parse_factor();
    while (at_cross_operator()) {
      Location at = peek().loc;
      ++pos_;
      auto parent = std::make_unique<BraceAst>();
      parent->op = BraceAst::Op::cross;
      parent->loc = at;
      parent->lhs = std::move(node);
      parent->rhs = parse_factor();
      node = std::move(parent);
    }
    return node;
  }

  BraceAstPtr parse_factor() {
    if (match(Tok::lparen)) {
      BraceAstPtr node = parse_brace();
      expect(Tok::rparen);
      return node;
    }
    if (!check(Tok::ident)) {
      const Token& t = peek();
      fail(DiagnosticCategory::syntax, t.loc,
           "unexpected " + describe_token(t),
           {"variable-value pair", "'('"});
    }
    auto node = std::make_unique<BraceAst>();
    node->op = BraceAst::Op::atom;
    node->var = parse_varref();
    node->loc = node->var.loc;
    expect(Tok::equals);
    node->state = expect(Tok::ident, "state name").text;
    return node;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Resolver

class Resolver {
 public:
  explicit Resolver(const RawDocument& raw) : raw_(raw) {}

  ModelDocument run() {
    resolve_variables();
    resolve_contexts();
    resolve_distributions();
    resolve_networks();
    return std::move(doc_);
  }

 private:
  VariableType resolve_type(const VarRefAst& ref) {
    try {
      return VariableType(ref.name, ref.attrs);
    } catch (const Error& e) {
      fail(DiagnosticCategory::semantic, ref.loc, e.what());
    }
  }

  const StateSpace& lookup_space(const VarRefAst& ref) {
    VariableType type = resolve_type(ref);
    const StateSpace* space = spaces_.find(type);
    if (space == nullptr) {
      fail(DiagnosticCategory::unresolved_reference, ref.loc,
           "variable " + type.display() + " is not declared");
    }
    return *space;
  }

  void resolve_variables() {
    for (const VariableDecl& decl : raw_.variables) {
      StateSpace space;
      space.variable = resolve_type(decl.var);
      if (spaces_.contains(space.variable)) {
        fail(DiagnosticCategory::duplicate_name, decl.var.loc,
             "variable " + space.variable.display() + " declared twice");
      }
      std::set<std::string> seen;
      for (const auto& [state, loc] : decl.states) {
        if (!seen.insert(state).second) {
          fail(DiagnosticCategory::duplicate_name, loc,
               "state '" + state + "' declared twice on " +
                   space.variable.display());
        }
        space.states.push_back(state);
      }
      spaces_.add(space);
      doc_.variables.push_back(std::move(space));
    }
  }

  Element resolve_brace(const BraceAst& ast) {
    switch (ast.op) {
      case BraceAst::Op::atom: {
        const StateSpace& space = lookup_space(ast.var);
        if (!space.index_of(ast.state)) {
          fail(DiagnosticCategory::unresolved_reference, ast.loc,
               space.variable.display() + " has no state '" + ast.state + "'");
        }
        return Element::simple(space.variable, ast.state);
      }
      case BraceAst::Op::collect: {
        Element lhs = resolve_brace(*ast.lhs);
        Element rhs = resolve_brace(*ast.rhs);
        try {
          return collect(lhs, rhs);
        } catch (const Error& e) {
          fail(DiagnosticCategory::semantic, ast.loc, e.what());
        }
      }
      case BraceAst::Op::cross: {
        Element lhs = resolve_brace(*ast.lhs);
        Element rhs = resolve_brace(*ast.rhs);
        try {
          return cross(lhs, rhs);
        } catch (const Error& e) {
          fail(DiagnosticCategory::semantic, ast.loc, e.what());
        }
      }
    }
    fail(DiagnosticCategory::semantic, ast.loc, "malformed brace expression");
  }

  void resolve_contexts() {
    std::set<std::string> names;
    for (const ContextDecl& decl : raw_.contexts) {
      if (!names.insert(decl.name).second) {
        fail(DiagnosticCategory::duplicate_name, decl.loc,
             "context " + decl.name + " declared twice");
      }
      doc_.contexts.push_back(NamedBrace{decl.name, resolve_brace(*decl.brace)});
    }
  }

  void resolve_distributions() {
    for (const DistributionDecl& decl : raw_.distributions) {
      if (dists_.count(decl.name)) {
        fail(DiagnosticCategory::duplicate_name, decl.loc,
             "distribution " + decl.name + " declared twice");
      }
      const StateSpace& space = lookup_space(decl.target);
      TypedDistribution dist;
      dist.name = decl.name;
      dist.target = space.variable;
      dist.weights.assign(space.states.size(), 0.0);
      std::vector<bool> assigned(space.states.size(), false);
      for (const DistributionEntry& entry : decl.entries) {
        std::optional<std::size_t> index = space.index_of(entry.state);
        if (!index) {
          fail(DiagnosticCategory::unresolved_reference, entry.loc,
               space.variable.display() + " has no state '" + entry.state + "'");
        }
        if (assigned[*index]) {
          fail(DiagnosticCategory::duplicate_name, entry.loc,
               "state '" + entry.state + "' assigned twice in distribution " +
                   decl.name);
        }
        if (entry.weight < 0.0) {
          fail(DiagnosticCategory::semantic, entry.loc,
               "weights must be nonnegative");
        }
        assigned[*index] = true;
        dist.weights[*index] = entry.weight;
      }
      for (std::size_t i = 0; i < assigned.size(); ++i) {
        if (!assigned[i]) {
          fail(DiagnosticCategory::semantic, decl.loc,
               "distribution " + decl.name + " does not assign state '" +
                   space.states[i] + "' of " + space.variable.display());
        }
      }
      if (!(total_weight(dist) > 0.0)) {
        fail(DiagnosticCategory::semantic, decl.loc,
             "distribution " + decl.name + " has nonpositive total weight");
      }
      dists_.emplace(decl.name, dist);
      doc_.distributions.push_back(std::move(dist));
    }
  }

  void resolve_networks() {
    std::set<std::string> network_names;
    std::set<std::string> factored_names;
    for (const NetworkDecl& decl : raw_.networks) {
      std::set<std::string>& names =
          decl.is_factored ? factored_names : network_names;
      if (!names.insert(decl.name).second) {
        fail(DiagnosticCategory::duplicate_name, decl.loc,
             std::string(decl.is_factored ? "factored CPT " : "network ") +
                 decl.name + " declared twice");
      }
      VariableType dependent = lookup_space(decl.dependent).variable;
      std::vector<VariableType> parents;
      std::set<VariableType> parent_set;
      for (const VarRefAst& ref : decl.parents) {
        VariableType parent = lookup_space(ref).variable;
        if (!parent_set.insert(parent).second) {
          fail(DiagnosticCategory::semantic, ref.loc,
               "parent " + parent.display() + " listed twice");
        }
        parents.push_back(std::move(parent));
      }

      std::set<std::string> element_names;
      std::vector<std::pair<ElementDecl const*, Element>> elements;
      for (const ElementDecl& e : decl.elements) {
        if (!element_names.insert(e.name).second) {
          fail(DiagnosticCategory::duplicate_name, e.loc,
               "element " + e.name + " declared twice in " + decl.name);
        }
        elements.emplace_back(&e, resolve_brace(*e.brace));
      }

      auto lookup_dist = [&](const ElementDecl& e) -> const TypedDistribution& {
        auto it = dists_.find(e.dist_name);
        if (it == dists_.end()) {
          fail(DiagnosticCategory::unresolved_reference, e.dist_loc,
               "distribution " + e.dist_name + " is not declared");
        }
        return it->second;
      };

      if (decl.is_factored) {
        FactoredCPT f;
        f.name = decl.name;
        f.dependent = dependent;
        f.parents = sorted_types(parents);
        for (const auto& [e, brace] : elements) {
          f.mappings.push_back(FactoredMapping{e->name, brace, lookup_dist(*e)});
        }
        doc_.factored.push_back(std::move(f));
      } else {
        AsymmetrySubnetwork n;
        n.name = decl.name;
        n.dependent = dependent;
        n.partition.name = decl.name;
        n.partition.parents = parents;
        for (std::size_t i = 0; i < elements.size(); ++i) {
          const auto& [e, brace] = elements[i];
          n.partition.elements.push_back(PartitionElement{e->name, brace});
          n.mapping.emplace(i, lookup_dist(*e));
        }
        if (decl.context) {
          n.context = resolve_brace(*decl.context);
        }
        doc_.networks.push_back(std::move(n));
      }
    }
  }

  const RawDocument& raw_;
  ModelDocument doc_;
  StateSpaceTable spaces_;
  std::map<std::string, TypedDistribution> dists_;
};

}  // namespace

StateSpaceTable ModelDocument::spaces() const {
  StateSpaceTable table;
  for (const StateSpace& space : variables) {
    table.add(space);
  }
  return table;
}

ModelDocument parse(std::string_view text, std::string_view filename) {
  (void)filename;  // diagnostics carry line/column; callers prepend the name
  Parser parser(lex(text));
  RawDocument raw = parser.run();
  return Resolver(raw).run();
}

}  // namespace asymnet
