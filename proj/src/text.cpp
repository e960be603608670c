/* Copyright 2026 The cwprimes Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "cwprimes/text.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "flat_ops.hpp"

namespace cwprimes {

using namespace flat;

namespace {

std::size_t tower_height(const FieldNode& f) {
  std::size_t h = 0;
  const FieldNode* cur = &f;
  while (cur->kind() == FieldNode::Kind::kExtension) {
    ++h;
    cur = cur->parent().get();
  }
  return h;
}

struct EltText {
  std::string text;
  std::size_t terms = 0;  // number of printed monomials
};

// Renders a flat element of `f` as a polynomial in the tower generators.
EltText elt_text(const FieldNode& f, const Word* v) {
  if (f.kind() == FieldNode::Kind::kPrime) return {std::to_string(v[0]), 1};
  const FieldNode& par = *f.parent();
  const std::size_t wp = par.abs_degree();
  const std::string var = generator_name(tower_height(f));
  std::string out;
  std::size_t terms = 0;
  for (std::size_t i = f.rel_degree(); i-- > 0;) {
    const Word* ci = v + i * wp;
    if (vec_is_zero(ci, wp)) continue;
    std::string term;
    if (i == 0) {
      EltText inner = elt_text(par, ci);
      term = inner.text;
      terms += inner.terms;
    } else {
      std::string mono = i == 1 ? var : var + "^" + std::to_string(i);
      bool is_one = ci[0] == 1 && vec_is_zero(ci + 1, wp - 1);
      if (is_one) {
        term = mono;
      } else {
        EltText inner = elt_text(par, ci);
        term = (inner.terms > 1 ? "(" + inner.text + ")" : inner.text) + "*" + mono;
      }
      ++terms;
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  if (out.empty()) return {"0", 1};
  return {out, terms};
}

}  // namespace

std::string generator_name(std::size_t level) {
  static const char* names[] = {"", "t", "z", "w", "u", "v"};
  if (level >= 1 && level <= 5) return names[level];
  return "g" + std::to_string(level);
}

std::string to_string(const FqElement& x) { return elt_text(*x.field(), x.flat().data()).text; }

std::string to_string(const DensePoly& f) {
  if (!f.valid()) return "<invalid>";
  if (f.is_zero()) return "0";
  const FieldNode& K = *f.field();
  const std::size_t w = K.abs_degree();
  std::string out;
  for (long i = f.degree(); i >= 0; --i) {
    const Word* ci = f.words().data() + static_cast<std::size_t>(i) * w;
    if (vec_is_zero(ci, w)) continue;
    std::string term;
    if (i == 0) {
      term = elt_text(K, ci).text;
    } else {
      std::string mono = i == 1 ? "T" : "T^" + std::to_string(i);
      bool is_one = ci[0] == 1 && vec_is_zero(ci + 1, w - 1);
      if (is_one) {
        term = mono;
      } else {
        EltText inner = elt_text(K, ci);
        term = (inner.terms > 1 ? "(" + inner.text + ")" : inner.text) + "*" + mono;
      }
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

// --- parsing ---------------------------------------------------------------------

namespace {

struct Token {
  enum Type { kNumber, kName, kOp, kEnd } type = kEnd;
  std::uint64_t number = 0;
  std::string name;
  char op = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }
  const Token& peek() const { return tok_; }
  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ >= s_.size()) {
      tok_ = Token{};
      return;
    }
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
        if (v > (std::uint64_t{1} << 62)) throw ParseError("number literal too large");
        ++pos_;
      }
      tok_ = Token{Token::kNumber, v, "", 0};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])))) {
        name.push_back(s_[pos_]);
        ++pos_;
      }
      tok_ = Token{Token::kName, 0, name, 0};
      return;
    }
    if (c == '+' || c == '-' || c == '*' || c == '^' || c == '(' || c == ')') {
      ++pos_;
      tok_ = Token{Token::kOp, 0, "", c};
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "' in polynomial text");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  Token tok_;
};

class PolyParser {
 public:
  PolyParser(const FieldPtr& field, const std::string& text) : field_(field), lex_(text) {}

  DensePoly parse() {
    DensePoly r = parse_expr();
    if (lex_.peek().type != Token::kEnd) throw ParseError("trailing input in polynomial text");
    return r;
  }

 private:
  DensePoly parse_expr() {
    bool neg = false;
    if (lex_.peek().type == Token::kOp && (lex_.peek().op == '-' || lex_.peek().op == '+')) {
      neg = lex_.next().op == '-';
    }
    DensePoly acc = parse_term();
    if (neg) acc = -acc;
    while (lex_.peek().type == Token::kOp && (lex_.peek().op == '+' || lex_.peek().op == '-')) {
      char op = lex_.next().op;
      DensePoly t = parse_term();
      acc = op == '+' ? acc + t : acc - t;
    }
    return acc;
  }

  bool starts_factor() const {
    const Token& t = lex_.peek();
    return t.type == Token::kNumber || t.type == Token::kName ||
           (t.type == Token::kOp && t.op == '(');
  }

  DensePoly parse_term() {
    DensePoly acc = parse_factor();
    while (true) {
      if (lex_.peek().type == Token::kOp && lex_.peek().op == '*') {
        lex_.next();
        acc = acc * parse_factor();
      } else if (starts_factor()) {
        acc = acc * parse_factor();  // implicit product, e.g. "2T" or "(t+1)T"
      } else {
        return acc;
      }
    }
  }

  DensePoly parse_factor() {
    Token t = lex_.next();
    if (t.type == Token::kNumber) return DensePoly::constant(FqElement::from_residue(field_, t.number));
    if (t.type == Token::kOp && t.op == '(') {
      DensePoly inner = parse_expr();
      Token close = lex_.next();
      if (close.type != Token::kOp || close.op != ')') throw ParseError("missing ')'");
      return maybe_power(inner);
    }
    if (t.type == Token::kName) return maybe_power(resolve_name(t.name));
    throw ParseError("malformed polynomial text");
  }

  DensePoly maybe_power(DensePoly base) {
    if (lex_.peek().type == Token::kOp && lex_.peek().op == '^') {
      lex_.next();
      Token e = lex_.next();
      if (e.type != Token::kNumber) throw ParseError("exponent must be a number");
      if (e.number > 1u << 24) throw ParseError("exponent too large");
      DensePoly acc = DensePoly::one(field_);
      for (std::uint64_t i = 0; i < e.number; ++i) acc = acc * base;
      return acc;
    }
    return base;
  }

  DensePoly resolve_name(const std::string& name) {
    if (name == "T") return DensePoly::T(field_);
    // Find the tower level whose generator carries this name.
    const FieldNode* cur = field_.get();
    FieldPtr cur_ptr = field_;
    while (cur->kind() == FieldNode::Kind::kExtension) {
      if (generator_name(tower_height(*cur)) == name) {
        FqElement g = FqElement::generator(cur_ptr);
        return DensePoly::constant(g.promoted_to(field_));
      }
      cur_ptr = cur->parent();
      cur = cur_ptr.get();
    }
    throw ParseError("unknown generator '" + name + "' for this field");
  }

  FieldPtr field_;
  Lexer lex_;
};

}  // namespace

DensePoly parse_poly(const FieldPtr& field, const std::string& text) {
  return PolyParser(field, text).parse();
}

FqElement parse_element(const FieldPtr& field, const std::string& text) {
  DensePoly p = parse_poly(field, text);
  if (p.degree() > 0) throw ParseError("expected a field element, got a polynomial in T");
  return p.is_zero() ? FqElement::zero(field) : p.coeff(0);
}

// --- field specs -----------------------------------------------------------------

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::uint64_t parse_u64(const std::string& s) {
  if (s.empty()) throw ParseError("empty number in field spec");
  std::uint64_t v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad number in field spec");
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
    if (v > (std::uint64_t{1} << 62)) throw ParseError("number too large in field spec");
  }
  return v;
}

// Builds one tower step "s" | "s:c_{s-1},...,c_0" above `base`.
FieldPtr apply_step(const FieldPtr& base, const std::string& step) {
  const auto colon = step.find(':');
  const std::uint64_t s = parse_u64(step.substr(0, colon == std::string::npos ? step.size() : colon));
  if (s < 2) throw ParseError("tower step degree must be >= 2");
  if (colon == std::string::npos) return mk_extension_deg(base, static_cast<std::size_t>(s));
  std::vector<std::string> coeffs = split(step.substr(colon + 1), ',');
  if (coeffs.size() != s) throw ParseError("field spec lists the wrong number of coefficients");
  DensePoly m(base);
  std::vector<FqElement> cs(s + 1, FqElement::zero(base));
  cs[s] = FqElement::one(base);
  for (std::size_t i = 0; i < s; ++i) {
    // Listed high degree first: c_{s-1}, ..., c_0.
    cs[s - 1 - i] = parse_element(base, coeffs[i]);
  }
  return mk_extension(base, DensePoly::from_coeffs(base, cs));
}

}  // namespace

FieldPtr parse_field_spec(const std::string& spec) {
  if (spec.empty()) throw ParseError("empty field spec");
  std::vector<std::string> steps = split(spec, '/');
  // First segment: p | p^m | p^m:coeffs
  const std::string& head = steps[0];
  const auto caret = head.find('^');
  FieldPtr field;
  if (caret == std::string::npos) {
    if (head.find(':') != std::string::npos) throw ParseError("prime field spec takes no minpoly");
    field = mk_prime_field(parse_u64(head));
  } else {
    const std::uint64_t p = parse_u64(head.substr(0, caret));
    std::string rest = head.substr(caret + 1);
    FieldPtr prime = mk_prime_field(p);
    const auto colon = rest.find(':');
    const std::uint64_t m = parse_u64(rest.substr(0, colon == std::string::npos ? rest.size() : colon));
    if (m == 1) {
      if (colon != std::string::npos) throw ParseError("degree-1 extension takes no minpoly");
      field = prime;
    } else {
      std::string step = std::to_string(m);
      if (colon != std::string::npos) step += rest.substr(colon);
      field = apply_step(prime, step);
    }
  }
  for (std::size_t i = 1; i < steps.size(); ++i) field = apply_step(field, steps[i]);
  return field;
}

namespace {
std::string strip_spaces(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  return s;
}
}  // namespace

std::string field_spec(const FieldPtr& field) {
  if (field->kind() == FieldNode::Kind::kPrime) return std::to_string(field->characteristic());
  std::string parent_spec = field_spec(field->parent());
  const std::size_t s = field->rel_degree();
  std::ostringstream out;
  if (field->parent()->kind() == FieldNode::Kind::kPrime) {
    out << field->characteristic() << "^" << s << ":";
  } else {
    out << parent_spec << "/" << s << ":";
  }
  for (std::size_t i = s; i-- > 0;) {
    ConstWordSpan ci = field->minpoly_coeff(i);
    out << strip_spaces(elt_text(*field->parent(), ci.data()).text);
    if (i != 0) out << ",";
  }
  return out.str();
}

}  // namespace cwprimes
