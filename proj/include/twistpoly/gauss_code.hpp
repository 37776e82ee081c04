#pragma once

// Twisted link diagrams as Gauss codes: one cyclic token sequence per
// component, each token a classical crossing passage (over/under, sign) or a
// bar. Virtual crossings are intentionally absent; every invariant computed
// downstream is blind to them, so codes describe diagrams up to detours.

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "twistpoly/errors.hpp"

namespace twistpoly {

enum class Role { Over, Under };

inline Role other_role(Role r) { return r == Role::Over ? Role::Under : Role::Over; }

struct Token {
  bool is_bar = false;
  int crossing = 0;  // >= 1 on passes
  Role role = Role::Over;
  int sign = +1;

  static Token bar() { return Token{true, 0, Role::Over, +1}; }
  static Token pass(int crossing, Role role, int sign) { return Token{false, crossing, role, sign}; }

  friend bool operator==(const Token&, const Token&) = default;
};

// Position of one pass occurrence.
struct PassRef {
  int component = -1;
  int pos = -1;
  friend bool operator==(const PassRef&, const PassRef&) = default;
  friend bool operator<(const PassRef& x, const PassRef& y) {
    return x.component != y.component ? x.component < y.component : x.pos < y.pos;
  }
};

// Both occurrences of one crossing.
struct CrossingRefs {
  PassRef over;
  PassRef under;
  int sign = +1;
};

// Strand segment between consecutive passes of one component: it leaves the
// pass at start_pos and enters the pass at end_pos (cyclically the next
// pass), carrying the bar positions strictly between them in traversal
// order. A crossing-free component contributes one degenerate arc
// (start_pos == end_pos == -1) holding all its bars.
struct Arc {
  int component = 0;
  int start_pos = -1;
  int end_pos = -1;
  std::vector<int> bar_positions;

  bool degenerate() const { return start_pos < 0; }
  friend bool operator==(const Arc&, const Arc&) = default;
};

struct TwistedGaussCode {
  std::vector<std::vector<Token>> components;

  friend bool operator==(const TwistedGaussCode&, const TwistedGaussCode&) = default;

  // Invariants: at least one component; every crossing id positive and
  // appearing exactly twice, once over and once under, with equal signs.
  void validate() const {
    if (components.empty()) throw ValidationError("a diagram needs at least one component");
    std::map<int, std::vector<Token>> seen;
    for (const auto& comp : components)
      for (const auto& t : comp) {
        if (t.is_bar) continue;
        if (t.crossing < 1) throw ValidationError("crossing ids must be positive");
        if (t.sign != 1 && t.sign != -1) throw ValidationError("crossing signs must be +1 or -1");
        seen[t.crossing].push_back(t);
      }
    for (const auto& [id, occ] : seen) {
      if (occ.size() != 2)
        throw ValidationError("crossing " + std::to_string(id) + " appears " +
                              std::to_string(occ.size()) + " times, expected 2");
      if (occ[0].role == occ[1].role)
        throw ValidationError("crossing " + std::to_string(id) + " appears twice as " +
                              (occ[0].role == Role::Over ? "over" : "under"));
      if (occ[0].sign != occ[1].sign)
        throw ValidationError("crossing " + std::to_string(id) + " has mismatched signs");
    }
  }

  static TwistedGaussCode parse(const std::string& text);

  std::string serialize() const {
    std::string out;
    for (size_t c = 0; c < components.size(); ++c) {
      if (c > 0) out += "; ";
      if (components[c].empty()) {
        out += "()";
        continue;
      }
      for (size_t i = 0; i < components[c].size(); ++i) {
        if (i > 0) out += " ";
        out += token_text(components[c][i]);
      }
    }
    return out;
  }

  static std::string token_text(const Token& t) {
    if (t.is_bar) return "b";
    return std::string(t.role == Role::Over ? "O" : "U") + std::to_string(t.crossing) +
           (t.sign > 0 ? "+" : "-");
  }

  std::vector<int> crossings() const {
    std::map<int, bool> ids;
    for (const auto& comp : components)
      for (const auto& t : comp)
        if (!t.is_bar) ids[t.crossing] = true;
    std::vector<int> out;
    for (const auto& [id, _] : ids) out.push_back(id);
    return out;
  }

  int crossing_count() const { return static_cast<int>(crossings().size()); }

  // Sum of signs over distinct crossings; bars contribute nothing.
  int writhe() const {
    int w = 0;
    std::map<int, bool> counted;
    for (const auto& comp : components)
      for (const auto& t : comp)
        if (!t.is_bar && !counted[t.crossing]) {
          counted[t.crossing] = true;
          w += t.sign;
        }
    return w;
  }

  int bar_count() const {
    int n = 0;
    for (const auto& comp : components)
      for (const auto& t : comp) n += t.is_bar ? 1 : 0;
    return n;
  }

  std::map<int, CrossingRefs> crossing_refs() const {
    std::map<int, CrossingRefs> refs;
    for (int c = 0; c < static_cast<int>(components.size()); ++c)
      for (int i = 0; i < static_cast<int>(components[c].size()); ++i) {
        const Token& t = components[c][i];
        if (t.is_bar) continue;
        CrossingRefs& r = refs[t.crossing];
        (t.role == Role::Over ? r.over : r.under) = PassRef{c, i};
        r.sign = t.sign;
      }
    return refs;
  }

  // Arcs in canonical order: per component, one arc per pass in positional
  // order (the arc leaving that pass), then one degenerate arc for each
  // crossing-free component.
  std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    for (int c = 0; c < static_cast<int>(components.size()); ++c) {
      const auto& comp = components[c];
      std::vector<int> passes;
      for (int i = 0; i < static_cast<int>(comp.size()); ++i)
        if (!comp[i].is_bar) passes.push_back(i);
      if (passes.empty()) {
        Arc a;
        a.component = c;
        for (int i = 0; i < static_cast<int>(comp.size()); ++i) a.bar_positions.push_back(i);
        out.push_back(std::move(a));
        continue;
      }
      int n = static_cast<int>(comp.size());
      for (size_t k = 0; k < passes.size(); ++k) {
        Arc a;
        a.component = c;
        a.start_pos = passes[k];
        a.end_pos = passes[(k + 1) % passes.size()];
        for (int i = (a.start_pos + 1) % n; i != a.end_pos; i = (i + 1) % n)
          a.bar_positions.push_back(i);
        out.push_back(std::move(a));
      }
    }
    return out;
  }

  // Dense crossing ids 1..n in order of first appearance.
  TwistedGaussCode renumbered() const {
    std::map<int, int> remap;
    TwistedGaussCode out = *this;
    int next = 1;
    for (auto& comp : out.components)
      for (auto& t : comp) {
        if (t.is_bar) continue;
        auto [it, fresh] = remap.try_emplace(t.crossing, next);
        if (fresh) ++next;
        t.crossing = it->second;
      }
    return out;
  }

  // Cyclic rotation of one component's tokens; a diagram-level no-op.
  TwistedGaussCode rotated(int component, int offset) const {
    TwistedGaussCode out = *this;
    auto& comp = out.components.at(component);
    if (comp.empty()) return out;
    int n = static_cast<int>(comp.size());
    offset = ((offset % n) + n) % n;
    std::rotate(comp.begin(), comp.begin() + offset, comp.end());
    return out;
  }
};

namespace detail {

class CodeParser {
 public:
  explicit CodeParser(const std::string& text) : s_(text) {}

  TwistedGaussCode run() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else if (c == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') advance();
      } else if (c == '\n' || c == ';') {
        end_component();
        advance();
      } else if (c == '(') {
        mark_empty();
      } else if (c == 'b') {
        begin_token();
        advance();
        require_delimiter("bar");
        cur_.push_back(Token::bar());
      } else if (c == 'O' || c == 'U') {
        read_pass(c == 'O' ? Role::Over : Role::Under);
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
    }
    end_component();
    if (comps_.empty()) comps_.emplace_back();  // the empty code is the unknot
    TwistedGaussCode code{std::move(comps_)};
    code.validate();
    return code;
  }

 private:
  void read_pass(Role role) {
    begin_token();
    int tok_line = line_, tok_col = col_;
    advance();
    size_t dig_start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) advance();
    if (pos_ == dig_start) throw SyntaxError(tok_line, tok_col, "pass token needs a crossing number");
    if (pos_ - dig_start > 7) throw SyntaxError(tok_line, tok_col, "crossing number too large");
    int id = std::stoi(s_.substr(dig_start, pos_ - dig_start));
    if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-'))
      throw SyntaxError(tok_line, tok_col, "pass token needs a trailing + or -");
    int sign = s_[pos_] == '+' ? 1 : -1;
    advance();
    require_delimiter("pass token");
    cur_.push_back(Token::pass(id, role, sign));
  }

  void mark_empty() {
    if (!cur_.empty() || explicit_empty_) fail("'()' must stand alone in its component");
    int tok_line = line_, tok_col = col_;
    advance();
    if (pos_ >= s_.size() || s_[pos_] != ')') throw SyntaxError(tok_line, tok_col, "expected '()'");
    advance();
    require_delimiter("'()'");
    explicit_empty_ = true;
  }

  void begin_token() {
    if (explicit_empty_) fail("'()' must stand alone in its component");
  }

  void require_delimiter(const std::string& what) {
    if (pos_ >= s_.size()) return;
    char c = s_[pos_];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == ';' || c == '#') return;
    fail("missing separator after " + what);
  }

  // Bare separators collapse; only tokens or '()' open a component.
  void end_component() {
    if (!cur_.empty() || explicit_empty_) {
      comps_.push_back(std::move(cur_));
      cur_.clear();
      explicit_empty_ = false;
    }
  }

  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) { throw SyntaxError(line_, col_, msg); }

  const std::string& s_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  std::vector<std::vector<Token>> comps_;
  std::vector<Token> cur_;
  bool explicit_empty_ = false;
};

}  // namespace detail

inline TwistedGaussCode TwistedGaussCode::parse(const std::string& text) {
  return detail::CodeParser(text).run();
}

}  // namespace twistpoly
