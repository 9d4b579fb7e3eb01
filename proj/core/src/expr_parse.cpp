#include <cctype>

#include "rotinv/error.hpp"
#include "rotinv/invariant_expr.hpp"

namespace rotinv {

namespace {

//   expr    := "tr" "(" factors ")" | NAME "." [factors "."] NAME
//   factors := factor { factor }
//   factor  := (NAME | "sq" "(" NAME ")") ["^" INT]
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  InvariantExpr parse() {
    skip_ws();
    if (peek_keyword("tr")) {
      pos_ += 2;
      expect('(');
      auto factors = parse_factors(')');
      expect(')');
      finish();
      return InvariantExpr::trace(std::move(factors));
    }
    std::string left = name();
    expect('.');
    // Either "NAME <end>" or "factors . NAME".
    const std::size_t mark = pos_;
    std::string maybe_right = name();
    skip_ws();
    if (pos_ == text_.size()) {
      return InvariantExpr::sandwich(SlotRef::vector(left), {}, SlotRef::vector(maybe_right));
    }
    pos_ = mark;
    auto factors = parse_factors('.');
    expect('.');
    std::string right = name();
    finish();
    return InvariantExpr::sandwich(SlotRef::vector(left), std::move(factors),
                                   SlotRef::vector(right));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("expression '" + std::string(text_) + "' at column " +
                     std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek_keyword(std::string_view kw) {
    skip_ws();
    if (text_.substr(pos_, kw.size()) != kw) return false;
    std::size_t p = pos_ + kw.size();
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p < text_.size() && text_[p] == '(';
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void finish() {
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing text");
  }

  std::string name() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() &&
        (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
    }
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  int exponent() {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != '^') return 1;
    ++pos_;
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    const int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
    if (e < 1 || e > 64) fail("exponent out of range");
    return e;
  }

  std::vector<SlotRef> parse_factors(char stop) {
    std::vector<SlotRef> out;
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size()) fail("unterminated factor list");
      if (text_[pos_] == stop) break;
      SlotRef slot;
      if (peek_keyword("sq")) {
        pos_ += 2;
        expect('(');
        slot = SlotRef::squared(name());
        expect(')');
      } else {
        slot = SlotRef::tensor(name());
      }
      const int e = exponent();
      for (int i = 0; i < e; ++i) out.push_back(slot);
    }
    if (out.empty()) fail("empty factor list");
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

InvariantExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace rotinv
