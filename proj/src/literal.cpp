#include "fcm/literal.hpp"

#include <cctype>

namespace fcm::literal {

  namespace {

    class Parser {
    public:
      explicit Parser(std::string_view s): s_(s) {}

      Term run() {
        Term t = term();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return t;
      }

    private:
      std::string_view s_;
      std::size_t pos_ = 0;

      [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

      void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) pos_++;
      }

      bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
          pos_++;
          return true;
        }
        return false;
      }

      void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
      }

      Term term() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        std::size_t at = pos_;
        if (eat('[')) {
          Term t{Term::Kind::List, {}, {}, at};
          if (eat(']')) return t;
          do t.kids.push_back(term());
          while (eat(','));
          expect(']');
          return t;
        }
        if (eat('(')) {
          Term t{Term::Kind::Pair, {}, {}, at};
          t.kids.push_back(term());
          expect(',');
          t.kids.push_back(term());
          expect(')');
          return t;
        }
        std::size_t start = pos_;
        while (pos_ < s_.size()) {
          char c = s_[pos_];
          if (c == ',' || c == '[' || c == ']' || c == '(' || c == ')' || c == '{' || c == '}' ||
              std::isspace(static_cast<unsigned char>(c)))
            break;
          pos_++;
        }
        if (pos_ == start) fail("expected symbol");
        return Term{Term::Kind::Atom, std::string(s_.substr(start, pos_ - start)), {}, start};
      }
    };

  }

  Term parse_term(std::string_view text) { return Parser(text).run(); }

  SymList parse_list(std::string_view text) {
    Term t = parse_term(text);
    if (t.kind != Term::Kind::List) throw ParseError("expected a list literal", t.offset);
    SymList res;
    for (const auto& k: t.kids) res.push_back(decode<Symbol>(k));
    return res;
  }

  std::string to_string(const Symbol& s) { return s.text(); }

  std::string to_string(const SymList& xs) {
    std::string res = "[";
    for (std::size_t i = 0; i < xs.size(); i++) {
      if (i) res += ",";
      res += xs[i].text();
    }
    return res + "]";
  }

  namespace detail {
    void shape_error(const std::string& expected, const Term& at) { throw ParseError("expected " + expected, at.offset); }
  }

}
