#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "fcm/error.hpp"

namespace fcm {

  // An element of a carrier alphabet. Ordered lexicographically on its text.
  class Symbol {
  public:
    explicit Symbol(std::string text): text_(std::move(text)) {
      if (!valid(text_)) throw DomainError("invalid symbol '" + text_ + "'");
    }

    static bool valid(std::string_view s) {
      if (s.empty()) return false;
      for (char c: s) {
        switch (c) {
          case ',': case '[': case ']': case '(': case ')': case '{': case '}':
          case ' ': case '\t': case '\n': case '\r': case '\v': case '\f':
            return false;
          default:
            break;
        }
      }
      return true;
    }

    const std::string& text() const noexcept { return text_; }

    friend auto operator<=>(const Symbol&, const Symbol&) = default;
    friend bool operator==(const Symbol&, const Symbol&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Symbol& s) { return os << s.text_; }

  private:
    std::string text_;
  };

  // An order-significant list of symbols.
  using SymList = std::vector<Symbol>;

  inline Symbol operator""_sym(const char* s, std::size_t n) { return Symbol(std::string(s, n)); }

  inline SymList symlist(std::initializer_list<const char*> xs) {
    SymList res;
    for (const char* x: xs) res.emplace_back(x);
    return res;
  }

}
