#pragma once

// Text syntax for lists and multisets: `[a,b,b]`, `[[a],[],[a,b]]`, `L:a`, `(a,b)`.
// Whitespace between tokens is ignored.

#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "fcm/multiset.hpp"

namespace fcm::literal {

  struct Term {
    enum class Kind { Atom, List, Pair };
    Kind kind = Kind::Atom;
    std::string atom;
    std::vector<Term> kids;
    std::size_t offset = 0;
  };

  // Throws ParseError carrying the byte offset of the failure.
  Term parse_term(std::string_view text);

  SymList parse_list(std::string_view text);

  template <class T>
  T decode(const Term& t);

  template <class T>
  T parse(std::string_view text) { return decode<T>(parse_term(text)); }

  std::string to_string(const Symbol& s);
  std::string to_string(const SymList& xs);

  template <class A, class B>
  std::string to_string(const Pair<A, B>& p);
  template <class T>
  std::string to_string(const Tagged<T>& t);
  template <class T>
  std::string to_string(const Multiset<T>& xs);

  template <class A, class B>
  std::string to_string(const Pair<A, B>& p) {
    return "(" + to_string(p.fst) + "," + to_string(p.snd) + ")";
  }

  template <class T>
  std::string to_string(const Tagged<T>& t) {
    return (t.side == Side::Left ? "L:" : "R:") + to_string(t.payload);
  }

  template <class T>
  std::string to_string(const Multiset<T>& xs) {
    std::string res = "[";
    bool first = true;
    for (const auto& x: xs) {
      if (!first) res += ",";
      first = false;
      res += to_string(x);
    }
    return res + "]";
  }

  namespace detail {
    template <class T>
    struct Decoder;

    [[noreturn]] void shape_error(const std::string& expected, const Term& at);

    template <>
    struct Decoder<Symbol> {
      static Symbol run(const Term& t) {
        if (t.kind != Term::Kind::Atom) shape_error("symbol", t);
        return Symbol(t.atom);
      }
    };

    template <class T>
    struct Decoder<Tagged<T>> {
      static Tagged<T> run(const Term& t) {
        if (t.kind != Term::Kind::Atom || t.atom.size() < 3 || t.atom[1] != ':' ||
            (t.atom[0] != 'L' && t.atom[0] != 'R'))
          shape_error("tagged symbol L:x or R:x", t);
        Term payload{Term::Kind::Atom, t.atom.substr(2), {}, t.offset + 2};
        return {t.atom[0] == 'L' ? Side::Left : Side::Right, Decoder<T>::run(payload)};
      }
    };

    template <class A, class B>
    struct Decoder<Pair<A, B>> {
      static Pair<A, B> run(const Term& t) {
        if (t.kind != Term::Kind::Pair) shape_error("pair", t);
        return {Decoder<A>::run(t.kids[0]), Decoder<B>::run(t.kids[1])};
      }
    };

    template <class T>
    struct Decoder<Multiset<T>> {
      static Multiset<T> run(const Term& t) {
        if (t.kind != Term::Kind::List) shape_error("multiset", t);
        std::vector<T> xs;
        for (const auto& k: t.kids) xs.push_back(Decoder<T>::run(k));
        return Multiset<T>::from_list(std::move(xs));
      }
    };
  }

  template <class T>
  T decode(const Term& t) { return detail::Decoder<T>::run(t); }

}
