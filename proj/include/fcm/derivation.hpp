#pragma once

// Proof trees for the commutation relation on symbol lists:
//
//   nil  : [] ~ []
//   cons : l ~ r                          =>  h::l ~ h::r
//   comm : as ~ b::cs  and  a::cs ~ bs    =>  a::as ~ b::bs
//
// A comm node stores only its two premises; a, b and cs are read off their
// endpoints.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "fcm/symbol.hpp"

namespace fcm::deriv {

  enum class Rule { Nil, Cons, Comm };

  struct Node;

  // Immutable, structurally shared tree.
  class Derivation {
  public:
    static Derivation nil();
    static Derivation cons(Symbol head, Derivation tail);
    static Derivation comm(Derivation left, Derivation right);

    Rule rule() const noexcept;
    // Pre: rule() == Cons.
    const Symbol& head() const;
    const Derivation& tail() const;
    // Pre: rule() == Comm.
    const Derivation& left() const;
    const Derivation& right() const;

    std::size_t depth() const;
    std::size_t node_count() const;

    friend bool operator==(const Derivation& a, const Derivation& b);

  private:
    explicit Derivation(std::shared_ptr<const Node> n): node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
  };

  struct Node {
    Rule rule;
    std::optional<Symbol> head;
    std::optional<Derivation> first, second;
  };

  using Endpoints = std::pair<SymList, SymList>;

  // Throws MalformedComm when a comm node's premises do not fit the rule.
  Endpoints endpoints(const Derivation& d);

  bool check(const Derivation& d, const SymList& lhs, const SymList& rhs);

  Derivation refl_derive(const SymList& xs);

  // nil -> nil, cons(h,t) -> cons(h, symm t), comm(d1,d2) -> comm(symm d2, symm d1).
  Derivation symm(const Derivation& d);

  // Proves l1 ++ l2 ~ r1 ++ r2 by quoting the block sum of both witnesses.
  Derivation cong_append(const Derivation& d1, const Derivation& d2);

  // Pre: rhs(d1) == lhs(d2), else EndpointMismatch.
  Derivation trans(const Derivation& d1, const Derivation& d2);

  // Compact JSON, fields in the order rule, head|left, tail|right.
  std::string serialize(const Derivation& d);
  // Throws ParseError.
  Derivation deserialize(std::string_view text);

  // Named trees used in documentation and fixtures.
  Derivation swap_example();                            // [a,b] ~ [b,a]
  Derivation reverse3_example(const SymList& ds = {});  // a::b::c::ds ~ c::b::a::ds
  Derivation dup_pointwise_example();                   // [a,a] ~ [a,a] by cons
  Derivation dup_comm_example();                        // [a,a] ~ [a,a] by comm

}
