#pragma once

// Permutation witnesses for list equality up to reordering, and the
// normalisation-by-evaluation pair translating between them and derivations:
//
//   eval  : derivation of l ~ r   ->  phi with l[i] == r[phi(i)]
//   quote : such a phi            ->  derivation of l ~ r

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fcm/derivation.hpp"

namespace fcm::nbe {

  // A bijection on {0..n-1}, stored as map[i] = phi(i).
  class Perm {
  public:
    // Throws DomainError unless `map` is a bijection on {0..map.size()-1}.
    explicit Perm(std::vector<std::size_t> map);

    std::size_t n() const noexcept { return map_.size(); }
    std::size_t operator()(std::size_t i) const { return map_.at(i); }
    const std::vector<std::size_t>& map() const noexcept { return map_; }

    friend bool operator==(const Perm&, const Perm&) = default;

  private:
    std::vector<std::size_t> map_;
  };

  Perm identity(std::size_t n);
  // compose(q, p) applies p first, then q. Throws SizeMismatch.
  Perm compose(const Perm& q, const Perm& p);
  Perm inverse(const Perm& p);
  // Swaps 0 and 1. Throws DomainError when n < 2.
  Perm transpose01(std::size_t n);
  // p (+) q acting on {0..p.n-1} then shifted {p.n..p.n+q.n-1}.
  Perm block_sum(const Perm& p, const Perm& q);

  // A list read as a length with an index function.
  class VecList {
  public:
    VecList() = default;
    explicit VecList(std::vector<Symbol> at): at_(std::move(at)) {}

    std::size_t n() const noexcept { return at_.size(); }
    const Symbol& at(std::size_t i) const { return at_.at(i); }
    const std::vector<Symbol>& values() const noexcept { return at_; }

    friend bool operator==(const VecList&, const VecList&) = default;

  private:
    std::vector<Symbol> at_;
  };

  VecList vectorise(const SymList& xs);
  SymList listify(const VecList& v);
  VecList concat(const VecList& a, const VecList& b);

  // lhs.at(i) == rhs.at(phi(i)) for all i.
  class PermWitness {
  public:
    // Throws SizeMismatch on differing lengths, DomainError if the equation fails.
    PermWitness(VecList lhs, VecList rhs, Perm phi);

    static bool holds(const VecList& lhs, const VecList& rhs, const Perm& phi);

    const VecList& lhs() const noexcept { return lhs_; }
    const VecList& rhs() const noexcept { return rhs_; }
    const Perm& phi() const noexcept { return phi_; }

  private:
    VecList lhs_, rhs_;
    Perm phi_;
  };

  // j -> j for j < t, j -> j+1 for j >= t, as a map {0..i-1} -> {0..i}.
  // Throws DomainError when t > i.
  std::vector<std::size_t> hat(std::size_t t, std::size_t i);

  // Throws MalformedComm.
  PermWitness eval(const deriv::Derivation& d);

  deriv::Derivation quote(const PermWitness& w);

  // Pairs equal symbols left to right, then quotes.
  std::optional<deriv::Derivation> decide(const SymList& lhs, const SymList& rhs);

  // All phi with lhs[i] == rhs[phi(i)], by enumerating every permutation.
  // Throws SizeLimitExceeded above this many elements.
  inline constexpr std::size_t oracle_limit = 8;
  std::vector<Perm> oracle_perm_search(const SymList& lhs, const SymList& rhs);

  // `{"n":3,"map":[2,0,1]}`
  std::string perm_to_json(const Perm& p);
  // Throws ParseError.
  Perm perm_from_json(std::string_view text);

}
