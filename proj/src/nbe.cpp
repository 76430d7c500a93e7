#include "fcm/nbe.hpp"

#include <algorithm>
#include <numeric>

#include "fcm/error.hpp"
#include "json.hpp"

namespace fcm::nbe {

  using deriv::Derivation;
  using deriv::Rule;
  using Json = nlohmann::ordered_json;

  Perm::Perm(std::vector<std::size_t> map): map_(std::move(map)) {
    std::vector<bool> seen(map_.size(), false);
    for (auto x: map_) {
      if (x >= map_.size() || seen[x]) throw DomainError("not a permutation");
      seen[x] = true;
    }
  }

  Perm identity(std::size_t n) {
    std::vector<std::size_t> m(n);
    std::iota(m.begin(), m.end(), std::size_t{0});
    return Perm(std::move(m));
  }

  Perm compose(const Perm& q, const Perm& p) {
    if (q.n() != p.n()) throw SizeMismatch("compose: permutations of different sizes");
    std::vector<std::size_t> m(p.n());
    for (std::size_t i = 0; i < p.n(); i++) m[i] = q(p(i));
    return Perm(std::move(m));
  }

  Perm inverse(const Perm& p) {
    std::vector<std::size_t> m(p.n());
    for (std::size_t i = 0; i < p.n(); i++) m[p(i)] = i;
    return Perm(std::move(m));
  }

  Perm transpose01(std::size_t n) {
    if (n < 2) throw DomainError("transpose01 needs at least two points");
    auto m = identity(n).map();
    std::swap(m[0], m[1]);
    return Perm(std::move(m));
  }

  Perm block_sum(const Perm& p, const Perm& q) {
    auto m = p.map();
    for (auto x: q.map()) m.push_back(p.n() + x);
    return Perm(std::move(m));
  }

  VecList vectorise(const SymList& xs) { return VecList(xs); }
  SymList listify(const VecList& v) { return v.values(); }

  VecList concat(const VecList& a, const VecList& b) {
    auto xs = a.values();
    xs.insert(xs.end(), b.values().begin(), b.values().end());
    return VecList(std::move(xs));
  }

  bool PermWitness::holds(const VecList& lhs, const VecList& rhs, const Perm& phi) {
    if (lhs.n() != phi.n() || rhs.n() != phi.n()) return false;
    for (std::size_t i = 0; i < phi.n(); i++)
      if (lhs.at(i) != rhs.at(phi(i))) return false;
    return true;
  }

  PermWitness::PermWitness(VecList lhs, VecList rhs, Perm phi):
    lhs_(std::move(lhs)), rhs_(std::move(rhs)), phi_(std::move(phi)) {
    if (lhs_.n() != phi_.n() || rhs_.n() != phi_.n()) throw SizeMismatch("witness: lengths differ");
    if (!holds(lhs_, rhs_, phi_)) throw DomainError("witness: lhs != rhs . phi");
  }

  std::vector<std::size_t> hat(std::size_t t, std::size_t i) {
    if (t > i) throw DomainError("hat: index out of range");
    std::vector<std::size_t> m(i);
    for (std::size_t j = 0; j < i; j++) m[j] = j < t ? j : j + 1;
    return m;
  }

  PermWitness eval(const Derivation& d) {
    switch (d.rule()) {
      case Rule::Nil:
        return PermWitness(VecList(), VecList(), identity(0));
      case Rule::Cons: {
        auto w = eval(d.tail());
        VecList head({d.head()});
        return PermWitness(concat(head, w.lhs()), concat(head, w.rhs()), block_sum(identity(1), w.phi()));
      }
      case Rule::Comm: {
        // left : as ~ b::cs, right : a::cs ~ bs
        auto w1 = eval(d.left());
        auto w2 = eval(d.right());
        const auto& bcs = w1.rhs().values();
        const auto& acs = w2.lhs().values();
        if (bcs.empty() || acs.empty()) throw MalformedComm("comm: empty premise endpoint");
        if (!std::equal(bcs.begin() + 1, bcs.end(), acs.begin() + 1, acs.end()))
          throw MalformedComm("comm: premise tails differ");
        std::size_t n = w1.lhs().n() + 1;
        // a::as -> a::b::cs -> b::a::cs -> b::bs
        auto phi = compose(block_sum(identity(1), w2.phi()), compose(transpose01(n), block_sum(identity(1), w1.phi())));
        return PermWitness(concat(VecList({acs.front()}), w1.lhs()), concat(VecList({bcs.front()}), w2.rhs()), std::move(phi));
      }
    }
    throw MalformedComm("unknown rule");
  }

  namespace {

    // Pre: f[i] == g[phi[i]] for all i.
    Derivation quote_rec(const std::vector<Symbol>& f, const std::vector<Symbol>& g, const std::vector<std::size_t>& phi) {
      std::size_t m = f.size();
      if (m == 0) return Derivation::nil();
      std::vector<Symbol> f_tail(f.begin() + 1, f.end());
      std::vector<Symbol> g_tail(g.begin() + 1, g.end());
      if (phi[0] == 0) {
        std::vector<std::size_t> rest(m - 1);
        for (std::size_t i = 0; i + 1 < m; i++) rest[i] = phi[i + 1] - 1;
        return Derivation::cons(f[0], quote_rec(f_tail, g_tail, rest));
      }

      std::size_t t = phi[0], k = t - 1;
      // f . suc  ~  g . hat(t) = g[0] :: (g . suc . hat(k))
      auto skip_t = hat(t, m - 1);
      std::vector<Symbol> g_skip;
      for (auto j: skip_t) g_skip.push_back(g[j]);
      std::vector<std::size_t> p1(m - 1);
      for (std::size_t i = 0; i + 1 < m; i++) p1[i] = phi[i + 1] < t ? phi[i + 1] : phi[i + 1] - 1;
      auto d1 = quote_rec(f_tail, g_skip, p1);

      // g[t] :: (g . suc . hat(k))  ~  g . suc
      auto skip_k = hat(k, m - 2);
      std::vector<Symbol> lhs2{g[t]};
      std::vector<std::size_t> p2{k};
      for (auto j: skip_k) {
        lhs2.push_back(g[j + 1]);
        p2.push_back(j);
      }
      auto d2 = quote_rec(lhs2, g_tail, p2);
      return Derivation::comm(std::move(d1), std::move(d2));
    }

  }

  Derivation quote(const PermWitness& w) { return quote_rec(w.lhs().values(), w.rhs().values(), w.phi().map()); }

  std::optional<Derivation> decide(const SymList& lhs, const SymList& rhs) {
    if (lhs.size() != rhs.size()) return std::nullopt;
    std::vector<bool> used(rhs.size(), false);
    std::vector<std::size_t> phi(lhs.size());
    for (std::size_t i = 0; i < lhs.size(); i++) {
      std::size_t j = 0;
      while (j < rhs.size() && (used[j] || rhs[j] != lhs[i])) j++;
      if (j == rhs.size()) return std::nullopt;
      used[j] = true;
      phi[i] = j;
    }
    return quote(PermWitness(vectorise(lhs), vectorise(rhs), Perm(std::move(phi))));
  }

  std::vector<Perm> oracle_perm_search(const SymList& lhs, const SymList& rhs) {
    if (lhs.size() > oracle_limit || rhs.size() > oracle_limit)
      throw SizeLimitExceeded("oracle_perm_search: more than " + std::to_string(oracle_limit) + " elements");
    std::vector<Perm> res;
    if (lhs.size() != rhs.size()) return res;
    std::vector<std::size_t> m(lhs.size());
    std::iota(m.begin(), m.end(), std::size_t{0});
    do {
      bool ok = true;
      for (std::size_t i = 0; ok && i < m.size(); i++) ok = lhs[i] == rhs[m[i]];
      if (ok) res.emplace_back(m);
    } while (std::next_permutation(m.begin(), m.end()));
    return res;
  }

  std::string perm_to_json(const Perm& p) {
    Json j;
    j["n"] = p.n();
    j["map"] = p.map();
    return j.dump();
  }

  Perm perm_from_json(std::string_view text) {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
    }
    if (!j.is_object() || j.size() != 2) throw ParseError("expected {\"n\":..,\"map\":[..]}", "/");
    auto it = j.begin();
    if (it.key() != "n" || !it->is_number_unsigned()) throw ParseError("expected unsigned field 'n'", "/" + it.key());
    std::size_t n = it->get<std::size_t>();
    ++it;
    if (it.key() != "map" || !it->is_array()) throw ParseError("expected array field 'map'", "/" + it.key());
    std::vector<std::size_t> map;
    for (std::size_t i = 0; i < it->size(); i++) {
      const auto& x = (*it)[i];
      if (!x.is_number_unsigned()) throw ParseError("map entries must be unsigned integers", "/map/" + std::to_string(i));
      map.push_back(x.get<std::size_t>());
    }
    if (map.size() != n) throw ParseError("'map' length differs from 'n'", "/map");
    try {
      return Perm(std::move(map));
    } catch (const DomainError&) {
      throw ParseError("'map' is not a bijection", "/map");
    }
  }

}
