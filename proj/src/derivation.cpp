#include "fcm/derivation.hpp"

#include <algorithm>
#include "json.hpp"

#include "fcm/error.hpp"
#include "fcm/nbe.hpp"

namespace fcm::deriv {

  using Json = nlohmann::ordered_json;

  Derivation Derivation::nil() {
    static const Derivation leaf(std::make_shared<const Node>(Node{Rule::Nil, std::nullopt, std::nullopt, std::nullopt}));
    return leaf;
  }

  Derivation Derivation::cons(Symbol head, Derivation tail) {
    return Derivation(std::make_shared<const Node>(Node{Rule::Cons, std::move(head), std::move(tail), std::nullopt}));
  }

  Derivation Derivation::comm(Derivation left, Derivation right) {
    return Derivation(std::make_shared<const Node>(Node{Rule::Comm, std::nullopt, std::move(left), std::move(right)}));
  }

  Rule Derivation::rule() const noexcept { return node_->rule; }
  const Symbol& Derivation::head() const { return node_->head.value(); }
  const Derivation& Derivation::tail() const { return node_->first.value(); }
  const Derivation& Derivation::left() const { return node_->first.value(); }
  const Derivation& Derivation::right() const { return node_->second.value(); }

  std::size_t Derivation::depth() const {
    switch (rule()) {
      case Rule::Nil: return 1;
      case Rule::Cons: return 1 + tail().depth();
      case Rule::Comm: return 1 + std::max(left().depth(), right().depth());
    }
    return 0;
  }

  std::size_t Derivation::node_count() const {
    switch (rule()) {
      case Rule::Nil: return 1;
      case Rule::Cons: return 1 + tail().node_count();
      case Rule::Comm: return 1 + left().node_count() + right().node_count();
    }
    return 0;
  }

  bool operator==(const Derivation& a, const Derivation& b) {
    if (a.node_ == b.node_) return true;
    if (a.rule() != b.rule()) return false;
    switch (a.rule()) {
      case Rule::Nil: return true;
      case Rule::Cons: return a.head() == b.head() && a.tail() == b.tail();
      case Rule::Comm: return a.left() == b.left() && a.right() == b.right();
    }
    return false;
  }

  Endpoints endpoints(const Derivation& d) {
    switch (d.rule()) {
      case Rule::Nil:
        return {};
      case Rule::Cons: {
        auto [l, r] = endpoints(d.tail());
        l.insert(l.begin(), d.head());
        r.insert(r.begin(), d.head());
        return {std::move(l), std::move(r)};
      }
      case Rule::Comm: {
        // left : as ~ b::cs, right : a::cs ~ bs
        auto [as, bcs] = endpoints(d.left());
        auto [acs, bs] = endpoints(d.right());
        if (bcs.empty()) throw MalformedComm("comm: right endpoint of the left premise is empty");
        if (acs.empty()) throw MalformedComm("comm: left endpoint of the right premise is empty");
        if (!std::equal(bcs.begin() + 1, bcs.end(), acs.begin() + 1, acs.end()))
          throw MalformedComm("comm: premise tails differ");
        as.insert(as.begin(), acs.front());
        bs.insert(bs.begin(), bcs.front());
        return {std::move(as), std::move(bs)};
      }
    }
    throw MalformedComm("unknown rule");
  }

  bool check(const Derivation& d, const SymList& lhs, const SymList& rhs) {
    try {
      auto [l, r] = endpoints(d);
      return l == lhs && r == rhs;
    } catch (const MalformedComm&) {
      return false;
    }
  }

  Derivation refl_derive(const SymList& xs) {
    Derivation d = Derivation::nil();
    for (auto it = xs.rbegin(); it != xs.rend(); ++it) d = Derivation::cons(*it, std::move(d));
    return d;
  }

  namespace {
    Derivation mirror(const Derivation& d) {
      switch (d.rule()) {
        case Rule::Nil: return d;
        case Rule::Cons: return Derivation::cons(d.head(), mirror(d.tail()));
        case Rule::Comm: return Derivation::comm(mirror(d.right()), mirror(d.left()));
      }
      throw MalformedComm("unknown rule");
    }
  }

  Derivation symm(const Derivation& d) {
    endpoints(d);
    return mirror(d);
  }

  Derivation cong_append(const Derivation& d1, const Derivation& d2) {
    auto w1 = nbe::eval(d1), w2 = nbe::eval(d2);
    auto lhs = nbe::concat(w1.lhs(), w2.lhs());
    auto rhs = nbe::concat(w1.rhs(), w2.rhs());
    return nbe::quote(nbe::PermWitness(std::move(lhs), std::move(rhs), nbe::block_sum(w1.phi(), w2.phi())));
  }

  Derivation trans(const Derivation& d1, const Derivation& d2) {
    auto w1 = nbe::eval(d1), w2 = nbe::eval(d2);
    if (w1.rhs() != w2.lhs()) throw EndpointMismatch("trans: right endpoint of the first derivation differs from the left endpoint of the second");
    return nbe::quote(nbe::PermWitness(w1.lhs(), w2.rhs(), nbe::compose(w2.phi(), w1.phi())));
  }

  namespace {

    Json encode(const Derivation& d) {
      Json j;
      switch (d.rule()) {
        case Rule::Nil:
          j["rule"] = "nil";
          break;
        case Rule::Cons:
          j["rule"] = "cons";
          j["head"] = d.head().text();
          j["tail"] = encode(d.tail());
          break;
        case Rule::Comm:
          j["rule"] = "comm";
          j["left"] = encode(d.left());
          j["right"] = encode(d.right());
          break;
      }
      return j;
    }

    void expect_keys(const Json& j, std::initializer_list<const char*> keys, const std::string& path) {
      if (j.size() != keys.size()) throw ParseError("wrong number of fields", path.empty() ? "/" : path);
      auto it = j.begin();
      for (const char* k: keys) {
        if (it.key() != k) throw ParseError(std::string("expected field '") + k + "'", path + "/" + it.key());
        ++it;
      }
    }

    Derivation decode(const Json& j, const std::string& path) {
      if (!j.is_object()) throw ParseError("expected an object", path.empty() ? "/" : path);
      auto rule = j.find("rule");
      if (rule == j.end() || !rule->is_string()) throw ParseError("missing string field 'rule'", path + "/rule");
      const auto& name = rule->get_ref<const std::string&>();
      if (name == "nil") {
        expect_keys(j, {"rule"}, path);
        return Derivation::nil();
      }
      if (name == "cons") {
        expect_keys(j, {"rule", "head", "tail"}, path);
        const auto& head = j["head"];
        if (!head.is_string() || !Symbol::valid(head.get_ref<const std::string&>()))
          throw ParseError("'head' must be a symbol string", path + "/head");
        return Derivation::cons(Symbol(head.get<std::string>()), decode(j["tail"], path + "/tail"));
      }
      if (name == "comm") {
        expect_keys(j, {"rule", "left", "right"}, path);
        return Derivation::comm(decode(j["left"], path + "/left"), decode(j["right"], path + "/right"));
      }
      throw ParseError("unknown rule '" + name + "'", path + "/rule");
    }

  }

  std::string serialize(const Derivation& d) { return encode(d).dump(); }

  Derivation deserialize(std::string_view text) {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
    }
    return decode(j, "");
  }

  Derivation swap_example() {
    return Derivation::comm(Derivation::cons(Symbol("b"), Derivation::nil()), Derivation::cons(Symbol("a"), Derivation::nil()));
  }

  Derivation reverse3_example(const SymList& ds) {
    auto refl = [&](const char* x) {
      SymList xs{Symbol(x)};
      xs.insert(xs.end(), ds.begin(), ds.end());
      return refl_derive(xs);
    };
    auto bc = Derivation::comm(refl("c"), refl("b"));
    auto ab = Derivation::comm(refl("b"), refl("a"));
    return Derivation::comm(bc, ab);
  }

  Derivation dup_pointwise_example() {
    const Symbol a("a");
    return Derivation::cons(a, Derivation::cons(a, Derivation::nil()));
  }

  Derivation dup_comm_example() {
    const Symbol a("a");
    auto leaf = Derivation::cons(a, Derivation::nil());
    return Derivation::comm(leaf, leaf);
  }

}
