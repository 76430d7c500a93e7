#include "fcm/rel.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <unordered_map>

#include "fcm/error.hpp"

namespace fcm::rel {

  // ---- Elem ----

  Elem::Elem(Kind k, std::string name, std::vector<Elem> kids):
    kind_(k), name_(std::move(name)), kids_(std::move(kids)) {
    if (kind_ == Kind::Atom) weight_ = 1;
    for (const auto& x: kids_) weight_ += x.weight_;
  }

  Elem Elem::atom(std::string name) { return Elem(Kind::Atom, std::move(name), {}); }
  Elem Elem::unit() { return Elem(Kind::Unit, {}, {}); }
  Elem Elem::pair(Elem x, Elem y) { return Elem(Kind::Pair, {}, {std::move(x), std::move(y)}); }
  Elem Elem::left(Elem x) { return Elem(Kind::Left, {}, {std::move(x)}); }
  Elem Elem::right(Elem x) { return Elem(Kind::Right, {}, {std::move(x)}); }

  Elem Elem::bag(std::vector<Elem> xs) {
    std::sort(xs.begin(), xs.end());
    return Elem(Kind::Bag, {}, std::move(xs));
  }

  Elem bag_of(const Multiset<Elem>& xs) { return Elem::bag(xs.elems()); }

  Multiset<Elem> as_multiset(const Elem& x) {
    if (x.kind() != Elem::Kind::Bag) throw DomainError("not a multiset element: " + x.to_string());
    return Multiset<Elem>::from_sorted(x.kids());
  }

  std::string Elem::to_string() const {
    switch (kind_) {
      case Kind::Atom: return name_;
      case Kind::Unit: return "*";
      case Kind::Pair: return "(" + fst().to_string() + "," + snd().to_string() + ")";
      case Kind::Left: return "L:" + payload().to_string();
      case Kind::Right: return "R:" + payload().to_string();
      case Kind::Bag: {
        std::string res = "[";
        for (std::size_t i = 0; i < kids_.size(); i++) res += (i ? "," : "") + kids_[i].to_string();
        return res + "]";
      }
    }
    return "?";
  }

  std::strong_ordering operator<=>(const Elem& a, const Elem& b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    if (auto c = a.name_ <=> b.name_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.kids_.begin(), a.kids_.end(), b.kids_.begin(), b.kids_.end());
  }

  // ---- FinSet ----

  FinSet::FinSet(): data_(std::make_shared<const Data>()) {}

  FinSet::FinSet(std::vector<Elem> elems) {
    auto d = std::make_shared<Data>();
    d->elems = std::move(elems);
    for (std::size_t i = 0; i < d->elems.size(); i++)
      if (!d->index.emplace(&d->elems[i], i).second) throw DomainError("duplicate element " + d->elems[i].to_string());
    data_ = std::move(d);
  }

  FinSet FinSet::of_names(const std::vector<std::string>& names) {
    std::vector<Elem> xs;
    for (const auto& n: names) xs.push_back(Elem::atom(n));
    return FinSet(std::move(xs));
  }

  std::optional<std::size_t> FinSet::index_of(const Elem& x) const {
    auto it = data_->index.find(x);
    if (it == data_->index.end()) return std::nullopt;
    return it->second;
  }

  std::size_t FinSet::index(const Elem& x) const {
    auto i = index_of(x);
    if (!i) throw CarrierMismatch("element " + x.to_string() + " not in carrier");
    return *i;
  }

  FinSet FinSet::filter(const std::function<bool(const Elem&)>& keep) const {
    std::vector<Elem> xs;
    for (const auto& x: elems())
      if (keep(x)) xs.push_back(x);
    return FinSet(std::move(xs));
  }

  bool operator==(const FinSet& a, const FinSet& b) { return a.data_ == b.data_ || a.elems() == b.elems(); }

  // ---- FinRel ----

  FinRel::FinRel(FinSet src, FinSet dst):
    src_(std::move(src)), dst_(std::move(dst)), words_((dst_.size() + 63) / 64), bits_(src_.size() * words_, 0) {}

  std::vector<std::size_t> FinRel::row(std::size_t i) const {
    std::vector<std::size_t> res;
    for (std::size_t w = 0; w < words_; w++) {
      std::uint64_t bits = bits_[i * words_ + w];
      while (bits) {
        res.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return res;
  }

  std::size_t FinRel::count() const {
    std::size_t n = 0;
    for (auto w: bits_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  void FinRel::or_row_from(std::size_t i, const FinRel& other, std::size_t j) {
    for (std::size_t w = 0; w < words_; w++) bits_[i * words_ + w] |= other.bits_[j * other.words_ + w];
  }

  std::optional<std::pair<std::size_t, std::size_t>> FinRel::first_difference(const FinRel& other) const {
    for (std::size_t i = 0; i < src_.size(); i++)
      for (std::size_t w = 0; w < words_; w++) {
        std::uint64_t d = bits_[i * words_ + w] ^ other.bits_[i * other.words_ + w];
        if (d) return std::make_pair(i, w * 64 + static_cast<std::size_t>(std::countr_zero(d)));
      }
    return std::nullopt;
  }

  bool operator==(const FinRel& a, const FinRel& b) {
    return a.src_ == b.src_ && a.dst_ == b.dst_ && a.bits_ == b.bits_;
  }

  // ---- category ----

  FinRel rel_id(const FinSet& a) {
    FinRel r(a, a);
    for (std::size_t i = 0; i < a.size(); i++) r.set(i, i);
    return r;
  }

  FinRel rel_compose(const FinRel& g, const FinRel& f) {
    if (!(f.dst() == g.src())) throw CarrierMismatch("compose: carriers do not meet");
    FinRel res(f.src(), g.dst());
    for (std::size_t i = 0; i < f.src().size(); i++)
      for (auto j: f.row(i)) res.or_row_from(i, g, j);
    return res;
  }

  FinRel dagger(const FinRel& r) {
    FinRel res(r.dst(), r.src());
    for (std::size_t i = 0; i < r.src().size(); i++)
      for (auto j: r.row(i)) res.set(j, i);
    return res;
  }

  FinRel rel_union(const FinRel& r, const FinRel& s) {
    if (!(r.src() == s.src()) || !(r.dst() == s.dst())) throw CarrierMismatch("union: carriers differ");
    FinRel res = r;
    for (std::size_t i = 0; i < r.src().size(); i++) res.or_row_from(i, s, i);
    return res;
  }

  FinRel empty_rel(const FinSet& a, const FinSet& b) { return FinRel(a, b); }

  FinRel func_to_rel(const std::map<Elem, Elem>& f, const FinSet& a, const FinSet& b) {
    FinRel res(a, b);
    for (std::size_t i = 0; i < a.size(); i++) {
      auto it = f.find(a[i]);
      if (it == f.end()) throw DomainError("func_to_rel: map undefined at " + a[i].to_string());
      auto j = b.index_of(it->second);
      if (!j) throw DomainError("func_to_rel: image " + it->second.to_string() + " outside the codomain");
      res.set(i, *j);
    }
    return res;
  }

  FinRel graph(const FinSet& a, const FinSet& b, const std::function<std::optional<Elem>(const Elem&)>& f) {
    FinRel res(a, b);
    for (std::size_t i = 0; i < a.size(); i++)
      if (auto y = f(a[i]))
        if (auto j = b.index_of(*y)) res.set(i, *j);
    return res;
  }

  FinRel cograph(const FinSet& a, const FinSet& b, const std::function<std::optional<Elem>(const Elem&)>& f) {
    FinRel res(a, b);
    for (std::size_t j = 0; j < b.size(); j++)
      if (auto x = f(b[j]))
        if (auto i = a.index_of(*x)) res.set(*i, j);
    return res;
  }

  // ---- tensor ----

  FinSet tensor_unit() { return FinSet({Elem::unit()}); }

  FinSet tensor(const FinSet& a, const FinSet& b) {
    // Recent products, keyed by operand identity.
    thread_local std::map<std::pair<const void*, const void*>, std::array<FinSet, 3>> cache;
    auto key = std::make_pair(a.identity(), b.identity());
    if (auto it = cache.find(key); it != cache.end()) return it->second[2];
    if (cache.size() >= 512) cache.clear();
    std::vector<Elem> xs;
    xs.reserve(a.size() * b.size());
    for (const auto& x: a.elems())
      for (const auto& y: b.elems()) xs.push_back(Elem::pair(x, y));
    FinSet res(std::move(xs));
    cache.emplace(key, std::array<FinSet, 3>{a, b, res});
    return res;
  }

  FinSet tensor(const FinSet& a, const FinSet& b, std::size_t max_weight) {
    std::vector<Elem> xs;
    for (const auto& x: a.elems())
      for (const auto& y: b.elems())
        if (x.weight() + y.weight() <= max_weight) xs.push_back(Elem::pair(x, y));
    return FinSet(std::move(xs));
  }

  FinRel tensor(const FinRel& r, const FinRel& s) {
    FinRel res(tensor(r.src(), s.src()), tensor(r.dst(), s.dst()));
    std::size_t ns = s.src().size(), nd = s.dst().size();
    for (std::size_t i = 0; i < r.src().size(); i++) {
      auto ri = r.row(i);
      for (std::size_t k = 0; k < ns; k++)
        for (auto j: ri)
          for (auto l: s.row(k)) res.set(i * ns + k, j * nd + l);
    }
    return res;
  }

  namespace {
    // Position of each pair element of `pairs` by component indices.
    std::unordered_map<std::uint64_t, std::size_t> pair_index(const FinSet& pairs, const FinSet& a, const FinSet& b) {
      std::unordered_map<std::uint64_t, std::size_t> res;
      for (std::size_t p = 0; p < pairs.size(); p++) {
        const auto& e = pairs[p];
        if (e.kind() != Elem::Kind::Pair) throw CarrierMismatch("expected a pair, got " + e.to_string());
        auto i = a.index(e.fst()), j = b.index(e.snd());
        res.emplace(static_cast<std::uint64_t>(i) * b.size() + j, p);
      }
      return res;
    }
  }

  FinRel tensor_on(const FinRel& r, const FinRel& s, const FinSet& src, const FinSet& dst) {
    FinRel res(src, dst);
    auto targets = pair_index(dst, r.dst(), s.dst());
    for (std::size_t p = 0; p < src.size(); p++) {
      const auto& e = src[p];
      if (e.kind() != Elem::Kind::Pair) throw CarrierMismatch("expected a pair, got " + e.to_string());
      auto rj = r.row(r.src().index(e.fst()));
      auto sl = s.row(s.src().index(e.snd()));
      for (auto j: rj)
        for (auto l: sl) {
          auto it = targets.find(static_cast<std::uint64_t>(j) * s.dst().size() + l);
          if (it != targets.end()) res.set(p, it->second);
        }
    }
    return res;
  }

  FinRel symmetry(const FinSet& a, const FinSet& b) {
    return graph(tensor(a, b), tensor(b, a), [](const Elem& p) { return Elem::pair(p.snd(), p.fst()); });
  }

  FinRel associator(const FinSet& a, const FinSet& b, const FinSet& c) {
    return graph(tensor(tensor(a, b), c), tensor(a, tensor(b, c)),
                 [](const Elem& p) { return Elem::pair(p.fst().fst(), Elem::pair(p.fst().snd(), p.snd())); });
  }

  FinRel left_unitor(const FinSet& a) {
    return graph(tensor(tensor_unit(), a), a, [](const Elem& p) { return p.snd(); });
  }

  FinRel right_unitor(const FinSet& a) {
    return graph(tensor(a, tensor_unit()), a, [](const Elem& p) { return p.fst(); });
  }

  FinRel cup(const FinSet& a) {
    FinRel res(tensor_unit(), tensor(a, a));
    for (std::size_t i = 0; i < a.size(); i++) res.set(0, i * a.size() + i);
    return res;
  }

  FinRel cap(const FinSet& a) { return dagger(cup(a)); }

  FinRel curry(const FinRel& r, const FinSet& c, const FinSet& a) {
    if (!(r.src() == tensor(c, a))) throw CarrierMismatch("curry: source is not C (x) A");
    const FinSet& b = r.dst();
    FinRel res(c, tensor(a, b));
    for (std::size_t ci = 0; ci < c.size(); ci++)
      for (std::size_t ai = 0; ai < a.size(); ai++)
        for (auto bi: r.row(ci * a.size() + ai)) res.set(ci, ai * b.size() + bi);
    return res;
  }

  FinRel uncurry(const FinRel& r, const FinSet& c, const FinSet& a) {
    if (!(r.src() == c)) throw CarrierMismatch("uncurry: source is not C");
    if (a.size() == 0 && r.dst().size() != 0) throw CarrierMismatch("uncurry: target is not A -o B");
    // Recover B from the second components of A (x) B.
    std::vector<Elem> bs;
    std::size_t nb = a.size() ? r.dst().size() / a.size() : 0;
    for (std::size_t bi = 0; bi < nb; bi++) bs.push_back(r.dst()[bi].snd());
    FinSet b(std::move(bs));
    if (!(r.dst() == tensor(a, b))) throw CarrierMismatch("uncurry: target is not A -o B");
    FinRel res(tensor(c, a), b);
    for (std::size_t ci = 0; ci < c.size(); ci++)
      for (auto j: r.row(ci)) res.set(ci * a.size() + j / nb, j % nb);
    return res;
  }

  bool curry_bijection_check(const FinSet& a, const FinSet& b, const FinSet& c) {
    FinSet ca = tensor(c, a), ab = tensor(a, b);
    std::size_t cells = ca.size() * b.size();
    auto from_bits = [](const FinSet& s, const FinSet& t, std::uint64_t bits) {
      FinRel r(s, t);
      for (std::size_t i = 0; i < s.size(); i++)
        for (std::size_t j = 0; j < t.size(); j++)
          if ((bits >> (i * t.size() + j)) & 1u) r.set(i, j);
      return r;
    };
    auto round_trips = [&](std::uint64_t bits) {
      auto r = from_bits(ca, b, bits);
      auto s = from_bits(c, ab, bits);
      return uncurry(curry(r, c, a), c, a) == r && curry(uncurry(s, c, a), c, a) == s;
    };
    if (cells <= 16) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells); bits++)
        if (!round_trips(bits)) return false;
      return true;
    }
    // Large hom-sets: the empty relation and each single-cell relation round
    // trip, and distinct cells stay distinct.
    if (!round_trips(0)) return false;
    std::vector<bool> hit(cells, false);
    for (std::size_t cell = 0; cell < cells; cell++) {
      if (!round_trips(std::uint64_t{1} << cell)) return false;
      auto img = curry(from_bits(ca, b, std::uint64_t{1} << cell), c, a);
      if (img.count() != 1) return false;
      for (std::size_t ci = 0; ci < c.size(); ci++)
        for (auto j: img.row(ci)) {
          if (hit[ci * ab.size() + j]) return false;
          hit[ci * ab.size() + j] = true;
        }
    }
    return true;
  }

  FinRel kappa(const FinSet& c, const FinSet& a, const FinSet& b) {
    return graph(tensor(c, tensor(a, b)), tensor(a, tensor(c, b)), [](const Elem& p) {
      return Elem::pair(p.snd().fst(), Elem::pair(p.fst(), p.snd().snd()));
    });
  }

  // ---- biproducts ----

  FinSet zero_object() { return FinSet(); }

  FinSet coproduct(const FinSet& a, const FinSet& b) {
    std::vector<Elem> xs;
    for (const auto& x: a.elems()) xs.push_back(Elem::left(x));
    for (const auto& y: b.elems()) xs.push_back(Elem::right(y));
    return FinSet(std::move(xs));
  }

  Biproduct biproduct(const FinSet& a, const FinSet& b) {
    FinSet sum = coproduct(a, b);
    auto inl = graph(a, sum, [](const Elem& x) { return Elem::left(x); });
    auto inr = graph(b, sum, [](const Elem& y) { return Elem::right(y); });
    auto outl = dagger(inl), outr = dagger(inr);
    return {sum, std::move(inl), std::move(inr), std::move(outl), std::move(outr)};
  }

  FinRel direct_sum(const FinRel& r, const FinRel& s) {
    FinRel res(coproduct(r.src(), s.src()), coproduct(r.dst(), s.dst()));
    std::size_t rs = r.src().size(), rd = r.dst().size();
    for (std::size_t i = 0; i < rs; i++)
      for (auto j: r.row(i)) res.set(i, j);
    for (std::size_t i = 0; i < s.src().size(); i++)
      for (auto j: s.row(i)) res.set(rs + i, rd + j);
    return res;
  }

  FinRel codiag(const FinSet& a) {
    return graph(coproduct(a, a), a, [](const Elem& x) { return x.payload(); });
  }

  FinRel diag(const FinSet& a) { return dagger(codiag(a)); }

  FinRel zero_in(const FinSet& a) { return FinRel(zero_object(), a); }
  FinRel zero_out(const FinSet& a) { return FinRel(a, zero_object()); }

  // ---- exponential ----

  std::size_t stars_and_bars(std::size_t n, std::size_t k) {
    std::size_t total = 0;
    for (std::size_t j = 0; j <= k; j++) {
      // C(n + j - 1, j)
      if (n == 0) {
        total += j == 0 ? 1 : 0;
        continue;
      }
      std::size_t c = 1;
      for (std::size_t t = 1; t <= j; t++) c = c * (n + t - 1) / t;
      total += c;
    }
    return total;
  }

  BangObject enumerate_bang(const FinSet& a, std::size_t degree, std::optional<std::size_t> max_weight) {
    std::vector<Elem> out;
    std::vector<std::size_t> idx;
    std::function<void(std::size_t, std::size_t, std::size_t)> go = [&](std::size_t start, std::size_t left, std::size_t weight) {
      if (max_weight && weight > *max_weight) return;
      if (left == 0) {
        std::vector<Elem> xs;
        for (auto i: idx) xs.push_back(a[i]);
        out.push_back(Elem::bag(std::move(xs)));
        return;
      }
      for (std::size_t i = start; i < a.size(); i++) {
        idx.push_back(i);
        go(i, left - 1, weight + a[i].weight());
        idx.pop_back();
      }
    };
    for (std::size_t n = 0; n <= degree; n++) go(0, n, 0);
    return {a, degree, max_weight, FinSet(std::move(out))};
  }

  namespace {
    bool is_bag(const Elem& x) { return x.kind() == Elem::Kind::Bag; }
    bool is_pair_of_bags(const Elem& x) {
      return x.kind() == Elem::Kind::Pair && is_bag(x.fst()) && is_bag(x.snd());
    }
  }

  Elem mu_elem(const Elem& s) {
    std::vector<Elem> xs;
    for (const auto& inner: s.kids()) {
      if (!is_bag(inner)) throw DomainError("mu: not a multiset of multisets: " + s.to_string());
      xs.insert(xs.end(), inner.kids().begin(), inner.kids().end());
    }
    return Elem::bag(std::move(xs));
  }

  Elem append_elem(const Elem& xs, const Elem& ys) {
    return bag_of(append(as_multiset(xs), as_multiset(ys)));
  }

  FinRel bang_mult(const FinSet& pairs, const FinSet& bang) {
    return graph(pairs, bang, [](const Elem& p) -> std::optional<Elem> {
      if (!is_pair_of_bags(p)) return std::nullopt;
      return append_elem(p.fst(), p.snd());
    });
  }

  FinRel bang_unit(const FinSet& bang) {
    return graph(tensor_unit(), bang, [](const Elem&) { return Elem::bag(std::vector<Elem>{}); });
  }

  FinRel bang_comult(const FinSet& bang, const FinSet& pairs) {
    return cograph(bang, pairs, [](const Elem& p) -> std::optional<Elem> {
      if (!is_pair_of_bags(p)) return std::nullopt;
      return append_elem(p.fst(), p.snd());
    });
  }

  FinRel bang_counit(const FinSet& bang) {
    return cograph(bang, tensor_unit(), [](const Elem&) { return Elem::bag(std::vector<Elem>{}); });
  }

  FinRel bang_delta(const FinSet& bang, const FinSet& nested) {
    return cograph(bang, nested, [](const Elem& s) -> std::optional<Elem> {
      if (!is_bag(s)) return std::nullopt;
      return mu_elem(s);
    });
  }

  FinRel bang_epsilon(const FinSet& bang, const FinSet& a) {
    return cograph(bang, a, [](const Elem& x) { return Elem::bag(std::vector<Elem>{x}); });
  }

  FinRel bang_eta(const FinSet& a, const FinSet& bang) {
    return graph(a, bang, [](const Elem& x) { return Elem::bag(std::vector<Elem>{x}); });
  }

  FinRel bang_phi(const FinSet& pairs, const FinSet& bang_pairs) {
    return cograph(pairs, bang_pairs, [](const Elem& ps) -> std::optional<Elem> {
      std::vector<Elem> as, bs;
      for (const auto& p: ps.kids()) {
        if (p.kind() != Elem::Kind::Pair) return std::nullopt;
        as.push_back(p.fst());
        bs.push_back(p.snd());
      }
      return Elem::pair(Elem::bag(std::move(as)), Elem::bag(std::move(bs)));
    });
  }

  FinRel bang_phi_unit(const FinSet& bang_unit_obj) {
    return cograph(tensor_unit(), bang_unit_obj, [](const Elem&) { return Elem::unit(); });
  }

  FinRel seely(const FinSet& pairs, const FinSet& bang_sum) {
    return graph(pairs, bang_sum, [](const Elem& p) -> std::optional<Elem> {
      if (!is_pair_of_bags(p)) return std::nullopt;
      std::vector<Elem> xs;
      for (const auto& a: p.fst().kids()) xs.push_back(Elem::left(a));
      for (const auto& b: p.snd().kids()) xs.push_back(Elem::right(b));
      return Elem::bag(std::move(xs));
    });
  }

  FinRel seely_inverse(const FinSet& bang_sum, const FinSet& pairs) {
    return graph(bang_sum, pairs, [](const Elem& xs) -> std::optional<Elem> {
      std::vector<Elem> as, bs;
      for (const auto& x: xs.kids()) {
        if (x.kind() == Elem::Kind::Left) as.push_back(x.payload());
        else if (x.kind() == Elem::Kind::Right) bs.push_back(x.payload());
        else return std::nullopt;
      }
      return Elem::pair(Elem::bag(std::move(as)), Elem::bag(std::move(bs)));
    });
  }

  BangMaps bang_maps(const FinSet& a, std::size_t degree) {
    auto bang = enumerate_bang(a, degree);
    auto bang2 = tensor(bang.elems, bang.elems);
    auto nested = enumerate_bang(bang.elems, degree);
    auto m = bang_mult(bang2, bang.elems);
    auto e = bang_unit(bang.elems);
    auto w = dagger(m);
    auto k = dagger(e);
    auto delta = bang_delta(bang.elems, nested.elems);
    auto epsilon = bang_epsilon(bang.elems, a);
    auto eta_cr = bang_eta(a, bang.elems);
    auto phi_ab = bang_phi(bang2, enumerate_bang(tensor(a, a), degree).elems);
    auto phi_unit = bang_phi_unit(enumerate_bang(tensor_unit(), degree).elems);
    return {std::move(bang), std::move(bang2), std::move(nested), std::move(m), std::move(e), std::move(w),
            std::move(k), std::move(delta), std::move(epsilon), std::move(eta_cr), std::move(phi_ab), std::move(phi_unit)};
  }

  FinRel bang_functor(const FinRel& r, const FinSet& src_bang, const FinSet& dst_bang) {
    FinRel res(src_bang, dst_bang);
    std::size_t widest = 0;
    for (const auto& ys: dst_bang.elems()) widest = std::max(widest, ys.kids().size());
    for (std::size_t i = 0; i < src_bang.size(); i++) {
      const auto& xs = src_bang[i];
      if (!is_bag(xs)) throw CarrierMismatch("bang_functor: source element is not a multiset");
      if (xs.kids().size() > widest) continue;
      // Equal occurrences form runs; targets within a run are chosen in
      // non-decreasing order.
      std::vector<std::pair<std::vector<std::size_t>, std::size_t>> runs;
      for (std::size_t p = 0; p < xs.kids().size(); p++) {
        if (p > 0 && xs.kids()[p] == xs.kids()[p - 1]) {
          runs.back().second++;
          continue;
        }
        runs.emplace_back(r.row(r.src().index(xs.kids()[p])), 1);
      }
      std::vector<Elem> chosen;
      std::function<void(std::size_t, std::size_t, std::size_t)> go = [&](std::size_t run, std::size_t left, std::size_t from) {
        if (run == runs.size()) {
          if (auto j = dst_bang.index_of(Elem::bag(chosen))) res.set(i, *j);
          return;
        }
        if (left == 0) {
          if (run + 1 < runs.size()) go(run + 1, runs[run + 1].second, 0);
          else go(run + 1, 0, 0);
          return;
        }
        const auto& options = runs[run].first;
        for (std::size_t o = from; o < options.size(); o++) {
          chosen.push_back(r.dst()[options[o]]);
          go(run, left - 1, o);
          chosen.pop_back();
        }
      };
      go(0, runs.empty() ? 0 : runs[0].second, 0);
    }
    return res;
  }

  FinRel bang_functor(const FinRel& r, std::size_t degree) {
    return bang_functor(r, enumerate_bang(r.src(), degree).elems, enumerate_bang(r.dst(), degree).elems);
  }

  // ---- monoids ----

  namespace {
    void require_monoid_shape(const RelMonoid& m) {
      std::size_t n = m.carrier.size();
      if (m.mult.src().size() != n * n || !(m.mult.dst() == m.carrier) || m.unit.src().size() != 1 ||
          !(m.unit.dst() == m.carrier))
        throw CarrierMismatch("monoid: structure maps do not match the carrier");
    }
  }

  Subset convolve(const RelMonoid& m, const Subset& p, const Subset& q) {
    std::size_t n = m.carrier.size();
    Subset res(n, false);
    std::vector<std::size_t> qs;
    for (std::size_t z = 0; z < n; z++)
      if (q[z]) qs.push_back(z);
    for (std::size_t y = 0; y < n; y++) {
      if (!p[y]) continue;
      for (auto z: qs)
        for (auto x: m.mult.row(y * n + z)) res[x] = true;
    }
    return res;
  }

  Subset convolution_unit(const RelMonoid& m) {
    Subset res(m.carrier.size(), false);
    for (auto x: m.unit.row(0)) res[x] = true;
    return res;
  }

  // Each relational equation read cell by cell on point inputs.
  MonoidLaws monoid_laws(const RelMonoid& m) {
    require_monoid_shape(m);
    std::size_t n = m.carrier.size();
    MonoidLaws res{true, true, true, true};
    std::vector<std::vector<std::size_t>> prod(n * n);
    for (std::size_t i = 0; i < n * n; i++) prod[i] = m.mult.row(i);
    auto unit = m.unit.row(0);
    auto times = [&](const std::vector<std::size_t>& p, const std::vector<std::size_t>& q) {
      std::vector<std::size_t> out;
      for (auto y: p)
        for (auto z: q) out.insert(out.end(), prod[y * n + z].begin(), prod[y * n + z].end());
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    };
    for (std::size_t x = 0; x < n; x++) {
      std::vector<std::size_t> px{x};
      if (times(unit, px) != px) res.left_unit = false;
      if (times(px, unit) != px) res.right_unit = false;
      for (std::size_t y = 0; y < n; y++) {
        if (prod[x * n + y] != prod[y * n + x]) res.commutative = false;
        for (std::size_t z = 0; z < n && res.assoc; z++) {
          std::vector<std::size_t> pz{z};
          if (times(prod[x * n + y], pz) != times(px, prod[y * n + z])) res.assoc = false;
        }
      }
    }
    return res;
  }

  RelMonoid dual(const RelComonoid& c) { return {c.carrier, dagger(c.comult), dagger(c.counit)}; }
  RelComonoid dual(const RelMonoid& m) { return {m.carrier, dagger(m.mult), dagger(m.unit)}; }

  MonoidLaws comonoid_laws(const RelComonoid& c) { return monoid_laws(dual(c)); }

  RelMonoid from_cmon(const cmon::FinCMon& m) {
    FinSet carrier = FinSet::of_names(m.carrier);
    auto mult = graph(tensor(carrier, carrier), carrier, [&](const Elem& p) {
      auto x = carrier.index(p.fst()), y = carrier.index(p.snd());
      return carrier[m.mul(x, y)];
    });
    auto unit = graph(tensor_unit(), carrier, [&](const Elem&) { return carrier[m.unit]; });
    return {carrier, std::move(mult), std::move(unit)};
  }

  RelComonoid set_comonoid(const FinSet& a) {
    return {a, graph(a, tensor(a, a), [](const Elem& x) { return Elem::pair(x, x); }),
            graph(a, tensor_unit(), [](const Elem&) { return Elem::unit(); })};
  }

  RelComonoid bang_comonoid(const FinSet& bang) {
    return {bang, bang_comult(bang, tensor(bang, bang)), bang_counit(bang)};
  }

  RelComonoid tensor_comonoid(const RelComonoid& c1, const RelComonoid& c2) {
    FinSet carrier = tensor(c1.carrier, c2.carrier);
    auto split = tensor(c1.comult, c2.comult);
    auto shuffle = graph(split.dst(), tensor(carrier, carrier), [](const Elem& p) {
      const auto& x = p.fst();
      const auto& y = p.snd();
      return Elem::pair(Elem::pair(x.fst(), y.fst()), Elem::pair(x.snd(), y.snd()));
    });
    auto drop = rel_compose(left_unitor(tensor_unit()), tensor(c1.counit, c2.counit));
    return {carrier, rel_compose(shuffle, split), std::move(drop)};
  }

  cmon::FinCMon convolution_monoid(const RelMonoid& m) {
    std::size_t n = m.carrier.size();
    if (n > 8) throw CostGuardExceeded("convolution_monoid: carrier larger than 8");
    auto laws = monoid_laws(m);
    if (!laws.monoid() || !laws.commutative) throw LawViolation("convolution_monoid: not a commutative monoid in Rel");
    std::size_t count = std::size_t{1} << n;
    auto to_subset = [&](std::size_t mask) {
      Subset s(n);
      for (std::size_t i = 0; i < n; i++) s[i] = (mask >> i) & 1u;
      return s;
    };
    auto to_mask = [&](const Subset& s) {
      std::size_t mask = 0;
      for (std::size_t i = 0; i < n; i++)
        if (s[i]) mask |= std::size_t{1} << i;
      return mask;
    };
    cmon::FinCMon res;
    for (std::size_t mask = 0; mask < count; mask++) {
      std::string name = "{";
      bool first = true;
      for (std::size_t i = 0; i < n; i++)
        if ((mask >> i) & 1u) {
          name += (first ? "" : ",") + m.carrier[i].to_string();
          first = false;
        }
      res.carrier.push_back(name + "}");
    }
    res.unit = to_mask(convolution_unit(m));
    res.table.assign(count, std::vector<std::size_t>(count));
    for (std::size_t p = 0; p < count; p++)
      for (std::size_t q = 0; q < count; q++) res.table[p][q] = to_mask(convolve(m, to_subset(p), to_subset(q)));
    return res;
  }

  FinRel rel_hom_extend(const FinRel& f, const RelMonoid& m, const FinSet& bang) {
    if (!(f.dst() == m.carrier)) throw CarrierMismatch("rel_hom_extend: f does not land in the monoid carrier");
    if (!monoid_laws(m).monoid()) throw LawViolation("rel_hom_extend: not a monoid in Rel");
    std::size_t n = m.carrier.size();
    std::vector<Subset> images(f.src().size(), Subset(n, false));
    for (std::size_t a = 0; a < f.src().size(); a++)
      for (auto x: f.row(a)) images[a][x] = true;
    FinRel res(bang, m.carrier);
    auto unit = convolution_unit(m);
    for (std::size_t i = 0; i < bang.size(); i++) {
      if (!is_bag(bang[i])) throw CarrierMismatch("rel_hom_extend: source element is not a multiset");
      Subset acc = unit;
      for (const auto& a: bang[i].kids()) acc = convolve(m, acc, images[f.src().index(a)]);
      for (std::size_t x = 0; x < n; x++)
        if (acc[x]) res.set(i, x);
    }
    return res;
  }

  FinRel coextend(const FinRel& r, const RelComonoid& c, const FinSet& bang) {
    if (!(r.src() == c.carrier)) throw CarrierMismatch("coextend: r does not start at the comonoid carrier");
    return dagger(rel_hom_extend(dagger(r), dual(c), bang));
  }

  std::string elem_name(const FinSet& s, std::size_t i) { return s[i].to_string(); }

}
