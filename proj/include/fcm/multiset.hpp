#pragma once

// Canonical finite multisets: the free commutative monoid on an ordered carrier.

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <iterator>
#include <optional>
#include <utility>
#include <vector>

#include "fcm/symbol.hpp"

namespace fcm {

  template <std::totally_ordered T>
  class Multiset {
  public:
    using value_type = T;

    Multiset() = default;

    static Multiset from_list(std::vector<T> xs) {
      std::sort(xs.begin(), xs.end());
      return Multiset(std::move(xs));
    }

    // Pre: `xs` is sorted non-decreasingly.
    static Multiset from_sorted(std::vector<T> xs) { return Multiset(std::move(xs)); }

    static Multiset empty() { return Multiset(); }
    static Multiset singleton(T a) { return Multiset(std::vector<T>{std::move(a)}); }

    const std::vector<T>& elems() const noexcept { return elems_; }
    std::size_t length() const noexcept { return elems_.size(); }
    bool is_empty() const noexcept { return elems_.empty(); }

    std::optional<T> is_singleton() const {
      if (elems_.size() != 1) return std::nullopt;
      return elems_.front();
    }

    std::size_t count(const T& a) const {
      auto [lo, hi] = std::equal_range(elems_.begin(), elems_.end(), a);
      return static_cast<std::size_t>(hi - lo);
    }

    auto begin() const noexcept { return elems_.begin(); }
    auto end() const noexcept { return elems_.end(); }

    friend bool operator==(const Multiset&, const Multiset&) = default;
    friend auto operator<=>(const Multiset& a, const Multiset& b) {
      return std::lexicographical_compare_three_way(a.elems_.begin(), a.elems_.end(),
                                                    b.elems_.begin(), b.elems_.end());
    }

  private:
    explicit Multiset(std::vector<T> sorted): elems_(std::move(sorted)) {}
    std::vector<T> elems_;
  };

  template <class A, class B>
  struct Pair {
    A fst;
    B snd;
    friend auto operator<=>(const Pair&, const Pair&) = default;
    friend bool operator==(const Pair&, const Pair&) = default;
  };

  enum class Side { Left, Right };

  template <class T>
  struct Tagged {
    Side side;
    T payload;
    friend auto operator<=>(const Tagged&, const Tagged&) = default;
    friend bool operator==(const Tagged&, const Tagged&) = default;
  };

  using SymbolMultiset = Multiset<Symbol>;
  using PairSymbol = Pair<Symbol, Symbol>;
  using TaggedSymbol = Tagged<Symbol>;

  template <class T>
  Multiset<T> append(const Multiset<T>& xs, const Multiset<T>& ys) {
    std::vector<T> res;
    res.reserve(xs.length() + ys.length());
    std::merge(xs.begin(), xs.end(), ys.begin(), ys.end(), std::back_inserter(res));
    return Multiset<T>::from_sorted(std::move(res));
  }

  template <class T, class F>
  auto mmap(F&& f, const Multiset<T>& xs) {
    using U = std::decay_t<std::invoke_result_t<F&, const T&>>;
    std::vector<U> res;
    res.reserve(xs.length());
    for (const T& x: xs) res.push_back(std::invoke(f, x));
    return Multiset<U>::from_list(std::move(res));
  }

  template <class T>
  Multiset<Multiset<T>> eta(Multiset<T> xs) { return Multiset<Multiset<T>>::singleton(std::move(xs)); }

  template <class T>
  Multiset<T> mu(const Multiset<Multiset<T>>& xss) {
    std::vector<T> res;
    for (const auto& xs: xss) res.insert(res.end(), xs.begin(), xs.end());
    return Multiset<T>::from_list(std::move(res));
  }

  // Kleisli extension: mu . mmap(f).
  template <class T, class F>
  auto extend(F&& f, const Multiset<T>& xs) { return mu(mmap(std::forward<F>(f), xs)); }

  template <class A, class B>
  Multiset<Pair<A, B>> strength_l(const Multiset<A>& xs, const B& b) {
    return mmap([&](const A& a) { return Pair<A, B>{a, b}; }, xs);
  }

  template <class A, class B>
  Multiset<Pair<A, B>> strength_r(const A& a, const Multiset<B>& ys) {
    return mmap([&](const B& b) { return Pair<A, B>{a, b}; }, ys);
  }

  template <class A, class B>
  Multiset<Pair<A, B>> bilinear_pair(const Multiset<A>& xs, const Multiset<B>& ys) {
    std::vector<Pair<A, B>> res;
    res.reserve(xs.length() * ys.length());
    for (const A& x: xs)
      for (const B& y: ys) res.push_back({x, y});
    return Multiset<Pair<A, B>>::from_list(std::move(res));
  }

  template <class T>
  std::pair<Multiset<T>, Multiset<T>> seely_split(const Multiset<Tagged<T>>& xs) {
    std::vector<T> ls, rs;
    for (const auto& x: xs) (x.side == Side::Left ? ls : rs).push_back(x.payload);
    return {Multiset<T>::from_list(std::move(ls)), Multiset<T>::from_list(std::move(rs))};
  }

  template <class T>
  Multiset<Tagged<T>> seely_merge(const Multiset<T>& as, const Multiset<T>& bs) {
    std::vector<Tagged<T>> res;
    res.reserve(as.length() + bs.length());
    for (const T& a: as) res.push_back({Side::Left, a});
    for (const T& b: bs) res.push_back({Side::Right, b});
    return Multiset<Tagged<T>>::from_sorted(std::move(res));
  }

  // True iff as ++ bs is empty, in which case both are.
  template <class T>
  bool conical_split(const Multiset<T>& as, const Multiset<T>& bs) {
    return as.is_empty() && bs.is_empty();
  }

  enum class SplitSide { LeftHolds, RightHolds };

  template <class T>
  std::optional<SplitSide> singleton_append_split(const Multiset<T>& as, const Multiset<T>& bs, const T& a) {
    if (as.length() + bs.length() != 1) return std::nullopt;
    if (as.is_singleton() == a) return SplitSide::LeftHolds;
    if (bs.is_singleton() == a) return SplitSide::RightHolds;
    return std::nullopt;
  }

  // When mu(s) = [a], the unique t with [a] :: t = s; every block of t is empty.
  template <class T>
  std::optional<Multiset<Multiset<T>>> singleton_mu_witness(const Multiset<Multiset<T>>& s, const T& a) {
    if (mu(s) != Multiset<T>::singleton(a)) return std::nullopt;
    std::vector<Multiset<T>> rest = s.elems();
    auto it = std::find(rest.begin(), rest.end(), Multiset<T>::singleton(a));
    rest.erase(it);
    return Multiset<Multiset<T>>::from_sorted(std::move(rest));
  }

  template <class A, class B>
  std::optional<B> singleton_proj_witness(const Multiset<Pair<A, B>>& t, const A& a) {
    auto p = t.is_singleton();
    if (!p || p->fst != a) return std::nullopt;
    return p->snd;
  }

  template <class T>
  struct RefinementSquare {
    Multiset<T> xs1, xs2, ys1, ys2;
    friend bool operator==(const RefinementSquare&, const RefinementSquare&) = default;
  };

  namespace detail {
    template <class T>
    Multiset<T> meet(const Multiset<T>& xs, const Multiset<T>& ys) {
      std::vector<T> res;
      std::set_intersection(xs.begin(), xs.end(), ys.begin(), ys.end(), std::back_inserter(res));
      return Multiset<T>::from_sorted(std::move(res));
    }

    // Truncated difference: multiplicities max(0, xs(e) - ys(e)).
    template <class T>
    Multiset<T> minus(const Multiset<T>& xs, const Multiset<T>& ys) {
      std::vector<T> res;
      std::set_difference(xs.begin(), xs.end(), ys.begin(), ys.end(), std::back_inserter(res));
      return Multiset<T>::from_sorted(std::move(res));
    }
  }

  // Per symbol: xs1 = min(as, cs), xs2 = as - xs1, ys1 = cs - xs1, ys2 = bs - ys1.
  template <class T>
  std::optional<RefinementSquare<T>> refine(const Multiset<T>& as, const Multiset<T>& bs,
                                            const Multiset<T>& cs, const Multiset<T>& ds) {
    if (append(as, bs) != append(cs, ds)) return std::nullopt;
    auto xs1 = detail::meet(as, cs);
    auto xs2 = detail::minus(as, xs1);
    auto ys1 = detail::minus(cs, xs1);
    auto ys2 = detail::minus(bs, ys1);
    return RefinementSquare<T>{std::move(xs1), std::move(xs2), std::move(ys1), std::move(ys2)};
  }

  template <class T>
  bool square_holds(const RefinementSquare<T>& sq, const Multiset<T>& as, const Multiset<T>& bs,
                    const Multiset<T>& cs, const Multiset<T>& ds) {
    return append(sq.xs1, sq.xs2) == as && append(sq.ys1, sq.ys2) == bs &&
           append(sq.xs1, sq.ys1) == cs && append(sq.xs2, sq.ys2) == ds;
  }

  // All multisets over `alphabet` (assumed sorted and distinct) with length <= k,
  // in graded-lexicographic order of alphabet positions.
  template <class T>
  std::vector<Multiset<T>> enumerate_multisets(const std::vector<T>& alphabet, std::size_t k) {
    std::vector<Multiset<T>> res;
    std::vector<std::size_t> idx;
    std::function<void(std::size_t, std::size_t)> go = [&](std::size_t start, std::size_t left) {
      if (left == 0) {
        std::vector<T> xs;
        xs.reserve(idx.size());
        for (auto i: idx) xs.push_back(alphabet[i]);
        res.push_back(Multiset<T>::from_list(std::move(xs)));
        return;
      }
      for (std::size_t i = start; i < alphabet.size(); i++) {
        idx.push_back(i);
        go(i, left - 1);
        idx.pop_back();
      }
    };
    for (std::size_t n = 0; n <= k; n++) go(0, n);
    return res;
  }

}
