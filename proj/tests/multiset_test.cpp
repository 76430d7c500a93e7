#include "doctest.h"

#include "fcm/literal.hpp"
#include "fcm/multiset.hpp"

using namespace fcm;
using literal::parse;
using M = SymbolMultiset;

namespace {
  M ms(const char* text) { return parse<M>(text); }
}

TEST_CASE("multisets are canonical") {
  CHECK(M::from_list(symlist({"b", "a", "b"})) == M::from_list(symlist({"b", "b", "a"})));
  CHECK(ms("[b,a,b]").elems() == symlist({"a", "b", "b"}));
  CHECK(ms("[b,a,b]").count("b"_sym) == 2);
  CHECK(ms("[]").is_empty());
  CHECK(ms("[a]").is_singleton() == "a"_sym);
  CHECK_FALSE(ms("[a,a]").is_singleton());
}

TEST_CASE("append is a commutative monoid operation") {
  auto xs = ms("[a,b]"), ys = ms("[b]"), zs = ms("[a,a]");
  CHECK(append(xs, ys) == append(ys, xs));
  CHECK(append(append(xs, ys), zs) == append(xs, append(ys, zs)));
  CHECK(append(xs, M{}) == xs);
  CHECK(append(xs, zs) == ms("[a,a,a,b]"));
}

TEST_CASE("monad structure") {
  auto xss = parse<Multiset<M>>("[[a,b],[],[a]]");
  CHECK(mu(xss) == ms("[a,a,b]"));
  CHECK(mu(eta(ms("[a,b]"))) == ms("[a,b]"));
  auto dup = [](const Symbol& s) { return M::from_list({s, s}); };
  CHECK(extend(dup, ms("[a,b]")) == ms("[a,a,b,b]"));
  CHECK(mmap([](const Symbol&) { return "c"_sym; }, ms("[a,b]")) == ms("[c,c]"));
}

TEST_CASE("strength and bilinear pairing") {
  CHECK(literal::to_string(strength_l(ms("[a,b]"), "c"_sym)) == "[(a,c),(b,c)]");
  CHECK(literal::to_string(strength_r("c"_sym, ms("[b,a]"))) == "[(c,a),(c,b)]");
  auto p = bilinear_pair(ms("[a,b]"), ms("[a,a]"));
  CHECK(p.length() == 4);
  CHECK(literal::to_string(p) == "[(a,a),(a,a),(b,a),(b,a)]");
  CHECK(bilinear_pair(ms("[a]"), M{}).is_empty());
}

TEST_CASE("seely split and merge are inverse") {
  auto t = parse<Multiset<TaggedSymbol>>("[R:a,L:b,L:a]");
  auto [l, r] = seely_split(t);
  CHECK(l == ms("[a,b]"));
  CHECK(r == ms("[a]"));
  CHECK(seely_merge(l, r) == t);
}

TEST_CASE("conical and subsingleton witnesses") {
  CHECK(conical_split(M{}, M{}));
  CHECK_FALSE(conical_split(ms("[a]"), M{}));
  CHECK(singleton_append_split(ms("[a]"), M{}, "a"_sym) == SplitSide::LeftHolds);
  CHECK(singleton_append_split(M{}, ms("[a]"), "a"_sym) == SplitSide::RightHolds);
  CHECK_FALSE(singleton_append_split(ms("[a]"), ms("[a]"), "a"_sym));
  CHECK_FALSE(singleton_append_split(ms("[b]"), M{}, "a"_sym));

  auto s = parse<Multiset<M>>("[[],[a],[]]");
  auto rest = singleton_mu_witness(s, "a"_sym);
  REQUIRE(rest);
  CHECK(*rest == parse<Multiset<M>>("[[],[]]"));
  CHECK_FALSE(singleton_mu_witness(parse<Multiset<M>>("[[a],[a]]"), "a"_sym));

  auto t = parse<Multiset<PairSymbol>>("[(a,b)]");
  CHECK(singleton_proj_witness(t, "a"_sym) == "b"_sym);
  CHECK_FALSE(singleton_proj_witness(t, "b"_sym));
}

TEST_CASE("refine") {
  auto as = ms("[a,a,b]"), bs = ms("[b]"), cs = ms("[a,b]"), ds = ms("[a,b]");
  auto sq = refine(as, bs, cs, ds);
  REQUIRE(sq);
  CHECK(sq->xs1 == ms("[a,b]"));
  CHECK(sq->xs2 == ms("[a]"));
  CHECK(sq->ys1 == M{});
  CHECK(sq->ys2 == ms("[b]"));
  CHECK(square_holds(*sq, as, bs, cs, ds));
  CHECK_FALSE(refine(ms("[a]"), M{}, ms("[b]"), M{}));
}

TEST_CASE("enumerate_multisets") {
  auto all = enumerate_multisets(symlist({"a", "b"}), 3);
  CHECK(all.size() == 10);
  CHECK(all.front().is_empty());
  CHECK(all[1] == ms("[a]"));
  CHECK(all.back() == ms("[b,b,b]"));
  CHECK(enumerate_multisets(symlist({"a", "b", "c"}), 4).size() == 35);
}

TEST_CASE("canonical form ignores order") {
  for (std::size_t n = 0; n <= 5; n++) {
    SymList xs;
    for (std::size_t i = 0; i < n; i++) xs.emplace_back(std::string(1, char('a' + (i * 7) % 3)));
    auto canon = M::from_list(xs);
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; i++) idx[i] = i;
    do {
      SymList ys;
      for (auto i: idx) ys.push_back(xs[i]);
      CHECK(M::from_list(ys) == canon);
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
}

TEST_CASE("refine matches an exhaustive square search") {
  auto as = ms("[a,b]"), bs = ms("[c]"), cs = ms("[a]"), ds = ms("[b,c]");
  auto subs = enumerate_multisets(symlist({"a", "b", "c"}), 2);
  std::vector<RefinementSquare<Symbol>> found;
  for (const auto& x1: subs)
    for (const auto& x2: subs)
      for (const auto& y1: subs)
        for (const auto& y2: subs) {
          RefinementSquare<Symbol> sq{x1, x2, y1, y2};
          if (square_holds(sq, as, bs, cs, ds)) found.push_back(sq);
        }
  REQUIRE(found.size() == 1);
  CHECK(refine(as, bs, cs, ds) == found.front());
  CHECK(found.front() == RefinementSquare<Symbol>{ms("[a]"), ms("[b]"), M{}, ms("[c]")});
  CHECK(refine(ms("[a]"), M{}, ms("[a]"), M{}) == RefinementSquare<Symbol>{ms("[a]"), M{}, M{}, M{}});
}

TEST_CASE("singleton witness examples") {
  CHECK(singleton_mu_witness(parse<Multiset<M>>("[[a]]"), "a"_sym) == Multiset<M>{});
  CHECK_FALSE(singleton_mu_witness(parse<Multiset<M>>("[[a,b]]"), "a"_sym));
  CHECK_FALSE(singleton_proj_witness(parse<Multiset<PairSymbol>>("[(a,b),(a,c)]"), "a"_sym));
  CHECK(bilinear_pair(ms("[a]"), ms("[b,c]")) == parse<Multiset<PairSymbol>>("[(a,b),(a,c)]"));
}

TEST_CASE("functor and size") {
  auto up = [](const Symbol& s) { return s == "a"_sym ? "b"_sym : "c"_sym; };
  auto down = [](const Symbol& s) { return s == "c"_sym ? "a"_sym : s; };
  for (const auto& xs: enumerate_multisets(symlist({"a", "b"}), 4)) {
    CHECK(mmap([&](const Symbol& s) { return down(up(s)); }, xs) == mmap(down, mmap(up, xs)));
    CHECK(xs.is_empty() == (xs.length() == 0));
    for (const auto& ys: enumerate_multisets(symlist({"a", "b"}), 2))
      CHECK(append(xs, ys).length() == xs.length() + ys.length());
  }
  CHECK(bilinear_pair(ms("[a,a]"), ms("[b]")) == parse<Multiset<PairSymbol>>("[(a,b),(a,b)]"));
  CHECK(M::singleton("a"_sym) != M::singleton("b"_sym));
}
