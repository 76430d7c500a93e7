#include "doctest.h"

#include "fcm/cmon.hpp"
#include "fcm/literal.hpp"

using namespace fcm;
using namespace fcm::cmon;

namespace {
  const std::vector<Symbol> ab = symlist({"a", "b"});

  // Tables on {0,1,2} with unit 0, checked cell by cell.
  std::size_t brute_force_cmons3() {
    std::size_t count = 0;
    for (std::size_t code = 0; code < 27; code++) {
      std::size_t t[3][3] = {{0, 1, 2}, {1, 0, 0}, {2, 0, 0}};
      t[1][1] = code % 3;
      t[1][2] = t[2][1] = code / 3 % 3;
      t[2][2] = code / 9;
      bool ok = true;
      for (int x = 0; x < 3; x++)
        for (int y = 0; y < 3; y++)
          for (int z = 0; z < 3; z++) ok = ok && t[x][t[y][z]] == t[t[x][y]][z];
      count += ok;
    }
    return count;
  }
}

TEST_CASE("fixtures are commutative monoids") {
  CHECK(validate_cmon(trivial()));
  CHECK(validate_cmon(cyclic(2)));
  CHECK(validate_cmon(cyclic(3)));
  CHECK(validate_cmon(or_monoid()));
  CHECK(validate_cmon(min_monoid(3)));
  auto bad = cyclic(3);
  bad.table[1][2] = 1;
  CHECK_FALSE(validate_cmon(bad));
}

TEST_CASE("enumerate_cmons agrees with brute force") {
  CHECK(enumerate_cmons(1).size() == 1);
  CHECK(enumerate_cmons(2).size() == 2);
  CHECK(enumerate_cmons(3).size() == brute_force_cmons3());
  CHECK(enumerate_cmons(3).size() == 9);
}

TEST_CASE("hom_extend folds the generator images") {
  auto h = hom_extend({{"a"_sym, 1}, {"b"_sym, 2}}, cyclic(3));
  CHECK(h(literal::parse<SymbolMultiset>("[]")) == 0);
  CHECK(h(literal::parse<SymbolMultiset>("[a,a,b]")) == 1);
  CHECK(h(literal::parse<SymbolMultiset>("[a,b,b,b]")) == 1);
  CHECK_THROWS_AS(hom_extend({{"a"_sym, 0}}, [] { auto m = cyclic(2); m.table[1][1] = 1; m.table[0][1] = 0; return m; }()),
                  LawViolation);
  CHECK_THROWS_AS(h(literal::parse<SymbolMultiset>("[c]")), DomainError);
}

TEST_CASE("universal property") {
  for (const auto& f: all_generator_maps(ab, min_monoid(3))) CHECK(universal_check(ab, min_monoid(3), f, 4));
  CHECK(all_generator_maps(ab, cyclic(3)).size() == 9);
  GeneratorMap f{{"a"_sym, 1}, {"b"_sym, 0}};
  CHECK_FALSE(universal_check(ab, cyclic(2), f, 4, [](const SymbolMultiset&) { return std::size_t{0}; }));
  CHECK_FALSE(universal_check(ab, cyclic(2), f, 4, [](const SymbolMultiset& xs) { return xs.length() % 2; }));
  CHECK(universal_check(ab, cyclic(2), f, 4, [](const SymbolMultiset& xs) { return xs.count("a"_sym) % 2; }));
}

TEST_CASE("natural numbers as multisets over one point") {
  CHECK(nat_structure_check(5));
}

TEST_CASE("monoid text format") {
  auto m = parse_fincmon("# or\nf t\nf\nf t\nt t\n");
  CHECK(validate_cmon(m));
  CHECK(m.mul(1, 1) == 1);
  CHECK(to_text(m) == "f t\nf\nf t\nt t\n");
  CHECK_THROWS_AS(parse_fincmon("f t\n"), ParseError);
  CHECK_THROWS_AS(parse_fincmon("f t\nf\nf x\nt t\n"), ParseError);
}

TEST_CASE("extension is independent of fold order") {
  auto m = cyclic(3);
  auto h = hom_extend({{"a"_sym, 1}, {"b"_sym, 2}}, m);
  for (const auto& xs: enumerate_multisets(ab, 4)) {
    auto raw = xs.elems();
    do {
      std::size_t acc = m.unit;
      for (const auto& s: raw) acc = m.mul(acc, s == "a"_sym ? 1 : 2);
      CHECK(acc == h(xs));
    } while (std::next_permutation(raw.begin(), raw.end()));
  }
}
