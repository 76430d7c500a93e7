#pragma once

// Finite commutative monoids given by tables, homomorphic extension along the
// generators, and executable checks of the free-monoid universal property on
// degree-bounded fragments.

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fcm/multiset.hpp"

namespace fcm::cmon {

  struct FinCMon {
    std::vector<std::string> carrier;
    std::size_t unit = 0;
    std::vector<std::vector<std::size_t>> table;

    std::size_t size() const noexcept { return carrier.size(); }
    std::size_t mul(std::size_t x, std::size_t y) const { return table.at(x).at(y); }
  };

  using GeneratorMap = std::map<Symbol, std::size_t>;
  using Hom = std::function<std::size_t(const SymbolMultiset&)>;

  bool validate_cmon(const FinCMon& m);

  // The unique homomorphism M(A) -> M agreeing with `f` on singletons.
  // Folds left to right over the canonical sequence starting at the unit.
  class HomExtension {
  public:
    HomExtension(GeneratorMap f, FinCMon m);
    std::size_t operator()(const SymbolMultiset& xs) const;
    const FinCMon& monoid() const noexcept { return m_; }

  private:
    GeneratorMap f_;
    FinCMon m_;
  };

  // Throws LawViolation when `m` is not a commutative monoid.
  HomExtension hom_extend(GeneratorMap f, FinCMon m);

  bool universal_check(const std::vector<Symbol>& alphabet, const FinCMon& m, const GeneratorMap& f, std::size_t k);

  // Same check against a caller-supplied candidate for the extension.
  bool universal_check(const std::vector<Symbol>& alphabet, const FinCMon& m, const GeneratorMap& f, std::size_t k,
                       const Hom& candidate);

  // length : M(1) -> N is bijective on sizes <= k, and extend(snd) . strength_l
  // multiplies lengths with unit [*].
  bool nat_structure_check(std::size_t k);

  // Every generator map `alphabet -> m.carrier`.
  std::vector<GeneratorMap> all_generator_maps(const std::vector<Symbol>& alphabet, const FinCMon& m);

  // Every commutative monoid table on {0..n-1} with unit 0.
  std::vector<FinCMon> enumerate_cmons(std::size_t n);

  FinCMon trivial();
  FinCMon cyclic(std::size_t n);     // (Z/n, +, 0)
  FinCMon or_monoid();               // ({0,1}, or, 0)
  FinCMon min_monoid(std::size_t n); // ({0..n-1}, min, n-1)

  // Text format: carrier names on the first line, the unit name on the second,
  // then one row of product names per carrier element. Blank lines and lines
  // starting with '#' are skipped.
  FinCMon parse_fincmon(std::string_view text);
  std::string to_text(const FinCMon& m);

}
