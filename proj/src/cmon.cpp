#include "fcm/cmon.hpp"

#include <sstream>

#include "fcm/error.hpp"

namespace fcm::cmon {

  bool validate_cmon(const FinCMon& m) {
    std::size_t n = m.size();
    if (n == 0 || m.unit >= n || m.table.size() != n) return false;
    for (const auto& row: m.table) {
      if (row.size() != n) return false;
      for (auto x: row)
        if (x >= n) return false;
    }
    for (std::size_t x = 0; x < n; x++) {
      if (m.mul(x, m.unit) != x || m.mul(m.unit, x) != x) return false;
      for (std::size_t y = 0; y < n; y++) {
        if (m.mul(x, y) != m.mul(y, x)) return false;
        for (std::size_t z = 0; z < n; z++)
          if (m.mul(x, m.mul(y, z)) != m.mul(m.mul(x, y), z)) return false;
      }
    }
    return true;
  }

  HomExtension::HomExtension(GeneratorMap f, FinCMon m): f_(std::move(f)), m_(std::move(m)) {
    if (!validate_cmon(m_)) throw LawViolation("hom_extend: target is not a commutative monoid");
    for (const auto& [a, x]: f_)
      if (x >= m_.size()) throw DomainError("hom_extend: generator '" + a.text() + "' maps outside the carrier");
  }

  std::size_t HomExtension::operator()(const SymbolMultiset& xs) const {
    std::size_t acc = m_.unit;
    for (const auto& a: xs) {
      auto it = f_.find(a);
      if (it == f_.end()) throw DomainError("hom_extend: symbol '" + a.text() + "' outside the generator map");
      acc = m_.mul(acc, it->second);
    }
    return acc;
  }

  HomExtension hom_extend(GeneratorMap f, FinCMon m) { return HomExtension(std::move(f), std::move(m)); }

  bool universal_check(const std::vector<Symbol>& alphabet, const FinCMon& m, const GeneratorMap& f, std::size_t k,
                       const Hom& candidate) {
    auto frag = enumerate_multisets(alphabet, k);
    // (a) homomorphism on the fragment
    if (candidate(SymbolMultiset::empty()) != m.unit) return false;
    for (const auto& xs: frag)
      for (const auto& ys: frag)
        if (candidate(append(xs, ys)) != m.mul(candidate(xs), candidate(ys))) return false;
    // (b) restriction along the generators is f
    GeneratorMap restricted;
    for (const auto& a: alphabet) {
      auto it = f.find(a);
      if (it == f.end()) return false;
      std::size_t x = candidate(SymbolMultiset::singleton(a));
      if (x != it->second) return false;
      restricted.emplace(a, x);
    }
    // (c) re-extending the restriction gives back the candidate
    auto again = hom_extend(std::move(restricted), m);
    for (const auto& xs: frag)
      if (again(xs) != candidate(xs)) return false;
    return true;
  }

  bool universal_check(const std::vector<Symbol>& alphabet, const FinCMon& m, const GeneratorMap& f, std::size_t k) {
    if (!validate_cmon(m)) return false;
    auto h = hom_extend(f, m);
    return universal_check(alphabet, m, f, k, [&](const SymbolMultiset& xs) { return h(xs); });
  }

  bool nat_structure_check(std::size_t k) {
    const Symbol star("*");
    auto frag = enumerate_multisets(std::vector<Symbol>{star}, k);
    // length is a bijection between the fragment and {0..k}
    std::vector<bool> hit(k + 1, false);
    for (const auto& xs: frag) {
      if (xs.length() > k || hit[xs.length()]) return false;
      hit[xs.length()] = true;
    }
    for (bool b: hit)
      if (!b) return false;

    auto times = [](const SymbolMultiset& xs, const SymbolMultiset& ys) {
      return extend([](const Pair<Symbol, SymbolMultiset>& p) { return p.snd; }, strength_l(xs, ys));
    };
    auto one = SymbolMultiset::singleton(star);
    for (const auto& xs: frag) {
      if (times(one, xs) != xs || times(xs, one) != xs) return false;
      for (const auto& ys: frag) {
        auto p = times(xs, ys);
        if (p.length() != xs.length() * ys.length()) return false;
        if (p != times(ys, xs)) return false;
      }
    }
    return true;
  }

  std::vector<GeneratorMap> all_generator_maps(const std::vector<Symbol>& alphabet, const FinCMon& m) {
    std::vector<GeneratorMap> res;
    std::vector<std::size_t> digits(alphabet.size(), 0);
    while (true) {
      GeneratorMap f;
      for (std::size_t i = 0; i < alphabet.size(); i++) f.emplace(alphabet[i], digits[i]);
      res.push_back(std::move(f));
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == m.size()) digits[i++] = 0;
      if (i == digits.size()) break;
    }
    return res;
  }

  std::vector<FinCMon> enumerate_cmons(std::size_t n) {
    std::vector<FinCMon> res;
    if (n == 0) return res;
    FinCMon m;
    for (std::size_t i = 0; i < n; i++) m.carrier.push_back(std::to_string(i));
    m.unit = 0;
    m.table.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < n; i++) m.table[0][i] = m.table[i][0] = i;

    // Free cells: the upper triangle of the non-unit block.
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 1; i < n; i++)
      for (std::size_t j = i; j < n; j++) cells.emplace_back(i, j);
    std::vector<std::size_t> digits(cells.size(), 0);
    while (true) {
      for (std::size_t c = 0; c < cells.size(); c++) {
        auto [i, j] = cells[c];
        m.table[i][j] = m.table[j][i] = digits[c];
      }
      if (validate_cmon(m)) res.push_back(m);
      std::size_t c = 0;
      while (c < digits.size() && ++digits[c] == n) digits[c++] = 0;
      if (c == digits.size()) break;
    }
    return res;
  }

  namespace {
    FinCMon from_op(std::size_t n, std::size_t unit, const std::function<std::size_t(std::size_t, std::size_t)>& op) {
      FinCMon m;
      for (std::size_t i = 0; i < n; i++) m.carrier.push_back(std::to_string(i));
      m.unit = unit;
      m.table.assign(n, std::vector<std::size_t>(n));
      for (std::size_t i = 0; i < n; i++)
        for (std::size_t j = 0; j < n; j++) m.table[i][j] = op(i, j);
      return m;
    }
  }

  FinCMon trivial() { return from_op(1, 0, [](auto, auto) { return std::size_t{0}; }); }
  FinCMon cyclic(std::size_t n) { return from_op(n, 0, [n](auto x, auto y) { return (x + y) % n; }); }
  FinCMon or_monoid() { return from_op(2, 0, [](auto x, auto y) { return x | y; }); }
  FinCMon min_monoid(std::size_t n) { return from_op(n, n - 1, [](auto x, auto y) { return std::min(x, y); }); }

  FinCMon parse_fincmon(std::string_view text) {
    std::vector<std::pair<std::size_t, std::vector<std::string>>> lines;
    std::istringstream in{std::string(text)};
    std::string line;
    for (std::size_t no = 1; std::getline(in, line); no++) {
      std::istringstream ls(line);
      std::vector<std::string> words;
      for (std::string w; ls >> w;) words.push_back(w);
      if (words.empty() || words.front().starts_with('#')) continue;
      lines.emplace_back(no, std::move(words));
    }
    auto where = [&](std::size_t i) {
      return "line " + std::to_string(i < lines.size() ? lines[i].first : lines.empty() ? 1 : lines.back().first + 1);
    };
    if (lines.size() < 2) throw ParseError("monoid file needs carrier and unit lines", where(lines.size()));

    FinCMon m;
    m.carrier = lines[0].second;
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < m.carrier.size(); i++)
      if (!index.emplace(m.carrier[i], i).second) throw ParseError("duplicate carrier name '" + m.carrier[i] + "'", where(0));
    auto lookup = [&](const std::string& name, std::size_t li) {
      auto it = index.find(name);
      if (it == index.end()) throw ParseError("unknown element '" + name + "'", where(li));
      return it->second;
    };
    if (lines[1].second.size() != 1) throw ParseError("unit line must name one element", where(1));
    m.unit = lookup(lines[1].second[0], 1);
    std::size_t n = m.carrier.size();
    if (lines.size() != 2 + n) throw ParseError("expected " + std::to_string(n) + " table rows", where(lines.size()));
    for (std::size_t r = 0; r < n; r++) {
      const auto& row = lines[2 + r].second;
      if (row.size() != n) throw ParseError("table row has wrong width", where(2 + r));
      std::vector<std::size_t> cells;
      for (const auto& name: row) cells.push_back(lookup(name, 2 + r));
      m.table.push_back(std::move(cells));
    }
    return m;
  }

  std::string to_text(const FinCMon& m) {
    std::string res;
    for (std::size_t i = 0; i < m.size(); i++) res += (i ? " " : "") + m.carrier[i];
    res += "\n" + m.carrier[m.unit] + "\n";
    for (const auto& row: m.table) {
      for (std::size_t j = 0; j < row.size(); j++) res += (j ? " " : "") + m.carrier[row[j]];
      res += "\n";
    }
    return res;
  }

}
