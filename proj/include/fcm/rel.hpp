#pragma once

// The category of relations on finite enumerated sets, with its dagger compact
// and biproduct structure, the degree-truncated exponential !A = M(A) and the
// maps making it a (differential) linear exponential comonad.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fcm/cmon.hpp"
#include "fcm/multiset.hpp"

namespace fcm::rel {

  // Elements of the finite sets we build: named atoms, the point of the unit
  // object, pairs (tensor), tagged values (biproduct) and bags (exponential).
  class Elem {
  public:
    enum class Kind { Atom, Unit, Pair, Left, Right, Bag };

    static Elem atom(std::string name);
    static Elem unit();
    static Elem pair(Elem x, Elem y);
    static Elem left(Elem x);
    static Elem right(Elem x);
    static Elem bag(std::vector<Elem> xs);

    Kind kind() const noexcept { return kind_; }
    const std::string& name() const noexcept { return name_; }
    const std::vector<Elem>& kids() const noexcept { return kids_; }
    const Elem& fst() const { return kids_.at(0); }
    const Elem& snd() const { return kids_.at(1); }
    const Elem& payload() const { return kids_.at(0); }

    // Number of atom occurrences.
    std::size_t weight() const noexcept { return weight_; }

    std::string to_string() const;

    friend std::strong_ordering operator<=>(const Elem& a, const Elem& b);
    friend bool operator==(const Elem& a, const Elem& b) { return (a <=> b) == 0; }

  private:
    Elem(Kind k, std::string name, std::vector<Elem> kids);
    Kind kind_ = Kind::Unit;
    std::string name_;
    std::vector<Elem> kids_;
    std::size_t weight_ = 0;
  };

  Elem bag_of(const Multiset<Elem>& xs);
  // Throws DomainError unless x is a bag.
  Multiset<Elem> as_multiset(const Elem& x);

  // An enumerated finite set; index <-> element is fixed at construction.
  class FinSet {
  public:
    FinSet();
    // Throws DomainError on duplicate elements.
    explicit FinSet(std::vector<Elem> elems);
    static FinSet of_names(const std::vector<std::string>& names);

    std::size_t size() const noexcept { return data_->elems.size(); }
    const Elem& operator[](std::size_t i) const { return data_->elems[i]; }
    const std::vector<Elem>& elems() const noexcept { return data_->elems; }
    std::optional<std::size_t> index_of(const Elem& x) const;
    // Throws CarrierMismatch when absent.
    std::size_t index(const Elem& x) const;
    bool contains(const Elem& x) const { return index_of(x).has_value(); }

    FinSet filter(const std::function<bool(const Elem&)>& keep) const;

    // Shared storage identity; equal sets may still differ here.
    const void* identity() const noexcept { return data_.get(); }

    friend bool operator==(const FinSet& a, const FinSet& b);

  private:
    struct ByValue {
      using is_transparent = void;
      bool operator()(const Elem* a, const Elem* b) const { return *a < *b; }
      bool operator()(const Elem& a, const Elem* b) const { return a < *b; }
      bool operator()(const Elem* a, const Elem& b) const { return *a < b; }
    };
    struct Data {
      std::vector<Elem> elems;
      std::map<const Elem*, std::size_t, ByValue> index;
    };
    std::shared_ptr<const Data> data_;
  };

  // A relation src -+-> dst as a bit matrix, rows indexed by src.
  class FinRel {
  public:
    FinRel(FinSet src, FinSet dst);

    const FinSet& src() const noexcept { return src_; }
    const FinSet& dst() const noexcept { return dst_; }

    bool operator()(std::size_t i, std::size_t j) const {
      return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
    }
    void set(std::size_t i, std::size_t j, bool v = true) {
      auto& w = bits_[i * words_ + j / 64];
      std::uint64_t mask = std::uint64_t{1} << (j % 64);
      w = v ? (w | mask) : (w & ~mask);
    }
    // Throws CarrierMismatch for elements outside the carriers.
    bool holds(const Elem& x, const Elem& y) const { return (*this)(src_.index(x), dst_.index(y)); }

    // Indices j with (i, j) related.
    std::vector<std::size_t> row(std::size_t i) const;
    std::size_t count() const;

    // OR of `other`'s row j into row i of this relation.
    void or_row_from(std::size_t i, const FinRel& other, std::size_t j);

    // First cell where the two relations differ, given equal carriers.
    std::optional<std::pair<std::size_t, std::size_t>> first_difference(const FinRel& other) const;

    friend bool operator==(const FinRel& a, const FinRel& b);

  private:
    FinSet src_, dst_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
  };

  // ---- category structure ----

  FinRel rel_id(const FinSet& a);
  // g . f; throws CarrierMismatch unless f.dst() == g.src().
  FinRel rel_compose(const FinRel& g, const FinRel& f);
  FinRel dagger(const FinRel& r);
  FinRel rel_union(const FinRel& r, const FinRel& s);
  FinRel empty_rel(const FinSet& a, const FinSet& b);

  // Graph of a total function given pointwise. Throws DomainError if `f` misses
  // an element of `a` or maps outside `b`.
  FinRel func_to_rel(const std::map<Elem, Elem>& f, const FinSet& a, const FinSet& b);

  // x -+-> f(x) whenever f(x) is defined and lies in `b`.
  FinRel graph(const FinSet& a, const FinSet& b, const std::function<std::optional<Elem>(const Elem&)>& f);
  // x -+-> y iff f(y) == x, for y in `b`. This is dagger(graph(b, a, f)).
  FinRel cograph(const FinSet& a, const FinSet& b, const std::function<std::optional<Elem>(const Elem&)>& f);

  // ---- tensor ----

  FinSet tensor_unit();
  FinSet tensor(const FinSet& a, const FinSet& b);
  // Pairs of total weight <= max_weight.
  FinSet tensor(const FinSet& a, const FinSet& b, std::size_t max_weight);
  // Kronecker product on the full product carriers.
  FinRel tensor(const FinRel& r, const FinRel& s);
  // Kronecker product between sub-carriers of the pair sets.
  FinRel tensor_on(const FinRel& r, const FinRel& s, const FinSet& src, const FinSet& dst);

  FinRel symmetry(const FinSet& a, const FinSet& b);                   // A(x)B -> B(x)A
  FinRel associator(const FinSet& a, const FinSet& b, const FinSet& c); // (A(x)B)(x)C -> A(x)(B(x)C)
  FinRel left_unitor(const FinSet& a);                                  // 1(x)A -> A
  FinRel right_unitor(const FinSet& a);                                 // A(x)1 -> A

  // Compact closure: cup 1 -> A(x)A and cap A(x)A -> 1.
  FinRel cup(const FinSet& a);
  FinRel cap(const FinSet& a);

  // Rel(C(x)A, B) <-> Rel(C, A -o B) with A -o B = A(x)B.
  FinRel curry(const FinRel& r, const FinSet& c, const FinSet& a);
  FinRel uncurry(const FinRel& r, const FinSet& c, const FinSet& a);
  bool curry_bijection_check(const FinSet& a, const FinSet& b, const FinSet& c);

  // kappa : C(x)(A -o B) -> A -o (C(x)B)
  FinRel kappa(const FinSet& c, const FinSet& a, const FinSet& b);

  // ---- biproducts ----

  struct Biproduct {
    FinSet sum;
    FinRel inl, inr, outl, outr;
  };

  FinSet zero_object();
  FinSet coproduct(const FinSet& a, const FinSet& b);
  Biproduct biproduct(const FinSet& a, const FinSet& b);
  FinRel direct_sum(const FinRel& r, const FinRel& s);
  FinRel codiag(const FinSet& a); // A+A -> A
  FinRel diag(const FinSet& a);   // A -> A+A, dagger of codiag
  FinRel zero_in(const FinSet& a);  // 0 -> A
  FinRel zero_out(const FinSet& a); // A -> 0

  // ---- the truncated exponential ----

  // Multisets over `base` with at most `degree` elements (and total atom weight
  // at most `max_weight`, when given), in graded-lexicographic order of base
  // positions.
  struct BangObject {
    FinSet base;
    std::size_t degree = 0;
    std::optional<std::size_t> max_weight;
    FinSet elems;
  };

  BangObject enumerate_bang(const FinSet& a, std::size_t degree, std::optional<std::size_t> max_weight = std::nullopt);

  // Number of multisets of size <= k over n letters.
  std::size_t stars_and_bars(std::size_t n, std::size_t k);

  Elem mu_elem(const Elem& s);
  Elem append_elem(const Elem& xs, const Elem& ys);

  // Structure maps, each on caller-chosen truncations of its objects.
  FinRel bang_mult(const FinSet& pairs, const FinSet& bang);        // (xs,ys) -> xs ++ ys
  FinRel bang_unit(const FinSet& bang);                             // * -> []
  FinRel bang_comult(const FinSet& bang, const FinSet& pairs);      // dagger of bang_mult
  FinRel bang_counit(const FinSet& bang);                           // [] -> *
  FinRel bang_delta(const FinSet& bang, const FinSet& nested);      // ms -> s iff mu(s) = ms
  FinRel bang_epsilon(const FinSet& bang, const FinSet& a);         // [a] -> a
  FinRel bang_eta(const FinSet& a, const FinSet& bang);             // a -> [a]
  FinRel bang_phi(const FinSet& pairs, const FinSet& bang_pairs);   // (as,bs) -> ps, projections
  FinRel bang_phi_unit(const FinSet& bang_unit_obj);                // * -> every multiset over 1
  FinRel seely(const FinSet& pairs, const FinSet& bang_sum);        // (as,bs) -> L.as ++ R.bs
  FinRel seely_inverse(const FinSet& bang_sum, const FinSet& pairs);

  struct BangMaps {
    BangObject bang;   // !A
    FinSet bang2;      // !A (x) !A
    BangObject nested; // !!A
    FinRel m, e, w, k, delta, epsilon, eta_cr, phi_ab, phi_unit;
  };

  // Standard truncation: every exponential bounded by `degree`; phi_ab is taken
  // with B = A.
  BangMaps bang_maps(const FinSet& a, std::size_t degree);

  // as -+-> bs iff |as| = |bs| and the occurrences admit a perfect matching
  // through `r`.
  FinRel bang_functor(const FinRel& r, const FinSet& src_bang, const FinSet& dst_bang);
  FinRel bang_functor(const FinRel& r, std::size_t degree);

  // ---- monoids and comonoids in Rel ----

  struct RelMonoid {
    FinSet carrier;
    FinRel mult; // carrier (x) carrier -> carrier
    FinRel unit; // 1 -> carrier
  };

  struct RelComonoid {
    FinSet carrier;
    FinRel comult; // carrier -> carrier (x) carrier
    FinRel counit; // carrier -> 1
  };

  struct MonoidLaws {
    bool assoc = false, left_unit = false, right_unit = false, commutative = false;
    bool monoid() const { return assoc && left_unit && right_unit; }
  };

  MonoidLaws monoid_laws(const RelMonoid& m);
  MonoidLaws comonoid_laws(const RelComonoid& c);

  RelMonoid from_cmon(const cmon::FinCMon& m);
  RelMonoid dual(const RelComonoid& c);
  RelComonoid dual(const RelMonoid& m);
  // Diagonal comonoid x -> (x,x), x -> *.
  RelComonoid set_comonoid(const FinSet& a);
  // (!A, w, k) on the given truncation.
  RelComonoid bang_comonoid(const FinSet& bang);
  // Comultiplication (w1 (x) w2) followed by the middle interchange.
  RelComonoid tensor_comonoid(const RelComonoid& c1, const RelComonoid& c2);

  using Subset = std::vector<bool>;

  // p * q = { x | exists y, z. p(y), q(z), mult(y,z,x) }.
  Subset convolve(const RelMonoid& m, const Subset& p, const Subset& q);
  Subset convolution_unit(const RelMonoid& m);

  // The power monoid as a table over all subsets of the carrier (bitmask
  // order). Throws LawViolation if `m` is not a commutative monoid and
  // CostGuardExceeded above 8 carrier elements.
  cmon::FinCMon convolution_monoid(const RelMonoid& m);

  // !A -+-> M: [a1..an] relates to the n-fold convolution of the f(ai).
  // Throws LawViolation unless `m` satisfies the monoid laws.
  FinRel rel_hom_extend(const FinRel& f, const RelMonoid& m, const FinSet& bang);

  // (ext(r^dagger))^dagger with ext taken in the convolution monoid of the
  // dual of `c`.
  FinRel coextend(const FinRel& r, const RelComonoid& c, const FinSet& bang);

  // Name for an element of a FinSet, used in reports.
  std::string elem_name(const FinSet& s, std::size_t i);

}
