#include "fcm/laws.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "fcm/error.hpp"
#include "fcm/literal.hpp"

namespace fcm::laws {

  using namespace rel;

  namespace {

    class Checker {
    public:
      void touch(const std::string& id) { laws_[id].id = id; }

      void fail(const std::string& id, std::string src, std::string dst) {
        auto& r = laws_[id];
        r.id = id;
        if (r.pass) {
          r.pass = false;
          r.counterexample = std::make_pair(std::move(src), std::move(dst));
        }
      }

      template <class Where>
      void holds(const std::string& id, bool ok, Where where) {
        touch(id);
        if (!ok) {
          auto [s, d] = where();
          fail(id, std::move(s), std::move(d));
        }
      }

      void eq(const std::string& id, const FinRel& lhs, const FinRel& rhs) {
        touch(id);
        if (!(lhs.src() == rhs.src()) || !(lhs.dst() == rhs.dst()))
          throw std::logic_error("law " + id + ": the two sides live on different carriers");
        if (auto d = lhs.first_difference(rhs)) fail(id, elem_name(lhs.src(), d->first), elem_name(lhs.dst(), d->second));
      }

      Report report() const {
        Report r;
        for (const auto& [id, law]: laws_) r.laws.push_back(law);
        return r;
      }

    private:
      std::map<std::string, LawResult> laws_;
    };

    using Tuple = std::vector<FinRel>;

    // Every k-tuple of endo-relations on `a` up to size 2, `samples` seeded
    // random ones beyond.
    void for_tuples(const FinSet& a, std::size_t k, const std::function<void(const Tuple&)>& f) {
      if (a.size() <= 2) {
        auto all = all_relations(a, a);
        std::vector<std::size_t> idx(k, 0);
        while (true) {
          Tuple t;
          for (auto i: idx) t.push_back(all[i]);
          f(t);
          std::size_t pos = 0;
          while (pos < k && ++idx[pos] == all.size()) idx[pos++] = 0;
          if (pos == k) return;
        }
      }
      std::size_t cells = a.size() * a.size();
      std::mt19937_64 rng(0x5eed0000u + k);
      std::uint64_t mask = cells >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cells) - 1;
      for (std::size_t s = 0; s < samples; s++) {
        Tuple t;
        for (std::size_t i = 0; i < k; i++) t.push_back(relation_from_bits(a, a, rng() & mask));
        f(t);
      }
    }

    using Power = std::vector<std::uint32_t>;

    Power to_power(const FinRel& r) {
      Power res(r.src().size(), 0);
      for (std::size_t i = 0; i < r.src().size(); i++)
        for (auto j: r.row(i)) res[i] |= std::uint32_t{1} << j;
      return res;
    }

    // Kleisli extension of a -> P(b) to P(a) -> P(b), indexed by bitmask.
    Power lift(const Power& f) {
      Power res(std::size_t{1} << f.size(), 0);
      for (std::uint32_t s = 0; s < res.size(); s++)
        for (std::size_t i = 0; i < f.size(); i++)
          if ((s >> i) & 1u) res[s] |= f[i];
      return res;
    }

    std::string subset_name(const FinSet& a, std::uint32_t mask) {
      std::string res = "{";
      bool first = true;
      for (std::size_t i = 0; i < a.size(); i++)
        if ((mask >> i) & 1u) {
          res += (first ? "" : ",") + a[i].to_string();
          first = false;
        }
      return res + "}";
    }

    void kleisli(Checker& c, std::size_t n) {
      FinSet a = carrier(n);
      Power y(n);
      for (std::size_t i = 0; i < n; i++) y[i] = std::uint32_t{1} << i;
      auto ly = lift(y);
      for (std::uint32_t s = 0; s < ly.size(); s++)
        c.holds("kleisli.lift_unit", ly[s] == s, [&] { return std::make_pair(subset_name(a, s), subset_name(a, ly[s])); });
      c.touch("kleisli.lift_unit");

      auto id = rel_id(a);
      for_tuples(a, 1, [&](const Tuple& t) {
        const auto& f = t[0];
        auto pf = to_power(f);
        auto lf = lift(pf);
        for (std::size_t i = 0; i < n; i++)
          c.holds("kleisli.unit", lf[y[i]] == pf[i], [&] { return std::make_pair(a[i].to_string(), subset_name(a, lf[y[i]])); });
        c.eq("category.left_id", rel_compose(id, f), f);
        c.eq("category.right_id", rel_compose(f, id), f);
      });
      for_tuples(a, 2, [&](const Tuple& t) {
        const auto& f = t[0];
        const auto& g = t[1];
        auto pf = to_power(f), pg = to_power(g);
        auto lg = lift(pg);
        Power gf(n);
        for (std::size_t i = 0; i < n; i++) gf[i] = lg[pf[i]];
        auto lhs = lift(gf), lf = lift(pf);
        for (std::uint32_t s = 0; s < lhs.size(); s++)
          c.holds("kleisli.assoc", lhs[s] == lg[lf[s]], [&] { return std::make_pair(subset_name(a, s), subset_name(a, lhs[s])); });
        auto composed = to_power(rel_compose(g, f));
        for (std::size_t i = 0; i < n; i++)
          c.holds("category.compose_kleisli", composed[i] == gf[i],
                  [&] { return std::make_pair(a[i].to_string(), subset_name(a, composed[i])); });
      });
      for_tuples(a, 3, [&](const Tuple& t) {
        c.eq("category.assoc", rel_compose(t[2], rel_compose(t[1], t[0])), rel_compose(rel_compose(t[2], t[1]), t[0]));
      });

      // Functions a -> a as digit strings base n.
      std::size_t nf = 1;
      for (std::size_t i = 0; i < n; i++) nf *= n;
      auto func = [&](std::size_t code) {
        std::vector<std::size_t> f(n);
        for (std::size_t i = 0; i < n; i++, code /= n) f[i] = code % n;
        return f;
      };
      auto as_rel = [&](const std::vector<std::size_t>& f) {
        std::map<Elem, Elem> m;
        for (std::size_t i = 0; i < n; i++) m.emplace(a[i], a[f[i]]);
        return func_to_rel(m, a, a);
      };
      c.touch("graph.functor");
      for (std::size_t fc = 0; fc < nf; fc++)
        for (std::size_t gc = 0; gc < nf; gc++) {
          auto f = func(fc), g = func(gc);
          std::vector<std::size_t> gf(n);
          for (std::size_t i = 0; i < n; i++) gf[i] = g[f[i]];
          c.eq("graph.functor", as_rel(gf), rel_compose(as_rel(g), as_rel(f)));
        }
      std::vector<std::size_t> idf(n);
      for (std::size_t i = 0; i < n; i++) idf[i] = i;
      c.eq("graph.identity", as_rel(idf), id);
    }

    void dagger_compact(Checker& c, std::size_t n) {
      FinSet a = carrier(n), b = carrier(n, "xyz");
      FinSet u = tensor_unit();
      auto id = rel_id(a);
      c.eq("dagger.identity", dagger(id), id);
      c.eq("tensor.identity", tensor(id, rel_id(b)), rel_id(tensor(a, b)));
      c.eq("symmetry.involution", rel_compose(symmetry(b, a), symmetry(a, b)), rel_id(tensor(a, b)));
      c.eq("symmetry.unitary", dagger(symmetry(a, b)), symmetry(b, a));
      auto alpha = associator(a, a, a);
      c.eq("associator.unitary", rel_compose(dagger(alpha), alpha), rel_id(alpha.src()));
      c.eq("associator.coisometry", rel_compose(alpha, dagger(alpha)), rel_id(alpha.dst()));

      // A = A(x)1 -> A(x)(A(x)A) -> (A(x)A)(x)A -> 1(x)A = A, and its mirror.
      auto snake_l = rel_compose(left_unitor(a),
                                 rel_compose(tensor(cap(a), id),
                                             rel_compose(dagger(alpha), rel_compose(tensor(id, cup(a)), dagger(right_unitor(a))))));
      c.eq("compact.snake_left", snake_l, id);
      auto snake_r = rel_compose(right_unitor(a),
                                 rel_compose(tensor(id, cap(a)),
                                             rel_compose(alpha, rel_compose(tensor(cup(a), id), dagger(left_unitor(a))))));
      c.eq("compact.snake_right", snake_r, id);
      c.eq("compact.cup_symmetric", rel_compose(symmetry(a, a), cup(a)), cup(a));
      c.holds("compact.curry_bijection", curry_bijection_check(a, a, a), [&] { return std::make_pair(std::string("C(x)A"), std::string("A-oB")); });
      auto k = kappa(a, a, b);
      c.eq("compact.kappa_iso", rel_compose(dagger(k), k), rel_id(k.src()));
      c.eq("compact.kappa_iso", rel_compose(k, dagger(k)), rel_id(k.dst()));

      auto id_u = rel_id(u);
      for_tuples(a, 1, [&](const Tuple& t) {
        const auto& r = t[0];
        c.eq("dagger.involution", dagger(dagger(r)), r);
        c.eq("unitor.left_natural", rel_compose(left_unitor(a), tensor(id_u, r)), rel_compose(r, left_unitor(a)));
        c.eq("unitor.right_natural", rel_compose(right_unitor(a), tensor(r, id_u)), rel_compose(r, right_unitor(a)));
      });
      for_tuples(a, 2, [&](const Tuple& t) {
        const auto& r = t[0];
        const auto& s = t[1];
        c.eq("dagger.contravariant", dagger(rel_compose(s, r)), rel_compose(dagger(r), dagger(s)));
        c.eq("dagger.tensor", dagger(tensor(r, s)), tensor(dagger(r), dagger(s)));
        c.eq("symmetry.natural", rel_compose(symmetry(a, a), tensor(r, s)), rel_compose(tensor(s, r), symmetry(a, a)));
      });
      for_tuples(a, 3, [&](const Tuple& t) {
        c.eq("associator.natural", rel_compose(alpha, tensor(tensor(t[0], t[1]), t[2])),
             rel_compose(tensor(t[0], tensor(t[1], t[2])), alpha));
      });
      for_tuples(a, 4, [&](const Tuple& t) {
        c.eq("tensor.interchange", tensor(rel_compose(t[1], t[0]), rel_compose(t[3], t[2])),
             rel_compose(tensor(t[1], t[3]), tensor(t[0], t[2])));
      });
    }

    void bialgebra(Checker& c, std::size_t n) {
      FinSet a = carrier(n), b = carrier(n, "xyz");
      FinSet aa = coproduct(a, a);
      auto nabla = codiag(a), delta = diag(a);
      FinSet four = coproduct(aa, aa);
      auto middle = graph(four, four, [](const Elem& x) {
        const auto& inner = x.payload();
        if (x.kind() == Elem::Kind::Left && inner.kind() == Elem::Kind::Right) return Elem::right(Elem::left(inner.payload()));
        if (x.kind() == Elem::Kind::Right && inner.kind() == Elem::Kind::Left) return Elem::left(Elem::right(inner.payload()));
        return x;
      });
      c.eq("bialgebra.diagram1", rel_compose(delta, nabla),
           rel_compose(direct_sum(nabla, nabla), rel_compose(middle, direct_sum(delta, delta))));
      auto u = zero_in(a), e = zero_out(a);
      c.eq("bialgebra.unit", rel_compose(delta, u), direct_sum(u, u));
      c.eq("bialgebra.counit", rel_compose(e, nabla), direct_sum(e, e));
      c.eq("bialgebra.unit_counit", rel_compose(e, u), rel_id(zero_object()));

      auto id = rel_id(a);
      auto assoc = graph(coproduct(aa, a), coproduct(a, aa), [](const Elem& x) {
        if (x.kind() == Elem::Kind::Right) return Elem::right(Elem::right(x.payload()));
        const auto& inner = x.payload();
        if (inner.kind() == Elem::Kind::Left) return Elem::left(inner.payload());
        return Elem::right(Elem::left(inner.payload()));
      });
      c.eq("codiag.assoc", rel_compose(nabla, direct_sum(nabla, id)), rel_compose(nabla, rel_compose(direct_sum(id, nabla), assoc)));
      c.eq("diag.coassoc", rel_compose(dagger(assoc), rel_compose(direct_sum(id, delta), delta)), rel_compose(direct_sum(delta, id), delta));
      auto pad = graph(a, coproduct(a, zero_object()), [](const Elem& x) { return Elem::left(x); });
      c.eq("codiag.unit", rel_compose(nabla, rel_compose(direct_sum(id, u), pad)), id);
      auto swap = graph(aa, aa, [](const Elem& x) {
        return x.kind() == Elem::Kind::Left ? Elem::right(x.payload()) : Elem::left(x.payload());
      });
      c.eq("codiag.comm", rel_compose(nabla, swap), nabla);

      auto bp = biproduct(a, b);
      c.eq("biproduct.outl_inl", rel_compose(bp.outl, bp.inl), rel_id(a));
      c.eq("biproduct.outr_inr", rel_compose(bp.outr, bp.inr), rel_id(b));
      c.eq("biproduct.outl_inr", rel_compose(bp.outl, bp.inr), empty_rel(b, a));
      c.eq("biproduct.outr_inl", rel_compose(bp.outr, bp.inl), empty_rel(a, b));
      c.eq("biproduct.sum_id", rel_union(rel_compose(bp.inl, bp.outl), rel_compose(bp.inr, bp.outr)), rel_id(bp.sum));

      for_tuples(a, 1, [&](const Tuple& t) {
        const auto& r = t[0];
        c.eq("codiag.natural", rel_compose(r, nabla), rel_compose(nabla, direct_sum(r, r)));
        c.eq("diag.natural", rel_compose(delta, r), rel_compose(direct_sum(r, r), delta));
      });
      auto bpa = biproduct(a, a);
      for_tuples(a, 2, [&](const Tuple& t) {
        c.eq("biproduct.direct_sum", direct_sum(t[0], t[1]),
             rel_union(rel_compose(bpa.inl, rel_compose(t[0], bpa.outl)), rel_compose(bpa.inr, rel_compose(t[1], bpa.outr))));
      });
    }

    void comonoid(Checker& c, std::size_t n, std::size_t k) {
      FinSet a = carrier(n);
      FinSet b = enumerate_bang(a, k).elems;
      FinSet bb = tensor(b, b);
      auto m = bang_mult(bb, b), e = bang_unit(b), w = bang_comult(b, bb), cu = bang_counit(b);
      auto id = rel_id(b);
      c.eq("comonoid.counit_left", rel_compose(left_unitor(b), rel_compose(tensor(cu, id), w)), id);
      c.eq("comonoid.counit_right", rel_compose(right_unitor(b), rel_compose(tensor(id, cu), w)), id);
      c.eq("comonoid.coassoc", rel_compose(associator(b, b, b), rel_compose(tensor(w, id), w)), rel_compose(tensor(id, w), w));
      c.eq("comonoid.cocomm", rel_compose(symmetry(b, b), w), w);
      c.eq("comonoid.is_dagger", w, dagger(m));
      c.eq("comonoid.is_dagger", cu, dagger(e));
      c.eq("monoid.assoc", rel_compose(m, tensor(m, id)), rel_compose(m, rel_compose(tensor(id, m), associator(b, b, b))));
      c.eq("monoid.left_unit", rel_compose(m, tensor(e, id)), left_unitor(b));
      c.eq("monoid.right_unit", rel_compose(m, tensor(id, e)), right_unitor(b));
      c.eq("monoid.comm", rel_compose(m, symmetry(b, b)), m);
    }

    void comonad(Checker& c, std::size_t n, std::size_t k) {
      FinSet a = carrier(n);
      FinSet b = enumerate_bang(a, k).elems;
      // Inner !!A: outer size <= k, atom weight <= k.
      FinSet nb = enumerate_bang(b, k, k).elems;
      auto eps = bang_epsilon(b, a);
      auto delta = bang_delta(b, nb);
      auto id = rel_id(b);
      c.eq("comonad.counit_left", rel_compose(bang_epsilon(nb, b), delta), id);
      c.eq("comonad.counit_right", rel_compose(bang_functor(eps, nb, b), delta), id);

      // mu(T) for T in !!!A has outer size up to k*k.
      FinSet wide = enumerate_bang(b, k * k, k).elems;
      FinSet nnb = enumerate_bang(nb, k, k).elems;
      auto delta_wide = bang_delta(b, wide);
      c.eq("comonad.coassoc", rel_compose(bang_delta(wide, nnb), delta_wide),
           rel_compose(bang_functor(delta, wide, nnb), delta_wide));

      c.eq("functor.identity", bang_functor(rel_id(a), b, b), id);
      for_tuples(a, 1, [&](const Tuple& t) {
        const auto& r = t[0];
        auto br = bang_functor(r, b, b);
        c.eq("comonad.epsilon_natural", rel_compose(r, eps), rel_compose(eps, br));
        c.eq("comonad.delta_natural", rel_compose(delta, br), rel_compose(bang_functor(br, nb, nb), delta));
        auto oracle = empty_rel(a, b);
        for (std::size_t i = 0; i < a.size(); i++)
          for (std::size_t j = 0; j < b.size(); j++) {
            bool ok = true;
            for (const auto& x: b[j].kids()) ok = ok && r(i, a.index(x));
            if (ok) oracle.set(i, j);
          }
        c.eq("cofree.set_comonoid", coextend(r, set_comonoid(a), b), oracle);
      });
      for_tuples(a, 2, [&](const Tuple& t) {
        c.eq("functor.compose", bang_functor(rel_compose(t[1], t[0]), b, b),
             rel_compose(bang_functor(t[1], b, b), bang_functor(t[0], b, b)));
      });

      auto bc = bang_comonoid(b);
      c.eq("cofree.counit", coextend(eps, bc, b), id);
      c.eq("cofree.delta", coextend(id, bc, nb), delta);

      FinSet aa = tensor(a, a);
      FinSet baa = enumerate_bang(aa, k).elems;
      auto phi = bang_phi(tensor(b, b), baa);
      c.eq("monoidal.phi", coextend(tensor(eps, eps), tensor_comonoid(bc, bc), baa), phi);
      FinSet u = tensor_unit();
      FinSet bu = enumerate_bang(u, k).elems;
      c.eq("monoidal.phi_unit", coextend(rel_id(u), set_comonoid(u), bu), bang_phi_unit(bu));
    }

    void seely(Checker& c, std::size_t n, std::size_t k) {
      FinSet a = carrier(n), bn = carrier(n, "xyz");
      FinSet ba = enumerate_bang(a, k).elems, bb = enumerate_bang(bn, k).elems;
      FinSet pairs = tensor(ba, bb, k);
      FinSet sum = enumerate_bang(coproduct(a, bn), k).elems;
      auto s = seely(pairs, sum), si = seely_inverse(sum, pairs);
      c.eq("seely.inverse_left", rel_compose(si, s), rel_id(pairs));
      c.eq("seely.inverse_right", rel_compose(s, si), rel_id(sum));
      c.eq("seely.dagger", dagger(s), si);

      FinSet u = tensor_unit();
      FinSet z = enumerate_bang(zero_object(), k).elems;
      auto to_z = graph(u, z, [](const Elem&) { return Elem::bag(std::vector<Elem>{}); });
      auto from_z = graph(z, u, [](const Elem&) { return Elem::unit(); });
      c.eq("seely.unit", rel_compose(from_z, to_z), rel_id(u));
      c.eq("seely.unit", rel_compose(to_z, from_z), rel_id(z));

      auto bp = biproduct(a, bn);
      FinSet ss = tensor(sum, sum);
      auto lifted = tensor_on(bang_functor(bp.inl, ba, sum), bang_functor(bp.inr, bb, sum), pairs, ss);
      c.eq("seely.via_monoid", rel_compose(bang_mult(ss, sum), lifted), s);
    }

    void differential(Checker& c, std::size_t n, std::size_t k) {
      FinSet a = carrier(n);
      FinSet b = enumerate_bang(a, k).elems;
      FinSet nb = enumerate_bang(b, k, k).elems;
      FinSet u = tensor_unit();
      auto eta = bang_eta(a, b), eps = bang_epsilon(b, a), delta = bang_delta(b, nb);
      c.eq("differential.counit", rel_compose(eps, eta), rel_id(a));

      FinSet bb = tensor(b, b);
      FinSet nn = tensor(nb, nb, k);
      auto start = rel_compose(tensor(eta, bang_unit(b)), dagger(right_unitor(a)));
      auto lifted = tensor_on(bang_eta(b, nb), delta, bb, nn);
      c.eq("differential.comultiplication", rel_compose(delta, eta), rel_compose(bang_mult(nn, nb), rel_compose(lifted, start)));

      FinSet aa = tensor(a, a);
      FinSet baa = enumerate_bang(aa, k).elems;
      auto phi = bang_phi(bb, baa);
      c.eq("differential.monoidal", rel_compose(phi, tensor(eta, rel_id(b))),
           rel_compose(bang_eta(aa, baa), tensor(rel_id(a), eps)));

      for_tuples(a, 1, [&](const Tuple& t) {
        c.eq("differential.eta_natural", rel_compose(bang_functor(t[0], b, b), eta), rel_compose(eta, t[0]));
      });
    }

    void prop57(Checker& c, std::size_t n, std::size_t k) {
      using SM = SymbolMultiset;
      using NestedM = Multiset<SM>;
      FinSet a = carrier(n);
      FinSet b = enumerate_bang(a, k).elems;
      FinSet nb = enumerate_bang(b, k, k).elems;
      auto eta = bang_eta(a, b), eps = bang_epsilon(b, a), delta = bang_delta(b, nb);
      auto sym = [&](std::size_t i) { return Symbol(a[i].name()); };
      auto where = [](const FinSet& s, std::size_t i, const FinSet& t, std::size_t j) {
        return [&s, &t, i, j] { return std::make_pair(s[i].to_string(), t[j].to_string()); };
      };

      auto one = rel_compose(eps, eta);
      for (std::size_t i = 0; i < n; i++)
        for (std::size_t j = 0; j < n; j++) {
          bool eq_sing = SM::singleton(sym(i)) == SM::singleton(sym(j));
          c.holds("prop57.singleton", one(i, j) == eq_sing && eq_sing == (sym(i) == sym(j)), where(a, i, a, j));
        }
      c.touch("prop57.singleton");

      auto two = rel_compose(delta, eta);
      c.touch("prop57.mu_singleton");
      for (std::size_t i = 0; i < n; i++)
        for (std::size_t j = 0; j < nb.size(); j++) {
          auto s = literal::parse<NestedM>(nb[j].to_string());
          bool lhs = mu(s) == SM::singleton(sym(i));
          auto t = singleton_mu_witness(s, sym(i));
          bool rhs = t && mu(*t).is_empty() && append(NestedM::singleton(SM::singleton(sym(i))), *t) == s;
          c.holds("prop57.mu_singleton", two(i, j) == lhs && lhs == rhs, where(a, i, nb, j));
        }

      FinSet ab = tensor(a, b);
      FinSet baa = enumerate_bang(tensor(a, a), k).elems;
      auto three = rel_compose(bang_phi(tensor(b, b), baa), tensor(eta, rel_id(b)));
      c.touch("prop57.proj_singleton");
      for (std::size_t i = 0; i < ab.size(); i++) {
        Symbol x(ab[i].fst().name());
        auto bs = literal::parse<SM>(ab[i].snd().to_string());
        for (std::size_t j = 0; j < baa.size(); j++) {
          auto ps = literal::parse<Multiset<PairSymbol>>(baa[j].to_string());
          bool lhs = mmap([](const PairSymbol& p) { return p.fst; }, ps) == SM::singleton(x) &&
                     mmap([](const PairSymbol& p) { return p.snd; }, ps) == bs;
          auto y = singleton_proj_witness(ps, x);
          bool rhs = y && bs == SM::singleton(*y) && ps == Multiset<PairSymbol>::singleton(PairSymbol{x, *y});
          c.holds("prop57.proj_singleton", three(i, j) == lhs && lhs == rhs, where(ab, i, baa, j));
        }
      }

      FinSet bb = tensor(b, b);
      auto split = rel_compose(bang_comult(b, bb), eta);
      c.touch("prop57.append_singleton");
      for (std::size_t i = 0; i < n; i++)
        for (std::size_t j = 0; j < bb.size(); j++) {
          auto xs = literal::parse<SM>(bb[j].fst().to_string());
          auto ys = literal::parse<SM>(bb[j].snd().to_string());
          auto single = SM::singleton(sym(i));
          bool lhs = append(xs, ys) == single;
          auto side = singleton_append_split(xs, ys, sym(i));
          bool rhs = side && ((*side == SplitSide::LeftHolds && xs == single && ys.is_empty()) ||
                              (*side == SplitSide::RightHolds && ys == single && xs.is_empty()));
          c.holds("prop57.append_singleton", split(i, j) == lhs && lhs == rhs, where(a, i, bb, j));
        }
    }

    void refinement_transfer(Checker& c, std::size_t n, std::size_t k) {
      using SM = SymbolMultiset;
      FinSet a = carrier(n);
      FinSet b = enumerate_bang(a, k).elems;
      FinSet p = tensor(b, b, k);
      FinSet q = tensor(p, p, k);
      auto m = bang_mult(p, b), w = bang_comult(b, p);
      auto middle = graph(q, q, [](const Elem& x) {
        return Elem::pair(Elem::pair(x.fst().fst(), x.snd().fst()), Elem::pair(x.fst().snd(), x.snd().snd()));
      });
      auto lhs = rel_compose(w, m);
      auto rhs = rel_compose(tensor_on(m, m, q, p), rel_compose(middle, tensor_on(w, w, p, q)));
      c.eq("refinement.bialgebra", lhs, rhs);

      std::vector<std::pair<SM, SM>> parsed;
      for (const auto& x: p.elems())
        parsed.emplace_back(literal::parse<SM>(x.fst().to_string()), literal::parse<SM>(x.snd().to_string()));
      c.touch("refinement.cells");
      for (std::size_t i = 0; i < p.size(); i++)
        for (std::size_t j = 0; j < p.size(); j++) {
          const auto& [as, bs] = parsed[i];
          const auto& [cs, ds] = parsed[j];
          auto sq = refine(as, bs, cs, ds);
          bool solvable = sq && square_holds(*sq, as, bs, cs, ds);
          c.holds("refinement.cells", lhs(i, j) == solvable && rhs(i, j) == solvable,
                  [&] { return std::make_pair(p[i].to_string(), p[j].to_string()); });
        }

      FinSet u = tensor_unit();
      FinSet uu = tensor(u, u);
      auto e = bang_unit(b), cu = bang_counit(b);
      c.eq("refinement.counit_unit", rel_compose(cu, e), rel_id(u));
      c.eq("refinement.comult_unit", rel_compose(w, e), rel_compose(tensor_on(e, e, uu, p), dagger(left_unitor(u))));
      c.eq("refinement.counit_mult", rel_compose(cu, m), rel_compose(left_unitor(u), tensor_on(cu, cu, p, uu)));
    }

    using Suite = void (*)(Checker&, std::size_t, std::size_t);

    const std::map<std::string, std::pair<Suite, bool>, std::less<>>& registry() {
      static const std::map<std::string, std::pair<Suite, bool>, std::less<>> suites{
        {"kleisli", {[](Checker& c, std::size_t n, std::size_t) { kleisli(c, n); }, false}},
        {"dagger_compact", {[](Checker& c, std::size_t n, std::size_t) { dagger_compact(c, n); }, false}},
        {"bialgebra", {[](Checker& c, std::size_t n, std::size_t) { bialgebra(c, n); }, false}},
        {"comonad", {comonad, true}},
        {"comonoid", {comonoid, true}},
        {"seely", {seely, true}},
        {"differential", {differential, true}},
        {"prop57", {prop57, true}},
        {"refinement_transfer", {refinement_transfer, true}},
      };
      return suites;
    }

  }

  bool Report::all_pass() const {
    return std::all_of(laws.begin(), laws.end(), [](const LawResult& r) { return r.pass; });
  }

  const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
      std::vector<std::string> res;
      for (const auto& [name, suite]: registry()) res.push_back(name);
      return res;
    }();
    return names;
  }

  bool needs_degree(std::string_view suite) {
    auto it = registry().find(suite);
    if (it == registry().end()) throw DomainError("unknown law suite '" + std::string(suite) + "'");
    return it->second.second;
  }

  Report law_suite(std::string_view suite, std::size_t size, std::optional<std::size_t> degree) {
    auto it = registry().find(suite);
    if (it == registry().end()) throw DomainError("unknown law suite '" + std::string(suite) + "'");
    if (size > max_size) throw CostGuardExceeded("carrier size above " + std::to_string(max_size));
    if (degree && *degree > max_degree) throw CostGuardExceeded("degree above " + std::to_string(max_degree));
    if (it->second.second && !degree) throw DomainError("suite '" + std::string(suite) + "' needs a degree");
    if (it->second.second && *degree == 0)
      throw DomainError("suite '" + std::string(suite) + "' needs degree >= 1: at degree 0 the exponential holds only []");
    Checker c;
    for (std::size_t n = 0; n <= size; n++) it->second.first(c, n, degree.value_or(0));
    return c.report();
  }

  Report monoid_instance(const cmon::FinCMon& m, std::size_t k) {
    Checker c;
    bool valid = cmon::validate_cmon(m);
    c.holds("monoid.valid", valid, [] { return std::make_pair(std::string("table"), std::string("not a commutative monoid")); });
    if (!valid) return c.report();

    const std::vector<Symbol> alphabet{Symbol("a"), Symbol("b")};
    FinSet a = carrier(2);
    FinSet b = enumerate_bang(a, k).elems;
    RelMonoid mr = from_cmon(m);
    auto laws = monoid_laws(mr);
    c.holds("monoid.rel_laws", laws.monoid() && laws.commutative,
            [] { return std::make_pair(std::string("mult"), std::string("unit")); });

    c.touch("monoid.universal");
    c.touch("monoid.rel_extension");
    for (const auto& f: cmon::all_generator_maps(alphabet, m)) {
      std::string fname;
      for (const auto& [x, y]: f) fname += (fname.empty() ? "" : ",") + x.text() + "->" + m.carrier[y];
      c.holds("monoid.universal", cmon::universal_check(alphabet, m, f, k),
              [&] { return std::make_pair(fname, std::to_string(k)); });
      auto fr = graph(a, mr.carrier, [&](const Elem& x) { return Elem::atom(m.carrier[f.at(Symbol(x.name()))]); });
      auto h = cmon::hom_extend(f, m);
      auto oracle = empty_rel(b, mr.carrier);
      for (std::size_t i = 0; i < b.size(); i++) oracle.set(i, h(literal::parse<SymbolMultiset>(b[i].to_string())));
      c.eq("monoid.rel_extension", rel_hom_extend(fr, mr, b), oracle);
    }
    if (m.size() <= 8 && laws.monoid() && laws.commutative)
      c.holds("monoid.convolution", cmon::validate_cmon(convolution_monoid(mr)),
              [] { return std::make_pair(std::string("subsets"), std::string("not a commutative monoid")); });
    return c.report();
  }

  Report merge(Report a, const Report& b) {
    a.laws.insert(a.laws.end(), b.laws.begin(), b.laws.end());
    std::stable_sort(a.laws.begin(), a.laws.end(), [](const LawResult& x, const LawResult& y) { return x.id < y.id; });
    return a;
  }

  std::string format(const Report& r) {
    std::ostringstream out;
    for (const auto& law: r.laws) {
      out << "LAW " << law.id << (law.pass ? " PASS" : " FAIL");
      if (law.counterexample) out << " counterexample: " << law.counterexample->first << " , " << law.counterexample->second;
      out << '\n';
    }
    return out.str();
  }

  FinSet carrier(std::size_t n, std::string_view names) {
    if (n > names.size()) throw DomainError("carrier: not enough element names");
    std::vector<std::string> xs;
    for (std::size_t i = 0; i < n; i++) xs.emplace_back(1, names[i]);
    return FinSet::of_names(xs);
  }

  FinRel relation_from_bits(const FinSet& a, const FinSet& b, std::uint64_t bits) {
    FinRel r(a, b);
    for (std::size_t i = 0; i < a.size(); i++)
      for (std::size_t j = 0; j < b.size(); j++)
        if ((bits >> (i * b.size() + j)) & 1u) r.set(i, j);
    return r;
  }

  std::vector<FinRel> all_relations(const FinSet& a, const FinSet& b) {
    std::size_t cells = a.size() * b.size();
    if (cells > 16) throw CostGuardExceeded("all_relations: more than 16 cells");
    std::vector<FinRel> res;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells); bits++) res.push_back(relation_from_bits(a, b, bits));
    return res;
  }

}
