#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "forge/atoms.hpp"
#include "forge/orbit_pred.hpp"
#include "forge/rng.hpp"

using namespace forge;

namespace {

std::vector<std::vector<Atom>> all_tuples(const Truncation& t, int arity) {
  std::vector<std::vector<Atom>> out;
  std::vector<int> idx(static_cast<std::size_t>(arity), 0);
  std::int64_t total = 1;
  for (int i = 0; i < arity; ++i) total *= t.size();
  for (std::int64_t c = 0; c < total; ++c) {
    std::vector<Atom> tuple;
    for (int i = 0; i < arity; ++i) tuple.push_back(t.atom(idx[static_cast<std::size_t>(i)]));
    out.push_back(std::move(tuple));
    for (int i = 0; i < arity; ++i) {
      if (++idx[static_cast<std::size_t>(i)] < t.size()) break;
      idx[static_cast<std::size_t>(i)] = 0;
    }
  }
  return out;
}

// Independent oracle: tuples are equivalent when they realize the same
// pattern of relations to each support atom and among their coordinates,
// compared directly from first principles (no descriptor machinery).
bool same_pattern(AtomSort sort, const std::vector<Atom>& support,
                  const std::vector<Atom>& x, const std::vector<Atom>& y) {
  std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (const Atom& s : support) {
      if ((x[i] == s) != (y[i] == s)) return false;
      if (sort == AtomSort::Ordered && ((x[i].q < s.q) != (y[i].q < s.q))) return false;
      if (sort == AtomSort::Paired && ((x[i].n == s.n) != (y[i].n == s.n))) return false;
    }
    if (sort == AtomSort::TwoSorted && x[i].aux != y[i].aux) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if ((x[i] == x[j]) != (y[i] == y[j])) return false;
      if (sort == AtomSort::Ordered && ((x[i].q < x[j].q) != (y[i].q < y[j].q))) return false;
      if (sort == AtomSort::Paired && ((x[i].n == x[j].n) != (y[i].n == y[j].n))) return false;
    }
  }
  return true;
}

int pattern_class_count(AtomSort sort, const std::vector<Atom>& support, const Truncation& t,
                        int arity) {
  auto tuples = all_tuples(t, arity);
  std::vector<std::vector<Atom>> reps;
  for (const auto& tuple : tuples) {
    bool found = false;
    for (const auto& r : reps)
      if (same_pattern(sort, support, r, tuple)) {
        found = true;
        break;
      }
    if (!found) reps.push_back(tuple);
  }
  return static_cast<int>(reps.size());
}

OrbitPredicate equals_atom(AtomSort sort, const Atom& a) {
  std::vector<Atom> support = canonical_support(sort, {a});
  std::vector<Descriptor> included;
  for (const Descriptor& d : orbits_over(sort, support, 1)) {
    const DescriptorSlot& s = d.slots.front();
    if (s.is_support && support[static_cast<std::size_t>(s.ref)] == a)
      included.push_back(d);
  }
  return OrbitPredicate(sort, 1, support, included);
}

OrbitPredicate less_than(const Atom& q) {
  std::vector<Atom> support = {q};
  std::vector<Descriptor> included;
  for (const Descriptor& d : orbits_over(AtomSort::Ordered, support, 1))
    if (!d.slots.front().is_support && d.classes.front().region == 0) included.push_back(d);
  return OrbitPredicate(AtomSort::Ordered, 1, support, included);
}

/// The reflexive order predicate x0 <= x1 with empty support.
OrbitPredicate builtin_leq() {
  std::vector<Descriptor> included;
  for (const Descriptor& d : orbits_over(AtomSort::Ordered, {}, 2)) {
    const auto& s = d.slots;
    if (s[0].ref == s[1].ref && !s[0].is_support) {
      included.push_back(d);  // x0 = x1
    } else if (d.classes.size() == 2 &&
               d.classes[0].rank < d.classes[1].rank) {
      included.push_back(d);  // anchor of x0 below anchor of x1
    }
  }
  return OrbitPredicate(AtomSort::Ordered, 2, {}, included);
}

}  // namespace

TEST_CASE("orbit decompositions match the truncation oracles") {
  struct Case {
    AtomSort sort;
    std::vector<Atom> support;
    int arity;
    int expect;  // frozen from the oracle below; -1 means oracle-only
  };
  std::vector<Case> cases = {
      {AtomSort::Equality, {Atom::counted(0)}, 1, 2},
      {AtomSort::Equality, {}, 2, 2},
      {AtomSort::Ordered, {Atom::rational(Rational::of(0))}, 1, 3},
      {AtomSort::Equality, {Atom::counted(0), Atom::counted(1)}, 2, -1},
      {AtomSort::Ordered, {}, 2, 3},
      {AtomSort::Ordered, {Atom::rational(Rational::of(0))}, 2, -1},
      {AtomSort::TwoSorted, {}, 1, 2},
      {AtomSort::TwoSorted, {Atom::half(0, 0)}, 2, -1},
      {AtomSort::Paired, {}, 1, 1},
      {AtomSort::Paired, {}, 2, 3},
      {AtomSort::Paired, {Atom::paired(0, 0)}, 1, 3},
  };
  for (const auto& c : cases) {
    CAPTURE(sort_name(c.sort));
    CAPTURE(c.arity);
    std::vector<Atom> support = canonical_support(c.sort, c.support);
    auto orbits = orbits_over(c.sort, support, c.arity);
    // duplicate-free
    std::set<Descriptor> unique_set(orbits.begin(), orbits.end());
    CHECK(unique_set.size() == orbits.size());
    Truncation t = make_rich_truncation(c.sort, support, c.arity);
    CHECK(static_cast<int>(orbits.size()) ==
          pattern_class_count(c.sort, support, t, c.arity));
    if (c.expect >= 0) CHECK(static_cast<int>(orbits.size()) == c.expect);
    // descriptors are mutually exclusive and jointly cover all tuples
    std::map<Descriptor, int> hits;
    for (const auto& tuple : all_tuples(t, c.arity)) {
      Descriptor d = describe_tuple(c.sort, support, tuple);
      CHECK(unique_set.count(d));
      hits[d]++;
    }
    CHECK(hits.size() == orbits.size());  // rich truncation realizes each orbit
  }
}

TEST_CASE("tuples connected by stabilizer moves share a descriptor") {
  // Closure oracle for the equality sort: any permutation of fresh atoms
  // within the truncation extends to a stabilizer element.
  std::vector<Atom> support = {Atom::counted(0)};
  Truncation t = make_rich_truncation(AtomSort::Equality, support, 2);
  std::vector<Atom> fresh;
  for (const Atom& a : t.atoms)
    if (!(a == support[0])) fresh.push_back(a);
  auto tuples = all_tuples(t, 2);
  // swap two fresh atoms, descriptors must agree
  for (std::size_t i = 0; i + 1 < fresh.size(); ++i) {
    PermSpec swap = PermSpec::swap_atoms(AtomSort::Equality, fresh[i], fresh[i + 1]);
    for (const auto& tuple : tuples) {
      std::vector<Atom> moved = {swap.apply(tuple[0]), swap.apply(tuple[1])};
      CHECK(describe_tuple(AtomSort::Equality, support, tuple) ==
            describe_tuple(AtomSort::Equality, support, moved));
    }
  }
}

TEST_CASE("orbit predicate membership and denotation") {
  OrbitPredicate p = equals_atom(AtomSort::Equality, Atom::counted(3));
  CHECK(p.contains({Atom::counted(3)}));
  CHECK_FALSE(p.contains({Atom::counted(5)}));

  SUBCASE("not-equal over a four atom truncation") {
    OrbitPredicate ne = OrbitPredicate(
        AtomSort::Equality, 1, {Atom::counted(0)},
        [&] {
          std::vector<Descriptor> d;
          for (const Descriptor& o : orbits_over(AtomSort::Equality, {Atom::counted(0)}, 1))
            if (!o.slots.front().is_support) d.push_back(o);
          return d;
        }());
    Truncation t = make_truncation(AtomSort::Equality, ne.support(), 4);
    PredicateRel fin = to_finite(ne, t);
    CHECK(fin.tuples() == std::vector<std::vector<int>>{{1}, {2}, {3}});
  }
  SUBCASE("built-in order over four sample points") {
    OrbitPredicate leq = builtin_leq();
    Truncation t = make_truncation(AtomSort::Ordered, {}, 4);
    PredicateRel fin = to_finite(leq, t);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) CHECK(fin.contains({i, j}) == (i <= j));
  }
  SUBCASE("truncation must contain the support") {
    CHECK_THROWS_AS(make_truncation(AtomSort::Equality, {Atom::counted(0)}, 2), Error);
  }
}

TEST_CASE("symbolic action") {
  SUBCASE("swapping the supporting atom renames the predicate") {
    OrbitPredicate p = equals_atom(AtomSort::Equality, Atom::counted(0));
    PermSpec swap =
        PermSpec::swap_atoms(AtomSort::Equality, Atom::counted(0), Atom::counted(1));
    OrbitPredicate q = symbolic_act(swap, p);
    CHECK(q == equals_atom(AtomSort::Equality, Atom::counted(1)));
    CHECK(symbolic_act(PermSpec::identity(AtomSort::Equality), p) == p);
  }
  SUBCASE("cross-half specs are rejected for the two-sorted sort") {
    CHECK_THROWS_AS(
        PermSpec::swap_atoms(AtomSort::TwoSorted, Atom::half(0, 0), Atom::half(1, 0)),
        Error);
  }
  SUBCASE("order-reversing specs are rejected for ordered atoms") {
    PermSpec bad;
    bad.sort = AtomSort::Ordered;
    bad.map = {{Atom::rational(Rational::of(0)), Atom::rational(Rational::of(1))},
               {Atom::rational(Rational::of(1)), Atom::rational(Rational::of(0))}};
    CHECK_THROWS_AS(bad.validate(), Error);
  }
  SUBCASE("monotone breakpoints extend to an order automorphism") {
    PermSpec shift;
    shift.sort = AtomSort::Ordered;
    shift.map = {{Atom::rational(Rational::of(0)), Atom::rational(Rational::of(2))},
                 {Atom::rational(Rational::of(1)), Atom::rational(Rational::of(3))}};
    shift.validate();
    CHECK(shift.apply(Atom::rational(Rational(1, 2))) == Atom::rational(Rational(5, 2)));
    CHECK(shift.apply(Atom::rational(Rational::of(-5))) == Atom::rational(Rational::of(-3)));
    OrbitPredicate p = less_than(Atom::rational(Rational::of(0)));
    OrbitPredicate q = symbolic_act(shift, p);
    CHECK(q == less_than(Atom::rational(Rational::of(2))));
  }
}

TEST_CASE("bridge commutation on random predicates") {
  SeededRng rng(4242);
  std::vector<AtomSort> sorts = {AtomSort::Equality, AtomSort::Ordered, AtomSort::Paired,
                                 AtomSort::TwoSorted};
  for (AtomSort sort : sorts) {
    CAPTURE(sort_name(sort));
    for (int trial = 0; trial < 60; ++trial) {
      // random support of up to 2 atoms
      std::vector<Atom> support;
      int nsup = rng.below_int(3);
      for (int i = 0; i < nsup; ++i) {
        switch (sort) {
          case AtomSort::Equality: support.push_back(Atom::counted(rng.below_int(3))); break;
          case AtomSort::Ordered:
            support.push_back(Atom::rational(Rational::of(rng.below_int(5) - 2)));
            break;
          case AtomSort::Paired: support.push_back(Atom::paired(rng.below_int(3), 0)); break;
          case AtomSort::TwoSorted:
            support.push_back(Atom::half(rng.below_int(2), rng.below_int(3)));
            break;
        }
      }
      support = canonical_support(sort, support);
      int arity = 1 + rng.below_int(2);
      auto orbits = orbits_over(sort, support, arity);
      std::vector<Descriptor> included;
      for (const auto& d : orbits)
        if (rng.coin()) included.push_back(d);
      OrbitPredicate p(sort, arity, support, included);

      // a group element moving some support atoms
      PermSpec pi = PermSpec::identity(sort);
      switch (sort) {
        case AtomSort::Equality:
          pi = PermSpec::swap_atoms(sort, Atom::counted(0), Atom::counted(7));
          break;
        case AtomSort::Ordered: {
          pi.sort = sort;
          pi.map = {{Atom::rational(Rational::of(-3)), Atom::rational(Rational::of(-2))},
                    {Atom::rational(Rational::of(3)), Atom::rational(Rational::of(8))}};
          break;
        }
        case AtomSort::Paired: pi = PermSpec::flip_pairs({0, 2}); break;
        case AtomSort::TwoSorted:
          pi = PermSpec::swap_atoms(sort, Atom::half(0, 0), Atom::half(0, 7));
          break;
      }

      Truncation from = make_rich_truncation(sort, support, arity);
      Truncation to = transport_truncation(pi, from);
      Permutation induced = induced_permutation(pi, from, to);
      CHECK(to_finite(symbolic_act(pi, p), to) ==
            act_on_predicate(induced, to_finite(p, from)));
    }
  }
}

TEST_CASE("minimal support") {
  SUBCASE("union of two pins keeps both atoms") {
    Atom a = Atom::counted(0), b = Atom::counted(1);
    std::vector<Atom> sup = {a, b};
    std::vector<Descriptor> included;
    for (const Descriptor& d : orbits_over(AtomSort::Equality, sup, 1))
      if (d.slots.front().is_support) included.push_back(d);
    OrbitPredicate p(AtomSort::Equality, 1, sup, included);
    CHECK(minimal_support(p) == sup);
  }
  SUBCASE("full predicate needs no support") {
    OrbitPredicate p = OrbitPredicate::full(AtomSort::Equality, 2);
    CHECK(minimal_support(p).empty());
    // also when declared with a gratuitous support
    auto q = express_over(p, {Atom::counted(5)});
    REQUIRE(q.has_value());
    CHECK(minimal_support(*q).empty());
  }
  SUBCASE("strict lower cone pins its endpoint") {
    OrbitPredicate p = less_than(Atom::rational(Rational::of(0)));
    auto sup = minimal_support(p);
    REQUIRE(sup.size() == 1);
    CHECK(sup[0] == Atom::rational(Rational::of(0)));
    // dropping the endpoint is not expressible
    CHECK_FALSE(express_over(p, {}).has_value());
  }
  SUBCASE("dropping any returned atom breaks invariance") {
    Atom a = Atom::counted(2), b = Atom::counted(4);
    std::vector<Atom> sup = {a, b};
    std::vector<Descriptor> included;
    for (const Descriptor& d : orbits_over(AtomSort::Equality, sup, 1))
      if (d.slots.front().is_support) included.push_back(d);
    OrbitPredicate p(AtomSort::Equality, 1, sup, included);
    for (const Atom& drop : minimal_support(p)) {
      std::vector<Atom> rest;
      for (const Atom& s : minimal_support(p))
        if (!(s == drop)) rest.push_back(s);
      CHECK_FALSE(express_over(p, rest).has_value());
    }
  }
  SUBCASE("paired predicates report one atom per needed pair") {
    OrbitPredicate p = equals_atom(AtomSort::Paired, Atom::paired(1, 0));
    auto sup = minimal_support(p);
    REQUIRE(sup.size() == 1);
    CHECK(sup[0] == Atom::paired(1, 0));
    CHECK_FALSE(express_over(p, {}).has_value());
  }
}

TEST_CASE("orbit predicate json round trip") {
  SeededRng rng(555);
  std::vector<AtomSort> sorts = {AtomSort::Equality, AtomSort::Ordered, AtomSort::Paired,
                                 AtomSort::TwoSorted};
  for (AtomSort sort : sorts) {
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Atom> support;
      if (rng.coin()) {
        switch (sort) {
          case AtomSort::Equality: support.push_back(Atom::counted(1)); break;
          case AtomSort::Ordered: support.push_back(Atom::rational(Rational(1, 2))); break;
          case AtomSort::Paired: support.push_back(Atom::paired(1, 0)); break;
          case AtomSort::TwoSorted: support.push_back(Atom::half(1, 1)); break;
        }
      }
      support = canonical_support(sort, support);
      int arity = 1 + rng.below_int(2);
      std::vector<Descriptor> included;
      for (const auto& d : orbits_over(sort, support, arity))
        if (rng.coin()) included.push_back(d);
      OrbitPredicate p(sort, arity, support, included);
      OrbitPredicate q = OrbitPredicate::from_json(p.to_json());
      CHECK(p == q);
    }
  }
}
