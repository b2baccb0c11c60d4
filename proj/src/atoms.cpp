#include "forge/atoms.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace forge {

std::string sort_name(AtomSort sort) {
  switch (sort) {
    case AtomSort::Equality: return "equality";
    case AtomSort::Ordered: return "ordered";
    case AtomSort::Paired: return "paired";
    case AtomSort::TwoSorted: return "two-sorted";
  }
  return "?";
}

AtomSort sort_from_name(const std::string& name) {
  if (name == "equality") return AtomSort::Equality;
  if (name == "ordered") return AtomSort::Ordered;
  if (name == "paired") return AtomSort::Paired;
  if (name == "two-sorted" || name == "twosorted") return AtomSort::TwoSorted;
  throw Error("unknown atom sort: " + name);
}

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw Error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num * o.den + o.num * den, den * o.den);
}
Rational Rational::operator-(const Rational& o) const {
  return Rational(num * o.den - o.num * den, den * o.den);
}
Rational Rational::operator*(const Rational& o) const {
  return Rational(num * o.num, den * o.den);
}
Rational Rational::operator/(const Rational& o) const {
  if (o.num == 0) throw Error("rational division by zero");
  return Rational(num * o.den, den * o.num);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  long long lhs = num * o.den, rhs = o.num * den;
  return lhs <=> rhs;
}

Rational Rational::midpoint(const Rational& a, const Rational& b) {
  return (a + b) / Rational::of(2);
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational Rational::parse(const std::string& text) {
  std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(text), 1);
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw Error("cannot parse rational: " + text);
  }
}

bool atom_less(AtomSort sort, const Atom& a, const Atom& b) {
  switch (sort) {
    case AtomSort::Equality: return a.n < b.n;
    case AtomSort::Ordered: return a.q < b.q;
    case AtomSort::Paired: return a.n != b.n ? a.n < b.n : a.aux < b.aux;
    case AtomSort::TwoSorted: return a.aux != b.aux ? a.aux < b.aux : a.n < b.n;
  }
  return false;
}

std::string atom_name(AtomSort sort, const Atom& a) {
  switch (sort) {
    case AtomSort::Equality: return "a" + std::to_string(a.n);
    case AtomSort::Ordered: return a.q.str();
    case AtomSort::Paired: return (a.aux == 0 ? "a" : "b") + std::to_string(a.n);
    case AtomSort::TwoSorted: return (a.aux == 0 ? "u" : "v") + std::to_string(a.n);
  }
  return "?";
}

Atom atom_parse(AtomSort sort, const std::string& name) {
  if (name.empty()) throw Error("empty atom name");
  try {
    switch (sort) {
      case AtomSort::Equality:
        if (name[0] != 'a') break;
        return Atom::counted(std::stoll(name.substr(1)));
      case AtomSort::Ordered:
        return Atom::rational(Rational::parse(name));
      case AtomSort::Paired:
        if (name[0] != 'a' && name[0] != 'b') break;
        return Atom::paired(std::stoll(name.substr(1)), name[0] == 'a' ? 0 : 1);
      case AtomSort::TwoSorted:
        if (name[0] != 'u' && name[0] != 'v') break;
        return Atom::half(name[0] == 'u' ? 0 : 1, std::stoll(name.substr(1)));
    }
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
  }
  throw Error("cannot parse atom '" + name + "' for sort " + sort_name(sort));
}

void sort_atoms(AtomSort sort, std::vector<Atom>& atoms) {
  std::sort(atoms.begin(), atoms.end(),
            [sort](const Atom& a, const Atom& b) { return atom_less(sort, a, b); });
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
}

std::vector<Atom> canonical_support(AtomSort sort, std::vector<Atom> atoms) {
  if (sort == AtomSort::Paired) {
    std::vector<Atom> closed;
    for (const Atom& a : atoms) {
      closed.push_back(Atom::paired(a.n, 0));
      closed.push_back(Atom::paired(a.n, 1));
    }
    atoms = std::move(closed);
  }
  sort_atoms(sort, atoms);
  return atoms;
}

namespace {

int find_atom(AtomSort sort, const std::vector<Atom>& list, const Atom& a) {
  for (std::size_t i = 0; i < list.size(); ++i)
    if (list[i] == a) return static_cast<int>(i);
  (void)sort;
  return -1;
}

/// Interval index of a fresh ordered value: the number of support points
/// strictly below it.
int ordered_region(const std::vector<Atom>& support, const Rational& q) {
  int r = 0;
  for (const Atom& s : support)
    if (s.q < q) ++r;
  return r;
}

}  // namespace

Descriptor describe_tuple(AtomSort sort, const std::vector<Atom>& support,
                          const std::vector<Atom>& tuple) {
  Descriptor d;
  d.slots.resize(tuple.size());
  std::vector<Atom> anchors;  // first-seen atom per fresh class
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    const Atom& a = tuple[i];
    int sup = find_atom(sort, support, a);
    if (sup >= 0) {
      d.slots[i] = {true, sup, 0};
      continue;
    }
    int cls = -1, bit = 0;
    for (std::size_t c = 0; c < anchors.size(); ++c) {
      if (sort == AtomSort::Paired) {
        if (anchors[c].n == a.n) {
          cls = static_cast<int>(c);
          bit = anchors[c].aux == a.aux ? 0 : 1;
          break;
        }
      } else if (anchors[c] == a) {
        cls = static_cast<int>(c);
        break;
      }
    }
    if (cls < 0) {
      cls = static_cast<int>(anchors.size());
      anchors.push_back(a);
    }
    d.slots[i] = {false, cls, bit};
  }
  d.classes.resize(anchors.size());
  if (sort == AtomSort::TwoSorted)
    for (std::size_t c = 0; c < anchors.size(); ++c) d.classes[c].region = anchors[c].aux;
  if (sort == AtomSort::Ordered) {
    for (std::size_t c = 0; c < anchors.size(); ++c)
      d.classes[c].region = ordered_region(support, anchors[c].q);
    // rank classes sharing a region by their values
    for (std::size_t c = 0; c < anchors.size(); ++c) {
      int rank = 0;
      for (std::size_t o = 0; o < anchors.size(); ++o)
        if (o != c && d.classes[o].region == d.classes[c].region && anchors[o].q < anchors[c].q)
          ++rank;
      d.classes[c].rank = rank;
    }
  }
  return d;
}

namespace {

struct DescriptorEnum {
  AtomSort sort;
  int support_size;
  int arity;
  std::vector<Descriptor> out;
  std::vector<DescriptorSlot> slots;
  std::vector<int> class_region;                // twosorted half / ordered interval
  std::vector<std::vector<int>> interval_order; // ordered: class ids per interval, low to high

  void emit() {
    Descriptor d;
    d.slots = slots;
    d.classes.resize(class_region.size());
    for (std::size_t c = 0; c < class_region.size(); ++c)
      d.classes[c].region = class_region[c];
    if (sort == AtomSort::Ordered)
      for (std::size_t r = 0; r < interval_order.size(); ++r)
        for (std::size_t pos = 0; pos < interval_order[r].size(); ++pos)
          d.classes[static_cast<std::size_t>(interval_order[r][pos])].rank =
              static_cast<int>(pos);
    out.push_back(std::move(d));
  }

  void recurse(int i) {
    if (i == arity) {
      emit();
      return;
    }
    for (int j = 0; j < support_size; ++j) {
      slots.push_back({true, j, 0});
      recurse(i + 1);
      slots.pop_back();
    }
    int nclasses = static_cast<int>(class_region.size());
    for (int c = 0; c < nclasses; ++c) {
      slots.push_back({false, c, 0});
      recurse(i + 1);
      slots.pop_back();
      if (sort == AtomSort::Paired) {
        slots.push_back({false, c, 1});
        recurse(i + 1);
        slots.pop_back();
      }
    }
    // fresh class
    auto with_new_class = [&](int region) {
      class_region.push_back(region);
      slots.push_back({false, nclasses, 0});
      recurse(i + 1);
      slots.pop_back();
      class_region.pop_back();
    };
    switch (sort) {
      case AtomSort::Equality:
      case AtomSort::Paired:
        with_new_class(0);
        break;
      case AtomSort::TwoSorted:
        with_new_class(0);
        with_new_class(1);
        break;
      case AtomSort::Ordered:
        for (int r = 0; r <= support_size; ++r) {
          auto& order = interval_order[static_cast<std::size_t>(r)];
          for (std::size_t pos = 0; pos <= order.size(); ++pos) {
            order.insert(order.begin() + static_cast<std::ptrdiff_t>(pos), nclasses);
            with_new_class(r);
            order.erase(order.begin() + static_cast<std::ptrdiff_t>(pos));
          }
        }
        break;
    }
  }
};

}  // namespace

std::vector<Descriptor> orbits_over(AtomSort sort, const std::vector<Atom>& support, int arity) {
  if (arity < 1 || arity > 3) throw Error("orbit decomposition capped at arity 3");
  std::vector<Atom> sup = canonical_support(sort, support);
  DescriptorEnum e;
  e.sort = sort;
  e.support_size = static_cast<int>(sup.size());
  e.arity = arity;
  e.interval_order.resize(static_cast<std::size_t>(e.support_size) + 1);
  e.recurse(0);
  std::sort(e.out.begin(), e.out.end());
  return e.out;
}

std::vector<std::string> Descriptor::constraints(AtomSort sort) const {
  std::vector<std::string> out;
  auto coord_pair = [](int j, int i) {
    return "(" + std::to_string(j) + "," + std::to_string(i) + ")";
  };
  int support_refs = 0;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const DescriptorSlot& s = slots[i];
    if (s.is_support) {
      out.push_back("eq(" + std::to_string(i) + ",s_" + std::to_string(s.ref) + ")");
      support_refs = std::max(support_refs, s.ref + 1);
      continue;
    }
    const FreshClass& cls = classes[static_cast<std::size_t>(s.ref)];
    if (sort == AtomSort::TwoSorted)
      out.push_back("half(" + std::to_string(i) + "," + std::to_string(cls.region) + ")");
    // link to the first occurrence of this class, if any
    for (std::size_t j = 0; j < i; ++j) {
      if (slots[j].is_support || slots[j].ref != s.ref) continue;
      if (sort == AtomSort::Paired && slots[j].bit != s.bit)
        out.push_back("pairmate" + coord_pair(static_cast<int>(j), static_cast<int>(i)));
      else if (slots[j].bit == s.bit)
        out.push_back("eq" + coord_pair(static_cast<int>(j), static_cast<int>(i)));
      else
        continue;  // paired: keep searching for a same-bit earlier coordinate
      break;
    }
    if (sort == AtomSort::Ordered) {
      if (cls.region > 0)
        out.push_back("gt(" + std::to_string(i) + ",s_" + std::to_string(cls.region - 1) + ")");
      // region upper bounds need the support size; emitted relative to refs
      // seen plus region data, handled by from_constraints via gt alone.
      // order among distinct classes in the same region, via first occurrences
      for (std::size_t j = 0; j < i; ++j) {
        if (slots[j].is_support || slots[j].ref == s.ref) continue;
        const FreshClass& other = classes[static_cast<std::size_t>(slots[j].ref)];
        if (other.region != cls.region) continue;
        bool first_occurrence = true;
        for (std::size_t j2 = 0; j2 < j; ++j2)
          if (!slots[j2].is_support && slots[j2].ref == slots[j].ref) first_occurrence = false;
        if (!first_occurrence) continue;
        if (other.rank < cls.rank)
          out.push_back("lt" + coord_pair(static_cast<int>(j), static_cast<int>(i)));
        else
          out.push_back("lt" + coord_pair(static_cast<int>(i), static_cast<int>(j)));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct Constraint {
  std::string head;
  std::vector<std::string> args;
};

Constraint parse_constraint(const std::string& text) {
  std::size_t open = text.find('(');
  if (open == std::string::npos || text.back() != ')')
    throw Error("malformed descriptor constraint: " + text);
  Constraint c;
  c.head = text.substr(0, open);
  std::string body = text.substr(open + 1, text.size() - open - 2);
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t comma = body.find(',', start);
    if (comma == std::string::npos) {
      c.args.push_back(body.substr(start));
      break;
    }
    c.args.push_back(body.substr(start, comma - start));
    start = comma + 1;
  }
  return c;
}

int arg_coord(const std::string& a) { return std::stoi(a); }

}  // namespace

Descriptor Descriptor::from_constraints(AtomSort sort, int arity, int support_size,
                                        const std::vector<std::string>& constraints) {
  std::vector<Constraint> parsed;
  for (const auto& text : constraints) parsed.push_back(parse_constraint(text));

  Descriptor d;
  d.slots.assign(static_cast<std::size_t>(arity), DescriptorSlot{});
  std::vector<bool> decided(static_cast<std::size_t>(arity), false);
  std::vector<int> half(static_cast<std::size_t>(arity), 0);
  std::vector<int> region(static_cast<std::size_t>(arity), 0);

  for (const auto& c : parsed) {
    if (c.head == "half") half[static_cast<std::size_t>(arg_coord(c.args.at(0)))] =
        std::stoi(c.args.at(1));
    if (c.head == "gt") {
      // gt(i, s_k) places coordinate i above support point k
      if (c.args.at(1).rfind("s_", 0) == 0) {
        int k = std::stoi(c.args.at(1).substr(2));
        std::size_t i = static_cast<std::size_t>(arg_coord(c.args.at(0)));
        region[i] = std::max(region[i], k + 1);
      }
    }
  }

  int nclasses = 0;
  for (int i = 0; i < arity; ++i) {
    // support pin?
    bool pinned = false;
    for (const auto& c : parsed) {
      if (c.head != "eq" || c.args.size() != 2) continue;
      if (arg_coord(c.args[0]) != i || c.args[1].rfind("s_", 0) != 0) continue;
      int k = std::stoi(c.args[1].substr(2));
      if (k < 0 || k >= support_size) throw Error("support reference out of range");
      d.slots[static_cast<std::size_t>(i)] = {true, k, 0};
      pinned = decided[static_cast<std::size_t>(i)] = true;
      break;
    }
    if (pinned) continue;
    // linked to an earlier coordinate?
    int link = -1, bit = 0;
    for (const auto& c : parsed) {
      if (c.args.size() != 2 || c.args[1].rfind("s_", 0) == 0) continue;
      if (c.head != "eq" && c.head != "pairmate") continue;
      int a = arg_coord(c.args[0]), b = arg_coord(c.args[1]);
      if (b != i || a >= i) continue;
      if (d.slots[static_cast<std::size_t>(a)].is_support) continue;
      link = a;
      bit = d.slots[static_cast<std::size_t>(a)].bit ^ (c.head == "pairmate" ? 1 : 0);
      break;
    }
    if (link >= 0) {
      d.slots[static_cast<std::size_t>(i)] = {false, d.slots[static_cast<std::size_t>(link)].ref,
                                              bit};
    } else {
      d.slots[static_cast<std::size_t>(i)] = {false, nclasses++, 0};
    }
    decided[static_cast<std::size_t>(i)] = true;
  }

  d.classes.assign(static_cast<std::size_t>(nclasses), FreshClass{});
  for (int i = 0; i < arity; ++i) {
    const DescriptorSlot& s = d.slots[static_cast<std::size_t>(i)];
    if (s.is_support) continue;
    if (sort == AtomSort::TwoSorted)
      d.classes[static_cast<std::size_t>(s.ref)].region = half[static_cast<std::size_t>(i)];
    if (sort == AtomSort::Ordered)
      d.classes[static_cast<std::size_t>(s.ref)].region = region[static_cast<std::size_t>(i)];
  }
  if (sort == AtomSort::Ordered) {
    // ranks from lt constraints among class anchors
    std::vector<int> anchor(static_cast<std::size_t>(nclasses), -1);
    for (int i = 0; i < arity; ++i) {
      const DescriptorSlot& s = d.slots[static_cast<std::size_t>(i)];
      if (!s.is_support && anchor[static_cast<std::size_t>(s.ref)] < 0)
        anchor[static_cast<std::size_t>(s.ref)] = i;
    }
    for (int c1 = 0; c1 < nclasses; ++c1) {
      int rank = 0;
      for (int c2 = 0; c2 < nclasses; ++c2) {
        if (c1 == c2 ||
            d.classes[static_cast<std::size_t>(c1)].region !=
                d.classes[static_cast<std::size_t>(c2)].region)
          continue;
        // does some lt place anchor(c2) below anchor(c1)?
        for (const auto& c : parsed) {
          if (c.head != "lt" || c.args.size() != 2) continue;
          if (c.args[1].rfind("s_", 0) == 0) continue;
          if (arg_coord(c.args[0]) == anchor[static_cast<std::size_t>(c2)] &&
              arg_coord(c.args[1]) == anchor[static_cast<std::size_t>(c1)])
            ++rank;
        }
      }
      d.classes[static_cast<std::size_t>(c1)].rank = rank;
    }
  }
  return d;
}

int Truncation::index_of(const Atom& a) const {
  for (std::size_t i = 0; i < atoms.size(); ++i)
    if (atoms[i] == a) return static_cast<int>(i);
  throw Error("atom not present in truncation: " + atom_name(sort, a));
}

namespace {

Truncation finish_truncation(AtomSort sort, std::vector<Atom> atoms) {
  sort_atoms(sort, atoms);
  std::vector<std::string> labels;
  std::vector<int> tags;
  bool tagged = sort == AtomSort::Paired || sort == AtomSort::TwoSorted;
  for (const Atom& a : atoms) {
    labels.push_back(atom_name(sort, a));
    if (tagged) tags.push_back(sort == AtomSort::Paired ? static_cast<int>(a.n) : a.aux);
  }
  Truncation t;
  t.sort = sort;
  t.atoms = std::move(atoms);
  t.domain = Domain(std::move(labels), tagged ? std::move(tags) : std::vector<int>{});
  return t;
}

}  // namespace

Truncation make_truncation_from_atoms(AtomSort sort, std::vector<Atom> atoms) {
  return finish_truncation(sort, std::move(atoms));
}

Truncation make_truncation(AtomSort sort, const std::vector<Atom>& support, int size) {
  std::vector<Atom> sup = canonical_support(sort, support);
  if (size < static_cast<int>(sup.size()) + 2)
    throw Error("truncation must exceed the support size by at least 2");
  std::vector<Atom> atoms = sup;
  switch (sort) {
    case AtomSort::Equality: {
      std::set<long long> used;
      for (const Atom& a : sup) used.insert(a.n);
      for (long long n = 0; static_cast<int>(atoms.size()) < size; ++n)
        if (!used.count(n)) atoms.push_back(Atom::counted(n));
      break;
    }
    case AtomSort::TwoSorted: {
      std::set<std::pair<int, long long>> used;
      for (const Atom& a : sup) used.insert({a.aux, a.n});
      int next_half = 0;
      long long next_n[2] = {0, 0};
      while (static_cast<int>(atoms.size()) < size) {
        while (used.count({next_half, next_n[next_half]})) ++next_n[next_half];
        atoms.push_back(Atom::half(next_half, next_n[next_half]));
        used.insert({next_half, next_n[next_half]});
        next_half = 1 - next_half;
      }
      break;
    }
    case AtomSort::Paired: {
      std::set<long long> used;
      for (const Atom& a : sup) used.insert(a.n);
      long long n = 0;
      while (static_cast<int>(atoms.size()) < size) {
        while (used.count(n)) ++n;
        atoms.push_back(Atom::paired(n, 0));
        atoms.push_back(Atom::paired(n, 1));
        used.insert(n);
      }
      break;
    }
    case AtomSort::Ordered: {
      // one deterministic chain per region, visited round-robin
      std::vector<Rational> points;
      for (const Atom& a : sup) points.push_back(a.q);
      int regions = static_cast<int>(points.size()) + 1;
      std::vector<Rational> next(static_cast<std::size_t>(regions));
      std::vector<Rational> low(static_cast<std::size_t>(regions));
      for (int r = 0; r < regions; ++r) {
        if (points.empty())
          next[static_cast<std::size_t>(r)] = Rational::of(0);
        else if (r == 0)
          next[0] = points.front() - Rational::of(1);
        else if (r == regions - 1)
          next[static_cast<std::size_t>(r)] = points.back() + Rational::of(1);
        else {
          low[static_cast<std::size_t>(r)] = points[static_cast<std::size_t>(r - 1)];
          next[static_cast<std::size_t>(r)] =
              Rational::midpoint(points[static_cast<std::size_t>(r - 1)],
                                 points[static_cast<std::size_t>(r)]);
        }
      }
      int r = 0;
      while (static_cast<int>(atoms.size()) < size) {
        Rational value = next[static_cast<std::size_t>(r)];
        atoms.push_back(Atom::rational(value));
        if (points.empty())
          next[0] = value + Rational::of(1);
        else if (r == 0)
          next[0] = value - Rational::of(1);
        else if (r == regions - 1)
          next[static_cast<std::size_t>(r)] = value + Rational::of(1);
        else
          next[static_cast<std::size_t>(r)] =
              Rational::midpoint(low[static_cast<std::size_t>(r)], value);
        r = (r + 1) % regions;
      }
      break;
    }
  }
  return finish_truncation(sort, std::move(atoms));
}

Truncation make_rich_truncation(AtomSort sort, const std::vector<Atom>& support, int arity) {
  std::vector<Atom> sup = canonical_support(sort, support);
  int base = static_cast<int>(sup.size());
  int per_region = arity + 2;
  int size = base;
  switch (sort) {
    case AtomSort::Equality: size += per_region; break;
    case AtomSort::Ordered: size += (base + 1) * per_region; break;
    case AtomSort::TwoSorted: size += 2 * per_region; break;
    case AtomSort::Paired: size += 2 * per_region; break;
  }
  size = std::max(size, base + 2);
  return make_truncation(sort, sup, size);
}

std::vector<Atom> fresh_representatives(AtomSort sort, const std::vector<Atom>& used) {
  std::vector<Atom> sup = canonical_support(sort, used);
  std::vector<Atom> out;
  switch (sort) {
    case AtomSort::Equality: {
      long long n = 0;
      std::set<long long> taken;
      for (const Atom& a : sup) taken.insert(a.n);
      while (taken.count(n)) ++n;
      out.push_back(Atom::counted(n));
      break;
    }
    case AtomSort::TwoSorted: {
      for (int h = 0; h < 2; ++h) {
        long long n = 0;
        std::set<long long> taken;
        for (const Atom& a : sup)
          if (a.aux == h) taken.insert(a.n);
        while (taken.count(n)) ++n;
        out.push_back(Atom::half(h, n));
      }
      break;
    }
    case AtomSort::Paired: {
      long long n = 0;
      std::set<long long> taken;
      for (const Atom& a : sup) taken.insert(a.n);
      while (taken.count(n)) ++n;
      out.push_back(Atom::paired(n, 0));
      break;
    }
    case AtomSort::Ordered: {
      if (sup.empty()) {
        out.push_back(Atom::rational(Rational::of(0)));
        break;
      }
      out.push_back(Atom::rational(sup.front().q - Rational::of(1)));
      for (std::size_t i = 0; i + 1 < sup.size(); ++i)
        out.push_back(Atom::rational(Rational::midpoint(sup[i].q, sup[i + 1].q)));
      out.push_back(Atom::rational(sup.back().q + Rational::of(1)));
      break;
    }
  }
  return out;
}

PermSpec PermSpec::identity(AtomSort sort) {
  PermSpec s;
  s.sort = sort;
  return s;
}

PermSpec PermSpec::swap_atoms(AtomSort sort, const Atom& a, const Atom& b) {
  if (sort == AtomSort::Paired) {
    if (a.n != b.n || a.aux == b.aux)
      throw Error("paired-sort swaps must exchange the two members of one pair");
    return flip_pairs({a.n});
  }
  PermSpec s;
  s.sort = sort;
  s.map = {{a, b}, {b, a}};
  s.validate();
  return s;
}

PermSpec PermSpec::flip_pairs(std::vector<long long> pairs) {
  PermSpec s;
  s.sort = AtomSort::Paired;
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  s.flips = std::move(pairs);
  return s;
}

void PermSpec::validate() const {
  if (sort == AtomSort::Paired) {
    if (!map.empty()) throw Error("paired-sort elements are described by pair flips");
    return;
  }
  if (!flips.empty()) throw Error("pair flips only describe paired-sort elements");
  if (sort == AtomSort::Ordered) {
    std::vector<std::pair<Rational, Rational>> pts;
    for (const auto& [from, to] : map) pts.push_back({from.q, to.q});
    std::sort(pts.begin(), pts.end());
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      if (pts[i].first == pts[i + 1].first) throw Error("duplicate breakpoint source");
      if (!(pts[i].second < pts[i + 1].second))
        throw Error("breakpoints are not strictly increasing: not an order automorphism");
    }
    return;
  }
  // finite atom permutation extended by the identity
  std::vector<Atom> from, to;
  for (const auto& [a, b] : map) {
    from.push_back(a);
    to.push_back(b);
    if (sort == AtomSort::TwoSorted && a.aux != b.aux)
      throw Error("two-sorted elements must preserve the halves");
  }
  auto key = [&](const Atom& a) { return std::pair<long long, int>{a.n, a.aux}; };
  std::set<std::pair<long long, int>> fs, ts;
  for (const Atom& a : from)
    if (!fs.insert(key(a)).second) throw Error("duplicate source atom in permutation spec");
  for (const Atom& a : to)
    if (!ts.insert(key(a)).second) throw Error("spec maps two atoms to one image");
  if (fs != ts) throw Error("named atom map is not a finite permutation");
}

Atom PermSpec::apply(const Atom& a) const {
  switch (sort) {
    case AtomSort::Paired:
      if (std::binary_search(flips.begin(), flips.end(), a.n))
        return Atom::paired(a.n, 1 - a.aux);
      return a;
    case AtomSort::Equality:
    case AtomSort::TwoSorted:
      for (const auto& [from, to] : map)
        if (from == a) return to;
      return a;
    case AtomSort::Ordered: {
      if (map.empty()) return a;
      std::vector<std::pair<Rational, Rational>> pts;
      for (const auto& [from, to] : map) pts.push_back({from.q, to.q});
      std::sort(pts.begin(), pts.end());
      const Rational& x = a.q;
      if (x <= pts.front().first)
        return Atom::rational(pts.front().second + (x - pts.front().first));
      if (x >= pts.back().first)
        return Atom::rational(pts.back().second + (x - pts.back().first));
      for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (!(pts[i].first <= x && x <= pts[i + 1].first)) continue;
        Rational t = (x - pts[i].first) / (pts[i + 1].first - pts[i].first);
        return Atom::rational(pts[i].second + t * (pts[i + 1].second - pts[i].second));
      }
      return a;  // unreachable
    }
  }
  return a;
}

PermSpec PermSpec::inverse() const {
  PermSpec s;
  s.sort = sort;
  s.flips = flips;  // flips are involutions
  for (const auto& [from, to] : map) s.map.push_back({to, from});
  return s;
}

}  // namespace forge
