#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "hypermatroid/errors.hpp"
#include "hypermatroid/rational.hpp"
#include "hypermatroid/report.hpp"

namespace hypermatroid {

enum class Kind { krasner, signs, tropical, phase, table };

/// A hyperfield element as a tagged value. The tag meaning depends on the
/// hyperfield it belongs to:
///   krasner  code in {0, 1}
///   signs    code in {-1, 0, 1}
///   tropical code 0 is -inf, code 1 carries a rational value
///   phase    code 0 is zero, code 1 carries an angle in turns, in [0, 1)
///   table    code is the symbol index
class Element {
 public:
  Element() = default;
  explicit Element(int code) : code_(code) {}
  Element(int code, Rational value) : code_(code), value_(std::move(value)) {}

  int code() const { return code_; }
  const Rational& value() const { return value_; }

  friend bool operator==(const Element& a, const Element& b) {
    return a.code_ == b.code_ && a.value_ == b.value_;
  }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
  friend bool operator<(const Element& a, const Element& b) {
    if (a.code_ != b.code_) return a.code_ < b.code_;
    return a.value_ < b.value_;
  }

 private:
  int code_ = 0;
  Rational value_;
};

/// Open arc starting at `start` (turns) and running counterclockwise for
/// `length` turns; endpoints excluded.
struct Arc {
  Rational start;
  Rational length;
  friend bool operator==(const Arc&, const Arc&) = default;
};

struct FiniteSet {
  std::vector<Element> elements;  // sorted, unique
  friend bool operator==(const FiniteSet&, const FiniteSet&) = default;
};

/// Tropical interval [-inf, bound] with a finite bound.
struct TropicalDownSet {
  Rational bound;
  friend bool operator==(const TropicalDownSet&, const TropicalDownSet&) = default;
};

/// Subset of the phase hyperfield: optional zero, isolated angles and open
/// arcs. Kept in canonical form by `phase_detail::normalize`: arcs are
/// maximal, pairwise disjoint and shorter than a full turn; points are never
/// interior to an arc.
struct PhaseRegion {
  bool zero = false;
  std::vector<Rational> points;
  std::vector<Arc> arcs;
  friend bool operator==(const PhaseRegion&, const PhaseRegion&) = default;
};

using HyperSubset = std::variant<FiniteSet, TropicalDownSet, PhaseRegion>;

/// Finite hyperfield given by explicit tables over symbol indices.
struct HyperfieldTable {
  std::string name;
  std::vector<std::string> symbols;
  int zero = 0;
  int one = 1;
  std::vector<int> neg;            // size n
  std::vector<int> mul;            // n*n, symmetric
  std::vector<std::uint64_t> add;  // n*n, symmetric, nonzero bitmasks
  friend bool operator==(const HyperfieldTable&, const HyperfieldTable&) = default;

  int size() const { return static_cast<int>(symbols.size()); }
};

namespace phase_detail {

inline const Rational& half() {
  static const Rational h(1, 2);
  return h;
}

inline bool in_arc(const Arc& a, const Rational& x) {
  Rational d = mod_one(x - a.start);
  return d > 0 && d < a.length;
}

inline bool region_has_angle(const PhaseRegion& r, const Rational& x) {
  for (const auto& p : r.points)
    if (p == x) return true;
  for (const auto& a : r.arcs)
    if (in_arc(a, x)) return true;
  return false;
}

inline PhaseRegion full_circle(bool zero) {
  PhaseRegion r;
  r.zero = zero;
  r.points = {Rational(0), half()};
  r.arcs = {Arc{Rational(0), half()}, Arc{half(), half()}};
  return r;
}

/// Rebuilds a region in canonical form from any union of points and arcs
/// (arc lengths in (0, 1]).
inline PhaseRegion normalize(const PhaseRegion& in) {
  PhaseRegion src = in;
  for (auto& p : src.points) p = mod_one(p);
  for (auto& a : src.arcs) a.start = mod_one(a.start);

  std::vector<Rational> bp = src.points;
  for (const auto& a : src.arcs) {
    bp.push_back(a.start);
    bp.push_back(mod_one(a.start + a.length));
  }
  std::sort(bp.begin(), bp.end());
  bp.erase(std::unique(bp.begin(), bp.end()), bp.end());

  PhaseRegion out;
  out.zero = src.zero;
  const int m = static_cast<int>(bp.size());
  if (m == 0) return out;

  auto in_any_arc = [&](const Rational& x) {
    for (const auto& a : src.arcs)
      if (in_arc(a, x)) return true;
    return false;
  };
  std::vector<bool> covered(2 * m);  // even: breakpoint i, odd: gap after it
  for (int i = 0; i < m; ++i) {
    covered[2 * i] = region_has_angle(src, bp[i]);
    Rational mid = i + 1 < m ? (bp[i] + bp[i + 1]) / 2 : mod_one((bp[m - 1] + bp[0] + 1) / 2);
    covered[2 * i + 1] = in_any_arc(mid);
  }
  int start = -1;
  for (int i = 0; i < 2 * m; ++i)
    if (!covered[i]) {
      start = i;
      break;
    }
  if (start < 0) return full_circle(out.zero);

  auto flush = [&](const std::vector<int>& run) {
    if (run.empty()) return;
    std::vector<int> gaps;
    for (int pos : run)
      if (pos % 2 == 1) gaps.push_back(pos / 2);
    if (gaps.empty()) {
      out.points.push_back(bp[run.front() / 2]);
      return;
    }
    if (run.front() % 2 == 0) out.points.push_back(bp[run.front() / 2]);
    if (run.back() % 2 == 0 && run.size() > 1) out.points.push_back(bp[run.back() / 2]);
    Rational from = bp[gaps.front()];
    Rational to = bp[(gaps.back() + 1) % m];
    Rational len = mod_one(to - from);
    if (len == 0) len = 1;
    if (len == 1) {
      out.arcs.push_back(Arc{from, half()});
      out.arcs.push_back(Arc{mod_one(from + half()), half()});
      out.points.push_back(mod_one(from + half()));
    } else {
      out.arcs.push_back(Arc{from, len});
    }
  };
  std::vector<int> run;
  for (int step = 1; step <= 2 * m; ++step) {
    int pos = (start + step) % (2 * m);
    if (covered[pos]) {
      run.push_back(pos);
    } else {
      flush(run);
      run.clear();
    }
  }
  flush(run);
  std::sort(out.points.begin(), out.points.end());
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  std::sort(out.arcs.begin(), out.arcs.end(),
            [](const Arc& a, const Arc& b) { return a.start < b.start; });
  return out;
}

inline PhaseRegion rotate(const PhaseRegion& r, const Rational& turn) {
  PhaseRegion out = r;
  for (auto& p : out.points) p += turn;
  for (auto& a : out.arcs) a.start += turn;
  return normalize(out);
}

/// r ⊞ 1, where 1 is the angle 0.
inline PhaseRegion add_one(const PhaseRegion& r) {
  const Rational& h = half();
  PhaseRegion out;
  auto point_sum = [&](const Rational& a) {
    if (a == 0) {
      out.points.push_back(Rational(0));
    } else if (a == h) {
      out.points.push_back(Rational(0));
      out.points.push_back(h);
      out.zero = true;
    } else if (a < h) {
      out.arcs.push_back(Arc{Rational(0), a});
    } else {
      out.arcs.push_back(Arc{a, 1 - a});
    }
  };
  if (r.zero) out.points.push_back(Rational(0));
  for (const auto& p : r.points) point_sum(p);
  for (const auto& arc : r.arcs) {
    const Rational& s = arc.start;
    Rational e = arc.start + arc.length;
    for (int k = 0; k < 4; ++k) {
      Rational lo(k, 2), hi(k + 1, 2);
      Rational a = std::max(s, lo), b = std::min(e, hi);
      if (!(a < b)) continue;
      if (k % 2 == 0) {
        out.arcs.push_back(Arc{Rational(0), b - lo});
      } else {
        Rational p = a - Rational(k - 1, 2);
        out.arcs.push_back(Arc{p, 1 - p});
      }
    }
    for (int k = 1; k <= 3; ++k) {
      Rational t(k, 2);
      if (s < t && t < e) {
        out.points.push_back(Rational(0));
        if (k != 2) {
          out.points.push_back(h);
          out.zero = true;
        }
      }
    }
  }
  return normalize(out);
}

}  // namespace phase_detail

/// A hyperfield: one of the four built-ins or a finite table. Cheap to copy.
class Hyperfield {
 public:
  static Hyperfield krasner() { return Hyperfield(Kind::krasner); }
  static Hyperfield signs() { return Hyperfield(Kind::signs); }
  static Hyperfield tropical() { return Hyperfield(Kind::tropical); }
  static Hyperfield phase() { return Hyperfield(Kind::phase); }

  /// Validates the table's shape (not its axioms; see verify_hyperfield_axioms).
  static Hyperfield from_table(HyperfieldTable t) {
    const int n = t.size();
    if (n < 2 || n > 64) throw ShapeError("table hyperfield needs between 2 and 64 elements");
    std::unordered_map<std::string, int> seen;
    for (int i = 0; i < n; ++i) {
      const auto& s = t.symbols[i];
      if (s.empty() || s.find(',') != std::string::npos)
        throw ShapeError("invalid table symbol \"" + s + "\"");
      if (!seen.emplace(s, i).second) throw ShapeError("duplicate table symbol \"" + s + "\"");
    }
    auto in_range = [n](int x) { return x >= 0 && x < n; };
    if (!in_range(t.zero) || !in_range(t.one)) throw ShapeError("zero/one outside the carrier");
    if (t.zero == t.one) throw ShapeError("zero and one must differ");
    if (static_cast<int>(t.neg.size()) != n || static_cast<int>(t.mul.size()) != n * n ||
        static_cast<int>(t.add.size()) != n * n)
      throw ShapeError("table sizes do not match the carrier");
    const std::uint64_t carrier = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    for (int i = 0; i < n; ++i) {
      if (!in_range(t.neg[i])) throw ShapeError("negation table entry outside the carrier");
      for (int j = 0; j < n; ++j) {
        int m = t.mul[i * n + j];
        if (!in_range(m) || m != t.mul[j * n + i]) throw ShapeError("multiplication table malformed");
        std::uint64_t s = t.add[i * n + j];
        if (s == 0) throw ShapeError("empty hypersum entry for (" + t.symbols[i] + "," + t.symbols[j] + ")");
        if ((s & ~carrier) != 0 || s != t.add[j * n + i]) throw ShapeError("addition table malformed");
      }
    }
    Hyperfield h(Kind::table);
    auto data = std::make_shared<TableData>();
    data->index = std::move(seen);
    data->inv.assign(n, -1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (t.mul[i * n + j] == t.one) data->inv[i] = j;
    data->table = std::move(t);
    h.table_ = std::move(data);
    return h;
  }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::krasner || kind_ == Kind::signs || kind_ == Kind::table; }

  /// Human-facing name; tables report their optional name or "table".
  std::string name() const {
    switch (kind_) {
      case Kind::krasner: return "krasner";
      case Kind::signs: return "signs";
      case Kind::tropical: return "tropical";
      case Kind::phase: return "phase";
      case Kind::table: return table_->table.name.empty() ? "table" : table_->table.name;
    }
    return {};
  }

  /// Stable identifier used in iso-class keys; tables are identified by a
  /// hash of their content so equal tables share keys regardless of name.
  std::string key_name() const {
    if (kind_ != Kind::table) return name();
    const auto& t = table_->table;
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](std::string_view s) {
      for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
      }
      h ^= 0xff;
      h *= 1099511628211ULL;
    };
    for (const auto& s : t.symbols) mix(s);
    mix(std::to_string(t.zero));
    mix(std::to_string(t.one));
    for (int x : t.neg) mix(std::to_string(x));
    for (int x : t.mul) mix(std::to_string(x));
    for (auto x : t.add) mix(std::to_string(x));
    static const char* hex = "0123456789abcdef";
    std::string out = "table#";
    for (int i = 15; i >= 0; --i) out += hex[(h >> (4 * i)) & 0xf];
    return out;
  }

  const HyperfieldTable& table() const {
    if (kind_ != Kind::table) throw ShapeError("hyperfield " + name() + " has no table");
    return table_->table;
  }

  friend bool operator==(const Hyperfield& a, const Hyperfield& b) {
    if (a.kind_ != b.kind_) return false;
    if (a.kind_ != Kind::table) return true;
    const auto& x = a.table_->table;
    const auto& y = b.table_->table;
    return x.symbols == y.symbols && x.zero == y.zero && x.one == y.one && x.neg == y.neg &&
           x.mul == y.mul && x.add == y.add;
  }
  friend bool operator!=(const Hyperfield& a, const Hyperfield& b) { return !(a == b); }

  // ---- carrier ----------------------------------------------------------

  Element zero() const {
    return kind_ == Kind::table ? Element(table_->table.zero) : Element(0);
  }

  Element one() const {
    switch (kind_) {
      case Kind::krasner:
      case Kind::signs: return Element(1);
      case Kind::tropical:
      case Kind::phase: return Element(1, Rational(0));
      case Kind::table: return Element(table_->table.one);
    }
    return {};
  }

  bool is_zero(const Element& a) const { return a == zero(); }

  bool contains(const Element& a) const {
    switch (kind_) {
      case Kind::krasner: return a.value() == 0 && (a.code() == 0 || a.code() == 1);
      case Kind::signs: return a.value() == 0 && a.code() >= -1 && a.code() <= 1;
      case Kind::tropical: return a.code() == 1 || (a.code() == 0 && a.value() == 0);
      case Kind::phase:
        return (a.code() == 0 && a.value() == 0) || (a.code() == 1 && a.value() >= 0 && a.value() < 1);
      case Kind::table: return a.value() == 0 && a.code() >= 0 && a.code() < table_->table.size();
    }
    return false;
  }

  void require(const Element& a) const {
    if (!contains(a)) throw CarrierError("element is not in the carrier of " + name());
  }

  /// All elements, for finite hyperfields (zero included), in Element order.
  std::vector<Element> elements() const {
    std::vector<Element> out;
    switch (kind_) {
      case Kind::krasner: out = {Element(0), Element(1)}; break;
      case Kind::signs: out = {Element(-1), Element(0), Element(1)}; break;
      case Kind::table:
        for (int i = 0; i < table_->table.size(); ++i) out.emplace_back(i);
        break;
      default: throw ShapeError("hyperfield " + name() + " is infinite");
    }
    return out;
  }

  std::vector<Element> units() const {
    std::vector<Element> out;
    for (auto& e : elements())
      if (!is_zero(e)) out.push_back(e);
    return out;
  }

  std::size_t order() const { return elements().size(); }

  // ---- multiplication ---------------------------------------------------

  Element mul(const Element& a, const Element& b) const {
    require(a);
    require(b);
    switch (kind_) {
      case Kind::krasner:
      case Kind::signs: return Element(a.code() * b.code());
      case Kind::tropical:
        if (a.code() == 0 || b.code() == 0) return Element(0);
        return Element(1, a.value() + b.value());
      case Kind::phase:
        if (a.code() == 0 || b.code() == 0) return Element(0);
        return Element(1, mod_one(a.value() + b.value()));
      case Kind::table: {
        const auto& t = table_->table;
        return Element(t.mul[a.code() * t.size() + b.code()]);
      }
    }
    return {};
  }

  Element inv(const Element& a) const {
    require(a);
    if (is_zero(a)) throw CarrierError("inverse of zero in " + name());
    switch (kind_) {
      case Kind::krasner:
      case Kind::signs: return a;
      case Kind::tropical: return Element(1, -a.value());
      case Kind::phase: return Element(1, mod_one(-a.value()));
      case Kind::table: {
        int i = table_->inv[a.code()];
        if (i < 0) throw CarrierError("element " + format(a) + " has no inverse in " + name());
        return Element(i);
      }
    }
    return {};
  }

  Element neg(const Element& a) const {
    require(a);
    switch (kind_) {
      case Kind::krasner:
      case Kind::tropical: return a;
      case Kind::signs: return Element(-a.code());
      case Kind::phase:
        if (a.code() == 0) return a;
        return Element(1, mod_one(a.value() + phase_detail::half()));
      case Kind::table: return Element(table_->table.neg[a.code()]);
    }
    return {};
  }

  /// neg(1_H): the image of an odd permutation sign.
  Element minus_one() const { return neg(one()); }

  // ---- hyperaddition ----------------------------------------------------

  HyperSubset singleton(const Element& a) const {
    require(a);
    if (kind_ == Kind::phase) {
      PhaseRegion r;
      if (a.code() == 0)
        r.zero = true;
      else
        r.points.push_back(a.value());
      return r;
    }
    return FiniteSet{{a}};
  }

  HyperSubset add(const Element& a, const Element& b) const { return add(singleton(a), b); }

  /// S ⊞ x = union over s in S of s ⊞ x.
  HyperSubset add(const HyperSubset& s, const Element& x) const {
    require(x);
    switch (kind_) {
      case Kind::krasner:
      case Kind::signs:
      case Kind::table: {
        const auto& fs = std::get<FiniteSet>(s);
        std::vector<Element> out;
        for (const auto& e : fs.elements) {
          auto part = finite_pair(e, x);
          out.insert(out.end(), part.begin(), part.end());
        }
        return make_finite(std::move(out));
      }
      case Kind::tropical: return tropical_add(s, x);
      case Kind::phase: {
        PhaseRegion r = as_region(s);
        if (x.code() == 0) return r;
        const Rational& t = x.value();
        return phase_detail::rotate(phase_detail::add_one(phase_detail::rotate(r, -t)), t);
      }
    }
    return s;
  }

  /// Iterated hypersum; the empty sum is {0_H}.
  HyperSubset sum(std::span<const Element> terms) const {
    HyperSubset acc = singleton(zero());
    for (const auto& t : terms) acc = add(acc, t);
    return acc;
  }

  /// Whether 0_H lies in the hypersum of `terms`.
  bool contains_zero(std::span<const Element> terms) const {
    switch (kind_) {
      case Kind::krasner: {
        int ones = 0;
        for (const auto& t : terms) {
          require(t);
          ones += t.code();
        }
        return ones != 1;
      }
      case Kind::signs: {
        bool pos = false, negv = false;
        for (const auto& t : terms) {
          require(t);
          pos |= t.code() == 1;
          negv |= t.code() == -1;
        }
        return pos == negv;
      }
      case Kind::tropical: {
        const Rational* best = nullptr;
        int hits = 0;
        for (const auto& t : terms) {
          require(t);
          if (t.code() == 0) continue;
          if (!best || t.value() > *best) {
            best = &t.value();
            hits = 1;
          } else if (t.value() == *best) {
            ++hits;
          }
        }
        return hits != 1;
      }
      case Kind::phase:
      case Kind::table: return member(sum(terms), zero());
    }
    return false;
  }

  bool member(const HyperSubset& s, const Element& x) const {
    if (!contains(x)) return false;
    if (auto* f = std::get_if<FiniteSet>(&s))
      return std::binary_search(f->elements.begin(), f->elements.end(), x);
    if (auto* d = std::get_if<TropicalDownSet>(&s)) return x.code() == 0 || x.value() <= d->bound;
    const auto& r = std::get<PhaseRegion>(s);
    if (x.code() == 0) return r.zero;
    return phase_detail::region_has_angle(r, x.value());
  }

  /// a ⊙ S for a unit a.
  HyperSubset scale(const HyperSubset& s, const Element& a) const {
    if (is_zero(a)) throw CarrierError("scaling a hypersum by zero");
    if (auto* f = std::get_if<FiniteSet>(&s)) {
      std::vector<Element> out;
      for (const auto& e : f->elements) out.push_back(mul(a, e));
      return make_finite(std::move(out));
    }
    if (auto* d = std::get_if<TropicalDownSet>(&s)) return TropicalDownSet{d->bound + a.value()};
    return phase_detail::rotate(std::get<PhaseRegion>(s), a.value());
  }

  /// Finite set of units meeting every nonempty cell of the common refinement
  /// of `sets`: a unit lies in all of them iff one of these does.
  std::vector<Element> witnesses(std::span<const HyperSubset> sets) const {
    if (is_finite()) return units();
    std::vector<Rational> marks;
    for (const auto& s : sets) {
      if (auto* f = std::get_if<FiniteSet>(&s)) {
        for (const auto& e : f->elements)
          if (e.code() == 1) marks.push_back(e.value());
      } else if (auto* d = std::get_if<TropicalDownSet>(&s)) {
        marks.push_back(d->bound);
      } else {
        const auto& r = std::get<PhaseRegion>(s);
        marks.insert(marks.end(), r.points.begin(), r.points.end());
        for (const auto& a : r.arcs) {
          marks.push_back(a.start);
          marks.push_back(mod_one(a.start + a.length));
        }
      }
    }
    std::sort(marks.begin(), marks.end());
    marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
    std::vector<Element> out;
    if (marks.empty()) {
      out.push_back(one());
      return out;
    }
    for (const auto& m : marks) out.emplace_back(1, m);
    if (kind_ == Kind::tropical) {
      out.emplace_back(1, marks.front() - 1);
      out.emplace_back(1, marks.back() + 1);
      for (std::size_t i = 0; i + 1 < marks.size(); ++i) out.emplace_back(1, (marks[i] + marks[i + 1]) / 2);
    } else {
      for (std::size_t i = 0; i < marks.size(); ++i) {
        Rational mid = i + 1 < marks.size() ? (marks[i] + marks[i + 1]) / 2
                                            : mod_one((marks.back() + marks.front() + 1) / 2);
        out.emplace_back(1, mid);
      }
    }
    return out;
  }

  // ---- text -------------------------------------------------------------

  std::string format(const Element& a) const {
    require(a);
    switch (kind_) {
      case Kind::krasner:
      case Kind::signs: return std::to_string(a.code());
      case Kind::tropical: return a.code() == 0 ? "-inf" : to_string(a.value());
      case Kind::phase: return a.code() == 0 ? "0" : "turn:" + to_string(a.value());
      case Kind::table: return table_->table.symbols[a.code()];
    }
    return {};
  }

  Element parse(std::string_view s) const {
    auto bad = [&]() {
      return CarrierError("\"" + std::string(s) + "\" is not an element of " + name());
    };
    switch (kind_) {
      case Kind::krasner:
        if (s == "0") return Element(0);
        if (s == "1") return Element(1);
        throw bad();
      case Kind::signs:
        if (s == "-1") return Element(-1);
        if (s == "0") return Element(0);
        if (s == "1") return Element(1);
        throw bad();
      case Kind::tropical:
        if (s == "-inf") return Element(0);
        try {
          return Element(1, parse_rational(s));
        } catch (const FormatError&) {
          throw bad();
        }
      case Kind::phase:
        if (s == "0") return Element(0);
        if (s.substr(0, 5) == "turn:") {
          try {
            return Element(1, mod_one(parse_rational(s.substr(5))));
          } catch (const FormatError&) {
            throw bad();
          }
        }
        throw bad();
      case Kind::table: {
        auto it = table_->index.find(std::string(s));
        if (it == table_->index.end()) throw bad();
        return Element(it->second);
      }
    }
    throw bad();
  }

  std::string describe(const HyperSubset& s) const {
    if (auto* f = std::get_if<FiniteSet>(&s)) {
      std::string out = "{";
      for (std::size_t i = 0; i < f->elements.size(); ++i)
        out += (i ? ", " : "") + format(f->elements[i]);
      return out + "}";
    }
    if (auto* d = std::get_if<TropicalDownSet>(&s)) return "[-inf, " + to_string(d->bound) + "]";
    const auto& r = std::get<PhaseRegion>(s);
    std::vector<std::string> parts;
    if (r.zero) parts.push_back("0");
    for (const auto& p : r.points) parts.push_back("turn:" + to_string(p));
    for (const auto& a : r.arcs)
      parts.push_back("arc(turn:" + to_string(a.start) + " +" + to_string(a.length) + ")");
    std::string out = "{";
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
    return out + "}";
  }

 private:
  struct TableData {
    HyperfieldTable table;
    std::unordered_map<std::string, int> index;
    std::vector<int> inv;
  };

  explicit Hyperfield(Kind k) : kind_(k) {}

  static HyperSubset make_finite(std::vector<Element> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return FiniteSet{std::move(v)};
  }

  std::vector<Element> finite_pair(const Element& a, const Element& b) const {
    switch (kind_) {
      case Kind::krasner:
        if (a.code() == 0) return {b};
        if (b.code() == 0) return {a};
        return {Element(0), Element(1)};
      case Kind::signs:
        if (a.code() == 0) return {b};
        if (b.code() == 0 || a == b) return {a};
        return {Element(-1), Element(0), Element(1)};
      case Kind::table: {
        const auto& t = table_->table;
        std::vector<Element> out;
        std::uint64_t m = t.add[a.code() * t.size() + b.code()];
        for (int i = 0; i < t.size(); ++i)
          if ((m >> i) & 1U) out.emplace_back(i);
        return out;
      }
      default: return {};
    }
  }

  HyperSubset tropical_add(const HyperSubset& s, const Element& x) const {
    if (auto* d = std::get_if<TropicalDownSet>(&s)) {
      if (x.code() == 1 && x.value() > d->bound) return FiniteSet{{x}};
      return *d;
    }
    const auto& fs = std::get<FiniteSet>(s);
    std::vector<Element> points;
    const Rational* down = nullptr;
    std::vector<Rational> bounds;
    for (const auto& e : fs.elements) {
      if (e.code() == 0) {
        points.push_back(x);
      } else if (x.code() == 0) {
        points.push_back(e);
      } else if (e.value() == x.value()) {
        bounds.push_back(e.value());
      } else {
        points.push_back(e.value() > x.value() ? e : x);
      }
    }
    for (const auto& b : bounds)
      if (!down || b > *down) down = &b;
    if (!down) return make_finite(std::move(points));
    for (const auto& p : points)
      if (p.code() == 1 && p.value() > *down)
        throw Error("tropical union is not a down-set or a finite set");
    return TropicalDownSet{*down};
  }

  static PhaseRegion as_region(const HyperSubset& s) {
    if (auto* r = std::get_if<PhaseRegion>(&s)) return *r;
    PhaseRegion out;
    for (const auto& e : std::get<FiniteSet>(s).elements) {
      if (e.code() == 0)
        out.zero = true;
      else
        out.points.push_back(e.value());
    }
    return phase_detail::normalize(out);
  }

  Kind kind_;
  std::shared_ptr<const TableData> table_;
};

/// Table form of a finite built-in (or a copy of a table hyperfield).
inline HyperfieldTable to_table(const Hyperfield& h) {
  if (h.kind() == Kind::table) return h.table();
  auto elems = h.elements();
  const int n = static_cast<int>(elems.size());
  auto idx = [&](const Element& e) {
    return static_cast<int>(std::find(elems.begin(), elems.end(), e) - elems.begin());
  };
  HyperfieldTable t;
  t.name = h.name();
  for (const auto& e : elems) t.symbols.push_back(h.format(e));
  t.zero = idx(h.zero());
  t.one = idx(h.one());
  t.neg.resize(n);
  t.mul.resize(n * n);
  t.add.resize(n * n);
  for (int i = 0; i < n; ++i) {
    t.neg[i] = idx(h.neg(elems[i]));
    for (int j = 0; j < n; ++j) {
      t.mul[i * n + j] = idx(h.mul(elems[i], elems[j]));
      std::uint64_t m = 0;
      const HyperSubset sum = h.add(elems[i], elems[j]);
      for (const auto& e : std::get<FiniteSet>(sum).elements) m |= std::uint64_t{1} << idx(e);
      t.add[i * n + j] = m;
    }
  }
  return t;
}

/// Exhaustive axiom check of a finite hyperfield.
inline Report verify_hyperfield_axioms(const Hyperfield& h) {
  if (!h.is_finite()) throw ShapeError("cannot verify axioms of infinite hyperfield " + h.name());
  Report rep("hyperfield-axioms");
  const auto el = h.elements();
  const Element z = h.zero(), o = h.one();
  auto f = [&](const Element& e) { return h.format(e); };
  auto set_of = [&](const HyperSubset& s) { return std::get<FiniteSet>(s).elements; };
  auto sum_sets = [&](const std::vector<Element>& xs, const std::vector<Element>& ys) {
    std::vector<Element> out;
    for (const auto& x : xs)
      for (const auto& y : ys) {
        auto part = set_of(h.add(x, y));
        out.insert(out.end(), part.begin(), part.end());
      }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };

  if (z == o) rep.add({"one-ne-zero", {f(z)}, "1 equals 0"});

  for (const auto& a : el)
    if (set_of(h.add(a, z)) != std::vector<Element>{a})
      rep.add({"identity", {f(a)}, f(a) + " + 0 = " + h.describe(h.add(a, z))});
  for (const auto& c : el) {
    if (c == z) continue;
    bool acts = true;
    for (const auto& a : el) acts = acts && set_of(h.add(a, c)) == std::vector<Element>{a};
    if (acts) rep.add({"identity-unique", {f(c)}, f(c) + " is a second additive identity"});
  }

  for (const auto& a : el) {
    std::vector<Element> opp;
    for (const auto& b : el)
      if (h.member(h.add(a, b), z)) opp.push_back(b);
    if (opp != std::vector<Element>{h.neg(a)}) {
      std::string d = "0 lies in " + f(a) + " + b exactly for b in {";
      for (std::size_t i = 0; i < opp.size(); ++i) d += (i ? ", " : "") + f(opp[i]);
      rep.add({"inverse", {f(a)}, d + "}, negation table says " + f(h.neg(a))});
    }
  }

  for (const auto& a : el)
    for (const auto& b : el)
      if (set_of(h.add(a, b)) != set_of(h.add(b, a)))
        rep.add({"add-commutative", {f(a), f(b)}, ""});

  for (const auto& a : el)
    for (const auto& b : el)
      for (const auto& c : el) {
        auto left = sum_sets(set_of(h.add(a, b)), {c});
        auto right = sum_sets({a}, set_of(h.add(b, c)));
        if (left != right)
          rep.add({"add-associative", {f(a), f(b), f(c)},
                   "(a+b)+c = " + h.describe(FiniteSet{left}) + ", a+(b+c) = " + h.describe(FiniteSet{right})});
      }

  for (const auto& a : el)
    for (const auto& b : el)
      for (const auto& c : el)
        if (h.member(h.add(b, c), a) && !h.member(h.add(a, h.neg(b)), c))
          rep.add({"reversibility", {f(a), f(b), f(c)},
                   f(a) + " in " + f(b) + " + " + f(c) + " but " + f(c) + " not in " + f(a) + " - " + f(b) +
                       " = " + h.describe(h.add(a, h.neg(b)))});

  for (const auto& a : el) {
    if (h.mul(o, a) != a) rep.add({"mul-identity", {f(a)}, "1 * a = " + f(h.mul(o, a))});
    if (h.mul(z, a) != z) rep.add({"zero-absorbing", {f(a)}, "0 * a = " + f(h.mul(z, a))});
  }
  for (const auto& a : el)
    for (const auto& b : el) {
      if (h.mul(a, b) != h.mul(b, a)) rep.add({"mul-commutative", {f(a), f(b)}, ""});
      if (a != z && b != z && h.mul(a, b) == z)
        rep.add({"mul-group", {f(a), f(b)}, "product of units is zero"});
      for (const auto& c : el)
        if (h.mul(h.mul(a, b), c) != h.mul(a, h.mul(b, c))) rep.add({"mul-associative", {f(a), f(b), f(c)}, ""});
    }
  for (const auto& a : el) {
    if (a == z) continue;
    bool has_inverse = false;
    for (const auto& b : el) has_inverse = has_inverse || h.mul(a, b) == o;
    if (!has_inverse) rep.add({"mul-group", {f(a)}, "no multiplicative inverse"});
  }

  for (const auto& a : el)
    for (const auto& b : el)
      for (const auto& c : el) {
        std::vector<Element> left;
        for (const auto& s : set_of(h.add(b, c))) left.push_back(h.mul(a, s));
        std::sort(left.begin(), left.end());
        left.erase(std::unique(left.begin(), left.end()), left.end());
        auto right = set_of(h.add(h.mul(a, b), h.mul(a, c)));
        if (left != right)
          rep.add({"distributivity", {f(a), f(b), f(c)},
                   "a(b+c) = " + h.describe(FiniteSet{left}) + ", ab+ac = " + h.describe(FiniteSet{right})});
      }
  return rep;
}

/// A map between hyperfields, either a named rule or an explicit table.
class Homomorphism {
 public:
  static Homomorphism identity(Hyperfield h) { return Homomorphism(h, h, Rule::identity, {}); }

  /// The unique map to the Krasner hyperfield: 0 to 0, every unit to 1.
  static Homomorphism canonical_to_krasner(Hyperfield h) {
    return Homomorphism(std::move(h), Hyperfield::krasner(), Rule::to_krasner, {});
  }

  /// Explicit map; the source must be finite and the map total on it.
  static Homomorphism from_map(Hyperfield source, Hyperfield target,
                               std::vector<std::pair<Element, Element>> map) {
    if (!source.is_finite()) throw ShapeError("explicit homomorphisms need a finite source");
    std::sort(map.begin(), map.end());
    for (const auto& [a, b] : map) {
      source.require(a);
      target.require(b);
    }
    for (const auto& a : source.elements()) {
      auto it = std::lower_bound(map.begin(), map.end(), std::make_pair(a, Element()),
                                 [](const auto& x, const auto& y) { return x.first < y.first; });
      if (it == map.end() || it->first != a)
        throw ShapeError("homomorphism map misses source element " + source.format(a));
    }
    return Homomorphism(std::move(source), std::move(target), Rule::explicit_map, std::move(map));
  }

  const Hyperfield& source() const { return source_; }
  const Hyperfield& target() const { return target_; }

  Element apply(const Element& a) const {
    source_.require(a);
    switch (rule_) {
      case Rule::identity: return a;
      case Rule::to_krasner: return Element(source_.is_zero(a) ? 0 : 1);
      case Rule::explicit_map: {
        auto it = std::lower_bound(map_.begin(), map_.end(), std::make_pair(a, Element()),
                                   [](const auto& x, const auto& y) { return x.first < y.first; });
        return it->second;
      }
    }
    return {};
  }

 private:
  enum class Rule { identity, to_krasner, explicit_map };

  Homomorphism(Hyperfield s, Hyperfield t, Rule r, std::vector<std::pair<Element, Element>> m)
      : source_(std::move(s)), target_(std::move(t)), rule_(r), map_(std::move(m)) {}

  Hyperfield source_;
  Hyperfield target_;
  Rule rule_;
  std::vector<std::pair<Element, Element>> map_;
};

inline Report verify_homomorphism(const Homomorphism& f) {
  const Hyperfield& s = f.source();
  const Hyperfield& t = f.target();
  if (!s.is_finite()) throw ShapeError("cannot verify a homomorphism with infinite source " + s.name());
  Report rep("homomorphism");
  auto fs = [&](const Element& e) { return s.format(e); };
  auto ft = [&](const Element& e) { return t.format(e); };
  if (f.apply(s.zero()) != t.zero()) rep.add({"zero", {fs(s.zero())}, "f(0) = " + ft(f.apply(s.zero()))});
  if (f.apply(s.one()) != t.one()) rep.add({"one", {fs(s.one())}, "f(1) = " + ft(f.apply(s.one()))});
  const auto el = s.elements();
  for (const auto& a : el)
    for (const auto& b : el) {
      Element lhs = f.apply(s.mul(a, b));
      Element rhs = t.mul(f.apply(a), f.apply(b));
      if (lhs != rhs)
        rep.add({"multiplicative", {fs(a), fs(b)}, "f(ab) = " + ft(lhs) + " but f(a)f(b) = " + ft(rhs)});
    }
  for (const auto& a : el)
    for (const auto& b : el) {
      HyperSubset image_sum = t.add(f.apply(a), f.apply(b));
      const HyperSubset source_sum = s.add(a, b);
      for (const auto& c : std::get<FiniteSet>(source_sum).elements)
        if (!t.member(image_sum, f.apply(c)))
          rep.add({"additive", {fs(a), fs(b), fs(c)},
                   "f(" + fs(c) + ") = " + ft(f.apply(c)) + " not in " + t.describe(image_sum)});
    }
  return rep;
}

}  // namespace hypermatroid
