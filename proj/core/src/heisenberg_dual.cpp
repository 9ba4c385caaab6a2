#include "coadjoint/heisenberg_dual.hpp"

#include <algorithm>
#include <stdexcept>

namespace coadjoint::dual {

namespace {

// Lower/upper endpoint lattice: when values tie, the closed bound is the
// weaker lower bound and the weaker upper bound.
struct FiniteBound {
  Rational value;
  bool closed;
};

FiniteBound max_lower(const FiniteBound& a, const FiniteBound& b) {
  if (a.value > b.value) return a;
  if (b.value > a.value) return b;
  return {a.value, a.closed && b.closed};
}

FiniteBound min_upper(const FiniteBound& a, const FiniteBound& b) {
  if (a.value < b.value) return a;
  if (b.value < a.value) return b;
  return {a.value, a.closed && b.closed};
}

bool nonempty_axis(const FiniteBound& lo, const FiniteBound& hi) {
  if (lo.value < hi.value) return true;
  return lo.value == hi.value && lo.closed && hi.closed;
}

void require_same_ambient(const DualSubset& s, const DualSubset& t) {
  if (s.n != t.n) throw std::invalid_argument("dual subsets live over different n");
}

}  // namespace

int compare(const Bound& a, const Bound& b) {
  const auto level = [](const Bound& x) {
    return x.kind == Bound::Kind::NegInf ? -1 : x.kind == Bound::Kind::PosInf ? 1 : 0;
  };
  const int la = level(a), lb = level(b);
  if (la != lb) return la < lb ? -1 : 1;
  if (la != 0) return 0;
  return a.value < b.value ? -1 : a.value > b.value ? 1 : 0;
}

Interval Interval::closed(Rational lo, Rational hi) {
  return {Bound::at(std::move(lo)), Bound::at(std::move(hi)), true, true};
}

Interval Interval::open(Rational lo, Rational hi) {
  return {Bound::at(std::move(lo)), Bound::at(std::move(hi)), false, false};
}

bool Interval::empty() const {
  const int c = compare(lo, hi);
  if (c > 0) return true;
  if (c == 0) {
    if (!lo.finite()) return true;         // degenerate at an infinity
    if (lo.is_zero()) return true;         // the single point would be 0
    return !(lo_closed && hi_closed);
  }
  // (lo, hi) nonempty as an interval; within R^x it could still be {0} only
  // if lo = hi = 0, handled above.
  return false;
}

bool operator==(const Interval& a, const Interval& b) {
  if (!(a.lo == b.lo) || !(a.hi == b.hi)) return false;
  const bool alc = a.lo.finite() ? a.lo_closed : false;
  const bool blc = b.lo.finite() ? b.lo_closed : false;
  const bool ahc = a.hi.finite() ? a.hi_closed : false;
  const bool bhc = b.hi.finite() ? b.hi_closed : false;
  return alc == blc && ahc == bhc;
}

Interval intersect(const Interval& a, const Interval& b) {
  Interval out;
  if (compare(a.lo, b.lo) > 0 || (compare(a.lo, b.lo) == 0 && !a.lo_closed)) {
    out.lo = a.lo;
    out.lo_closed = a.lo_closed && (compare(a.lo, b.lo) > 0 || b.lo_closed);
  } else {
    out.lo = b.lo;
    out.lo_closed = b.lo_closed && (compare(a.lo, b.lo) < 0 || a.lo_closed);
  }
  if (compare(a.hi, b.hi) < 0 || (compare(a.hi, b.hi) == 0 && !a.hi_closed)) {
    out.hi = a.hi;
    out.hi_closed = a.hi_closed && (compare(a.hi, b.hi) < 0 || b.hi_closed);
  } else {
    out.hi = b.hi;
    out.hi_closed = b.hi_closed && (compare(a.hi, b.hi) > 0 || a.hi_closed);
  }
  return out;
}

Box Box::closed(Vec min, Vec max) {
  Box b;
  b.min_closed.assign(min.size(), true);
  b.max_closed.assign(max.size(), true);
  b.min = std::move(min);
  b.max = std::move(max);
  return b;
}

Box Box::open(Vec min, Vec max) {
  Box b;
  b.min_closed.assign(min.size(), false);
  b.max_closed.assign(max.size(), false);
  b.min = std::move(min);
  b.max = std::move(max);
  return b;
}

bool Box::empty() const {
  for (std::size_t a = 0; a < dim(); ++a)
    if (!nonempty_axis({min[a], min_closed[a]}, {max[a], max_closed[a]})) return true;
  return false;
}

bool Box::uniformly_closed() const {
  return std::all_of(min_closed.begin(), min_closed.end(), [](bool c) { return c; }) &&
         std::all_of(max_closed.begin(), max_closed.end(), [](bool c) { return c; });
}

bool Box::uniformly_open() const {
  return std::none_of(min_closed.begin(), min_closed.end(), [](bool c) { return c; }) &&
         std::none_of(max_closed.begin(), max_closed.end(), [](bool c) { return c; });
}

Box Box::closure() const {
  Box b = *this;
  b.min_closed.assign(dim(), true);
  b.max_closed.assign(dim(), true);
  return b;
}

std::optional<Box> intersect(const Box& a, const Box& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("box dimension mismatch");
  Box out = a;
  for (std::size_t ax = 0; ax < a.dim(); ++ax) {
    const FiniteBound lo = max_lower({a.min[ax], a.min_closed[ax]}, {b.min[ax], b.min_closed[ax]});
    const FiniteBound hi = min_upper({a.max[ax], a.max_closed[ax]}, {b.max[ax], b.max_closed[ax]});
    if (!nonempty_axis(lo, hi)) return std::nullopt;
    out.min[ax] = lo.value;
    out.min_closed[ax] = lo.closed;
    out.max[ax] = hi.value;
    out.max_closed[ax] = hi.closed;
  }
  return out;
}

std::vector<Box> difference(const Box& piece, const Box& cut) {
  if (piece.dim() != cut.dim()) throw std::invalid_argument("box dimension mismatch");
  std::vector<Box> out;
  if (piece.empty()) return out;
  Box core = piece;  // the part that still meets cut on every axis handled so far
  for (std::size_t ax = 0; ax < piece.dim(); ++ax) {
    // Piece strictly below the cut: x_ax < cut.min, or = with an open cut face.
    Box below = core;
    below.max[ax] = cut.min[ax];
    below.max_closed[ax] = !cut.min_closed[ax];
    const FiniteBound below_hi =
        min_upper({core.max[ax], core.max_closed[ax]}, {below.max[ax], below.max_closed[ax]});
    below.max[ax] = below_hi.value;
    below.max_closed[ax] = below_hi.closed;
    if (!below.empty()) out.push_back(below);

    Box above = core;
    above.min[ax] = cut.max[ax];
    above.min_closed[ax] = !cut.max_closed[ax];
    const FiniteBound above_lo =
        max_lower({core.min[ax], core.min_closed[ax]}, {above.min[ax], above.min_closed[ax]});
    above.min[ax] = above_lo.value;
    above.min_closed[ax] = above_lo.closed;
    if (!above.empty()) out.push_back(above);

    const FiniteBound lo =
        max_lower({core.min[ax], core.min_closed[ax]}, {cut.min[ax], cut.min_closed[ax]});
    const FiniteBound hi =
        min_upper({core.max[ax], core.max_closed[ax]}, {cut.max[ax], cut.max_closed[ax]});
    if (!nonempty_axis(lo, hi)) return out;  // nothing of core meets cut
    core.min[ax] = lo.value;
    core.min_closed[ax] = lo.closed;
    core.max[ax] = hi.value;
    core.max_closed[ax] = hi.closed;
  }
  // core is contained in cut: removed.
  return out;
}

bool covered(const Box& b, const std::vector<Box>& cover) {
  std::vector<Box> work;
  if (!b.empty()) work.push_back(b);
  for (const Box& c : cover) {
    if (work.empty()) return true;
    if (c.empty()) continue;
    std::vector<Box> next;
    for (const Box& piece : work) {
      auto rest = difference(piece, c);
      next.insert(next.end(), rest.begin(), rest.end());
    }
    work = std::move(next);
  }
  return work.empty();
}

DualSubset DualSubset::empty_set(std::size_t n) {
  DualSubset s;
  s.n = n;
  return s;
}

DualSubset DualSubset::gamma1_all(std::size_t n) {
  DualSubset s;
  s.n = n;
  s.part1.push_back({Bound::neg_inf(), Bound::at(Rational(0)), false, false});
  s.part1.push_back({Bound::at(Rational(0)), Bound::pos_inf(), false, false});
  return s;
}

DualSubset DualSubset::gamma2_all(std::size_t n) {
  DualSubset s;
  s.n = n;
  s.part2_all = true;
  return s;
}

DualSubset canonicalize(DualSubset s) {
  if (s.n < 1) throw std::invalid_argument("dual subset needs n >= 1");
  std::vector<Interval> split;
  for (Interval iv : s.part1) {
    if (iv.lo.finite() && iv.lo.is_zero()) iv.lo_closed = false;
    if (iv.hi.finite() && iv.hi.is_zero()) iv.hi_closed = false;
    const Bound zero = Bound::at(Rational(0));
    if (compare(iv.lo, zero) < 0 && compare(iv.hi, zero) > 0) {
      Interval neg = iv, pos = iv;
      neg.hi = zero;
      neg.hi_closed = false;
      pos.lo = zero;
      pos.lo_closed = false;
      if (!neg.empty()) split.push_back(neg);
      if (!pos.empty()) split.push_back(pos);
    } else if (!iv.empty()) {
      split.push_back(iv);
    }
  }
  std::sort(split.begin(), split.end(), [](const Interval& a, const Interval& b) {
    const int c = compare(a.lo, b.lo);
    if (c != 0) return c < 0;
    if (a.lo_closed != b.lo_closed) return a.lo_closed;  // closed bound starts earlier
    return compare(a.hi, b.hi) < 0;
  });
  std::vector<Interval> merged;
  for (const Interval& iv : split) {
    if (!merged.empty()) {
      Interval& last = merged.back();
      const int c = compare(last.hi, iv.lo);
      const bool touching =
          c > 0 || (c == 0 && last.hi.finite() && !last.hi.is_zero() && (last.hi_closed || iv.lo_closed));
      if (touching) {
        const int ch = compare(iv.hi, last.hi);
        if (ch > 0 || (ch == 0 && iv.hi_closed)) {
          last.hi = iv.hi;
          last.hi_closed = iv.hi_closed;
        }
        continue;
      }
    }
    merged.push_back(iv);
  }
  s.part1 = std::move(merged);

  if (!s.part2_all) {
    std::vector<Box> boxes;
    for (const Box& b : s.part2) {
      if (b.dim() != 2 * s.n) throw std::invalid_argument("box dimension must be 2n");
      if (!b.empty()) boxes.push_back(b);
    }
    s.part2 = std::move(boxes);
  } else {
    s.part2.clear();
  }
  return s;
}

bool accumulates_at_zero(const DualSubset& s) {
  for (const Interval& iv : s.part1)
    if ((iv.lo.finite() && iv.lo.is_zero()) || (iv.hi.finite() && iv.hi.is_zero())) return true;
  return false;
}

DualSubset closure(const DualSubset& s) {
  DualSubset out = canonicalize(s);
  for (Interval& iv : out.part1) {
    if (iv.lo.finite() && !iv.lo.is_zero()) iv.lo_closed = true;
    if (iv.hi.finite() && !iv.hi.is_zero()) iv.hi_closed = true;
  }
  if (!out.part2_all)
    for (Box& b : out.part2) b = b.closure();
  if (accumulates_at_zero(out)) {
    out.part2_all = true;
    out.part2.clear();
  }
  return canonicalize(std::move(out));
}

std::string reason_code(QcReason reason) {
  switch (reason) {
    case QcReason::CharacterPartNotCompact: return "character-part-not-compact";
    case QcReason::Gamma1NotClosed: return "gamma1-part-not-closed";
    case QcReason::Gamma1Unbounded: return "gamma1-part-unbounded";
    case QcReason::EmptyCharacterPartWithZeroAccumulation:
      return "empty-character-part-with-0-accumulation";
  }
  return "?";
}

QcDecision is_quasi_compact(const DualSubset& raw) {
  const DualSubset s = canonicalize(raw);
  QcDecision d;

  // (1) The character part must be compact: boxes are bounded by
  // construction, so this is closedness; ALL is unbounded.
  bool part2_compact = true;
  if (s.part2_all) {
    part2_compact = false;
  } else {
    for (const Box& b : s.part2)
      if (!covered(b.closure(), s.part2)) {
        part2_compact = false;
        break;
      }
  }
  if (!part2_compact) d.reasons.push_back(QcReason::CharacterPartNotCompact);

  // (2) The Gamma1 part must be closed in R^x and bounded. On canonical
  // components, closed means every finite nonzero endpoint is closed
  // (endpoints at 0 are outside the space).
  bool closed_in_pieces = true;
  bool bounded = true;
  for (const Interval& iv : s.part1) {
    if (!iv.lo.finite() || !iv.hi.finite()) bounded = false;
    if (iv.lo.finite() && !iv.lo.is_zero() && !iv.lo_closed) closed_in_pieces = false;
    if (iv.hi.finite() && !iv.hi.is_zero() && !iv.hi_closed) closed_in_pieces = false;
  }
  if (!closed_in_pieces) d.reasons.push_back(QcReason::Gamma1NotClosed);
  if (!bounded) d.reasons.push_back(QcReason::Gamma1Unbounded);

  // (3) Accumulation at 0 needs a character in the set.
  if (accumulates_at_zero(s) && s.part2_empty())
    d.reasons.push_back(QcReason::EmptyCharacterPartWithZeroAccumulation);

  d.quasi_compact = d.reasons.empty();
  return d;
}

DualSubset intersect(const DualSubset& sa, const DualSubset& sb) {
  require_same_ambient(sa, sb);
  const DualSubset s = canonicalize(sa), t = canonicalize(sb);
  DualSubset out;
  out.n = s.n;
  for (const Interval& a : s.part1)
    for (const Interval& b : t.part1) {
      Interval c = intersect(a, b);
      if (!c.empty()) out.part1.push_back(c);
    }
  if (s.part2_all && t.part2_all) {
    out.part2_all = true;
  } else if (s.part2_all) {
    out.part2 = t.part2;
  } else if (t.part2_all) {
    out.part2 = s.part2;
  } else {
    for (const Box& a : s.part2)
      for (const Box& b : t.part2)
        if (auto c = intersect(a, b)) out.part2.push_back(*c);
  }
  return canonicalize(std::move(out));
}

DualSubset unite(const DualSubset& sa, const DualSubset& sb) {
  require_same_ambient(sa, sb);
  DualSubset out;
  out.n = sa.n;
  out.part1 = sa.part1;
  out.part1.insert(out.part1.end(), sb.part1.begin(), sb.part1.end());
  if (sa.part2_all || sb.part2_all) {
    out.part2_all = true;
  } else {
    out.part2 = sa.part2;
    out.part2.insert(out.part2.end(), sb.part2.begin(), sb.part2.end());
  }
  return canonicalize(std::move(out));
}

bool subset_of(const DualSubset& sa, const DualSubset& sb) {
  require_same_ambient(sa, sb);
  const DualSubset s = canonicalize(sa), t = canonicalize(sb);
  // Gamma1: canonical interval decompositions are unique, so s1 within t1
  // iff adding s1 to t1 changes nothing.
  const DualSubset u = unite(s, t);
  if (!(u.part1.size() == t.part1.size() &&
        std::equal(u.part1.begin(), u.part1.end(), t.part1.begin(),
                   [](const Interval& x, const Interval& y) { return x == y; })))
    return false;
  if (t.part2_all) return true;
  if (s.part2_all) return false;  // boxes are bounded, ALL is not
  for (const Box& b : s.part2)
    if (!covered(b, t.part2)) return false;
  return true;
}

bool set_equal(const DualSubset& s, const DualSubset& t) {
  return subset_of(s, t) && subset_of(t, s);
}

DualSubset r_act(const Rational& t, const DualSubset& raw) {
  DualSubset s = canonicalize(raw);
  if (t == 0) {
    if (s.empty()) return DualSubset::empty_set(s.n);
    // Everything collapses to the distinguished point: the origin character.
    DualSubset out;
    out.n = s.n;
    const Vec origin(2 * s.n, Rational(0));
    out.part2.push_back(Box::closed(origin, origin));
    return out;
  }
  DualSubset out;
  out.n = s.n;
  const auto scale_bound = [&](const Bound& b) {
    if (!b.finite()) {
      const bool flip = (t < 0);
      if (b.kind == Bound::Kind::NegInf) return flip ? Bound::pos_inf() : Bound::neg_inf();
      return flip ? Bound::neg_inf() : Bound::pos_inf();
    }
    return Bound::at(t * b.value);
  };
  for (const Interval& iv : s.part1) {
    Interval scaled;
    if (t > 0) {
      scaled = {scale_bound(iv.lo), scale_bound(iv.hi), iv.lo_closed, iv.hi_closed};
    } else {
      scaled = {scale_bound(iv.hi), scale_bound(iv.lo), iv.hi_closed, iv.lo_closed};
    }
    out.part1.push_back(scaled);
  }
  out.part2_all = s.part2_all;
  if (!s.part2_all) {
    for (const Box& b : s.part2) {
      Box scaled = b;
      for (std::size_t ax = 0; ax < b.dim(); ++ax) {
        Rational lo = t * b.min[ax], hi = t * b.max[ax];
        bool loc = b.min_closed[ax], hic = b.max_closed[ax];
        if (t < 0) {
          std::swap(lo, hi);
          std::swap(loc, hic);
        }
        scaled.min[ax] = lo;
        scaled.max[ax] = hi;
        scaled.min_closed[ax] = loc;
        scaled.max_closed[ax] = hic;
      }
      out.part2.push_back(scaled);
    }
  }
  return canonicalize(std::move(out));
}

}  // namespace coadjoint::dual
