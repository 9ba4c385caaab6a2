#ifndef COADJOINT_HEISENBERG_DUAL_HPP
#define COADJOINT_HEISENBERG_DUAL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coadjoint/rational.hpp"

namespace coadjoint::dual {

/// The unitary dual of the Heisenberg group H_{2n+1} as a set:
///   Gamma1 ~ R^x   (infinite-dimensional representations, Kirillov parameter)
///   Gamma2 ~ R^{2n} (characters)
/// with the non-Hausdorff topology in which a set is closed iff both parts
/// are closed in their own topology and, whenever 0 is an accumulation
/// point of the Gamma1 part, ALL of Gamma2 is contained in the set.
struct DualSpace {
  std::size_t n = 1;
  std::size_t character_dim() const { return 2 * n; }
};

/// Endpoint of a Gamma1 interval: a rational, or one of the infinities.
struct Bound {
  enum class Kind { NegInf, Finite, PosInf };
  Kind kind = Kind::Finite;
  Rational value;

  static Bound neg_inf() { return {Kind::NegInf, Rational(0)}; }
  static Bound pos_inf() { return {Kind::PosInf, Rational(0)}; }
  static Bound at(Rational v) { return {Kind::Finite, std::move(v)}; }

  bool finite() const { return kind == Kind::Finite; }
  bool is_zero() const { return finite() && value == 0; }

  friend bool operator==(const Bound& a, const Bound& b) {
    return a.kind == b.kind && (a.kind != Kind::Finite || a.value == b.value);
  }
};

/// -1 / 0 / +1 comparison treating the infinities as extreme values.
int compare(const Bound& a, const Bound& b);

/// A rational interval interpreted within R^x: the point 0 is never a
/// member. Closedness flags matter only at finite endpoints.
struct Interval {
  Bound lo, hi;
  bool lo_closed = false;
  bool hi_closed = false;

  static Interval closed(Rational lo, Rational hi);
  static Interval open(Rational lo, Rational hi);

  bool empty() const;

  friend bool operator==(const Interval& a, const Interval& b);
};

/// Intersection as subsets of R^x (possibly empty; caller re-canonicalizes).
Interval intersect(const Interval& a, const Interval& b);

/// An axis-aligned rational box in R^{2n}. Openness is tracked per face so
/// that intersections of open and closed boxes stay exactly representable.
struct Box {
  Vec min, max;
  std::vector<bool> min_closed, max_closed;

  static Box closed(Vec min, Vec max);
  static Box open(Vec min, Vec max);

  std::size_t dim() const { return min.size(); }
  bool empty() const;
  bool uniformly_closed() const;
  bool uniformly_open() const;
  Box closure() const;
};

std::optional<Box> intersect(const Box& a, const Box& b);

/// The pieces of `piece` not covered by `cut` (0 to 2*dim boxes).
std::vector<Box> difference(const Box& piece, const Box& cut);

/// Is every point of b covered by the union of the given boxes?
bool covered(const Box& b, const std::vector<Box>& cover);

/// Finite description of a subset of the dual: a disjoint sorted interval
/// union in Gamma1 and a box union (or EMPTY / ALL) in Gamma2.
struct DualSubset {
  std::size_t n = 1;
  std::vector<Interval> part1;
  bool part2_all = false;
  std::vector<Box> part2;  // ignored when part2_all

  static DualSubset empty_set(std::size_t n);
  static DualSubset gamma1_all(std::size_t n);
  static DualSubset gamma2_all(std::size_t n);

  bool part2_empty() const { return !part2_all && part2.empty(); }
  bool empty() const { return part1.empty() && part2_empty(); }
};

/// Sorts, merges and splits the Gamma1 intervals at 0, drops empty pieces.
/// The interval part of the result is the unique decomposition into
/// connected components of R^x, so canonical descriptors with equal
/// interval parts describe equal Gamma1 sets.
DualSubset canonicalize(DualSubset s);

/// 0 is an accumulation point of the Gamma1 part (syntactically: some
/// canonical interval has 0 as an endpoint).
bool accumulates_at_zero(const DualSubset& s);

/// Closure in the dual topology: both parts close in their own topology,
/// and accumulation of the Gamma1 part at 0 pulls in all of Gamma2.
DualSubset closure(const DualSubset& s);

enum class QcReason {
  CharacterPartNotCompact,          // (1) Gamma2 part not closed-and-bounded
  Gamma1NotClosed,                  // (2) Gamma1 part not closed in R^x
  Gamma1Unbounded,                  // (2) Gamma1 part unbounded
  EmptyCharacterPartWithZeroAccumulation,  // (3)
};

std::string reason_code(QcReason reason);

struct QcDecision {
  bool quasi_compact = true;
  std::vector<QcReason> reasons;
};

/// Decides quasi-compactness: (1) the Gamma2 part is compact, (2) the
/// Gamma1 part is closed in R^x and bounded, (3) accumulation at 0 forces
/// a nonempty Gamma2 part. Reason codes name every failed condition.
QcDecision is_quasi_compact(const DualSubset& s);

DualSubset intersect(const DualSubset& s, const DualSubset& t);
DualSubset unite(const DualSubset& s, const DualSubset& t);

bool subset_of(const DualSubset& s, const DualSubset& t);
bool set_equal(const DualSubset& s, const DualSubset& t);

/// The scaling action of R on the dual: t != 0 scales both parts exactly;
/// t = 0 collapses any nonempty set to the origin character (the
/// distinguished fixed point), and the empty set to itself.
DualSubset r_act(const Rational& t, const DualSubset& s);

}  // namespace coadjoint::dual

#endif
