#pragma once

#include <string>
#include <vector>

#include "freelat/substitution.hpp"
#include "freelat/term.hpp"

namespace freelat {

/// How pullback variables z_{x,y} are named.
enum class ZNaming {
  Indexed,     ///< z_i_j, 1-based positions of x in dom(u) and y in dom(v)
  Sequential,  ///< z1, z2, ... in frame order
  Named,       ///< z_<x><y>, e.g. z_ab for the pair (a, b)
};

/// The pullback {(x, y) | u x = v y} of two maps with a common image, with its
/// projections. Pairs are listed in lexicographic order of (index of x, index of y).
struct PullbackFrame {
  std::vector<std::string> z_vars;
  VarSubstitution pi1;  ///< Z -> X
  VarSubstitution pi2;  ///< Z -> Y
};

/// Throws UnbalancedEquation when image(u) != image(v).
PullbackFrame build_frame(const VarSubstitution& u, const VarSubstitution& v, ZNaming naming = ZNaming::Indexed);

/// The lower and upper lifts of a surjection g: X ->> Y. hat sends each y to
/// the meet of its preimage, check to the join; both extend homomorphically
/// to maps from terms over Y to terms over X.
class IntervalLift {
 public:
  explicit IntervalLift(const VarSubstitution& g);

  Term hat(Term t) const { return apply_term_map(t, hat_); }
  Term check(Term t) const { return apply_term_map(t, check_); }
  const TermMap& hat_map() const noexcept { return hat_; }
  const TermMap& check_map() const noexcept { return check_; }

 private:
  TermMap hat_;
  TermMap check_;
};

/// Throws NonSurjective when some codomain variable has an empty preimage.
inline IntervalLift hat_check_lift(const VarSubstitution& g) { return IntervalLift(g); }

struct JointPreimage {
  bool exists = false;
  bool first_holds = false;   ///< g1(hat2 q) <= p
  bool second_holds = false;  ///< g2(hat1 p) <= q
  std::string diagnostics;
};

/// Whether p (over Y) and q (over Z) have a common preimage under the
/// extensions of g1: X ->> Y and g2: X ->> Z, decided by the pair of
/// inequalities g1(hat2 q) <= p and g2(hat1 p) <= q.
JointPreimage joint_preimage_exists(Term p, Term q, const VarSubstitution& g1, const VarSubstitution& g2);

/// The same question, decided as hat1 p v hat2 q <= check1 p ^ check2 q.
bool joint_preimage_by_bounds(Term p, Term q, const VarSubstitution& g1, const VarSubstitution& g2);
/// The same question, decided as hat1 p <= check2 q and hat2 q <= check1 p.
bool joint_preimage_by_cross_bounds(Term p, Term q, const VarSubstitution& g1, const VarSubstitution& g2);

/// p over dom(u), q over dom(v), with image(u) = image(v).
struct BalancedEquation {
  Term p;
  Term q;
  VarSubstitution u;
  VarSubstitution v;
};

struct Check {
  std::string name;
  bool holds = false;
};

struct AncestorInterval {
  PullbackFrame frame;
  Term s0;
  Term s1;
  VarSubstitution sigma;  ///< Z -> X
  VarSubstitution tau;    ///< Z -> Y
  VarSubstitution gamma;  ///< Z -> W
  std::vector<Check> report;
  bool verified = false;

  bool all_passed() const;
};

enum class AncestorMode { Verify, ConstructOnly };

struct AncestorOptions {
  AncestorMode mode = AncestorMode::Verify;
  ZNaming naming = ZNaming::Indexed;
};

/// Builds the interval [s0, s1] of all ancestor terms of a balanced equation.
///
/// In Verify mode the equation is first checked in the free algebra; a
/// non-valid equation raises InvalidEquation with the joint-preimage
/// diagnostics. ConstructOnly skips every order-theoretic check and only
/// reports the structural ones (frame shape and u . sigma = v . tau).
AncestorInterval ancestor_interval(const BalancedEquation& eq, const AncestorOptions& options = {});

/// Whether s (over the frame variables) lies in [s0, s1]. Both membership
/// routes are evaluated: interval bounds and the two projection identities.
/// A disagreement between them throws std::logic_error.
bool is_ancestor(Term s, const BalancedEquation& eq, const AncestorInterval& interval);
bool is_ancestor(Term s, const BalancedEquation& eq);

}  // namespace freelat
