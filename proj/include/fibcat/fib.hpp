#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fibcat/constructions.hpp"

namespace fibcat {

/// An arrow phi : e -> a over F is cartesian when for every psi : e'' -> a
/// and every w : F e'' -> F e with F phi . w = F psi there is exactly one
/// chi : e'' -> e over w with phi . chi = psi. Checked by exhausting all
/// (psi, w) pairs.
bool is_cartesian(const FinFunctor& F, int phi);

/// First (in canonical order) cartesian arrow into `obj` lying over `f`;
/// kNone when there is none. `f` must end at the image of `obj`.
int cartesian_lift(const FinFunctor& F, int obj, int f);

/// Chosen cartesian lift per (object of the source, arrow of the target into
/// that object's image).
class Cleavage {
 public:
  Cleavage(FinFunctor F, std::vector<std::vector<int>> table)
      : F_(std::move(F)), table_(std::move(table)) {}

  const FinFunctor& functor() const { return F_; }
  /// The chosen lift of f at obj (f must end at the image of obj).
  int lift(int obj, int f) const;
  int lift_src(int obj, int f) const {
    return F_.source()->src(lift(obj, f));
  }

 private:
  FinFunctor F_;
  // table_[obj][i] pairs with F.target()->arrows_into(F obj)[i].
  std::vector<std::vector<int>> table_;
};

struct FibrationCheck {
  bool ok = true;
  struct Missing {
    int obj;    // object of the source
    int arrow;  // arrow of the target into its image, with no cartesian lift
  };
  std::vector<Missing> missing;
  long pairs_checked = 0;
};

/// Every (object, arrow into its image) pair admits a cartesian lift.
/// lim.workers only controls parallelism; the result is identical for any
/// worker count.
FibrationCheck is_fibration(const FinFunctor& F, const Limits& lim = {});

/// Canonical cleavage: first cartesian lift in canonical order for every
/// pair. Throws NotCloven when some pair has none.
Cleavage extract_cleavage(const FinFunctor& F);

struct SplitCheck {
  bool normalized = true;  // identities lift to identities
  bool split = true;       // chosen lifts compose
  bool ok() const { return normalized && split; }
  struct UnitFailure {
    int obj;
  };
  struct CompFailure {
    int obj, f, g;  // f into the image of obj, then g into the source of f
  };
  std::vector<UnitFailure> unit_failures;
  std::vector<CompFailure> comp_failures;
};

SplitCheck is_split(const Cleavage& cleavage);

struct StreetCheck {
  bool ok = true;
  struct Missing {
    int obj, arrow;
  };
  std::vector<Missing> missing;
  long pairs_checked = 0;
};

/// Lifts only need to exist up to an isomorphism under the arrow: for every
/// f : b -> F a there must be a cartesian phi : e -> a and an iso
/// h : b -> F e with F phi . h = f. The identity is tried as h first, so
/// every fibration passes unchanged.
StreetCheck is_street_fibration(const FinFunctor& F, const Limits& lim = {});

/// The stage construction applied to F : A -> B, together with its
/// multiplication data one level up and the adjunction making the
/// multiplication right adjoint to the unit at the next stage.
struct MonadInstance {
  CommaCat bf;      // objects (b, f : b -> F a, a)
  FinFunctor m;     // projection bf -> B (the image of F under the stage map)
  FinFunctor eta;   // A -> bf, a |-> (F a, id, a)
  CommaCat bmf;     // stage of m
  FinFunctor m2;    // projection bmf -> B
  FinFunctor mu;    // bmf -> bf, (b1, f1, (b2, f2, a)) |-> (b1, f2 . f1, a)
  FinFunctor eta_m;   // unit of the stage of m: bf -> bmf
  FinFunctor m_of_eta;  // eta pushed through the stage map: bf -> bmf
  NatTrans counit_u;    // eta_m . mu => Id_bmf

  bool eta_over_ok = false;      // m . eta == F
  bool mu_over_ok = false;       // m2 == m . mu
  bool unit_law_right = false;   // mu . eta_m == Id_bf
  bool unit_law_left = false;    // mu . m_of_eta == Id_bf
  bool counit_vertical = false;  // m2 sends every counit component to an id
  bool triangle_counit = false;  // counit is the identity at eta_m images
  bool triangle_mu = false;      // mu sends every counit component to an id
  bool laws_ok() const {
    return eta_over_ok && mu_over_ok && unit_law_right && unit_law_left &&
           counit_vertical && triangle_counit && triangle_mu;
  }
};

MonadInstance monad_M(const FinFunctor& F, const Limits& lim = {});

/// Checks that the adjunction unit/counit analysis extends one level up:
/// hom-sets correspond under the unit-is-identity adjunction, and, when the
/// third stage fits the cap, multiplication is associative.
struct ColaxReport {
  bool hom_bijection_ok = false;
  bool assoc_checked = false;
  bool assoc_ok = false;
  long stage3_arrows = 0;
  MonadInstance inst;
};

ColaxReport check_colax_idempotent(const FinFunctor& F, const Limits& lim = {});

/// Structure map induced by a cleavage: sends (b, f, a) to the source of the
/// chosen lift of f at a, and an arrow (u, k) to the unique arrow over u
/// given by cartesian factorization.
struct AlphaReport {
  FinFunctor alpha;  // bf -> A
  bool over_ok = false;              // F . alpha == m
  bool strict_unit = false;          // alpha . eta == Id_A (normalized case)
  bool unit_iso_ok = false;          // lift(a, id) assembles to an iso
                                     // alpha . eta => Id_A
  NatTrans unit_iso;                 // that transformation
  NatTrans counit_eps;               // eta . alpha => Id_bf
  bool counit_vertical = false;      // m sends every component to an id
  bool counit_cartesian = false;     // each component's right leg is cartesian
  bool triangle_at_eta = false;      // counit is invertible at eta images
  bool triangle_alpha = false;       // alpha(counit) . unit-inverse == id
  bool laws_ok() const {
    return over_ok && unit_iso_ok && counit_vertical && counit_cartesian &&
           triangle_at_eta && triangle_alpha;
  }
};

/// Requires F to be a fibration (throws NotCloven otherwise).
AlphaReport pseudo_algebra_alpha(const FinFunctor& F, const Cleavage& cleavage,
                                 const MonadInstance& inst);

}  // namespace fibcat
