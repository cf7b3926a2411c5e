#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fibcat/category.hpp"
#include "fibcat/constructions.hpp"
#include "fibcat/functor.hpp"

namespace fibcat {

// ---------------------------------------------------------------------------
// Factorization-lifting check.
//
// For a functor F : E -> B, every arrow f of E and every factorization
// F(f) = g2 . g1 in B determine a small category whose objects are the
// factorizations f = m2 . m1 with F(m1) = g1 and F(m2) = g2, and whose
// arrows (m1, m2) -> (m1', m2') are the arrows h between the middle
// objects satisfying F(h) = id, h . m1 = m1' and m2' . h = m2.
// F lifts factorizations when each such category is nonempty and connected
// (connected via zig-zags, i.e. as an undirected graph).
// ---------------------------------------------------------------------------

struct FactorizationCat {
  struct Obj {
    int m1 = -1;  // arrow src(f) -> mid
    int m2 = -1;  // arrow mid -> dst(f)
  };
  struct Edge {
    int from = -1;  // index into objs
    int to = -1;
    int h = -1;  // connecting arrow in the source category of F
  };
  std::vector<Obj> objs;
  std::vector<Edge> edges;
  bool nonempty() const { return !objs.empty(); }
  bool connected() const;  // true for the empty case as well
};

FactorizationCat factorization_cat(const FinFunctor& F, int f, int g1, int g2);

struct ConducheReport {
  struct Failure {
    int f = -1;   // arrow of the source category
    int g1 = -1;  // arrows of the target category, F(f) = g2 . g1
    int g2 = -1;
    bool empty = false;  // true: no factorization lift; false: disconnected
  };
  bool ok = true;
  std::vector<Failure> failures;
  long triples_checked = 0;
};

ConducheReport conduche_check(const FinFunctor& F, const Limits& lim = {});

// ---------------------------------------------------------------------------
// Categorical congruences presented by generators.
//
// A congruence on a category Y is an equivalence relation on objects
// together with an equivalence relation on composable arrow sequences
// (consecutive endpoints equal up to the object relation), such that
//   (1) related sequences have related endpoints,
//   (2) concatenation respects the relation,
//   (3) related objects have related identity sequences,
//   (4) a genuine composite g . f is related to the sequence (f, g).
// The quotient category has the object classes as objects and the sequence
// classes as arrows, with concatenation as composition.
//
// The closure is computed by saturation: all sequences up to a length bound
// are interned level by level and the four rules are applied to a fixpoint.
// After finishing level L the run is certified complete when 2k <= L, where
// k is the maximum over classes of the shortest member length: every
// concatenation of two class representatives is then already classified, so
// no longer sequence can introduce new classes or merges.  If the bound is
// exhausted without certification the result is reported as nonterminating
// together with the per-level growth of the number of sequence classes.
// ---------------------------------------------------------------------------

struct CongruenceSeeds {
  std::vector<std::pair<int, int>> obj_pairs;
  // Sequences are lists of arrow indices in diagram order: {f1, f2, ..., fn}
  // denotes the composite fn . ... . f1.
  std::vector<std::pair<std::vector<int>, std::vector<int>>> seq_pairs;
};

class Congruence {
 public:
  Congruence(CatPtr base, const CongruenceSeeds& seeds, const Limits& lim = {});

  // Saturate up to the given sequence-length bound. Returns true when the
  // closure is certified complete (see above). max_len <= 0 selects the
  // default bound of 2 * (number of arrows of the base category), at least 2.
  bool run(int max_len = -1);

  bool certified() const { return certified_; }
  int levels_used() const { return level_; }
  int max_rep_len() const { return max_rep_len_; }
  long node_count() const { return static_cast<long>(seqs_.size()); }
  // Cumulative number of distinct sequence classes after each level.
  const std::vector<long>& class_trace() const { return trace_; }

  const FinCat& base() const { return *base_; }

  int object_class(int obj) const;
  // The sequence must have been interned during saturation; composable
  // sequences no longer than the certified level always are.
  int sequence_class(const std::vector<int>& seq) const;
  bool same_class(const std::vector<int>& a, const std::vector<int>& b) const;

  // Canonical representative of a sequence class: shortest member, ties
  // broken lexicographically on arrow indices.
  std::vector<int> class_rep(int cls) const;
  bool class_is_identity(int cls) const;

  // All distinct sequence classes (as canonical union-find roots).
  std::vector<int> all_classes() const;
  const std::vector<std::vector<int>>& nodes() const { return seqs_; }

 private:
  friend struct QuotientBuilder;

  int intern(const std::vector<int>& seq);
  void union_seq(int a, int b);
  void union_obj(int x, int y);
  int find_seq(int a) const;
  int find_obj(int x) const;
  void drain();
  long count_classes() const;

  CatPtr base_;
  Limits lim_;
  std::vector<std::vector<int>> seqs_;  // interned sequences, diagram order
  std::map<std::vector<int>, int> seq_index_;
  mutable std::vector<int> seq_parent_;
  mutable std::vector<int> obj_parent_;
  std::vector<int> seq_rank_;
  std::vector<int> min_len_;                     // per root
  std::vector<std::map<int, int>> ext_right_;    // per root: arrow -> node
  std::vector<std::map<int, int>> ext_left_;     // per root: arrow -> node
  std::vector<int> id_node_;                     // per object root: node of (id_x)
  std::vector<std::pair<int, int>> pending_;
  long merges_ = 0;
  std::vector<long> trace_;
  bool certified_ = false;
  int level_ = 0;
  int max_rep_len_ = 0;
};

// ---------------------------------------------------------------------------
// Coequalizers of parallel functor pairs, computed as the quotient of the
// codomain by the congruence generated by identifying the two images.
// ---------------------------------------------------------------------------

struct CoeqOk {
  CatPtr quotient;
  FinFunctor q;  // codomain of the pair -> quotient
  int levels_used = 0;
  int max_rep_len = 0;
  std::vector<long> class_trace;
  long nodes = 0;
};

struct CoeqDiverged {
  int max_len = 0;
  std::vector<long> class_trace;
  long nodes = 0;
};

using CoeqResult = std::variant<CoeqOk, CoeqDiverged>;

CoeqResult coequalizer(const FinFunctor& G, const FinFunctor& H,
                       int max_len = -1, const Limits& lim = {},
                       const std::string& name = "");

// Quotient of a category by an arbitrary generated congruence.
std::optional<CoeqOk> quotient_category(CatPtr base, const CongruenceSeeds& seeds,
                                        int max_len = -1, const Limits& lim = {},
                                        const std::string& name = "");

// ---------------------------------------------------------------------------
// Regular-epimorphism test.  Q : C -> D is a regular epi exactly when D is,
// up to the canonical comparison, the quotient of C by the kernel congruence
// of Q.  Checked as: every object of D is hit; every arrow of D is a
// composite of image arrows; and the kernel congruence (equal image
// composites) coincides with the congruence generated by the pairs of single
// arrows with equal images.
// ---------------------------------------------------------------------------

struct RegEpiReport {
  bool obj_surjective = false;
  bool arrows_generate = false;
  bool kernel_matches = false;
  bool certified = false;
  int levels_used = 0;
  std::vector<long> class_trace;
  bool ok() const {
    return obj_surjective && arrows_generate && kernel_matches && certified;
  }
};

RegEpiReport is_regular_epi(const FinFunctor& Q, int max_len = -1,
                            const Limits& lim = {});

// ---------------------------------------------------------------------------
// Stability of a coequalizer under change of base.
//
// Data: a parallel pair G, H : X -> Y, an anchor functor Y -> B with
// anchor . G = anchor . H, and a functor D : W -> B.  The coequalizer
// Q : Y -> E induces anchorE : E -> B.  Pulling back X, Y and E along D
// gives an induced parallel pair G', H' : X' -> Y' and its coequalizer
// Q' : Y' -> E''.  The canonical comparison sends the class of (y, w) to
// (Q y, w); the original coequalizer is stable along D exactly when the
// comparison is an isomorphism onto the pullback E' of anchorE along D.
// ---------------------------------------------------------------------------

struct PreservationReport {
  bool anchor_coequalizes = false;
  bool anchor_factors_ok = false;  // anchor constant on quotient classes
  bool down_certified = false;
  bool up_certified = false;
  std::vector<long> down_trace;
  std::vector<long> up_trace;
  bool computed = false;  // everything below is meaningful only when true
  bool kappa_well_defined = false;
  bool kappa_commutes = false;  // kappa . Q' agrees with (y,w) -> (Qy,w)
  bool obj_bijective = false;
  bool arr_bijective = false;
  long down_objects = 0, down_arrows = 0;
  long pulled_objects = 0, pulled_arrows = 0;  // E' sizes
  long up_objects = 0, up_arrows = 0;          // E'' sizes
  bool preserved() const {
    return computed && kappa_well_defined && kappa_commutes && obj_bijective &&
           arr_bijective;
  }
};

PreservationReport preservation_experiment(const FinFunctor& G,
                                           const FinFunctor& H,
                                           const FinFunctor& anchor,
                                           const FinFunctor& D,
                                           int max_len = -1,
                                           const Limits& lim = {});

// Renders a sequence class representative as an arrow label: a single arrow
// keeps its id, a longer sequence {f1, ..., fn} becomes "fn.o. ... .o.f1".
std::string sequence_label(const FinCat& cat, const std::vector<int>& rep);

}  // namespace fibcat
