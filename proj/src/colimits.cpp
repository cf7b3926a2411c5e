#include "fibcat/colimits.hpp"

#include <algorithm>
#include <numeric>

#include "fibcat/parallel.hpp"

namespace fibcat {

namespace {

// Union-find over a plain parent vector with path compression.
int uf_find(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

// ---------------------------------------------------------------------------
// Factorization lifting
// ---------------------------------------------------------------------------

bool FactorizationCat::connected() const {
  if (objs.size() <= 1) return true;
  std::vector<int> parent(objs.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& e : edges) {
    int a = uf_find(parent, e.from);
    int b = uf_find(parent, e.to);
    if (a != b) parent[b] = a;
  }
  const int root = uf_find(parent, 0);
  for (int i = 1; i < static_cast<int>(objs.size()); ++i)
    if (uf_find(parent, i) != root) return false;
  return true;
}

FactorizationCat factorization_cat(const FinFunctor& F, int f, int g1,
                                   int g2) {
  const FinCat& E = *F.source();
  const FinCat& B = *F.target();
  if (f < 0 || f >= E.arrow_count())
    fail(Err::UnknownArrow, "factorization_cat: arrow index out of range");
  if (B.try_compose(g2, g1) != F.on_arrow(f))
    fail(Err::TargetMismatch, "factorization_cat: g2 . g1 is not the image of f");

  FactorizationCat out;
  const int sf = E.src(f);
  for (int m1 : E.arrows_from(sf)) {
    if (F.on_arrow(m1) != g1) continue;
    for (int m2 : E.arrows_from(E.dst(m1))) {
      if (F.on_arrow(m2) != g2) continue;
      if (E.try_compose(m2, m1) != f) continue;
      out.objs.push_back({m1, m2});
    }
  }
  const int n = static_cast<int>(out.objs.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto& oi = out.objs[i];
      const auto& oj = out.objs[j];
      for (int h : E.hom(E.dst(oi.m1), E.dst(oj.m1))) {
        if (!B.is_identity(F.on_arrow(h))) continue;
        if (E.compose(h, oi.m1) != oj.m1) continue;
        if (E.compose(oj.m2, h) != oi.m2) continue;
        out.edges.push_back({i, j, h});
      }
    }
  return out;
}

ConducheReport conduche_check(const FinFunctor& F, const Limits& lim) {
  const FinCat& E = *F.source();
  const FinCat& B = *F.target();

  struct PerArrow {
    std::vector<ConducheReport::Failure> failures;
    long triples = 0;
  };
  std::vector<PerArrow> per(E.arrow_count());

  parallel_for(E.arrow_count(), lim.workers, [&](int f) {
    const int ff = F.on_arrow(f);
    PerArrow& slot = per[f];
    for (int g1 = 0; g1 < B.arrow_count(); ++g1) {
      if (B.src(g1) != B.src(ff)) continue;
      for (int g2 : B.hom(B.dst(g1), B.dst(ff))) {
        if (B.compose(g2, g1) != ff) continue;
        ++slot.triples;
        FactorizationCat fc = factorization_cat(F, f, g1, g2);
        if (!fc.nonempty())
          slot.failures.push_back({f, g1, g2, true});
        else if (!fc.connected())
          slot.failures.push_back({f, g1, g2, false});
      }
    }
  });

  ConducheReport rep;
  for (const auto& slot : per) {
    rep.triples_checked += slot.triples;
    rep.failures.insert(rep.failures.end(), slot.failures.begin(),
                        slot.failures.end());
  }
  rep.ok = rep.failures.empty();
  return rep;
}

// ---------------------------------------------------------------------------
// Congruence saturation
// ---------------------------------------------------------------------------

Congruence::Congruence(CatPtr base, const CongruenceSeeds& seeds,
                       const Limits& lim)
    : base_(std::move(base)), lim_(lim) {
  const FinCat& Y = *base_;
  obj_parent_.resize(Y.object_count());
  std::iota(obj_parent_.begin(), obj_parent_.end(), 0);
  id_node_.resize(Y.object_count(), -1);

  for (int a = 0; a < Y.arrow_count(); ++a) intern({a});
  for (int x = 0; x < Y.object_count(); ++x)
    id_node_[x] = seq_index_.at({Y.identity(x)});

  for (const auto& [x, y] : seeds.obj_pairs) {
    if (x < 0 || x >= Y.object_count() || y < 0 || y >= Y.object_count())
      fail(Err::UnknownObject, "congruence seed: object index out of range");
    union_obj(x, y);
  }
  for (const auto& [s, t] : seeds.seq_pairs) {
    if (s.empty() || t.empty())
      fail(Err::Parse, "congruence seed: empty arrow sequence");
    pending_.push_back({intern(s), intern(t)});
  }
  drain();
}

int Congruence::find_seq(int a) const { return uf_find(seq_parent_, a); }
int Congruence::find_obj(int x) const { return uf_find(obj_parent_, x); }

int Congruence::object_class(int obj) const {
  if (obj < 0 || obj >= base_->object_count())
    fail(Err::UnknownObject, "congruence: object index out of range");
  return find_obj(obj);
}

int Congruence::sequence_class(const std::vector<int>& seq) const {
  auto it = seq_index_.find(seq);
  if (it == seq_index_.end())
    fail(Err::UnknownArrow, "congruence: sequence was not interned");
  return find_seq(it->second);
}

bool Congruence::same_class(const std::vector<int>& a,
                            const std::vector<int>& b) const {
  return sequence_class(a) == sequence_class(b);
}

int Congruence::intern(const std::vector<int>& seq) {
  auto it = seq_index_.find(seq);
  if (it != seq_index_.end()) return it->second;
  if (static_cast<long>(seqs_.size()) >= lim_.coeq_node_budget)
    fail(Err::InstanceTooLarge,
         "congruence saturation exceeded the node budget of " +
             std::to_string(lim_.coeq_node_budget));

  const FinCat& Y = *base_;
  for (size_t i = 0; i + 1 < seq.size(); ++i)
    if (find_obj(Y.dst(seq[i])) != find_obj(Y.src(seq[i + 1])))
      fail(Err::LawViolation, "congruence: sequence is not composable");

  const int n = static_cast<int>(seqs_.size());
  seqs_.push_back(seq);
  seq_index_.emplace(seq, n);
  seq_parent_.push_back(n);
  seq_rank_.push_back(0);
  min_len_.push_back(static_cast<int>(seq.size()));
  ext_right_.emplace_back();
  ext_left_.emplace_back();

  if (seq.size() >= 2) {
    const std::vector<int> prefix(seq.begin(), seq.end() - 1);
    const std::vector<int> suffix(seq.begin() + 1, seq.end());
    const int p = intern(prefix);
    const int s = intern(suffix);
    {
      auto [slot, inserted] = ext_right_[find_seq(p)].try_emplace(seq.back(), n);
      if (!inserted && find_seq(slot->second) != find_seq(n))
        pending_.push_back({slot->second, n});
    }
    {
      auto [slot, inserted] = ext_left_[find_seq(s)].try_emplace(seq.front(), n);
      if (!inserted && find_seq(slot->second) != find_seq(n))
        pending_.push_back({slot->second, n});
    }
    if (seq.size() == 2 && Y.dst(seq[0]) == Y.src(seq[1]))
      pending_.push_back({n, intern({Y.compose(seq[1], seq[0])})});
  }
  return n;
}

void Congruence::union_seq(int a, int b) {
  int ra = find_seq(a);
  int rb = find_seq(b);
  if (ra == rb) return;
  if (seq_rank_[ra] < seq_rank_[rb]) std::swap(ra, rb);
  if (seq_rank_[ra] == seq_rank_[rb]) ++seq_rank_[ra];

  const std::vector<int>& la = seqs_[ra];
  const std::vector<int>& lb = seqs_[rb];
  const int src_a = base_->src(la.front());
  const int src_b = base_->src(lb.front());
  const int dst_a = base_->dst(la.back());
  const int dst_b = base_->dst(lb.back());

  seq_parent_[rb] = ra;
  ++merges_;
  min_len_[ra] = std::min(min_len_[ra], min_len_[rb]);
  for (const auto& [arrow, node] : ext_right_[rb]) {
    auto [slot, inserted] = ext_right_[ra].try_emplace(arrow, node);
    if (!inserted && find_seq(slot->second) != find_seq(node))
      pending_.push_back({slot->second, node});
  }
  for (const auto& [arrow, node] : ext_left_[rb]) {
    auto [slot, inserted] = ext_left_[ra].try_emplace(arrow, node);
    if (!inserted && find_seq(slot->second) != find_seq(node))
      pending_.push_back({slot->second, node});
  }
  ext_right_[rb].clear();
  ext_left_[rb].clear();

  union_obj(src_a, src_b);
  union_obj(dst_a, dst_b);
}

void Congruence::union_obj(int x, int y) {
  const int rx = find_obj(x);
  const int ry = find_obj(y);
  if (rx == ry) return;
  obj_parent_[ry] = rx;
  ++merges_;
  pending_.push_back({id_node_[rx], id_node_[ry]});
}

void Congruence::drain() {
  for (size_t i = 0; i < pending_.size(); ++i) {
    const auto [a, b] = pending_[i];
    union_seq(a, b);
  }
  pending_.clear();
}

long Congruence::count_classes() const {
  std::vector<char> seen(seqs_.size(), 0);
  long count = 0;
  for (int i = 0; i < static_cast<int>(seqs_.size()); ++i) {
    const int r = find_seq(i);
    if (!seen[r]) {
      seen[r] = 1;
      ++count;
    }
  }
  return count;
}

bool Congruence::run(int max_len) {
  if (level_ != 0)
    fail(Err::LawViolation, "congruence saturation was already run");
  if (max_len <= 0)
    max_len = std::max(2, 2 * static_cast<int>(base_->arrow_count()));
  const FinCat& Y = *base_;

  auto certificate = [&](int level) {
    int k = 0;
    for (int i = 0; i < static_cast<int>(seqs_.size()); ++i)
      if (find_seq(i) == i) k = std::max(k, min_len_[i]);
    max_rep_len_ = k;
    return 2 * k <= level;
  };

  level_ = 1;
  trace_.push_back(count_classes());
  if (certificate(1)) {
    certified_ = true;
    return true;
  }

  for (int level = 2; level <= max_len; ++level) {
    bool changed = true;
    while (changed) {
      changed = false;
      const long merges_before = merges_;
      std::vector<std::vector<int>> arrows_by_class(Y.object_count());
      for (int a = 0; a < Y.arrow_count(); ++a)
        arrows_by_class[find_obj(Y.src(a))].push_back(a);
      for (int i = 0; i < static_cast<int>(seqs_.size()); ++i) {
        if (static_cast<int>(seqs_[i].size()) >= level) continue;
        const int tail_class = find_obj(Y.dst(seqs_[i].back()));
        for (int a : arrows_by_class[tail_class]) {
          std::vector<int> ext = seqs_[i];
          ext.push_back(a);
          if (!seq_index_.count(ext)) {
            intern(ext);
            changed = true;
          }
        }
      }
      drain();
      if (merges_ != merges_before) changed = true;
    }
    level_ = level;
    trace_.push_back(count_classes());
    if (certificate(level)) {
      certified_ = true;
      return true;
    }
  }
  return false;
}

std::vector<int> Congruence::class_rep(int cls) const {
  std::vector<int> best;
  for (int i = 0; i < static_cast<int>(seqs_.size()); ++i) {
    if (find_seq(i) != cls) continue;
    const auto& s = seqs_[i];
    if (best.empty() || s.size() < best.size() ||
        (s.size() == best.size() && s < best))
      best = s;
  }
  if (best.empty()) fail(Err::UnknownArrow, "congruence: unknown class");
  return best;
}

bool Congruence::class_is_identity(int cls) const {
  for (int i = 0; i < static_cast<int>(seqs_.size()); ++i)
    if (find_seq(i) == cls && seqs_[i].size() == 1 &&
        base_->is_identity(seqs_[i][0]))
      return true;
  return false;
}

std::vector<int> Congruence::all_classes() const {
  std::vector<int> roots;
  for (int i = 0; i < static_cast<int>(seqs_.size()); ++i)
    if (find_seq(i) == i) roots.push_back(i);
  return roots;
}

// ---------------------------------------------------------------------------
// Quotient construction
// ---------------------------------------------------------------------------

std::string sequence_label(const FinCat& cat, const std::vector<int>& rep) {
  if (rep.size() == 1) return cat.arrow_id(rep[0]);
  std::string label;
  for (auto it = rep.rbegin(); it != rep.rend(); ++it) {
    if (!label.empty()) label += ".o.";
    label += cat.arrow_id(*it);
  }
  return label;
}

struct QuotientBuilder {
  static CoeqOk build(Congruence& C, const std::string& name,
                      const std::string& functor_name) {
    const FinCat& Y = *C.base_;
    const std::string cat_name = name.empty() ? Y.name() + "_quot" : name;

    // Object classes in order of their smallest member.
    std::vector<int> obj_q(Y.object_count(), -1);
    std::vector<int> rep_obj;
    for (int x = 0; x < Y.object_count(); ++x) {
      const int r = C.find_obj(x);
      if (obj_q[r] == -1) {
        obj_q[r] = static_cast<int>(rep_obj.size());
        rep_obj.push_back(x);
      }
      obj_q[x] = obj_q[r];
    }

    // Sequence classes with canonical representatives.
    struct Cls {
      int root;
      std::vector<int> rep;
      bool is_id;
    };
    std::vector<Cls> classes;
    for (int root : C.all_classes())
      classes.push_back({root, C.class_rep(root), C.class_is_identity(root)});
    std::sort(classes.begin(), classes.end(), [](const Cls& a, const Cls& b) {
      if (a.rep.size() != b.rep.size()) return a.rep.size() < b.rep.size();
      return a.rep < b.rep;
    });

    RawCategory raw;
    raw.name = cat_name;
    for (int x : rep_obj) raw.objects.push_back(Y.object_id(x));

    std::map<int, std::string> label_of_root;  // includes identity classes
    for (const auto& c : classes) {
      const int qsrc = obj_q[Y.src(c.rep.front())];
      const int qdst = obj_q[Y.dst(c.rep.back())];
      if (c.is_id) {
        label_of_root[c.root] = identity_id(raw.objects[qsrc]);
        continue;
      }
      const std::string label = sequence_label(Y, c.rep);
      raw.arrows.push_back({label, raw.objects[qsrc], raw.objects[qdst]});
      label_of_root[c.root] = label;
    }

    for (const auto& cf : classes) {
      if (cf.is_id) continue;
      for (const auto& cg : classes) {
        if (cg.is_id) continue;
        if (C.find_obj(Y.dst(cf.rep.back())) !=
            C.find_obj(Y.src(cg.rep.front())))
          continue;
        std::vector<int> cat = cf.rep;
        cat.insert(cat.end(), cg.rep.begin(), cg.rep.end());
        const int root = C.sequence_class(cat);
        raw.compose.push_back({label_of_root.at(cg.root),
                               label_of_root.at(cf.root),
                               label_of_root.at(root)});
      }
    }

    CatPtr quotient = make_cat(raw);
    std::vector<int> arr_map(Y.arrow_count());
    for (int a = 0; a < Y.arrow_count(); ++a)
      arr_map[a] =
          quotient->require_arrow(label_of_root.at(C.sequence_class({a})));
    FinFunctor q(functor_name.empty() ? "q" : functor_name, C.base_, quotient,
                 obj_q, std::move(arr_map));
    return CoeqOk{quotient,          std::move(q),     C.levels_used(),
                  C.max_rep_len(),   C.class_trace(),  C.node_count()};
  }
};

std::optional<CoeqOk> quotient_category(CatPtr base,
                                        const CongruenceSeeds& seeds,
                                        int max_len, const Limits& lim,
                                        const std::string& name) {
  Congruence C(std::move(base), seeds, lim);
  if (!C.run(max_len)) return std::nullopt;
  return QuotientBuilder::build(C, name, "q");
}

CoeqResult coequalizer(const FinFunctor& G, const FinFunctor& H, int max_len,
                       const Limits& lim, const std::string& name) {
  if (!G.source()->same_structure(*H.source()) ||
      !G.target()->same_structure(*H.target()))
    fail(Err::ParallelismMismatch, "coequalizerargs: " + G.name() + " and " +
                                       H.name() + " are not parallel");
  const FinCat& X = *G.source();

  CongruenceSeeds seeds;
  for (int x = 0; x < X.object_count(); ++x)
    if (G.on_object(x) != H.on_object(x))
      seeds.obj_pairs.push_back({G.on_object(x), H.on_object(x)});
  for (int k = 0; k < X.arrow_count(); ++k)
    if (G.on_arrow(k) != H.on_arrow(k))
      seeds.seq_pairs.push_back({{G.on_arrow(k)}, {H.on_arrow(k)}});

  Congruence C(G.target(), seeds, lim);
  if (!C.run(max_len))
    return CoeqDiverged{C.levels_used(), C.class_trace(), C.node_count()};
  return QuotientBuilder::build(C, name, "coeq(" + G.name() + "," + H.name() + ")");
}

// ---------------------------------------------------------------------------
// Regular epimorphisms
// ---------------------------------------------------------------------------

RegEpiReport is_regular_epi(const FinFunctor& Q, int max_len,
                            const Limits& lim) {
  const FinCat& C = *Q.source();
  const FinCat& D = *Q.target();
  RegEpiReport rep;

  std::vector<char> obj_hit(D.object_count(), 0);
  for (int x = 0; x < C.object_count(); ++x) obj_hit[Q.on_object(x)] = 1;
  rep.obj_surjective =
      std::all_of(obj_hit.begin(), obj_hit.end(), [](char c) { return c != 0; });

  std::vector<char> gen(D.arrow_count(), 0);
  for (int a = 0; a < C.arrow_count(); ++a) gen[Q.on_arrow(a)] = 1;
  for (int o = 0; o < D.object_count(); ++o) gen[D.identity(o)] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int f = 0; f < D.arrow_count(); ++f) {
      if (!gen[f]) continue;
      for (int g = 0; g < D.arrow_count(); ++g) {
        if (!gen[g] || D.src(g) != D.dst(f)) continue;
        const int h = D.compose(g, f);
        if (!gen[h]) {
          gen[h] = 1;
          grew = true;
        }
      }
    }
  }
  rep.arrows_generate =
      std::all_of(gen.begin(), gen.end(), [](char c) { return c != 0; });

  CongruenceSeeds seeds;
  for (int x = 0; x < C.object_count(); ++x)
    for (int y = x + 1; y < C.object_count(); ++y)
      if (Q.on_object(x) == Q.on_object(y)) seeds.obj_pairs.push_back({x, y});
  for (int f = 0; f < C.arrow_count(); ++f)
    for (int g = f + 1; g < C.arrow_count(); ++g)
      if (Q.on_arrow(f) == Q.on_arrow(g)) seeds.seq_pairs.push_back({{f}, {g}});

  Congruence cong(Q.source(), seeds, lim);
  rep.certified = cong.run(max_len);
  rep.levels_used = cong.levels_used();
  rep.class_trace = cong.class_trace();
  if (!rep.certified) return rep;

  // Kernel congruence (equal image composites) versus the generated one:
  // every interned sequence maps to a composite in D; the grouping by
  // composite must match the grouping by class exactly.
  rep.kernel_matches = true;
  std::map<int, int> root_of_composite;
  std::map<int, int> composite_of_root;
  for (const auto& seq : cong.nodes()) {
    std::vector<int> image;
    image.reserve(seq.size());
    for (int a : seq) image.push_back(Q.on_arrow(a));
    const int composite = D.compose_list(image);
    const int root = cong.sequence_class(seq);
    auto [it1, ins1] = root_of_composite.try_emplace(composite, root);
    if (!ins1 && it1->second != root) rep.kernel_matches = false;
    auto [it2, ins2] = composite_of_root.try_emplace(root, composite);
    if (!ins2 && it2->second != composite) rep.kernel_matches = false;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Stability under change of base
// ---------------------------------------------------------------------------

namespace {

// Unique factorization of t through a quotient-style functor q sharing its
// source: the U with U . q = t, when q is surjective on objects, jointly
// generating on arrows, and t is constant on the fibers of q.
std::optional<FinFunctor> factor_through(const FinFunctor& q,
                                         const FinFunctor& t,
                                         const std::string& name) {
  if (!q.source()->same_structure(*t.source())) return std::nullopt;
  const FinCat& A = *q.source();
  const FinCat& B = *q.target();
  const FinCat& Z = *t.target();

  std::vector<int> obj_map(B.object_count(), -1);
  for (int a = 0; a < A.object_count(); ++a) {
    const int b = q.on_object(a);
    const int z = t.on_object(a);
    if (obj_map[b] == -1)
      obj_map[b] = z;
    else if (obj_map[b] != z)
      return std::nullopt;
  }
  if (std::find(obj_map.begin(), obj_map.end(), -1) != obj_map.end())
    return std::nullopt;

  std::vector<int> arr_map(B.arrow_count(), -1);
  auto assign = [&](int e, int c) {
    if (Z.src(c) != obj_map[B.src(e)] || Z.dst(c) != obj_map[B.dst(e)])
      return false;
    if (arr_map[e] == -1) {
      arr_map[e] = c;
      return true;
    }
    return arr_map[e] == c;
  };
  for (int o = 0; o < B.object_count(); ++o)
    if (!assign(B.identity(o), Z.identity(obj_map[o]))) return std::nullopt;
  for (int u = 0; u < A.arrow_count(); ++u)
    if (!assign(q.on_arrow(u), t.on_arrow(u))) return std::nullopt;

  bool grew = true;
  while (grew) {
    grew = false;
    for (int e1 = 0; e1 < B.arrow_count(); ++e1) {
      if (arr_map[e1] == -1) continue;
      for (int e2 = 0; e2 < B.arrow_count(); ++e2) {
        if (arr_map[e2] == -1 || B.src(e2) != B.dst(e1)) continue;
        const int e = B.compose(e2, e1);
        const bool fresh = arr_map[e] == -1;
        if (!assign(e, Z.compose(arr_map[e2], arr_map[e1])))
          return std::nullopt;
        if (fresh) grew = true;
      }
    }
  }
  if (std::find(arr_map.begin(), arr_map.end(), -1) != arr_map.end())
    return std::nullopt;

  try {
    return FinFunctor(name, q.target(), t.target(), std::move(obj_map),
                      std::move(arr_map));
  } catch (const CatError&) {
    return std::nullopt;
  }
}

// Induced functor between pullback carriers: applies V on the left leg and
// keeps the right leg.
FinFunctor pullback_lift(const PullbackCat& from, const PullbackCat& to,
                         const FinFunctor& V, const std::string& name) {
  std::vector<int> obj_map(from.objs.size());
  for (size_t i = 0; i < from.objs.size(); ++i) {
    obj_map[i] = to.find_obj(V.on_object(from.objs[i].left), from.objs[i].right);
    if (obj_map[i] == FinCat::kNone)
      fail(Err::UnknownObject, name + ": image object escapes the pullback");
  }
  std::vector<int> arr_map(from.carrier->arrow_count());
  for (int a = 0; a < from.carrier->arrow_count(); ++a) {
    arr_map[a] = to.find_arr(V.on_arrow(from.arrs[a].u), from.arrs[a].k);
    if (arr_map[a] == FinCat::kNone)
      fail(Err::UnknownArrow, name + ": image arrow escapes the pullback");
  }
  return FinFunctor(name, from.carrier, to.carrier, std::move(obj_map),
                    std::move(arr_map));
}

}  // namespace

PreservationReport preservation_experiment(const FinFunctor& G,
                                           const FinFunctor& H,
                                           const FinFunctor& anchor,
                                           const FinFunctor& D, int max_len,
                                           const Limits& lim) {
  if (!G.source()->same_structure(*H.source()) ||
      !G.target()->same_structure(*H.target()))
    fail(Err::ParallelismMismatch,
         "preservation: " + G.name() + " and " + H.name() + " are not parallel");
  if (!anchor.source()->same_structure(*G.target()))
    fail(Err::TargetMismatch,
         "preservation: anchor must start at the codomain of the pair");
  if (!anchor.target()->same_structure(*D.target()))
    fail(Err::TargetMismatch,
         "preservation: anchor and the change-of-base functor must share a target");

  PreservationReport rep;
  const FinFunctor aG = compose_functors(anchor, G);
  const FinFunctor aH = compose_functors(anchor, H);
  rep.anchor_coequalizes = functor_equal(aG, aH);
  if (!rep.anchor_coequalizes) return rep;

  CoeqResult down = coequalizer(G, H, max_len, lim, "E");
  if (auto* div = std::get_if<CoeqDiverged>(&down)) {
    rep.down_trace = div->class_trace;
    return rep;
  }
  const CoeqOk& ok_down = std::get<CoeqOk>(down);
  rep.down_certified = true;
  rep.down_trace = ok_down.class_trace;
  rep.down_objects = ok_down.quotient->object_count();
  rep.down_arrows = ok_down.quotient->arrow_count();

  std::optional<FinFunctor> anchorE =
      factor_through(ok_down.q, anchor, "anchorE");
  rep.anchor_factors_ok = anchorE.has_value();
  if (!anchorE) return rep;

  PullbackCat Yp = pullback_cat(anchor, D, "Y'", lim);
  PullbackCat Xp = pullback_cat(aG, D, "X'", lim);
  PullbackCat Ep = pullback_cat(*anchorE, D, "E'", lim);
  rep.pulled_objects = Ep.carrier->object_count();
  rep.pulled_arrows = Ep.carrier->arrow_count();

  const FinFunctor Gp = pullback_lift(Xp, Yp, G, "G'");
  const FinFunctor Hp = pullback_lift(Xp, Yp, H, "H'");

  CoeqResult up = coequalizer(Gp, Hp, max_len, lim, "E''");
  if (auto* div = std::get_if<CoeqDiverged>(&up)) {
    rep.up_trace = div->class_trace;
    return rep;
  }
  const CoeqOk& ok_up = std::get<CoeqOk>(up);
  rep.up_certified = true;
  rep.up_trace = ok_up.class_trace;
  rep.up_objects = ok_up.quotient->object_count();
  rep.up_arrows = ok_up.quotient->arrow_count();
  rep.computed = true;

  // Comparison out of the upstairs coequalizer: descend (y, w) -> (Q y, w).
  FinFunctor T = pullback_lift(Yp, Ep, ok_down.q, "toEp");
  std::optional<FinFunctor> kappa = factor_through(ok_up.q, T, "kappa");
  rep.kappa_well_defined = kappa.has_value();
  if (!kappa) return rep;
  rep.kappa_commutes = functor_equal(compose_functors(*kappa, ok_up.q), T);

  std::vector<char> obj_seen(Ep.carrier->object_count(), 0);
  bool obj_inj = true;
  for (int o = 0; o < ok_up.quotient->object_count(); ++o) {
    if (obj_seen[kappa->on_object(o)]) obj_inj = false;
    obj_seen[kappa->on_object(o)] = 1;
  }
  rep.obj_bijective =
      obj_inj && std::all_of(obj_seen.begin(), obj_seen.end(),
                             [](char c) { return c != 0; });
  std::vector<char> arr_seen(Ep.carrier->arrow_count(), 0);
  bool arr_inj = true;
  for (int a = 0; a < ok_up.quotient->arrow_count(); ++a) {
    if (arr_seen[kappa->on_arrow(a)]) arr_inj = false;
    arr_seen[kappa->on_arrow(a)] = 1;
  }
  rep.arr_bijective =
      arr_inj && std::all_of(arr_seen.begin(), arr_seen.end(),
                             [](char c) { return c != 0; });
  return rep;
}

}  // namespace fibcat
