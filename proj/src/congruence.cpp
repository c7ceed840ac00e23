#include "sgt/congruence.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace sgt {

  namespace {

    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), Elem(0));
      }

      Elem find(Elem x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }

      bool unite(Elem a, Elem b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return false;
        }
        if (b < a) {
          std::swap(a, b);
        }
        _parent[b] = a;
        return true;
      }

      std::vector<Elem> labels() {
        std::vector<Elem> out(_parent.size());
        for (Elem x = 0; x < out.size(); ++x) {
          out[x] = find(x);
        }
        return out;
      }

     private:
      std::vector<Elem> _parent;
    };

    void check_pairs(FiniteSemigroup const& s, PairSet const& x) {
      for (auto [a, b] : x) {
        if (a >= s.size() || b >= s.size()) {
          throw Error(ErrorKind::range_error,
                      "pair (" + std::to_string(a) + ", " + std::to_string(b)
                          + ") out of range");
        }
      }
    }

    // Merges queued pairs and, for every effective merge, queues the
    // translates. A merge that is already implied needs no translates: the
    // path implying it has had its translates queued.
    RightCongruence saturate(FiniteSemigroup const& s,
                             UnionFind&             uf,
                             std::deque<Pair>       queue,
                             bool                   two_sided) {
      std::size_t const n = s.size();
      while (!queue.empty()) {
        auto [a, b] = queue.front();
        queue.pop_front();
        if (!uf.unite(a, b)) {
          continue;
        }
        for (Elem t = 0; t < n; ++t) {
          queue.emplace_back(s.mul(a, t), s.mul(b, t));
        }
        if (two_sided) {
          for (Elem t = 0; t < n; ++t) {
            queue.emplace_back(s.mul(t, a), s.mul(t, b));
          }
        }
      }
      return RightCongruence::from_labels(uf.labels());
    }

    // Undirected X-sequence graph: x*s -- y*s for (x, y) in X and s in S^1.
    std::vector<std::vector<Elem>> sequence_graph(FiniteSemigroup const& s,
                                                  PairSet const&         x) {
      std::size_t const              n = s.size();
      std::vector<std::vector<Elem>> adj(n);
      for (auto [p, q] : x.symmetrized()) {
        adj[p].push_back(q);
        for (Elem t = 0; t < n; ++t) {
          adj[s.mul(p, t)].push_back(s.mul(q, t));
        }
      }
      for (auto& nbrs : adj) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
      }
      return adj;
    }

    inline constexpr std::size_t kUnreached = std::size_t(-1);

    std::vector<std::size_t> bfs(std::vector<std::vector<Elem>> const& adj,
                                 Elem                                  source) {
      std::vector<std::size_t> dist(adj.size(), kUnreached);
      std::deque<Elem>         queue{source};
      dist[source] = 0;
      while (!queue.empty()) {
        Elem u = queue.front();
        queue.pop_front();
        for (auto v : adj[u]) {
          if (dist[v] == kUnreached) {
            dist[v] = dist[u] + 1;
            queue.push_back(v);
          }
        }
      }
      return dist;
    }

    std::size_t related_pair_count(RightCongruence const& rho) {
      std::vector<std::size_t> sizes(rho.index(), 0);
      for (auto c : rho.class_of()) {
        ++sizes[c];
      }
      std::size_t total = 0;
      for (auto k : sizes) {
        total += k * (k - 1) / 2;
      }
      return total;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // PairSet
  ////////////////////////////////////////////////////////////////////////

  PairSet::PairSet(std::initializer_list<Pair> pairs)
      : PairSet(std::vector<Pair>(pairs)) {}

  PairSet::PairSet(std::vector<Pair> pairs) : _pairs(std::move(pairs)) {
    std::sort(_pairs.begin(), _pairs.end());
    _pairs.erase(std::unique(_pairs.begin(), _pairs.end()), _pairs.end());
  }

  void PairSet::insert(Elem a, Elem b) {
    Pair p{a, b};
    auto it = std::lower_bound(_pairs.begin(), _pairs.end(), p);
    if (it == _pairs.end() || *it != p) {
      _pairs.insert(it, p);
    }
  }

  void PairSet::insert(PairSet const& other) {
    std::vector<Pair> merged;
    std::set_union(_pairs.begin(),
                   _pairs.end(),
                   other._pairs.begin(),
                   other._pairs.end(),
                   std::back_inserter(merged));
    _pairs = std::move(merged);
  }

  PairSet PairSet::symmetrized() const {
    std::vector<Pair> all = _pairs;
    for (auto [a, b] : _pairs) {
      all.emplace_back(b, a);
    }
    return PairSet(std::move(all));
  }

  PairSet PairSet::flipped() const {
    std::vector<Pair> all;
    for (auto [a, b] : _pairs) {
      all.emplace_back(b, a);
    }
    return PairSet(std::move(all));
  }

  ////////////////////////////////////////////////////////////////////////
  // RightCongruence
  ////////////////////////////////////////////////////////////////////////

  RightCongruence RightCongruence::from_labels(std::vector<Elem> const& labels) {
    RightCongruence   rho;
    std::vector<Elem> renumber;
    rho._class_of.resize(labels.size());
    std::size_t const universe
        = labels.empty()
              ? 0
              : std::size_t(*std::max_element(labels.begin(), labels.end())) + 1;
    renumber.assign(universe, kOne);
    for (std::size_t a = 0; a < labels.size(); ++a) {
      Elem& slot = renumber[labels[a]];
      if (slot == kOne) {
        slot = Elem(rho._index++);
      }
      rho._class_of[a] = slot;
    }
    return rho;
  }

  RightCongruence RightCongruence::identity(std::size_t n) {
    std::vector<Elem> labels(n);
    std::iota(labels.begin(), labels.end(), Elem(0));
    return from_labels(labels);
  }

  RightCongruence RightCongruence::universal(std::size_t n) {
    return from_labels(std::vector<Elem>(n, 0));
  }

  std::vector<std::vector<Elem>> RightCongruence::classes() const {
    std::vector<std::vector<Elem>> out(_index);
    for (Elem a = 0; a < _class_of.size(); ++a) {
      out[_class_of[a]].push_back(a);
    }
    return out;
  }

  std::vector<Elem> RightCongruence::representatives() const {
    std::vector<Elem> reps(_index, kOne);
    for (Elem a = 0; a < _class_of.size(); ++a) {
      if (reps[_class_of[a]] == kOne) {
        reps[_class_of[a]] = a;
      }
    }
    return reps;
  }

  bool RightCongruence::refines(RightCongruence const& other) const {
    if (other.size() != size()) {
      return false;
    }
    std::vector<Elem> image(_index, kOne);
    for (Elem a = 0; a < _class_of.size(); ++a) {
      Elem& slot = image[_class_of[a]];
      if (slot == kOne) {
        slot = other._class_of[a];
      } else if (slot != other._class_of[a]) {
        return false;
      }
    }
    return true;
  }

  bool canonical_less(RightCongruence const& a, RightCongruence const& b) {
    if (a.index() != b.index()) {
      return a.index() > b.index();
    }
    return a.class_of() < b.class_of();
  }

  ////////////////////////////////////////////////////////////////////////
  // Compatibility
  ////////////////////////////////////////////////////////////////////////

  std::optional<CompatibilityViolation>
  find_right_violation(FiniteSemigroup const& s, RightCongruence const& rho) {
    // Comparing each element with its class representative suffices.
    auto const reps = rho.representatives();
    for (Elem a = 0; a < s.size(); ++a) {
      Elem r = reps[rho.class_of(a)];
      if (r == a) {
        continue;
      }
      for (Elem t = 0; t < s.size(); ++t) {
        if (!rho.related(s.mul(r, t), s.mul(a, t))) {
          return CompatibilityViolation{r, a, t, false};
        }
      }
    }
    return std::nullopt;
  }

  std::optional<CompatibilityViolation>
  find_left_violation(FiniteSemigroup const& s, RightCongruence const& rho) {
    auto const reps = rho.representatives();
    for (Elem a = 0; a < s.size(); ++a) {
      Elem r = reps[rho.class_of(a)];
      if (r == a) {
        continue;
      }
      for (Elem t = 0; t < s.size(); ++t) {
        if (!rho.related(s.mul(t, r), s.mul(t, a))) {
          return CompatibilityViolation{r, a, t, true};
        }
      }
    }
    return std::nullopt;
  }

  bool is_right_congruence(FiniteSemigroup const& s, RightCongruence const& rho) {
    return rho.size() == s.size() && !find_right_violation(s, rho);
  }

  bool is_two_sided_congruence(FiniteSemigroup const& s,
                               RightCongruence const& rho) {
    return is_right_congruence(s, rho) && !find_left_violation(s, rho);
  }

  ////////////////////////////////////////////////////////////////////////
  // Generation
  ////////////////////////////////////////////////////////////////////////

  RightCongruence rc_generate(FiniteSemigroup const& s,
                              PairSet const&         x,
                              bool                   two_sided) {
    check_pairs(s, x);
    UnionFind uf(s.size());
    return saturate(
        s, uf, std::deque<Pair>(x.begin(), x.end()), two_sided);
  }

  RightCongruence rc_extend(FiniteSemigroup const& s,
                            RightCongruence const& rho,
                            PairSet const&         x,
                            bool                   two_sided) {
    check_pairs(s, x);
    if (rho.size() != s.size()) {
      throw Error(ErrorKind::mismatched_input, "congruence has the wrong size");
    }
    UnionFind  uf(s.size());
    auto const reps = rho.representatives();
    for (Elem a = 0; a < s.size(); ++a) {
      uf.unite(a, reps[rho.class_of(a)]);
    }
    return saturate(
        s, uf, std::deque<Pair>(x.begin(), x.end()), two_sided);
  }

  RightCongruence rc_join(FiniteSemigroup const& s,
                          RightCongruence const& rho,
                          RightCongruence const& sigma) {
    PairSet all = spanning_pairs(rho);
    all.insert(spanning_pairs(sigma));
    return rc_generate(s, all);
  }

  PairSet spanning_pairs(RightCongruence const& rho) {
    auto const        reps = rho.representatives();
    std::vector<Pair> pairs;
    for (Elem a = 0; a < rho.size(); ++a) {
      Elem r = reps[rho.class_of(a)];
      if (r != a) {
        pairs.emplace_back(a, r);
      }
    }
    return PairSet(std::move(pairs));
  }

  PairSet within_class_pairs(RightCongruence const& rho) {
    std::vector<Pair> pairs;
    for (auto const& cls : rho.classes()) {
      for (std::size_t i = 0; i < cls.size(); ++i) {
        for (std::size_t j = i + 1; j < cls.size(); ++j) {
          pairs.emplace_back(cls[i], cls[j]);
        }
      }
    }
    return PairSet(std::move(pairs));
  }

  ////////////////////////////////////////////////////////////////////////
  // X-sequences
  ////////////////////////////////////////////////////////////////////////

  std::optional<XSequence> find_x_sequence(FiniteSemigroup const& s,
                                           PairSet const&         x,
                                           Elem                   a,
                                           Elem                   b) {
    check_pairs(s, x);
    if (a >= s.size() || b >= s.size()) {
      throw Error(ErrorKind::range_error, "endpoint out of range");
    }
    XSequence seq{a, b, {}};
    if (a == b) {
      return seq;
    }
    auto const dist = bfs(sequence_graph(s, x), b);
    if (dist[a] == kUnreached) {
      return std::nullopt;
    }
    auto const xbar = x.symmetrized();
    Elem       cur  = a;
    while (cur != b) {
      bool advanced = false;
      for (auto [p, q] : xbar) {
        // multipliers in index order, the adjoined identity last
        for (std::size_t k = 0; k <= s.size() && !advanced; ++k) {
          Elem t = k == s.size() ? kOne : Elem(k);
          if (s.mul1(p, t) != cur) {
            continue;
          }
          Elem next = s.mul1(q, t);
          if (dist[next] + 1 == dist[cur]) {
            seq.steps.push_back({p, q, t});
            cur      = next;
            advanced = true;
          }
        }
        if (advanced) {
          break;
        }
      }
      if (!advanced) {
        throw Error(ErrorKind::internal_assert_failure,
                    "X-sequence reconstruction stalled");
      }
    }
    return seq;
  }

  bool check_x_sequence(FiniteSemigroup const& s,
                        PairSet const&         x,
                        XSequence const&       seq) {
    if (seq.steps.empty()) {
      return seq.a == seq.b;
    }
    auto const  sym  = x.symmetrized();
    auto const& xbar = sym.pairs();
    Elem        cur  = seq.a;
    for (auto const& step : seq.steps) {
      if (!std::binary_search(xbar.begin(), xbar.end(), Pair{step.x, step.y})) {
        return false;
      }
      if (step.s != kOne && step.s >= s.size()) {
        return false;
      }
      if (s.mul1(step.x, step.s) != cur) {
        return false;
      }
      cur = s.mul1(step.y, step.s);
    }
    return cur == seq.b;
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  CongruenceLattice
  enumerate_right_congruences(FiniteSemigroup const&     s,
                              std::optional<std::size_t> cap) {
    std::size_t const            n = s.size();
    std::set<std::vector<Elem>>  seen;
    std::vector<RightCongruence> found;
    auto add = [&](RightCongruence rho) {
      if (seen.insert(rho.class_of()).second) {
        found.push_back(std::move(rho));
        if (cap && found.size() > *cap) {
          throw CapExceeded(found.size());
        }
        return true;
      }
      return false;
    };

    add(RightCongruence::identity(n));
    // One generating pair per distinct principal right congruence.
    std::vector<Pair> principal;
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = a + 1; b < n; ++b) {
        if (add(rc_generate(s, PairSet{{a, b}}))) {
          principal.emplace_back(a, b);
        }
      }
    }
    // Every right congruence is a join of principal ones, so closing under
    // joins with principals reaches all of them.
    for (std::size_t i = 0; i < found.size(); ++i) {
      for (auto [a, b] : principal) {
        if (found[i].related(a, b)) {
          continue;
        }
        add(rc_extend(s, found[i], PairSet{{a, b}}));
      }
    }
    std::sort(found.begin(), found.end(), canonical_less);
    return {std::move(found)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Generating pairs
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Lexicographic k-subsets of candidates, first one generating rho.
    std::optional<PairSet> search_subsets(FiniteSemigroup const&   s,
                                          RightCongruence const&   rho,
                                          std::vector<Pair> const& candidates,
                                          std::size_t              k) {
      std::size_t const        m = candidates.size();
      std::vector<std::size_t> pick(k);
      std::iota(pick.begin(), pick.end(), std::size_t(0));
      while (true) {
        std::vector<Pair> chosen;
        for (auto i : pick) {
          chosen.push_back(candidates[i]);
        }
        PairSet x(std::move(chosen));
        if (rc_generate(s, x) == rho) {
          return x;
        }
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == m - k + i - 1) {
          --i;
        }
        if (i == 0) {
          return std::nullopt;
        }
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) {
          pick[j] = pick[j - 1] + 1;
        }
      }
    }

  }  // namespace

  GeneratingPairs minimal_generating_pairs(FiniteSemigroup const& s,
                                           RightCongruence const& rho,
                                           std::size_t exact_limit) {
    if (rho.size() != s.size()) {
      throw Error(ErrorKind::mismatched_input, "congruence has the wrong size");
    }
    if (rho.is_identity()) {
      return {PairSet{}, true};
    }
    auto const candidates = within_class_pairs(rho).pairs();
    if (candidates.size() <= exact_limit) {
      for (std::size_t k = 1; k <= candidates.size(); ++k) {
        if (auto x = search_subsets(s, rho, candidates, k)) {
          return {std::move(*x), true};
        }
      }
      throw Error(ErrorKind::precondition_failed,
                  "the given relation is not a right congruence");
    }

    // Greedy. Pairs related in the current closure give the same join, so
    // only pairs of current class representatives are tried.
    RightCongruence current = RightCongruence::identity(s.size());
    PairSet         chosen;
    while (current != rho) {
      auto const                     reps = current.representatives();
      std::optional<Pair>            best;
      std::optional<RightCongruence> best_rho;
      std::size_t                    best_score = 0;
      for (std::size_t i = 0; i < reps.size(); ++i) {
        for (std::size_t j = i + 1; j < reps.size(); ++j) {
          if (!rho.related(reps[i], reps[j])) {
            continue;
          }
          auto        next  = rc_extend(s, current, PairSet{{reps[i], reps[j]}});
          std::size_t score = related_pair_count(next);
          if (!best || score > best_score) {
            best       = Pair{reps[i], reps[j]};
            best_rho   = std::move(next);
            best_score = score;
          }
        }
      }
      if (!best || !best_rho->refines(rho)) {
        throw Error(ErrorKind::precondition_failed,
                    "the given relation is not a right congruence");
      }
      chosen.insert(best->first, best->second);
      current = std::move(*best_rho);
    }
    return {std::move(chosen), false};
  }

  ////////////////////////////////////////////////////////////////////////
  // Diameter and quotients
  ////////////////////////////////////////////////////////////////////////

  Diameter rc_diameter(FiniteSemigroup const& s, PairSet const& x) {
    auto const rho = rc_generate(s, x);
    if (!rho.is_universal()) {
      return Disconnected{rho.index()};
    }
    auto const  adj      = sequence_graph(s, x);
    std::size_t diameter = 0;
    for (Elem a = 0; a < s.size(); ++a) {
      for (auto d : bfs(adj, a)) {
        diameter = std::max(diameter, d);
      }
    }
    return diameter;
  }

  FiniteSemigroup quotient_semigroup(FiniteSemigroup const& s,
                                     RightCongruence const& rho) {
    if (rho.size() != s.size()) {
      throw Error(ErrorKind::mismatched_input, "congruence has the wrong size");
    }
    auto bad = find_right_violation(s, rho);
    if (!bad) {
      bad = find_left_violation(s, rho);
    }
    if (bad) {
      std::string product
          = bad->on_left ? std::to_string(bad->s) + "*" + std::to_string(bad->a)
                               + " vs " + std::to_string(bad->s) + "*"
                               + std::to_string(bad->b)
                         : std::to_string(bad->a) + "*" + std::to_string(bad->s)
                               + " vs " + std::to_string(bad->b) + "*"
                               + std::to_string(bad->s);
      throw Error(ErrorKind::not_two_sided,
                  "(" + std::to_string(bad->a) + ", " + std::to_string(bad->b)
                      + ") is not preserved: " + product);
    }
    auto const               reps = rho.representatives();
    std::size_t const        m    = reps.size();
    std::vector<Elem>        table(m * m);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < m; ++i) {
      labels.push_back("[" + s.label(reps[i]) + "]");
      for (std::size_t j = 0; j < m; ++j) {
        table[i * m + j] = rho.class_of(s.mul(reps[i], reps[j]));
      }
    }
    return FiniteSemigroup::from_table(m, std::move(table), std::move(labels));
  }

}  // namespace sgt
