#include "kbracket/diagram.hpp"

#include "kbracket/chords.hpp"
#include "kbracket/graphs.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <bit>
#include <numeric>
#include <sstream>
#include <thread>

namespace kbracket {

namespace {

constexpr std::array<std::array<int, 4>, 3> kPartner = {{
    {1, 0, 3, 2},  // P01_23
    {2, 3, 0, 1},  // P02_13
    {3, 2, 1, 0},  // P03_12
}};

struct DisjointSets {
  std::vector<int> parent;
  int roots = 0;

  explicit DisjointSets(int n) : parent(n), roots(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    parent[y] = x;
    --roots;
  }
};

// Arcs are the nodes; each crossing label contributes two arc-arc unions.
struct ArcModel {
  int arc_count = 0;
  // joins[i][label] = {{u0, v0}, {u1, v1}} in arc ids
  std::vector<std::array<std::array<std::array<int, 2>, 2>, 2>> joins;
};

ArcModel build_arc_model(const Diagram& d) {
  const int n = d.crossing_count();
  std::vector<int> arc_of_end(4 * n, -1);
  ArcModel model;
  for (int e = 0; e < 4 * n; ++e) {
    if (arc_of_end[e] >= 0) continue;
    arc_of_end[e] = model.arc_count;
    arc_of_end[d.arc_partner(e)] = model.arc_count;
    ++model.arc_count;
  }
  model.joins.resize(n);
  for (int i = 0; i < n; ++i) {
    for (int label = 0; label < 2; ++label) {
      const Pairing p = label == 0 ? d.crossing(i).a : d.crossing(i).b;
      const int first_partner = pair_partner(p, 0);
      int other = 1;
      while (other == first_partner) ++other;
      const int other_partner = pair_partner(p, other);
      model.joins[i][label][0] = {arc_of_end[4 * i], arc_of_end[4 * i + first_partner]};
      model.joins[i][label][1] = {arc_of_end[4 * i + other], arc_of_end[4 * i + other_partner]};
    }
  }
  return model;
}

// Depth-first enumeration of labels in crossing order, one union-find copy per
// level. The last crossing is resolved without copying.
class HistogramWalker {
 public:
  HistogramWalker(const ArcModel& model, int free_circles, StateHistogram& out)
      : model_(model), free_(free_circles), out_(out), n_(static_cast<int>(model.joins.size())) {
    stack_.assign(n_ + 1, std::vector<int>(model.arc_count));
  }

  void run_from(int level, std::vector<int> parent, int roots, int b) {
    stack_[level] = std::move(parent);
    walk(level, roots, b);
  }

 private:
  static int find(std::vector<int>& p, int x) {
    while (p[x] != x) {
      p[x] = p[p[x]];
      x = p[x];
    }
    return x;
  }

  void record(int b, int roots) { ++out_.counts[b][roots + free_]; }

  void walk(int level, int roots, int b) {
    if (level == n_) {
      record(b, roots);
      return;
    }
    auto& cur = stack_[level];
    if (level + 1 == n_) {
      for (int label = 0; label < 2; ++label) {
        const auto& j = model_.joins[level][label];
        int r1 = find(cur, j[0][0]);
        int r2 = find(cur, j[0][1]);
        int r3 = find(cur, j[1][0]);
        int r4 = find(cur, j[1][1]);
        int merged = 0;
        if (r1 != r2) {
          ++merged;
          if (r3 == r2) r3 = r1;
          if (r4 == r2) r4 = r1;
        }
        if (r3 != r4) ++merged;
        record(b + label, roots - merged);
      }
      return;
    }
    for (int label = 0; label < 2; ++label) {
      auto& next = stack_[level + 1];
      next = cur;
      int r = roots;
      for (const auto& pr : model_.joins[level][label]) {
        const int x = find(next, pr[0]);
        const int y = find(next, pr[1]);
        if (x != y) {
          next[y] = x;
          --r;
        }
      }
      walk(level + 1, r, b + label);
    }
  }

  const ArcModel& model_;
  int free_;
  StateHistogram& out_;
  int n_;
  std::vector<std::vector<int>> stack_;
};

StateHistogram empty_histogram(const Diagram& d) {
  StateHistogram h;
  h.crossings = d.crossing_count();
  h.counts.assign(h.crossings + 1, std::vector<std::uint64_t>(2 * h.crossings + d.free_circles() + 2, 0));
  return h;
}

}  // namespace

int pair_partner(Pairing p, int slot) { return kPartner[static_cast<int>(p)][slot]; }

Pairing third_pairing(Pairing x, Pairing y) {
  return static_cast<Pairing>(3 - static_cast<int>(x) - static_cast<int>(y));
}

State State::from_mask(int crossings, std::uint64_t mask) {
  std::vector<bool> labels(crossings);
  for (int i = 0; i < crossings; ++i) labels[i] = (mask >> i) & 1u;
  return State(std::move(labels));
}

int State::b_count() const { return static_cast<int>(std::count(labels_.begin(), labels_.end(), true)); }

std::uint64_t State::mask() const {
  if (labels_.size() > 64) throw std::out_of_range("State::mask: more than 64 crossings");
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i]) m |= std::uint64_t{1} << i;
  return m;
}

Diagram::Diagram(std::vector<Crossing> crossings, std::vector<int> arcs, int free_circles)
    : crossings_(std::move(crossings)), arcs_(std::move(arcs)), free_circles_(free_circles) {
  const int ends = 4 * crossing_count();
  if (free_circles_ < 0) throw std::invalid_argument("free_circles must be non-negative");
  if (static_cast<int>(arcs_.size()) != ends)
    throw std::invalid_argument("arc matching must cover every strand end exactly once");
  for (int i = 0; i < crossing_count(); ++i)
    if (crossings_[i].a == crossings_[i].b)
      throw std::invalid_argument("crossing " + std::to_string(i) + " has identical A and B smoothings");
  for (int e = 0; e < ends; ++e) {
    const int p = arcs_[e];
    if (p < 0 || p >= ends) throw std::invalid_argument("arc partner out of range");
    if (p == e) throw std::invalid_argument("arc pairs a strand end with itself");
    if (arcs_[p] != e) throw std::invalid_argument("arc matching is not symmetric");
  }
}

Diagram Diagram::with_free_circles(int n) const {
  Diagram d = *this;
  d.free_circles_ = n;
  return d;
}

int components(const Diagram& d, const State& s) {
  const int n = d.crossing_count();
  if (s.size() != n) throw std::invalid_argument("state length differs from crossing count");
  DisjointSets ds(4 * n);
  for (int e = 0; e < 4 * n; ++e) ds.unite(e, d.arc_partner(e));
  for (int i = 0; i < n; ++i) {
    const Pairing p = s.is_b(i) ? d.crossing(i).b : d.crossing(i).a;
    for (int slot = 0; slot < 4; ++slot) ds.unite(4 * i + slot, 4 * i + pair_partner(p, slot));
  }
  return ds.roots + d.free_circles();
}

int link_components(const Diagram& d) {
  const int n = d.crossing_count();
  DisjointSets ds(4 * n);
  for (int e = 0; e < 4 * n; ++e) ds.unite(e, d.arc_partner(e));
  for (int i = 0; i < n; ++i) {
    const Pairing p = third_pairing(d.crossing(i).a, d.crossing(i).b);
    for (int slot = 0; slot < 4; ++slot) ds.unite(4 * i + slot, 4 * i + pair_partner(p, slot));
  }
  return ds.roots + d.free_circles();
}

std::uint64_t StateHistogram::at(int b, int circles) const {
  if (b < 0 || b >= static_cast<int>(counts.size())) return 0;
  const auto& row = counts[b];
  if (circles < 0 || circles >= static_cast<int>(row.size())) return 0;
  return row[circles];
}

void check_enumerable(const Diagram& d, const EnumerationConfig& cfg) {
  if (cfg.limit > kMaxEnumerationLimit)
    throw std::invalid_argument("enumeration limit may not exceed " + std::to_string(kMaxEnumerationLimit));
  if (d.crossing_count() > cfg.limit) {
    std::ostringstream msg;
    msg << "diagram has " << d.crossing_count() << " crossings, above the enumeration limit of " << cfg.limit
        << "; raise it with --limit <n> (at most " << kMaxEnumerationLimit
        << ") or use extreme-coefficient mode (`analyze`), which needs no state enumeration";
    throw EnumerationLimitError(msg.str());
  }
}

StateHistogram state_histogram(const Diagram& d, const EnumerationConfig& cfg) {
  check_enumerable(d, cfg);
  const int n = d.crossing_count();
  StateHistogram total = empty_histogram(d);
  if (n == 0) {
    ++total.counts[0][d.free_circles()];
    return total;
  }
  const ArcModel model = build_arc_model(d);

  // Fix the first `split` crossings per task; tasks are dealt round-robin to
  // workers and histograms are summed, so the result is partition independent.
  const int workers = std::max(1, cfg.workers);
  int split = 0;
  while (split < n - 1 && (1 << split) < 8 * workers && split < 10) ++split;
  const std::uint64_t tasks = std::uint64_t{1} << split;

  auto run_tasks = [&](int worker, StateHistogram& out) {
    HistogramWalker walker(model, d.free_circles(), out);
    for (std::uint64_t t = worker; t < tasks; t += workers) {
      DisjointSets ds(model.arc_count);
      int b = 0;
      for (int i = 0; i < split; ++i) {
        const int label = (t >> i) & 1u;
        b += label;
        for (const auto& pr : model.joins[i][label]) ds.unite(pr[0], pr[1]);
      }
      walker.run_from(split, ds.parent, ds.roots, b);
    }
  };

  if (workers == 1) {
    run_tasks(0, total);
    return total;
  }
  std::vector<StateHistogram> partial(workers, empty_histogram(d));
  std::vector<std::thread> threads;
  for (int w = 0; w < workers; ++w) threads.emplace_back(run_tasks, w, std::ref(partial[w]));
  for (auto& t : threads) t.join();
  for (const auto& p : partial)
    for (std::size_t b = 0; b < p.counts.size(); ++b)
      for (std::size_t k = 0; k < p.counts[b].size(); ++k) total.counts[b][k] += p.counts[b][k];
  return total;
}

LaurentPoly bracket_from_histogram(const StateHistogram& h) {
  const int n = h.crossings;
  LaurentPoly result;
  const int max_circles = h.counts.empty() ? 0 : static_cast<int>(h.counts[0].size());
  for (int k = 0; k < max_circles; ++k) {
    LaurentPoly weights;
    for (int b = 0; b <= n; ++b) {
      const std::uint64_t c = h.at(b, k);
      if (c != 0) weights.add_term(n - 2 * b, Integer(c));
    }
    if (weights.is_zero()) continue;
    if (k == 0) throw std::invalid_argument("state with no circles; the bracket of the empty diagram is undefined");
    result += weights * delta_pow(k - 1);
  }
  return result;
}

LaurentPoly bracket(const Diagram& d, const EnumerationConfig& cfg) {
  return bracket_from_histogram(state_histogram(d, cfg));
}

ExtremeDegrees extreme_degrees(const Diagram& d) {
  const int n = d.crossing_count();
  const int sa = components(d, State::all_a(n));
  const int sb = components(d, State::all_b(n));
  return {-n - 2 * sb + 2, n + 2 * sa - 2, sa, sb};
}

std::vector<State> gamma_states(const Diagram& d, Side side, const EnumerationConfig& cfg) {
  check_enumerable(d, cfg);
  const int n = d.crossing_count();
  const int base = components(d, side == Side::A ? State::all_a(n) : State::all_b(n));
  std::vector<State> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    State s = State::from_mask(n, mask);
    const int flipped = side == Side::A ? s.b_count() : s.a_count();
    if (components(d, s) == base + flipped) out.push_back(std::move(s));
  }
  return out;
}

namespace {

int sign_pow(int e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

ExtremeCoeffs extreme_coeffs(const Diagram& d) {
  const auto deg = extreme_degrees(d);
  const Integer fa = f_reduced(lando_graph(a_state_chords(d)));
  const Integer fb = f_reduced(lando_graph(a_state_chords(mirror(d))));
  return {sign_pow(deg.circles_b - 1) * fb, sign_pow(deg.circles_a - 1) * fa};
}

ExtremeCoeffs extreme_coeffs_by_states(const Diagram& d, const EnumerationConfig& cfg) {
  const auto deg = extreme_degrees(d);
  Integer sum_a = 0;
  for (const auto& s : gamma_states(d, Side::A, cfg)) sum_a += sign_pow(s.b_count());
  Integer sum_b = 0;
  for (const auto& s : gamma_states(d, Side::B, cfg)) sum_b += sign_pow(s.a_count());
  return {sign_pow(deg.circles_b - 1) * sum_b, sign_pow(deg.circles_a - 1) * sum_a};
}

SecondCoeffs second_coeffs_from_histogram(const StateHistogram& h, int circles_a, int circles_b) {
  const int n = h.crossings;
  // A side: Gamma_A has |s| = |s_A| + b, Gamma_A^1 has |s| = |s_A| + b - 2.
  Integer gamma = 0, gamma_b = 0, gamma1 = 0;
  for (int b = 0; b <= n; ++b) {
    const Integer c0(h.at(b, circles_a + b));
    const Integer c1(h.at(b, circles_a + b - 2));
    gamma += sign_pow(b) * c0;
    gamma_b += sign_pow(b) * b * c0;
    gamma1 += sign_pow(b) * c1;
  }
  const Integer top = sign_pow(circles_a - 1) * ((circles_a - 1) * gamma + gamma_b + gamma1);

  // B side is the same computation with a(s) = n - b(s) in place of b(s).
  Integer delta = 0, delta_a = 0, delta1 = 0;
  for (int b = 0; b <= n; ++b) {
    const int a = n - b;
    const Integer c0(h.at(b, circles_b + a));
    const Integer c1(h.at(b, circles_b + a - 2));
    delta += sign_pow(a) * c0;
    delta_a += sign_pow(a) * a * c0;
    delta1 += sign_pow(a) * c1;
  }
  const Integer bottom = sign_pow(circles_b - 1) * ((circles_b - 1) * delta + delta_a + delta1);
  return {bottom, top};
}

SecondCoeffs second_coeffs(const Diagram& d, const EnumerationConfig& cfg) {
  const auto h = state_histogram(d, cfg);
  const auto deg = extreme_degrees(d);
  return second_coeffs_from_histogram(h, deg.circles_a, deg.circles_b);
}

Diagram mirror(const Diagram& d) {
  auto crossings = d.crossings();
  for (auto& c : crossings) std::swap(c.a, c.b);
  return Diagram(std::move(crossings), d.arcs(), d.free_circles());
}

bool is_planar(const Diagram& d) {
  // Each crossing becomes a wheel: a 4-cycle of its slots in straight-through
  // order around a hub. Wheels embed rigidly, so the slot rotation is forced
  // up to reflection. Arcs are subdivided to keep the graph simple.
  const int n = d.crossing_count();
  const int hub0 = 4 * n;
  const int mid0 = 5 * n;
  using G = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  G g(mid0 + 2 * n);
  for (int i = 0; i < n; ++i) {
    const Pairing through = third_pairing(d.crossing(i).a, d.crossing(i).b);
    const int far = pair_partner(through, 0);
    std::array<int, 4> ring{0, -1, far, -1};
    int k = 1;
    for (int slot = 1; slot < 4; ++slot)
      if (slot != far) {
        ring[k] = slot;
        k += 2;
      }
    for (int j = 0; j < 4; ++j) {
      boost::add_edge(4 * i + ring[j], 4 * i + ring[(j + 1) % 4], g);
      boost::add_edge(hub0 + i, 4 * i + ring[j], g);
    }
  }
  int mid = mid0;
  for (int e = 0; e < 4 * n; ++e) {
    const int f = d.arc_partner(e);
    if (e > f) continue;
    boost::add_edge(e, mid, g);
    boost::add_edge(mid, f, g);
    ++mid;
  }
  return boost::boyer_myrvold_planarity_test(g);
}

}  // namespace kbracket
