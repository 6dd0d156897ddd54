#pragma once

#include "kbracket/laurent.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kbracket {

/// One of the three perfect matchings on the four slots of a crossing.
enum class Pairing : std::uint8_t {
  P01_23 = 0,  // {0,1} {2,3}
  P02_13 = 1,  // {0,2} {1,3}
  P03_12 = 2,  // {0,3} {1,2}
};

/// Slot partner of `slot` under `p`.
int pair_partner(Pairing p, int slot);
/// The matching that is neither `x` nor `y` (x != y).
Pairing third_pairing(Pairing x, Pairing y);

struct StrandEnd {
  int crossing = 0;
  int slot = 0;
  friend bool operator==(const StrandEnd&, const StrandEnd&) = default;
};

/// A crossing is known to the bracket only through its two smoothings.
struct Crossing {
  Pairing a = Pairing::P01_23;
  Pairing b = Pairing::P03_12;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Labels per crossing; false = A, true = B.
class State {
 public:
  State() = default;
  explicit State(std::vector<bool> labels) : labels_(std::move(labels)) {}
  static State all_a(int crossings) { return State(std::vector<bool>(crossings, false)); }
  static State all_b(int crossings) { return State(std::vector<bool>(crossings, true)); }
  /// Bit i of `mask` is crossing i's label.
  static State from_mask(int crossings, std::uint64_t mask);

  int size() const { return static_cast<int>(labels_.size()); }
  bool is_b(int i) const { return labels_[i]; }
  void set_b(int i, bool b) { labels_[i] = b; }
  void flip(int i) { labels_[i] = !labels_[i]; }
  int a_count() const { return size() - b_count(); }
  int b_count() const;
  std::uint64_t mask() const;
  friend bool operator==(const State&, const State&) = default;

 private:
  std::vector<bool> labels_;
};

/// Embedding-free unoriented link diagram: crossings with explicit A/B
/// smoothings, a perfect matching of strand ends (the arcs), and a number of
/// crossing-free circles.
class Diagram {
 public:
  Diagram() = default;
  /// `arcs[e]` is the partner of end id e (= 4*crossing + slot). Validates.
  Diagram(std::vector<Crossing> crossings, std::vector<int> arcs, int free_circles);

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int free_circles() const { return free_circles_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const Crossing& crossing(int i) const { return crossings_[i]; }
  int arc_partner(int end) const { return arcs_[end]; }
  const std::vector<int>& arcs() const { return arcs_; }

  Diagram with_free_circles(int n) const;
  friend bool operator==(const Diagram&, const Diagram&) = default;

  static int end_id(int crossing, int slot) { return 4 * crossing + slot; }
  static StrandEnd end_of(int id) { return {id / 4, id % 4}; }

 private:
  std::vector<Crossing> crossings_;
  std::vector<int> arcs_;
  int free_circles_ = 0;
};

class EnumerationLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultEnumerationLimit = 24;
inline constexpr int kMaxEnumerationLimit = 30;

struct EnumerationConfig {
  int limit = kDefaultEnumerationLimit;
  int workers = 1;
};

/// |sD|: circles after smoothing every crossing by its label in `s`.
int components(const Diagram& d, const State& s);

/// Number of link components (strands go straight through every crossing).
int link_components(const Diagram& d);

/// Histogram of states by (b(s), |s|): counts[b][k] = #states with b(s) = b
/// and |s| = k. Every other state-sum quantity is a function of it.
struct StateHistogram {
  int crossings = 0;
  std::vector<std::vector<std::uint64_t>> counts;
  std::uint64_t at(int b, int circles) const;
};

StateHistogram state_histogram(const Diagram& d, const EnumerationConfig& cfg = {});

/// Kauffman bracket by full state-sum enumeration, normalized to 1 on the
/// unknot. Throws EnumerationLimitError above cfg.limit crossings.
LaurentPoly bracket(const Diagram& d, const EnumerationConfig& cfg = {});
LaurentPoly bracket_from_histogram(const StateHistogram& h);

struct ExtremeDegrees {
  int m;  // lowest state degree, from the all-B state
  int M;  // highest state degree, from the all-A state
  int circles_a;
  int circles_b;
};

ExtremeDegrees extreme_degrees(const Diagram& d);

enum class Side { A, B };

/// Gamma_A = {s : |s| = |s_A| + b(s)}, Gamma_B = {s : |s| = |s_B| + a(s)}.
std::vector<State> gamma_states(const Diagram& d, Side side, const EnumerationConfig& cfg = {});

struct ExtremeCoeffs {
  Integer a_m;
  Integer a_M;
};

/// Coefficients of the bracket at degrees m and M via the Lando graphs of both
/// extreme states; no state enumeration.
ExtremeCoeffs extreme_coeffs(const Diagram& d);
/// Same quantities summed over Gamma_A / Gamma_B by enumeration.
ExtremeCoeffs extreme_coeffs_by_states(const Diagram& d, const EnumerationConfig& cfg = {});

struct SecondCoeffs {
  Integer a_m_plus_4;
  Integer a_M_minus_4;
};

/// Coefficients at m+4 and M-4 from the Gamma / Gamma^1 sums. Needs state
/// enumeration, so it obeys cfg.limit.
SecondCoeffs second_coeffs(const Diagram& d, const EnumerationConfig& cfg = {});
SecondCoeffs second_coeffs_from_histogram(const StateHistogram& h, int circles_a, int circles_b);

/// Swaps the A and B smoothing of every crossing.
Diagram mirror(const Diagram& d);

/// True when the diagram has an embedding in the sphere in which each
/// crossing's two strands pass straight through (opposite slots).
bool is_planar(const Diagram& d);

/// Throws EnumerationLimitError if d is too large for cfg.
void check_enumerable(const Diagram& d, const EnumerationConfig& cfg);

}  // namespace kbracket
