#pragma once

// Oriented state expansion for twisted link diagrams. Each classical
// crossing is resolved into its oriented or disoriented smoothing; the
// resulting state circles are read off as cyclic words of cusps and bars,
// reduced to Plain / K_n / bar-loop form, and assembled into the bracket
//
//   <D> = sum over states of A^(alpha-beta) d^(circles-1) (prod K_n) M^(bar loops)
//
// with d = -A^2 - A^-2. The writhe-normalized form multiplies by (-A^3)^-w.
//
// Port model used for tracing: every pass occurrence p has an incoming port
// IN(p) and an outgoing port OUT(p); the diagram's arcs join OUT of one pass
// to IN of the next. A smoothing is a perfect matching on the four ports of
// a crossing with occurrences p, q:
//
//   oriented:    IN(p)-OUT(q) and IN(q)-OUT(p)   (no cusp, direction kept)
//   disoriented: IN(p)-IN(q) and OUT(p)-OUT(q)   (one cusp per joint,
//                                                 direction reverses)
//
// Cusp side convention: arriving at a port of occurrence p, the cusp's
// acute-angle side is R when (sign > 0) == (role(p) == Over), else L. Only
// the relative pattern of sides matters (reduction identifies the global
// flip); this table makes the positive kink's disoriented state reduce to a
// plain circle, which pins the bracket of the positive kink at -A^3.

#include <cassert>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "twistpoly/errors.hpp"
#include "twistpoly/gauss_code.hpp"
#include "twistpoly/polynomial.hpp"

namespace twistpoly {

enum class Smoothing { Oriented, Disoriented };

struct SmoothingState {
  std::map<int, Smoothing> choice;
};

enum class Side { L, R };

inline Side flip_side(Side s) { return s == Side::L ? Side::R : Side::L; }

struct CircleTok {
  bool is_bar = false;
  Side side = Side::L;

  static CircleTok bar() { return CircleTok{true, Side::L}; }
  static CircleTok cusp(Side s) { return CircleTok{false, s}; }

  friend bool operator==(const CircleTok&, const CircleTok&) = default;
};

// Cyclic word of cusps and bars read along one state circle.
struct CircleWord {
  std::vector<CircleTok> toks;
  friend bool operator==(const CircleWord&, const CircleWord&) = default;
};

// Normal form of a state circle: a plain circle, the alternating circle
// graph K_n (2n cusps), or a trivial loop carrying one irreducible bar.
struct ReducedCircle {
  enum class Kind { Plain, Kn, BarLoop };
  Kind kind = Kind::Plain;
  int n = 0;  // set for Kn only

  static ReducedCircle plain() { return {Kind::Plain, 0}; }
  static ReducedCircle kn(int n) { return {Kind::Kn, n}; }
  static ReducedCircle bar_loop() { return {Kind::BarLoop, 0}; }

  friend bool operator==(const ReducedCircle&, const ReducedCircle&) = default;
};

// Confluent reduction of a cyclic circle word. Rules: adjacent equal-side
// cusps cancel, adjacent bar pairs cancel, and a bar commutes past a cusp
// while flipping its side. Strategy: push every bar to the seam (flipping
// each cusp once per bar ahead of it), cancel bar pairs, then stack-cancel
// cusps. An odd leftover bar absorbs all cusps pairwise (flipping one
// neighbour of an alternating word always creates a cancelling pair), so
// odd bar parity yields the bar loop unconditionally. With no bars left,
// the stack result is linearly alternating, and an even-length alternating
// word has distinct first and last letters, so it is cyclically reduced.
inline ReducedCircle reduce_word(const CircleWord& w) {
  int bars = 0;
  std::vector<Side> eff;
  for (const CircleTok& t : w.toks) {
    if (t.is_bar)
      ++bars;
    else
      eff.push_back(bars % 2 == 0 ? t.side : flip_side(t.side));
  }
  if (eff.size() % 2 != 0)
    throw OddCuspCount("circle word has " + std::to_string(eff.size()) + " cusps");
  if (bars % 2 == 1) return ReducedCircle::bar_loop();
  std::vector<Side> stack;
  for (Side s : eff) {
    if (!stack.empty() && stack.back() == s)
      stack.pop_back();
    else
      stack.push_back(s);
  }
  if (stack.empty()) return ReducedCircle::plain();
  return ReducedCircle::kn(static_cast<int>(stack.size()) / 2);
}

namespace detail {

// Precomputed trace tables shared across the states of one diagram.
class Tracer {
 public:
  explicit Tracer(const TwistedGaussCode& code) : code_(code) {
    arcs_ = code.arcs();
    refs_ = code.crossing_refs();
    for (const auto& [id, r] : refs_) ids_.push_back(id);
    for (int a = 0; a < static_cast<int>(arcs_.size()); ++a) {
      if (arcs_[a].degenerate()) {
        degenerate_.push_back(a);
        continue;
      }
      arc_leaving_[{arcs_[a].component, arcs_[a].start_pos}] = a;
      arc_entering_[{arcs_[a].component, arcs_[a].end_pos}] = a;
    }
  }

  const std::vector<int>& ids() const { return ids_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  int sign_of(int id) const { return refs_.at(id).sign; }

  // choice maps a crossing id to its smoothing.
  template <typename Choice>
  std::vector<CircleWord> resolve(const Choice& choice) const {
    std::vector<CircleWord> words;
    for (int a : degenerate_) {
      CircleWord w;
      w.toks.assign(arcs_[a].bar_positions.size(), CircleTok::bar());
      words.push_back(std::move(w));
    }
    std::vector<bool> visited(arcs_.size(), false);
    for (int a0 = 0; a0 < static_cast<int>(arcs_.size()); ++a0) {
      if (visited[a0] || arcs_[a0].degenerate()) continue;
      CircleWord w;
      int arc = a0;
      bool forward = true;
      do {
        assert(!visited[arc]);
        visited[arc] = true;
        const Arc& cur = arcs_[arc];
        // Bars are identical tokens, so emission order within one arc does
        // not depend on traversal direction.
        for (size_t i = 0; i < cur.bar_positions.size(); ++i) w.toks.push_back(CircleTok::bar());
        // Arrive at a port: forward traversal ends at IN of the pass at
        // end_pos, backward traversal ends at OUT of the pass at start_pos.
        PassRef at{cur.component, forward ? cur.end_pos : cur.start_pos};
        const Token& tok = code_.components[at.component][at.pos];
        const CrossingRefs& cr = refs_.at(tok.crossing);
        PassRef partner = (at == cr.over) ? cr.under : cr.over;
        if (choice(tok.crossing) == Smoothing::Oriented) {
          if (forward) {
            arc = arc_leaving_.at({partner.component, partner.pos});
          } else {
            arc = arc_entering_.at({partner.component, partner.pos});
          }
        } else {
          Side side = ((tok.sign > 0) == (tok.role == Role::Over)) ? Side::R : Side::L;
          w.toks.push_back(CircleTok::cusp(side));
          if (forward) {
            arc = arc_entering_.at({partner.component, partner.pos});
          } else {
            arc = arc_leaving_.at({partner.component, partner.pos});
          }
          forward = !forward;
        }
      } while (!(arc == a0 && forward));
      words.push_back(std::move(w));
    }
    return words;
  }

 private:
  const TwistedGaussCode& code_;
  std::vector<Arc> arcs_;
  std::map<int, CrossingRefs> refs_;
  std::vector<int> ids_;
  std::vector<int> degenerate_;
  std::map<std::pair<int, int>, int> arc_leaving_;
  std::map<std::pair<int, int>, int> arc_entering_;
};

}  // namespace detail

inline constexpr int default_max_crossings = 24;

// Strand trace of one smoothing state. The state must choose a smoothing
// for every crossing of the diagram.
inline std::vector<CircleWord> resolve(const TwistedGaussCode& code, const SmoothingState& state) {
  detail::Tracer tracer(code);
  for (int id : tracer.ids())
    if (!state.choice.count(id))
      throw IncompleteState("state chooses nothing for crossing " + std::to_string(id));
  return tracer.resolve([&](int id) { return state.choice.at(id); });
}

struct StateEvaluation {
  int alpha = 0;  // A-weighted smoothings
  int beta = 0;   // A^-1-weighted smoothings
  int circle_count = 0;
  std::vector<ReducedCircle> contents;  // one entry per circle, Plain included
};

namespace detail {

template <typename Choice>
StateEvaluation evaluate_resolved(const Tracer& tracer, const Choice& choice) {
  StateEvaluation ev;
  for (int id : tracer.ids()) {
    // The A-weighted smoothing is the oriented one at a positive crossing
    // and the disoriented one at a negative crossing.
    Smoothing a_weighted =
        tracer.sign_of(id) > 0 ? Smoothing::Oriented : Smoothing::Disoriented;
    if (choice(id) == a_weighted)
      ++ev.alpha;
    else
      ++ev.beta;
  }
  for (const CircleWord& w : tracer.resolve(choice)) ev.contents.push_back(reduce_word(w));
  ev.circle_count = static_cast<int>(ev.contents.size());
  return ev;
}

}  // namespace detail

inline StateEvaluation evaluate_state(const TwistedGaussCode& code, const SmoothingState& state) {
  detail::Tracer tracer(code);
  for (int id : tracer.ids())
    if (!state.choice.count(id))
      throw IncompleteState("state chooses nothing for crossing " + std::to_string(id));
  return detail::evaluate_resolved(tracer, [&](int id) { return state.choice.at(id); });
}

// Bracket state sum over all 2^n smoothing choices.
inline ArrowPolynomial bracket(const TwistedGaussCode& code,
                               int max_crossings = default_max_crossings) {
  code.validate();
  detail::Tracer tracer(code);
  const std::vector<int>& ids = tracer.ids();
  int n = static_cast<int>(ids.size());
  if (n > max_crossings)
    throw TooManyCrossings("diagram has " + std::to_string(n) + " crossings, limit is " +
                           std::to_string(max_crossings));
  std::map<int, int> index;
  for (int i = 0; i < n; ++i) index[ids[i]] = i;

  std::vector<ArrowPolynomial> d_pow{ArrowPolynomial::one()};
  auto d_power_cached = [&](int l) -> const ArrowPolynomial& {
    while (static_cast<int>(d_pow.size()) <= l)
      d_pow.push_back(d_pow.back() * ArrowPolynomial::d_power(1));
    return d_pow[l];
  };

  ArrowPolynomial sum;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    auto choice = [&](int id) {
      return (mask >> index.at(id)) & 1 ? Smoothing::Disoriented : Smoothing::Oriented;
    };
    int alpha = 0, beta = 0;
    for (int id : ids) {
      Smoothing a_weighted = tracer.sign_of(id) > 0 ? Smoothing::Oriented : Smoothing::Disoriented;
      if (choice(id) == a_weighted)
        ++alpha;
      else
        ++beta;
    }
    std::vector<CircleWord> words = tracer.resolve(choice);
    std::map<int, int> k_counts;
    int bar_loops = 0;
    for (const CircleWord& w : words) {
      ReducedCircle r = reduce_word(w);
      if (r.kind == ReducedCircle::Kind::Kn) ++k_counts[r.n];
      if (r.kind == ReducedCircle::Kind::BarLoop) ++bar_loops;
    }
    MonomialKey key;
    key.a_exp = alpha - beta;
    key.m_exp = bar_loops;
    for (const auto& [kn, count] : k_counts) key.k_vec.emplace_back(kn, count);
    ArrowPolynomial term;
    term.add_term(std::move(key), 1);
    sum += term * d_power_cached(static_cast<int>(words.size()) - 1);
  }
  return sum;
}

inline ArrowPolynomial normalized(const TwistedGaussCode& code,
                                  int max_crossings = default_max_crossings) {
  return bracket(code, max_crossings).normalize_by_writhe(code.writhe());
}

// Set of k-degrees over the bracket's terms; identical for the normalized
// polynomial since the writhe factor is K-free.
inline std::set<int> as_set(const TwistedGaussCode& code,
                            int max_crossings = default_max_crossings) {
  return bracket(code, max_crossings).k_degree_set();
}

// Necessary conditions for checkerboard colorability, read off the
// normalized polynomial. All three hold for every checkerboard colorable
// twisted diagram; failing any one certifies non-colorability.
struct ColorabilityCriteria {
  bool no_m = false;          // no summand contains M
  bool as_even = false;       // every k-degree is even
  bool k_index_bound = false; // per summand, twice the largest K index <= its k-degree

  bool passes_all() const { return no_m && as_even && k_index_bound; }
};

inline ColorabilityCriteria colorability_criteria(const TwistedGaussCode& code,
                                                  int max_crossings = default_max_crossings) {
  ArrowPolynomial p = normalized(code, max_crossings);
  ColorabilityCriteria out;
  out.no_m = !p.contains_m();
  out.as_even = true;
  for (int deg : p.k_degree_set())
    if (deg % 2 != 0) out.as_even = false;
  out.k_index_bound = true;
  for (const auto& [key, c] : p.terms()) {
    if (key.k_vec.empty()) continue;
    int largest = key.k_vec.back().first;
    if (2 * largest > key.k_degree()) out.k_index_bound = false;
  }
  return out;
}

// Maximum M-degree of the normalized polynomial: a lower bound for the bar
// count of every diagram equivalent to this one.
inline int m_degree_lower_bound(const TwistedGaussCode& code,
                                int max_crossings = default_max_crossings) {
  return normalized(code, max_crossings).max_m_degree();
}

}  // namespace twistpoly
