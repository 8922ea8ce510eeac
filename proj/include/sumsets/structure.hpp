#pragma once
// Structural predicates: arithmetic progressions, d-components, minimal
// quasi-progressions, quasi-periodic decompositions and their reduction,
// and the matching dichotomy for triple configurations.

#include <optional>
#include <variant>
#include <vector>

#include "sumsets/sumset_ops.hpp"

namespace sumsets {

struct ProgressionView {
  int first = 0;
  int diff = 0;
  int length = 0;

  int last(const FiniteAbelianGroup& g) const {
    return g.add(first, g.scale(length - 1, diff));
  }
  GroupSubset elements(const FiniteAbelianGroup& g) const;
};

// Any valid (first, diff, length) witness; the reversed-difference form
// describes the same set. Singletons get the least nonzero difference.
std::optional<ProgressionView> as_progression(const GroupSubset& s);

// Progression representation for one fixed difference.
std::optional<ProgressionView> progression_with_difference(
    const GroupSubset& s, int d);

bool is_progression(const GroupSubset& s);

struct DComponent {
  bool periodic = false;  // a full <d>-coset
  GroupSubset elems;
  ProgressionView view;   // for aperiodic components
};

struct ComponentProfile {
  int diff;
  std::vector<DComponent> components;
  int aperiodic_count;  // c_d = |S + {0,d}| - |S|
  int min_cover;        // l_d: size of the minimal covering quasi-progression
  int holes;            // h_d = l_d - |S|
};

ComponentProfile d_components(const GroupSubset& s, int d);

struct QuasiProgression {
  GroupSubset cover;
  int min_cover;
  int holes;
};

QuasiProgression minimal_quasi_progression(const GroupSubset& s, int d);

bool is_quasi_progression(const GroupSubset& s, int d);

struct QuasiPeriodicDecomposition {
  Subgroup quasi_period;
  GroupSubset periodic_part;   // H-periodic or empty
  GroupSubset aperiodic_part;  // inside one H-coset, possibly empty
  bool reduced = false;        // aperiodic part is not quasi-periodic
};

// True when S admits a decomposition with nonempty periodic part for some
// nontrivial quasi-period.
bool is_quasi_periodic(const GroupSubset& s);

// All valid splits of S with quasi-period H (H nontrivial). Empty when more
// than one H-coset is partially filled.
std::vector<QuasiPeriodicDecomposition> quasi_periodic_decompositions(
    const GroupSubset& s, const Subgroup& h);

// A reduced decomposition with quasi-period H' <= H and aperiodic part
// contained in an aperiodic part valid for H. Requires that S decompose
// with quasi-period H at all.
QuasiPeriodicDecomposition reduce_decomposition(const GroupSubset& s,
                                                const Subgroup& h);

struct MatchingPairs {
  // a+b = c and a2+b2 = c2 with a != a2, b != b2, c != c2.
  int a, b, c, a2, b2, c2;
};

struct MatchingDegenerate {
  // |A|=|B|=|C|=2 with a+B = b+A = C.
  int a, b;
};

using MatchOutcome = std::variant<MatchingPairs, MatchingDegenerate>;

// Dichotomy for C ⊆ A+B with |A|,|B|,|C| >= 2 and every translate
// (a+B), (b+A) meeting C.
MatchOutcome matching_configurations(const GroupSubset& a,
                                     const GroupSubset& b,
                                     const GroupSubset& c);

}  // namespace sumsets
