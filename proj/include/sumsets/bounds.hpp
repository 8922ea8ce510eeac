#pragma once
// Quantitative machinery relating |A+B| to the popularity of differences:
// the clique graph on A x B, the sum/difference edge bijection, and exact
// rational lower bounds derived from a popularity threshold k outside an
// exceptional set T.

#include <boost/rational.hpp>
#include <optional>
#include <string>
#include <vector>

#include "sumsets/sumset_ops.hpp"

namespace sumsets {

using Rational = boost::rational<long long>;

std::string to_string(const Rational& r);  // "p/q" (or "p" when q == 1)

struct CliqueProfile {
  GroupSubset a, b;
  std::vector<int> multiplicities;  // rep counts over A+B, ascending
  std::vector<std::pair<int, int>> clique_counts;  // (size i, count n_i)
  long long edge_count;  // sum of n_i * C(i,2)
};

CliqueProfile clique_profile(const GroupSubset& a, const GroupSubset& b);

struct BijectionCheck {
  bool ok = true;
  std::string counterexample;  // set when ok is false
};

// Edge-count equality between the sum graph of (A,B) and of (A,-B), plus
// the adjacent-edges-to-distinct-components property of the edge map
// {(a,b),(a',b')} -> {(a,-b'),(a',-b)}.
BijectionCheck graph_bijection_check(const GroupSubset& a,
                                     const GroupSubset& b);

struct BoundsReport {
  int a, b, k;
  GroupSubset t;  // canonical exceptional set: all x with more than k
                  // representations as a difference
  long long delta, m, x, delta0, l;
  Rational bound_i_strong, bound_i_weak;
  Rational bound_ii_1, bound_ii_2, bound_ii_3;
  Rational bound_iii_floor, bound_iii_x;
  int actual_sumset;
  int actual_t;
};

// Requires |A| >= |B| > k >= 1, |A| >= |T|, and at most k representations
// of every difference outside the passed T.
BoundsReport difference_bounds(const GroupSubset& a, const GroupSubset& b,
                               const GroupSubset& t, int k);

// Closed form for x when 0 <= |T||B|(|B|-k) - delta(k-delta) < |A||B|.
std::optional<long long> closed_form_x(const BoundsReport& r);

bool sidon_check(const GroupSubset& s);

}  // namespace sumsets
