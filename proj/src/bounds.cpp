#include "sumsets/bounds.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace sumsets {

std::string to_string(const Rational& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

CliqueProfile clique_profile(const GroupSubset& a, const GroupSubset& b) {
  require_same_group(a, b);
  if (a.empty() || b.empty())
    throw std::domain_error("clique profile of empty set");
  CliqueProfile out;
  out.a = a;
  out.b = b;
  GroupSubset s = sumset(a, b);
  for (int x : s.elements())
    out.multiplicities.push_back(rep_count(a, b, x));
  std::sort(out.multiplicities.begin(), out.multiplicities.end());
  std::map<int, int> counts;
  for (int m : out.multiplicities) ++counts[m];
  out.edge_count = 0;
  for (auto [i, n] : counts) {
    out.clique_counts.emplace_back(i, n);
    out.edge_count += static_cast<long long>(n) * i * (i - 1) / 2;
  }
  return out;
}

BijectionCheck graph_bijection_check(const GroupSubset& a,
                                     const GroupSubset& b) {
  BijectionCheck out;
  auto pab = clique_profile(a, b);
  auto pamb = clique_profile(a, negate(b));
  if (pab.edge_count != pamb.edge_count) {
    out.ok = false;
    out.counterexample = "edge counts differ: " +
                         std::to_string(pab.edge_count) + " vs " +
                         std::to_string(pamb.edge_count);
    return out;
  }
  const auto& g = a.group();
  // Adjacent edges within a clique share a vertex. An edge
  // {(a1,b1),(a2,b2)} maps into the component of a1-b2 in the difference
  // graph; adjacent edges must land in distinct components.
  GroupSubset s = sumset(a, b);
  for (int x : s.elements()) {
    auto wit = representations(a, b, x).witnesses.elements();  // b-parts
    int m = static_cast<int>(wit.size());
    if (m < 3) continue;  // need two adjacent edges
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        if (i == j) continue;
        for (int k = j + 1; k < m; ++k) {
          if (k == i) continue;
          // Shared vertex has b-part wit[i]; component of the image edge
          // of {v_i, v_j} is (x - wit[i]) - wit[j].
          int c1 = g.sub(g.sub(x, wit[i]), wit[j]);
          int c2 = g.sub(g.sub(x, wit[i]), wit[k]);
          if (c1 == c2) {
            out.ok = false;
            std::ostringstream os;
            os << "adjacent edges collide at x=" << x << " via b-parts "
               << wit[i] << "," << wit[j] << "," << wit[k];
            out.counterexample = os.str();
            return out;
          }
        }
      }
  }
  return out;
}

BoundsReport difference_bounds(const GroupSubset& a, const GroupSubset& b,
                               const GroupSubset& t, int k) {
  require_same_group(a, b);
  require_same_group(a, t);
  const auto& g = a.group();
  BoundsReport r;
  r.a = a.size();
  r.b = b.size();
  r.k = k;
  if (!(r.a >= r.b && r.b > k && k >= 1))
    throw std::invalid_argument("need |A| >= |B| > k >= 1");
  if (r.a < t.size())
    throw std::invalid_argument("need |A| >= |T|");
  // Hypothesis against the passed T, then canonicalize T to the exact
  // violator set.
  GroupSubset viol(g);
  for (int x = 0; x < g.order(); ++x)
    if (rep_count(a, negate(b), x) > k) viol.insert(x);
  if (!viol.is_subset_of(t)) {
    GroupSubset missed = viol - t;
    throw std::invalid_argument(
        "difference popularity exceeds k outside T at " + missed.to_string());
  }
  r.t = viol;
  long long ta = viol.size();
  long long aa = r.a, bb = r.b, kk = k;
  long long md = bb * (aa - ta) % kk;
  r.delta = md;  // 0 <= delta < k
  r.m = ta * bb * (bb - kk) + (kk - 1) * aa * bb - r.delta * (kk - r.delta);
  if (r.m < 0) throw std::logic_error("negative M under verified hypothesis");
  long long ab = aa * bb;
  r.x = (ab - (r.m % ab)) % ab;
  if (r.x == 0) r.x = ab;  // 1 <= x <= ab
  GroupSubset sum = sumset(a, b);
  long long c = sum.size();
  r.actual_sumset = static_cast<int>(c);
  r.actual_t = static_cast<int>(ta);
  r.delta0 = (c - (ab % c)) % c;
  r.l = (ab + r.delta0) / c - 1;
  r.bound_i_strong = Rational(ab * ab, r.m + ab);
  r.bound_i_weak = Rational(aa * aa * bb, ta * (bb - kk) + kk * aa);
  long long a2b2 = ab * ab;
  r.bound_ii_1 = Rational(
      a2b2 - r.delta0 * r.delta0 -
          c * (kk * ab - r.delta0 - r.delta * (kk - r.delta)),
      c * bb * (bb - kk));
  r.bound_ii_2 = Rational(a2b2 - r.delta0 * r.delta0 - c * (kk * ab - r.delta0),
                          c * bb * (bb - kk));
  r.bound_ii_3 = Rational(aa * (ab - kk * c), c * (bb - kk));
  long long f1 = (r.m + ab) / ab;
  long long f2 = (r.m + 2 * ab) / ab;
  r.bound_iii_floor = Rational(2 * ab, f2) - Rational(r.m, f1 * f2);
  r.bound_iii_x = Rational(a2b2 * (r.m + 2 * r.x),
                           (r.m + ab + r.x) * (r.m + r.x));
  return r;
}

std::optional<long long> closed_form_x(const BoundsReport& r) {
  long long q = static_cast<long long>(r.t.size()) * r.b * (r.b - r.k) -
                r.delta * (r.k - r.delta);
  long long ab = static_cast<long long>(r.a) * r.b;
  if (q < 0 || q >= ab) return std::nullopt;
  long long x = ab - q;
  if (x != r.x) throw std::logic_error("closed-form x disagrees");
  return x;
}

bool sidon_check(const GroupSubset& s) {
  if (s.empty()) throw std::domain_error("sidon check of empty set");
  const auto& g = s.group();
  GroupSubset neg = negate(s);
  for (int x = 1; x < g.order(); ++x)
    if (rep_count(s, neg, x) > 1) return false;
  return true;
}

}  // namespace sumsets
