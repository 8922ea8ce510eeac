#include "sumsets/structure.hpp"

#include <algorithm>

namespace sumsets {

GroupSubset ProgressionView::elements(const FiniteAbelianGroup& g) const {
  GroupSubset s(g);
  int x = first;
  for (int i = 0; i < length; ++i) {
    s.insert(x);
    x = g.add(x, diff);
  }
  return s;
}

std::optional<ProgressionView> progression_with_difference(
    const GroupSubset& s, int d) {
  const auto& g = s.group();
  if (s.empty()) return std::nullopt;
  if (d == 0) throw std::invalid_argument("progression difference is zero");
  int n = s.size();
  if (n > g.element_order(d)) return std::nullopt;
  if (n == g.element_order(d)) {
    // Full <d>-coset: progression from its least element.
    ProgressionView v{s.min_element(), d, n};
    return v.elements(g) == s ? std::optional(v) : std::nullopt;
  }
  // Unique run start: an element whose predecessor is absent.
  std::optional<int> start;
  for (int x : s.elements()) {
    if (s.contains(g.sub(x, d))) continue;
    if (start) return std::nullopt;  // two runs
    start = x;
  }
  if (!start) return std::nullopt;
  ProgressionView v{*start, d, n};
  return v.elements(g) == s ? std::optional(v) : std::nullopt;
}

std::optional<ProgressionView> as_progression(const GroupSubset& s) {
  const auto& g = s.group();
  if (s.empty()) return std::nullopt;
  for (int d = 1; d < g.order(); ++d)
    if (auto v = progression_with_difference(s, d)) return v;
  return std::nullopt;
}

bool is_progression(const GroupSubset& s) {
  return as_progression(s).has_value();
}

ComponentProfile d_components(const GroupSubset& s, int d) {
  const auto& g = s.group();
  if (s.empty()) throw std::domain_error("d-components of empty set");
  if (d == 0) throw std::invalid_argument("component difference is zero");
  ComponentProfile out;
  out.diff = d;
  int ord = g.element_order(d);
  GroupSubset seen(g);
  for (int x : s.elements()) {
    if (seen.contains(x)) continue;
    // Walk the component containing x.
    GroupSubset comp(g);
    int back = x;
    int steps = 0;
    while (s.contains(g.sub(back, d)) && steps < ord) {
      back = g.sub(back, d);
      ++steps;
    }
    if (steps == ord) {
      // Full coset.
      DComponent c;
      c.periodic = true;
      int y = x;
      for (int i = 0; i < ord; ++i) {
        comp.insert(y);
        y = g.add(y, d);
      }
      c.elems = comp;
      seen = seen | comp;
      out.components.push_back(c);
      continue;
    }
    DComponent c;
    c.periodic = false;
    int y = back, len = 0;
    while (s.contains(y)) {
      comp.insert(y);
      y = g.add(y, d);
      ++len;
    }
    c.elems = comp;
    c.view = ProgressionView{back, d, len};
    seen = seen | comp;
    out.components.push_back(c);
  }
  std::sort(out.components.begin(), out.components.end(),
            [](const DComponent& a, const DComponent& b) {
              return a.elems.bits() < b.elems.bits();
            });
  out.aperiodic_count = 0;
  for (const auto& c : out.components)
    if (!c.periodic) ++out.aperiodic_count;
  auto qp = minimal_quasi_progression(s, d);
  out.min_cover = qp.min_cover;
  out.holes = qp.holes;
  return out;
}

QuasiProgression minimal_quasi_progression(const GroupSubset& s, int d) {
  const auto& g = s.group();
  if (s.empty()) throw std::domain_error("quasi-progression of empty set");
  if (d == 0) throw std::invalid_argument("difference is zero");
  Subgroup hd = subgroup_generated(g, GroupSubset(g, 1ull << d));
  // Candidate covers: fill every met coset, optionally leaving one met
  // coset covered by its minimal d-progression instead.
  std::vector<GroupSubset> met;  // per met coset, S restricted to it
  std::vector<std::uint64_t> coset_masks;
  {
    std::vector<std::uint64_t> masks(hd.cosets(), 0);
    for (int x = 0; x < g.order(); ++x) masks[hd.coset_index[x]] |= 1ull << x;
    for (auto m : masks)
      if (m & s.bits()) {
        met.push_back(GroupSubset(g, m & s.bits()));
        coset_masks.push_back(m);
      }
  }
  std::uint64_t all_full = 0;
  for (auto m : coset_masks) all_full |= m;
  std::optional<GroupSubset> best;
  auto offer = [&](const GroupSubset& w) {
    if (!best || w.size() < best->size() ||
        (w.size() == best->size() && w.bits() < best->bits()))
      best = w;
  };
  offer(GroupSubset(g, all_full));
  FamilySpec apd = FamilySpec::progression_d(d);
  for (size_t i = 0; i < met.size(); ++i) {
    auto cover = family_distance(met[i], apd);
    std::uint64_t rest = all_full & ~coset_masks[i];
    offer(GroupSubset(g, rest | cover.witness->bits()));
  }
  QuasiProgression out;
  out.cover = *best;
  out.min_cover = best->size();
  out.holes = best->size() - s.size();
  return out;
}

bool is_quasi_progression(const GroupSubset& s, int d) {
  if (s.empty() || d == 0) return false;
  const auto& g = s.group();
  Subgroup hd = subgroup_generated(g, GroupSubset(g, 1ull << d));
  int partial = 0;
  bool partial_ok = true;
  std::vector<std::uint64_t> masks(hd.cosets(), 0);
  for (int x = 0; x < g.order(); ++x) masks[hd.coset_index[x]] |= 1ull << x;
  for (auto m : masks) {
    std::uint64_t inter = m & s.bits();
    if (!inter || inter == m) continue;
    ++partial;
    auto part = GroupSubset(g, inter);
    if (!progression_with_difference(part, d)) partial_ok = false;
  }
  return partial <= 1 && partial_ok;
}

bool is_quasi_periodic(const GroupSubset& s) {
  if (s.empty()) return false;
  return in_family(s, FamilySpec::quasi_periodic());
}

std::vector<QuasiPeriodicDecomposition> quasi_periodic_decompositions(
    const GroupSubset& s, const Subgroup& h) {
  if (h.is_trivial())
    throw std::invalid_argument("quasi-period must be nontrivial");
  if (s.empty()) throw std::domain_error("decomposition of empty set");
  const auto& g = s.group();
  std::vector<std::uint64_t> masks(h.cosets(), 0);
  for (int x = 0; x < g.order(); ++x) masks[h.coset_index[x]] |= 1ull << x;
  std::vector<int> partial, full;
  for (int c = 0; c < h.cosets(); ++c) {
    std::uint64_t inter = masks[c] & s.bits();
    if (!inter) continue;
    (inter == masks[c] ? full : partial).push_back(c);
  }
  std::vector<QuasiPeriodicDecomposition> out;
  auto push = [&](std::uint64_t a0bits) {
    QuasiPeriodicDecomposition d;
    d.quasi_period = h;
    d.aperiodic_part = GroupSubset(g, a0bits);
    d.periodic_part = GroupSubset(g, s.bits() & ~a0bits);
    d.reduced = !is_quasi_periodic(d.aperiodic_part);
    out.push_back(std::move(d));
  };
  if (partial.size() > 1) return out;
  if (partial.size() == 1) {
    push(masks[partial[0]] & s.bits());
    return out;
  }
  // S is H-periodic: the empty aperiodic part first, then every coset.
  push(0);
  for (int c : full) push(masks[c]);
  return out;
}

QuasiPeriodicDecomposition reduce_decomposition(const GroupSubset& s,
                                                const Subgroup& h) {
  auto base = quasi_periodic_decompositions(s, h);
  if (base.empty())
    throw std::invalid_argument(
        "set has no quasi-periodic decomposition with the given quasi-period");
  const auto& g = s.group();
  // Admissible aperiodic parts must refine one of the H-splits.
  auto admissible = [&](const GroupSubset& a0) {
    for (const auto& b : base)
      if (a0.is_subset_of(b.aperiodic_part)) return true;
    return false;
  };
  std::vector<Subgroup> subs = all_subgroups(g);
  std::sort(subs.begin(), subs.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.order != b.order ? a.order > b.order
                              : a.carrier.bits() < b.carrier.bits();
  });
  for (const auto& hp : subs) {
    if (hp.is_trivial()) continue;
    if (!hp.carrier.is_subset_of(h.carrier)) continue;
    std::optional<QuasiPeriodicDecomposition> pick;
    for (const auto& cand : quasi_periodic_decompositions(s, hp)) {
      if (!cand.reduced || !admissible(cand.aperiodic_part)) continue;
      if (!pick ||
          cand.aperiodic_part.bits() < pick->aperiodic_part.bits())
        pick = cand;
    }
    if (pick) return *pick;
  }
  throw std::logic_error("no reduced refinement found");
}

MatchOutcome matching_configurations(const GroupSubset& a,
                                     const GroupSubset& b,
                                     const GroupSubset& c) {
  require_same_group(a, b);
  require_same_group(a, c);
  const auto& g = a.group();
  if (a.size() < 2 || b.size() < 2 || c.size() < 2)
    throw std::invalid_argument("matching requires |A|,|B|,|C| >= 2");
  if (!c.is_subset_of(sumset(a, b)))
    throw std::invalid_argument("matching requires C inside A+B");
  for (int x : a.elements())
    if ((translate(b, x) & c).empty())
      throw std::invalid_argument("some a+B misses C");
  for (int x : b.elements())
    if ((translate(a, x) & c).empty())
      throw std::invalid_argument("some b+A misses C");
  for (int ea : a.elements())
    for (int eb : b.elements()) {
      int ec = g.add(ea, eb);
      if (!c.contains(ec)) continue;
      for (int ea2 : a.elements()) {
        if (ea2 == ea) continue;
        for (int eb2 : b.elements()) {
          if (eb2 == eb) continue;
          int ec2 = g.add(ea2, eb2);
          if (ec2 != ec && c.contains(ec2))
            return MatchingPairs{ea, eb, ec, ea2, eb2, ec2};
        }
      }
    }
  for (int ea : a.elements())
    for (int eb : b.elements())
      if (translate(b, ea) == c && translate(a, eb) == c)
        return MatchingDegenerate{ea, eb};
  throw std::logic_error("matching dichotomy failed");
}

}  // namespace sumsets
