#include "sumsets/sumset_ops.hpp"

#include <algorithm>
#include <map>

namespace sumsets {

GroupSubset translate(const GroupSubset& s, int g) {
  const auto& grp = s.group();
  grp.check_element(g);
  GroupSubset out(grp);
  for_each_bit(s.bits(), [&](int x) { out.insert(grp.add(x, g)); });
  return out;
}

GroupSubset negate(const GroupSubset& s) {
  const auto& grp = s.group();
  GroupSubset out(grp);
  for_each_bit(s.bits(), [&](int x) { out.insert(grp.neg(x)); });
  return out;
}

GroupSubset sumset(const GroupSubset& a, const GroupSubset& b) {
  require_same_group(a, b);
  GroupSubset out(a.group());
  for_each_bit(a.bits(), [&](int x) {
    out = out | translate(b, x);
  });
  return out;
}

GroupSubset difference_set(const GroupSubset& a, const GroupSubset& b) {
  return sumset(a, negate(b));
}

RepSet representations(const GroupSubset& a, const GroupSubset& b, int x) {
  require_same_group(a, b);
  a.group().check_element(x);
  GroupSubset w = translate(negate(a), x) & b;
  return RepSet{x, w, w.size()};
}

int rep_count(const GroupSubset& a, const GroupSubset& b, int x) {
  return representations(a, b, x).count;
}

Subgroup stabilizer(const GroupSubset& s) {
  if (s.empty()) throw std::domain_error("stabilizer of empty set");
  const auto& g = s.group();
  GroupSubset h(g);
  for (int x = 0; x < g.order(); ++x)
    if (translate(s, x) == s) h.insert(x);
  return subgroup_from_carrier(h);
}

bool is_periodic(const GroupSubset& s) { return stabilizer(s).order > 1; }

Periodicity periodicity(const GroupSubset& s) {
  if (s.empty()) throw std::domain_error("periodicity of empty set");
  Periodicity p;
  p.periodic = is_periodic(s);
  p.aperiodic = !p.periodic;
  if (s.size() < s.group().order()) {
    for (int gamma : s.complement().elements()) {
      GroupSubset filled = s.with(gamma);
      if (is_periodic(filled)) {
        p.punctured = true;
        p.gamma = gamma;
        p.punctured_period = stabilizer(filled);
        break;
      }
    }
  }
  return p;
}

GroupSubset LayerDecomposition::layer(int i) const {
  if (i >= 0 && i < static_cast<int>(layers.size())) return layers[i];
  return GroupSubset(base_a.group());
}

LayerDecomposition growth_layers(const GroupSubset& a, const GroupSubset& b,
                                 int max_i) {
  require_same_group(a, b);
  if (!a.contains(0) || !b.contains(0))
    throw std::invalid_argument("growth layers require 0 in A and in B");
  LayerDecomposition out;
  out.base_a = a;
  out.base_b = b;
  out.layers.push_back(a);
  out.classes.emplace_back();  // index 0 unused
  GroupSubset prev = a;        // A + (i-1)B
  for (int i = 1; i <= max_i; ++i) {
    GroupSubset next = sumset(prev, b);
    GroupSubset ni = next - prev;
    if (ni.empty()) break;
    std::map<std::uint64_t, GroupSubset> cls;
    for (int x : ni.elements()) {
      GroupSubset u = representations(prev, b, x).witnesses;
      auto it = cls.find(u.bits());
      if (it == cls.end())
        cls.emplace(u.bits(), GroupSubset(a.group(), 1ull << x));
      else
        it->second.insert(x);
    }
    out.layers.push_back(ni);
    out.classes.emplace_back(cls.begin(), cls.end());
    prev = next;
  }
  return out;
}

ETransform e_transform(const GroupSubset& a, const GroupSubset& b, int e) {
  require_same_group(a, b);
  a.group().check_element(e);
  GroupSubset eb = translate(b, e);
  GroupSubset be = eb & a;
  if (be.empty())
    throw std::invalid_argument("e-transform shift must lie in A - B");
  return ETransform{e, eb | a, be};
}

// ---------------------------------------------------------------------------
// Family distances.

namespace {

struct Best {
  std::optional<int> value;
  std::optional<GroupSubset> witness;

  void offer(int v, const GroupSubset& w) {
    if (!value || v < *value || (v == *value && w.bits() < witness->bits())) {
      value = v;
      witness = w;
    }
  }
};

// Fill cost per met coset of H, as (coset id, missing count, coset mask).
struct CosetProfile {
  std::vector<int> met;      // coset ids met by S
  std::vector<int> missing;  // per met coset, |coset| - |S ∩ coset|
  std::vector<std::uint64_t> coset_mask;
};

CosetProfile coset_profile(const GroupSubset& s, const Subgroup& h) {
  CosetProfile p;
  const auto& g = s.group();
  std::vector<std::uint64_t> masks(h.cosets(), 0);
  for (int x = 0; x < g.order(); ++x) masks[h.coset_index[x]] |= 1ull << x;
  for (int c = 0; c < h.cosets(); ++c) {
    std::uint64_t inter = masks[c] & s.bits();
    if (!inter) continue;
    p.met.push_back(c);
    p.missing.push_back(h.order - std::popcount(inter));
    p.coset_mask.push_back(masks[c]);
  }
  return p;
}

SubsetDistance qp_h_distance(const GroupSubset& s, const Subgroup& h) {
  if (h.is_trivial())
    throw std::invalid_argument("quasi-period must be nontrivial");
  auto p = coset_profile(s, h);
  const auto& g = s.group();
  if (p.met.size() == 1) {
    // Completing the single met coset is the cheapest way to make the
    // periodic part nonempty.
    GroupSubset w(g, s.bits() | p.coset_mask[0]);
    return SubsetDistance{p.missing[0], w};
  }
  Best best;
  for (size_t keep = 0; keep < p.met.size(); ++keep) {
    int cost = 0;
    std::uint64_t bits = s.bits();
    for (size_t j = 0; j < p.met.size(); ++j) {
      if (j == keep) continue;
      cost += p.missing[j];
      bits |= p.coset_mask[j];
    }
    best.offer(cost, GroupSubset(g, bits));
  }
  return SubsetDistance{best.value, best.witness};
}

// Cyclic <d>-coset traversal starting at the least element of the coset.
std::vector<int> coset_cycle(const FiniteAbelianGroup& g, int d, int start) {
  std::vector<int> cyc;
  int x = start;
  do {
    cyc.push_back(x);
    x = g.add(x, d);
  } while (x != start);
  return cyc;
}

// Minimal progression with difference d covering S (S inside one
// <d>-coset assumed). Candidates differ when several largest gaps tie.
void offer_progression_covers(const GroupSubset& s, int d, Best& best) {
  const auto& g = s.group();
  auto cyc = coset_cycle(g, d, s.min_element());
  int m = static_cast<int>(cyc.size());
  std::vector<bool> in(m);
  for (int i = 0; i < m; ++i) in[i] = s.contains(cyc[i]);
  if (s.size() == m) {
    best.offer(0, s);
    return;
  }
  // Maximal cyclic runs of absent positions; removing the longest one
  // leaves the smallest covering progression.
  int maxgap = 0;
  std::vector<std::pair<int, int>> gaps;  // (start pos, length)
  for (int i = 0; i < m; ++i) {
    if (in[i] || !in[(i + m - 1) % m]) continue;  // gap starts after a member
    int len = 0;
    while (!in[(i + len) % m]) ++len;
    gaps.emplace_back(i, len);
    maxgap = std::max(maxgap, len);
  }
  for (auto [start, len] : gaps) {
    if (len != maxgap) continue;
    GroupSubset w(g);
    for (int t = 0; t < m - len; ++t) w.insert(cyc[(start + len + t) % m]);
    best.offer(w.size() - s.size(), w);
  }
}

bool single_coset(const GroupSubset& s, const Subgroup& h) {
  int c = -1;
  bool ok = true;
  for_each_bit(s.bits(), [&](int x) {
    if (c < 0)
      c = h.coset_index[x];
    else if (h.coset_index[x] != c)
      ok = false;
  });
  return ok;
}

}  // namespace

SubsetDistance family_distance(const GroupSubset& s, const FamilySpec& fam) {
  if (s.empty()) throw std::domain_error("family distance of empty set");
  const auto& g = s.group();
  switch (fam.kind) {
    case FamilyKind::PeriodicH: {
      GroupSubset w = sumset(s, fam.period.carrier);
      return SubsetDistance{w.size() - s.size(), w};
    }
    case FamilyKind::Periodic: {
      Best best;
      for (const auto& h : all_subgroups(g)) {
        if (h.is_trivial()) continue;
        GroupSubset w = sumset(s, h.carrier);
        best.offer(w.size() - s.size(), w);
      }
      return SubsetDistance{best.value, best.witness};
    }
    case FamilyKind::QuasiPeriodicH:
      return qp_h_distance(s, fam.period);
    case FamilyKind::QuasiPeriodic: {
      Best best;
      for (const auto& h : all_subgroups(g)) {
        if (h.is_trivial()) continue;
        auto d = qp_h_distance(s, h);
        if (d.value) best.offer(*d.value, *d.witness);
      }
      return SubsetDistance{best.value, best.witness};
    }
    case FamilyKind::ProgressionD: {
      if (fam.diff == 0)
        throw std::invalid_argument("progression difference must be nonzero");
      Subgroup hd = subgroup_generated(g, GroupSubset(g, 1ull << fam.diff));
      if (!single_coset(s, hd)) return SubsetDistance{};
      Best best;
      offer_progression_covers(s, fam.diff, best);
      return SubsetDistance{best.value, best.witness};
    }
    case FamilyKind::Progression: {
      Best best;
      for (int d = 1; d < g.order(); ++d) {
        Subgroup hd = subgroup_generated(g, GroupSubset(g, 1ull << d));
        if (!single_coset(s, hd)) continue;
        offer_progression_covers(s, d, best);
      }
      return SubsetDistance{best.value, best.witness};
    }
  }
  throw std::logic_error("unreachable family kind");
}

bool in_family(const GroupSubset& s, const FamilySpec& fam) {
  if (s.empty()) return false;
  switch (fam.kind) {
    case FamilyKind::Periodic:
      return is_periodic(s);
    case FamilyKind::PeriodicH:
      return sumset(s, fam.period.carrier) == s;
    case FamilyKind::QuasiPeriodicH: {
      auto p = coset_profile(s, fam.period);
      int partial = 0, fullc = 0;
      for (int miss : p.missing) (miss == 0 ? fullc : partial)++;
      return partial <= 1 && fullc >= 1;
    }
    case FamilyKind::QuasiPeriodic: {
      for (const auto& h : all_subgroups(s.group())) {
        if (h.is_trivial()) continue;
        if (in_family(s, FamilySpec::quasi_periodic_h(h))) return true;
      }
      return false;
    }
    case FamilyKind::ProgressionD:
    case FamilyKind::Progression: {
      auto d = family_distance(s, fam);
      return d.finite() && *d.value == 0;
    }
  }
  throw std::logic_error("unreachable family kind");
}

}  // namespace sumsets
