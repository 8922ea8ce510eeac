#pragma once
// Decision procedures for critical and boundary pairs: the Kemperman
// structure classification (types I-IV, recursive subgroup chain), the
// boundary classification for |A+B| = |A|+|B| (one-hole extension or
// types V-VIII, with a periodic-branch reduction), extendibility and
// non-extendible duality, hole placement in the covering critical pair,
// and the Freiman-isomorphism predicate.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sumsets/structure.hpp"

namespace sumsets {

enum class KstType { I, II, III, IV };
std::string to_string(KstType t);

struct KstCertificate {
  Subgroup quasi_period;
  GroupSubset a1, a0, b1, b0;
  KstType type = KstType::I;
  std::optional<int> diff;      // type II: common difference
  std::optional<int> g0, g1;    // types III and IV
  std::shared_ptr<KstCertificate> recursion;  // for the quotient pair
  std::vector<GroupSubset> chain;  // subgroup carriers, trivial up to G
};

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> failures;

  void fail(std::string msg) {
    ok = false;
    failures.push_back(std::move(msg));
  }
};

// Requires |A+B| = |A|+|B|-1 and, when A+B is periodic, some element with
// a unique representation. The quasi-period is maximal; ties and split
// order are canonical, so output is deterministic.
KstCertificate kst_classify(const GroupSubset& a, const GroupSubset& b);

// Re-checks every certificate condition from scratch, independently of
// the search that produced it.
VerifyReport verify_kst_certificate(const GroupSubset& a,
                                    const GroupSubset& b,
                                    const KstCertificate& cert);

struct PeriodicReduction {
  Subgroup period;       // maximal period of A+B
  int hole_count;        // |A+B| + |H| - |A| - |B|
  QuotientMap phi;
  GroupSubset quotient_a, quotient_b;
  std::string note;      // deleted-element freedom
};

// For |A+B| <= |A|+|B|-1 with A+B periodic and no unique-representation
// element: reduces to an aperiodic critical pair in the quotient.
PeriodicReduction kst_periodic_reduce(const GroupSubset& a,
                                      const GroupSubset& b);

struct Extendibility {
  std::optional<int> extend_a;  // least a0 outside A with (A ∪ a0)+B = A+B
  std::optional<int> extend_b;

  bool pair_extendible() const {
    return extend_a.has_value() || extend_b.has_value();
  }
};

Extendibility extendibility(const GroupSubset& a, const GroupSubset& b);

struct DualPairs {
  GroupSubset neg_a, neg_b, co_sum;  // -A, -B, complement of A+B
  int excess;                        // r = |A+B| - |A| - |B|
};

// Requires a non-extendible pair with A+B proper. Verifies the duality
// identities, the cardinality transfer, and non-extendibility of both
// dual pairs; any failure throws std::logic_error.
DualPairs dual_pairs(const GroupSubset& a, const GroupSubset& b);

enum class BoundaryType { V, VI, VII, VIII };
std::string to_string(BoundaryType t);

struct TypeViiiData {
  Subgroup hb;        // Klein four subgroup of the quasi-period
  Subgroup hd1, hd2;  // distinct order-2 subgroups of hb
  int diff;           // least lift of the common quotient difference
  GroupSubset first_a, last_a, first_b, last_b;  // end-term coset parts
};

struct StructuredWitness {
  BoundaryType type = BoundaryType::V;
  std::optional<int> b0_shift;           // VI: A0 = b0 + B0; VII translation
  std::optional<int> doubling_base;      // VII: the doubled element
  bool a_side = true;                    // VII: which set has size 3
  std::optional<TypeViiiData> viii;
};

struct BoundaryCertificate {
  enum class Kind { Extension, Structured, PeriodicBranch };
  Kind kind = Kind::Extension;

  // Extension: |A∪{alpha} + B∪{beta}| = |A∪{alpha}| + |B∪{beta}| - 1.
  std::optional<int> alpha, beta;
  std::shared_ptr<BoundaryCertificate> auxiliary;  // structured match, if any

  // Structured: quasi-periodic splits plus a type V-VIII witness.
  std::optional<Subgroup> quasi_period;
  GroupSubset a1, a0, b1, b0;
  std::optional<StructuredWitness> witness;        // primary (first match)
  std::vector<StructuredWitness> matched;          // all matches, this split

  // Periodic branch: A, B both H-periodic, classify the quotient pair.
  std::optional<Subgroup> period;
  std::shared_ptr<BoundaryCertificate> recursion;
};

// Requires |A+B| = |A|+|B|. Prefers the extension certificate when both
// an extension and a structured decomposition exist (the structured match
// is attached as auxiliary data).
BoundaryCertificate boundary_classify(const GroupSubset& a,
                                      const GroupSubset& b);

VerifyReport verify_boundary_certificate(const GroupSubset& a,
                                         const GroupSubset& b,
                                         const BoundaryCertificate& cert);

enum class HoleCase { ExtendiblePair, A, B, C };
std::string to_string(HoleCase c);

struct HolePlacement {
  HoleCase case_tag = HoleCase::ExtendiblePair;

  // Extendible pair: the side that extends, the covering critical pair's
  // certificate (absent when it has no unique-representation element),
  // and the admissible positions for the deleted element.
  char extended_side = 'A';
  std::optional<int> extension;
  std::optional<KstCertificate> cover_cert;
  GroupSubset admissible;

  // Non-extendible cases: the holes and the new sum element.
  std::optional<int> alpha, beta, gamma;
  std::optional<int> diff;      // case A: progression difference
  int sign = 1;                 // orientation making the terms match
  bool second_terms = false;    // cases A and C
  bool translation_checked = false;  // case B inserts by translation
};

// Requires |A+B| = |A|+|B| and an extension witness; classifies where the
// holes sit relative to the covering critical pair.
HolePlacement hole_placement(const GroupSubset& a, const GroupSubset& b);

bool is_freiman_isomorphism(const GroupSubset& a, const GroupSubset& b,
                            const FiniteAbelianGroup& target,
                            const std::map<int, int>& images);

nlohmann::ordered_json to_json(const KstCertificate& cert);
nlohmann::ordered_json to_json(const BoundaryCertificate& cert);

// Test hook: classify with a caller-supplied candidate order for the
// quasi-period search (still maximal-first within the given list).
KstCertificate kst_classify_with_order(const GroupSubset& a,
                                       const GroupSubset& b,
                                       std::vector<Subgroup> candidates);

}  // namespace sumsets
