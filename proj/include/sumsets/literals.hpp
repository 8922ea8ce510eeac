#pragma once
// Text forms used by the CLI and config files: group specs such as
// "z2xz4", element literals ("5" or "(1,0,3)"), set literals ("{0,1,3}"),
// and family specs ("P", "P:{0,2,4}", "QP", "QP:{0,3}", "AP", "AP:2").

#include <string>

#include "sumsets/group.hpp"

namespace sumsets {

FiniteAbelianGroup parse_group(const std::string& spec);
int parse_element(const FiniteAbelianGroup& g, const std::string& lit);
GroupSubset parse_subset(const FiniteAbelianGroup& g, const std::string& lit);

enum class FamilyKind {
  Periodic,         // P
  PeriodicH,        // P:H
  QuasiPeriodic,    // QP
  QuasiPeriodicH,   // QP:H
  Progression,      // AP
  ProgressionD,     // AP:d
};

struct FamilySpec {
  FamilyKind kind;
  Subgroup period;  // P:H, QP:H
  int diff = 0;     // AP:d

  static FamilySpec periodic() { return {FamilyKind::Periodic, {}, 0}; }
  static FamilySpec periodic_h(Subgroup h) {
    return {FamilyKind::PeriodicH, std::move(h), 0};
  }
  static FamilySpec quasi_periodic() {
    return {FamilyKind::QuasiPeriodic, {}, 0};
  }
  static FamilySpec quasi_periodic_h(Subgroup h) {
    return {FamilyKind::QuasiPeriodicH, std::move(h), 0};
  }
  static FamilySpec progression() { return {FamilyKind::Progression, {}, 0}; }
  static FamilySpec progression_d(int d) {
    return {FamilyKind::ProgressionD, {}, d};
  }
};

FamilySpec parse_family(const FiniteAbelianGroup& g, const std::string& lit);

}  // namespace sumsets
