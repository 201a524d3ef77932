#pragma once

#include <vector>

#include "wzht/certsys.hpp"
#include "wzht/christopher.hpp"
#include "wzht/oresato.hpp"

namespace wzht {

/// The four-way split of a compatible mixed certificate system:
///   a_i = D_i(f)/f + sum_j k_j D_i(h_j)/h_j + abar_i,
///   b_j = (S_j(f)/f) h_j bbar_j,
/// with abar in the t-variables only and bbar in the k-variables only.
struct MixedSplit {
  VarSpec varspec;
  RatFunc f;                  // in (t, k)
  std::vector<RatFunc> h;     // size n, in t, nonzero
  std::vector<RatFunc> abar;  // size m, in t
  std::vector<RatFunc> bbar;  // size n, in k, nonzero
};

/// Splits certificates along the mixed structure theorem. Throws
/// NotCompatible when the compatibility conditions fail and StructureGap
/// when a mixed factor cannot be assembled into shift orbits of f.
MixedSplit split_mixed(const CertificateSystem& c);

/// Full structure of a compatible system: the split plus the decompositions
/// of the two pure parts. The shift decomposition's internal rational part is
/// merged into the global f (shift.f is 1).
struct StructureData {
  VarSpec varspec;
  RatFunc f;
  ContinuousDecomp cont;
  std::vector<RatFunc> h;
  ShiftDecomp shift;
};

StructureData full_structure(const CertificateSystem& c);

/// Certificates rebuilt from the structure identities.
CertificateSystem reconstruct_structure(const StructureData& s);

/// Exact check that s reconstructs c.
bool verify_structure(const CertificateSystem& c, const StructureData& s);

}  // namespace wzht
