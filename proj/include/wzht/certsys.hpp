#pragma once

#include <vector>

#include "wzht/ratfunc.hpp"

namespace wzht {

/// Certificates of a hypergeometric term H: a_i = D_i(H)/H for each
/// continuous variable, b_j = S_j(H)/H for each discrete variable.
struct CertificateSystem {
  VarSpec varspec;
  std::vector<RatFunc> a;  // size m
  std::vector<RatFunc> b;  // size n, entries nonzero

  /// Throws on shape mismatch or a zero k-certificate.
  void validate() const;
};

enum class CompatCond { DD, SS, DS };

const char* compat_cond_name(CompatCond c);

struct CompatViolation {
  CompatCond cond;
  int i = 0;  // first index (t for DD/DS, k for SS), 0-based
  int j = 0;  // second index (t for DD, k for SS/DS), 0-based
  RatFunc residual;  // nonzero difference of the two sides
};

struct CompatReport {
  bool ok = true;
  std::vector<CompatViolation> violations;
};

/// Verifies the mixed compatibility conditions exactly:
///   D_i(a_j) = D_j(a_i),
///   S_i(b_j)/b_j = S_j(b_i)/b_i,
///   D_i(b_j)/b_j = S_j(a_i) - a_i.
CompatReport check_compatibility(const CertificateSystem& c);

/// Two terms are conjugate when their reduced certificates coincide.
bool are_conjugate(const CertificateSystem& c1, const CertificateSystem& c2);

}  // namespace wzht
