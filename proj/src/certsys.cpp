#include "wzht/certsys.hpp"

#include "wzht/errors.hpp"

namespace wzht {

void CertificateSystem::validate() const {
  if ((int)a.size() != varspec.m || (int)b.size() != varspec.n)
    throw Error(ErrorCode::ArityError, "certificate count does not match variable count");
  for (const auto& f : a)
    if (f.varspec().m != varspec.m || f.varspec().n != varspec.n)
      throw Error(ErrorCode::ArityError, "t-certificate over wrong variable set");
  for (const auto& f : b) {
    if (f.varspec().m != varspec.m || f.varspec().n != varspec.n)
      throw Error(ErrorCode::ArityError, "k-certificate over wrong variable set");
    if (f.is_zero())
      throw Error(ErrorCode::ZeroInput, "k-certificate must be nonzero");
  }
}

const char* compat_cond_name(CompatCond c) {
  switch (c) {
    case CompatCond::DD: return "DD";
    case CompatCond::SS: return "SS";
    case CompatCond::DS: return "DS";
  }
  return "?";
}

CompatReport check_compatibility(const CertificateSystem& c) {
  c.validate();
  const int m = c.varspec.m, n = c.varspec.n;
  CompatReport rep;
  auto note = [&](CompatCond cond, int i, int j, const RatFunc& res) {
    if (res.is_zero()) return;
    rep.ok = false;
    rep.violations.push_back({cond, i, j, res});
  };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      note(CompatCond::DD, i, j, c.a[j].derive(i) - c.a[i].derive(j));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      note(CompatCond::SS, i, j,
           c.b[j].shift(i, 1) / c.b[j] - c.b[i].shift(j, 1) / c.b[i]);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      note(CompatCond::DS, i, j,
           c.b[j].derive(i) / c.b[j] - (c.a[i].shift(j, 1) - c.a[i]));
  return rep;
}

bool are_conjugate(const CertificateSystem& c1, const CertificateSystem& c2) {
  if (c1.varspec.m != c2.varspec.m || c1.varspec.n != c2.varspec.n) return false;
  return c1.a == c2.a && c1.b == c2.b;
}

}  // namespace wzht
