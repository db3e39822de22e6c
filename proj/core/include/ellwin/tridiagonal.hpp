#pragma once

#include <vector>

namespace ellwin {

/// Real symmetric tridiagonal matrix; off[k] couples rows k and k+1.
struct SymmetricTridiagonal {
  std::vector<double> diag;
  std::vector<double> off;

  std::size_t size() const noexcept { return diag.size(); }
};

/// Number of eigenvalues strictly below x (Sturm sequence count).
int sturm_count(const SymmetricTridiagonal &t, double x);

/// index-th eigenvalue in ascending order, by Sturm bisection.
double tridiagonal_eigenvalue(const SymmetricTridiagonal &t, int index);

/// Unit eigenvector for an (accurate) eigenvalue, by inverse iteration.
std::vector<double> tridiagonal_eigenvector(const SymmetricTridiagonal &t, double lambda);

} // namespace ellwin
