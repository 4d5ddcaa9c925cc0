#include <limits>

#include "fracjump/errors.hpp"
#include "fracjump/fjump.hpp"

namespace fracjump {

SweepReport classification_sweep(std::uint32_t p, std::size_t n, const EnumerationBudget& budget) {
  if (n < 1) throw ParameterError("sweep dimension n must be >= 1");
  const PrimeField field(p);
  const std::size_t dim = n + 1;
  const std::size_t cells = dim * dim;
  // p^(dim^2) raw matrices are walked; the budget bounds that count.
  affine_point_count(p, cells, budget);

  SweepReport report;
  report.p = p;
  report.n = n;
  for_each_point(p, cells, [&](const Vector& entries) {
    // One representative per projective class: first nonzero entry is 1.
    std::size_t first = 0;
    while (first < cells && entries[first] == 0) ++first;
    if (first == cells || entries[first] != 1) return;
    Matrix m(dim, entries);
    if (determinant(field, m) == 0) return;

    const ProjectiveAutomorphism psi(field, std::move(m));
    const Classification c = classify(psi, budget);
    ++report.classes;
    if (c.proj_transitive) ++report.proj_transitive;
    if (c.affine_transitive) ++report.affine_transitive;
    if (c.proj_transitive != c.affine_transitive) report.exceptions.push_back({psi.matrix(), c});
  });
  return report;
}

}  // namespace fracjump
