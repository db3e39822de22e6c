#include "ellwin/modes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ellwin/errors.hpp"

namespace ellwin {

std::vector<double> transverse_energies(Region region, int count) {
  if (count < 1) throw UsageError("transverse_energies: need at least one mode");
  const double shift = region == Region::I ? 0.5 : 1.0;
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int n = 0; n < count; ++n) out[static_cast<std::size_t>(n)] = (n + shift) * (n + shift);
  return out;
}

double q_param(double E, double En, double c) {
  if (!(c > 0.0)) throw UsageError("q_param: focal distance must be positive");
  return c * c * std::numbers::pi * std::numbers::pi * (E - En) / 4.0;
}

double z_overlap(int n, int p) {
  if (n < 0 || p < 0) throw UsageError("z_overlap: negative mode index");
  return (1.0 / (n + p + 1.5) + 1.0 / (p - n + 0.5)) / std::numbers::pi;
}

double theta_overlap(const MathieuSolution &first, const MathieuSolution &second) {
  if (first.m != second.m) throw UsageError("theta_overlap: orders differ");
  const std::size_t k = std::min(first.coeffs.size(), second.coeffs.size());
  double s = 0.0;
  for (std::size_t i = 0; i < k; ++i) s += first.coeffs[i] * second.coeffs[i];
  if (first.parity() == 0 && k > 0) s += first.coeffs[0] * second.coeffs[0];
  return std::numbers::pi * s;
}

ModeContext make_mode_context(double E, double c, int nmodes) {
  ModeContext ctx;
  ctx.E = E;
  ctx.c = c;
  ctx.nmodes = nmodes;
  ctx.EI = transverse_energies(Region::I, nmodes);
  ctx.EII = transverse_energies(Region::II, nmodes);
  ctx.qI.reserve(ctx.EI.size());
  ctx.qII.reserve(ctx.EII.size());
  for (double En : ctx.EI) ctx.qI.push_back(q_param(E, En, c));
  for (double En : ctx.EII) ctx.qII.push_back(q_param(E, En, c));
  return ctx;
}

const MathieuSolution &MathieuCache::get(int m, double q) {
  const double key = std::round(q * 1e14) / 1e14;
  auto it = entries_.find({m, key});
  if (it == entries_.end()) it = entries_.emplace(std::pair{m, key}, char_even(m, q)).first;
  return it->second;
}

ModeSolutions mode_solutions(const ModeContext &ctx, int m, MathieuCache &cache) {
  ModeSolutions out;
  out.m = m;
  for (double q : ctx.qI) out.I.push_back(cache.get(m, q));
  for (double q : ctx.qII) out.II.push_back(cache.get(m, q));
  return out;
}

OverlapMatrix overlap_matrix(const ModeSolutions &sols) {
  OverlapMatrix p;
  p.m = sols.m;
  p.n = static_cast<int>(sols.I.size());
  p.entries.resize(static_cast<std::size_t>(p.n * p.n));
  for (int i = 0; i < p.n; ++i) {
    for (int j = 0; j < p.n; ++j) {
      p.entries[static_cast<std::size_t>(i * p.n + j)] =
          z_overlap(i, j) * theta_overlap(sols.I[static_cast<std::size_t>(i)], sols.II[static_cast<std::size_t>(j)]);
    }
  }
  return p;
}

OverlapMatrix overlap_matrix(const ModeContext &ctx, int m) {
  MathieuCache cache;
  return overlap_matrix(mode_solutions(ctx, m, cache));
}

} // namespace ellwin
