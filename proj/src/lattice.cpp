// Enumeration of integer points in dilations q * P of an edge polytope.

#include <cmath>
#include <string>

#include "tb/errors.hpp"
#include "tb/polytope.hpp"

namespace tb {

namespace {

struct Candidates {
  std::vector<std::int64_t> lower;
  std::int64_t total = 0;
  std::int64_t slack = 0;  // total - sum(lower)
};

Candidates candidates_for(const HalfSpaceSystem& h, std::int64_t q, bool strict) {
  if (q < 1) throw InvalidInput("dilation factor must be at least 1");
  Candidates c;
  c.lower.assign(static_cast<std::size_t>(h.ambient_n), 0);
  if (strict) {
    for (Vertex v : h.coord_constraints) c.lower[v - 1] = 1;
  }
  c.total = h.hyperplane_sum * q;
  c.slack = c.total;
  for (std::int64_t l : c.lower) c.slack -= l;
  // Number of compositions of `slack` into ambient_n nonnegative parts.
  if (c.slack >= 0 && h.ambient_n > 0) {
    const double parts = h.ambient_n;
    const double count = std::exp(std::lgamma(c.slack + parts) - std::lgamma(c.slack + 1.0) -
                                  std::lgamma(parts));
    if (count > kLatticeCandidateLimit) {
      throw GuardExceeded("lattice enumeration: about " + std::to_string(count) +
                          " candidates at q = " + std::to_string(q));
    }
  }
  return c;
}

// Lexicographic walk over candidates whose first `fixed` entries are already
// set in x. The visitor returns false to stop; the walk returns false then.
template <typename Visit>
bool walk(const Candidates& c, std::vector<std::int64_t>& x, std::size_t pos,
          std::int64_t rem, Visit&& visit) {
  const std::size_t dim = x.size();
  if (pos + 1 == dim) {
    x[pos] = c.lower[pos] + rem;
    return visit(x);
  }
  for (std::int64_t extra = 0; extra <= rem; ++extra) {
    x[pos] = c.lower[pos] + extra;
    if (!walk(c, x, pos + 1, rem - extra, visit)) return false;
  }
  return true;
}

}  // namespace

std::vector<LatticePoint> lattice_points(const HalfSpaceSystem& h, std::int64_t q, bool strict,
                                         Execution exec) {
  const Candidates c = candidates_for(h, q, strict);
  std::vector<LatticePoint> out;
  const std::size_t dim = c.lower.size();
  if (c.slack < 0 || dim == 0) return out;

  auto keep = [&](std::vector<LatticePoint>& sink) {
    return [&h, q, strict, &sink](const std::vector<std::int64_t>& x) {
      LatticePoint p{x};
      if (point_membership(h, q, p, strict)) sink.push_back(std::move(p));
      return true;
    };
  };

  if (exec == Execution::serial || dim < 3) {
    std::vector<std::int64_t> x(dim, 0);
    walk(c, x, 0, c.slack, keep(out));
    return out;
  }

  // Split on the first two coordinates; slices are concatenated in prefix
  // order, which is the serial visiting order.
  std::vector<std::pair<std::int64_t, std::int64_t>> prefixes;
  for (std::int64_t a = 0; a <= c.slack; ++a) {
    for (std::int64_t b = 0; a + b <= c.slack; ++b) prefixes.emplace_back(a, b);
  }
  std::vector<std::vector<LatticePoint>> slices(prefixes.size());
  const auto count = static_cast<std::int64_t>(prefixes.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t k = 0; k < count; ++k) {
    const auto [a, b] = prefixes[static_cast<std::size_t>(k)];
    std::vector<std::int64_t> x(dim, 0);
    x[0] = c.lower[0] + a;
    x[1] = c.lower[1] + b;
    walk(c, x, 2, c.slack - a - b, keep(slices[static_cast<std::size_t>(k)]));
  }
  for (auto& s : slices) {
    for (auto& p : s) out.push_back(std::move(p));
  }
  return out;
}

std::vector<LatticePoint> interior_lattice_points(const HalfSpaceSystem& h, std::int64_t q,
                                                  Execution exec) {
  return lattice_points(h, q, true, exec);
}

std::optional<LatticePoint> first_interior_point(const HalfSpaceSystem& h, std::int64_t q) {
  const Candidates c = candidates_for(h, q, true);
  std::optional<LatticePoint> found;
  if (c.slack < 0 || c.lower.empty()) return found;
  std::vector<std::int64_t> x(c.lower.size(), 0);
  walk(c, x, 0, c.slack, [&](const std::vector<std::int64_t>& v) {
    LatticePoint p{v};
    if (!point_membership(h, q, p, true)) return true;
    found = std::move(p);
    return false;
  });
  return found;
}

}  // namespace tb
