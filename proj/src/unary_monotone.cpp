#include "overlapkit/unary_monotone.hpp"

#include <cmath>
#include <vector>

namespace overlapkit {

namespace {

// Sample points of the domain in the bisection coordinate (raw for bounded
// domains, compactified otherwise).
struct Param {
  bool compact;
  double lo, hi;

  static Param of(const Interval& dom) {
    if (dom.hi.is_infinite()) {
      return {true, compactify(dom.lo), 1.0};
    }
    return {false, dom.lo.value(), dom.hi.value()};
  }

  ExtReal point(double c) const { return compact ? uncompactify(c) : ExtReal(c); }
};

void probe_direction(const UnaryMonotone& f, int samples = 33) {
  Param par = Param::of(f.domain());
  ExtReal prev_x = par.point(par.lo);
  ExtReal prev_v = f(prev_x);
  for (int i = 1; i < samples; ++i) {
    double c = par.lo + (par.hi - par.lo) * i / (samples - 1);
    ExtReal x = par.point(c);
    ExtReal v = f(x);
    bool bad;
    if (f.direction() == Direction::increasing) {
      // v may drop below prev_v only within the monotonicity slack.
      bad = v < prev_v && ext_gap(v, prev_v) > tolerance::mono;
    } else {
      bad = v > prev_v && ext_gap(v, prev_v) > tolerance::mono;
    }
    if (bad) {
      throw NonMonotoneDetected("'" + f.label() +
                                "' moves against its declared direction");
    }
    prev_x = x;
    prev_v = v;
  }
}

ExtReal pseudo_inverse_probed(const UnaryMonotone& f, ExtReal y, double tol) {
  const Param par = Param::of(f.domain());
  const ExtReal p = f.domain().lo;
  const ExtReal q = f.domain().hi;

  // Solution sets { f > y } (decreasing) and { f < y } (increasing) are both
  // down-sets of the domain, so sup-finding reduces to locating their right
  // boundary. Endpoint checks return exact domain endpoints: that realizes
  // the empty-set convention (left endpoint) and full-set sup (right
  // endpoint) without rounding.
  const bool dec = f.direction() == Direction::decreasing;
  auto in_set = [&](ExtReal x) {
    ExtReal v = f(x);
    return dec ? v > y : v < y;
  };

  if (in_set(q)) return q;
  if (!in_set(p)) return p;

  double lo = par.lo, hi = par.hi;
  for (int i = 0; i < tolerance::pinv_max_iter && hi - lo > tol; ++i) {
    double mid = 0.5 * (lo + hi);
    if (in_set(par.point(mid))) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return par.point(0.5 * (lo + hi));
}

}  // namespace

ExtReal pseudo_inverse(const UnaryMonotone& f, ExtReal y, double tol) {
  probe_direction(f);
  return pseudo_inverse_probed(f, y, tol);
}

UnaryMonotone pseudo_inverse_fn(const UnaryMonotone& f, double tol,
                                std::optional<Interval> domain) {
  probe_direction(f);
  Interval dom = domain.value_or(f.codomain());
  // Pseudo-inverses of monotone functions keep the direction.
  UnaryMonotone captured = f;
  return UnaryMonotone(
      dom, f.domain(), f.direction(),
      [captured, tol](ExtReal y) {
        return pseudo_inverse_probed(captured, y, tol);
      },
      "pinv(" + f.label() + ")", f.strict_hint());
}

StrictnessProbe probe_strictness(const UnaryMonotone& f, int grid_n) {
  if (grid_n < 3) throw std::invalid_argument("probe_strictness: grid_n < 3");
  probe_direction(f, std::min(grid_n, 65));

  const Param par = Param::of(f.domain());
  std::vector<ExtReal> xs(grid_n);
  std::vector<ExtReal> vs(grid_n);
  for (int i = 0; i < grid_n; ++i) {
    double c = par.lo + (par.hi - par.lo) * i / (grid_n - 1);
    xs[i] = par.point(c);
    vs[i] = f(xs[i]);
  }

  // Widest span [u, v] with |f(u) - f(v)| <= plateau tolerance. Monotonicity
  // makes the endpoint gap the span's total variation, so a two-pointer scan
  // finds the maximum.
  StrictnessProbe out;
  int best_i = -1, best_j = -1;
  int j = 0;
  for (int i = 0; i < grid_n; ++i) {
    if (j < i + 1) j = i + 1;
    while (j < grid_n && ext_gap(vs[i], vs[j]) <= tolerance::plateau) ++j;
    int last = j - 1;  // farthest index still within tolerance of i
    if (last > i && (best_i < 0 || last - i > best_j - best_i)) {
      best_i = i;
      best_j = last;
    }
  }
  if (best_i >= 0) {
    out.strict = false;
    out.plateau_lo = xs[best_i];
    out.plateau_hi = xs[best_j];
  }
  return out;
}

}  // namespace overlapkit
