#include "vortex/quadrature.hpp"
#include "vortex/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>

namespace vortex::quad {

namespace {

// QUADPACK qk15 abscissae (Kronrod) and weights; every second abscissa is a
// 7-point Gauss node.
constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double lo, hi;
  cplx value;
  double error;
  int depth;
};

struct Worse {
  bool operator()(const Segment &a, const Segment &b) const {
    if (a.error != b.error)
      return a.error < b.error;
    return a.lo > b.lo; // deterministic tie-break
  }
};

Segment gk15(const Integrand1D &f, double lo, double hi, int depth) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const cplx fc = f(center);
  cplx kronrod = fc * wgk[7];
  cplx gauss = fc * wg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * xgk[static_cast<std::size_t>(j)];
    const cplx sum = f(center - dx) + f(center + dx);
    kronrod += wgk[static_cast<std::size_t>(j)] * sum;
    if (j % 2 == 1)
      gauss += wg[static_cast<std::size_t>(j / 2)] * sum;
  }
  kronrod *= half;
  gauss *= half;
  return {lo, hi, kronrod, std::abs(kronrod - gauss), depth};
}

// Neumaier compensated summation for complex values.
class CompensatedSum {
public:
  void add(cplx v) {
    add_part(re_, re_c_, v.real());
    add_part(im_, im_c_, v.imag());
  }
  cplx value() const { return {re_ + re_c_, im_ + im_c_}; }

private:
  static void add_part(double &sum, double &comp, double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }
  double re_ = 0, im_ = 0, re_c_ = 0, im_c_ = 0;
};

constexpr int kMaxSegments = 5000;

} // namespace

void Tolerance::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_depth <= 0)
    throw DomainError("quadrature tolerance fields must be positive");
}

IntegrationResult integrate_1d(const Integrand1D &f, double a, double b,
                               const Tolerance &tol) {
  tol.validate();
  if (!(a < b))
    throw DomainError("integrate_1d: require a < b");

  std::priority_queue<Segment, std::vector<Segment>, Worse> open;
  std::vector<Segment> frozen;
  IntegrationResult out;

  open.push(gk15(f, a, b, 0));
  out.evaluations = 15;
  cplx total = open.top().value;
  double total_err = open.top().error;

  while (!open.empty()) {
    const double target = std::max(tol.abs_tol, tol.rel_tol * std::abs(total));
    if (total_err <= target)
      break;
    if (static_cast<int>(open.size() + frozen.size()) >= kMaxSegments) {
      out.converged = false;
      break;
    }
    Segment worst = open.top();
    open.pop();
    if (worst.depth >= tol.max_depth) {
      out.converged = false;
      frozen.push_back(worst);
      continue;
    }
    const double mid = 0.5 * (worst.lo + worst.hi);
    Segment left = gk15(f, worst.lo, mid, worst.depth + 1);
    Segment right = gk15(f, mid, worst.hi, worst.depth + 1);
    out.evaluations += 30;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    open.push(left);
    open.push(right);
  }

  // final sum in left-to-right order so the result does not depend on heap
  // layout
  std::vector<Segment> all = std::move(frozen);
  while (!open.empty()) {
    all.push_back(open.top());
    open.pop();
  }
  std::sort(all.begin(), all.end(),
            [](const Segment &x, const Segment &y) { return x.lo < y.lo; });
  CompensatedSum sum;
  double err = 0.0;
  for (const auto &s : all) {
    sum.add(s.value);
    err += s.error;
  }
  out.value = sum.value();
  out.error_estimate = err;
  if (!std::isfinite(out.value.real()) || !std::isfinite(out.value.imag()))
    out.converged = false;
  return out;
}

IntegrationResult integrate_semi_infinite(const Integrand1D &f, double a,
                                          const Tolerance &tol) {
  auto mapped = [&f, a](double t) -> cplx {
    const double one_minus = 1.0 - t;
    const double x = a + t / one_minus;
    return f(x) / (one_minus * one_minus);
  };
  return integrate_1d(mapped, 0.0, 1.0, tol);
}

namespace {

IntegrationResult integrate_nd_from(const IntegrandND &f,
                                    const std::vector<Interval> &box,
                                    std::vector<double> &point,
                                    std::size_t dim, const Tolerance &tol) {
  const Interval &iv = box[dim];
  if (dim + 1 == box.size()) {
    return integrate_1d(
        [&](double x) {
          point[dim] = x;
          return f(std::span<const double>(point));
        },
        iv.lo, iv.hi, tol);
  }
  // inner integrals carry an absolute tolerance scaled by the outer width so
  // that their accumulated error stays within the requested bound
  Tolerance inner = tol;
  inner.abs_tol = tol.abs_tol / (iv.hi - iv.lo);
  std::int64_t evals = 0;
  double worst_inner = 0.0;
  bool inner_ok = true;
  IntegrationResult outer = integrate_1d(
      [&](double x) {
        point[dim] = x;
        const IntegrationResult r = integrate_nd_from(f, box, point, dim + 1, inner);
        evals += r.evaluations;
        worst_inner = std::max(worst_inner, r.error_estimate);
        inner_ok = inner_ok && r.converged;
        return r.value;
      },
      iv.lo, iv.hi, tol);
  outer.evaluations = evals;
  outer.error_estimate += (iv.hi - iv.lo) * worst_inner;
  outer.converged = outer.converged && inner_ok;
  return outer;
}

} // namespace

IntegrationResult integrate_nd(const IntegrandND &f,
                               const std::vector<Interval> &box,
                               const Tolerance &tol) {
  tol.validate();
  if (box.empty() || box.size() > 4)
    throw DomainError("integrate_nd: dimension must be 1..4");
  for (const auto &iv : box)
    if (!(iv.lo < iv.hi))
      throw DomainError("integrate_nd: empty interval in box");
  std::vector<double> point(box.size(), 0.0);
  return integrate_nd_from(f, box, point, 0, tol);
}

cplx riemann_oracle(const Integrand1D &f, double a, double b, std::int64_t n) {
  if (n < 1)
    throw DomainError("riemann_oracle: need at least one panel");
  const double h = (b - a) / static_cast<double>(n);
  CompensatedSum sum;
  for (std::int64_t i = 0; i < n; ++i)
    sum.add(f(a + (static_cast<double>(i) + 0.5) * h));
  return sum.value() * h;
}

} // namespace vortex::quad
