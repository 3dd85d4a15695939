#include "quatode/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "quatode/errors.hpp"

namespace quatode {

namespace {

double max_component(std::span<const Quaternion> v) {
  double m = 0.0;
  for (const auto& q : v) {
    m = std::max({m, std::abs(q.w), std::abs(q.x), std::abs(q.y), std::abs(q.z)});
  }
  return m;
}

QVector simpson(double a, double b, const QVector& fa, const QVector& fm, const QVector& fb) {
  QVector s = fa + fb;
  for (std::size_t n = 0; n < s.size(); ++n) {
    s[n] += 4.0 * fm[n];
  }
  return ((b - a) / 6.0) * std::move(s);
}

class AdaptiveSimpson {
 public:
  AdaptiveSimpson(const std::function<QVector(double)>& f, const QuadratureOptions& opts)
      : f_(f), opts_(opts) {}

  QVector run(double a, double b) {
    const QVector fa = f_(a);
    const QVector fb = f_(b);
    const double m = 0.5 * (a + b);
    const QVector fm = f_(m);
    return refine(a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), opts_.tol, 0);
  }

 private:
  QVector refine(double a, double b, const QVector& fa, const QVector& fm, const QVector& fb,
                 const QVector& whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const QVector flm = f_(lm);
    const QVector frm = f_(rm);
    const QVector left = simpson(a, m, fa, flm, fm);
    const QVector right = simpson(m, b, fm, frm, fb);
    QVector halves = left + right;
    const QVector delta = halves - whole;

    if (depth >= opts_.min_depth && max_component(delta) <= 15.0 * tol) {
      for (std::size_t n = 0; n < halves.size(); ++n) {
        halves[n] += delta[n] / 15.0;
      }
      return halves;
    }
    if (depth >= opts_.max_depth) {
      throw QuadratureError("adaptive Simpson did not reach tolerance " + format_real(opts_.tol) +
                            " on [" + format_real(a) + ", " + format_real(b) + "] at depth " +
                            std::to_string(depth));
    }
    return refine(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           refine(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
  }

  const std::function<QVector(double)>& f_;
  QuadratureOptions opts_;
};

}  // namespace

QVector integrate(const std::function<QVector(double)>& f, double a, double b,
                  const QuadratureOptions& opts) {
  if (!(opts.tol > 0.0)) {
    throw InputError("quadrature tolerance must be positive");
  }
  if (a == b) {
    return zero_vector(f(a).size());
  }
  return AdaptiveSimpson(f, opts).run(a, b);
}

}  // namespace quatode
