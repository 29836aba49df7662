#include "hilbertlab/numerics/quadrature.hpp"

#include <cmath>
#include <memory>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include "hilbertlab/core/error.hpp"

namespace hilbertlab::quad {

namespace {

double trampoline(double x, void* params) { return (*static_cast<const std::function<double(double)>*>(params))(x); }

struct WorkspaceDeleter {
  void operator()(gsl_integration_workspace* w) const { gsl_integration_workspace_free(w); }
};

}  // namespace

Rule gauss_legendre(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "Gauss-Legendre rule needs n >= 1");
  std::unique_ptr<gsl_integration_glfixed_table, decltype(&gsl_integration_glfixed_table_free)> table(
      gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(n)), &gsl_integration_glfixed_table_free);
  if (!table) throw Error(ErrorKind::InvalidArgument, "cannot build a Gauss-Legendre table");
  Rule r{Eigen::VectorXd(n), Eigen::VectorXd(n)};
  for (int i = 0; i < n; ++i) gsl_integration_glfixed_point(-1.0, 1.0, static_cast<std::size_t>(i), &r.nodes[i], &r.weights[i], table.get());
  return r;
}

Result adaptive(const std::function<double(double)>& f, double a, double b, double abs_tol, double rel_tol,
                int max_intervals) {
  if (a == b) return {};
  // Status codes (roundoff, interval limit) are reported through the error
  // estimate rather than aborting.
  gsl_set_error_handler_off();
  std::unique_ptr<gsl_integration_workspace, WorkspaceDeleter> ws(
      gsl_integration_workspace_alloc(static_cast<std::size_t>(max_intervals)));
  gsl_function fn{&trampoline, const_cast<std::function<double(double)>*>(&f)};
  Result r;
  gsl_integration_qag(&fn, a, b, abs_tol, rel_tol, static_cast<std::size_t>(max_intervals), GSL_INTEG_GAUSS15,
                      ws.get(), &r.value, &r.error);
  r.evaluations = static_cast<int>(ws->size) * 15;
  if (!std::isfinite(r.value)) throw Error(ErrorKind::NonFinite, "adaptive quadrature produced a non-finite value");
  return r;
}

Result tanh_sinh(const std::function<double(double)>& f, double a, double b, double tol) {
  if (a == b) return {};
  boost::math::quadrature::tanh_sinh<double> rule;
  Result r;
  std::size_t levels = 0;
  r.value = rule.integrate(f, a, b, tol, &r.error, nullptr, &levels);
  r.evaluations = static_cast<int>(levels);
  return r;
}

}  // namespace hilbertlab::quad
