#include "logdet/philox.hpp"

#include <gsl/gsl_cdf.h>
#include <gsl/gsl_errno.h>

#include <mutex>

namespace logdet::rng {

namespace {
std::once_flag g_gsl_init;
}

void disable_gsl_abort() {
  // GSL aborts on domain errors by default; callers guard domains themselves.
  std::call_once(g_gsl_init, [] { gsl_set_error_handler_off(); });
}

double inverse_normal_cdf(double p) {
  disable_gsl_abort();
  return gsl_cdf_ugaussian_Pinv(p);
}

}  // namespace logdet::rng
