#include "luttff/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace luttff {

int worker_count() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("LUTTINGER_FF_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) hw = std::min(hw, cap);
  }
  return hw;
}

std::vector<double> parallel_values(
    std::size_t n, const std::function<double(std::size_t)>& f) {
  std::vector<double> out(n);
  const int workers = std::min<std::size_t>(worker_count(), n ? n : 1);
  if (workers <= 1 || n < 64) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (std::size_t i = w; i < n; i += workers) out[i] = f(i);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

double kahan_sum(const std::vector<double>& values) {
  double sum = 0.0;
  double carry = 0.0;
  for (double v : values) {
    const double y = v - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return sum;
}

}  // namespace luttff
