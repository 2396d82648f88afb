#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace luttff {

// Worker count: min(hardware, LUTTINGER_FF_THREADS) with a floor of 1.
int worker_count();

// Evaluates f(i) for i in [0, n) into a vector, splitting the index range
// over worker threads. The output is positionally ordered, so any reduction
// done afterwards in index order is independent of the thread count.
std::vector<double> parallel_values(std::size_t n,
                                    const std::function<double(std::size_t)>& f);

// Kahan-compensated sum in index order.
double kahan_sum(const std::vector<double>& values);

}  // namespace luttff
