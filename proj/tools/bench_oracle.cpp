// Benchmarks the parallel sampling falsifier against its serial reference on
// the cyclic squeezing fixture. Also cross-checks that the reports agree.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "sqz/oracle.hpp"

using namespace sqz;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  long density = argc > 1 ? std::atol(argv[1]) : 150;
  Mat2 a(Scalar(2), Scalar(0), Scalar(0), Scalar(Rational(1, 2)));
  Crown C{Mat2::identity(), Rational(1), Rational(4)};
  Domain base = Domain::crown(C);
  GridSpec grid{density, 17};
  // gamma = a^2 leaves nonempty triples, so the kernels do real work.
  std::vector<Mat2> maps = {a.pow(4), a.pow(2)};

  auto t0 = Clock::now();
  FalsifyReport serial = falsify_empty_serial(maps, base, grid);
  double serial_ms = ms_since(t0);

  t0 = Clock::now();
  FalsifyReport parallel = falsify_empty(maps, base, grid);
  double parallel_ms = ms_since(t0);

  bool agree = serial.counterexamples.size() == parallel.counterexamples.size();
  for (size_t i = 0; agree && i < serial.counterexamples.size(); ++i) {
    agree = serial.counterexamples[i].x == parallel.counterexamples[i].x &&
            serial.counterexamples[i].y == parallel.counterexamples[i].y;
  }

  std::printf("samples             : %ld\n", serial.samples_checked);
  std::printf("counterexamples     : %zu\n", serial.counterexamples.size());
  std::printf("serial falsifier    : %.1f ms\n", serial_ms);
  std::printf("parallel falsifier  : %.1f ms\n", parallel_ms);
  std::printf("speedup             : %.2fx\n", serial_ms / parallel_ms);
  std::printf("reports agree       : %s\n", agree ? "yes" : "NO");
  return agree ? 0 : 1;
}
