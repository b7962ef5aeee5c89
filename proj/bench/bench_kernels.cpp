// Compares the serial reference kernel against the sharded parallel kernel
// on fixed counting workloads and reports wall-clock times and speedups.
#include "ppdyn/plane_partition.hpp"
#include "ppdyn/sieve.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace ppdyn;

namespace {

double run_ms(const std::function<long long()>& job, long long& result) {
  auto t0 = std::chrono::steady_clock::now();
  result = job();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

struct Workload {
  std::string name;
  std::function<long long(const SieveOptions&)> run;
};

}  // namespace

int main() {
  SieveOptions serial;
  serial.cap = 20'000'000;
  serial.workers = 1;
  // Explicit worker count so the sharded kernel runs even on one core.
  SieveOptions parallel = serial;
  parallel.workers = 4;

  auto trpro_fixed = [](const PlanePartition& p) {
    PlanePartition q = p;
    q.promotion();
    q.transpose();
    return q == p;
  };
  auto row4_fixed = [](const PlanePartition& p) {
    PlanePartition q = p;
    for (int s = 0; s < 4; ++s) q.rowmotion();
    return q == p;
  };

  std::vector<Workload> workloads;
  workloads.push_back({"count pp(4x4, m=6)", [](const SieveOptions& o) {
                         return count_pp(4, 4, 6, [](const PlanePartition&) { return true; },
                                         o);
                       }});
  workloads.push_back({"count Tr Pro-fixed in pp(4x4, m=6)",
                       [&](const SieveOptions& o) { return count_pp(4, 4, 6, trpro_fixed, o); }});
  workloads.push_back({"count Row^4-fixed in pp(4x4, m=6)",
                       [&](const SieveOptions& o) { return count_pp(4, 4, 6, row4_fixed, o); }});
  workloads.push_back({"count symmetric Co-fixed in pp(6x6, m=4)",
                       [](const SieveOptions& o) {
                         return count_symmetric_pp(
                             6, 4,
                             [](const PlanePartition& p) {
                               PlanePartition q = p;
                               q.complement();
                               return q == p;
                             },
                             o);
                       }});

  std::printf("%-44s %14s %14s %9s %s\n", "workload", "serial ms", "parallel ms", "speedup",
              "counts");
  bool all_equal = true;
  for (const Workload& w : workloads) {
    long long serial_count = 0, parallel_count = 0;
    double serial_ms = run_ms([&] { return w.run(serial); }, serial_count);
    double parallel_ms = run_ms([&] { return w.run(parallel); }, parallel_count);
    bool equal = serial_count == parallel_count;
    all_equal = all_equal && equal;
    std::printf("%-44s %14.1f %14.1f %8.2fx %lld/%lld%s\n", w.name.c_str(), serial_ms,
                parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, serial_count,
                parallel_count, equal ? "" : "  MISMATCH");
  }
  return all_equal ? 0 : 1;
}
