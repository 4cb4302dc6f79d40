// Benchmark: serial reference census vs the OpenMP kernel, with a result
// equality check.

#include <chrono>
#include <iostream>

#include "etm/census.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool same_classes(const etm::CensusResult& a, const etm::CensusResult& b) {
  if (a.classes.size() != b.classes.size()) return false;
  for (size_t i = 0; i < a.classes.size(); ++i)
    if (a.classes[i].certificate != b.classes[i].certificate ||
        a.classes[i].label != b.classes[i].label)
      return false;
  return a.candidates == b.candidates && a.profile_pass == b.profile_pass;
}

}  // namespace

int main(int argc, char** argv) {
  int max_n = (argc > 1) ? std::atoi(argv[1]) : 5;
  bool ok = true;
  for (int n = 4; n <= max_n && n <= 6; ++n) {
    etm::CensusOptions opt;
    opt.n = n;
    opt.orientable_only = (n == 6);  // the full n=6 space is the optional long run

    auto t0 = std::chrono::steady_clock::now();
    etm::CensusResult par = etm::edge_transitive_census(opt);
    double tp = seconds_since(t0);

    double ts = -1.0;
    if (n <= 5) {
      t0 = std::chrono::steady_clock::now();
      etm::CensusResult ser = etm::edge_transitive_census_reference(opt);
      ts = seconds_since(t0);
      if (!same_classes(par, ser)) {
        std::cout << "n=" << n << " MISMATCH between serial reference and parallel kernel\n";
        ok = false;
        continue;
      }
    } else {
      // reference is too slow at n=6; compare the kernel against itself on 1 thread
      etm::CensusOptions one = opt;
      one.jobs = 1;
      t0 = std::chrono::steady_clock::now();
      etm::CensusResult ser = etm::edge_transitive_census(one);
      ts = seconds_since(t0);
      if (!same_classes(par, ser)) {
        std::cout << "n=" << n << " MISMATCH between 1-thread and multi-thread kernel\n";
        ok = false;
        continue;
      }
    }
    std::cout << "n=" << n << (opt.orientable_only ? " (orientable)" : " (full)")
              << " candidates=" << par.candidates << " classes=" << par.classes.size()
              << "  parallel=" << tp << "s"
              << (n <= 5 ? " serial_reference=" : " single_thread=") << ts << "s"
              << "  speedup=" << (tp > 0 ? ts / tp : 0) << "x\n";
  }
  return ok ? 0 : 1;
}
