// Serial reference vs OpenMP kernels: girth and augmentation sweep.

#include <chrono>
#include <cstdio>
#include <string>

#include "gw/bridge_gadgets.hpp"
#include "gw/girth_gadgets.hpp"
#include "gw/parallel.hpp"
#include "gw/rigidity.hpp"
#include "gw/search.hpp"

using namespace gw;

namespace {

template <class F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const std::string& name, double serial, double parallel, bool same) {
  std::printf("%-34s %10.4f %10.4f %7.2fx %s\n", name.c_str(), serial, parallel, serial / parallel,
              same ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::stoi(argv[1]) : 3;
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-34s %10s %10s %8s\n", "kernel", "serial s", "omp s", "speedup");

  for (auto [k, M] : {std::pair{2, 64}, {3, 64}, {4, 128}}) {
    const auto g = pentagon_tower(k, M);
    std::optional<std::size_t> a, b;
    const double s = best_of(reps, [&] { a = girth(g, Exec::serial); });
    const double p = best_of(reps, [&] { b = girth(g, Exec::parallel); });
    row("girth tower(" + std::to_string(k) + "," + std::to_string(M) + ") V=" + std::to_string(g.vertex_count()), s, p,
        a == b);
  }

  {
    const auto g = cycle_graph(4000);
    std::optional<std::size_t> a, b;
    const double s = best_of(reps, [&] { a = girth(g, Exec::serial); });
    const double p = best_of(reps, [&] { b = girth(g, Exec::parallel); });
    row("girth cycle(4000)", s, p, a == b);
  }

  for (auto [n, bits] : {std::pair{1, "0101"}, {2, "00"}, {2, "11"}}) {
    ChainLayout l;
    const auto g = bridge_chain(n, BitString::parse(bits), &l);
    const VertexId f = l.frontier();
    std::string a, b;
    const double s = best_of(reps, [&] { a = augmentation_sweep(g, n, {&f, 1}, Exec::serial).to_json(); });
    const double p = best_of(reps, [&] { b = augmentation_sweep(g, n, {&f, 1}, Exec::parallel).to_json(); });
    row("sweep chain(" + std::to_string(n) + ",\"" + bits + "\") V=" + std::to_string(g.vertex_count()), s, p, a == b);
  }
  return 0;
}
