// Serial against OpenMP timings for relation assembly and fraction-free elimination.

#include <chrono>
#include <cstdio>
#include <string>

#include "cb/blocks/covacua.hpp"
#include "cb/zhu/zhu.hpp"

using namespace cb;

namespace {

template <class F>
double seconds(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* what, double serial, double parallel, bool same) {
  std::printf("%-34s %10.4f %10.4f %8.2fx  %s\n", what, serial, parallel, parallel > 0 ? serial / parallel : 0.0,
              same ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int depth = argc > 1 ? std::stoi(argv[1]) : 5;
  std::printf("threads %d, depth %d\n", worker_threads(), depth);
  std::printf("%-34s %10s %10s %9s\n", "kernel", "serial[s]", "omp[s]", "speedup");

  const char* problems[] = {
      "0 2/5/1/2\n1 2/5/1/2\n3 2/5/1/2\ninf 2/5/1/2\n",
      "0 3/4/1/2\n1 3/4/1/2\n3 3/4/1/2\ninf 3/4/1/2\n",
  };
  const char* names[] = {"Lee-Yang 4-point", "Ising 4-point"};
  for (int i = 0; i < 2; ++i) {
    CovacuaProblem p = parse_problem(problems[i]);
    ModeEngine& e = shared_engine(p.central_charge());
    std::vector<ModulePtr> mods;
    for (const auto& pt : p.points) mods.push_back(pt.module);
    TensorLayout lay(mods, depth);
    // warm the mode caches so both timings measure the same work
    CovacuaAssembler(e, p, p.weight_bound).assemble(lay, Exec::Serial);
    SparseMatrix ms, mp;
    double ts = seconds([&] { ms = CovacuaAssembler(e, p, p.weight_bound).assemble(lay, Exec::Serial); });
    double tp = seconds([&] { mp = CovacuaAssembler(e, p, p.weight_bound).assemble(lay, Exec::Parallel); });
    row((std::string(names[i]) + " assembly").c_str(), ts, tp, ms == mp);
    Echelon es, ep;
    ts = seconds([&] { es = echelon(ms, Exec::Serial); });
    tp = seconds([&] { ep = echelon(ms, Exec::Parallel); });
    row((std::string(names[i]) + " echelon").c_str(), ts, tp, es.pivot_cols == ep.pivot_cols && es.rows == ep.rows);
  }
  ModeEngine& e = shared_engine(central_charge(2, 9));
  ZhuQuotient(e, depth + 5, Exec::Serial);  // warm the caches
  std::size_t ds = 0, dp = 0;
  double ts = seconds([&] { ds = ZhuQuotient(e, depth + 5, Exec::Serial).dim(); });
  double tp = seconds([&] { dp = ZhuQuotient(e, depth + 5, Exec::Parallel).dim(); });
  row("Zhu quotient (2,9)", ts, tp, ds == dp);
  return 0;
}
