#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "ddlpb/cavity.hpp"
#include "ddlpb/coupling.hpp"
#include "ddlpb/interior.hpp"
#include "ddlpb/kernels.hpp"

using namespace ddlpb;

namespace {

const std::string kData = DDLPB_DATA_DIR;

// Random compact cluster of overlapping balls, roughly protein-like packing.
std::vector<cavity::Atom> cluster(int n) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0), r(1.2, 1.9);
  const double side = 1.6 * std::cbrt(static_cast<double>(n));
  std::vector<cavity::Atom> atoms;
  while (static_cast<int>(atoms.size()) < n) {
    const Vec3 c{side * u(rng), side * u(rng), side * u(rng)};
    bool clash = false;
    for (const auto& a : atoms) clash = clash || distance(a.center, c) < 0.6;
    if (!clash) atoms.push_back({c, r(rng), 0.3 * u(rng)});
  }
  return atoms;
}

const cavity::SurfaceGrid& cluster_surface() {
  static const auto s = cavity::build_surface(cluster(150), 86);
  return s;
}

kernels::Exec exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? kernels::Exec::serial : kernels::Exec::parallel;
}

void BM_SchwarzApply(benchmark::State& state) {
  const auto& s = cluster_surface();
  const interior::InteriorSolver solver(s, 7, interior::Kind::hsp, 0.104);
  const auto& rows = solver.coupling_rows();
  std::vector<double> x(static_cast<std::size_t>(s.num_balls() * rows.nbasis), 0.5), y(x.size());
  const auto exec = exec_of(state);
  for (auto _ : state) {
    kernels::schwarz_apply(rows, solver.tables().projector, x, y, exec);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetLabel(exec == kernels::Exec::serial ? "serial" : "openmp");
}
BENCHMARK(BM_SchwarzApply)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_YukawaCross(benchmark::State& state) {
  const auto& s = cluster_surface();
  std::vector<Vec3> pos;
  std::vector<int> owner;
  std::vector<double> q, width;
  for (int j = 0; j < s.num_balls(); ++j) {
    for (int n = 0; n < s.points_per_ball(); ++n) {
      const auto i = s.flat(j, n);
      if (!s.exposed[i]) continue;
      pos.push_back(s.positions[i]);
      owner.push_back(j);
      q.push_back(1.0);
      width.push_back(0.3);
    }
  }
  std::vector<double> out(pos.size());
  const auto exec = exec_of(state);
  for (auto _ : state) {
    kernels::yukawa_cross(pos, owner, q, width, pos, owner, 0.104, out, exec);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetLabel(exec == kernels::Exec::serial ? "serial" : "openmp");
  state.counters["pairs"] = static_cast<double>(pos.size() * pos.size());
}
BENCHMARK(BM_YukawaCross)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BenzeneSolve(benchmark::State& state) {
  const auto atoms = cavity::read_pqr(kData + "/benzene.pqr");
  coupling::SolverConfig c;
  c.exec = exec_of(state);
  for (auto _ : state) {
    const auto rep = coupling::richardson_run(atoms, c);
    benchmark::DoNotOptimize(rep.final_energy());
  }
  state.SetLabel(c.exec == kernels::Exec::serial ? "serial" : "openmp");
}
BENCHMARK(BM_BenzeneSolve)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
