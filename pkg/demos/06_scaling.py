"""Runtime scaling of the exact and approximate algorithms on 3D walks."""

from fractions import Fraction

from gridfrechet.bench import fit_loglog_slope, run_bench, to_csv

eps = Fraction(1, 2)
exact = run_bench(3, eps, 1, [512, 1024, 2048, 4096], seeds=3, algo="exact")
approx = run_bench(3, eps, 1, [4096, 8192, 16384, 32768], seeds=3, algo="approx")

print(to_csv(approx[:6]))
print(f"exact slope  {fit_loglog_slope(exact, 'exact'):.2f}")
print(f"approx slope {fit_loglog_slope(approx, 'approx'):.2f}")
