# How fast the continuation converges in x, and what the cut on (1/2, 1] looks like.
#
# Run:  python demos/05_convergence_and_branch_cut.py

from pzeta import prime_zeta_mobius, sieve
from pzeta.analysis import branch_jump, convergence_study, tail_identity_check

table = sieve(10**6)
xs = [1e2, 3e2, 1e3, 3e3, 1e4, 1e5, 1e6]

for s in (0.75 + 2j, 1.0 + 5j, 1.5):
    print(f"s = {s}")
    for row in convergence_study(s, xs, prime_zeta_mobius(s), table):
        flag = "  <-- outside envelope" if row.exceeds else ""
        print(f"  x = {row.x:8.0e}  |error| = {row.abs_error:.3e}  envelope = {row.bound:.3e}{flag}")

# the tail of the prime-density integral is exactly E1
for s, x in ((2, 10), (3 + 1j, 100), (2 + 5j, 1e3)):
    print(f"tail identity residual at s={s}, x={x:g}: {tail_identity_check(s, x):.1e}")

# Im P jumps by -2 pi across the cut, and is continuous beyond s = 1
for sigma in (0.6, 0.75, 0.9, 1.2, 2.0):
    print(f"jump of Im P at {sigma}: {branch_jump(sigma, 1e4, table):+.12f}")
