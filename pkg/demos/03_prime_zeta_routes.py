# Four ways to get P(s), and where each one is valid.
#
# Run:  python demos/03_prime_zeta_routes.py

from pzeta import (
    prime_zeta_direct,
    prime_zeta_mobius,
    prime_zeta_rh,
    prime_zeta_rh_corrected,
    sieve,
)
from pzeta.primezeta import deviation

table = sieve(10**6)
x = 1e4

# Re(s) > 1: all four agree
s = 2.0
for ev in (prime_zeta_direct(s, table), prime_zeta_mobius(s),
           prime_zeta_rh(s, x, table), prime_zeta_rh_corrected(s, x, table)):
    print(f"{ev.method.value:>13}: {ev.value.real:.15f}  bound {ev.error_bound:.2e}")

# 1/2 < Re(s) <= 1 off the real axis: the direct sum is gone, the others still agree
s = 0.75 + 14.0j
ref = prime_zeta_mobius(s)
for ev in (prime_zeta_rh(s, x, table), prime_zeta_rh_corrected(s, x, table)):
    print(f"{ev.method.value:>13}: {ev.value:.8f}  |diff| {deviation(ev, ref):.2e}  envelope {ev.error_bound:.3f}")
print(f"{'mobius':>13}: {ref.value:.8f}")

# on the cut (real s in (1/2, 1]) only the real parts are comparable:
# E1 contributes -i pi from above while log zeta(s) < 0 gives +i pi
s = 0.75
rh, mob = prime_zeta_rh(s, x, table), prime_zeta_mobius(s)
print("on cut:", rh.on_cut, " rh =", rh.value, " mobius =", mob.value)
print("real-part difference:", deviation(rh, mob))
