# Prime tables, the Moebius function and pi(x) with half steps at primes.
#
# Run:  python demos/02_primes_and_mobius.py

import time

import numpy as np

from pzeta import mobius_sieve, prime_count, sieve

t0 = time.perf_counter()
table = sieve(10**7)
print(f"{len(table)} primes below 1e7, sieved in {time.perf_counter() - t0:.2f}s")

# pi(x) jumps at primes; at the jump it takes the midpoint of the two sides
small = sieve(30)
for x in (2.5, 3, 3.5, 10, 29, 29.5):
    print(f"pi({x}) = {prime_count(x, small)}")

mu = mobius_sieve(30)
print("mu(1..30):", mu.mu[1:].tolist())
print("squarefree n <= 1000:", int(np.abs(mobius_sieve(1000).mu[1:]).sum()))
