# Special functions behind the continuation: E1, Ei, li and zeta.
#
# Run:  python demos/01_special_functions.py

import cmath
import math

from pzeta import exp_integral_e1, exp_integral_ei, log_integral, riemann_zeta
from pzeta.specfun import e1_quadrature_oracle

# E1 on the positive axis, next to an independent quadrature of its integral
for z in (0.5, 1.0, 5.0):
    print(f"E1({z}) = {exp_integral_e1(z).real:.15f}   quadrature: {e1_quadrature_oracle(z).real:.15f}")

# On the negative axis E1 sits on its cut; we return the value from above,
# so the imaginary part is -pi and the real part is -Ei(|z|)
print("E1(-1) =", exp_integral_e1(-1), " -Ei(1) =", -exp_integral_ei(1))

# Crossing the cut costs -2 pi i
eps = 1e-10
jump = exp_integral_e1(complex(-2, eps)) - exp_integral_e1(complex(-2, -eps))
print("jump of E1 across the cut at -2:", jump)

# li(x) = Ei(log x); its derivative is 1/log x
for x in (10.0, 1e4, 1e8):
    h = 1e-4 * x
    fd = (log_integral(x + h) - log_integral(x - h)) / (2 * h)
    print(f"li({x:g}) = {log_integral(x):.6f}   li' * log x = {fd * math.log(x):.9f}")

# zeta on the real axis and up the line Re(s) = 0.75
print("zeta(2) - pi^2/6 =", riemann_zeta(2) - math.pi**2 / 6)
for t in (0.1, 14.134725, 30.0):
    z = riemann_zeta(complex(0.75, t))
    print(f"zeta(0.75+{t}i) = {z:.10f}   |arg| = {abs(cmath.phase(z)):.3f}")
