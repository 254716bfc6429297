"""Independent mpmath oracle for the frozen expected values in the C++ tests.

Run with `python3 derive_values.py`; every constant in tests/frozen_values.hpp
was copied from this script's output at 60 significant digits. Nothing here
shares code with the C++ implementation.
"""
import itertools
from mpmath import mp, mpf, mpc, sqrt, exp, pi, arg, degrees, polyroots, nstr, cos, sin

mp.dps = 60
I = mpc(0, 1)
EPS = [exp(2j * pi * k / 3) for k in range(3)]
DIG = 50


def out(name, v):
    if isinstance(v, mpc):
        print(f'inline constexpr const char* {name}_re = "{nstr(v.real, DIG)}";')
        print(f'inline constexpr const char* {name}_im = "{nstr(v.imag, DIG)}";')
    else:
        print(f'inline constexpr const char* {name} = "{nstr(v, DIG)}";')


def principal_roots(z):
    z0 = exp(I * arg(z) / 3)
    return [EPS[k] * z0 for k in range(3)]


def ladder(svals):
    return [(s + sg * sqrt(s * s - 4)) / 2 for sg in (1, -1) for s in svals]


# cube roots of unity / roots of unity
out("kEps1", EPS[1])
out("kOmega7_1", exp(2j * pi / 7))

# heptagon type I
z7 = (1 - 3 * sqrt(3) * I) / (2 * sqrt(7))
out("kHeptTheta", arg(z7))
out("kHeptThetaDeg", degrees(arg(z7)))
Z7 = principal_roots(z7)
out("kHeptZeta0", Z7[0])
R1 = sqrt((7 + sqrt(21)) / 18)
R2 = sqrt((7 - sqrt(21)) / 18)
out("kHeptR1", R1)
out("kHeptR2", R2)
pairing = [1, 0, 2]
for s in range(2):
    V = [R1 * EPS[j] + R2 * Z7[(pairing[j] + s) % 3] for j in range(3)]
    for j in range(3):
        out(f"kHeptShift{s}V{j}", V[j])

# Q7 roots and heptagon ladder (k order)
for i, r in enumerate(sorted(x.real for x in polyroots([1, 6, -9, -41]))):
    out(f"kQ7Root{i}", r)
s7 = [-2 + sqrt(7) * 2 * Z7[k].real for k in range(3)]
for i, r in enumerate(ladder(s7)):
    out(f"kHeptLadder{i}", r)

# tridecagon type I
s13 = sqrt(13)
for sgn, tag in ((1, "Plus"), (-1, "Minus")):
    zz = (sqrt(26 + sgn * 5 * s13) - sqrt(26 - sgn * 5 * s13) * I) / (2 * s13)
    out(f"kTri{tag}ThetaDeg", degrees(arg(zz)))
    a = sqrt(13 + sgn * s13)
    b = sqrt(5 + sgn * s13)
    out(f"kTri{tag}R1", sqrt((a + b) / (2 * sqrt(2))))
    out(f"kTri{tag}R2", sqrt((a - b) / (2 * sqrt(2))))

# roots of R and conj(R) with the (107 + 15 sqrt13)/2 constant
Rn = [1, 3 * (2 + s13), mpf(21) / 2 * (3 + s13), (107 + 15 * s13) / 2]
Rb = [1, 3 * (2 - s13), mpf(21) / 2 * (3 - s13), (107 - 15 * s13) / 2]
for tag, poly in (("R", Rn), ("Rbar", Rb)):
    for i, r in enumerate(sorted(x.real for x in polyroots(poly))):
        out(f"k{tag}Root{i}", r)

# Gaussian-period Cardano radii for unit-circle cosets
for p, coset, tag in ((7, [1, 2, 4], "P7"), (13, [1, 3, 9], "P13a"), (13, [2, 5, 6], "P13b")):
    w = [exp(2j * pi * a / p) for a in coset]
    e1 = sum(w)
    e2 = w[0] * w[1] + w[0] * w[2] + w[1] * w[2]
    e3 = w[0] * w[1] * w[2]
    P = e2 - e1 ** 2 / 3
    Qd = -(2 * e1 ** 3) / 27 + e1 * e2 / 3 - e3
    D = sqrt(Qd ** 2 / 4 + P ** 3 / 27)
    out(f"kGen{tag}Center", e1 / 3)
    ru, rv = sorted([abs(-Qd / 2 + D) ** (mpf(1) / 3), abs(-Qd / 2 - D) ** (mpf(1) / 3)], reverse=True)
    out(f"kGen{tag}RadiusLarge", ru)
    out(f"kGen{tag}RadiusSmall", rv)
