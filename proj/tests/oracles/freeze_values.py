"""Independent oracle for frozen test values.

Uses numpy.roots (companion-matrix eigenvalues) rather than the library's
closed-form solver. Run with: python3 tests/oracles/freeze_values.py
"""
import numpy as np


def roots(alpha):
    return np.roots([1.0, 0.0, -1.0, -2.0 * np.cos(alpha), -1.0])


def phi1(alpha):
    return max(r.real for r in roots(alpha) if abs(r.imag) < 1e-9)


def tri_inner(v1, v2):
    a1, b1, c1 = v1
    a2, b2, c2 = v2
    return (np.dot(a1 - b1, a2 - b2) + np.dot(b1 - c1, b2 - c2)
            + np.dot(c1 - a1, c2 - a2))


def unit_triangle(phi, lam):
    ec = np.sqrt(2.0) * np.sin(phi) / np.sqrt(4.0 - np.cos(lam) ** 2)
    eb = 0.5 * ec * np.cos(lam) + np.cos(phi) / np.sqrt(2.0)
    return (np.zeros(2), eb * np.array([np.cos(lam + phi), np.sin(lam + phi)]),
            ec * np.array([np.cos(phi), np.sin(phi)]))


grid = np.linspace(0.0, 2.0 * np.pi, 10007)
dev = max(abs(1.1180339887498949 + 0.5 * np.cos(a) - phi1(a)) for a in grid)
print("cosine approximation max deviation (10007 grid): %.12f" % dev)

n = 100000
g = np.linspace(0.0, 2.0 * np.pi, n)
vals = np.array([phi1(a) for a in g])
print("trapezoid mean (100000): %.12f" % (np.trapezoid(vals, g) / (2 * np.pi)))

V = (np.array([0.0, 0.0]), np.array([3.0, 2.0]), np.array([5.0, 0.0]))
lam = np.arctan2(2.0, 3.0)
print("planar angle deg: %.10f  phi1(planar): %.10f" % (np.degrees(lam), phi1(lam)))
norm_v = np.sqrt(tri_inner(V, V))
for deg in (20.0, 40.0, 70.0):
    E = unit_triangle(np.radians(deg), lam)
    c = np.clip(tri_inner(V, E) / norm_v, -1, 1)
    th = np.arccos(c)
    print("phi=%g theta6d=%.12f ggr=%.12f" % (deg, th, phi1(th)))

for deg in (45.0, 100.0):
    r = np.sort_complex(np.roots([1.0, 0.0, -1.0, -2.0 * np.cos(np.radians(deg)), -1.0]))
    print("roots at %g deg: %s" % (deg, ", ".join("%.12f%+.12fi" % (z.real, z.imag) for z in r)))
