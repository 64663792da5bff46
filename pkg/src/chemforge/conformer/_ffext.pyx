# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled force-field kernel.

Identical contract to the numpy fallback: energy and per-atom gradient
for the bond, angle, and soft-repulsion terms, evaluated in tight typed
loops.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport sqrt

cnp.import_array()


def energy_gradient(
    double[:, ::1] coords,
    int[::1] bond_a,
    int[::1] bond_b,
    double[::1] bond_rest,
    double bond_k,
    int[::1] angle_left,
    int[::1] angle_center,
    int[::1] angle_right,
    double[::1] angle_cos0,
    double angle_k,
    int[::1] pair_a,
    int[::1] pair_b,
    double sigma,
    double repulsion_k,
):
    cdef Py_ssize_t n = coords.shape[0]
    grad_arr = np.zeros((n, 3), dtype=np.float64)
    cdef double[:, ::1] grad = grad_arr
    cdef double energy = 0.0

    cdef Py_ssize_t t, x
    cdef int a, b, c
    cdef double dx, dy, dz, dist, stretch, coeff
    cdef double ux, uy, uz, vx, vy, vz, nu, nv, dot, cosv, diff, pref
    cdef double dux, duy, duz, dvx, dvy, dvz, gap

    for t in range(bond_a.shape[0]):
        a = bond_a[t]
        b = bond_b[t]
        dx = coords[a, 0] - coords[b, 0]
        dy = coords[a, 1] - coords[b, 1]
        dz = coords[a, 2] - coords[b, 2]
        dist = sqrt(dx * dx + dy * dy + dz * dz)
        stretch = dist - bond_rest[t]
        energy += bond_k * stretch * stretch
        coeff = 2.0 * bond_k * stretch / dist
        grad[a, 0] += coeff * dx
        grad[a, 1] += coeff * dy
        grad[a, 2] += coeff * dz
        grad[b, 0] -= coeff * dx
        grad[b, 1] -= coeff * dy
        grad[b, 2] -= coeff * dz

    for t in range(angle_left.shape[0]):
        a = angle_left[t]
        c = angle_center[t]
        b = angle_right[t]
        ux = coords[a, 0] - coords[c, 0]
        uy = coords[a, 1] - coords[c, 1]
        uz = coords[a, 2] - coords[c, 2]
        vx = coords[b, 0] - coords[c, 0]
        vy = coords[b, 1] - coords[c, 1]
        vz = coords[b, 2] - coords[c, 2]
        nu = sqrt(ux * ux + uy * uy + uz * uz)
        nv = sqrt(vx * vx + vy * vy + vz * vz)
        dot = ux * vx + uy * vy + uz * vz
        cosv = dot / (nu * nv)
        diff = cosv - angle_cos0[t]
        energy += angle_k * diff * diff
        pref = 2.0 * angle_k * diff
        dux = vx / (nu * nv) - cosv * ux / (nu * nu)
        duy = vy / (nu * nv) - cosv * uy / (nu * nu)
        duz = vz / (nu * nv) - cosv * uz / (nu * nu)
        dvx = ux / (nu * nv) - cosv * vx / (nv * nv)
        dvy = uy / (nu * nv) - cosv * vy / (nv * nv)
        dvz = uz / (nu * nv) - cosv * vz / (nv * nv)
        grad[a, 0] += pref * dux
        grad[a, 1] += pref * duy
        grad[a, 2] += pref * duz
        grad[b, 0] += pref * dvx
        grad[b, 1] += pref * dvy
        grad[b, 2] += pref * dvz
        grad[c, 0] -= pref * (dux + dvx)
        grad[c, 1] -= pref * (duy + dvy)
        grad[c, 2] -= pref * (duz + dvz)

    for t in range(pair_a.shape[0]):
        a = pair_a[t]
        b = pair_b[t]
        dx = coords[a, 0] - coords[b, 0]
        dy = coords[a, 1] - coords[b, 1]
        dz = coords[a, 2] - coords[b, 2]
        dist = sqrt(dx * dx + dy * dy + dz * dz)
        if dist < sigma:
            gap = 1.0 - dist / sigma
            energy += repulsion_k * gap * gap
            coeff = -2.0 * repulsion_k * gap / sigma / dist
            grad[a, 0] += coeff * dx
            grad[a, 1] += coeff * dy
            grad[a, 2] += coeff * dz
            grad[b, 0] -= coeff * dx
            grad[b, 1] -= coeff * dy
            grad[b, 2] -= coeff * dz

    return energy, grad_arr
