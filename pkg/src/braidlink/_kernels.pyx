# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the hot numerical kernels.

Mirrors ``braidlink._kernels_py`` function for function; see that module for
the contracts.  Accumulation is in plain index order.
"""

import numpy as np

cimport cython
from libc.math cimport atan2

cdef double TWO_PI = 6.283185307179586476925287


def turn_fractions(const double complex[::1] gamma, double complex pole):
    cdef Py_ssize_t n = gamma.shape[0] - 1
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] o = out
    cdef Py_ssize_t k
    cdef double ure, uim, vre, vim, cre, cim
    for k in range(n):
        ure = gamma[k].real - pole.real
        uim = gamma[k].imag - pole.imag
        vre = gamma[k + 1].real - pole.real
        vim = gamma[k + 1].imag - pole.imag
        # arg(v * conj(u))
        cre = vre * ure + vim * uim
        cim = vim * ure - vre * uim
        o[k] = atan2(cim, cre) / TWO_PI
    return out


def gl_turn_sweep(const double complex[::1] gamma, double complex pole,
                  const double[::1] nodes, const double[::1] weights):
    cdef Py_ssize_t m = gamma.shape[0] - 1
    cdef Py_ssize_t q = nodes.shape[0]
    cdef Py_ssize_t k, j
    cdef double total = 0.0
    cdef double ure, uim, dre, dim, zre, zim, denom
    for k in range(m):
        ure = gamma[k].real - pole.real
        uim = gamma[k].imag - pole.imag
        dre = gamma[k + 1].real - gamma[k].real
        dim = gamma[k + 1].imag - gamma[k].imag
        for j in range(q):
            zre = ure + nodes[j] * dre
            zim = uim + nodes[j] * dim
            denom = zre * zre + zim * zim
            total += weights[j] * (dim * zre - dre * zim) / denom
    return total / TWO_PI


def gl_pair_sweep(const double complex[::1] gamma,
                  const double[::1] lam0, const double[::1] lam1,
                  const double[::1] nodes, const double[::1] weights):
    cdef Py_ssize_t m = gamma.shape[0] - 1
    cdef Py_ssize_t q = nodes.shape[0]
    cdef Py_ssize_t k, j
    cdef double a_total = 0.0
    cdef double b_total = 0.0
    cdef double gre, gim, dre, dim
    cdef double u0re, u0im, u1re, u1im
    cdef double z0re, z0im, z1re, z1im
    cdef double l0, l1, f0, f1, cre, cim
    for k in range(m):
        gre = gamma[k].real
        gim = gamma[k].imag
        dre = gamma[k + 1].real - gre
        dim = gamma[k + 1].imag - gim
        u0re = gre
        u0im = gim
        u1re = gre - 1.0
        u1im = gim
        for j in range(q):
            z0re = gre + nodes[j] * dre
            z0im = gim + nodes[j] * dim
            z1re = z0re - 1.0
            z1im = z0im
            # lam0 at the node: start value plus principal increment about 0
            cre = z0re * u0re + z0im * u0im
            cim = z0im * u0re - z0re * u0im
            l0 = lam0[k] + atan2(cim, cre) / TWO_PI
            # lam1 at the node, about 1
            cre = z1re * u1re + z1im * u1im
            cim = z1im * u1re - z1re * u1im
            l1 = lam1[k] + atan2(cim, cre) / TWO_PI
            f1 = (dim * z1re - dre * z1im) / (z1re * z1re + z1im * z1im)
            f0 = (dim * z0re - dre * z0im) / (z0re * z0re + z0im * z0im)
            a_total += weights[j] * l0 * f1
            b_total += weights[j] * l1 * f0
    return a_total / TWO_PI, b_total / TWO_PI
