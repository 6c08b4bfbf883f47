# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernel core.

Mirrors ``_pylib`` function for function; see that module for the semantic
contracts. Loops are written sample-major so the arrays stream through
cache once per sweep.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport pow, tanh

cnp.import_array()

BACKEND_NAME = "compiled"


def sq_dists(double[:, ::1] X, double[:, ::1] V):
    cdef Py_ssize_t n = X.shape[0], d = X.shape[1], c = V.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=2] out = np.empty((c, n))
    cdef double[:, ::1] D2 = out
    cdef Py_ssize_t i, j, k
    cdef double acc, diff
    for i in range(c):
        for j in range(n):
            acc = 0.0
            for k in range(d):
                diff = X[j, k] - V[i, k]
                acc += diff * diff
            D2[i, j] = acc
    return out


def memberships_from_sq_dists(double[:, ::1] D2, double m):
    cdef Py_ssize_t c = D2.shape[0], n = D2.shape[1]
    cdef cnp.ndarray[cnp.float64_t, ndim=2] out = np.zeros((c, n))
    cdef double[:, ::1] U = out
    cdef double power = 1.0 / (m - 1.0)
    cdef Py_ssize_t i, j, k, zeros
    cdef double denom, total
    for j in range(n):
        zeros = 0
        for i in range(c):
            if D2[i, j] == 0.0:
                zeros += 1
        if zeros > 0:
            for i in range(c):
                U[i, j] = (1.0 / zeros) if D2[i, j] == 0.0 else 0.0
            continue
        total = 0.0
        for i in range(c):
            denom = 0.0
            for k in range(c):
                denom += pow(D2[i, j] / D2[k, j], power)
            U[i, j] = 1.0 / denom
            total += U[i, j]
        for i in range(c):
            U[i, j] /= total
    return out


def weighted_centers(double[:, ::1] U, double[:, ::1] X, double m):
    cdef Py_ssize_t c = U.shape[0], n = U.shape[1], d = X.shape[1]
    cdef cnp.ndarray[cnp.float64_t, ndim=2] out = np.zeros((c, d))
    cdef double[:, ::1] V = out
    cdef Py_ssize_t i, j, k
    cdef double w, mass
    for i in range(c):
        mass = 0.0
        for j in range(n):
            w = pow(U[i, j], m)
            mass += w
            for k in range(d):
                V[i, k] += w * X[j, k]
        for k in range(d):
            V[i, k] /= mass
    return out


def fcm_objective(double[:, ::1] U, double[:, ::1] D2, double m):
    cdef Py_ssize_t c = U.shape[0], n = U.shape[1]
    cdef Py_ssize_t i, j
    cdef double acc = 0.0
    for i in range(c):
        for j in range(n):
            acc += pow(U[i, j], m) * D2[i, j]
    return acc


def mlp_forward(double[:, ::1] X, double[:, ::1] W1, double[::1] b1,
                double[:, ::1] W2, double[::1] b2):
    cdef Py_ssize_t n = X.shape[0], d = X.shape[1]
    cdef Py_ssize_t h = W1.shape[0], o = W2.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=2] a1_arr = np.empty((n, h))
    cdef cnp.ndarray[cnp.float64_t, ndim=2] y_arr = np.empty((n, o))
    cdef double[:, ::1] A1 = a1_arr
    cdef double[:, ::1] Y = y_arr
    cdef Py_ssize_t s, i, j
    cdef double acc
    for s in range(n):
        for j in range(h):
            acc = b1[j]
            for i in range(d):
                acc += W1[j, i] * X[s, i]
            A1[s, j] = tanh(acc)
        for i in range(o):
            acc = b2[i]
            for j in range(h):
                acc += W2[i, j] * A1[s, j]
            Y[s, i] = acc
    return a1_arr, y_arr


def mlp_residual_jacobian(double[:, ::1] X, double[:, ::1] T,
                          double[:, ::1] W1, double[::1] b1,
                          double[:, ::1] W2, double[::1] b2):
    cdef Py_ssize_t n = X.shape[0], d = X.shape[1]
    cdef Py_ssize_t h = W1.shape[0], o = W2.shape[0]
    cdef Py_ssize_t p = h * d + h + o * h + o
    cdef Py_ssize_t off_b1 = h * d, off_w2 = h * d + h, off_b2 = h * d + h + o * h

    a1_arr, y_arr = mlp_forward(X, W1, b1, W2, b2)
    cdef double[:, ::1] A1 = a1_arr
    cdef double[:, ::1] Y = y_arr

    cdef cnp.ndarray[cnp.float64_t, ndim=1] e_arr = np.empty(n * o)
    cdef cnp.ndarray[cnp.float64_t, ndim=2] j_arr = np.zeros((n * o, p))
    cdef double[::1] e = e_arr
    cdef double[:, ::1] J = j_arr
    cdef Py_ssize_t s, k, j, i, r
    cdef double sj, g

    for s in range(n):
        for k in range(o):
            r = s * o + k
            e[r] = T[s, k] - Y[s, k]
            for j in range(h):
                sj = 1.0 - A1[s, j] * A1[s, j]
                g = -W2[k, j] * sj
                for i in range(d):
                    J[r, j * d + i] = g * X[s, i]
                J[r, off_b1 + j] = g
                J[r, off_w2 + k * h + j] = -A1[s, j]
            J[r, off_b2 + k] = -1.0
    return e_arr, j_arr
