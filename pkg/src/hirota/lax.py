"""Lax-pair matrices of the transformed lattice equation.

``psi(n+1) = X_n psi(n)`` and ``psi_t = T_n psi``, with ``X_n`` depending on
``v_n`` and ``T_n`` on ``v_n`` and ``v_{n-1}``. All functions broadcast over
arrays and put the 2x2 matrix in the last two axes.
"""

import numpy as np


def shift_matrix(z, v):
    """``X_n = [[z, v], [-conj(v), 1/z]]``."""
    z, v = np.broadcast_arrays(np.asarray(z, dtype=complex), np.asarray(v, dtype=complex))
    X = np.empty(z.shape + (2, 2), dtype=complex)
    X[..., 0, 0] = z
    X[..., 0, 1] = v
    X[..., 1, 0] = -np.conj(v)
    X[..., 1, 1] = 1 / z
    return X


def time_matrix(z, v, v_prev, p):
    """Time matrix ``T_n`` of the transformed Lax pair."""
    z, v, w = np.broadcast_arrays(*(np.asarray(x, dtype=complex) for x in (z, v, v_prev)))
    a, b, B, C = p.a, p.b, p.B, p.C
    eB = np.exp(1j * B)
    sq = (z * np.exp(0.5j * B) - np.exp(-0.5j * B) / z) ** 2
    T = np.empty(z.shape + (2, 2), dtype=complex)
    T[..., 0, 0] = (b - 1j * a) * v * np.conj(w) * eB - 0.5j * a * sq + b * z * z * eB - 0.5j * C
    T[..., 0, 1] = (b - 1j * a) * v * z * eB + (b + 1j * a) * w / (z * eB)
    T[..., 1, 0] = -(b + 1j * a) * np.conj(v) / (eB * z) - (b - 1j * a) * np.conj(w) * eB * z
    T[..., 1, 1] = (b + 1j * a) * np.conj(v) * w / eB + 0.5j * a * sq + b / (z * z * eB) + 0.5j * C
    return T


def background_time_matrix(z, p, delta=None):
    """Time matrix on the background ``v = A`` with its trace fixed.

    The traceless part is ``delta (X - (z + 1/z)/2)``. The trace is chosen so
    that the elementary solution carries the scalar factor
    ``exp(A^2 (a sin B + b cos B) t)``; scalar multiples of the identity do
    not affect compatibility.
    """
    z = np.asarray(z, dtype=complex)
    if delta is None:
        eB = np.exp(1j * p.B)
        delta = (p.b + 1j * p.a) / (eB * z) + (p.b - 1j * p.a) * z * eB
    X = shift_matrix(z, p.A)
    eye = np.eye(2)
    half = 0.5 * (z + 1 / z)
    return (np.asarray(delta)[..., None, None] * (X - half[..., None, None] * eye)
            + p.growth * eye)
