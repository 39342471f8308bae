"""Truncated complex power series with a batch dimension.

A ``Jet`` stores the coefficients ``c[0..K-1]`` of a series in a local
parameter; ``coeffs`` has shape ``(K, *batch)`` so one jet can carry the
Taylor data of many lattice points at once. Arithmetic is exact truncated
power-series arithmetic and broadcasts over the batch axes.
"""

import numpy as np


class Jet:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        c = np.array(coeffs, dtype=complex)
        if c.ndim == 0 or c.shape[0] == 0:
            raise ValueError("a jet needs at least one coefficient")
        c.setflags(write=False)
        self.coeffs = c

    # construction
    @classmethod
    def constant(cls, value, order):
        value = np.asarray(value, dtype=complex)
        c = np.zeros((order + 1,) + value.shape, dtype=complex)
        c[0] = value
        return cls(c)

    @classmethod
    def variable(cls, center, order, power=1):
        """The jet of ``center + s**power``."""
        c = np.zeros(order + 1, dtype=complex)
        c[0] = center
        if power <= order:
            c[power] += 1
        return cls(c)

    @property
    def order(self):
        return self.coeffs.shape[0] - 1

    @property
    def batch_shape(self):
        return self.coeffs.shape[1:]

    def __len__(self):
        return self.coeffs.shape[0]

    def __repr__(self):
        return f"Jet(order={self.order}, batch={self.batch_shape})"

    def _coerce(self, other):
        if isinstance(other, Jet):
            K = min(len(self), len(other))
            return _align(self.coeffs[:K], other.coeffs[:K])
        other = np.asarray(other, dtype=complex)
        o = np.zeros((len(self),) + other.shape, dtype=complex)
        o[0] = other
        return _align(self.coeffs, o)

    # ring operations
    def __add__(self, other):
        a, b = self._coerce(other)
        return Jet(a + b)

    __radd__ = __add__

    def __neg__(self):
        return Jet(-self.coeffs)

    def __sub__(self, other):
        a, b = self._coerce(other)
        return Jet(a - b)

    def __rsub__(self, other):
        a, b = self._coerce(other)
        return Jet(b - a)

    def __mul__(self, other):
        if not isinstance(other, Jet):
            a, b = _align(self.coeffs, np.asarray(other, dtype=complex)[None])
            return Jet(a * b)
        a, b = self._coerce(other)
        return Jet(_cauchy(a, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, Jet):
            a, b = _align(self.coeffs, np.asarray(other, dtype=complex)[None])
            return Jet(a / b)
        a, b = self._coerce(other)
        return Jet(_divide(a, b))

    def __rtruediv__(self, other):
        a, b = self._coerce(other)
        return Jet(_divide(b, a))

    # elementary functions
    def exp(self):
        a = self.coeffs
        e = np.empty(np.broadcast_shapes(a.shape), dtype=complex)
        e[0] = np.exp(a[0])
        for k in range(1, len(a)):
            j = np.arange(1, k + 1).reshape((-1,) + (1,) * (a.ndim - 1))
            e[k] = np.sum(j * a[1:k + 1] * e[k - 1::-1][:k], axis=0) / k
        return Jet(e)

    def sinh(self):
        return (self.exp() - (-self).exp()) * 0.5

    def cosh(self):
        return (self.exp() + (-self).exp()) * 0.5

    def sqrt(self):
        """Principal square root; the leading coefficient must be nonzero."""
        a = self.coeffs
        if np.any(a[0] == 0):
            raise ZeroDivisionError("sqrt of a jet with zero leading coefficient")
        q = np.empty_like(a)
        q[0] = np.sqrt(a[0])
        for k in range(1, len(a)):
            acc = np.sum(q[1:k] * q[k - 1:0:-1], axis=0) if k > 1 else 0
            q[k] = (a[k] - acc) / (2 * q[0])
        return Jet(q)

    def log(self):
        a = self.coeffs
        if np.any(a[0] == 0):
            raise ZeroDivisionError("log of a jet with zero leading coefficient")
        out = np.empty_like(a)
        out[0] = np.log(a[0])
        for k in range(1, len(a)):
            j = np.arange(1, k).reshape((-1,) + (1,) * (a.ndim - 1))
            acc = np.sum(j * out[1:k] * a[k - 1:0:-1], axis=0) / k if k > 1 else 0
            out[k] = (a[k] - acc) / a[0]
        return Jet(out)

    def arcsinh(self):
        return (self + (self * self + 1).sqrt()).log()

    # parameter shifts
    def shift_down(self, k=1, tol=None):
        """Divide by ``s**k``; the first ``k`` coefficients are dropped.

        With ``tol`` set, raise ``ZeroDivisionError`` if a dropped
        coefficient exceeds ``tol`` times the largest kept one.
        """
        if k >= len(self):
            raise ValueError("shift exceeds the jet order")
        if tol is not None:
            dropped = np.max(np.abs(self.coeffs[:k]), axis=0)
            kept = np.max(np.abs(self.coeffs[k:]), axis=0)
            if np.any(dropped > tol * np.maximum(kept, 1e-300)):
                raise ZeroDivisionError("jet does not vanish to the requested order")
        return Jet(self.coeffs[k:])

    def shift_up(self, k=1):
        """Multiply by ``s**k`` keeping the same number of coefficients."""
        c = np.zeros_like(self.coeffs)
        c[k:] = self.coeffs[:len(self) - k]
        return Jet(c)

    def truncate(self, order):
        return Jet(self.coeffs[:order + 1])

    def even_part(self):
        """Coefficients of even powers, i.e. the series in ``s**2``."""
        return self.coeffs[0::2]


def _align(a, b):
    """Pad batch axes on the left so the arrays broadcast batch-wise."""
    nd = max(a.ndim, b.ndim)
    a = a.reshape(a.shape[:1] + (1,) * (nd - a.ndim) + a.shape[1:])
    b = b.reshape(b.shape[:1] + (1,) * (nd - b.ndim) + b.shape[1:])
    return a, b


def _cauchy(a, b):
    K = a.shape[0]
    shape = np.broadcast_shapes(a.shape[1:], b.shape[1:])
    c = np.zeros((K,) + shape, dtype=complex)
    for k in range(K):
        c[k] = np.sum(a[:k + 1] * b[k::-1], axis=0)
    return c


def _divide(a, b):
    K = a.shape[0]
    if np.any(b[0] == 0):
        raise ZeroDivisionError("division by a jet with zero leading coefficient")
    shape = np.broadcast_shapes(a.shape[1:], b.shape[1:])
    c = np.zeros((K,) + shape, dtype=complex)
    for k in range(K):
        acc = np.sum(b[1:k + 1] * c[k - 1::-1][:k], axis=0) if k else 0
        c[k] = (a[k] - acc) / b[0]
    return c
