"""Truncated power series with complex coefficients.

A :class:`PowerSeries` holds ``c_0 .. c_N`` for ``sum c_n z**n``; the
truncation degree ``N`` is :attr:`PowerSeries.order`.  Binary operations
between series of different orders truncate to the smaller order.  Instances
are immutable (the coefficient array is read-only), so they can be shared
freely.

    >>> z = PowerSeries.monomial(1, order=4)
    >>> (z * z).coeffs.real
    array([0., 0., 1., 0., 0.])
"""

from __future__ import annotations

import numpy as np

from . import _kernels

DEFAULT_ORDER = 64


class PowerSeries:
    __slots__ = ("_c",)

    def __init__(self, coeffs):
        c = np.array(coeffs, dtype=np.complex128).ravel()
        if c.size == 0:
            raise ValueError("empty power series")
        c.setflags(write=False)
        self._c = c

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, order=DEFAULT_ORDER):
        return cls(np.zeros(order + 1))

    @classmethod
    def one(cls, order=DEFAULT_ORDER):
        return cls.monomial(0, order)

    @classmethod
    def monomial(cls, degree, order=DEFAULT_ORDER, coeff=1.0):
        c = np.zeros(order + 1, dtype=np.complex128)
        if degree <= order:
            c[degree] = coeff
        return cls(c)

    @classmethod
    def geometric(cls, order=DEFAULT_ORDER, ratio=1.0):
        """``1/(1 - ratio*z)`` truncated at ``order``."""
        return cls(np.asarray(ratio, dtype=np.complex128) ** np.arange(order + 1))

    # -- basic protocol -------------------------------------------------

    @property
    def coeffs(self):
        return self._c

    @property
    def order(self):
        return self._c.size - 1

    def __len__(self):
        return self._c.size

    def __getitem__(self, n):
        return self._c[n]

    def __repr__(self):
        return f"PowerSeries(order={self.order}, coeffs={np.array2string(self._c[:6], precision=6)}...)"

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.order == other.order and np.array_equal(self._c, other._c)

    __hash__ = None

    def truncate(self, order):
        if order > self.order:
            return PowerSeries(np.concatenate([self._c, np.zeros(order - self.order)]))
        return PowerSeries(self._c[: order + 1])

    def allclose(self, other, rtol=1e-13, atol=1e-15):
        n = min(self.order, other.order) + 1
        return np.allclose(self._c[:n], other._c[:n], rtol=rtol, atol=atol)

    # -- arithmetic -----------------------------------------------------

    def _pair(self, other):
        if not isinstance(other, PowerSeries):
            other = PowerSeries.monomial(0, self.order, other)
        n = min(self.order, other.order) + 1
        return self._c[:n], other._c[:n]

    def __add__(self, other):
        a, b = self._pair(other)
        return PowerSeries(a + b)

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._pair(other)
        return PowerSeries(a - b)

    def __rsub__(self, other):
        a, b = self._pair(other)
        return PowerSeries(b - a)

    def __neg__(self):
        return PowerSeries(-self._c)

    def __mul__(self, other):
        if np.isscalar(other):
            return self.scale(other)
        a, b = self._pair(other)
        return PowerSeries(_kernels.cauchy(a, b, a.size))

    def __rmul__(self, other):
        return self.__mul__(other)

    def scale(self, lam):
        return PowerSeries(lam * self._c)

    def mul_z(self, k=1):
        """Multiply by ``z**k`` keeping the order (top terms fall off)."""
        c = np.zeros_like(self._c)
        c[k:] = self._c[: self._c.size - k]
        return PowerSeries(c)

    # -- calculus -------------------------------------------------------

    def derive(self):
        """Term-by-term derivative; the order drops by one."""
        if self.order == 0:
            return PowerSeries([0.0])
        n = np.arange(1, self._c.size)
        return PowerSeries(n * self._c[1:])

    def integrate0(self):
        """Antiderivative vanishing at 0; exact, so the order grows by one."""
        c = np.zeros(self._c.size + 1, dtype=np.complex128)
        c[1:] = self._c / np.arange(1, self._c.size + 1)
        return PowerSeries(c)

    def __call__(self, z):
        return self.eval(z)

    def eval(self, z):
        """Horner evaluation of the truncated polynomial.

        The caller is responsible for choosing ``z`` inside the region where
        the truncation is reliable.
        """
        if np.ndim(z) == 0:
            return complex(_kernels.horner(self._c, np.array([z]))[0])
        return _kernels.horner(self._c, z)


def series_exp(a):
    """``exp(a)`` for a series with zero constant term (recurrence E' = a'E)."""
    if a.coeffs[0] != 0:
        raise ValueError("exp requires zero constant term")
    return PowerSeries(_kernels.exp_recurrence(a.coeffs))


def reciprocal(a):
    """``1/a`` for a series with nonzero constant term."""
    c = a.coeffs
    if c[0] == 0:
        raise ZeroDivisionError("reciprocal requires nonzero constant term")
    out = np.zeros_like(c)
    out[0] = 1.0 / c[0]
    for n in range(1, c.size):
        out[n] = -np.dot(c[1 : n + 1], out[n - 1 :: -1][:n]) / c[0]
    return PowerSeries(out)


def integrate_log_kernel(psi):
    """``int_0^z (psi(t) - 1)/t dt`` as a series, for psi(0) = 1."""
    c = psi.coeffs
    if abs(c[0] - 1.0) > 1e-12:
        raise ValueError("ψ must be normalized ψ(0)=1")
    out = np.zeros_like(c)
    n = np.arange(1, c.size)
    out[1:] = c[1:] / n
    return PowerSeries(out)


def hadamard(a, b):
    """Coefficientwise (Hadamard) product."""
    x, y = a._pair(b)
    return PowerSeries(x * y)


def bernardi_transform(a, nu):
    """Bernardi operator ``(nu+1) z**-nu int_0^z t**(nu-1) a(t) dt``.

    Acts on coefficients as ``c_n -> c_n (nu+1)/(n+nu)``.
    """
    if nu < 0:
        raise ValueError(f"Bernardi parameter must be nonnegative, got {nu}")
    c = a.coeffs
    if c[0] != 0:
        raise ValueError("Bernardi transform requires zero constant term")
    out = np.zeros_like(c)
    n = np.arange(1, c.size)
    out[1:] = c[1:] * (nu + 1.0) / (n + nu)
    return PowerSeries(out)
