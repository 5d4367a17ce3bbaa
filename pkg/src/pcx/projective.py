"""Homogeneous-coordinate arithmetic in P(C^{d+1}) and its dual.

Points, hyperplane functionals, lines and projective maps, plus the
log-ratio kernel that underlies the Hilbert metric.  All objects are
immutable values; every operation is pure.
"""

from __future__ import annotations

import numpy as np

from . import tolerances as tol
from .errors import DegeneratePair, LineInHyperplane, NearKernel


def _normalize_rep(vec):
    """Unit-norm representative with first nonzero coordinate real positive.

    The phase convention makes the stored representative a deterministic
    function of the ray, so equality tests and caching behave.
    """
    v = np.asarray(vec, dtype=complex).ravel()
    n = np.linalg.norm(v)
    if n == 0 or not np.isfinite(n):
        raise ValueError("homogeneous vector must be nonzero and finite")
    v = v / n
    # after unit normalization the largest coordinate is >= 1/sqrt(len),
    # so this threshold cannot skip every index
    idx = int(np.argmax(np.abs(v) > 1e-12))
    pivot = v[idx]
    v = v * (np.conj(pivot) / abs(pivot))
    v.flags.writeable = False
    return v


class ProjectivePoint:
    """A point of P(C^{d+1}) stored as a normalized homogeneous vector."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        object.__setattr__(self, "coords", _normalize_rep(coords))

    def __setattr__(self, name, value):
        raise AttributeError("ProjectivePoint is immutable")

    @property
    def dim(self) -> int:
        """Dimension d of the ambient projective space P(C^{d+1})."""
        return self.coords.size - 1

    def isclose(self, other: "ProjectivePoint", eps: float = tol.EPS_POINT) -> bool:
        return abs(np.vdot(self.coords, other.coords)) >= 1.0 - eps

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return self.isclose(other)

    def __hash__(self):  # pragma: no cover - defensive
        raise TypeError("ProjectivePoint equality is approximate; not hashable")

    def chart(self, index: int = 0) -> np.ndarray:
        """Affine coordinates obtained by dividing out coordinate `index`."""
        pivot = self.coords[index]
        if abs(pivot) < tol.EPS_EVAL:
            from .errors import OutsideChart

            raise OutsideChart(f"coordinate {index} vanishes")
        out = np.delete(self.coords, index) / pivot
        return out

    def __repr__(self):
        entries = ":".join(f"{c:.4g}" for c in self.coords)
        return f"[{entries}]"


def point_distance(p: ProjectivePoint, q: ProjectivePoint) -> float:
    """Chordal (Fubini-Study sine) distance between projective points.

    Chart-free and bounded by 1, which keeps convergence diagnostics
    meaningful when an attractor sits on a chart's hyperplane at infinity.
    """
    c = abs(np.vdot(p.coords, q.coords))
    return float(np.sqrt(max(0.0, 1.0 - min(1.0, c) ** 2)))


class DualFunctional:
    """A hyperplane functional on C^{d+1}, stored with unit-norm coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        object.__setattr__(self, "coeffs", _normalize_rep(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("DualFunctional is immutable")

    @property
    def dim(self) -> int:
        return self.coeffs.size - 1

    def __call__(self, p: ProjectivePoint) -> complex:
        return complex(np.dot(self.coeffs, p.coords))

    def kernel_basis(self) -> np.ndarray:
        """Orthonormal basis (columns) of the hyperplane ker f."""
        n = self.coeffs.size
        # complete conj(coeffs) to an orthonormal basis; drop the first column
        q, _ = np.linalg.qr(
            np.column_stack([np.conj(self.coeffs), np.eye(n)[:, : n - 1]])
        )
        return q[:, 1:]

    def __repr__(self):
        entries = ", ".join(f"{c:.4g}" for c in self.coeffs)
        return f"<functional ({entries})>"


class ProjectiveLine:
    """A complex projective line spanned by two distinct points.

    The affine chart is t -> [p + t*q] with the basis representatives.
    """

    __slots__ = ("p", "q")

    def __init__(self, p: ProjectivePoint, q: ProjectivePoint):
        if p.isclose(q):
            raise DegeneratePair("line basis points coincide")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    def __setattr__(self, name, value):
        raise AttributeError("ProjectiveLine is immutable")

    def at(self, t: complex) -> ProjectivePoint:
        """Chart point [p + t*q]; t = inf is the basis point q itself."""
        if np.isinf(t):
            return self.q
        return ProjectivePoint(self.p.coords + t * self.q.coords)

    def contains(self, x: ProjectivePoint, eps: float = tol.EPS_POINT) -> bool:
        basis = np.column_stack([self.p.coords, self.q.coords])
        # residual of projecting x onto span{p, q}
        coef, *_ = np.linalg.lstsq(basis, x.coords, rcond=None)
        resid = np.linalg.norm(x.coords - basis @ coef)
        return resid < np.sqrt(eps)

    def coordinate_of(self, x: ProjectivePoint) -> complex:
        """Chart coordinate t with [p + t*q] = x (inf for x = q)."""
        basis = np.column_stack([self.p.coords, self.q.coords])
        coef, *_ = np.linalg.lstsq(basis, x.coords, rcond=None)
        a, b = coef
        if abs(a) < tol.EPS_EVAL * abs(b):
            return complex(np.inf)
        return complex(b / a)


def line_through(p: ProjectivePoint, q: ProjectivePoint) -> ProjectiveLine:
    """The unique complex projective line through two distinct points."""
    return ProjectiveLine(p, q)


class ProjectiveMap:
    """An invertible map of P(C^{d+1}), stored with |det| = 1."""

    __slots__ = ("matrix",)

    def __init__(self, matrix):
        m = np.array(matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("matrix must be square")
        det = np.linalg.det(m)
        if abs(det) < 1e-300:
            raise ValueError("matrix must be invertible")
        m = m / abs(det) ** (1.0 / m.shape[0])
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    def __setattr__(self, name, value):
        raise AttributeError("ProjectiveMap is immutable")

    @property
    def dim(self) -> int:
        return self.matrix.shape[0] - 1

    def __call__(self, p: ProjectivePoint) -> ProjectivePoint:
        return ProjectivePoint(self.matrix @ p.coords)

    def __matmul__(self, other: "ProjectiveMap") -> "ProjectiveMap":
        return ProjectiveMap(self.matrix @ other.matrix)

    def inverse(self) -> "ProjectiveMap":
        return ProjectiveMap(np.linalg.inv(self.matrix))

    def transpose(self) -> "ProjectiveMap":
        return ProjectiveMap(self.matrix.T)

    def on_functional(self, f: DualFunctional) -> DualFunctional:
        """Pullback action: (transpose . f)(v) = f(map v)."""
        return DualFunctional(self.matrix.T @ f.coeffs)

    def __repr__(self):
        return f"ProjectiveMap({self.matrix!r})"


def apply(phi: ProjectiveMap, p: ProjectivePoint) -> ProjectivePoint:
    return phi(p)


def transpose(phi: ProjectiveMap) -> ProjectiveMap:
    return phi.transpose()


def log_ratio(
    f: DualFunctional,
    g: DualFunctional,
    v: ProjectivePoint,
    w: ProjectivePoint,
    eps_eval: float = tol.EPS_EVAL,
) -> float:
    """log(|f(v) g(w)| / (|f(w) g(v)|)) in nats.

    Antisymmetric under v <-> w and invariant under rescaling any
    argument (the stored representatives are normalized).  Raises
    NearKernel when any of the four evaluations is numerically on a
    hyperplane.
    """
    fv, fw, gv, gw = abs(f(v)), abs(f(w)), abs(g(v)), abs(g(w))
    if min(fv, fw, gv, gw) < eps_eval:
        raise NearKernel("functional evaluation below eps_eval")
    return (np.log(fv) + np.log(gw)) - (np.log(fw) + np.log(gv))


def intersect_line_hyperplane(line: ProjectiveLine, f: DualFunctional) -> ProjectivePoint:
    """The intersection point of a line with the hyperplane ker f.

    Solves f(a*p + b*q) = 0; the solution [a : b] = [f(q) : -f(p)] always
    exists unless the line lies inside the hyperplane.
    """
    fp, fq = f(line.p), f(line.q)
    if abs(fp) < tol.EPS_EVAL and abs(fq) < tol.EPS_EVAL:
        raise LineInHyperplane("both basis points annihilated")
    return ProjectivePoint(fq * line.p.coords - fp * line.q.coords)
