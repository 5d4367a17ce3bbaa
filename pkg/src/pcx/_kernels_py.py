"""Pure-numpy implementations of the hot kernels.

Same contracts as the compiled backend in ``_kernels_cy``; selection happens
in :mod:`pcx.kernels`.  Batched golden-section refinement is vectorized over
problems so large midpoint grids stay cheap without compilation.
"""

from __future__ import annotations

import numpy as np

_INVPHI = (np.sqrt(5.0) - 1.0) / 2.0
_CHUNK = 4096


def winding_numbers(pts, poly):
    """Crossing-number parity for each point against a closed polygon.

    Returns an int8 array: 1 inside, 0 outside.  Points exactly on an edge
    are resolved arbitrarily at float precision.
    """
    pts = np.asarray(pts, dtype=complex).ravel()
    poly = np.asarray(poly, dtype=complex).ravel()
    ax, ay = poly.real, poly.imag
    bx, by = np.roll(poly.real, -1), np.roll(poly.imag, -1)
    dy = by - ay
    safe_dy = np.where(dy == 0.0, 1.0, dy)
    out = np.empty(pts.size, dtype=np.int8)
    for lo in range(0, pts.size, _CHUNK):
        hi = min(lo + _CHUNK, pts.size)
        x = pts.real[lo:hi, None]
        y = pts.imag[lo:hi, None]
        straddles = (ay[None, :] > y) != (by[None, :] > y)
        xint = ax[None, :] + (y - ay[None, :]) * (bx - ax)[None, :] / safe_dy[None, :]
        crossings = np.sum(straddles & (x < xint), axis=1)
        out[lo:hi] = (crossings % 2).astype(np.int8)
    return out


def _hermite(b0, b1, m0, m1, s):
    """Cubic Hermite arc value at s in [0, 1] (endpoint derivatives m0, m1)."""
    s2 = s * s
    s3 = s2 * s
    return (
        (2.0 * s3 - 3.0 * s2 + 1.0) * b0
        + (s3 - 2.0 * s2 + s) * m0
        + (-2.0 * s3 + 3.0 * s2) * b1
        + (s3 - s2) * m1
    )


def _objective(z, w, b):
    return np.log(np.abs(z - b)) - np.log(np.abs(w - b))


def _golden_max(z, w, b0, b1, m0, m1, iters):
    """Vectorized golden-section maximum of the log-ratio along Hermite arcs.

    All arguments are 1-D arrays of equal length (one arc per entry).
    Returns (values, arc points).
    """
    a = np.zeros_like(b0, dtype=float)
    b = np.ones_like(b0, dtype=float)
    x1 = b - _INVPHI * (b - a)
    x2 = a + _INVPHI * (b - a)
    f1 = _objective(z, w, _hermite(b0, b1, m0, m1, x1))
    f2 = _objective(z, w, _hermite(b0, b1, m0, m1, x2))
    for _ in range(iters):
        take1 = f1 >= f2
        b = np.where(take1, x2, b)
        a = np.where(take1, a, x1)
        x1_old, x2_old = x1, x2
        f1_old, f2_old = f1, f2
        x1 = np.where(take1, b - _INVPHI * (b - a), x2_old)
        x2 = np.where(take1, x1_old, a + _INVPHI * (b - a))
        probe = np.where(take1, x1, x2)
        fp = _objective(z, w, _hermite(b0, b1, m0, m1, probe))
        f1 = np.where(take1, fp, f2_old)
        f2 = np.where(take1, f1_old, fp)
    s = 0.5 * (a + b)
    pt = _hermite(b0, b1, m0, m1, s)
    return _objective(z, w, pt), pt


def apollonian_pair_sups(zs, ws, boundary, tangents, refine_iters, include_infinity):
    """One-sided Apollonian sups for a batch of point pairs.

    For each pair (z, w) computes ``sup_b log|z-b| - log|w-b|`` over the
    sampled boundary (plus the value 0 contributed by the point at infinity
    when requested), refined by golden section on the two Hermite arcs
    adjacent to the coarse argmax.  Also returns the swapped sup, so one
    call yields a full distance.

    Returns (sup_fwd, sup_bwd, err_fwd, err_bwd, b_fwd, b_bwd) where the
    err arrays hold the second-difference refinement-error estimates at the
    coarse argmax.
    """
    zs = np.asarray(zs, dtype=complex).ravel()
    ws = np.asarray(ws, dtype=complex).ravel()
    boundary = np.asarray(boundary, dtype=complex).ravel()
    tangents = np.asarray(tangents, dtype=complex).ravel()
    npairs = zs.size
    m = boundary.size
    step = 2.0 * np.pi / m
    deriv = tangents * step

    sup_f = np.empty(npairs)
    sup_b = np.empty(npairs)
    err_f = np.empty(npairs)
    err_b = np.empty(npairs)
    arg_f = np.empty(npairs, dtype=complex)
    arg_b = np.empty(npairs, dtype=complex)

    for lo in range(0, npairs, _CHUNK):
        hi = min(lo + _CHUNK, npairs)
        z = zs[lo:hi, None]
        w = ws[lo:hi, None]
        lz = np.log(np.abs(z - boundary[None, :]))
        lw = np.log(np.abs(w - boundary[None, :]))
        vals = lz - lw
        for sign in (1, -1):
            g = vals if sign == 1 else -vals
            k0 = np.argmax(g, axis=1)
            rows = np.arange(g.shape[0])
            coarse = g[rows, k0]
            km = (k0 - 1) % m
            kp = (k0 + 1) % m
            second = np.abs(g[rows, km] - 2.0 * coarse + g[rows, kp])

            zz = zs[lo:hi] if sign == 1 else ws[lo:hi]
            wwp = ws[lo:hi] if sign == 1 else zs[lo:hi]
            best = coarse.copy()
            bpt = boundary[k0]
            for ka, kb in ((km, k0), (k0, kp)):
                v, p = _golden_max(
                    zz,
                    wwp,
                    boundary[ka],
                    boundary[kb],
                    deriv[ka],
                    deriv[kb],
                    refine_iters,
                )
                better = v > best
                best = np.where(better, v, best)
                bpt = np.where(better, p, bpt)
            if include_infinity:
                at_inf = best < 0.0
                best = np.where(at_inf, 0.0, best)
                bpt = np.where(at_inf, np.inf + 0j, bpt)
            if sign == 1:
                sup_f[lo:hi] = best
                err_f[lo:hi] = second
                arg_f[lo:hi] = bpt
            else:
                sup_b[lo:hi] = best
                err_b[lo:hi] = second
                arg_b[lo:hi] = bpt
    return sup_f, sup_b, err_f, err_b, arg_f, arg_b
