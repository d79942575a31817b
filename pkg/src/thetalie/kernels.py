"""Integer kernels for chamber reflection and the Freudenthal recursion.

Both kernels work on doubled coordinates (``int64``), which keeps the
arithmetic exact for the half-integral weights of F4, B4, D5 and A1.

Two implementations are provided for each kernel: a numba ``@njit`` version
and a vectorized numpy version.  ``THETALIE_NUMBA=0`` in the environment (or a
missing numba install) selects the numpy path at import time; both paths must
return identical arrays.
"""
from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and os.environ.get("THETALIE_NUMBA", "1").lower() not in ("0", "false", "no")


# --------------------------------------------------------------------------
# numpy path
# --------------------------------------------------------------------------

def dominant_batch_numpy(X, S, snorm):
    """Reflect every row of ``X`` into the dominant chamber.

    Parameters
    ----------
    X : ndarray of int64, shape (n, r)
        Doubled weight coordinates.  Weights must be integral.
    S : ndarray of int64, shape (s, r)
        Doubled simple roots.
    snorm : ndarray of int64, shape (s,)
        ``S[j] @ S[j]``.

    Returns
    -------
    D : ndarray of int64, shape (n, r)
    parity : ndarray of int64, shape (n,)
        Parity of the number of reflections applied to each row.
    """
    D = np.array(X, dtype=np.int64, copy=True)
    parity = np.zeros(D.shape[0], dtype=np.int64)
    if D.shape[0] == 0:
        return D, parity
    while True:
        P = D @ S.T
        neg = P < 0
        rows = np.flatnonzero(neg.any(axis=1))
        if rows.size == 0:
            return D, parity
        j = np.argmax(neg[rows], axis=1)
        c = (2 * P[rows, j]) // snorm[j]
        D[rows] -= c[:, None] * S[j]
        parity[rows] ^= 1


def _encode_numpy(D, bound):
    base = 2 * bound + 1
    powers = base ** np.arange(D.shape[1], dtype=np.int64)
    return (D + bound) @ powers


def freudenthal_numpy(dom, pos, S, snorm, rho):
    """Multiplicities of the dominant weights ``dom`` of an irreducible module.

    ``dom[0]`` must be the highest weight, and rows must be ordered so that
    ``(dom[i], rho)`` is nonincreasing.  All arrays are doubled coordinates.
    """
    d, r = dom.shape
    mult = np.zeros(d, dtype=np.int64)
    mult[0] = 1
    bound = int(np.abs(dom).max()) if d else 0
    keys = _encode_numpy(dom, bound)
    order = np.argsort(keys)
    sorted_keys = keys[order]
    top = dom[0] + rho
    top_norm = int(top @ top)
    # a weight of the module has norm <= |top|, so strings end before 4*bound
    kmax = 4 * bound + 2
    ks = np.arange(1, kmax + 1, dtype=np.int64)
    for i in range(1, d):
        mu = dom[i]
        cand = mu[None, None, :] + ks[:, None, None] * pos[None, :, :]
        flat = cand.reshape(-1, r)
        dots = (flat * np.tile(pos, (kmax, 1))).sum(axis=1)
        Dm, _ = dominant_batch_numpy(flat, S, snorm)
        inside = (np.abs(Dm) <= bound).all(axis=1)
        ck = _encode_numpy(np.clip(Dm, -bound, bound), bound)
        idx = np.searchsorted(sorted_keys, ck)
        idx = np.minimum(idx, d - 1)
        found = inside & (sorted_keys[idx] == ck)
        found = found.reshape(kmax, -1)
        alive = np.logical_and.accumulate(found, axis=0).reshape(-1)
        contrib = np.where(alive, mult[order[idx]] * dots, 0)
        acc = int(contrib.sum())
        shifted = mu + rho
        denom = top_norm - int(shifted @ shifted)
        num = 2 * acc
        if denom <= 0 or num % denom:
            raise ArithmeticError("Freudenthal recursion produced a non-integer multiplicity")
        mult[i] = num // denom
    return mult


def orbit_numpy(w, S, snorm):
    """Weyl orbit of the integral doubled weight ``w``.

    Rows come in discovery order, which differs between the two paths; treat
    the result as a set.
    """
    r = w.shape[0]
    bound = int(np.sqrt(float(w @ w))) + 1
    seen = {int(_encode_numpy(w[None, :], bound)[0])}
    frontier = w[None, :].astype(np.int64)
    found = [frontier]
    while frontier.shape[0]:
        P = frontier @ S.T
        c = (2 * P) // snorm[None, :]
        imgs = frontier[:, None, :] - c[:, :, None] * S[None, :, :]
        imgs = imgs.reshape(-1, r)
        keys = _encode_numpy(imgs, bound)
        keys, first = np.unique(keys, return_index=True)
        fresh = [i for k, i in zip(keys.tolist(), first.tolist()) if k not in seen]
        seen.update(keys.tolist())
        frontier = imgs[fresh]
        if frontier.shape[0]:
            found.append(frontier)
    return np.concatenate(found)


# --------------------------------------------------------------------------
# numba path
# --------------------------------------------------------------------------

if HAVE_NUMBA:

    @njit(cache=True)
    def _dominant_row(x, S, snorm):
        s, r = S.shape
        parity = 0
        while True:
            moved = False
            for j in range(s):
                p = 0
                for t in range(r):
                    p += x[t] * S[j, t]
                if p < 0:
                    c = (2 * p) // snorm[j]
                    for t in range(r):
                        x[t] -= c * S[j, t]
                    parity ^= 1
                    moved = True
                    break
            if not moved:
                return parity

    @njit(cache=True)
    def dominant_batch_numba(X, S, snorm):
        n, r = X.shape
        D = X.copy()
        parity = np.zeros(n, dtype=np.int64)
        for i in range(n):
            parity[i] = _dominant_row(D[i], S, snorm)
        return D, parity

    @njit(cache=True)
    def _encode_row(x, bound):
        base = 2 * bound + 1
        key = 0
        p = 1
        for t in range(x.shape[0]):
            key += (x[t] + bound) * p
            p *= base
        return key

    @njit(cache=True)
    def orbit_numba(w, S, snorm):
        r = w.shape[0]
        s = S.shape[0]
        bound = int(np.sqrt(float(np.sum(w * w)))) + 1
        cap = 64
        out = np.empty((cap, r), dtype=np.int64)
        out[0] = w
        n = 1
        head = 0
        seen = {_encode_row(w, bound)}
        y = np.empty(r, dtype=np.int64)
        while head < n:
            for j in range(s):
                p = 0
                for t in range(r):
                    p += out[head, t] * S[j, t]
                if p == 0:
                    continue
                c = (2 * p) // snorm[j]
                for t in range(r):
                    y[t] = out[head, t] - c * S[j, t]
                key = _encode_row(y, bound)
                if key in seen:
                    continue
                seen.add(key)
                if n == cap:
                    bigger = np.empty((2 * cap, r), dtype=np.int64)
                    bigger[:cap] = out
                    out = bigger
                    cap *= 2
                out[n] = y
                n += 1
            head += 1
        return out[:n].copy()

    @njit(cache=True)
    def freudenthal_numba(dom, pos, S, snorm, rho):
        d, r = dom.shape
        npos = pos.shape[0]
        mult = np.zeros(d, dtype=np.int64)
        mult[0] = 1
        bound = 0
        for i in range(d):
            for t in range(r):
                if abs(dom[i, t]) > bound:
                    bound = abs(dom[i, t])
        keys = np.empty(d, dtype=np.int64)
        for i in range(d):
            keys[i] = _encode_row(dom[i], bound)
        order = np.argsort(keys)
        sorted_keys = keys[order]
        top_norm = 0
        for t in range(r):
            top_norm += (dom[0, t] + rho[t]) ** 2
        w = np.empty(r, dtype=np.int64)
        for i in range(1, d):
            acc = 0
            for a in range(npos):
                k = 1
                while True:
                    inside = True
                    dt = 0
                    for t in range(r):
                        w[t] = dom[i, t] + k * pos[a, t]
                        dt += w[t] * pos[a, t]
                    _dominant_row(w, S, snorm)
                    for t in range(r):
                        if abs(w[t]) > bound:
                            inside = False
                    if not inside:
                        break
                    key = _encode_row(w, bound)
                    j = np.searchsorted(sorted_keys, key)
                    if j >= d or sorted_keys[j] != key:
                        break
                    acc += mult[order[j]] * dt
                    k += 1
            sn = 0
            for t in range(r):
                sn += (dom[i, t] + rho[t]) ** 2
            denom = top_norm - sn
            num = 2 * acc
            if denom <= 0 or num % denom != 0:
                raise ArithmeticError("Freudenthal recursion produced a non-integer multiplicity")
            mult[i] = num // denom
        return mult


def dominant_batch(X, S, snorm):
    if USE_NUMBA:
        return dominant_batch_numba(np.ascontiguousarray(X, dtype=np.int64), S, snorm)
    return dominant_batch_numpy(X, S, snorm)


def freudenthal(dom, pos, S, snorm, rho):
    if USE_NUMBA:
        return freudenthal_numba(np.ascontiguousarray(dom, dtype=np.int64), pos, S, snorm, rho)
    return freudenthal_numpy(dom, pos, S, snorm, rho)


def orbit(w, S, snorm):
    if USE_NUMBA:
        return orbit_numba(np.ascontiguousarray(w, dtype=np.int64), S, snorm)
    return orbit_numpy(np.asarray(w, dtype=np.int64), S, snorm)


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"


def warmup() -> None:
    """Compile (or load from cache) the numba kernels on a tiny input."""
    # A1 with simple root (2,), doubled; adjoint module (weights 2, 0, -2)
    S = np.array([[4]], dtype=np.int64)
    snorm = np.array([16], dtype=np.int64)
    dominant_batch(np.array([[-4]], dtype=np.int64), S, snorm)
    orbit(np.array([4], dtype=np.int64), S, snorm)
    freudenthal(np.array([[4], [0]], dtype=np.int64), S, S, snorm, np.array([2], dtype=np.int64))
