"""Hot loops with a numba path and a pure-numpy path.

The numba path is used when numba imports and ``BUNCHLINKS_DISABLE_NUMBA`` is
unset (or ``0``).  Both paths return identical results; tests run both.

Kernels:

* ``naive_sort`` - sort every letter position of a link by its forward
  itinerary (x < y), comparing letter by letter.  numba does a merge sort with
  an explicit comparator; numpy does prefix doubling on the shift map.
* ``rule_counts`` - the O(nbar^2) vertical/horizontal crossing tests of the
  parent diagram, on integer heights and integer abscissa ranks.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAVE_NUMBA = False

ENV_FLAG = "BUNCHLINKS_DISABLE_NUMBA"


def default_backend() -> str:
    if HAVE_NUMBA and os.environ.get(ENV_FLAG, "0") in ("", "0"):
        return "numba"
    return "numpy"


def available_backends() -> list[str]:
    return ["numba", "numpy"] if HAVE_NUMBA else ["numpy"]


# -- naive letter sort ------------------------------------------------------


def _cmp_itin(letters, starts, lengths, pcomp, poff, p, q):
    cp, cq = pcomp[p], pcomp[q]
    lp, lq = lengths[cp], lengths[cq]
    sp, sq = starts[cp], starts[cq]
    op, oq = poff[p], poff[q]
    for _ in range(lp + lq):
        a = letters[sp + op]
        b = letters[sq + oq]
        if a != b:
            return -1 if a < b else 1
        op += 1
        if op == lp:
            op = 0
        oq += 1
        if oq == lq:
            oq = 0
    return 0


if HAVE_NUMBA:
    _cmp_itin_nb = numba.njit(cache=True)(_cmp_itin)

    @numba.njit(cache=True)
    def _merge_sort_nb(letters, starts, lengths, pcomp, poff):
        m = pcomp.shape[0]
        src = np.arange(m)
        dst = np.empty(m, dtype=src.dtype)
        width = 1
        while width < m:
            for lo in range(0, m, 2 * width):
                mid = min(lo + width, m)
                hi = min(lo + 2 * width, m)
                i, j, t = lo, mid, lo
                while i < mid and j < hi:
                    if _cmp_itin_nb(letters, starts, lengths, pcomp, poff, src[j], src[i]) < 0:
                        dst[t] = src[j]
                        j += 1
                    else:
                        dst[t] = src[i]
                        i += 1
                    t += 1
                while i < mid:
                    dst[t] = src[i]
                    i += 1
                    t += 1
                while j < hi:
                    dst[t] = src[j]
                    j += 1
                    t += 1
            src, dst = dst, src
            width *= 2
        # equal itineraries end up adjacent
        tie = -1
        for r in range(m - 1):
            if _cmp_itin_nb(letters, starts, lengths, pcomp, poff, src[r], src[r + 1]) == 0:
                tie = r
                break
        return src, tie


def _doubling_sort(letters, starts, lengths, pcomp, poff):
    m = pcomp.shape[0]
    if m == 0:
        return np.zeros(0, dtype=np.int64), -1
    pcomp = pcomp.astype(np.int64)
    poff = poff.astype(np.int64)
    # next position under the shift map, as a flat index into the position array
    nxt = starts[pcomp] + (poff + 1) % lengths[pcomp]
    flat = starts[pcomp] + poff
    # positions are laid out component by component, so flat index == position id
    assert np.array_equal(flat, np.arange(m))
    rank = letters[flat].astype(np.int64)
    horizon = 2 * int(lengths.max())
    span = 1
    jump = nxt.copy()
    while span < horizon:
        key = rank * (m + 1) + rank[jump]
        _, rank = np.unique(key, return_inverse=True)
        rank = rank.astype(np.int64)
        jump = jump[jump]
        span *= 2
    order = np.argsort(rank, kind="stable")
    ranked = rank[order]
    dup = np.flatnonzero(ranked[1:] == ranked[:-1])
    return order, int(dup[0]) if dup.size else -1


def naive_sort(letters, starts, lengths, pcomp, poff, backend: str | None = None):
    """Sorted position ids and the index of the first tied adjacent pair (or -1).

    ``letters`` holds 0 for x and 1 for y, every component's word laid out
    consecutively from ``starts[c]`` with length ``lengths[c]``.  Position ``p``
    is letter ``poff[p]`` of component ``pcomp[p]``, with positions numbered in
    the same flat layout.
    """
    backend = backend or default_backend()
    args = (
        np.ascontiguousarray(letters, dtype=np.int8),
        np.ascontiguousarray(starts, dtype=np.int64),
        np.ascontiguousarray(lengths, dtype=np.int64),
        np.ascontiguousarray(pcomp, dtype=np.int64),
        np.ascontiguousarray(poff, dtype=np.int64),
    )
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but numba is not importable")
        order, tie = _merge_sort_nb(*args)
        return np.asarray(order), int(tie)
    if backend == "numpy":
        return _doubling_sort(*args)
    raise ValueError(f"unknown backend {backend!r}")


# -- parent-diagram crossing predicates -------------------------------------
#
# Segments are given by integer heights and integer abscissa ranks:
#   blue horizontal j: height hx[j], from a[j] to b[j]
#   red horizontal j:  height hy[j], from ru[j] to rb[j]
#   blue vertical i:   abscissa bv[i], from bvlo[i] to bvhi[i]
#   red vertical i:    abscissa rv[i], from rvlo[i] to rvhi[i]
# A crossing is a strict interior intersection of a vertical and a horizontal.


def _rule_counts_np(hx, a, b, hy, ru, rb, bv, bvlo, bvhi, rv, rvlo, rvhi):
    def cross(x, lo, hi, h, left, right):
        return (
            (lo[:, None] < h[None, :]) & (h[None, :] < hi[:, None])
            & (left[None, :] < x[:, None]) & (x[:, None] < right[None, :])
        ).sum()

    return np.array(
        [
            cross(rv, rvlo, rvhi, hx, a, b),
            cross(bv, bvlo, bvhi, hy, ru, rb),
            cross(bv, bvlo, bvhi, hx, a, b),
            cross(rv, rvlo, rvhi, hy, ru, rb),
        ],
        dtype=np.int64,
    )


def _rule_counts_loop(hx, a, b, hy, ru, rb, bv, bvlo, bvhi, rv, rvlo, rvhi):
    n = hx.shape[0]
    out = np.zeros(4, dtype=np.int64)
    for i in range(n):
        for j in range(n):
            if rvlo[i] < hx[j] < rvhi[i] and a[j] < rv[i] < b[j]:
                out[0] += 1
            if bvlo[i] < hy[j] < bvhi[i] and ru[j] < bv[i] < rb[j]:
                out[1] += 1
            if bvlo[i] < hx[j] < bvhi[i] and a[j] < bv[i] < b[j]:
                out[2] += 1
            if rvlo[i] < hy[j] < rvhi[i] and ru[j] < rv[i] < rb[j]:
                out[3] += 1
    return out


if HAVE_NUMBA:
    _rule_counts_nb = numba.njit(cache=True)(_rule_counts_loop)


def rule_counts(hx, a, b, hy, ru, rb, bv, bvlo, bvhi, rv, rvlo, rvhi, backend: str | None = None) -> np.ndarray:
    """Counts ``[red_v x blue_h, blue_v x red_h, blue_v x blue_h, red_v x red_h]``.

    On a valid parent diagram these are the bottom-left, top-right,
    bottom-right and top-left (red-red) crossings respectively.
    """
    backend = backend or default_backend()
    args = tuple(
        np.ascontiguousarray(v, dtype=np.int64)
        for v in (hx, a, b, hy, ru, rb, bv, bvlo, bvhi, rv, rvlo, rvhi)
    )
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but numba is not importable")
        return _rule_counts_nb(*args)
    if backend == "numpy":
        return _rule_counts_np(*args)
    raise ValueError(f"unknown backend {backend!r}")
