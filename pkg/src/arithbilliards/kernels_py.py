"""Pure-Python implementations of the hot kernels.

Reference lane for :mod:`arithbilliards.kernels_cy`; selected automatically
when the compiled extension is unavailable (or forced via the
``ARITHBILLIARDS_PURE`` environment variable).

All functions take plain dimension lists and return plain ints/lists.
State and point indexes use the mixed-radix encodings of
:mod:`arithbilliards.core` (first coordinate most significant).  Callers are
responsible for budget checks; these scans assume their inputs fit in memory.
"""

from __future__ import annotations

import itertools
import math
from collections import deque

BACKEND = "python"


def _encode(digits, radices) -> int:
    idx = 0
    for d, r in zip(digits, radices):
        idx = idx * r + d
    return idx


def _decode(index: int, radices) -> list[int]:
    out = [0] * len(radices)
    for i in range(len(radices) - 1, -1, -1):
        index, out[i] = divmod(index, radices[i])
    return out


def _crt_least(residues, moduli) -> int:
    """Least k >= 0 with k = residues[i] (mod moduli[i]) for all i, else -1.

    Incremental merge of one congruence at a time; the running modulus is the
    lcm of the moduli merged so far.
    """
    r, mod = 0, 1
    for a, m in zip(residues, moduli):
        g = math.gcd(mod, m)
        diff = a - r
        if diff % g:
            return -1
        mg = m // g
        t = (diff // g) * pow(mod // g, -1, mg) % mg
        r += mod * t
        mod = mod // g * m
    return r % mod


def trace_paths(two_m) -> list[tuple[int, int]]:
    """Partition all phase states into step orbits paired with their reversals.

    Each geometric path is either one self-reversed orbit (an open path) or a
    pair of mutually reversed orbits (a closed path).  Returns one
    ``(representative_index, is_open)`` tuple per geometric path, ascending;
    the representative is the smallest encoded state on the path.
    """
    two_m = list(two_m)
    p = len(two_m)
    n_states = math.prod(two_m)
    period = math.lcm(*two_m)
    visited = bytearray(n_states)
    out: list[tuple[int, int]] = []
    for seed in range(n_states):
        if visited[seed]:
            continue
        base = _decode(seed, two_m)
        neg = [(tm - u) % tm for u, tm in zip(base, two_m)]
        neg_idx = _encode(neg, two_m)
        self_paired = False
        cur = list(base)
        idx = seed
        for _ in range(period):
            visited[idx] = 1
            if idx == neg_idx:
                self_paired = True
            idx = 0
            for i in range(p):
                c = cur[i] + 1
                if c == two_m[i]:
                    c = 0
                cur[i] = c
                idx = idx * two_m[i] + c
        if not self_paired:
            cur = neg
            idx = neg_idx
            for _ in range(period):
                visited[idx] = 1
                idx = 0
                for i in range(p):
                    c = cur[i] + 1
                    if c == two_m[i]:
                        c = 0
                    cur[i] = c
                    idx = idx * two_m[i] + c
        out.append((seed, int(self_paired)))
    return out


def least_closure_violations(dims) -> int:
    """Count states whose least full-closure step differs from 2*lcm(dims).

    A trajectory closes at step k when it re-reads both its start position and
    the position one step before the start (position equality, not state
    equality).  Expected result is 0: the least such k is always one full
    period.
    """
    dims = list(dims)
    two_m = [2 * m for m in dims]
    p = len(dims)
    period = math.lcm(*two_m)
    bad = 0
    for base in itertools.product(*[range(tm) for tm in two_m]):
        back = [(u - 1) % tm for u, tm in zip(base, two_m)]
        a = list(base)
        least = 0
        for k in range(1, period + 1):
            ok = True
            for i in range(p):
                tm = two_m[i]
                bi = a[i]
                ai = bi + 1
                if ai == tm:
                    ai = 0
                a[i] = ai
                if ok:
                    # positions agree iff residues are equal or mirrored
                    u0 = base[i]
                    if ai != u0 and (ai + u0) % tm != 0:
                        ok = False
                    else:
                        v0 = back[i]
                        if bi != v0 and (bi + v0) % tm != 0:
                            ok = False
            if ok:
                least = k
                break
        if least != period:
            bad += 1
    return bad


def reach_scan(dims) -> tuple[int, int]:
    """Exhaustive reachability cross-check over one grid.

    For every (source point, direction mask, target point) triple, decides
    reachability twice: by merging per-coordinate congruences, and by walking
    the full 2*lcm period and recording first visits.  Answers must agree on
    reachability, least witness, and the sign choice of the target lift.

    Returns ``(n_checked, n_mismatch)``.
    """
    dims = list(dims)
    p = len(dims)
    two_m = [2 * m for m in dims]
    m_plus = [m + 1 for m in dims]
    period = math.lcm(*two_m)
    n_points = math.prod(m_plus)
    n_states = math.prod(two_m)

    # Least solution per residue-difference vector, solved once by CRT merge.
    crt = [_crt_least(_decode(d, two_m), two_m) for d in range(n_states)]

    witness = [-1] * n_points
    stamp = [0] * n_points
    gen = 0
    checked = 0
    mismatch = 0
    n_masks = 1 << p
    point_iter = list(itertools.product(*[range(mp) for mp in m_plus]))

    for src in point_iter:
        for maskbits in range(n_masks):
            u = [
                x if not (maskbits >> (p - 1 - i)) & 1 else (two_m[i] - x) % two_m[i]
                for i, x in enumerate(src)
            ]
            # Oracle pass: first-visit step for every reachable point.
            gen += 1
            cur = list(u)
            for k in range(period):
                pid = 0
                for i in range(p):
                    m = dims[i]
                    pid = pid * m_plus[i] + (m - abs(m - cur[i]))
                if stamp[pid] != gen:
                    stamp[pid] = gen
                    witness[pid] = k
                for i in range(p):
                    c = cur[i] + 1
                    if c == two_m[i]:
                        c = 0
                    cur[i] = c
            # Residue differences for both lifts of each target value.
            dtab = [
                [((t - u[i]) % two_m[i], ((two_m[i] - t) % two_m[i] - u[i]) % two_m[i])
                 for t in range(m_plus[i])]
                for i in range(p)
            ]
            for pid_t, tgt in enumerate(point_iter):
                oracle_k = witness[pid_t] if stamp[pid_t] == gen else -1
                oracle_sig = -1
                if oracle_k >= 0:
                    oracle_sig = 0
                    for i in range(p):
                        v = (u[i] + oracle_k) % two_m[i]
                        oracle_sig = (oracle_sig << 1) | (0 if v == tgt[i] else 1)
                best = -1
                best_sig = -1
                for sig in range(n_masks):
                    d_idx = 0
                    for i in range(p):
                        d_idx = d_idx * two_m[i] + dtab[i][tgt[i]][(sig >> (p - 1 - i)) & 1]
                    k0 = crt[d_idx]
                    if k0 >= 0 and (best < 0 or k0 < best):
                        best = k0
                        best_sig = sig
                if best != oracle_k or (best >= 0 and best_sig != oracle_sig):
                    mismatch += 1
                checked += 1
    return checked, mismatch


def coordinate_sum_violations(dims) -> int:
    """Count start states whose per-coordinate position sums over one full
    period differ from ``m_i * lcm(dims)``.  Expected 0."""
    dims = list(dims)
    p = len(dims)
    two_m = [2 * m for m in dims]
    period = math.lcm(*two_m)
    expect = [m * (period // 2) for m in dims]
    bad = 0
    for base in itertools.product(*[range(tm) for tm in two_m]):
        sums = [0] * p
        cur = list(base)
        for _ in range(period):
            for i in range(p):
                m = dims[i]
                sums[i] += m - abs(m - cur[i])
                c = cur[i] + 1
                if c == two_m[i]:
                    c = 0
                cur[i] = c
        if sums != expect:
            bad += 1
    return bad


def bfs_components(dims) -> list[int]:
    """Connected components of lattice points under unit-cell diagonal moves.

    Moves change every coordinate by +-1 and must stay inside the grid.
    Returns a component id per encoded point, ids assigned in first-seen
    (ascending seed) order; neighbor exploration is in lexicographic sign
    order, so the output is fully deterministic.
    """
    dims = list(dims)
    p = len(dims)
    m_plus = [m + 1 for m in dims]
    n_points = math.prod(m_plus)
    deltas = list(itertools.product((1, -1), repeat=p))
    comp = [-1] * n_points
    cid = 0
    for seed in range(n_points):
        if comp[seed] >= 0:
            continue
        comp[seed] = cid
        queue = deque([seed])
        while queue:
            pid = queue.popleft()
            coords = _decode(pid, m_plus)
            for delta in deltas:
                nid = 0
                for i in range(p):
                    c = coords[i] + delta[i]
                    if c < 0 or c > dims[i]:
                        nid = -1
                        break
                    nid = nid * m_plus[i] + c
                if nid >= 0 and comp[nid] < 0:
                    comp[nid] = cid
                    queue.append(nid)
        cid += 1
    return comp
