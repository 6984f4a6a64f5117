# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the hot kernels.

Same contracts and encodings as arithbilliards.kernels_py (the reference
lane); see the docstrings there.  Budget checks are the caller's job, but
inputs are validated enough to keep all arithmetic inside int64.
"""

import math

from cpython.mem cimport PyMem_Malloc, PyMem_Free
from libc.stdint cimport int64_t
from libc.string cimport memset

BACKEND = "cython"

cdef enum:
    MAX_P = 24


cdef int64_t _gcd(int64_t a, int64_t b) noexcept:
    cdef int64_t t
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef int64_t _mod(int64_t a, int64_t m) noexcept:
    cdef int64_t r = a % m
    if r < 0:
        r += m
    return r


cdef int64_t _inv(int64_t a, int64_t m) noexcept:
    # Modular inverse of a mod m; assumes gcd(a, m) == 1 and m >= 1.
    cdef int64_t old_r = _mod(a, m)
    cdef int64_t r = m
    cdef int64_t old_s = 1
    cdef int64_t s = 0
    cdef int64_t q, t
    if m == 1:
        return 0
    while r != 0:
        q = old_r / r
        t = old_r - q * r
        old_r = r
        r = t
        t = old_s - q * s
        old_s = s
        s = t
    return _mod(old_s, m)


cdef int64_t _crt_least(int64_t* res, int64_t* mod, int p) noexcept:
    # Least k >= 0 with k = res[i] (mod mod[i]) for all i, or -1.
    cdef int64_t r = 0
    cdef int64_t modulus = 1
    cdef int64_t g, mg, diff, t
    cdef int i
    for i in range(p):
        diff = res[i] - r
        g = _gcd(modulus, mod[i])
        if diff % g != 0:
            return -1
        mg = mod[i] / g
        t = _mod(((diff / g) % mg) * _inv((modulus / g) % mg, mg), mg)
        r = r + modulus * t
        modulus = modulus / g * mod[i]
    return _mod(r, modulus)


cdef int _load_dims(object values, int64_t* out, int64_t lo) except -1:
    cdef int p = len(values)
    cdef int i
    if p < 2 or p > MAX_P:
        raise ValueError(f"kernel arity must be in [2, {MAX_P}], got {p}")
    for i in range(p):
        out[i] = values[i]
        if out[i] < lo:
            raise ValueError(f"kernel radices must be >= {lo}, got {values!r}")
    return p


cdef int64_t _checked_prod(int64_t* vals, int p) except -1:
    cdef int64_t n = 1
    cdef int i
    for i in range(p):
        if n > (<int64_t>2**62) / vals[i]:
            raise OverflowError("kernel state space does not fit in int64")
        n *= vals[i]
    return n


cdef int64_t _lcm_of(int64_t* vals, int p) noexcept:
    cdef int64_t l = 1
    cdef int i
    for i in range(p):
        l = l / _gcd(l, vals[i]) * vals[i]
    return l


def trace_paths(two_m):
    cdef int64_t tm[MAX_P]
    cdef int64_t base[MAX_P]
    cdef int64_t neg[MAX_P]
    cdef int64_t cur[MAX_P]
    cdef int p = _load_dims(two_m, tm, 2)
    cdef int64_t n_states = _checked_prod(tm, p)
    cdef int64_t period = _lcm_of(tm, p)
    cdef int64_t seed, idx, neg_idx, k, c, rem
    cdef int i, self_paired
    if n_states > <int64_t>2**31:
        raise ValueError("state space too large for kernel enumeration")
    cdef unsigned char* visited = <unsigned char*> PyMem_Malloc(n_states)
    if visited == NULL:
        raise MemoryError()
    memset(visited, 0, n_states)
    out = []
    try:
        for seed in range(n_states):
            if visited[seed]:
                continue
            rem = seed
            for i in range(p - 1, -1, -1):
                base[i] = rem % tm[i]
                rem = rem / tm[i]
            neg_idx = 0
            for i in range(p):
                neg[i] = (tm[i] - base[i]) % tm[i]
                cur[i] = base[i]
                neg_idx = neg_idx * tm[i] + neg[i]
            self_paired = 0
            idx = seed
            for k in range(period):
                visited[idx] = 1
                if idx == neg_idx:
                    self_paired = 1
                idx = 0
                for i in range(p):
                    c = cur[i] + 1
                    if c == tm[i]:
                        c = 0
                    cur[i] = c
                    idx = idx * tm[i] + c
            if not self_paired:
                idx = neg_idx
                for i in range(p):
                    cur[i] = neg[i]
                for k in range(period):
                    visited[idx] = 1
                    idx = 0
                    for i in range(p):
                        c = cur[i] + 1
                        if c == tm[i]:
                            c = 0
                        cur[i] = c
                        idx = idx * tm[i] + c
            out.append((seed, self_paired))
    finally:
        PyMem_Free(visited)
    return out


def least_closure_violations(dims):
    cdef int64_t m[MAX_P]
    cdef int64_t tm[MAX_P]
    cdef int64_t base[MAX_P]
    cdef int64_t back[MAX_P]
    cdef int64_t a[MAX_P]
    cdef int p = _load_dims(dims, m, 1)
    cdef int i
    for i in range(p):
        tm[i] = 2 * m[i]
    cdef int64_t n_states = _checked_prod(tm, p)
    cdef int64_t period = _lcm_of(tm, p)
    cdef int64_t s, k, least, ai, bi
    cdef int64_t bad = 0
    cdef int ok
    for i in range(p):
        base[i] = 0
    for s in range(n_states):
        least = 0
        for i in range(p):
            back[i] = (base[i] - 1) % tm[i]
            if back[i] < 0:
                back[i] += tm[i]
            a[i] = base[i]
        for k in range(1, period + 1):
            ok = 1
            for i in range(p):
                bi = a[i]
                ai = bi + 1
                if ai == tm[i]:
                    ai = 0
                a[i] = ai
                if ok:
                    if ai != base[i] and (ai + base[i]) % tm[i] != 0:
                        ok = 0
                    elif bi != back[i] and (bi + back[i]) % tm[i] != 0:
                        ok = 0
            if ok:
                least = k
                break
        if least != period:
            bad += 1
        # odometer over states
        for i in range(p - 1, -1, -1):
            base[i] += 1
            if base[i] < tm[i]:
                break
            base[i] = 0
    return bad


def reach_scan(dims):
    cdef int64_t m[MAX_P]
    cdef int64_t tm[MAX_P]
    cdef int64_t mp[MAX_P]
    cdef int64_t src[MAX_P]
    cdef int64_t tgt[MAX_P]
    cdef int64_t u[MAX_P]
    cdef int64_t cur[MAX_P]
    cdef int64_t res[MAX_P]
    cdef int p = _load_dims(dims, m, 1)
    cdef int i
    for i in range(p):
        tm[i] = 2 * m[i]
        mp[i] = m[i] + 1
    cdef int64_t n_states = _checked_prod(tm, p)
    cdef int64_t n_points = _checked_prod(mp, p)
    cdef int64_t period = _lcm_of(tm, p)
    cdef int n_masks = 1 << p
    cdef int64_t mp_max = 0
    for i in range(p):
        if mp[i] > mp_max:
            mp_max = mp[i]
    if n_states > <int64_t>2**31 or n_points > <int64_t>2**31:
        raise ValueError("state space too large for kernel scan")

    cdef int64_t* crt = <int64_t*> PyMem_Malloc(n_states * sizeof(int64_t))
    cdef int64_t* witness = <int64_t*> PyMem_Malloc(n_points * sizeof(int64_t))
    cdef int64_t* stamp = <int64_t*> PyMem_Malloc(n_points * sizeof(int64_t))
    cdef int64_t* dtab = <int64_t*> PyMem_Malloc(p * mp_max * 2 * sizeof(int64_t))
    if crt == NULL or witness == NULL or stamp == NULL or dtab == NULL:
        PyMem_Free(crt); PyMem_Free(witness); PyMem_Free(stamp); PyMem_Free(dtab)
        raise MemoryError()

    cdef int64_t d, rem, k, pid, pid_t, checked = 0, mismatch = 0
    cdef int64_t gen = 0, oracle_k, best, k0, d_idx, c, v, t
    cdef int maskbits, sig, oracle_sig, best_sig, done
    try:
        for d in range(n_states):
            rem = d
            for i in range(p - 1, -1, -1):
                res[i] = rem % tm[i]
                rem = rem / tm[i]
            crt[d] = _crt_least(res, tm, p)
        memset(stamp, 0, n_points * sizeof(int64_t))

        for i in range(p):
            src[i] = 0
        while True:
            for maskbits in range(n_masks):
                for i in range(p):
                    if (maskbits >> (p - 1 - i)) & 1:
                        u[i] = (tm[i] - src[i]) % tm[i]
                    else:
                        u[i] = src[i]
                # oracle pass: first-visit step per reachable point
                gen += 1
                for i in range(p):
                    cur[i] = u[i]
                for k in range(period):
                    pid = 0
                    for i in range(p):
                        v = m[i] - cur[i]
                        if v < 0:
                            v = -v
                        pid = pid * mp[i] + (m[i] - v)
                    if stamp[pid] != gen:
                        stamp[pid] = gen
                        witness[pid] = k
                    for i in range(p):
                        c = cur[i] + 1
                        if c == tm[i]:
                            c = 0
                        cur[i] = c
                # residue differences for both lifts of each target value
                for i in range(p):
                    for t in range(mp[i]):
                        dtab[(i * mp_max + t) * 2] = _mod(t - u[i], tm[i])
                        dtab[(i * mp_max + t) * 2 + 1] = _mod((tm[i] - t) % tm[i] - u[i], tm[i])
                # query pass over all targets
                for i in range(p):
                    tgt[i] = 0
                pid_t = 0
                while True:
                    if stamp[pid_t] == gen:
                        oracle_k = witness[pid_t]
                        oracle_sig = 0
                        for i in range(p):
                            v = (u[i] + oracle_k) % tm[i]
                            oracle_sig = (oracle_sig << 1) | (0 if v == tgt[i] else 1)
                    else:
                        oracle_k = -1
                        oracle_sig = -1
                    best = -1
                    best_sig = -1
                    for sig in range(n_masks):
                        d_idx = 0
                        for i in range(p):
                            d_idx = d_idx * tm[i] + dtab[(i * mp_max + tgt[i]) * 2 + ((sig >> (p - 1 - i)) & 1)]
                        k0 = crt[d_idx]
                        if k0 >= 0 and (best < 0 or k0 < best):
                            best = k0
                            best_sig = sig
                    if best != oracle_k or (best >= 0 and best_sig != oracle_sig):
                        mismatch += 1
                    checked += 1
                    pid_t += 1
                    done = 1
                    for i in range(p - 1, -1, -1):
                        tgt[i] += 1
                        if tgt[i] < mp[i]:
                            done = 0
                            break
                        tgt[i] = 0
                    if done:
                        break
            done = 1
            for i in range(p - 1, -1, -1):
                src[i] += 1
                if src[i] < mp[i]:
                    done = 0
                    break
                src[i] = 0
            if done:
                break
    finally:
        PyMem_Free(crt)
        PyMem_Free(witness)
        PyMem_Free(stamp)
        PyMem_Free(dtab)
    return checked, mismatch


def coordinate_sum_violations(dims):
    cdef int64_t m[MAX_P]
    cdef int64_t tm[MAX_P]
    cdef int64_t base[MAX_P]
    cdef int64_t cur[MAX_P]
    cdef int64_t sums[MAX_P]
    cdef int64_t expect[MAX_P]
    cdef int p = _load_dims(dims, m, 1)
    cdef int i
    for i in range(p):
        tm[i] = 2 * m[i]
    cdef int64_t n_states = _checked_prod(tm, p)
    cdef int64_t period = _lcm_of(tm, p)
    cdef int64_t s, k, c, v
    cdef int64_t bad = 0
    cdef int ok
    for i in range(p):
        expect[i] = m[i] * (period / 2)
        base[i] = 0
    for s in range(n_states):
        for i in range(p):
            sums[i] = 0
            cur[i] = base[i]
        for k in range(period):
            for i in range(p):
                v = m[i] - cur[i]
                if v < 0:
                    v = -v
                sums[i] += m[i] - v
                c = cur[i] + 1
                if c == tm[i]:
                    c = 0
                cur[i] = c
        ok = 1
        for i in range(p):
            if sums[i] != expect[i]:
                ok = 0
        if not ok:
            bad += 1
        for i in range(p - 1, -1, -1):
            base[i] += 1
            if base[i] < tm[i]:
                break
            base[i] = 0
    return bad


def bfs_components(dims):
    cdef int64_t m[MAX_P]
    cdef int64_t mp[MAX_P]
    cdef int64_t coords[MAX_P]
    cdef int p = _load_dims(dims, m, 1)
    cdef int i
    for i in range(p):
        mp[i] = m[i] + 1
    cdef int64_t n_points = _checked_prod(mp, p)
    cdef int n_deltas = 1 << p
    if n_points > <int64_t>2**31:
        raise ValueError("point space too large for kernel BFS")
    cdef int64_t* comp = <int64_t*> PyMem_Malloc(n_points * sizeof(int64_t))
    cdef int64_t* queue = <int64_t*> PyMem_Malloc(n_points * sizeof(int64_t))
    if comp == NULL or queue == NULL:
        PyMem_Free(comp); PyMem_Free(queue)
        raise MemoryError()
    cdef int64_t seed, cid = 0, head, tail, pid, nid, rem, c
    cdef int delta, bad
    try:
        for seed in range(n_points):
            comp[seed] = -1
        for seed in range(n_points):
            if comp[seed] >= 0:
                continue
            comp[seed] = cid
            queue[0] = seed
            head = 0
            tail = 1
            while head < tail:
                pid = queue[head]
                head += 1
                rem = pid
                for i in range(p - 1, -1, -1):
                    coords[i] = rem % mp[i]
                    rem = rem / mp[i]
                for delta in range(n_deltas):
                    nid = 0
                    bad = 0
                    for i in range(p):
                        # bit 0 of delta slot i means -1, else +1 (lex order of
                        # sign tuples with coordinate 1 most significant)
                        if (delta >> (p - 1 - i)) & 1:
                            c = coords[i] - 1
                        else:
                            c = coords[i] + 1
                        if c < 0 or c > m[i]:
                            bad = 1
                            break
                        nid = nid * mp[i] + c
                    if not bad and comp[nid] < 0:
                        comp[nid] = cid
                        queue[tail] = nid
                        tail += 1
            cid += 1
        return [comp[seed] for seed in range(n_points)]
    finally:
        PyMem_Free(comp)
        PyMem_Free(queue)
