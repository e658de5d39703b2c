"""Compiled kernels: numba @njit twins of ``_kernels_py``.

Same six entry points, same signatures, same results; recursion is
unrolled into explicit stacks because these run inside tight enumeration
loops.  nogil lets the verification harness fan work across threads.
"""

from __future__ import annotations

import numpy as np
from numba import njit

FOUND = 1
ABSENT = 0
BUDGET = -1

_JIT = {"cache": True, "nogil": True}


@njit(**_JIT)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(**_JIT)
def all_pairs_distances(masks):
    n = masks.shape[0]
    dist = np.full((n, n), -1, dtype=np.int64)
    for src in range(n):
        dist[src, src] = 0
        seen = np.int64(1) << src
        frontier = seen
        d = 0
        while frontier != 0:
            nxt = np.int64(0)
            for v in range(n):
                if (frontier >> v) & 1:
                    nxt |= masks[v]
            nxt &= ~seen
            d += 1
            for v in range(n):
                if (nxt >> v) & 1:
                    dist[src, v] = d
            seen |= nxt
            frontier = nxt
    return dist


@njit(**_JIT)
def _jacobi_dominant(a):
    n = a.shape[0]
    m = a.copy()
    vecs = np.eye(n)
    scale = 0.0
    for i in range(n):
        for j in range(n):
            scale += m[i, j] * m[i, j]
    scale = np.sqrt(scale)
    if scale == 0.0:
        v0 = np.zeros(n)
        v0[0] = 1.0
        return 0.0, v0
    for _ in range(60):
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                off += m[p, q] * m[p, q]
        if np.sqrt(2.0 * off) <= 1e-15 * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = m[p, q]
                if abs(apq) <= 1e-18 * scale:
                    continue
                theta = (m[q, q] - m[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                for i in range(n):
                    mip = m[i, p]
                    miq = m[i, q]
                    m[i, p] = c * mip - s * miq
                    m[i, q] = s * mip + c * miq
                for i in range(n):
                    mpi = m[p, i]
                    mqi = m[q, i]
                    m[p, i] = c * mpi - s * mqi
                    m[q, i] = s * mpi + c * mqi
                for i in range(n):
                    vip = vecs[i, p]
                    viq = vecs[i, q]
                    vecs[i, p] = c * vip - s * viq
                    vecs[i, q] = s * vip + c * viq
    k = 0
    for i in range(1, n):
        if m[i, i] > m[k, k]:
            k = i
    lam = m[k, k]
    vec = vecs[:, k].copy()
    tot = 0.0
    for i in range(n):
        tot += vec[i]
    if tot < 0.0:
        for i in range(n):
            vec[i] = -vec[i]
    nrm = 0.0
    for i in range(n):
        nrm += vec[i] * vec[i]
    nrm = np.sqrt(nrm)
    for i in range(n):
        vec[i] /= nrm
    return lam, vec


@njit(**_JIT)
def dominant_eigen(a, tol, max_iter):
    n = a.shape[0]
    if n == 1:
        vec = np.ones(1)
        return a[0, 0], vec, 0.0, 0, True
    shift = 0.0
    for i in range(n):
        rs = 0.0
        for j in range(n):
            rs += abs(a[i, j])
        if rs > shift:
            shift = rs
    x = np.full(n, 1.0 / np.sqrt(n))
    y = np.empty(n)
    switch = max_iter // 2
    if switch < 1:
        switch = 1
    iters = 0
    while iters < switch:
        for i in range(n):
            acc = shift * x[i]
            for j in range(n):
                acc += a[i, j] * x[j]
            y[i] = acc
        lam_shifted = 0.0
        for i in range(n):
            lam_shifted += x[i] * y[i]
        lam = lam_shifted - shift
        resid = 0.0
        for i in range(n):
            d = y[i] - lam_shifted * x[i]
            resid += d * d
        resid = np.sqrt(resid)
        denom = abs(lam)
        if denom < 1e-300:
            denom = 1e-300
        if resid <= tol * denom:
            return lam, x, resid, iters, True
        ny = 0.0
        for i in range(n):
            ny += y[i] * y[i]
        ny = np.sqrt(ny)
        if ny == 0.0:
            return 0.0, x, 0.0, iters, True
        for i in range(n):
            x[i] = y[i] / ny
        iters += 1
    lam, vec = _jacobi_dominant(a)
    resid = 0.0
    for i in range(n):
        acc = 0.0
        for j in range(n):
            acc += a[i, j] * vec[j]
        d = acc - lam * vec[i]
        resid += d * d
    resid = np.sqrt(resid)
    denom = abs(lam)
    if denom < 1e-300:
        denom = 1e-300
    ok = resid <= tol * denom
    return lam, vec, resid, iters, ok


@njit(**_JIT)
def _component_counts(masks, n, removed):
    remaining = ((np.int64(1) << n) - 1) & ~removed
    isolated = 0
    odd_nontrivial = 0
    unvisited = remaining
    while unvisited != 0:
        comp = unvisited & (-unvisited)
        frontier = comp
        while frontier != 0:
            nxt = np.int64(0)
            for v in range(n):
                if (frontier >> v) & 1:
                    nxt |= masks[v]
            nxt &= remaining & ~comp
            comp |= nxt
            frontier = nxt
        unvisited &= ~comp
        size = _popcount(comp)
        if size == 1:
            isolated += 1
        elif size % 2 == 1:
            odd_nontrivial += 1
    return isolated, odd_nontrivial


@njit(**_JIT)
def deficiency_scan(masks, k, odd_weight):
    n = masks.shape[0]
    total = np.int64(1) << n
    buf = np.empty(total, dtype=np.int64)
    best = np.int64(-1) << 40
    cnt = 0
    for s in range(total):
        iso, oddnt = _component_counts(masks, n, s)
        val = odd_weight * oddnt + k * iso - k * _popcount(s)
        if val > best:
            best = val
            buf[0] = s
            cnt = 1
        elif val == best:
            buf[cnt] = s
            cnt += 1
    return best, buf[:cnt].copy()


@njit(**_JIT)
def violation_scan(masks, k, odd_weight, slack, min_size, allow_full):
    n = masks.shape[0]
    total = np.int64(1) << n
    for s in range(total):
        size = _popcount(s)
        if size < min_size:
            continue
        if not allow_full and size == n:
            continue
        iso, oddnt = _component_counts(masks, n, s)
        if odd_weight * oddnt + k * iso > k * size - slack:
            return s
    return np.int64(-1)


@njit(**_JIT)
def canonical_bits(masks):
    n = masks.shape[0]
    if n < 2:
        return np.int64(0)
    full_bits = n * (n - 1) // 2
    best = (np.int64(1) << full_bits) - 1
    perm = np.zeros(n, dtype=np.int64)
    placed_at = np.full(n, -1, dtype=np.int64)
    cand_w = np.zeros((n, n), dtype=np.int64)
    cand_c = np.zeros((n, n), dtype=np.int64)
    ncand = np.zeros(n, dtype=np.int64)
    ptr = np.zeros(n, dtype=np.int64)
    partial = np.zeros(n + 1, dtype=np.int64)
    used = np.int64(0)

    for w in range(n):
        cand_w[0, w] = w
        cand_c[0, w] = 0
    ncand[0] = n

    depth = 0
    while depth >= 0:
        if placed_at[depth] >= 0:
            used &= ~(np.int64(1) << placed_at[depth])
            placed_at[depth] = -1
        if ptr[depth] >= ncand[depth]:
            depth -= 1
            continue
        i = ptr[depth]
        ptr[depth] += 1
        col = cand_c[depth, i]
        w = cand_w[depth, i]
        trial = (partial[depth] << depth) | col
        shift_out = full_bits - depth * (depth + 1) // 2
        if trial > (best >> shift_out):
            ptr[depth] = ncand[depth]  # sorted: the rest are no smaller
            continue
        if depth == n - 1:
            if trial < best:
                best = trial
            continue
        perm[depth] = w
        placed_at[depth] = w
        used |= np.int64(1) << w
        depth += 1
        partial[depth] = trial
        c = 0
        for v in range(n):
            if (used >> v) & 1:
                continue
            colv = np.int64(0)
            for ii in range(depth):
                colv = (colv << 1) | ((masks[perm[ii]] >> v) & 1)
            cand_w[depth, c] = v
            cand_c[depth, c] = colv
            c += 1
        ncand[depth] = c
        ptr[depth] = 0
        for a in range(1, c):
            cc = cand_c[depth, a]
            ww = cand_w[depth, a]
            b = a - 1
            while b >= 0 and (
                cand_c[depth, b] > cc
                or (cand_c[depth, b] == cc and cand_w[depth, b] > ww)
            ):
                cand_c[depth, b + 1] = cand_c[depth, b]
                cand_w[depth, b + 1] = cand_w[depth, b]
                b -= 1
            cand_c[depth, b + 1] = cc
            cand_w[depth, b + 1] = ww
    return best


@njit(**_JIT)
def bmatch_search(eu, ev, n, targets, cap, max_nodes):
    m = eu.shape[0]
    weights = np.zeros(m, dtype=np.int64)
    rem = targets.astype(np.int64).copy()
    total = np.int64(0)
    for v in range(n):
        total += rem[v]
    if total % 2 == 1:
        return ABSENT, weights
    cnt = np.zeros(n, dtype=np.int64)
    for i in range(m):
        cnt[eu[i]] += 1
        cnt[ev[i]] += 1
    for v in range(n):
        if rem[v] > cap * cnt[v] or rem[v] < 0:
            return ABSENT, weights
    if m == 0:
        if total == 0:
            return FOUND, weights
        return ABSENT, weights

    cur_w = np.full(m, -1, dtype=np.int64)
    lo_arr = np.zeros(m, dtype=np.int64)
    tot_arr = np.zeros(m + 1, dtype=np.int64)
    tot_arr[0] = total
    nodes = 0
    pos = 0
    entering = True
    status = ABSENT
    while True:
        if pos == m:
            if tot_arr[m] == 0:
                status = FOUND
                break
            pos -= 1
            entering = False
            continue
        u = eu[pos]
        v = ev[pos]
        if entering:
            hi = rem[u]
            if rem[v] < hi:
                hi = rem[v]
            if cap < hi:
                hi = cap
            lo = np.int64(0)
            lo1 = rem[u] - cap * (cnt[u] - 1)
            lo2 = rem[v] - cap * (cnt[v] - 1)
            if lo1 > lo:
                lo = lo1
            if lo2 > lo:
                lo = lo2
            lo_arr[pos] = lo
            cnt[u] -= 1
            cnt[v] -= 1
            w = hi
        else:
            w_prev = cur_w[pos]
            rem[u] += w_prev
            rem[v] += w_prev
            w = w_prev - 1
        applied = False
        if w >= lo_arr[pos]:
            nodes += 1
            if nodes > max_nodes:
                status = BUDGET
                break
            left = tot_arr[pos] - 2 * w
            if left <= 2 * cap * (m - pos - 1):
                rem[u] -= w
                rem[v] -= w
                cur_w[pos] = w
                weights[pos] = w
                tot_arr[pos + 1] = left
                applied = True
            # else: smaller w only leave more demand; branch exhausted
        if applied:
            pos += 1
            entering = True
        else:
            cnt[u] += 1
            cnt[v] += 1
            cur_w[pos] = -1
            pos -= 1
            if pos < 0:
                break
            entering = False
    if status != FOUND:
        for i in range(m):
            weights[i] = 0
    return status, weights
