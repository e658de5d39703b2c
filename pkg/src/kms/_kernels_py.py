"""Reference kernels: pure numpy/Python implementations of the hot loops.

The compiled twins live in ``_kernels_nb``; both modules expose the same
six functions with identical signatures and results, and ``backend``
selects one at import time (env var KMS_BACKEND).  Keep the two in sync:
they are equivalence-tested against each other.

Graphs enter as int64 neighbor bitmasks, one per vertex (n <= 62).
"""

from __future__ import annotations

import numpy as np

# bmatch_search / deficiency_scan status codes
FOUND = 1
ABSENT = 0
BUDGET = -1


def all_pairs_distances(masks: np.ndarray) -> np.ndarray:
    """BFS hop distances between all pairs; -1 marks unreachable pairs.

    Vectorized over sources: one boolean frontier matrix is expanded by
    matrix multiplication until it stops growing.
    """
    masks = np.asarray(masks, dtype=np.int64)
    n = masks.shape[0]
    adj = np.zeros((n, n), dtype=bool)
    for v in range(n):
        row = int(masks[v])
        while row:
            u = (row & -row).bit_length() - 1
            adj[v, u] = True
            row &= row - 1
    dist = np.full((n, n), -1, dtype=np.int64)
    np.fill_diagonal(dist, 0)
    reach = np.eye(n, dtype=bool)
    frontier = reach.copy()
    d = 0
    while frontier.any():
        frontier = (frontier @ adj) & ~reach
        d += 1
        dist[frontier] = d
        reach |= frontier
    return dist


def _jacobi_dominant(a: np.ndarray) -> tuple[float, np.ndarray]:
    """Cyclic Jacobi diagonalization; returns the largest eigenpair."""
    n = a.shape[0]
    m = a.astype(np.float64).copy()
    vecs = np.eye(n)
    scale = np.sqrt(np.sum(m * m))
    if scale == 0.0:
        return 0.0, vecs[:, 0]
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
                rot = np.eye(n)
                rot[p, p] = c
                rot[q, q] = c
                rot[p, q] = s
                rot[q, p] = -s
                m = rot.T @ m @ rot
                vecs = vecs @ rot
    k = int(np.argmax(np.diag(m)))
    lam = float(m[k, k])
    vec = vecs[:, k]
    if vec.sum() < 0.0:
        vec = -vec
    return lam, vec / np.linalg.norm(vec)


def dominant_eigen(
    a: np.ndarray, tol: float, max_iter: int
) -> tuple[float, np.ndarray, float, int, bool]:
    """Dominant eigenpair of a symmetric nonnegative matrix.

    Power iteration from the all-ones vector (never orthogonal to the
    Perron direction) on the shifted matrix a + cI with c = max row sum;
    the shift makes the iteration matrix primitive, so oscillation between
    +/- extreme eigenvalues cannot stall it.  Rayleigh-quotient estimate,
    stop when ||a x - lam x|| <= tol * lam.  After max_iter/2 iterations
    the matrix is handed to cyclic Jacobi (close subdominant eigenvalues
    occur for distance matrices of joins).

    Returns (lam, vector, residual, iterations, converged).
    """
    a = np.asarray(a, dtype=np.float64)
    n = a.shape[0]
    if n == 1:
        return float(a[0, 0]), np.ones(1), 0.0, 0, True
    shift = float(np.max(np.abs(a).sum(axis=1)))
    x = np.full(n, 1.0 / np.sqrt(n))
    switch = max(max_iter // 2, 1)
    iters = 0
    while iters < switch:
        y = a @ x + shift * x
        lam_shifted = float(x @ y)
        lam = lam_shifted - shift
        resid = float(np.linalg.norm(y - lam_shifted * x))
        if resid <= tol * max(abs(lam), 1e-300):
            return lam, x, resid, iters, True
        norm_y = float(np.linalg.norm(y))
        if norm_y == 0.0:
            return 0.0, x, 0.0, iters, True
        x = y / norm_y
        iters += 1
    lam, vec = _jacobi_dominant(a)
    resid = float(np.linalg.norm(a @ vec - lam * vec))
    ok = resid <= tol * max(abs(lam), 1e-300)
    return lam, vec, resid, iters, ok


def _component_counts(masks: list[int], n: int, removed: int) -> tuple[int, int]:
    """(isolated, nontrivial-odd) component counts of the graph minus `removed`."""
    remaining = ((1 << n) - 1) & ~removed
    isolated = 0
    odd_nontrivial = 0
    unvisited = remaining
    while unvisited:
        comp = unvisited & -unvisited
        frontier = comp
        while frontier:
            nxt = 0
            scan = frontier
            while scan:
                v = (scan & -scan).bit_length() - 1
                nxt |= masks[v]
                scan &= scan - 1
            nxt &= remaining & ~comp
            comp |= nxt
            frontier = nxt
        unvisited &= ~comp
        size = comp.bit_count()
        if size == 1:
            isolated += 1
        elif size % 2 == 1:
            odd_nontrivial += 1
    return isolated, odd_nontrivial


def deficiency_scan(
    masks: np.ndarray, k: int, odd_weight: int
) -> tuple[int, np.ndarray]:
    """Exact maximum of odd_weight*odd(G-S) + k*i(G-S) - k|S| over all S.

    Returns (maximum, all maximizing subsets as bitmasks, ascending).
    """
    rows = [int(x) for x in np.asarray(masks, dtype=np.int64)]
    n = len(rows)
    best = None
    barriers: list[int] = []
    for s in range(1 << n):
        iso, oddnt = _component_counts(rows, n, s)
        val = odd_weight * oddnt + k * iso - k * s.bit_count()
        if best is None or val > best:
            best = val
            barriers = [s]
        elif val == best:
            barriers.append(s)
    return int(best), np.array(barriers, dtype=np.int64)


def violation_scan(
    masks: np.ndarray,
    k: int,
    odd_weight: int,
    slack: int,
    min_size: int,
    allow_full: bool,
) -> int:
    """First S (ascending bitmask order) violating
    odd_weight*odd(G-S) + k*i(G-S) <= k|S| - slack, or -1 if none.

    min_size=1 excludes the empty set; allow_full=False excludes S = V.
    """
    rows = [int(x) for x in np.asarray(masks, dtype=np.int64)]
    n = len(rows)
    for s in range(1 << n):
        size = s.bit_count()
        if size < min_size:
            continue
        if not allow_full and size == n:
            continue
        iso, oddnt = _component_counts(rows, n, s)
        if odd_weight * oddnt + k * iso > k * size - slack:
            return s
    return -1


def canonical_bits(masks: np.ndarray) -> int:
    """Minimum upper-triangle bit string over all vertex relabelings.

    Bits are packed in graph6 pair order (0,1),(0,2),(1,2),... with the
    first pair most significant, so the result is directly comparable to
    (and reconstructible as) a graph6 body.  Depth-first search places one
    label at a time; candidates are ordered by their adjacency column so
    the first descent is greedy, and branches whose partial string exceeds
    the incumbent prefix are cut (exact: every completion would be larger).
    """
    rows = [int(x) for x in np.asarray(masks, dtype=np.int64)]
    n = len(rows)
    if n < 2:
        return 0
    full_bits = n * (n - 1) // 2
    best = (1 << full_bits) - 1
    perm = [0] * n

    def place(j: int, used: int, partial: int) -> None:
        nonlocal best
        cands = []
        for w in range(n):
            if (used >> w) & 1:
                continue
            col = 0
            for i in range(j):
                col = (col << 1) | ((rows[perm[i]] >> w) & 1)
            cands.append((col, w))
        cands.sort()
        shift_out = full_bits - j * (j + 1) // 2
        for col, w in cands:
            trial = (partial << j) | col
            if trial > (best >> shift_out):
                break
            if j == n - 1:
                if trial < best:
                    best = trial
                continue
            perm[j] = w
            place(j + 1, used | (1 << w), trial)

    place(0, 0, 0)
    return best


def bmatch_search(
    eu: np.ndarray,
    ev: np.ndarray,
    n: int,
    targets: np.ndarray,
    cap: int,
    max_nodes: int,
) -> tuple[int, np.ndarray]:
    """Depth-first search for edge weights in 0..cap meeting every vertex
    target exactly.

    Edges must arrive pre-ordered.  Pruning: per-endpoint weight window
    [max(0, rem - cap*(other incident edges)), min(rem_u, rem_v, cap)],
    a global residual bound (remaining demand <= 2*cap*remaining edges),
    and a parity gate up front.  Weights are tried descending so dense
    feasible instances finish on the first plunge.

    Returns (status, weights): FOUND/ABSENT/BUDGET.
    """
    eu = np.asarray(eu, dtype=np.int64)
    ev = np.asarray(ev, dtype=np.int64)
    targets = [int(t) for t in np.asarray(targets, dtype=np.int64)]
    m = len(eu)
    weights = np.zeros(m, dtype=np.int64)
    total = sum(targets)
    if total % 2 == 1:
        return ABSENT, weights
    cnt = [0] * n
    for i in range(m):
        cnt[eu[i]] += 1
        cnt[ev[i]] += 1
    for v in range(n):
        if targets[v] > cap * cnt[v] or targets[v] < 0:
            return ABSENT, weights
    rem = targets
    nodes = 0

    def descend(pos: int, total_rem: int) -> int:
        nonlocal nodes
        if pos == m:
            return FOUND if total_rem == 0 else ABSENT
        u, v = int(eu[pos]), int(ev[pos])
        hi = min(rem[u], rem[v], cap)
        lo = max(0, rem[u] - cap * (cnt[u] - 1), rem[v] - cap * (cnt[v] - 1))
        cnt[u] -= 1
        cnt[v] -= 1
        outcome = ABSENT
        for w in range(hi, lo - 1, -1):
            nodes += 1
            if nodes > max_nodes:
                outcome = BUDGET
                break
            left = total_rem - 2 * w
            if left > 2 * cap * (m - pos - 1):
                break  # smaller w only leave more demand
            rem[u] -= w
            rem[v] -= w
            weights[pos] = w
            r = descend(pos + 1, left)
            rem[u] += w
            rem[v] += w
            if r != ABSENT:
                outcome = r
                break
        cnt[u] += 1
        cnt[v] += 1
        return outcome

    status = descend(0, total)
    if status != FOUND:
        weights[:] = 0
    return status, weights
