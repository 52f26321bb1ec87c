# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled bitmask-backtracking kernels.

Same contract as the pure versions in ``antiauto._kernel``: ``diff`` is the
flattened n*n difference-index table, masks are one bit per element index.
Counting accumulates in uint64 (callers keep n <= 20 so n! fits).
"""

from libc.stdint cimport uint64_t

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #  define ANTIAUTO_CTZ(x) ((int)__builtin_ctzll(x))
    #  define ANTIAUTO_POPCOUNT(x) ((int)__builtin_popcountll(x))
    #else
    static int ANTIAUTO_CTZ(unsigned long long x)
    { int c = 0; while (!(x & 1ULL)) { x >>= 1; ++c; } return c; }
    static int ANTIAUTO_POPCOUNT(unsigned long long x)
    { int c = 0; while (x) { x &= x - 1; ++c; } return c; }
    #endif
    """
    int ANTIAUTO_CTZ(unsigned long long x) nogil
    int ANTIAUTO_POPCOUNT(unsigned long long x) nogil


cdef uint64_t _count(const int* diff, int n, int pos,
                     uint64_t used_img, uint64_t used_diff,
                     uint64_t full) noexcept nogil:
    if pos == n:
        return 1
    cdef const int* row = diff + <Py_ssize_t> pos * n
    cdef uint64_t total = 0
    cdef uint64_t free_img = full & ~used_img
    cdef uint64_t bit, dbit
    cdef int img
    while free_img:
        img = ANTIAUTO_CTZ(free_img)
        bit = free_img & (~free_img + 1)
        free_img &= free_img - 1
        dbit = (<uint64_t> 1) << row[img]
        if not (used_diff & dbit):
            total += _count(diff, n, pos + 1, used_img | bit, used_diff | dbit, full)
    return total


cdef int _first(const int* diff, int n, int start,
                uint64_t used_img, uint64_t used_diff,
                uint64_t full, int* out) noexcept nogil:
    # Iterative DFS; cand[pos] holds the image candidates not yet tried there.
    cdef uint64_t cand[65]
    cdef int pos = start
    cdef int img
    cdef uint64_t bit, dbit
    if pos == n:
        return 1
    cand[pos] = full & ~used_img
    while True:
        if cand[pos] == 0:
            pos -= 1
            if pos < start:
                return 0
            img = out[pos]
            used_img &= ~((<uint64_t> 1) << img)
            used_diff &= ~((<uint64_t> 1) << diff[<Py_ssize_t> pos * n + img])
            continue
        img = ANTIAUTO_CTZ(cand[pos])
        cand[pos] &= cand[pos] - 1
        dbit = (<uint64_t> 1) << diff[<Py_ssize_t> pos * n + img]
        if used_diff & dbit:
            continue
        bit = (<uint64_t> 1) << img
        out[pos] = img
        used_img |= bit
        used_diff |= dbit
        pos += 1
        if pos == n:
            return 1
        cand[pos] = full & ~used_img


cdef int _mrv(const int* diff, const int* inv, const int* vorder, int n,
              uint64_t used_img, uint64_t unassigned, uint64_t full,
              uint64_t* diff_ok, int* out, long long* nodes_left) noexcept nogil:
    # Fail-first search: recurse into the unassigned position with the fewest
    # feasible images (ties to the lowest index), images tried in ``vorder``.
    # diff_ok[p] masks the images whose difference at p is still unused; the
    # difference d and image bit inv[p*n+d] are in bijection per position, so
    # assigning d clears exactly one fresh bit per position (undo is exact).
    # Returns 1 found, 0 exhausted, -1 node budget hit (budget 0 = unbounded).
    if unassigned == 0:
        return 1
    if nodes_left[0] > 0:
        nodes_left[0] -= 1
        if nodes_left[0] == 0:
            return -1
    cdef uint64_t free_img = full & ~used_img
    cdef uint64_t m = unassigned
    cdef int best_p = -1, best_c = 65
    cdef int p, c, j, d, q, r, sub
    while m:
        p = ANTIAUTO_CTZ(m)
        m &= m - 1
        c = ANTIAUTO_POPCOUNT(diff_ok[p] & free_img)
        if c == 0:
            return 0
        if c < best_c:
            best_c = c
            best_p = p
            if c == 1:
                break
    cdef uint64_t feas = diff_ok[best_p] & free_img
    cdef uint64_t rest = unassigned & ~((<uint64_t> 1) << best_p)
    for r in range(n):
        j = vorder[r]
        if not (feas & ((<uint64_t> 1) << j)):
            continue
        d = diff[<Py_ssize_t> best_p * n + j]
        for q in range(n):
            diff_ok[q] &= ~((<uint64_t> 1) << inv[<Py_ssize_t> q * n + d])
        out[best_p] = j
        sub = _mrv(diff, inv, vorder, n, used_img | ((<uint64_t> 1) << j), rest,
                   full, diff_ok, out, nodes_left)
        if sub == 1:
            return 1
        for q in range(n):
            diff_ok[q] |= (<uint64_t> 1) << inv[<Py_ssize_t> q * n + d]
        if sub == -1:
            return -1
    return 0


cdef int _setup_masks(const int* diff, int n, prefix,
                      uint64_t* used_img, uint64_t* used_diff) except -1:
    cdef uint64_t ui = 0, ud = 0, bit, dbit
    cdef int pos = 0, img
    for value in prefix:
        img = value
        if img < 0 or img >= n:
            raise ValueError("prefix image out of range")
        bit = (<uint64_t> 1) << img
        dbit = (<uint64_t> 1) << diff[<Py_ssize_t> pos * n + img]
        if (ui & bit) or (ud & dbit):
            return 0  # conflicting prefix
        ui |= bit
        ud |= dbit
        pos += 1
    used_img[0] = ui
    used_diff[0] = ud
    return 1


def count_completions(int n, diff, prefix=()):
    """Count full assignments extending ``prefix``; 0 if the prefix conflicts."""
    if n < 1 or n > 64:
        raise ValueError("compiled kernel supports 1 <= n <= 64")
    cdef int[::1] d = diff
    if d.shape[0] != n * n:
        raise ValueError("difference table must have n*n entries")
    cdef uint64_t used_img = 0, used_diff = 0
    if not _setup_masks(&d[0], n, prefix, &used_img, &used_diff):
        return 0
    cdef int start = len(prefix)
    cdef uint64_t full = ((<uint64_t> 1) << n) - 1 if n < 64 else <uint64_t> 0xFFFFFFFFFFFFFFFF
    cdef uint64_t total
    with nogil:
        total = _count(&d[0], n, start, used_img, used_diff, full)
    return total


def first_completion(int n, diff, prefix=()):
    """Lexicographically first full assignment extending ``prefix``, or None."""
    if n < 1 or n > 64:
        raise ValueError("compiled kernel supports 1 <= n <= 64")
    cdef int[::1] d = diff
    if d.shape[0] != n * n:
        raise ValueError("difference table must have n*n entries")
    cdef uint64_t used_img = 0, used_diff = 0
    if not _setup_masks(&d[0], n, prefix, &used_img, &used_diff):
        return None
    cdef int start = len(prefix)
    cdef uint64_t full = ((<uint64_t> 1) << n) - 1 if n < 64 else <uint64_t> 0xFFFFFFFFFFFFFFFF
    cdef int out[64]
    cdef int pos, found
    for pos in range(start):
        out[pos] = prefix[pos]
    with nogil:
        found = _first(&d[0], n, start, used_img, used_diff, full, out)
    if not found:
        return None
    return [out[pos] for pos in range(n)]


def mrv_attempt(int n, diff, prefix, vorder, long long max_nodes):
    """One fail-first attempt with the given image try-order and node cap.

    Returns (status, table-or-None): status 1 found, 0 space exhausted,
    -1 node cap hit.  ``max_nodes`` 0 means unbounded.
    """
    if n < 1 or n > 64:
        raise ValueError("compiled kernel supports 1 <= n <= 64")
    cdef int[::1] d = diff
    if d.shape[0] != n * n:
        raise ValueError("difference table must have n*n entries")
    cdef uint64_t used_img = 0, used_diff = 0
    if not _setup_masks(&d[0], n, prefix, &used_img, &used_diff):
        return 0, None
    cdef uint64_t full = ((<uint64_t> 1) << n) - 1 if n < 64 else <uint64_t> 0xFFFFFFFFFFFFFFFF
    # inv[p*n + dd] = the unique image j with diff[p*n + j] == dd
    cdef int[::1] inv = d.copy()
    cdef int p, j, dd, q
    for p in range(n):
        for j in range(n):
            inv[p * n + d[p * n + j]] = j
    cdef uint64_t diff_ok[64]
    for p in range(n):
        diff_ok[p] = full
    cdef uint64_t m = used_diff
    while m:
        dd = ANTIAUTO_CTZ(m)
        m &= m - 1
        for q in range(n):
            diff_ok[q] &= ~((<uint64_t> 1) << inv[q * n + dd])
    cdef int vord[64]
    if len(vorder) != n:
        raise ValueError("vorder must list all image indices")
    for p in range(n):
        vord[p] = vorder[p]
    cdef int out[64]
    cdef uint64_t unassigned = full
    for p in range(len(prefix)):
        out[p] = prefix[p]
        unassigned &= ~((<uint64_t> 1) << p)
    cdef long long nodes_left = max_nodes + 1 if max_nodes > 0 else 0
    cdef int found
    with nogil:
        found = _mrv(&d[0], &inv[0], vord, n, used_img, unassigned, full,
                     diff_ok, out, &nodes_left)
    if found != 1:
        return found, None
    return 1, [out[p] for p in range(n)]
