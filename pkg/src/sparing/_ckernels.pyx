# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled maximum-weight independent set kernels (graphs of <= 64 vertices).

Same contract as ``_kernels_py``: masks are vertex bitsets, both entry
points return the best weight, the best mask, and an explored counter.
"""

from libc.stdlib cimport free, malloc

ctypedef unsigned long long u64


cdef inline int _lowbit_index(u64 m) nogil:
    cdef int i = 0
    while not (m & 1):
        m >>= 1
        i += 1
    return i


cdef inline bint _lex_less(u64 a, u64 b) nogil:
    cdef u64 la, lb
    while a and b:
        la = a & (~a + 1)
        lb = b & (~b + 1)
        if la != lb:
            return la < lb
        a ^= la
        b ^= lb
    return a == 0 and b != 0


def lex_less(a, b):
    """Order bitmasks as their sorted vertex tuples, lexicographically."""
    return bool(_lex_less(<u64> a, <u64> b))


def mwis_brute(adj, weights):
    """Enumerate every subset; max-weight independent one wins, lex-smallest on ties."""
    cdef int n = len(adj)
    if n > 64:
        raise ValueError("compiled kernel handles at most 64 vertices")
    if n == 0:
        return 0, 0, 1
    cdef u64* cadj = <u64*> malloc(n * sizeof(u64))
    cdef long long* cw = <long long*> malloc(n * sizeof(long long))
    if cadj == NULL or cw == NULL:
        free(cadj)
        free(cw)
        raise MemoryError()
    cdef int i
    for i in range(n):
        cadj[i] = <u64> adj[i]
        cw[i] = <long long> weights[i]

    cdef u64 mask, m, lb, best_mask = 0
    cdef u64 total = (<u64> 1) << n
    cdef long long w, best_w = 0
    cdef int v
    cdef bint independent
    with nogil:
        for mask in range(total):
            m = mask
            w = 0
            independent = True
            while m:
                lb = m & (~m + 1)
                v = _lowbit_index(lb)
                if cadj[v] & mask:
                    independent = False
                    break
                w += cw[v]
                m ^= lb
            if independent and (w > best_w or (w == best_w and _lex_less(mask, best_mask))):
                best_w = w
                best_mask = mask
    free(cadj)
    free(cw)
    return int(best_w), int(best_mask), int(total)


def mwis_bb(adj, weights, long long node_limit=0):
    """Exact branch and bound on the highest-degree undecided vertex.

    Bound: current weight plus the maxima of a greedy clique cover of
    the undecided vertices (admissible: an independent set meets each
    clique at most once).  Returns ``(best_weight, best_mask, explored,
    optimal)``.
    """
    cdef int n = len(adj)
    if n > 64:
        raise ValueError("compiled kernel handles at most 64 vertices")
    if n == 0:
        return 0, 0, 1, True
    cdef u64* cadj = <u64*> malloc(n * sizeof(u64))
    cdef long long* cw = <long long*> malloc(n * sizeof(long long))
    cdef int* order = <int*> malloc(n * sizeof(int))
    # Stack holds (avail, cur_mask, cur_w) triples; each branch pushes at
    # most two children per popped node, and depth is at most n.
    cdef int cap = 2 * n + 2
    cdef u64* st_avail = <u64*> malloc(cap * sizeof(u64))
    cdef u64* st_mask = <u64*> malloc(cap * sizeof(u64))
    cdef long long* st_w = <long long*> malloc(cap * sizeof(long long))
    if (cadj == NULL or cw == NULL or order == NULL or st_avail == NULL
            or st_mask == NULL or st_w == NULL):
        free(cadj); free(cw); free(order)
        free(st_avail); free(st_mask); free(st_w)
        raise MemoryError()

    cdef int i, j, v
    cdef u64 bit
    for i in range(n):
        cadj[i] = <u64> adj[i]
        cw[i] = <long long> weights[i]

    # Static degrees, descending; ties by lowest id (stable insertion sort).
    cdef int* deg = <int*> malloc(n * sizeof(int))
    if deg == NULL:
        free(cadj); free(cw); free(order)
        free(st_avail); free(st_mask); free(st_w)
        raise MemoryError()
    cdef u64 mm
    for i in range(n):
        deg[i] = 0
        mm = cadj[i]
        while mm:
            deg[i] += 1
            mm &= mm - 1
        order[i] = i
    for i in range(1, n):
        v = order[i]
        j = i - 1
        while j >= 0 and deg[order[j]] < deg[v]:
            order[j + 1] = order[j]
            j -= 1
        order[j + 1] = v

    cdef u64 avail0 = 0
    for i in range(n):
        if cw[i] > 0:
            avail0 |= (<u64> 1) << i

    cdef long long best_w = 0, cur_w, rem, clique_max, explored = 0
    cdef u64 best_mask = 0, avail, cur_mask, m, lb, uncovered, common, ub
    cdef int top = 0
    cdef bint truncated = False, changed
    st_avail[0] = avail0
    st_mask[0] = 0
    st_w[0] = 0
    top = 1
    with nogil:
        while top > 0:
            top -= 1
            avail = st_avail[top]
            cur_mask = st_mask[top]
            cur_w = st_w[top]
            explored += 1
            if node_limit and explored > node_limit:
                truncated = True
                break

            changed = True
            while changed:
                changed = False
                m = avail
                while m:
                    lb = m & (~m + 1)
                    m ^= lb
                    v = _lowbit_index(lb)
                    if cadj[v] & avail == 0:
                        cur_w += cw[v]
                        cur_mask |= lb
                        avail ^= lb
                        changed = True

            if avail == 0:
                if cur_w > best_w:
                    best_w = cur_w
                    best_mask = cur_mask
                continue

            rem = 0
            uncovered = avail
            while uncovered:
                lb = uncovered & (~uncovered + 1)
                uncovered ^= lb
                v = _lowbit_index(lb)
                clique_max = cw[v]
                common = cadj[v] & uncovered
                while common:
                    ub = common & (~common + 1)
                    j = _lowbit_index(ub)
                    uncovered ^= ub
                    if cw[j] > clique_max:
                        clique_max = cw[j]
                    common &= cadj[j]
                rem += clique_max
            if cur_w + rem <= best_w:
                continue

            for i in range(n):
                v = order[i]
                if avail >> v & 1:
                    break
            bit = (<u64> 1) << v
            st_avail[top] = avail & ~bit
            st_mask[top] = cur_mask
            st_w[top] = cur_w
            top += 1
            st_avail[top] = avail & ~(cadj[v] | bit)
            st_mask[top] = cur_mask | bit
            st_w[top] = cur_w + cw[v]
            top += 1

    free(cadj); free(cw); free(order); free(deg)
    free(st_avail); free(st_mask); free(st_w)
    return int(best_w), int(best_mask), int(explored), not truncated
