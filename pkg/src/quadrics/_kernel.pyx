# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled census kernel; the contract mirrors quadrics._kernel_py.

Scans S_n in lexicographic order with the classic next-permutation step,
filters to minimal coset representatives of W / W_K, and tallies them by
(inversion count, R-set bitmask) in a flat C array before handing back a
Python dict.
"""

from libc.stdlib cimport calloc, free


def cell_census(int n, tuple k_members):
    cdef int perm[16]
    cdef int kpos[16]
    cdef int test_bit[16]
    cdef int sup_len[16]
    cdef int sup_pos[16][4]
    cdef int sup_coeff[16][4]
    cdef int w0k[16]
    cdef int cvec[16]
    cdef int nk = 0, ntest = 0
    cdef int i, j, a, b, t, s, m, ok
    cdef int inv, rmask, best_pos, best_coeff, p, tmp, lo, hi
    cdef int width, maxinv
    cdef long long idx, size
    cdef long long *counts

    if n < 1 or n > 14:
        raise ValueError("supported ranks are 1 <= n <= 14")

    for i in range(n):
        w0k[i] = i
    for m in k_members:
        w0k[m - 1], w0k[m] = w0k[m], w0k[m - 1]
        kpos[nk] = m - 1
        nk += 1

    kset = set(k_members)
    for m in range(1, n):
        if m in kset:
            continue
        for j in range(n):
            cvec[j] = 0
        cvec[m - 1] += 1
        cvec[m] -= 1
        cvec[w0k[m - 1]] += 1
        cvec[w0k[m]] -= 1
        test_bit[ntest] = 1 << (m - 1)
        sup_len[ntest] = 0
        for j in range(n):
            if cvec[j] != 0:
                sup_pos[ntest][sup_len[ntest]] = j
                sup_coeff[ntest][sup_len[ntest]] = cvec[j]
                sup_len[ntest] += 1
        ntest += 1

    width = n - 1
    maxinv = (n * (n - 1)) // 2
    size = (<long long> (maxinv + 1)) << width
    counts = <long long *> calloc(size, sizeof(long long))
    if counts is NULL:
        raise MemoryError()

    for i in range(n):
        perm[i] = i

    try:
        while True:
            ok = 1
            for j in range(nk):
                i = kpos[j]
                if perm[i] > perm[i + 1]:
                    ok = 0
                    break
            if ok:
                inv = 0
                for a in range(n - 1):
                    p = perm[a]
                    for b in range(a + 1, n):
                        if p > perm[b]:
                            inv += 1
                rmask = 0
                for t in range(ntest):
                    best_pos = n
                    best_coeff = 0
                    for s in range(sup_len[t]):
                        p = perm[sup_pos[t][s]]
                        if p < best_pos:
                            best_pos = p
                            best_coeff = sup_coeff[t][s]
                    if best_coeff < 0:
                        rmask |= test_bit[t]
                idx = ((<long long> inv) << width) | rmask
                counts[idx] += 1

            # advance to the lexicographic successor
            i = n - 2
            while i >= 0 and perm[i] > perm[i + 1]:
                i -= 1
            if i < 0:
                break
            j = n - 1
            while perm[j] < perm[i]:
                j -= 1
            tmp = perm[i]; perm[i] = perm[j]; perm[j] = tmp
            lo = i + 1
            hi = n - 1
            while lo < hi:
                tmp = perm[lo]; perm[lo] = perm[hi]; perm[hi] = tmp
                lo += 1
                hi -= 1

        result = {}
        for inv in range(maxinv + 1):
            for rmask in range(1 << width):
                idx = ((<long long> inv) << width) | rmask
                if counts[idx] != 0:
                    result[(inv, rmask)] = counts[idx]
    finally:
        free(counts)
    return result
