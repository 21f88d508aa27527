"""Pure Python census kernel.

For a special K inside [n-1], scans S_n once in lexicographic order,
keeps the minimal coset representatives of W / W_K, and tallies them by
(inversion count, R-set bitmask). The compiled twin in _kernel.pyx
implements the same contract; quadrics.kernel picks whichever is loadable.

Input validation lives in quadrics.kernel, not here.
"""

from itertools import permutations


def cell_census(n, k_members):
    """Return {(length, r_mask): count} over W^K.

    Bit i-1 of r_mask is set when i lies in R_K(w), i.e. when w applied to
    alpha_i + w_{0,K}(alpha_i) has a negative leading coefficient.
    """
    w0k = list(range(n))
    for i in k_members:
        w0k[i - 1], w0k[i] = w0k[i], w0k[i - 1]

    # Test vectors alpha_i + w_{0,K}(alpha_i) for i outside K, kept as their
    # supports: w permutes positions without collisions, so the leading sign
    # after acting is read off the support alone.
    tests = []
    for i in range(1, n):
        if i in k_members:
            continue
        coeff = {}
        for pos, c in ((i - 1, 1), (i, -1), (w0k[i - 1], 1), (w0k[i], -1)):
            coeff[pos] = coeff.get(pos, 0) + c
        support = tuple(sorted((pos, c) for pos, c in coeff.items() if c))
        tests.append((1 << (i - 1), support))

    k_positions = tuple(i - 1 for i in k_members)
    counts = {}
    for perm in permutations(range(n)):
        rep = True
        for pos in k_positions:
            if perm[pos] > perm[pos + 1]:
                rep = False
                break
        if not rep:
            continue
        inv = 0
        for a in range(n - 1):
            pa = perm[a]
            for b in range(a + 1, n):
                if pa > perm[b]:
                    inv += 1
        rmask = 0
        for bit, support in tests:
            best_pos = n
            best_coeff = 0
            for pos, c in support:
                p = perm[pos]
                if p < best_pos:
                    best_pos = p
                    best_coeff = c
            if best_coeff < 0:
                rmask |= bit
        key = (inv, rmask)
        counts[key] = counts.get(key, 0) + 1
    return counts
