"""Pure-Python verification kernel.

`jacobi_scan` walks every unordered triple of root vectors and checks the
Jacobi identity against the structure-constant table.  This is the hot loop
of the whole package (2.3M triples for E8); the compiled twin in
`_speedups.pyx` runs the identical algorithm.
"""

from __future__ import annotations


def jacobi_scan(m, rank, npos, sum_table, nmat, pairing, coroot):
    """Check Jacobi on all triples of distinct root vectors.

    Arguments are flat integer tables: sum_table[i*m+j] is the index of
    root_i + root_j (-1 for zero, -2 for non-root), nmat the N values,
    pairing[c*m+a] = <root_c, root_a^v>, coroot[i] the integer expansion of
    root_i^v over the simple coroots.

    Returns (ok, triples_scanned, witness_or_None).
    """
    count = 0
    for a in range(m - 2):
        arow = a * m
        nega = a + npos if a < npos else a - npos
        for b in range(a + 1, m - 1):
            brow = b * m
            sab = sum_table[arow + b]
            nab = nmat[arow + b] if sab >= 0 else 0
            for c in range(b + 1, m):
                count += 1
                sbc = sum_table[brow + c]
                sac = sum_table[arow + c]
                if sab == -2 and sbc == -2 and sac == -2:
                    continue
                crow = c * m
                if sab >= 0 and c == (sab + npos if sab < npos else sab - npos):
                    # a+b+c = 0: the identity lands in the Cartan
                    ok = True
                    va = coroot[sab]
                    vb = coroot[sbc]
                    vc = coroot[sac]
                    x = nab
                    y = nmat[brow + c]
                    z = nmat[crow + a]
                    for k in range(rank):
                        if x * va[k] + y * vb[k] + z * vc[k]:
                            ok = False
                            break
                    if not ok:
                        return False, count, (a, b, c)
                    continue
                acc = 0
                # [[Ea,Eb],Ec]
                if sab == -1:
                    acc += pairing[crow + a]
                elif sab >= 0:
                    t = sum_table[sab * m + c]
                    if t >= 0:
                        acc += nab * nmat[sab * m + c]
                # [[Eb,Ec],Ea]
                if sbc == -1:
                    acc += pairing[arow + b]
                elif sbc >= 0:
                    t = sum_table[sbc * m + a]
                    if t >= 0:
                        acc += nmat[brow + c] * nmat[sbc * m + a]
                # [[Ec,Ea],Eb]
                if sac == -1:
                    # pair (c, a) sums to zero: contributes <b, c^v>
                    acc += pairing[brow + c]
                elif sac >= 0:
                    t = sum_table[sac * m + b]
                    if t >= 0:
                        acc += nmat[crow + a] * nmat[sac * m + b]
                if acc:
                    return False, count, (a, b, c)
    return True, count, None
