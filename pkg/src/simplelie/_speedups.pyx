# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled verification kernel; algorithmic twin of _kernels_py.jacobi_scan."""

from cpython.mem cimport PyMem_Free, PyMem_Malloc


cdef long* _to_long_array(seq) except NULL:
    cdef Py_ssize_t n = len(seq)
    cdef long* buf = <long*> PyMem_Malloc(n * sizeof(long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = seq[i]
    return buf


def jacobi_scan(int m, int rank, int npos, sum_table, nmat, pairing, coroot):
    """See _kernels_py.jacobi_scan; identical contract."""
    cdef long* st = _to_long_array(sum_table)
    cdef long* nm = _to_long_array(nmat)
    cdef long* pr = _to_long_array(pairing)
    flat_coroot = [x for row in coroot for x in row]
    cdef long* cr = _to_long_array(flat_coroot)

    cdef long count = 0
    cdef int a, b, c, k
    cdef long arow, brow, crow
    cdef long sab, sbc, sac, nab, t, acc, negsab
    cdef long x, y, z
    cdef bint ok
    witness = None
    try:
        for a in range(m - 2):
            arow = a * m
            for b in range(a + 1, m - 1):
                brow = b * m
                sab = st[arow + b]
                nab = nm[arow + b] if sab >= 0 else 0
                for c in range(b + 1, m):
                    count += 1
                    sbc = st[brow + c]
                    sac = st[arow + c]
                    if sab == -2 and sbc == -2 and sac == -2:
                        continue
                    crow = c * m
                    if sab >= 0:
                        negsab = sab + npos if sab < npos else sab - npos
                    else:
                        negsab = -1
                    if sab >= 0 and c == negsab:
                        ok = True
                        x = nab
                        y = nm[brow + c]
                        z = nm[crow + a]
                        for k in range(rank):
                            if (x * cr[sab * rank + k]
                                    + y * cr[sbc * rank + k]
                                    + z * cr[sac * rank + k]):
                                ok = False
                                break
                        if not ok:
                            witness = (a, b, c)
                            return False, count, witness
                        continue
                    acc = 0
                    if sab == -1:
                        acc += pr[crow + a]
                    elif sab >= 0:
                        t = st[sab * m + c]
                        if t >= 0:
                            acc += nab * nm[sab * m + c]
                    if sbc == -1:
                        acc += pr[arow + b]
                    elif sbc >= 0:
                        t = st[sbc * m + a]
                        if t >= 0:
                            acc += nm[brow + c] * nm[sbc * m + a]
                    if sac == -1:
                        acc += pr[brow + c]
                    elif sac >= 0:
                        t = st[sac * m + b]
                        if t >= 0:
                            acc += nm[crow + a] * nm[sac * m + b]
                    if acc:
                        witness = (a, b, c)
                        return False, count, witness
        return True, count, None
    finally:
        PyMem_Free(st)
        PyMem_Free(nm)
        PyMem_Free(pr)
        PyMem_Free(cr)
