# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for subset enumeration and pixel encoding.

Semantics are defined by the pure-Python twins in pvss._pykernels (and the
generator contract in pvss.rng); this module only makes them fast.  The test
suite asserts bit-identical outputs between the two backends.
"""

import numpy as np

NAME = "cython"

ctypedef unsigned long long u64

cdef u64 GAMMA = 0x9E3779B97F4A7C15ULL
cdef u64 MULT1 = 0xBF58476D1CE4E5B9ULL
cdef u64 MULT2 = 0x94D049BB133111EBULL


cdef inline u64 mix64(u64 z) noexcept nogil:
    z = (z ^ (z >> 30)) * MULT1
    z = (z ^ (z >> 27)) * MULT2
    return z ^ (z >> 31)


cdef inline u64 rand_below(u64 bound, u64* state) noexcept nogil:
    # modulo rejection; (0 - bound) % bound == 2^64 mod bound in uint64
    cdef u64 cutoff, u
    if bound == 1:
        return 0
    cutoff = (0 - bound) % bound
    while True:
        state[0] = state[0] + GAMMA
        u = mix64(state[0])
        if u >= cutoff:
            return u % bound


def zero_counts_all_subsets(masks, mults, int n):
    """Zero-column counts for every row subset; see _pykernels for the contract."""
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    f_np = np.zeros(size, dtype=np.int64)
    cdef long long[:] f = f_np
    cdef u64[:] cmasks = np.ascontiguousarray(masks, dtype=np.uint64)
    cdef long long[:] cmults = np.ascontiguousarray(mults, dtype=np.int64)
    cdef Py_ssize_t i, b, base, step
    with nogil:
        for i in range(cmasks.shape[0]):
            f[<Py_ssize_t>cmasks[i]] += cmults[i]
        # subset-sum (zeta) transform, one bit at a time
        for b in range(n):
            step = (<Py_ssize_t>1) << b
            base = 0
            while base < size:
                for i in range(base + step, base + 2 * step):
                    f[i] += f[i - step]
                base += 2 * step
    return f_np[::-1].copy()


def encode_pixels(bits, weights0, sizes0, weights1, sizes1, int n, object m, object seed):
    """Per-pixel column sampling; see _pykernels for the contract."""
    cdef const unsigned char[:] cbits = np.ascontiguousarray(bits, dtype=np.uint8)
    cdef int[:] w0 = np.ascontiguousarray(weights0, dtype=np.int32)
    cdef u64[:] s0 = np.ascontiguousarray(sizes0, dtype=np.uint64)
    cdef int[:] w1 = np.ascontiguousarray(weights1, dtype=np.int32)
    cdef u64[:] s1 = np.ascontiguousarray(sizes1, dtype=np.uint64)
    cdef u64 cm = <u64>m
    cdef u64 seed_mixed = mix64(<u64>(int(seed) & 0xFFFFFFFFFFFFFFFF))
    cdef Py_ssize_t npix = cbits.shape[0], index
    out_np = np.zeros(npix, dtype=np.uint64)
    cdef u64[:] out = out_np
    cdef u64 state, r, mask
    cdef int idx[64]
    cdef int j, t, swap, tmp
    cdef int nw0 = w0.shape[0], nw1 = w1.shape[0]

    if n > 64:
        raise ValueError("n must be at most 64")

    with nogil:
        for index in range(npix):
            state = mix64(seed_mixed ^ (<u64>index * GAMMA))

            # class pick: uniform column index in [0, m)
            r = rand_below(cm, &state)
            j = 0
            if cbits[index] == 0:
                for t in range(nw0):
                    if r < s0[t]:
                        j = w0[t]
                        break
                    r -= s0[t]
            else:
                for t in range(nw1):
                    if r < s1[t]:
                        j = w1[t]
                        break
                    r -= s1[t]

            # uniform j-subset of rows via partial Fisher-Yates
            for t in range(n):
                idx[t] = t
            mask = 0
            for t in range(j):
                swap = <int>(rand_below(<u64>(n - t), &state)) + t
                tmp = idx[t]
                idx[t] = idx[swap]
                idx[swap] = tmp
                mask |= (<u64>1) << idx[t]
            out[index] = mask
    return out_np
