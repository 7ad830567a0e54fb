# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Streaming rank accumulator over F_p (compiled backend).

Same algorithm and semantics as hhprime._fppure.RankAccumulator: incremental
row-echelon reduction with a dense scratch buffer and a column min-heap, with
pivot rows stored in a growable arena.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


cdef class RankAccumulator:
    cdef public int p
    cdef public Py_ssize_t ncols
    cdef public Py_ssize_t rank

    cdef unsigned char[::1] buf
    cdef long long[::1] piv
    cdef int[::1] invtab

    cdef cnp.int64_t[::1] heap
    cdef Py_ssize_t hsize

    cdef int[::1] dcols
    cdef unsigned char[::1] dvals
    cdef long long dused

    cdef long long[::1] rstart
    cdef int[::1] rlen
    cdef Py_ssize_t nrows

    cdef object _heap_arr, _dcols_arr, _dvals_arr, _rstart_arr, _rlen_arr

    def __init__(self, Py_ssize_t ncols, int p):
        if p < 2:
            raise ValueError("p must be a prime >= 2")
        if p > 255:
            raise ValueError("compiled backend supports p <= 255")
        self.p = p
        self.ncols = ncols
        self.rank = 0
        self.buf = np.zeros(max(ncols, 1), dtype=np.uint8)
        self.piv = np.full(max(ncols, 1), -1, dtype=np.int64)
        inv = np.zeros(p, dtype=np.int32)
        for a in range(1, p):
            inv[a] = pow(a, p - 2, p)
        self.invtab = inv
        self._heap_arr = np.zeros(1024, dtype=np.int64)
        self.heap = self._heap_arr
        self.hsize = 0
        self._dcols_arr = np.zeros(1 << 16, dtype=np.int32)
        self._dvals_arr = np.zeros(1 << 16, dtype=np.uint8)
        self.dcols = self._dcols_arr
        self.dvals = self._dvals_arr
        self.dused = 0
        self._rstart_arr = np.zeros(1024, dtype=np.int64)
        self._rlen_arr = np.zeros(1024, dtype=np.int32)
        self.rstart = self._rstart_arr
        self.rlen = self._rlen_arr
        self.nrows = 0

    @property
    def full(self):
        return self.rank == self.ncols

    cdef void _grow_heap(self):
        new = np.zeros(self.heap.shape[0] * 2, dtype=np.int64)
        new[: self.hsize] = np.asarray(self._heap_arr)[: self.hsize]
        self._heap_arr = new
        self.heap = new

    cdef void _grow_data(self, long long extra):
        cdef long long need = self.dused + extra
        cdef long long cap = self.dcols.shape[0]
        if need <= cap:
            return
        while cap < need:
            cap *= 2
        ncols_new = np.zeros(cap, dtype=np.int32)
        nvals_new = np.zeros(cap, dtype=np.uint8)
        ncols_new[: self.dused] = np.asarray(self._dcols_arr)[: self.dused]
        nvals_new[: self.dused] = np.asarray(self._dvals_arr)[: self.dused]
        self._dcols_arr = ncols_new
        self._dvals_arr = nvals_new
        self.dcols = ncols_new
        self.dvals = nvals_new

    cdef void _grow_rows(self):
        cap = self.rstart.shape[0] * 2
        ns = np.zeros(cap, dtype=np.int64)
        nl = np.zeros(cap, dtype=np.int32)
        ns[: self.nrows] = np.asarray(self._rstart_arr)[: self.nrows]
        nl[: self.nrows] = np.asarray(self._rlen_arr)[: self.nrows]
        self._rstart_arr = ns
        self._rlen_arr = nl
        self.rstart = ns
        self.rlen = nl

    cdef inline void _hpush(self, cnp.int64_t c):
        cdef Py_ssize_t i, par
        if self.hsize == self.heap.shape[0]:
            self._grow_heap()
        i = self.hsize
        self.hsize += 1
        self.heap[i] = c
        while i > 0:
            par = (i - 1) >> 1
            if self.heap[par] <= self.heap[i]:
                break
            self.heap[par], self.heap[i] = self.heap[i], self.heap[par]
            i = par

    cdef inline cnp.int64_t _hpop(self):
        cdef cnp.int64_t top = self.heap[0]
        cdef Py_ssize_t i = 0, child
        cdef Py_ssize_t n
        self.hsize -= 1
        n = self.hsize
        if n > 0:
            self.heap[0] = self.heap[n]
            while True:
                child = 2 * i + 1
                if child >= n:
                    break
                if child + 1 < n and self.heap[child + 1] < self.heap[child]:
                    child += 1
                if self.heap[i] <= self.heap[child]:
                    break
                self.heap[i], self.heap[child] = self.heap[child], self.heap[i]
                i = child
        return top

    cdef bint _add_one(self, const int[:] cols, const unsigned char[:] vals,
                       Py_ssize_t m):
        cdef int p = self.p
        cdef Py_ssize_t t
        cdef cnp.int64_t c, c2
        cdef int w, w2, old, new
        cdef long long r, k, start
        cdef int length, inv
        self.hsize = 0
        for t in range(m):
            c = cols[t]
            if c < 0:
                continue
            w = vals[t] % p
            if w == 0:
                continue
            if self.buf[c] == 0:
                self._hpush(c)
            self.buf[c] = <unsigned char>((self.buf[c] + w) % p)
        while self.hsize > 0:
            c = self._hpop()
            w = self.buf[c]
            if w == 0:
                continue
            r = self.piv[c]
            if r < 0:
                inv = self.invtab[w]
                self._grow_data(<long long>self.hsize + 1)
                start = self.dused
                self.dcols[self.dused] = <int>c
                self.dvals[self.dused] = 1
                self.dused += 1
                self.buf[c] = 0
                while self.hsize > 0:
                    c2 = self._hpop()
                    w2 = self.buf[c2]
                    if w2 != 0:
                        self.dcols[self.dused] = <int>c2
                        self.dvals[self.dused] = <unsigned char>((w2 * inv) % p)
                        self.dused += 1
                        self.buf[c2] = 0
                if self.nrows == self.rstart.shape[0]:
                    self._grow_rows()
                self.rstart[self.nrows] = start
                self.rlen[self.nrows] = <int>(self.dused - start)
                self.piv[c] = self.nrows
                self.nrows += 1
                self.rank += 1
                return True
            start = self.rstart[r]
            length = self.rlen[r]
            for k in range(start, start + length):
                c2 = self.dcols[k]
                old = self.buf[c2]
                new = (old - w * self.dvals[k]) % p
                if new < 0:
                    new += p
                if old == 0 and new != 0:
                    self._hpush(c2)
                self.buf[c2] = <unsigned char>new
        return False

    def add_row(self, cols, vals):
        cdef cnp.ndarray[cnp.int32_t, ndim=1] c = np.ascontiguousarray(cols, dtype=np.int32)
        cdef cnp.ndarray[cnp.uint8_t, ndim=1] v = np.ascontiguousarray(
            np.asarray(vals, dtype=np.int64) % self.p, dtype=np.uint8)
        if c.shape[0] != v.shape[0]:
            raise ValueError("cols/vals length mismatch")
        return bool(self._add_one(c, v, c.shape[0]))

    def add_rows(self, cols2d, vals2d):
        """Batched add; rows are the first axis, -1 columns are padding."""
        cdef cnp.ndarray[cnp.int32_t, ndim=2] c = np.ascontiguousarray(cols2d, dtype=np.int32)
        cdef cnp.ndarray[cnp.uint8_t, ndim=2] v = np.ascontiguousarray(
            np.asarray(vals2d, dtype=np.int64) % self.p, dtype=np.uint8)
        if c.shape[0] != v.shape[0] or c.shape[1] != v.shape[1]:
            raise ValueError("cols/vals shape mismatch")
        cdef Py_ssize_t i, n = c.shape[0], m = c.shape[1]
        cdef Py_ssize_t added = 0
        for i in range(n):
            if self._add_one(c[i], v[i], m):
                added += 1
        return added
