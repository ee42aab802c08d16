# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitmask kernel for the integer search.

Same algorithm and results as _kernel_py, with masks held in C
unsigned 64-bit integers (so n <= 62); the Python wrapper falls back to
the pure implementation above that limit.  See _kernel_py for the
algorithm notes.
"""

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

MAX_N = 62


def check_violation(mask, e, k, n):
    """Witness (x, y, z) created by adding e to the mask-set, or None."""
    cdef u64 mp = <u64> mask | (<u64> 1 << (e - 1))
    cdef u64 t = mp
    cdef long long x, y, m
    cdef long long ce = e, ck = k, cn = n
    while t:
        m = __builtin_ctzll(t) + 1
        t &= t - 1
        x = ck * m - ce
        if 1 <= x <= cn and (mp >> (x - 1)) & 1:
            return (min(ce, x), max(ce, x), m)
        y = ck * ce - m
        if 1 <= y <= cn and (mp >> (y - 1)) & 1:
            return (min(m, y), max(m, y), ce)
    return None


cdef u64 _new_forbidden(u64 mask, long long e, long long k, long long n) nogil:
    cdef u64 mp = mask | (<u64> 1 << (e - 1))
    cdef u64 forb = 0
    cdef u64 t = mp
    cdef long long m, v
    cdef long long ke = k * e
    if ke % 2 == 0 and 1 <= ke // 2 <= n:
        forb |= <u64> 1 << (ke // 2 - 1)
    while t:
        m = __builtin_ctzll(t) + 1
        t &= t - 1
        v = k * m - e
        if 1 <= v <= n:
            forb |= <u64> 1 << (v - 1)
        v = ke - m
        if 1 <= v <= n:
            forb |= <u64> 1 << (v - 1)
        if (e + m) % k == 0:
            v = (e + m) // k
            if 1 <= v <= n:
                forb |= <u64> 1 << (v - 1)
    return forb


def new_forbidden(mask, e, k, n):
    """Bits of later elements that including e makes unusable."""
    return _new_forbidden(<u64> mask, e, k, n)


cdef class _Search:
    cdef int n, k, cap
    cdef bint enumerate_all
    cdef int best
    cdef long long count, nodes
    cdef u64 full
    cdef list stored

    def __init__(self, int n, int k, bint enumerate_all, int cap):
        self.n = n
        self.k = k
        self.cap = cap
        self.enumerate_all = enumerate_all
        self.best = 0
        self.count = 0
        self.nodes = 0
        self.full = ((<u64> 1) << n) - 1
        self.stored = []

    cdef void dfs(self, int pos, u64 mask, u64 forb, int size):
        cdef int rem
        self.nodes += 1
        while pos <= self.n and (forb >> (pos - 1)) & 1:
            pos += 1
        if pos > self.n:
            if size > self.best:
                self.best = size
                self.count = 1
                del self.stored[:]
                if self.enumerate_all:
                    self.stored.append(mask)
            elif size == self.best:
                self.count += 1
                if self.enumerate_all and len(self.stored) < self.cap:
                    self.stored.append(mask)
            return
        rem = __builtin_popcountll(~forb & self.full & (self.full << (pos - 1)))
        if size + rem < self.best:
            return
        if self.k != 2:  # including anything violates x + x = 2x when k = 2
            self.dfs(pos + 1, mask | ((<u64> 1) << (pos - 1)),
                     forb | _new_forbidden(mask, pos, self.k, self.n), size + 1)
        self.dfs(pos + 1, mask, forb, size)


def search(n, k, enumerate_all=False, cap=10000):
    """Exact maximum k-sum-free subset of {1..n} with extremal counting.

    Returns (max_size, extremal_count, stored_masks, nodes).
    """
    if n > MAX_N:
        raise ValueError(f"compiled kernel holds masks in 64 bits; n <= {MAX_N}")
    s = _Search(n, k, enumerate_all, cap)
    s.dfs(1, 0, 0, 0)
    return s.best, s.count, s.stored, s.nodes


cdef class _Naive:
    cdef int n, k
    cdef int best
    cdef long long count, nodes

    def __init__(self, int n, int k):
        self.n = n
        self.k = k
        self.best = 0
        self.count = 0
        self.nodes = 0

    cdef bint fits(self, u64 mask, int e):
        cdef u64 mp = mask | ((<u64> 1) << (e - 1))
        cdef u64 t = mp
        cdef long long x, y, m
        while t:
            m = __builtin_ctzll(t) + 1
            t &= t - 1
            x = <long long> self.k * m - e
            if 1 <= x <= self.n and (mp >> (x - 1)) & 1:
                return False
            y = <long long> self.k * e - m
            if 1 <= y <= self.n and (mp >> (y - 1)) & 1:
                return False
        return True

    cdef void dfs(self, int pos, u64 mask, int size):
        self.nodes += 1
        if pos > self.n:
            if size > self.best:
                self.best = size
                self.count = 1
            elif size == self.best:
                self.count += 1
            return
        if self.fits(mask, pos):
            self.dfs(pos + 1, mask | ((<u64> 1) << (pos - 1)), size + 1)
        self.dfs(pos + 1, mask, size)


def search_naive(n, k):
    """Unpruned exhaustive enumeration; oracle for `search`."""
    if n > MAX_N:
        raise ValueError(f"compiled kernel holds masks in 64 bits; n <= {MAX_N}")
    s = _Naive(n, k)
    s.dfs(1, 0, 0)
    return s.best, s.count, s.nodes
