# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled enumeration kernels; same contract as ``_pykernels``."""

BACKEND = "cython"

cdef enum:
    MAXN = 32


cdef void _chain_rec(int* v, int n, int k, int last, int d, list out):
    cdef int i, j, lo, best, x
    out.append((tuple([v[t] for t in range(n)]), d))
    for i in range(k):
        lo = v[i]
        if lo <= last:
            continue
        best = n + 1
        for j in range(i + 1, n):
            x = v[j]
            if lo < x < best:
                best = x
                if j >= k:
                    v[i] = x
                    v[j] = lo
                    _chain_rec(v, n, k, lo, d + 1, out)
                    v[i] = lo
                    v[j] = x


def increasing_chain_ends(u, int k):
    cdef int n = len(u)
    cdef int v[MAXN]
    cdef int t
    if n > MAXN:
        raise ValueError("n too large for compiled kernel")
    for t in range(n):
        v[t] = u[t]
    out = []
    _chain_rec(v, n, k, 0, 0, out)
    return out


cdef struct PdState:
    int n
    int ncell
    int target
    int pi[MAXN]
    int pos[MAXN + 1]
    int cr[MAXN * MAXN]
    int cc[MAXN * MAXN]
    int chosen[MAXN * MAXN]
    int nchosen


cdef void _pd_rec(PdState* st, int idx, int ell, list out):
    cdef int r, c, s, a, b, t
    if ell == st.target:
        out.append(tuple([(st.cr[st.chosen[t]], st.cc[st.chosen[t]]) for t in range(st.nchosen)]))
        return
    if st.ncell - idx < st.target - ell:
        return
    r = st.cr[idx]
    c = st.cc[idx]
    s = r + c - 2
    a = st.pi[s]
    b = st.pi[s + 1]
    if a < b and st.pos[a] > st.pos[b]:
        st.pi[s] = b
        st.pi[s + 1] = a
        st.chosen[st.nchosen] = idx
        st.nchosen += 1
        _pd_rec(st, idx + 1, ell + 1, out)
        st.nchosen -= 1
        st.pi[s] = a
        st.pi[s + 1] = b
    _pd_rec(st, idx + 1, ell, out)


def pd_cross_sets(w):
    cdef PdState st
    cdef int n = len(w)
    cdef int i, j, r, c
    if n > MAXN:
        raise ValueError("n too large for compiled kernel")
    st.n = n
    st.target = 0
    for i in range(n):
        st.pi[i] = i + 1
        st.pos[w[i]] = i
        for j in range(i + 1, n):
            if w[i] > w[j]:
                st.target += 1
    st.ncell = 0
    for r in range(1, n):
        for c in range(n - r, 0, -1):
            st.cr[st.ncell] = r
            st.cc[st.ncell] = c
            st.ncell += 1
    st.nchosen = 0
    out = []
    _pd_rec(&st, 0, 0, out)
    return out


cdef struct BpdState:
    int n
    bint reduced
    int target[MAXN + 1]
    int down[MAXN + 1]
    int newdown[MAXN + 1]
    char grid[MAXN * MAXN]


cdef void _bpd_cell(BpdState* st, int r, int c, int h, list out):
    cdef int n = st.n
    cdef int v, t
    cdef bint last = r == n
    cdef int saved[MAXN + 1]
    cdef char* g = st.grid
    cdef char* row = &st.grid[(r - 1) * n]
    if c == 0:
        if h:
            return
        if last:
            out.append(tuple([g[t * n:(t + 1) * n].decode("ascii") for t in range(n)]))
            return
        for t in range(n + 1):
            saved[t] = st.down[t]
            st.down[t] = st.newdown[t]
            st.newdown[t] = 0
        _bpd_cell(st, r + 1, n, r + 1, out)
        for t in range(n + 1):
            st.newdown[t] = st.down[t]
            st.down[t] = saved[t]
        return
    v = st.down[c]
    if v == 0 and h == 0:
        if last:
            return
        row[c - 1] = b"."
        _bpd_cell(st, r, c - 1, 0, out)
    elif v == 0:
        if st.target[h] < c:
            row[c - 1] = b"-"
            _bpd_cell(st, r, c - 1, h, out)
        if st.target[h] == c or (st.target[h] < c and not last):
            row[c - 1] = b"r"
            st.newdown[c] = h
            _bpd_cell(st, r, c - 1, 0, out)
            st.newdown[c] = 0
    elif h == 0:
        if st.target[v] == c or (st.target[v] < c and not last):
            row[c - 1] = b"|"
            st.newdown[c] = v
            _bpd_cell(st, r, c - 1, 0, out)
            st.newdown[c] = 0
        if st.target[v] < c:
            row[c - 1] = b"j"
            _bpd_cell(st, r, c - 1, v, out)
    elif ((h > v or not st.reduced) and st.target[h] < c
          and (st.target[v] == c or (st.target[v] < c and not last))):
        row[c - 1] = b"+"
        st.newdown[c] = v
        _bpd_cell(st, r, c - 1, h, out)
        st.newdown[c] = 0


def bpd_grids(w, bint reduced=True):
    cdef BpdState st
    cdef int n = len(w)
    cdef int t
    if n > MAXN:
        raise ValueError("n too large for compiled kernel")
    st.n = n
    st.reduced = reduced
    for t in range(n + 1):
        st.down[t] = 0
        st.newdown[t] = 0
    st.target[0] = 0
    for t in range(n):
        st.target[t + 1] = w[t]
    out = []
    if n == 0:
        return out
    _bpd_cell(&st, 1, n, 1, out)
    return out
