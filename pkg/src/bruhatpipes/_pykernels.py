"""Pure-Python enumeration kernels.

Mirror of ``_kernels.pyx``; kept deliberately close to it so the two can be
diffed by eye.  Results are lists in a fixed (deterministic) order.
"""

from __future__ import annotations

BACKEND = "python"


def increasing_chain_ends(u, k):
    """All (v, d) with an increasing k-chain of length d from u to v."""
    n = len(u)
    out = []
    stack = [(tuple(u), 0, 0)]
    while stack:
        v, last, d = stack.pop()
        out.append((v, d))
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
                        w = list(v)
                        w[i], w[j] = x, lo
                        stack.append((tuple(w), lo, d + 1))
    return out


def pd_cross_sets(w):
    """Cross positions of every pipedream of w.

    Cells are visited in reading order (rows top to bottom, right to left);
    a cross at (r, c) multiplies the running permutation by s_{r+c-1} on the
    right.  Only steps that stay below w in right weak order are allowed.
    """
    n = len(w)
    pos = [0] * (n + 1)
    for i, x in enumerate(w):
        pos[x] = i
    target = sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])
    cells = [(r, c) for r in range(1, n) for c in range(n - r, 0, -1)]
    ncell = len(cells)
    pi = list(range(1, n + 1))
    chosen = []
    out = []

    def rec(idx, ell):
        if ell == target:
            out.append(tuple(chosen))
            return
        if ncell - idx < target - ell:
            return
        r, c = cells[idx]
        s = r + c - 2
        a, b = pi[s], pi[s + 1]
        if a < b and pos[a] > pos[b]:
            pi[s], pi[s + 1] = b, a
            chosen.append((r, c))
            rec(idx + 1, ell + 1)
            chosen.pop()
            pi[s], pi[s + 1] = a, b
        rec(idx + 1, ell)

    rec(0, 0)
    return out


def bpd_grids(w, reduced=True):
    """Every bumpless pipedream of w as a tuple of row strings.

    Pipe i enters the east edge of row i and leaves the south edge of row n
    in column w(i).  Rows are filled right to left.  With ``reduced=False``
    the crossing-order rule is dropped, so pipes may cross twice.
    """
    n = len(w)
    target = [0] + list(w)
    down = [0] * (n + 1)
    rows = []
    out = []

    def fill_row(r, c, h, row, newdown):
        if c == 0:
            if h:
                return
            if r == n:
                out.append(tuple(rows) + ("".join(reversed(row)),))
                return
            rows.append("".join(reversed(row)))
            saved = down[:]
            down[:] = newdown
            fill_row(r + 1, n, r + 1, [], [0] * (n + 1))
            down[:] = saved
            rows.pop()
            return
        v = down[c]
        last = r == n
        if v == 0 and h == 0:
            if last:
                return
            row.append(".")
            fill_row(r, c - 1, 0, row, newdown)
            row.pop()
        elif v == 0:
            if target[h] < c:
                row.append("-")
                fill_row(r, c - 1, h, row, newdown)
                row.pop()
            if target[h] == c or (target[h] < c and not last):
                row.append("r")
                newdown[c] = h
                fill_row(r, c - 1, 0, row, newdown)
                newdown[c] = 0
                row.pop()
        elif h == 0:
            if target[v] == c or (target[v] < c and not last):
                row.append("|")
                newdown[c] = v
                fill_row(r, c - 1, 0, row, newdown)
                newdown[c] = 0
                row.pop()
            if target[v] < c:
                row.append("j")
                fill_row(r, c - 1, v, row, newdown)
                row.pop()
        elif (h > v or not reduced) and target[h] < c and (target[v] == c or (target[v] < c and not last)):
            row.append("+")
            newdown[c] = v
            fill_row(r, c - 1, h, row, newdown)
            newdown[c] = 0
            row.pop()

    fill_row(1, n, 1, [], [0] * (n + 1))
    return out
