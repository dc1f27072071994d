"""Exact Gaussian elimination over any field exposing ``zero``, ``one`` and ``normalize_row``.

Over finite fields rows are scaled to a unit pivot as usual.  Over rational
function fields elimination is fraction-free (``r_j <- piv*r_j - a*r_i``) and
each updated row is reduced to primitive polynomial entries by the field's
``normalize_row`` hook; pivots are scaled to 1 only at the end.
"""

from __future__ import annotations


def rref(rows, field):
    """Reduced row echelon form. Returns (rows, pivot_columns); zero rows are dropped."""
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    fraction_free = not field.is_finite
    for c in range(ncols):
        if r == len(rows):
            break
        pr = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv_row = rows[r]
        piv = piv_row[c]
        if not fraction_free:
            inv = piv.inverse()
            piv_row = rows[r] = [x * inv for x in piv_row]
        for i in range(len(rows)):
            if i == r or not rows[i][c]:
                continue
            a = rows[i][c]
            if fraction_free:
                rows[i] = field.normalize_row([x * piv - y * a for x, y in zip(rows[i], piv_row)])
            else:
                rows[i] = [x - y * a for x, y in zip(rows[i], piv_row)]
        pivots.append(c)
        r += 1
    rows = rows[:r]
    if fraction_free:
        rows = [[x / row[c] for x in row] for row, c in zip(rows, pivots)]
    return rows, pivots


def rank(rows, field) -> int:
    return len(rref(rows, field)[1])


def nullspace(rows, ncols: int, field) -> list[list]:
    """Basis of {x : rows . x = 0}; each vector has a 1 at its free column."""
    return nullspace_with_free(rows, ncols, field)[0]


def nullspace_with_free(rows, ncols: int, field):
    """Nullspace basis and its free columns; basis vector k is 1 at free[k] and 0 at the other free columns."""
    red, pivots = rref(rows, field)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for row, c in zip(red, pivots):
            v[c] = -row[f]
        basis.append(v)
    return basis, free


def solve(rows, rhs, field):
    """One solution x of rows . x = rhs (free variables zero), or None if inconsistent."""
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, field)
    if pivots and pivots[-1] == ncols:
        return None
    x = [field.zero] * ncols
    for row, c in zip(red, pivots):
        x[c] = row[-1]
    return x


def transpose(rows):
    return [list(col) for col in zip(*rows)]
