"""Small exact dense linear algebra over tower field elements."""

from __future__ import annotations


def rref(rows: list[list], ncols: int):
    """Reduced row echelon form in place; returns the pivot column list."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        piv = None
        for k in range(r, nrows):
            if not rows[k][c].is_zero():
                piv = k
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for k in range(nrows):
            if k != r and not rows[k][c].is_zero():
                f = rows[k][c]
                rows[k] = [a - f * b for a, b in zip(rows[k], rows[r])]
        r += 1
        pivots.append(c)
        if r == nrows:
            break
    return pivots


def nullspace(matrix: list[list], tower) -> list[list]:
    """Basis of the right kernel, from the standard free-variable scheme."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    rows = [list(r) for r in matrix]
    pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [tower.zero()] * ncols
        vec[free] = tower.one()
        for r, pc in enumerate(pivots):
            vec[pc] = -rows[r][free]
        basis.append(vec)
    return basis


def solve_affine(matrix: list[list], rhs: list, tower):
    """Particular solution plus kernel basis for A x = b, or None."""
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    rows = [list(matrix[i]) + [rhs[i]] for i in range(nrows)]
    pivots = rref(rows, ncols)
    for r in range(len(pivots), nrows):
        if not rows[r][ncols].is_zero():
            return None
    x = [tower.zero()] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][ncols]
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [tower.zero()] * ncols
        vec[free] = tower.one()
        for r, pc in enumerate(pivots):
            vec[pc] = -rows[r][free]
        basis.append(vec)
    return x, basis


def kernel_of_linear_form(coeffs: list, tower) -> list[list]:
    """Kernel basis of a single linear form, in free-variable order."""
    return nullspace([list(coeffs)], tower)
