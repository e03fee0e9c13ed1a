"""Pure-Python series kernels. Reference behaviour for ``_ckernels.pyx``."""


def add_shifted(c, s):
    """c[i] += c[i - s] for i ascending: multiply by 1/(1 - x^s)."""
    for i in range(s, len(c)):
        c[i] += c[i - s]


def sub_shifted(c, j):
    """c[i] -= c[i - j] for i descending: multiply by (1 - x^j)."""
    for i in range(len(c) - 1, j - 1, -1):
        c[i] -= c[i - j]


def apply_factors(c, steps, limit):
    """Multiply in place by prod over steps of (1 - x^((limit+1)s)) / (1 - x^s).

    ``limit=None`` drops the numerator (unbounded multiplicity).
    """
    n = len(c) - 1
    for s in steps:
        add_shifted(c, s)
        if limit is not None:
            j = (limit + 1) * s
            if j <= n:
                sub_shifted(c, j)


def compositions(n, steps):
    """Forward recurrence c(i) = sum of c(i - s) over steps s <= i."""
    c = [0] * (n + 1)
    c[0] = 1
    for i in range(1, n + 1):
        acc = 0
        for s in steps:
            if s > i:
                break
            acc += c[i - s]
        c[i] = acc
    return c
